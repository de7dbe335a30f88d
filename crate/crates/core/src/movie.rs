//! Colored motion pictures of surface-links and their cocycle weight.
//!
//! A movie is kept at the level the weight needs: per-component Morse
//! counts and the colored triple points contributed by Reidemeister III
//! moves between stills. Branch points and double-curve extrema carry no
//! weight and only show up in the Morse counts.

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianElement;
use crate::cocycle::{check_lemma_admissible, Cocycle3, Triple};
use crate::error::{Error, Result, ViolationReport};
use crate::quandle::{Quandle, QuandleFile, SymmetricQuandle};

/// A triple point with sign `ε` and color `(bottom, middle, top)` read off
/// the semi-sheets facing the specified region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplePointEvent {
    pub epsilon: i8,
    pub color: Triple,
}

impl TriplePointEvent {
    pub fn new(epsilon: i8, color: Triple) -> Self {
        TriplePointEvent { epsilon, color }
    }
}

/// Labels around a Reidemeister III move with arcs colored `x`, `y`, `z`
/// from bottom to top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct R3Record {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// `x^y`
    pub xy: usize,
    /// `x^z`
    pub xz: usize,
    /// `y^z`
    pub yz: usize,
    /// `(x^y)^z`
    pub xyz: usize,
    pub epsilon: i8,
}

impl R3Record {
    /// The record with every derived label computed from `q`.
    pub fn derive(q: &Quandle, epsilon: i8, [x, y, z]: Triple) -> Self {
        R3Record {
            x,
            y,
            z,
            xy: q.op(x, y),
            xz: q.op(x, z),
            yz: q.op(y, z),
            xyz: q.op(q.op(x, y), z),
            epsilon,
        }
    }
}

/// Checks each derived label of `rec` against the operation table.
pub fn verify_r3(rec: &R3Record, q: &Quandle) -> Result<()> {
    let n = q.order();
    if [rec.x, rec.y, rec.z, rec.xy, rec.xz, rec.yz, rec.xyz]
        .iter()
        .any(|&e| e >= n)
    {
        return Err(Error::Malformed(format!(
            "R3 record {rec:?} has labels outside 0..{n}"
        )));
    }
    let expected = R3Record::derive(q, rec.epsilon, [rec.x, rec.y, rec.z]);
    let mut report = ViolationReport::new("Reidemeister III labels");
    let tuple = [rec.x, rec.y, rec.z];
    for (label, got, want) in [
        ("x^y", rec.xy, expected.xy),
        ("x^z", rec.xz, expected.xz),
        ("y^z", rec.yz, expected.yz),
        ("(x^y)^z", rec.xyz, expected.xyz),
    ] {
        if got != want {
            report.push(
                label,
                &tuple,
                format!("{label} recorded as {got}, table gives {want}"),
            );
        }
    }
    report.into_result(())
}

/// Morse data of one connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub name: String,
    pub orientable: bool,
    pub births: u64,
    pub deaths: u64,
    pub saddles: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Topology {
    pub euler: i64,
    pub genus: u64,
}

/// Euler characteristic `births + deaths − saddles` and the genus it forces.
///
/// Orientable genus is `(2 − χ)/2`; non-orientable genus is `2 − χ`.
pub fn euler_and_genus(c: &ComponentSummary) -> Result<Topology> {
    if c.births == 0 || c.deaths == 0 {
        return Err(Error::Inconsistent(format!(
            "component {} needs at least one birth and one death",
            c.name
        )));
    }
    let to_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::Overflow("Morse counts"));
    let euler = to_i64(c.births)?
        .checked_add(to_i64(c.deaths)?)
        .and_then(|v| v.checked_sub(c.saddles as i64))
        .ok_or(Error::Overflow("Euler characteristic"))?;
    if euler > 2 {
        return Err(Error::Inconsistent(format!(
            "component {} has Euler characteristic {euler} > 2",
            c.name
        )));
    }
    let genus = if c.orientable {
        if euler % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "orientable component {} has odd Euler characteristic {euler}",
                c.name
            )));
        }
        (2 - euler) / 2
    } else {
        if euler == 2 {
            return Err(Error::Inconsistent(format!(
                "non-orientable component {} has Euler characteristic 2",
                c.name
            )));
        }
        2 - euler
    };
    Ok(Topology {
        euler,
        genus: genus as u64,
    })
}

/// A colored motion picture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Movie {
    sq: SymmetricQuandle,
    components: Vec<ComponentSummary>,
    triples: Vec<TriplePointEvent>,
    r3_details: Option<Vec<R3Record>>,
}

impl Movie {
    pub fn new(
        sq: SymmetricQuandle,
        components: Vec<ComponentSummary>,
        triples: Vec<TriplePointEvent>,
        r3_details: Option<Vec<R3Record>>,
    ) -> Result<Self> {
        let n = sq.order();
        for (i, t) in triples.iter().enumerate() {
            if t.epsilon != 1 && t.epsilon != -1 {
                return Err(Error::Malformed(format!(
                    "triples[{i}] has sign {}, expected ±1",
                    t.epsilon
                )));
            }
            if t.color.iter().any(|&x| x >= n) {
                return Err(Error::Malformed(format!(
                    "triples[{i}] color {:?} is outside 0..{n}",
                    t.color
                )));
            }
        }
        if let Some(details) = &r3_details {
            if details.len() != triples.len() {
                return Err(Error::Malformed(format!(
                    "{} R3 records for {} triple points",
                    details.len(),
                    triples.len()
                )));
            }
            for (i, (rec, t)) in details.iter().zip(&triples).enumerate() {
                if [rec.x, rec.y, rec.z] != t.color || rec.epsilon != t.epsilon {
                    return Err(Error::Malformed(format!(
                        "r3_details[{i}] does not match triples[{i}]"
                    )));
                }
                verify_r3(rec, sq.quandle())?;
            }
        }
        Ok(Movie {
            sq,
            components,
            triples,
            r3_details,
        })
    }

    pub fn symmetric_quandle(&self) -> &SymmetricQuandle {
        &self.sq
    }

    pub fn components(&self) -> &[ComponentSummary] {
        &self.components
    }

    pub fn triples(&self) -> &[TriplePointEvent] {
        &self.triples
    }

    pub fn r3_details(&self) -> Option<&[R3Record]> {
        self.r3_details.as_deref()
    }

    /// Every triple point of `other` appended after those of `self`.
    pub fn concat_triples(&self, other: &Movie) -> Result<Movie> {
        if self.sq != other.sq {
            return Err(Error::QuandleMismatch);
        }
        let mut triples = self.triples.clone();
        triples.extend_from_slice(&other.triples);
        let r3_details = match (&self.r3_details, &other.r3_details) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Movie::new(
            self.sq.clone(),
            self.components.clone(),
            triples,
            r3_details,
        )
    }
}

/// `Σ_τ ε_τ · φ(x_τ, y_τ, z_τ)`.
pub fn weight(movie: &Movie, phi: &Cocycle3) -> Result<AbelianElement> {
    if movie.sq != *phi.symmetric_quandle() {
        return Err(Error::QuandleMismatch);
    }
    movie
        .triples
        .iter()
        .try_fold(AbelianElement::zero(phi.signature()), |acc, t| {
            acc.add(&phi.value(t.color).signed(t.epsilon)?)
        })
}

/// Result of applying the triple-point lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBound {
    Bound(u64),
    /// Some value of the cocycle is not `0`, `p_i` or `±q_j`.
    Inapplicable,
}

impl LowerBound {
    pub fn value(&self) -> Option<u64> {
        match self {
            LowerBound::Bound(v) => Some(*v),
            LowerBound::Inapplicable => None,
        }
    }
}

/// `Σ αᵢ + Σ |βⱼ|` of a weight when `phi` only takes values `0`, `p_i`, `±q_j`.
pub fn lower_bound(w: &AbelianElement, phi: &Cocycle3) -> Result<LowerBound> {
    w.check_signature(phi.signature())?;
    if check_lemma_admissible(phi).admissible {
        Ok(LowerBound::Bound(w.bound_norm()?))
    } else {
        Ok(LowerBound::Inapplicable)
    }
}

/// Reference to the symmetric quandle of a movie file: a path or asset
/// name, or the quandle written inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuandleRef {
    Named(String),
    Inline(QuandleFile),
}

/// On-disk movie.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovieFile {
    pub quandle: QuandleRef,
    pub components: Vec<ComponentSummary>,
    pub triples: Vec<TriplePointEvent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r3_details: Option<Vec<R3Record>>,
}

impl MovieFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("movie serializes")
    }

    /// Builds the movie, resolving a named quandle with `resolve`.
    pub fn movie(&self, resolve: impl FnOnce(&str) -> Result<SymmetricQuandle>) -> Result<Movie> {
        let sq = match &self.quandle {
            QuandleRef::Named(name) => resolve(name)?,
            QuandleRef::Inline(file) => file.symmetric()?,
        };
        Movie::new(
            sq,
            self.components.clone(),
            self.triples.clone(),
            self.r3_details.clone(),
        )
    }

    pub fn from_movie(movie: &Movie, quandle: QuandleRef) -> Self {
        MovieFile {
            quandle,
            components: movie.components.clone(),
            triples: movie.triples.clone(),
            r3_details: movie.r3_details.clone(),
        }
    }
}

//! The `(k, m)` family of `(P₃, ρ)`-colored surface-links whose triple
//! point number equals `Σ g′ᵢ`.
//!
//! The link has a component `G` (orientable, genus `k + m`), components
//! `F₁ … F_k` (orientable, genus `gᵢ`) and `F′₁ … F′_m` (non-orientable,
//! even genus `g′ᵢ`). Its motion picture contains `Σ g′ᵢ/2` negative triple
//! points colored `(2,0,2)` followed by `Σ g′ᵢ/2` positive ones colored
//! `(1,0,2)`, each with θ-weight `0⊕1`.

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianElement;
use crate::cocycle::make_theta;
use crate::error::{Error, Result};
use crate::movie::{
    euler_and_genus, lower_bound, weight, ComponentSummary, LowerBound, Movie, R3Record,
    TriplePointEvent,
};
use crate::quandle::SymmetricQuandle;

const NEGATIVE_COLOR: [usize; 3] = [2, 0, 2];
const POSITIVE_COLOR: [usize; 3] = [1, 0, 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub k: usize,
    pub m: usize,
    /// Genera of the orientable components `Fᵢ`.
    pub g: Vec<u64>,
    /// Genera of the non-orientable components `F′ᵢ`; even and at least 2.
    pub gprime: Vec<u64>,
}

impl FamilyParams {
    pub fn new(k: usize, m: usize, g: Vec<u64>, gprime: Vec<u64>) -> Result<Self> {
        let p = FamilyParams { k, m, g, gprime };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.g.len() != self.k {
            return Err(Error::InvalidParams(format!(
                "k = {} but {} orientable genera were given",
                self.k,
                self.g.len()
            )));
        }
        if self.gprime.len() != self.m {
            return Err(Error::InvalidParams(format!(
                "m = {} but {} non-orientable genera were given",
                self.m,
                self.gprime.len()
            )));
        }
        if let Some(bad) = self.gprime.iter().find(|&&g| g < 2 || g % 2 != 0) {
            return Err(Error::InvalidParams(format!(
                "g' must be even and ≥ 2, got {bad}"
            )));
        }
        Ok(())
    }

    /// `Σ g′ᵢ`.
    pub fn gprime_sum(&self) -> u64 {
        self.gprime.iter().sum()
    }
}

/// The colored motion picture of the family member with parameters `p`.
pub fn generate_family(p: &FamilyParams) -> Result<Movie> {
    p.validate()?;
    let sq = SymmetricQuandle::p3();
    let join = 2 * (p.k + p.m) as u64;

    let mut components = vec![ComponentSummary {
        name: "G".into(),
        orientable: true,
        births: 1,
        deaths: 1,
        saddles: join,
    }];
    // gᵢ saddles in still (iv), gᵢ more in still (ix), one maximum in (xi).
    for (i, &g) in p.g.iter().enumerate() {
        components.push(ComponentSummary {
            name: format!("F{}", i + 1),
            orientable: true,
            births: 1,
            deaths: 1,
            saddles: 2 * g,
        });
    }
    // g′/2 saddles in (iv), g′/2 − 1 in (ix), g′/2 in (xii); g′/2 maxima.
    for (i, &g) in p.gprime.iter().enumerate() {
        let half = g / 2;
        components.push(ComponentSummary {
            name: format!("F'{}", i + 1),
            orientable: false,
            births: 1,
            deaths: half,
            saddles: half + (half - 1) + half,
        });
    }

    let half_sum = (p.gprime_sum() / 2) as usize;
    let triples: Vec<TriplePointEvent> =
        std::iter::repeat_n(TriplePointEvent::new(-1, NEGATIVE_COLOR), half_sum)
            .chain(std::iter::repeat_n(
                TriplePointEvent::new(1, POSITIVE_COLOR),
                half_sum,
            ))
            .collect();
    let details = triples
        .iter()
        .map(|t| R3Record::derive(sq.quandle(), t.epsilon, t.color))
        .collect();
    Movie::new(sq, components, triples, Some(details))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub name: String,
    pub orientable: bool,
    pub births: u64,
    pub deaths: u64,
    pub saddles: u64,
    pub euler: i64,
    pub genus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub params: FamilyParams,
    pub components: Vec<ComponentRow>,
    pub triple_count: u64,
    pub weight: AbelianElement,
    pub lower_bound: u64,
    /// The triple point number: the lower bound is attained by the
    /// generated diagram.
    pub triple_point_number: u64,
    /// Taken from the construction, not computed.
    pub non_split: bool,
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!(
            "{what}: got {got:?}, expected {want:?}"
        )))
    }
}

/// Generates the family member, weighs it with θ, and checks that the
/// lower bound meets the triple count and every genus matches its parameter.
pub fn theorem1_report(p: &FamilyParams) -> Result<Theorem1Report> {
    let movie = generate_family(p)?;
    let theta = make_theta();
    let w = weight(&movie, &theta)?;
    let bound = match lower_bound(&w, &theta)? {
        LowerBound::Bound(b) => b,
        LowerBound::Inapplicable => {
            return Err(Error::Inconsistent("θ failed the value hypothesis".into()))
        }
    };
    let triple_count = movie.triples().len() as u64;
    expect_eq("lower bound vs triple count", bound, triple_count)?;

    let expected_genus = std::iter::once((p.k + p.m) as u64)
        .chain(p.g.iter().copied())
        .chain(p.gprime.iter().copied());
    let mut components = Vec::with_capacity(movie.components().len());
    for (c, want) in movie.components().iter().zip(expected_genus) {
        let topo = euler_and_genus(c)?;
        expect_eq(&format!("genus of {}", c.name), topo.genus, want)?;
        components.push(ComponentRow {
            name: c.name.clone(),
            orientable: c.orientable,
            births: c.births,
            deaths: c.deaths,
            saddles: c.saddles,
            euler: topo.euler,
            genus: topo.genus,
        });
    }

    Ok(Theorem1Report {
        params: p.clone(),
        components,
        triple_count,
        weight: w,
        lower_bound: bound,
        triple_point_number: bound,
        non_split: true,
    })
}

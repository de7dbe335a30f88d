//! Command results. Each serializes to the machine JSON format and renders
//! as plain text for humans.

use std::fmt::Write;

use qf_core::cocycle::Triple;
use qf_core::movie::LowerBound;
use qf_core::{AbelianElement, AbelianSignature, Coloring, Theorem1Report, ViolationReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Report {
    QuandleVerify(QuandleVerify),
    Involutions(Involutions),
    CocycleVerify(CocycleVerify),
    CocycleSolve(CocycleSolve),
    ColorCount(ColorCount),
    ColorEnum(ColorEnum),
    Weight(WeightReport),
    Family(Theorem1Report),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleVerify {
    pub order: usize,
    pub quandle_valid: bool,
    /// The involution checked; the identity when the file gives none.
    pub rho: Vec<usize>,
    pub rho_given: bool,
    /// `None` when the table already failed the quandle axioms.
    pub involution_valid: Option<bool>,
    pub violation: Option<ViolationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Involutions {
    pub order: usize,
    pub involutions: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleValue<V> {
    pub triple: Triple,
    pub value: V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleVerify {
    pub signature: AbelianSignature,
    pub valid: bool,
    /// Whether every value is `0`, a `Z2` generator or `±` a `Z` generator.
    pub admissible: Option<bool>,
    pub offenders: Vec<TripleValue<AbelianElement>>,
    pub violation: Option<ViolationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleSolve {
    pub order: usize,
    pub p: u32,
    pub unknowns: usize,
    pub rank: usize,
    pub dimension: usize,
    pub basis: Vec<Vec<TripleValue<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorCount {
    pub count: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorEnum {
    pub count: u128,
    pub colorings: Vec<Coloring>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub triple_count: usize,
    pub weight: AbelianElement,
    pub lower_bound: LowerBound,
}

fn triple(t: &Triple) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

impl Report {
    /// False when the input failed a mathematical check.
    pub fn success(&self) -> bool {
        match self {
            Report::QuandleVerify(r) => r.quandle_valid && r.involution_valid == Some(true),
            Report::CocycleVerify(r) => r.valid,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        match self {
            Report::QuandleVerify(r) => {
                if !r.quandle_valid {
                    out.push_str("invalid quandle\n");
                } else {
                    let which = if r.rho_given { "" } else { " (identity)" };
                    let verdict = if r.involution_valid == Some(true) {
                        "valid"
                    } else {
                        "invalid"
                    };
                    let _ = writeln!(out, "valid quandle; good involution{which} {verdict}");
                }
                if let Some(v) = &r.violation {
                    out.push_str(&v.to_string());
                }
            }
            Report::Involutions(r) => {
                let _ = writeln!(
                    out,
                    "{} good involution(s) of a quandle of order {}",
                    r.involutions.len(),
                    r.order
                );
                for rho in &r.involutions {
                    let _ = writeln!(out, "{rho:?}");
                }
            }
            Report::CocycleVerify(r) => {
                if let Some(v) = &r.violation {
                    out.push_str("not a symmetric 3-cocycle\n");
                    out.push_str(&v.to_string());
                } else {
                    let yes = if r.admissible == Some(true) {
                        "yes"
                    } else {
                        "no"
                    };
                    let _ = writeln!(out, "valid symmetric 3-cocycle; Lemma-admissible: {yes}");
                    for o in &r.offenders {
                        let _ = writeln!(out, "  value {} at {}", o.value, triple(&o.triple));
                    }
                }
            }
            Report::CocycleSolve(r) => {
                let _ = writeln!(
                    out,
                    "dimension {} over Z_{} ({} unknowns, rank {})",
                    r.dimension, r.p, r.unknowns, r.rank
                );
                for (i, v) in r.basis.iter().enumerate() {
                    let terms: Vec<String> = v
                        .iter()
                        .map(|e| format!("{}={}", triple(&e.triple), e.value))
                        .collect();
                    let _ = writeln!(out, "v{}: {}", i + 1, terms.join(" "));
                }
            }
            Report::ColorCount(r) => {
                let _ = writeln!(out, "{}", r.count);
            }
            Report::ColorEnum(r) => {
                let _ = writeln!(out, "{} coloring(s)", r.count);
                for c in &r.colorings {
                    if c.crossingless_colors.is_empty() {
                        let _ = writeln!(out, "{:?}", c.colors);
                    } else {
                        let _ = writeln!(out, "{:?} circles {:?}", c.colors, c.crossingless_colors);
                    }
                }
            }
            Report::Weight(r) => {
                let bound = match &r.lower_bound {
                    LowerBound::Bound(b) => b.to_string(),
                    LowerBound::Inapplicable => "inapplicable".into(),
                };
                let _ = writeln!(
                    out,
                    "weight = {}; lower bound = {bound} ({} triple points)",
                    r.weight, r.triple_count
                );
            }
            Report::Family(r) => {
                let _ = writeln!(
                    out,
                    "weight = {}; t(F) = {}",
                    r.weight, r.triple_point_number
                );
                let _ = writeln!(
                    out,
                    "{} triple points; lower bound {}; non-split by construction",
                    r.triple_count, r.lower_bound
                );
                for c in &r.components {
                    let kind = if c.orientable {
                        "orientable"
                    } else {
                        "non-orientable"
                    };
                    let _ = writeln!(
                        out,
                        "{} genus {} ({kind}; euler {}; births {}, saddles {}, deaths {})",
                        c.name, c.genus, c.euler, c.births, c.saddles, c.deaths
                    );
                }
            }
        }
        out
    }
}

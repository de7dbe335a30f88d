//! Classical link diagrams as semi-arc data.
//!
//! Every component is cut at each crossing it passes through, over or
//! under, so the pieces (semi-arcs) are the edges of the diagram's 4-valent
//! graph. A component is the cyclic sequence of its semi-arcs in the
//! direction of its orientation, and each crossing records which two
//! consecutive semi-arcs pass over and which two pass under.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// Incoming and outgoing over semi-arcs.
    pub over: [usize; 2],
    pub under_in: usize,
    pub under_out: usize,
    /// +1 for a right-handed crossing, −1 for a left-handed one.
    pub sign: i8,
}

/// A validated link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    semi_arcs: usize,
    components: Vec<Vec<usize>>,
    crossings: Vec<Crossing>,
    crossingless: usize,
}

/// JSON form of a diagram:
/// `{"semi_arcs": 6, "components": [[0,1,2,3,4,5]], "crossings": [...], "crossingless": 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub semi_arcs: usize,
    pub components: Vec<Vec<usize>>,
    pub crossings: Vec<Crossing>,
    #[serde(default)]
    pub crossingless: usize,
}

/// Parses and validates the JSON diagram format.
pub fn parse_diagram(text: &str) -> Result<LinkDiagram> {
    let file: DiagramFile = serde_json::from_str(text)?;
    LinkDiagram::new(file)
}

impl LinkDiagram {
    pub fn new(file: DiagramFile) -> Result<Self> {
        let DiagramFile {
            semi_arcs,
            components,
            crossings,
            crossingless,
        } = file;
        let in_range = |id: usize, location: String| {
            if id < semi_arcs {
                Ok(())
            } else {
                Err(Error::parse(
                    location,
                    format!("semi-arc {id} is undefined (diagram has {semi_arcs})"),
                ))
            }
        };

        // Position of every semi-arc in the component cycles.
        let mut slot: Vec<Option<(usize, usize)>> = vec![None; semi_arcs];
        for (c, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(Error::parse(
                    format!("components[{c}]"),
                    "component has no semi-arcs; count it under \"crossingless\"",
                ));
            }
            for (j, &id) in comp.iter().enumerate() {
                in_range(id, format!("components[{c}][{j}]"))?;
                if let Some((c0, j0)) = slot[id] {
                    return Err(Error::parse(
                        format!("components[{c}][{j}]"),
                        format!("duplicate semi-arc {id}, already at components[{c0}][{j0}]"),
                    ));
                }
                slot[id] = Some((c, j));
            }
        }
        if let Some(id) = slot.iter().position(Option::is_none) {
            return Err(Error::parse(
                "components",
                format!("dangling semi-arc {id} belongs to no component"),
            ));
        }
        let next = |id: usize| {
            let (c, j) = slot[id].expect("every semi-arc has a slot");
            let comp = &components[c];
            comp[(j + 1) % comp.len()]
        };

        // Each semi-arc must end at exactly one crossing.
        let mut ends_at: Vec<Option<usize>> = vec![None; semi_arcs];
        for (k, x) in crossings.iter().enumerate() {
            let loc = |field: &str| format!("crossings[{k}].{field}");
            in_range(x.over[0], loc("over[0]"))?;
            in_range(x.over[1], loc("over[1]"))?;
            in_range(x.under_in, loc("under_in"))?;
            in_range(x.under_out, loc("under_out"))?;
            if x.sign != 1 && x.sign != -1 {
                return Err(Error::parse(
                    loc("sign"),
                    format!("sign {} is not ±1", x.sign),
                ));
            }
            if next(x.over[0]) != x.over[1] {
                return Err(Error::parse(
                    loc("over"),
                    format!(
                        "non-adjacent over pair: {} is followed by {}, not {}",
                        x.over[0],
                        next(x.over[0]),
                        x.over[1]
                    ),
                ));
            }
            if next(x.under_in) != x.under_out {
                return Err(Error::parse(
                    loc("under_in"),
                    format!(
                        "non-adjacent under pair: {} is followed by {}, not {}",
                        x.under_in,
                        next(x.under_in),
                        x.under_out
                    ),
                ));
            }
            for (field, id) in [("over[0]", x.over[0]), ("under_in", x.under_in)] {
                if let Some(k0) = ends_at[id] {
                    return Err(Error::parse(
                        loc(field),
                        format!("semi-arc {id} already ends at crossings[{k0}]"),
                    ));
                }
                ends_at[id] = Some(k);
            }
        }
        if let Some(id) = ends_at.iter().position(Option::is_none) {
            return Err(Error::parse(
                "crossings",
                format!("dangling semi-arc {id} does not end at any crossing"),
            ));
        }

        Ok(LinkDiagram {
            semi_arcs,
            components,
            crossings,
            crossingless,
        })
    }

    /// A diagram with `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            semi_arcs: 0,
            components: Vec::new(),
            crossings: Vec::new(),
            crossingless: n,
        }
    }

    /// The closure of a braid on `strands` strands.
    ///
    /// Letters are `±i` for the generator `σᵢ^{±1}` crossing strands in
    /// positions `i` and `i+1` (1-based). For `σᵢ` the strand coming from
    /// position `i+1` passes over and the crossing is positive.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        let mut cur: Vec<usize> = (0..strands).collect();
        let mut next_edge = strands;
        let mut raw = Vec::with_capacity(word.len());
        for (k, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(Error::InvalidParams(format!(
                    "braid letter {g} at position {k} is not a generator on {strands} strands"
                )));
            }
            let i = i - 1;
            let (a, b) = (cur[i], cur[i + 1]);
            let (left, right) = (next_edge, next_edge + 1);
            next_edge += 2;
            raw.push(if g > 0 {
                Crossing {
                    over: [b, left],
                    under_in: a,
                    under_out: right,
                    sign: 1,
                }
            } else {
                Crossing {
                    over: [a, right],
                    under_in: b,
                    under_out: left,
                    sign: -1,
                }
            });
            cur[i] = left;
            cur[i + 1] = right;
        }

        // Close up: the edge leaving the bottom at position j is the edge
        // entering the top at position j.
        let mut alias: Vec<usize> = (0..next_edge).collect();
        let mut crossingless = 0;
        for (j, &e) in cur.iter().enumerate() {
            if e == j {
                crossingless += 1;
            } else {
                alias[e] = j;
            }
        }
        let rename = |e: usize| alias[e];
        let crossings: Vec<Crossing> = raw
            .into_iter()
            .map(|x| Crossing {
                over: [rename(x.over[0]), rename(x.over[1])],
                under_in: rename(x.under_in),
                under_out: rename(x.under_out),
                sign: x.sign,
            })
            .collect();

        let mut succ = vec![usize::MAX; next_edge];
        for x in &crossings {
            succ[x.over[0]] = x.over[1];
            succ[x.under_in] = x.under_out;
        }
        let mut new_id = vec![usize::MAX; next_edge];
        let mut components = Vec::new();
        let mut count = 0;
        for start in 0..next_edge {
            if succ[start] == usize::MAX || new_id[start] != usize::MAX {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            while new_id[e] == usize::MAX {
                new_id[e] = count;
                comp.push(count);
                count += 1;
                e = succ[e];
            }
            components.push(comp);
        }
        let crossings = crossings
            .into_iter()
            .map(|x| Crossing {
                over: [new_id[x.over[0]], new_id[x.over[1]]],
                under_in: new_id[x.under_in],
                under_out: new_id[x.under_out],
                sign: x.sign,
            })
            .collect();
        LinkDiagram::new(DiagramFile {
            semi_arcs: count,
            components,
            crossings,
            crossingless,
        })
    }

    pub fn semi_arc_count(&self) -> usize {
        self.semi_arcs
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossingless(&self) -> usize {
        self.crossingless
    }

    /// Components with semi-arcs plus crossingless circles.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.crossingless
    }

    /// The same diagram with component `c` traversed backwards.
    ///
    /// Semi-arc ids are kept. Crossings between the reversed component and a
    /// different one change sign.
    pub fn reverse_component(&self, c: usize) -> Self {
        let mut member = vec![false; self.semi_arcs];
        for &id in &self.components[c] {
            member[id] = true;
        }
        let mut components = self.components.clone();
        let comp = &mut components[c];
        comp[1..].reverse();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let over_rev = member[x.over[0]];
                let under_rev = member[x.under_in];
                let mut y = *x;
                if over_rev {
                    y.over = [x.over[1], x.over[0]];
                }
                if under_rev {
                    y.under_in = x.under_out;
                    y.under_out = x.under_in;
                }
                if over_rev != under_rev {
                    y.sign = -x.sign;
                }
                y
            })
            .collect();
        LinkDiagram {
            semi_arcs: self.semi_arcs,
            components,
            crossings,
            crossingless: self.crossingless,
        }
    }

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            semi_arcs: self.semi_arcs,
            components: self.components.clone(),
            crossings: self.crossings.clone(),
            crossingless: self.crossingless,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("diagram serializes")
    }
}

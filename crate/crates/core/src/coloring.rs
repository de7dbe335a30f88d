//! `(X, ρ)`-colorings of link diagrams.
//!
//! A coloring assigns to each semi-arc a normal orientation and an element
//! of `X`, up to basic inversions (flip the normal, replace `x` by `ρ(x)`).
//! Every class has exactly one member in which each semi-arc carries its
//! reference normal, the tangent rotated by +90°, so colorings are stored
//! as plain color arrays.
//!
//! With reference normals the two over semi-arcs at a crossing are coherent
//! and must carry the same color `y`. The under semi-arcs are coherent too,
//! and the over normal points from `under_in` to `under_out` at a positive
//! crossing and the other way at a negative one, which gives
//!
//! * positive: `x_out = x_in^y`
//! * negative: `x_out = x_in^{ρ(y)}` (equivalently `x_out^y = x_in`)
//!
//! A crossingless component has no semi-arcs and is colored by one ρ-orbit
//! representative.

use serde::{Deserialize, Serialize};

use crate::diagram::{Crossing, LinkDiagram};
use crate::error::{Error, Result, ViolationReport};
use crate::quandle::SymmetricQuandle;

/// Canonical representative of a coloring class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coloring {
    /// Color of each semi-arc under its reference normal.
    pub colors: Vec<usize>,
    /// Smallest element of the chosen ρ-orbit, per crossingless component.
    pub crossingless_colors: Vec<usize>,
}

const UNSET: usize = usize::MAX;

#[inline]
fn under_action(sq: &SymmetricQuandle, x: &Crossing, y: usize) -> usize {
    if x.sign > 0 {
        y
    } else {
        sq.rho(y)
    }
}

/// Checks the crossing conditions for a semi-arc color array.
pub fn verify_coloring(d: &LinkDiagram, sq: &SymmetricQuandle, colors: &[usize]) -> Result<()> {
    let n = sq.order();
    if colors.len() != d.semi_arc_count() {
        return Err(Error::Malformed(format!(
            "{} colors for {} semi-arcs",
            colors.len(),
            d.semi_arc_count()
        )));
    }
    if let Some(c) = colors.iter().find(|&&c| c >= n) {
        return Err(Error::Malformed(format!("color {c} is outside 0..{n}")));
    }
    let mut report = ViolationReport::new("coloring conditions");
    for (k, x) in d.crossings().iter().enumerate() {
        let (y0, y1) = (colors[x.over[0]], colors[x.over[1]]);
        if y0 != y1 {
            report.push(
                "over",
                &[k],
                format!(
                    "over semi-arcs {} and {} carry {y0} and {y1}",
                    x.over[0], x.over[1]
                ),
            );
        }
        let expected = sq.op(colors[x.under_in], under_action(sq, x, y0));
        if colors[x.under_out] != expected {
            report.push(
                "under",
                &[k],
                format!(
                    "under semi-arc {} carries {}, expected {expected}",
                    x.under_out, colors[x.under_out]
                ),
            );
        }
    }
    report.into_result(())
}

/// [`verify_coloring`] plus the crossingless part of a [`Coloring`].
pub fn verify_full_coloring(
    d: &LinkDiagram,
    sq: &SymmetricQuandle,
    coloring: &Coloring,
) -> Result<()> {
    if coloring.crossingless_colors.len() != d.crossingless() {
        return Err(Error::Malformed(format!(
            "{} crossingless colors for {} crossingless components",
            coloring.crossingless_colors.len(),
            d.crossingless()
        )));
    }
    let mut report = ViolationReport::new("crossingless colors");
    for (i, &c) in coloring.crossingless_colors.iter().enumerate() {
        if c >= sq.order() || sq.involution().orbit_rep(c) != c {
            report.push(
                "orbit",
                &[i],
                format!("{c} is not a ρ-orbit representative"),
            );
        }
    }
    report.into_result(())?;
    verify_coloring(d, sq, &coloring.colors)
}

struct Search<'a> {
    d: &'a LinkDiagram,
    sq: &'a SymmetricQuandle,
    colors: Vec<usize>,
    trail: Vec<usize>,
    // Over semi-arcs first, in crossing order, then the rest; branching
    // picks the first unset one.
    branch_order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(d: &'a LinkDiagram, sq: &'a SymmetricQuandle) -> Self {
        let mut branch_order = Vec::with_capacity(d.semi_arc_count());
        let mut queued = vec![false; d.semi_arc_count()];
        let overs = d.crossings().iter().map(|x| x.over[0]);
        for id in overs.chain(0..d.semi_arc_count()) {
            if !std::mem::replace(&mut queued[id], true) {
                branch_order.push(id);
            }
        }
        Search {
            d,
            sq,
            colors: vec![UNSET; d.semi_arc_count()],
            trail: Vec::new(),
            branch_order,
        }
    }

    fn set(&mut self, id: usize, c: usize) {
        self.colors[id] = c;
        self.trail.push(id);
    }

    fn undo(&mut self, mark: usize) {
        for id in self.trail.drain(mark..) {
            self.colors[id] = UNSET;
        }
    }

    /// Propagates the crossing equations to a fixpoint; false on conflict.
    fn propagate(&mut self) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for x in self.d.crossings() {
                let (a, b) = (x.over[0], x.over[1]);
                match (self.colors[a], self.colors[b]) {
                    (UNSET, UNSET) => {}
                    (ca, UNSET) => {
                        self.set(b, ca);
                        changed = true;
                    }
                    (UNSET, cb) => {
                        self.set(a, cb);
                        changed = true;
                    }
                    (ca, cb) if ca != cb => return false,
                    _ => {}
                }
                let y = self.colors[a];
                if y == UNSET {
                    continue;
                }
                let act = under_action(self.sq, x, y);
                match (self.colors[x.under_in], self.colors[x.under_out]) {
                    (UNSET, UNSET) => {}
                    (cin, UNSET) => {
                        self.set(x.under_out, self.sq.op(cin, act));
                        changed = true;
                    }
                    (UNSET, cout) => {
                        self.set(x.under_in, self.sq.quandle().inverse_op(cout, act));
                        changed = true;
                    }
                    (cin, cout) => {
                        if self.sq.op(cin, act) != cout {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, found: &mut dyn FnMut(&[usize])) {
        let mark = self.trail.len();
        if self.propagate() {
            match self
                .branch_order
                .iter()
                .copied()
                .find(|&id| self.colors[id] == UNSET)
            {
                None => found(&self.colors),
                Some(id) => {
                    for c in 0..self.sq.order() {
                        let inner = self.trail.len();
                        self.set(id, c);
                        self.run(found);
                        self.undo(inner);
                    }
                }
            }
        }
        self.undo(mark);
    }
}

fn semi_arc_solutions(d: &LinkDiagram, sq: &SymmetricQuandle, found: &mut dyn FnMut(&[usize])) {
    Search::new(d, sq).run(found);
}

/// All colorings, ordered lexicographically by `(colors, crossingless_colors)`.
pub fn enumerate_colorings(d: &LinkDiagram, sq: &SymmetricQuandle) -> Vec<Coloring> {
    let mut solutions = Vec::new();
    semi_arc_solutions(d, sq, &mut |c| solutions.push(c.to_vec()));
    solutions.sort();

    let reps: Vec<usize> = sq.involution().orbits().iter().map(|o| o[0]).collect();
    let mut tails: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..d.crossingless() {
        tails = tails
            .into_iter()
            .flat_map(|t| {
                reps.iter().map(move |&r| {
                    let mut t = t.clone();
                    t.push(r);
                    t
                })
            })
            .collect();
    }

    solutions
        .into_iter()
        .flat_map(|colors| {
            tails.iter().map(move |tail| Coloring {
                colors: colors.clone(),
                crossingless_colors: tail.clone(),
            })
        })
        .collect()
}

/// Number of colorings, without building the list.
pub fn count_colorings(d: &LinkDiagram, sq: &SymmetricQuandle) -> u128 {
    let mut semi = 0u128;
    semi_arc_solutions(d, sq, &mut |_| semi += 1);
    let orbits = sq.involution().orbits().len() as u128;
    (0..d.crossingless()).fold(semi, |acc, _| acc * orbits)
}

//! Independent oracles shared by the integration tests.
//!
//! None of these go through the library's search or elimination code; they
//! only read raw diagram data and quandle tables.

#![allow(dead_code)]

use std::collections::HashSet;

use qf_core::assets;
use qf_core::{parse_diagram, LinkDiagram, Quandle, SymmetricQuandle};

/// Bundled diagrams with their asset names.
pub fn bundled_diagrams() -> Vec<(&'static str, LinkDiagram)> {
    [
        "unknot",
        "trefoil",
        "figure_eight",
        "hopf",
        "trefoil_r1",
        "hopf_r2",
        "r3_left",
        "r3_right",
    ]
    .into_iter()
    .map(|name| (name, parse_diagram(assets::require(name).unwrap()).unwrap()))
    .collect()
}

/// Alexander quandle on GF(4) with `x^y = ωx + (1 + ω)y`; the tetrahedral quandle.
pub fn tetrahedral() -> Quandle {
    // GF(4) = {0, 1, ω, ω²} encoded as 0..4 with ω = 2, ω² = 3.
    let add = |a: usize, b: usize| a ^ b;
    let mul = |a: usize, b: usize| -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        // Discrete logs base ω: 1 -> 0, ω -> 1, ω² -> 2.
        let log = |v: usize| [0, 0, 1, 2][v];
        let exp = [1, 2, 3];
        exp[(log(a) + log(b)) % 3]
    };
    let table = (0..4)
        .map(|x| (0..4).map(|y| add(mul(2, x), mul(3, y))).collect())
        .collect();
    Quandle::new(table).unwrap()
}

/// Every quandle of order ≤ 4 used in the oracle comparisons.
pub fn small_quandles() -> Vec<(&'static str, Quandle)> {
    vec![
        ("T1", Quandle::trivial(1).unwrap()),
        ("T2", Quandle::trivial(2).unwrap()),
        ("T3", Quandle::trivial(3).unwrap()),
        ("T4", Quandle::trivial(4).unwrap()),
        ("R3", Quandle::dihedral(3).unwrap()),
        ("R4", Quandle::dihedral(4).unwrap()),
        ("P3", Quandle::p3()),
        ("S4", tetrahedral()),
    ]
}

/// Counts coloring classes by enumerating every (normal bit, color)
/// assignment of the semi-arcs, keeping those that satisfy the local
/// conditions literally, and counting orbits of the basic-inversion action.
///
/// Returns `(classes, valid assignments)`.
pub fn brute_force_colorings(d: &LinkDiagram, sq: &SymmetricQuandle) -> (u128, u128) {
    let n_arcs = d.semi_arc_count();
    let n = sq.order();
    let rho = |x: usize| sq.rho(x);
    let op = |x: usize, y: usize| sq.op(x, y);

    // A crossing is checked once its largest semi-arc id has been assigned.
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n_arcs];
    for (k, x) in d.crossings().iter().enumerate() {
        let last = *[x.over[0], x.over[1], x.under_in, x.under_out]
            .iter()
            .max()
            .unwrap();
        ready[last].push(k);
    }

    // flipped[i]: the normal of semi-arc i is opposite to its reference normal.
    let holds = |k: usize, flipped: &[bool], color: &[usize]| -> bool {
        let x = d.crossings()[k];
        let [s1, s2] = x.over;
        // Over semi-arcs: coherent normals force equal colors, otherwise
        // x1 = ρ(x2).
        let over_ok = if flipped[s1] == flipped[s2] {
            color[s1] == color[s2]
        } else {
            color[s1] == rho(color[s2])
        };
        if !over_ok {
            return false;
        }
        // Under semi-arcs, seen from either over semi-arc. With reference
        // normals the over normal points from under_in to under_out exactly
        // at positive crossings.
        [s1, s2].iter().all(|&s3| {
            let towards_out = (x.sign > 0) != flipped[s3];
            let (src, dst) = if towards_out {
                (x.under_in, x.under_out)
            } else {
                (x.under_out, x.under_in)
            };
            let lhs = op(color[src], color[s3]);
            if flipped[x.under_in] == flipped[x.under_out] {
                lhs == color[dst]
            } else {
                lhs == rho(color[dst])
            }
        })
    };

    let mut flipped = vec![false; n_arcs];
    let mut color = vec![0usize; n_arcs];
    let mut classes: HashSet<Vec<usize>> = HashSet::new();
    let mut valid = 0u128;

    #[allow(clippy::too_many_arguments, clippy::type_complexity)]
    fn go(
        i: usize,
        n_arcs: usize,
        n: usize,
        flipped: &mut Vec<bool>,
        color: &mut Vec<usize>,
        ready: &[Vec<usize>],
        holds: &dyn Fn(usize, &[bool], &[usize]) -> bool,
        rho: &dyn Fn(usize) -> usize,
        classes: &mut HashSet<Vec<usize>>,
        valid: &mut u128,
    ) {
        if i == n_arcs {
            *valid += 1;
            // Apply basic inversions until every normal is the reference one.
            let canonical = (0..n_arcs)
                .map(|j| if flipped[j] { rho(color[j]) } else { color[j] })
                .collect();
            classes.insert(canonical);
            return;
        }
        for bit in [false, true] {
            for c in 0..n {
                flipped[i] = bit;
                color[i] = c;
                if ready[i].iter().all(|&k| holds(k, flipped, color)) {
                    go(
                        i + 1,
                        n_arcs,
                        n,
                        flipped,
                        color,
                        ready,
                        holds,
                        rho,
                        classes,
                        valid,
                    );
                }
            }
        }
    }
    go(
        0,
        n_arcs,
        n,
        &mut flipped,
        &mut color,
        &ready,
        &holds,
        &rho,
        &mut classes,
        &mut valid,
    );

    // Crossingless circles: one choice per ρ-orbit.
    let orbits = (0..n).filter(|&x| x <= rho(x)).count() as u128;
    let factor = (0..d.crossingless()).fold(1u128, |acc, _| acc * orbits);
    (classes.len() as u128 * factor, valid * factor)
}

/// Rank over Z₂ of the symmetric 3-cocycle conditions, with variable
/// `(a,b,c)` stored at bit `n³ − 1 − (a n² + b n + c)` and rows reduced by
/// XOR against a pivot table. Supports `n ≤ 4`.
pub fn mod2_condition_rank(sq: &SymmetricQuandle) -> usize {
    let n = sq.order();
    assert!(n <= 4, "bitmask oracle supports n <= 4");
    let vars = n * n * n;
    let bit = |a: usize, b: usize, c: usize| 1u64 << (vars - 1 - (a * n * n + b * n + c));
    let op = |x: usize, y: usize| sq.op(x, y);
    let rho = |x: usize| sq.rho(x);

    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    rows.push(
                        bit(a, c, d)
                            ^ bit(op(a, b), c, d)
                            ^ bit(a, b, d)
                            ^ bit(op(a, c), op(b, c), d)
                            ^ bit(a, b, c)
                            ^ bit(op(a, d), op(b, d), op(c, d)),
                    );
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            rows.push(bit(a, a, b));
            rows.push(bit(a, b, b));
            for c in 0..n {
                rows.push(bit(a, b, c) ^ bit(rho(a), b, c));
                rows.push(bit(a, b, c) ^ bit(op(a, b), rho(b), c));
                rows.push(bit(a, b, c) ^ bit(op(a, c), op(b, c), rho(c)));
            }
        }
    }

    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let top = 63 - r.leading_zeros() as usize;
            if pivots[top] == 0 {
                pivots[top] = r;
                rank += 1;
                break;
            }
            r ^= pivots[top];
        }
    }
    rank
}

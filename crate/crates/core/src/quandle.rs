//! Finite quandles and good involutions.
//!
//! Elements of a quandle of order `n` are the integers `0..n`. The operation
//! is stored as a table with `table[x][y] = x^y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ViolationReport};

/// A finite quandle with its operation table and the precomputed right inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quandle")
            .field("n", &self.n)
            .field("table", &self.rows())
            .finish()
    }
}

fn check_shape(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Malformed("quandle table is empty".into()));
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "table is not square: row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((y, v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Malformed(format!(
                "entry table[{x}][{y}] = {v} is out of range 0..{n}"
            )));
        }
    }
    Ok(n)
}

/// Validates a table against the three quandle axioms.
///
/// Shape problems are reported as [`Error::Malformed`]; axiom failures as
/// [`Error::Violation`] with one witness per failing instance.
pub fn verify_quandle(table: &[Vec<usize>]) -> Result<Quandle> {
    let n = check_shape(table)?;
    let op = |x: usize, y: usize| table[x][y];
    let mut report = ViolationReport::new("quandle axioms");

    for x in 0..n {
        if op(x, x) != x {
            report.push("i", &[x], format!("{x}^{x} = {} != {x}", op(x, x)));
        }
    }
    for y in 0..n {
        let mut seen = vec![None; n];
        for x in 0..n {
            let z = op(x, y);
            if let Some(prev) = seen[z] {
                report.push(
                    "ii",
                    &[prev, x, y],
                    format!("{prev}^{y} = {x}^{y} = {z}, right action of {y} is not a bijection"),
                );
            } else {
                seen[z] = Some(x);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = op(op(x, y), z);
                let rhs = op(op(x, z), op(y, z));
                if lhs != rhs {
                    report.push(
                        "iii",
                        &[x, y, z],
                        format!("({x}^{y})^{z} = {lhs} but ({x}^{z})^({y}^{z}) = {rhs}"),
                    );
                }
            }
        }
    }

    report.into_result(())?;
    Ok(Quandle::from_validated(n, table))
}

impl Quandle {
    fn from_validated(n: usize, table: &[Vec<usize>]) -> Self {
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let mut inverse = vec![0; n * n];
        for y in 0..n {
            for z in 0..n {
                inverse[flat[z * n + y] * n + y] = z;
            }
        }
        Quandle {
            n,
            table: flat,
            inverse,
        }
    }

    /// Builds a quandle from a table, checking every axiom.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        verify_quandle(&table)
    }

    /// The three-element quandle P₃ with `0^y = 0`, `1^0 = 2`, `2^0 = 1` and
    /// `x^y = x` otherwise.
    pub fn p3() -> Self {
        Self::new(vec![vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]).expect("P3 is a quandle")
    }

    /// The trivial quandle Tₙ with `x^y = x`.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new((0..n).map(|x| vec![x; n]).collect())
    }

    /// The dihedral quandle Rₙ with `x^y = 2y - x mod n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x^y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The unique `z` with `z^y = x`.
    #[inline]
    pub fn inverse_op(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.n + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }
}

/// An involution `ρ` of a quandle with `ρ(x^y) = ρ(x)^y` and `x^{ρ(y)} = x^{y⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodInvolution {
    rho: Vec<usize>,
}

impl GoodInvolution {
    pub fn identity(n: usize) -> Self {
        GoodInvolution {
            rho: (0..n).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.rho[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.rho
    }

    /// The ρ-orbits `{x, ρ(x)}`, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for x in 0..self.rho.len() {
            let r = self.rho[x];
            if r == x {
                out.push(vec![x]);
            } else if x < r {
                out.push(vec![x, r]);
            }
        }
        out
    }

    /// Smallest element of the ρ-orbit of `x`.
    pub fn orbit_rep(&self, x: usize) -> usize {
        x.min(self.rho[x])
    }
}

fn good_involution_report(q: &Quandle, rho: &[usize]) -> ViolationReport {
    let n = q.order();
    let mut report = ViolationReport::new("good involution");
    for x in 0..n {
        if rho[rho[x]] != x {
            report.push(
                "involution",
                &[x],
                format!("rho(rho({x})) = {}", rho[rho[x]]),
            );
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = rho[q.op(x, y)];
            let rhs = q.op(rho[x], y);
            if lhs != rhs {
                report.push(
                    "i",
                    &[x, y],
                    format!("rho({x}^{y}) = {lhs} but rho({x})^{y} = {rhs}"),
                );
            }
            let lhs = q.op(x, rho[y]);
            let rhs = q.inverse_op(x, y);
            if lhs != rhs {
                report.push(
                    "ii",
                    &[x, y],
                    format!("{x}^rho({y}) = {lhs} but {x}^({y}^-1) = {rhs}"),
                );
            }
        }
    }
    report
}

/// Validates `rho` as a good involution of `q`.
pub fn verify_good_involution(q: &Quandle, rho: &[usize]) -> Result<GoodInvolution> {
    let n = q.order();
    if rho.len() != n {
        return Err(Error::Malformed(format!(
            "involution has length {}, quandle has order {n}",
            rho.len()
        )));
    }
    let mut seen = vec![false; n];
    for (x, &r) in rho.iter().enumerate() {
        if r >= n {
            return Err(Error::Malformed(format!(
                "rho({x}) = {r} is out of range 0..{n}"
            )));
        }
        if std::mem::replace(&mut seen[r], true) {
            return Err(Error::Malformed(format!(
                "rho is not a permutation: {r} repeats"
            )));
        }
    }
    good_involution_report(q, rho).into_result(GoodInvolution { rho: rho.to_vec() })
}

/// All good involutions of `q`, in lexicographic order of their arrays.
///
/// May be empty.
pub fn enumerate_good_involutions(q: &Quandle) -> Vec<GoodInvolution> {
    let n = q.order();
    let mut out = Vec::new();
    let mut rho = vec![usize::MAX; n];
    involutions(&mut rho, 0, &mut |rho| {
        if good_involution_report(q, rho).is_empty() {
            out.push(GoodInvolution { rho: rho.to_vec() });
        }
    });
    out.sort();
    out
}

fn involutions(rho: &mut [usize], from: usize, visit: &mut dyn FnMut(&[usize])) {
    let n = rho.len();
    let Some(x) = (from..n).find(|&i| rho[i] == usize::MAX) else {
        visit(rho);
        return;
    };
    rho[x] = x;
    involutions(rho, x + 1, visit);
    for y in x + 1..n {
        if rho[y] == usize::MAX {
            rho[x] = y;
            rho[y] = x;
            involutions(rho, x + 1, visit);
            rho[y] = usize::MAX;
        }
    }
    rho[x] = usize::MAX;
}

/// A quandle paired with a good involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricQuandle {
    quandle: Quandle,
    involution: GoodInvolution,
}

impl SymmetricQuandle {
    pub fn new(quandle: Quandle, rho: &[usize]) -> Result<Self> {
        let involution = verify_good_involution(&quandle, rho)?;
        Ok(SymmetricQuandle {
            quandle,
            involution,
        })
    }

    pub fn from_parts(quandle: Quandle, involution: GoodInvolution) -> Result<Self> {
        Self::new(quandle, involution.as_slice())
    }

    /// `(P₃, ρ)` with `ρ = [0, 2, 1]`.
    pub fn p3() -> Self {
        Self::new(Quandle::p3(), &[0, 2, 1]).expect("[0,2,1] is a good involution of P3")
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn involution(&self) -> &GoodInvolution {
        &self.involution
    }

    pub fn order(&self) -> usize {
        self.quandle.order()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.quandle.op(x, y)
    }

    #[inline]
    pub fn rho(&self, x: usize) -> usize {
        self.involution.apply(x)
    }
}

/// On-disk quandle description: `{"n": 3, "table": [[...]], "rho": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleFile {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<usize>>,
}

impl QuandleFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuandleFile = serde_json::from_str(text)?;
        if file.table.len() != file.n {
            return Err(Error::Malformed(format!(
                "\"n\" is {} but the table has {} rows",
                file.n,
                file.table.len()
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quandle file serializes")
    }

    pub fn quandle(&self) -> Result<Quandle> {
        verify_quandle(&self.table)
    }

    /// The symmetric quandle described by the file. A missing `rho` means the
    /// identity, which still has to pass the good-involution check.
    pub fn symmetric(&self) -> Result<SymmetricQuandle> {
        let q = self.quandle()?;
        let rho = self.rho.clone().unwrap_or_else(|| (0..self.n).collect());
        SymmetricQuandle::new(q, &rho)
    }
}

impl From<&SymmetricQuandle> for QuandleFile {
    fn from(sq: &SymmetricQuandle) -> Self {
        QuandleFile {
            n: sq.order(),
            table: sq.quandle().rows(),
            rho: Some(sq.involution().as_slice().to_vec()),
        }
    }
}

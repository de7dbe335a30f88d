//! Symmetric quandle 3-cocycles.
//!
//! A 3-cocycle assigns an element of `A_{s,t}` to every triple in `X³`,
//! subject to three families of linear conditions:
//!
//! * (i) for every `(a,b,c,d)`:
//!   `φ(a,c,d) − φ(a^b,c,d) − φ(a,b,d) + φ(a^c,b^c,d) + φ(a,b,c) − φ(a^d,b^d,c^d) = 0`
//! * (ii) `φ(a,a,b) = 0` and `φ(a,b,b) = 0`
//! * (iii) `φ(a,b,c) + φ(ρ(a),b,c) = 0`, `φ(a,b,c) + φ(a^b,ρ(b),c) = 0` and
//!   `φ(a,b,c) + φ(a^c,b^c,ρ(c)) = 0`
//!
//! Because the conditions are linear, the cocycles with coefficients in a
//! prime field form the kernel of one sparse matrix, see
//! [`cocycle_kernel_basis`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbelianElement, AbelianSignature};
use crate::error::{Error, Result, ViolationReport};
use crate::modp::{self, RowEchelon};
use crate::quandle::SymmetricQuandle;

pub type Triple = [usize; 3];

/// Largest quandle order accepted by [`cocycle_kernel_basis`].
pub const KERNEL_MAX_ORDER: usize = 12;

/// One instance of a cocycle condition: `Σ sign · φ(triple) = 0`.
#[derive(Clone, Debug)]
pub struct ConditionInstance {
    pub condition: &'static str,
    pub witness: Vec<usize>,
    pub terms: Vec<(i64, Triple)>,
}

/// Calls `visit(condition, witness, terms)` for every instance of
/// conditions (i)–(iii), in a fixed order.
pub fn for_each_condition(
    sq: &SymmetricQuandle,
    mut visit: impl FnMut(&'static str, &[usize], &[(i64, Triple)]),
) {
    let n = sq.order();
    let op = |x, y| sq.op(x, y);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    visit(
                        "i",
                        &[a, b, c, d],
                        &[
                            (1, [a, c, d]),
                            (-1, [op(a, b), c, d]),
                            (-1, [a, b, d]),
                            (1, [op(a, c), op(b, c), d]),
                            (1, [a, b, c]),
                            (-1, [op(a, d), op(b, d), op(c, d)]),
                        ],
                    );
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            visit("ii", &[a, a, b], &[(1, [a, a, b])]);
            visit("ii", &[a, b, b], &[(1, [a, b, b])]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let t = [a, b, c];
                visit("iii.1", &t, &[(1, t), (1, [sq.rho(a), b, c])]);
                visit("iii.2", &t, &[(1, t), (1, [op(a, b), sq.rho(b), c])]);
                visit("iii.3", &t, &[(1, t), (1, [op(a, c), op(b, c), sq.rho(c)])]);
            }
        }
    }
}

/// Every instance of conditions (i)–(iii) for `sq`, collected.
pub fn condition_instances(sq: &SymmetricQuandle) -> Vec<ConditionInstance> {
    let n = sq.order();
    let mut out = Vec::with_capacity(n.pow(4) + 2 * n * n + 3 * n.pow(3));
    for_each_condition(sq, |condition, witness, terms| {
        out.push(ConditionInstance {
            condition,
            witness: witness.to_vec(),
            terms: terms.to_vec(),
        })
    });
    out
}

fn triple_index(n: usize, [a, b, c]: Triple) -> usize {
    (a * n + b) * n + c
}

fn index_triple(n: usize, i: usize) -> Triple {
    [i / (n * n), (i / n) % n, i % n]
}

/// A verified symmetric quandle 3-cocycle, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    sq: SymmetricQuandle,
    signature: AbelianSignature,
    values: BTreeMap<Triple, AbelianElement>,
}

fn check_values(
    sq: &SymmetricQuandle,
    sig: AbelianSignature,
    values: &BTreeMap<Triple, AbelianElement>,
) -> Result<()> {
    let n = sq.order();
    for (t, v) in values {
        if t.iter().any(|&x| x >= n) {
            return Err(Error::Malformed(format!(
                "triple {t:?} has an element outside 0..{n}"
            )));
        }
        if v.signature() != sig {
            return Err(Error::Malformed(format!(
                "value at {t:?} has signature {}, expected {sig}",
                v.signature()
            )));
        }
    }
    Ok(())
}

/// Checks every condition instance and returns the validated cocycle.
pub fn verify_cocycle3(
    sq: &SymmetricQuandle,
    sig: AbelianSignature,
    values: BTreeMap<Triple, AbelianElement>,
) -> Result<Cocycle3> {
    check_values(sq, sig, &values)?;
    let n = sq.order();
    let mut dense: Vec<Option<&AbelianElement>> = vec![None; n.pow(3)];
    for (t, v) in &values {
        dense[triple_index(n, *t)] = Some(v);
    }
    let mut report = ViolationReport::new("symmetric 3-cocycle conditions");
    let mut alphas = vec![0u8; sig.s];
    let mut betas = vec![0i64; sig.t];
    let mut overflow = false;
    for_each_condition(sq, |condition, witness, terms| {
        alphas.iter_mut().for_each(|a| *a = 0);
        betas.iter_mut().for_each(|b| *b = 0);
        for (sign, t) in terms {
            let Some(v) = dense[triple_index(n, *t)] else {
                continue;
            };
            for (acc, a) in alphas.iter_mut().zip(v.alphas()) {
                *acc ^= a;
            }
            for (acc, b) in betas.iter_mut().zip(v.betas()) {
                match b.checked_mul(*sign).and_then(|b| acc.checked_add(b)) {
                    Some(s) => *acc = s,
                    None => overflow = true,
                }
            }
        }
        if alphas.iter().any(|&a| a != 0) || betas.iter().any(|&b| b != 0) {
            let sum = AbelianElement::new(alphas.clone(), betas.clone()).expect("bits");
            report.push(condition, witness, format!("sum is {sum}"));
        }
    });
    if overflow {
        return Err(Error::Overflow("cocycle condition sum"));
    }
    report.into_result(())?;
    let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    Ok(Cocycle3 {
        sq: sq.clone(),
        signature: sig,
        values,
    })
}

/// The mod-`p` version of [`verify_cocycle3`] for a dense table indexed
/// lexicographically by `(a,b,c)`.
pub fn verify_cocycle_mod_p(sq: &SymmetricQuandle, p: u32, table: &[u32]) -> Result<()> {
    let n = sq.order();
    if !modp::is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    if table.len() != n.pow(3) {
        return Err(Error::Malformed(format!(
            "table has {} entries, expected {}",
            table.len(),
            n.pow(3)
        )));
    }
    let mut report = ViolationReport::new(format!("symmetric 3-cocycle conditions mod {p}"));
    for_each_condition(sq, |condition, witness, terms| {
        let sum = terms.iter().fold(0i64, |acc, (sign, t)| {
            acc + sign * i64::from(table[triple_index(n, *t)])
        });
        let r = modp::residue(sum, p);
        if r != 0 {
            report.push(condition, witness, format!("sum is {r} mod {p}"));
        }
    });
    report.into_result(())
}

impl Cocycle3 {
    pub fn symmetric_quandle(&self) -> &SymmetricQuandle {
        &self.sq
    }

    pub fn signature(&self) -> AbelianSignature {
        self.signature
    }

    /// `φ(a,b,c)`, zero for triples without a stored value.
    pub fn value(&self, t: Triple) -> AbelianElement {
        self.values
            .get(&t)
            .cloned()
            .unwrap_or_else(|| AbelianElement::zero(self.signature))
    }

    /// Nonzero values in lexicographic order of their triples.
    pub fn support(&self) -> impl Iterator<Item = (&Triple, &AbelianElement)> {
        self.values.iter()
    }

    /// The zero cocycle of a given signature.
    pub fn zero(sq: &SymmetricQuandle, sig: AbelianSignature) -> Self {
        Cocycle3 {
            sq: sq.clone(),
            signature: sig,
            values: BTreeMap::new(),
        }
    }

    /// Pointwise sum, re-verified.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.sq != other.sq {
            return Err(Error::QuandleMismatch);
        }
        let mut values = self.values.clone();
        for (t, v) in &other.values {
            let sum = self.value(*t).add(v)?;
            values.insert(*t, sum);
        }
        verify_cocycle3(&self.sq, self.signature, values)
    }

    pub fn negate(&self) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|(t, v)| Ok((*t, v.negate()?)))
            .collect::<Result<_>>()?;
        verify_cocycle3(&self.sq, self.signature, values)
    }
}

/// The cocycle θ on `(P₃, ρ)` with values in `Z₂ ⊕ Z`.
pub fn make_theta() -> Cocycle3 {
    static THETA: OnceLock<Cocycle3> = OnceLock::new();
    THETA.get_or_init(build_theta).clone()
}

fn build_theta() -> Cocycle3 {
    let sig = AbelianSignature::new(1, 1);
    let p = AbelianElement::p(sig, 0);
    let q = AbelianElement::q(sig, 0);
    let minus_q = q.negate().expect("small");
    let values = BTreeMap::from([
        ([0, 1, 0], p.clone()),
        ([0, 2, 0], p),
        ([1, 0, 2], q.clone()),
        ([2, 0, 1], q),
        ([1, 0, 1], minus_q.clone()),
        ([2, 0, 2], minus_q),
    ]);
    verify_cocycle3(&SymmetricQuandle::p3(), sig, values).expect("theta is a cocycle")
}

/// Outcome of checking the value hypothesis of the triple-point lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub offenders: Vec<(Triple, AbelianElement)>,
}

/// Whether every value of `phi` is `0`, some `p_i`, or some `±q_j`.
pub fn check_lemma_admissible(phi: &Cocycle3) -> Admissibility {
    let offenders: Vec<_> = phi
        .support()
        .filter(|(_, v)| !v.is_unit_or_zero())
        .map(|(t, v)| (*t, v.clone()))
        .collect();
    Admissibility {
        admissible: offenders.is_empty(),
        offenders,
    }
}

/// A basis of the Z_p-valued symmetric 3-cocycles on a symmetric quandle.
#[derive(Clone, Debug)]
pub struct FieldCocycleSpace {
    pub sq: SymmetricQuandle,
    pub p: u32,
    /// Dense tables indexed lexicographically by `(a,b,c)`.
    pub basis: Vec<Vec<u32>>,
}

impl FieldCocycleSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether a dense table lies in the span of the basis.
    pub fn contains(&self, table: &[u32]) -> bool {
        let mut span = RowEchelon::new(self.p, table.len()).expect("p is prime");
        for b in &self.basis {
            span.insert(b.clone());
        }
        span.contains(table)
    }

    /// The support of a basis vector as `(triple, value)` pairs.
    pub fn sparse(&self, i: usize) -> Vec<(Triple, u32)> {
        let n = self.sq.order();
        self.basis[i]
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(j, &v)| (index_triple(n, j), v))
            .collect()
    }
}

/// Solves conditions (i)–(iii) over Z_p by exact elimination.
///
/// Variables are ordered lexicographically by `(a,b,c)`, which fixes the
/// basis: one vector per free variable, in increasing order.
pub fn cocycle_kernel_basis(sq: &SymmetricQuandle, p: u32) -> Result<FieldCocycleSpace> {
    let n = sq.order();
    if !modp::is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    if n > KERNEL_MAX_ORDER {
        return Err(Error::TooLarge(n, KERNEL_MAX_ORDER));
    }
    let cols = n.pow(3);
    let mut system = RowEchelon::new(p, cols)?;
    for_each_condition(sq, |_, _, terms| {
        if system.rank() == cols {
            return;
        }
        let mut row = vec![0i64; cols];
        for (sign, t) in terms {
            row[triple_index(n, *t)] += sign;
        }
        let row: Vec<u32> = row.into_iter().map(|v| modp::residue(v, p)).collect();
        if row.iter().any(|&v| v != 0) {
            system.insert(row);
        }
    });
    Ok(FieldCocycleSpace {
        sq: sq.clone(),
        p,
        basis: system.nullspace(),
    })
}

/// On-disk cocycle: `{"signature": {...}, "entries": [{"triple", "alphas", "betas"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub signature: AbelianSignature,
    pub entries: Vec<CocycleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleEntry {
    pub triple: Triple,
    pub alphas: Vec<u8>,
    pub betas: Vec<i64>,
}

impl CocycleFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cocycle file serializes")
    }

    /// Raw values keyed by triple, before any cocycle check.
    pub fn values(&self) -> Result<BTreeMap<Triple, AbelianElement>> {
        let mut values = BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.alphas.len() != self.signature.s || e.betas.len() != self.signature.t {
                return Err(Error::Malformed(format!(
                    "entries[{i}] has {} Z2 and {} Z entries, signature is {}",
                    e.alphas.len(),
                    e.betas.len(),
                    self.signature
                )));
            }
            let v = AbelianElement::new(e.alphas.clone(), e.betas.clone())?;
            if values.insert(e.triple, v).is_some() {
                return Err(Error::Malformed(format!(
                    "entries[{i}] repeats triple {:?}",
                    e.triple
                )));
            }
        }
        Ok(values)
    }

    pub fn cocycle(&self, sq: &SymmetricQuandle) -> Result<Cocycle3> {
        verify_cocycle3(sq, self.signature, self.values()?)
    }
}

impl From<&Cocycle3> for CocycleFile {
    fn from(phi: &Cocycle3) -> Self {
        CocycleFile {
            signature: phi.signature(),
            entries: phi
                .support()
                .map(|(t, v)| CocycleEntry {
                    triple: *t,
                    alphas: v.alphas().to_vec(),
                    betas: v.betas().to_vec(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::Quandle;

    fn theta_values() -> BTreeMap<Triple, AbelianElement> {
        make_theta()
            .support()
            .map(|(t, v)| (*t, v.clone()))
            .collect()
    }

    fn el(a: u8, b: i64) -> AbelianElement {
        AbelianElement::new(vec![a], vec![b]).unwrap()
    }

    #[test]
    fn theta_values_match_definition() {
        let theta = make_theta();
        assert_eq!(theta.value([0, 1, 0]), el(1, 0));
        assert_eq!(theta.value([0, 2, 0]), el(1, 0));
        assert_eq!(theta.value([1, 0, 2]), el(0, 1));
        assert_eq!(theta.value([2, 0, 1]), el(0, 1));
        assert_eq!(theta.value([1, 0, 1]), el(0, -1));
        assert_eq!(theta.value([2, 0, 2]), el(0, -1));
        assert_eq!(theta.value([0, 0, 0]), el(0, 0));
        assert_eq!(theta.support().count(), 6);
    }

    #[test]
    fn instance_counts_for_p3() {
        let inst = condition_instances(&SymmetricQuandle::p3());
        let count = |c: &str| inst.iter().filter(|i| i.condition == c).count();
        assert_eq!(count("i"), 81);
        assert_eq!(count("ii"), 18);
        assert_eq!(count("iii.1") + count("iii.2") + count("iii.3"), 81);
    }

    #[test]
    fn zero_map_is_a_cocycle() {
        for sq in [
            SymmetricQuandle::p3(),
            SymmetricQuandle::new(Quandle::dihedral(3).unwrap(), &[0, 1, 2]).unwrap(),
        ] {
            let sig = AbelianSignature::new(2, 3);
            assert!(verify_cocycle3(&sq, sig, BTreeMap::new()).is_ok());
        }
    }

    #[test]
    fn perturbed_theta_fails_symmetry() {
        let mut values = theta_values();
        values.insert([0, 1, 0], el(0, 0));
        let err = verify_cocycle3(&SymmetricQuandle::p3(), AbelianSignature::new(1, 1), values)
            .unwrap_err();
        let Error::Violation(report) = err else {
            panic!("expected violation");
        };
        // (0,1,0) and (0,2,0) are paired by the second symmetry identity.
        assert!(report
            .witnesses
            .iter()
            .any(|w| w.condition.starts_with("iii") && w.tuple == vec![0, 1, 0]));
    }

    #[test]
    fn mismatched_value_signature_is_malformed() {
        let mut values = theta_values();
        values.insert([0, 0, 1], AbelianElement::zero(AbelianSignature::new(0, 1)));
        assert!(matches!(
            verify_cocycle3(&SymmetricQuandle::p3(), AbelianSignature::new(1, 1), values),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn lemma_admissibility() {
        let theta = make_theta();
        assert!(check_lemma_admissible(&theta).admissible);
        let zero = Cocycle3::zero(&SymmetricQuandle::p3(), AbelianSignature::new(1, 1));
        assert!(check_lemma_admissible(&zero).admissible);
        let doubled = theta.add(&theta).unwrap();
        let adm = check_lemma_admissible(&doubled);
        assert!(!adm.admissible);
        assert_eq!(adm.offenders.len(), 4);
        assert!(adm.offenders.contains(&([1, 0, 2], el(0, 2))));
    }

    #[test]
    fn closed_under_addition_and_negation() {
        let theta = make_theta();
        let neg = theta.negate().unwrap();
        assert!(theta.add(&neg).unwrap().support().next().is_none());
        let triple = theta.add(&theta).unwrap().add(&theta).unwrap();
        assert_eq!(triple.value([0, 1, 0]), el(1, 0));
        assert_eq!(triple.value([2, 0, 2]), el(0, -3));
    }

    #[test]
    fn trivial_one_element_kernel_is_zero() {
        let t1 = SymmetricQuandle::new(Quandle::trivial(1).unwrap(), &[0]).unwrap();
        let space = cocycle_kernel_basis(&t1, 2).unwrap();
        assert_eq!(space.dimension(), 0);
    }

    #[test]
    fn kernel_guards() {
        let sq = SymmetricQuandle::p3();
        assert!(matches!(
            cocycle_kernel_basis(&sq, 4),
            Err(Error::NotPrime(4))
        ));
        let t13 = Quandle::trivial(13).unwrap();
        let sq13 = SymmetricQuandle::new(t13, &(0..13).collect::<Vec<_>>()).unwrap();
        assert!(matches!(
            cocycle_kernel_basis(&sq13, 2),
            Err(Error::TooLarge(13, 12))
        ));
    }

    #[test]
    fn kernel_basis_vectors_are_cocycles() {
        let sq = SymmetricQuandle::p3();
        for p in [2, 3, 5] {
            let space = cocycle_kernel_basis(&sq, p).unwrap();
            for v in &space.basis {
                verify_cocycle_mod_p(&sq, p, v).unwrap();
            }
        }
    }

    #[test]
    fn theta_reductions_lie_in_mod_2_kernel() {
        let sq = SymmetricQuandle::p3();
        let space = cocycle_kernel_basis(&sq, 2).unwrap();
        let theta = make_theta();
        let mut z2_part = vec![0u32; 27];
        let mut z_part = vec![0u32; 27];
        for (t, v) in theta.support() {
            z2_part[triple_index(3, *t)] = u32::from(v.alphas()[0]);
            z_part[triple_index(3, *t)] = modp::residue(v.betas()[0], 2);
        }
        assert!(space.contains(&z2_part));
        assert!(space.contains(&z_part));
        let mut bogus = vec![0u32; 27];
        bogus[triple_index(3, [0, 1, 0])] = 1;
        assert!(!space.contains(&bogus));
    }

    #[test]
    fn file_round_trip() {
        let theta = make_theta();
        let file = CocycleFile::from(&theta);
        let again = CocycleFile::from_json(&file.to_json()).unwrap();
        assert_eq!(again.cocycle(&SymmetricQuandle::p3()).unwrap(), theta);
    }

    #[test]
    fn file_errors() {
        let dup = r#"{"signature":{"s":1,"t":1},"entries":[
            {"triple":[0,1,0],"alphas":[1],"betas":[0]},
            {"triple":[0,1,0],"alphas":[1],"betas":[0]}]}"#;
        assert!(matches!(
            CocycleFile::from_json(dup).unwrap().values(),
            Err(Error::Malformed(_))
        ));
        let short = r#"{"signature":{"s":1,"t":1},"entries":[
            {"triple":[0,1,0],"alphas":[1],"betas":[]}]}"#;
        assert!(matches!(
            CocycleFile::from_json(short).unwrap().values(),
            Err(Error::Malformed(_))
        ));
        let range = r#"{"signature":{"s":0,"t":1},"entries":[
            {"triple":[0,5,0],"alphas":[],"betas":[1]}]}"#;
        assert!(matches!(
            CocycleFile::from_json(range)
                .unwrap()
                .cocycle(&SymmetricQuandle::p3()),
            Err(Error::Malformed(_))
        ));
    }
}

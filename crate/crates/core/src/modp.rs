//! Exact Gaussian elimination over the prime field Z_p.

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

fn pow(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

/// Reduces a signed integer into `0..p`.
pub fn residue(v: i64, p: u32) -> u32 {
    v.rem_euclid(i64::from(p)) as u32
}

/// A row space kept in reduced row echelon form, filled one row at a time.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    p: u32,
    cols: usize,
    // Sorted by pivot column; each row has a 1 at its pivot and zeros in
    // every other pivot column.
    rows: Vec<(usize, Vec<u32>)>,
}

impl RowEchelon {
    pub fn new(p: u32, cols: usize) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        Ok(RowEchelon {
            p,
            cols,
            rows: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: Vec<u32>) -> Vec<u32> {
        assert_eq!(row.len(), self.cols, "row length");
        let p = self.p;
        for (pivot, r) in &self.rows {
            let f = row[*pivot];
            if f != 0 {
                let f = p - f;
                for (x, y) in row.iter_mut().zip(r) {
                    if *y != 0 {
                        *x = (*x + mul(f, *y, p)) % p;
                    }
                }
            }
        }
        row
    }

    /// Adds `row` to the spanning set. Returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<u32>) -> bool {
        let p = self.p;
        let mut row = self.reduce(row);
        let Some(pivot) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = inv(row[pivot], p);
        for x in row.iter_mut() {
            *x = mul(*x, scale, p);
        }
        for (_, r) in self.rows.iter_mut() {
            let f = r[pivot];
            if f != 0 {
                let f = p - f;
                for (x, y) in r.iter_mut().zip(&row) {
                    if *y != 0 {
                        *x = (*x + mul(f, *y, p)) % p;
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(c, _)| *c < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: &[u32]) -> bool {
        self.reduce(row.to_vec()).iter().all(|&x| x == 0)
    }

    /// Basis of `{v : r·v = 0 for every row r}`, one vector per free column
    /// in increasing column order.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for (c, _) in &self.rows {
            is_pivot[*c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0; self.cols];
                v[f] = 1;
                for (c, r) in &self.rows {
                    v[*c] = (p - r[f]) % p;
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(RowEchelon::new(4, 3).is_err());
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
        assert_eq!(residue(-1, 5), 4);
    }

    #[test]
    fn rank_and_nullspace_mod_3() {
        let mut m = RowEchelon::new(3, 4).unwrap();
        assert!(m.insert(vec![1, 2, 0, 1]));
        assert!(m.insert(vec![0, 1, 1, 0]));
        assert!(!m.insert(vec![1, 0, 1, 1])); // = r0 + r1 mod 3
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in [[1u32, 2, 0, 1], [0, 1, 1, 0]] {
                let dot: u32 = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(dot % 3, 0);
            }
        }
        assert!(m.contains(&[2, 1, 0, 2]));
        assert!(!m.contains(&[0, 0, 0, 1]));
    }
}

//! The coefficient groups `A_{s,t} = (Z₂)^s ⊕ Z^t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of `A_{s,t}`: `s` copies of Z₂ followed by `t` copies of Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianSignature {
    pub s: usize,
    pub t: usize,
}

impl AbelianSignature {
    pub const fn new(s: usize, t: usize) -> Self {
        AbelianSignature { s, t }
    }
}

impl fmt::Display for AbelianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Z2)^{} + Z^{}", self.s, self.t)
    }
}

/// An element `(α₁ ⊕ … ⊕ α_s) ⊕ (β₁ ⊕ … ⊕ β_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianElement {
    alphas: Vec<u8>,
    betas: Vec<i64>,
}

impl AbelianElement {
    /// Builds an element, reducing nothing: every alpha must already be 0 or 1.
    pub fn new(alphas: Vec<u8>, betas: Vec<i64>) -> Result<Self> {
        if let Some(a) = alphas.iter().find(|&&a| a > 1) {
            return Err(Error::Malformed(format!("Z2 entry {a} is not 0 or 1")));
        }
        Ok(AbelianElement { alphas, betas })
    }

    pub fn zero(sig: AbelianSignature) -> Self {
        AbelianElement {
            alphas: vec![0; sig.s],
            betas: vec![0; sig.t],
        }
    }

    /// `p_i`: the unit of the `i`-th Z₂ summand (0-based).
    pub fn p(sig: AbelianSignature, i: usize) -> Self {
        let mut e = Self::zero(sig);
        e.alphas[i] = 1;
        e
    }

    /// `q_j`: the unit of the `j`-th Z summand (0-based).
    pub fn q(sig: AbelianSignature, j: usize) -> Self {
        let mut e = Self::zero(sig);
        e.betas[j] = 1;
        e
    }

    pub fn signature(&self) -> AbelianSignature {
        AbelianSignature::new(self.alphas.len(), self.betas.len())
    }

    pub fn alphas(&self) -> &[u8] {
        &self.alphas
    }

    pub fn betas(&self) -> &[i64] {
        &self.betas
    }

    pub fn is_zero(&self) -> bool {
        self.alphas.iter().all(|&a| a == 0) && self.betas.iter().all(|&b| b == 0)
    }

    pub fn check_signature(&self, sig: AbelianSignature) -> Result<()> {
        if self.signature() == sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected: sig.to_string(),
                found: self.signature().to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        other.check_signature(self.signature())?;
        let alphas = self
            .alphas
            .iter()
            .zip(&other.alphas)
            .map(|(a, b)| a ^ b)
            .collect();
        let betas = self
            .betas
            .iter()
            .zip(&other.betas)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("abelian addition")))
            .collect::<Result<_>>()?;
        Ok(AbelianElement { alphas, betas })
    }

    /// Z₂ entries are their own inverses; Z entries change sign.
    pub fn negate(&self) -> Result<Self> {
        let betas = self
            .betas
            .iter()
            .map(|b| b.checked_neg().ok_or(Error::Overflow("abelian negation")))
            .collect::<Result<_>>()?;
        Ok(AbelianElement {
            alphas: self.alphas.clone(),
            betas,
        })
    }

    /// `sign · self` for `sign = ±1`.
    pub fn signed(&self, sign: i8) -> Result<Self> {
        if sign < 0 {
            self.negate()
        } else {
            Ok(self.clone())
        }
    }

    /// `Σ αᵢ + Σ |βⱼ|`, with each αᵢ read as the integer 0 or 1.
    pub fn bound_norm(&self) -> Result<u64> {
        let mut total: u64 = self.alphas.iter().map(|&a| u64::from(a)).sum();
        for b in &self.betas {
            total = total
                .checked_add(b.unsigned_abs())
                .ok_or(Error::Overflow("bound norm"))?;
        }
        Ok(total)
    }

    /// Whether the element is `0`, some `p_i`, or some `±q_j`.
    pub fn is_unit_or_zero(&self) -> bool {
        let ones = self.alphas.iter().filter(|&&a| a != 0).count();
        let nonzero_betas: Vec<_> = self.betas.iter().filter(|&&b| b != 0).collect();
        match (ones, nonzero_betas.as_slice()) {
            (0, []) | (1, []) => true,
            (0, [b]) => b.abs() == 1,
            _ => false,
        }
    }
}

impl fmt::Display for AbelianElement {
    /// Written as `α₁⊕…⊕α_s⊕β₁⊕…⊕β_t`, e.g. `0⊕2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .alphas
            .iter()
            .map(|a| a.to_string())
            .chain(self.betas.iter().map(|b| b.to_string()))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("⊕"))
        }
    }
}

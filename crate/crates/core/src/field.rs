//! Prime-field arithmetic.
//!
//! Residues are stored as bare `u32` values inside [`Fe`]; the modulus lives
//! in the [`PrimeField`] context that performs the arithmetic.

use std::fmt;

use crate::error::AlgebraError;

/// A residue class modulo the prime of some [`PrimeField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field F_p for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer (negative values included) into the field.
    pub fn elem(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1 % self.p)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(((a.0 as u64 + b.0 as u64) % self.p as u64) as u32)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        Fe(((a.0 as u64 + self.p as u64 - b.0 as u64) % self.p as u64) as u32)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe(0), a)
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(p-2).
    pub fn inv(&self, a: Fe) -> Result<Fe, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.p).map(Fe)
    }
}

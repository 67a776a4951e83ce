//! Square matrices over F_p.

use std::fmt;
use std::ops::Mul;

use crate::error::AlgebraError;
use crate::field::{Fe, PrimeField};

/// An `n x n` matrix with entries reduced mod `p`, stored row-major.
///
/// The derived ordering compares `(n, p, entries)`, which inside a single
/// carrier is the row-major lexicographic order on entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize, p: u32) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % p;
        }
        Self { n, p, entries }
    }

    pub fn zero(n: usize, p: u32) -> Self {
        Self { n, p, entries: vec![0; n * n] }
    }

    pub fn scalar(n: usize, p: u32, c: Fe) -> Self {
        let mut m = Self::zero(n, p);
        for i in 0..n {
            m.entries[i * n + i] = c.value();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::Unsupported("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row.iter().map(|&v| v.rem_euclid(p as i64) as u32));
        }
        Ok(Self { n, p, entries })
    }

    /// Builds a matrix from already-reduced row-major entries.
    pub(crate) fn from_entries(n: usize, p: u32, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!(entries.iter().all(|&e| e < p));
        Self { n, p, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        Fe(self.entries[i * self.n + j])
    }

    fn field(&self) -> PrimeField {
        // moduli are validated when carriers and literals are built
        PrimeField::new(self.p).expect("matrix modulus is prime")
    }

    fn compatible(&self, other: &Matrix) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.p != other.p {
            return Err(AlgebraError::ModulusMismatch { left: self.p, right: other.p });
        }
        Ok(())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, AlgebraError> {
        self.compatible(rhs)?;
        let n = self.n;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc = (acc + self.entries[i * n + k] as u64 * rhs.entries[k * n + j] as u64) % p;
                }
                entries[i * n + j] = acc as u32;
            }
        }
        Ok(Matrix { n, p: self.p, entries })
    }

    /// Entrywise `s*self + t*other`.
    pub fn add_scaled(s: Fe, a: &Matrix, t: Fe, b: &Matrix) -> Result<Matrix, AlgebraError> {
        a.compatible(b)?;
        let f = a.field();
        let entries =
            a.entries.iter().zip(&b.entries).map(|(&x, &y)| f.add(f.mul(s, Fe(x)), f.mul(t, Fe(y))).value()).collect();
        Ok(Matrix { n: a.n, p: a.p, entries })
    }

    pub fn scale(&self, c: Fe) -> Matrix {
        let f = self.field();
        Matrix { n: self.n, p: self.p, entries: self.entries.iter().map(|&x| f.mul(c, Fe(x)).value()).collect() }
    }

    /// Determinant by Gaussian elimination with modular pivoting.
    pub fn det(&self) -> Fe {
        let f = self.field();
        let n = self.n;
        let mut a: Vec<Fe> = self.entries.iter().map(|&x| Fe(x)).collect();
        let mut det = f.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return f.zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                }
            }
        }
        det
    }

    /// Determinant by cofactor expansion along the first row. Only used for
    /// `n <= 3`, where it doubles as a cross-check on [`Matrix::det`].
    pub fn det_cofactor(&self) -> Fe {
        let f = self.field();
        fn minor(entries: &[Fe], n: usize, skip_col: usize) -> Vec<Fe> {
            let mut out = Vec::with_capacity((n - 1) * (n - 1));
            for r in 1..n {
                for c in 0..n {
                    if c != skip_col {
                        out.push(entries[r * n + c]);
                    }
                }
            }
            out
        }
        fn rec(f: &PrimeField, entries: &[Fe], n: usize) -> Fe {
            if n == 1 {
                return entries[0];
            }
            let mut acc = f.zero();
            for c in 0..n {
                let term = f.mul(entries[c], rec(f, &minor(entries, n, c), n - 1));
                acc = if c % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
            }
            acc
        }
        let entries: Vec<Fe> = self.entries.iter().map(|&x| Fe(x)).collect();
        rec(&f, &entries, self.n)
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// Gauss-Jordan inverse. The result is multiplied back against `self` on
    /// both sides before it is returned.
    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        let f = self.field();
        let n = self.n;
        let w = 2 * n;
        let mut a = vec![f.zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = Fe(self.entries[i * n + j]);
            }
            a[i * w + n + i] = f.one();
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * w + col].is_zero()).ok_or(AlgebraError::Singular)?;
            if pivot != col {
                for j in 0..w {
                    a.swap(pivot * w + j, col * w + j);
                }
            }
            let pinv = f.inv(a[col * w + col])?;
            for j in 0..w {
                a[col * w + j] = f.mul(a[col * w + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * w + col];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..w {
                    a[r * w + j] = f.sub(a[r * w + j], f.mul(factor, a[col * w + j]));
                }
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            entries.extend(a[i * w + n..i * w + w].iter().map(|x| x.value()));
        }
        let inv = Matrix { n, p: self.p, entries };
        let e = Matrix::identity(n, self.p);
        assert!(&inv * self == e && self * &inv == e, "Gauss-Jordan produced a non-inverse");
        Ok(inv)
    }

    /// `self^k`; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Result<Matrix, AlgebraError> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Matrix::identity(self.n, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Matrix-vector product `self * v` over F_p.
    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>, AlgebraError> {
        if v.len() != self.n {
            return Err(AlgebraError::ActionMismatch { vector_dim: v.len(), matrix_dim: self.n });
        }
        let p = self.p as u64;
        Ok((0..self.n)
            .map(|i| {
                (0..self.n).fold(0u64, |acc, k| (acc + self.entries[i * self.n + k] as u64 * v[k] as u64) % p) as u32
            })
            .collect())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on shape or modulus mismatch; use [`Matrix::try_mul`] to handle it.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entries[i * self.n + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn all_2x2(p: u32) -> Vec<Matrix> {
        let q = p as usize;
        (0..q.pow(4))
            .map(|mut code| {
                let mut e = vec![0u32; 4];
                for slot in (0..4).rev() {
                    e[slot] = (code % q) as u32;
                    code /= q;
                }
                Matrix::from_entries(2, p, e)
            })
            .collect()
    }

    #[test]
    fn mul_examples() {
        let a = m(3, &[&[1, 1], &[0, 1]]);
        assert_eq!(&Matrix::identity(2, 3) * &a, a);
        assert_eq!(&a * &a, m(3, &[&[1, 2], &[0, 1]]));
        let b = Matrix::identity(3, 3);
        assert_eq!(a.try_mul(&b), Err(AlgebraError::DimensionMismatch { left: 2, right: 3 }));
        let c = Matrix::identity(2, 5);
        assert_eq!(a.try_mul(&c), Err(AlgebraError::ModulusMismatch { left: 3, right: 5 }));
    }

    #[test]
    fn add_scaled_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let a = m(3, &[&[1, 2], &[0, 1]]);
        let b = m(3, &[&[2, 2], &[1, 0]]);
        assert_eq!(Matrix::add_scaled(f3.one(), &a, f3.zero(), &b).unwrap(), a);
        let e2 = Matrix::identity(2, 2);
        assert_eq!(Matrix::add_scaled(f2.one(), &e2, f2.one(), &e2).unwrap(), Matrix::zero(2, 2));
        let e3 = Matrix::identity(2, 3);
        assert_eq!(Matrix::add_scaled(f3.elem(2), &e3, f3.one(), &e3).unwrap(), Matrix::zero(2, 3));
    }

    #[test]
    fn inverse_examples() {
        let e = Matrix::identity(2, 3);
        assert_eq!(e.inverse().unwrap(), e);
        let a = m(3, &[&[1, 1], &[0, 1]]);
        let candidate = m(3, &[&[1, 2], &[0, 1]]);
        // oracle: the candidate multiplies back to E
        assert_eq!(&a * &candidate, e);
        assert_eq!(a.inverse().unwrap(), candidate);
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).inverse(), Err(AlgebraError::Singular));
    }

    #[test]
    fn elimination_det_matches_cofactor() {
        for p in [2, 3] {
            for a in all_2x2(p) {
                assert_eq!(a.det(), a.det_cofactor(), "{a}");
            }
        }
        // a few 3x3 cases over F_5
        let samples = [
            m(5, &[&[0, 1, 2], &[3, 4, 0], &[1, 1, 1]]),
            m(5, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
            m(5, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]),
            m(5, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
        ];
        for a in samples {
            assert_eq!(a.det(), a.det_cofactor(), "{a}");
        }
    }

    #[test]
    fn mul_is_associative_and_bilinear_on_m2_f2() {
        let f = PrimeField::new(2).unwrap();
        let all = all_2x2(2);
        for a in &all {
            for b in &all {
                let ab = a * b;
                for c in &all {
                    assert_eq!(&ab * c, a * &(b * c));
                    let b_plus_c = Matrix::add_scaled(f.one(), b, f.one(), c).unwrap();
                    assert_eq!(a * &b_plus_c, Matrix::add_scaled(f.one(), &ab, f.one(), &(a * c)).unwrap());
                    assert_eq!(&b_plus_c * a, Matrix::add_scaled(f.one(), &(b * a), f.one(), &(c * a)).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverse_round_trips_on_gl2() {
        for p in [2, 3] {
            let e = Matrix::identity(2, p);
            for a in all_2x2(p).into_iter().filter(Matrix::is_invertible) {
                let inv = a.inverse().unwrap();
                assert_eq!(&a * &inv, e);
                assert_eq!(&inv * &a, e);
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let a = m(3, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(-1).unwrap(), a.inverse().unwrap());
        assert_eq!(a.pow(3).unwrap(), Matrix::identity(2, 3));
        assert_eq!(a.pow(0).unwrap(), Matrix::identity(2, 3));
    }

    #[test]
    fn display_is_nested_rows() {
        assert_eq!(m(3, &[&[1, 2], &[0, 1]]).to_string(), "[[1,2],[0,1]]");
    }
}

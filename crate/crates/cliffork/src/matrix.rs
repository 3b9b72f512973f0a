//! Dense square matrices over Gaussian rationals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianScalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinMatrix {
    dim: usize,
    data: Vec<GaussianScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reality {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    Symmetric,
    Skew,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixClass {
    pub reality: Reality,
    pub symmetry: Symmetry,
}

impl SpinMatrix {
    pub fn zeros(dim: usize) -> Self {
        SpinMatrix { dim, data: vec![GaussianScalar::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SpinMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = GaussianScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianScalar>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Parse("matrix is not square".into()));
        }
        Ok(SpinMatrix { dim, data: rows.into_iter().flatten().collect() })
    }

    /// Rows of small integers plus an imaginary unit flag per entry:
    /// `(re, im)` pairs.
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Result<Self> {
        SpinMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&(a, b)| GaussianScalar::from_ints(a, b)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianScalar {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianScalar) {
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<GaussianScalar>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &SpinMatrix) -> SpinMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = SpinMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.data[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[i * d + j];
                    if cell.is_zero() {
                        *cell = a * b;
                    } else {
                        *cell += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &SpinMatrix) -> SpinMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SpinMatrix { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| *a + *b).collect() }
    }

    pub fn neg(&self) -> SpinMatrix {
        self.scale(GaussianScalar::from_ints(-1, 0))
    }

    pub fn scale(&self, s: GaussianScalar) -> SpinMatrix {
        SpinMatrix { dim: self.dim, data: self.data.iter().map(|a| *a * s).collect() }
    }

    pub fn transpose(&self) -> SpinMatrix {
        let d = self.dim;
        let mut out = SpinMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j];
            }
        }
        out
    }

    /// Entrywise complex conjugate (the dotted matrix).
    pub fn conj(&self) -> SpinMatrix {
        SpinMatrix { dim: self.dim, data: self.data.iter().map(|a| a.conj()).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|a| a.is_real())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        *self == self.transpose().neg()
    }

    pub fn classify(&self) -> MatrixClass {
        let reality = if self.is_real() { Reality::Real } else { Reality::Complex };
        let symmetry = if self.is_symmetric() {
            Symmetry::Symmetric
        } else if self.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::Mixed
        };
        MatrixClass { reality, symmetry }
    }

    /// `Some(c)` if the matrix equals c·I.
    pub fn as_scalar(&self) -> Option<GaussianScalar> {
        let d = self.dim;
        let c = self.data[0];
        for i in 0..d {
            for j in 0..d {
                let v = self.data[i * d + j];
                let want = if i == j { c } else { GaussianScalar::zero() };
                if v != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// +1 or -1 if the matrix is ±I.
    pub fn as_sign(&self) -> Option<i8> {
        self.as_scalar().and_then(|c| c.as_sign())
    }

    /// `Some(c)` with self = c·other, when other is nonzero.
    pub fn ratio_to(&self, other: &SpinMatrix) -> Option<GaussianScalar> {
        if self.dim != other.dim {
            return None;
        }
        let k = other.data.iter().position(|a| !a.is_zero())?;
        let c = self.data[k] / other.data[k];
        if c.is_zero() {
            return None;
        }
        (other.scale(c) == *self).then_some(c)
    }

    /// ±1 with self = ±other.
    pub fn sign_relative_to(&self, other: &SpinMatrix) -> Option<i8> {
        if self == other {
            Some(1)
        } else if *self == other.neg() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn commutes_with(&self, other: &SpinMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn anticommutes_with(&self, other: &SpinMatrix) -> bool {
        self.mul(other) == other.mul(self).neg()
    }

    pub fn inverse(&self) -> Option<SpinMatrix> {
        // unit-square matrices are their own inverse up to sign
        let sq = self.mul(self);
        if let Some(c) = sq.as_scalar() {
            let inv = c.inv()?;
            return Some(self.scale(inv));
        }
        let d = self.dim;
        let mut out = SpinMatrix::zeros(d);
        for col in 0..d {
            let mut e = vec![GaussianScalar::zero(); d];
            e[col] = GaussianScalar::one();
            let x = solve(self.rows(), e)?;
            for (row, v) in x.into_iter().enumerate() {
                out.data[row * d + col] = v;
            }
        }
        Some(out)
    }

    pub fn kron(&self, other: &SpinMatrix) -> SpinMatrix {
        let (a, b) = (self.dim, other.dim);
        let d = a * b;
        let mut out = SpinMatrix::zeros(d);
        for i in 0..a {
            for j in 0..a {
                let x = self.data[i * a + j];
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.data[(i * b + k) * d + j * b + l] = x * other.data[k * b + l];
                    }
                }
            }
        }
        out
    }

    pub fn product<'a, I>(dim: usize, factors: I) -> SpinMatrix
    where
        I: IntoIterator<Item = &'a SpinMatrix>,
    {
        factors.into_iter().fold(SpinMatrix::identity(dim), |acc, m| acc.mul(m))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.data.chunks(self.dim).map(|r| r.iter().map(|a| a.to_string()).collect()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        let parsed: Result<Vec<Vec<GaussianScalar>>> =
            rows.iter().map(|r| r.iter().map(|s| s.parse()).collect()).collect();
        SpinMatrix::from_rows(parsed?)
    }
}

impl fmt::Debug for SpinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for SpinMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpinMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        SpinMatrix::from_strings(&rows).map_err(serde::de::Error::custom)
    }
}

/// Solve `a x = b` by Gauss-Jordan elimination; `None` if singular.
#[allow(clippy::needless_range_loop)]
pub fn solve(mut a: Vec<Vec<GaussianScalar>>, mut b: Vec<GaussianScalar>) -> Option<Vec<GaussianScalar>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv()?;
        for j in col..n {
            a[col][j] = a[col][j] * inv;
        }
        b[col] = b[col] * inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in col..n {
                let v = a[col][j];
                if !v.is_zero() {
                    a[r][j] = a[r][j] - f * v;
                }
            }
            b[r] = b[r] - f * b[col];
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli_y() -> SpinMatrix {
        SpinMatrix::from_int_pairs(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]).unwrap()
    }

    #[test]
    fn y_is_complex_skew() {
        let c = pauli_y().classify();
        assert_eq!(c.reality, Reality::Complex);
        assert_eq!(c.symmetry, Symmetry::Skew);
        assert_eq!(pauli_y().mul(&pauli_y()).as_sign(), Some(1));
    }

    #[test]
    fn identity_is_real_symmetric() {
        let c = SpinMatrix::identity(4).classify();
        assert_eq!((c.reality, c.symmetry), (Reality::Real, Symmetry::Symmetric));
    }

    #[test]
    fn general_inverse() {
        let m = SpinMatrix::from_int_pairs(&[&[(2, 0), (1, 0)], &[(1, 0), (1, 1)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), SpinMatrix::identity(2));
        let s = SpinMatrix::from_int_pairs(&[&[(1, 0), (1, 0)], &[(1, 0), (1, 0)]]).unwrap();
        assert!(s.inverse().is_none());
    }

    #[test]
    fn json_roundtrip() {
        let y = pauli_y();
        let js = serde_json::to_string(&y).unwrap();
        assert_eq!(js, r#"[["0","-i"],["i","0"]]"#);
        let back: SpinMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, y);
    }
}

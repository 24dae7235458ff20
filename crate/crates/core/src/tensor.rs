//! Fixed-dimension symmetric tensors and small square matrices, dimensions 2..=6.
//!
//! Storage is a stack-sized 6×6 block (upper triangle for the symmetric case)
//! with an active-dimension field, so no heap allocation happens in hot paths.

use crate::error::Error;
use crate::scalar::Real;

/// Largest supported dimension.
pub const MAX_DIM: usize = 6;

const TRI_LEN: usize = MAX_DIM * (MAX_DIM + 1) / 2;

#[inline]
fn tri(i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < MAX_DIM);
    i * MAX_DIM - i * (i + 1) / 2 + j
}

fn check_dim(dim: usize) -> Result<(), Error> {
    if (2..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimUnsupported(dim))
    }
}

/// Dense symmetric tensor. Symmetry is structural: only the upper triangle
/// is stored, so `get(i, j) == get(j, i)` holds exactly by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymTensor<T> {
    dim: usize,
    data: [T; TRI_LEN],
}

impl<T: Real> SymTensor<T> {
    /// Zero tensor.
    pub fn zeros(dim: usize) -> Result<Self, Error> {
        check_dim(dim)?;
        Ok(Self { dim, data: [T::zero(); TRI_LEN] })
    }

    /// Identity tensor.
    pub fn identity(dim: usize) -> Result<Self, Error> {
        let mut t = Self::zeros(dim)?;
        for i in 0..dim {
            t.set(i, i, T::one());
        }
        Ok(t)
    }

    /// Diagonal tensor from the given entries (length sets the dimension).
    pub fn diag(entries: &[T]) -> Result<Self, Error> {
        let mut t = Self::zeros(entries.len())?;
        for (i, &v) in entries.iter().enumerate() {
            t.set(i, i, v);
        }
        Ok(t)
    }

    /// Build from full rows, requiring exact symmetry.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, Error> {
        let dim = rows.len();
        check_dim(dim)?;
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimMismatch { expected: dim, got: r.len() });
            }
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        let mut t = Self::zeros(dim)?;
        for i in 0..dim {
            for j in i..dim {
                t.set(i, j, rows[i][j]);
            }
        }
        Ok(t)
    }

    /// Build from full rows as (A + Aᵀ)/2, returning the largest absolute
    /// asymmetry encountered.
    pub fn symmetrized(rows: &[Vec<T>]) -> Result<(Self, T), Error> {
        let dim = rows.len();
        check_dim(dim)?;
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimMismatch { expected: dim, got: r.len() });
            }
        }
        let mut t = Self::zeros(dim)?;
        let mut delta = T::zero();
        let half = T::of(0.5);
        for i in 0..dim {
            t.set(i, i, rows[i][i]);
            for j in (i + 1)..dim {
                delta = delta.max((rows[i][j] - rows[j][i]).abs());
                t.set(i, j, (rows[i][j] + rows[j][i]) * half);
            }
        }
        Ok((t, delta))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.data[tri(a, b)]
    }

    /// Sets the (i, j) and (j, i) entries at once.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.data[tri(a, b)] = v;
    }

    /// Full row-major copy.
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn trace(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.dim {
            s = s + self.get(i, i);
        }
        s
    }

    pub fn frobenius_norm(&self) -> T {
        self.dot(self).sqrt()
    }

    /// Frobenius inner product Σᵢⱼ AᵢⱼBᵢⱼ (off-diagonal entries count twice).
    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim, other.dim);
        let two = T::of(2.0);
        let mut s = T::zero();
        for i in 0..self.dim {
            s = s + self.get(i, i) * other.get(i, i);
            for j in (i + 1)..self.dim {
                s = s + two * self.get(i, j) * other.get(i, j);
            }
        }
        s
    }

    pub fn scale(&self, c: T) -> Self {
        let mut out = *self;
        for v in out.data.iter_mut() {
            *v = *v * c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = *self;
        for (v, w) in out.data.iter_mut().zip(other.data.iter()) {
            *v = *v + *w;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = *self;
        for (v, w) in out.data.iter_mut().zip(other.data.iter()) {
            *v = *v - *w;
        }
        out
    }

    /// Product of two commuting symmetric tensors (e.g. polynomials in the
    /// same tensor). Only the upper triangle is computed, keeping the result
    /// structurally symmetric.
    pub(crate) fn mul_commuting(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = Self { dim: self.dim, data: [T::zero(); TRI_LEN] };
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut s = T::zero();
                for k in 0..self.dim {
                    s = s + self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    /// Square of the tensor, exactly symmetric.
    pub fn square(&self) -> Self {
        self.mul_commuting(self)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> T {
        self.to_mat().det()
    }

    /// Positive-definiteness check by attempting a Cholesky factorization.
    /// Any non-positive pivot fails the check; there is no tolerance knob.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.dim;
        let mut l = [[T::zero(); MAX_DIM]; MAX_DIM];
        for j in 0..n {
            let mut d = self.get(j, j);
            for k in 0..j {
                d = d - l[j][k] * l[j][k];
            }
            if d <= T::zero() || !d.is_finite() {
                return false;
            }
            let dj = d.sqrt();
            l[j][j] = dj;
            for i in (j + 1)..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s = s - l[i][k] * l[j][k];
                }
                l[i][j] = s / dj;
            }
        }
        true
    }

    /// General (non-symmetric) view of this tensor.
    pub fn to_mat(&self) -> Mat<T> {
        let mut m = Mat::zeros(self.dim).expect("dim already validated");
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }
}

/// Evaluates c₀I + c₁C + … + c_k Cᵏ by Horner's scheme in matrix arithmetic.
/// The result is structurally symmetric.
pub fn mat_poly<T: Real>(c: &SymTensor<T>, coeffs: &[T]) -> SymTensor<T> {
    debug_assert!(!coeffs.is_empty());
    let dim = c.dim();
    let mut acc = SymTensor::identity(dim)
        .expect("dim already validated")
        .scale(*coeffs.last().unwrap());
    for &ck in coeffs.iter().rev().skip(1) {
        acc = acc.mul_commuting(c);
        for i in 0..dim {
            acc.set(i, i, acc.get(i, i) + ck);
        }
    }
    acc
}

/// Dense square matrix with the same stack-sized storage scheme.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat<T> {
    dim: usize,
    rows: [[T; MAX_DIM]; MAX_DIM],
}

impl<T: Real> Mat<T> {
    pub fn zeros(dim: usize) -> Result<Self, Error> {
        check_dim(dim)?;
        Ok(Self { dim, rows: [[T::zero(); MAX_DIM]; MAX_DIM] })
    }

    pub fn identity(dim: usize) -> Result<Self, Error> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.rows[i][i] = T::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, Error> {
        let dim = rows.len();
        check_dim(dim)?;
        let mut m = Self::zeros(dim)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::DimMismatch { expected: dim, got: r.len() });
            }
            for (j, &v) in r.iter().enumerate() {
                m.rows[i][j] = v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i][j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.rows[i][j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.dim)
            .map(|i| self.rows[i][..self.dim].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.rows[i][j] = self.rows[j][i];
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = Self { dim: self.dim, rows: [[T::zero(); MAX_DIM]; MAX_DIM] };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut s = T::zero();
                for k in 0..self.dim {
                    s = s + self.rows[i][k] * other.rows[k][j];
                }
                out.rows[i][j] = s;
            }
        }
        out
    }

    pub fn mul_sym(&self, other: &SymTensor<T>) -> Self {
        self.mul(&other.to_mat())
    }

    /// FᵀF, computed entry-by-entry on the upper triangle so the result is
    /// exactly symmetric.
    pub fn gram(&self) -> SymTensor<T> {
        let mut out = SymTensor::zeros(self.dim).expect("dim already validated");
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut s = T::zero();
                for k in 0..self.dim {
                    s = s + self.rows[k][i] * self.rows[k][j];
                }
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                s = s + self.rows[i][j] * self.rows[i][j];
            }
        }
        s.sqrt()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> T {
        let n = self.dim;
        let mut a = self.rows;
        let mut det = T::one();
        for col in 0..n {
            let mut piv = col;
            for r in (col + 1)..n {
                if a[r][col].abs() > a[piv][col].abs() {
                    piv = r;
                }
            }
            if a[piv][col] == T::zero() {
                return T::zero();
            }
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            det = det * a[col][col];
            for r in (col + 1)..n {
                let f = a[r][col] / a[col][col];
                for c in col..n {
                    a[r][c] = a[r][c] - f * a[col][c];
                }
            }
        }
        det
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.rows[i][j] = out.rows[i][j] - other.rows[i][j];
            }
        }
        out
    }
}

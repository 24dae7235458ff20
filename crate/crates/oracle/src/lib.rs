//! Independent spectral ground truth for the closed-form pipeline: a cyclic
//! Jacobi eigensolver, the spectral square root, the projector formula for
//! distinct eigenvalues, and the sign-pattern root catalogs.
//!
//! This crate is for tests and benchmarking baselines. The closed-form path
//! in `spdroot` cannot depend on it — the dependency points the other way —
//! so verification stays independent by construction. Jacobi is used rather
//! than QR because it is unconditionally stable and trivially correct for
//! these tiny matrices; the oracle is allowed to be slow.

pub mod gen;

use std::fmt;

use spdroot::scalar::Real;
use spdroot::{Mat, Stretches, SymTensor};

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// Jacobi sweep cap reached (practically unreachable for dim ≤ 6).
    NoConvergence,
    /// An eigenvalue is not positive.
    NotPositiveDefinite,
    /// Eigenvalue gaps below tolerance; the projector formula divides by them.
    DegenerateSpectrum,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NoConvergence => write!(f, "Jacobi iteration did not converge"),
            OracleError::NotPositiveDefinite => write!(f, "tensor is not positive definite"),
            OracleError::DegenerateSpectrum => write!(f, "eigenvalues too close for projectors"),
        }
    }
}

impl std::error::Error for OracleError {}

/// Eigenvalues in non-increasing order with orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct EigenPairs<T> {
    pub values: Vec<T>,
    pub vectors: Mat<T>,
}

const MAX_SWEEPS: usize = 30;

/// Full spectrum of a symmetric tensor by cyclic Jacobi rotations. The
/// off-diagonal norm is driven below 1e−14·‖A‖_F.
pub fn jacobi_eigen<T: Real>(a: &SymTensor<T>) -> Result<EigenPairs<T>, OracleError> {
    let n = a.dim();
    let mut m = [[T::zero(); 6]; 6];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = a.get(i, j);
        }
    }
    let mut v = Mat::identity(n).expect("dim validated by SymTensor");
    let norm = a.frobenius_norm().max(T::min_positive_value());
    let target = T::of(1e-14) * norm;

    let off = |m: &[[T; 6]; 6]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + m[i][j] * m[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&m) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[p][q] == T::zero() {
                    continue;
                }
                // Classic two-sided rotation choosing the inner angle.
                let tau = (m[q][q] - m[p][p]) / (T::of(2.0) * m[p][q]);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    if !converged && off(&m) > target {
        return Err(OracleError::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| m[b][b].partial_cmp(&m[a][a]).unwrap());
    let values: Vec<T> = order.iter().map(|&k| m[k][k]).collect();
    let mut vectors = Mat::identity(n).expect("dim validated");
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, col, v.get(row, k));
        }
    }
    Ok(EigenPairs { values, vectors })
}

fn spectral_map<T: Real>(
    c: &SymTensor<T>,
    f: impl Fn(T) -> T,
) -> Result<SymTensor<T>, OracleError> {
    let n = c.dim();
    let eig = jacobi_eigen(c)?;
    if eig.values.iter().any(|&l| l <= T::zero()) {
        return Err(OracleError::NotPositiveDefinite);
    }
    let mut out = SymTensor::zeros(n).expect("dim validated");
    for i in 0..n {
        for j in i..n {
            let mut s = T::zero();
            for (k, &l) in eig.values.iter().enumerate() {
                s = s + f(l) * eig.vectors.get(i, k) * eig.vectors.get(j, k);
            }
            out.set(i, j, s);
        }
    }
    Ok(out)
}

/// SPD square root by the spectral representation: U = Σ √λₖ² eₖ⊗eₖ.
pub fn spectral_sqrt<T: Real>(c: &SymTensor<T>) -> Result<SymTensor<T>, OracleError> {
    spectral_map(c, |l| l.sqrt())
}

/// Spectral inverse square root, the oracle-side U⁻¹.
pub fn spectral_inv_sqrt<T: Real>(c: &SymTensor<T>) -> Result<SymTensor<T>, OracleError> {
    spectral_map(c, |l| T::one() / l.sqrt())
}

/// Rank-one eigenprojector for a 3×3 tensor with distinct eigenvalues:
/// eₖ⊗eₖ = Π_{j≠k}(C − aⱼI) / Π_{j≠k}(aⱼ − aₖ), with a the eigenvalues of C.
pub fn luehr_rubin_projector<T: Real>(
    c: &SymTensor<T>,
    k: usize,
    eigenvalues: [T; 3],
) -> Result<SymTensor<T>, OracleError> {
    debug_assert_eq!(c.dim(), 3);
    debug_assert!(k < 3);
    let norm = c.frobenius_norm().max(T::one());
    let gap_tol = T::of(1e-12) * norm;
    for a in 0..3 {
        for b in (a + 1)..3 {
            if (eigenvalues[a] - eigenvalues[b]).abs() <= gap_tol {
                return Err(OracleError::DegenerateSpectrum);
            }
        }
    }
    let ident = SymTensor::identity(3).expect("dim 3");
    let mut num = ident;
    let mut den = T::one();
    for j in 0..3 {
        if j == k {
            continue;
        }
        let shifted = c.sub(&ident.scale(eigenvalues[j]));
        num = num.to_mat().mul_sym(&shifted).gram_free_sym();
        den = den * (eigenvalues[j] - eigenvalues[k]);
    }
    Ok(num.scale(T::one() / den))
}

trait MatSymExt<T: Real> {
    fn gram_free_sym(&self) -> SymTensor<T>;
}

impl<T: Real> MatSymExt<T> for Mat<T> {
    /// Upper-triangle copy of a matrix known to be symmetric analytically.
    fn gram_free_sym(&self) -> SymTensor<T> {
        let n = self.dim();
        let mut out = SymTensor::zeros(n).expect("dim validated");
        let half = T::of(0.5);
        for i in 0..n {
            out.set(i, i, self.get(i, i));
            for j in (i + 1)..n {
                out.set(i, j, (self.get(i, j) + self.get(j, i)) * half);
            }
        }
        out
    }
}

/// Elementary symmetric functions e₁..e_n of the given values: the
/// test-side ground truth for invariant vectors.
pub fn esym<T: Real>(vals: &[T]) -> Vec<T> {
    let n = vals.len();
    let mut e = vec![T::zero(); n + 1];
    e[0] = T::one();
    for &v in vals {
        for k in (1..=n).rev() {
            e[k] = e[k] + v * e[k - 1];
        }
    }
    e.remove(0);
    e
}

/// The genuine-root catalog: all signed sums ±λ₁±…±λ_N with an even number
/// of minus signs, sorted descending.
///
/// For dim 4 the catalog lists the quartic roots in i₂, built the same way
/// from the pair sums (λ₁λ₂+λ₃λ₄, λ₁λ₃+λ₂λ₄, λ₁λ₄+λ₂λ₃). For dim 6 the
/// entries are the squares w = (signed sum)², one per negation pair, so 16
/// values with multiplicity are returned.
pub fn sign_catalog_roots<T: Real>(s: &Stretches<T>) -> Vec<T> {
    let vals = s.values();
    let out = match s.dim() {
        4 => {
            let l = vals;
            let base = [
                l[0] * l[1] + l[2] * l[3],
                l[0] * l[2] + l[1] * l[3],
                l[0] * l[3] + l[1] * l[2],
            ];
            even_sign_sums(&base)
        }
        6 => {
            // fix the first sign positive: one representative per ± pair
            let mut squares = Vec::new();
            for mask in 0..(1u32 << 5) {
                let mut sum = vals[0];
                let mut minus = 0;
                for k in 0..5 {
                    if (mask >> k) & 1 == 1 {
                        sum = sum - vals[k + 1];
                        minus += 1;
                    } else {
                        sum = sum + vals[k + 1];
                    }
                }
                if minus % 2 == 0 {
                    squares.push(sum * sum);
                }
            }
            squares
        }
        _ => even_sign_sums(vals),
    };
    let mut out = out;
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    out
}

fn even_sign_sums<T: Real>(vals: &[T]) -> Vec<T> {
    let n = vals.len();
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut sum = T::zero();
        for (k, &v) in vals.iter().enumerate() {
            sum = if (mask >> k) & 1 == 1 { sum - v } else { sum + v };
        }
        out.push(sum);
    }
    out
}

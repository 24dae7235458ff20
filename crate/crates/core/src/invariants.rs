//! Principal invariants of C and of U = C^{1/2}.

use crate::error::Error;
use crate::scalar::Real;
use crate::tensor::{SymTensor, MAX_DIM};

/// Principal invariants (I₁, …, I_N) of a tensor: the elementary symmetric
/// functions of its eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrincipalInvariants<T> {
    dim: usize,
    values: [T; MAX_DIM],
}

impl<T: Real> PrincipalInvariants<T> {
    pub fn new(values: &[T]) -> Result<Self, Error> {
        if !(2..=MAX_DIM).contains(&values.len()) {
            return Err(Error::DimUnsupported(values.len()));
        }
        let mut v = [T::zero(); MAX_DIM];
        v[..values.len()].copy_from_slice(values);
        Ok(Self { dim: values.len(), values: v })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[T] {
        &self.values[..self.dim]
    }

    /// I_α with the conventional 1-based index.
    #[inline]
    pub fn at(&self, alpha: usize) -> T {
        debug_assert!(alpha >= 1 && alpha <= self.dim);
        self.values[alpha - 1]
    }
}

/// Principal stretches λ₁ ≥ … ≥ λ_N > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stretches<T> {
    dim: usize,
    values: [T; MAX_DIM],
}

impl<T: Real> Stretches<T> {
    /// Sorts the given stretches in non-increasing order; all must be positive.
    pub fn new(values: &[T]) -> Result<Self, Error> {
        if !(2..=MAX_DIM).contains(&values.len()) {
            return Err(Error::DimUnsupported(values.len()));
        }
        if values.iter().any(|&v| v <= T::zero() || !v.is_finite()) {
            return Err(Error::NotPositiveDefinite);
        }
        let mut v = [T::zero(); MAX_DIM];
        v[..values.len()].copy_from_slice(values);
        v[..values.len()].sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self { dim: values.len(), values: v })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[T] {
        &self.values[..self.dim]
    }
}

/// Which computation produced a set of stretch invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Closed2,
    Closed3,
    Closed4,
    Poly16N5,
    Poly32N6,
}

impl Route {
    pub fn for_dim(dim: usize) -> Result<Self, Error> {
        match dim {
            2 => Ok(Route::Closed2),
            3 => Ok(Route::Closed3),
            4 => Ok(Route::Closed4),
            5 => Ok(Route::Poly16N5),
            6 => Ok(Route::Poly32N6),
            d => Err(Error::DimUnsupported(d)),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Closed2 => "closed2",
            Route::Closed3 => "closed3",
            Route::Closed4 => "closed4",
            Route::Poly16N5 => "poly16_n5",
            Route::Poly32N6 => "poly32_n6",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Invariants (i₁, …, i_N) of the stretch tensor U, with provenance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StretchInvariants<T> {
    dim: usize,
    values: [T; MAX_DIM],
    route: Route,
    degenerate: bool,
}

impl<T: Real> StretchInvariants<T> {
    pub(crate) fn new(values: &[T], route: Route, degenerate: bool) -> Self {
        debug_assert!((2..=MAX_DIM).contains(&values.len()));
        let mut v = [T::zero(); MAX_DIM];
        v[..values.len()].copy_from_slice(values);
        Self { dim: values.len(), values: v, route, degenerate }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[T] {
        &self.values[..self.dim]
    }

    /// i_α with the conventional 1-based index.
    #[inline]
    pub fn at(&self, alpha: usize) -> T {
        debug_assert!(alpha >= 1 && alpha <= self.dim);
        self.values[alpha - 1]
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Test-support constructor bypassing the computation routes.
    #[doc(hidden)]
    pub fn test_only_new(values: &[T], route: Route) -> Self {
        Self::new(values, route, false)
    }

    /// True when an equal-stretch fallback branch was taken.
    pub fn degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Elementary symmetric functions e₁..e_n of the given values.
pub(crate) fn elementary_symmetric<T: Real>(vals: &[T]) -> [T; MAX_DIM] {
    let n = vals.len();
    debug_assert!(n <= MAX_DIM);
    let mut e = [T::zero(); MAX_DIM + 1];
    e[0] = T::one();
    for &v in vals {
        for k in (1..=n).rev() {
            e[k] = e[k] + v * e[k - 1];
        }
    }
    let mut out = [T::zero(); MAX_DIM];
    out.copy_from_slice(&e[1..=MAX_DIM]);
    out
}

/// Residuals of the identity system connecting (i₁,…,i_N) to (I₁,…,I_N):
/// iₖ² = Iₖ + 2·Σ_{j≥1} (−1)^{j−1} i_{k−j} i_{k+j}, with i₀ = 1 and i_m = 0
/// for m > N. Returns one (residual, magnitude-scale) pair per k.
pub fn identity_residuals<T: Real>(
    inv: &PrincipalInvariants<T>,
    i: &[T],
) -> Vec<(T, T)> {
    let n = inv.dim();
    debug_assert_eq!(i.len(), n);
    let at = |m: usize| -> T {
        if m == 0 {
            T::one()
        } else if m <= n {
            i[m - 1]
        } else {
            T::zero()
        }
    };
    let two = T::of(2.0);
    (1..=n)
        .map(|k| {
            let mut rhs = inv.at(k);
            let mut scale = i[k - 1] * i[k - 1] + inv.at(k).abs();
            let mut sign = T::one();
            for j in 1..=k.min(n - k) {
                let term = two * at(k - j) * at(k + j);
                rhs = rhs + sign * term;
                scale = scale + term.abs();
                sign = -sign;
            }
            (i[k - 1] * i[k - 1] - rhs, scale.max(T::one()))
        })
        .collect()
}

/// Newton refinement of a stretch-invariant vector on the identity system.
///
/// The recovery formulas lose digits to cancellation when the stretch
/// spread is large; a few Newton steps on the full system restore them.
/// Steps are only accepted while they shrink the residual norm and keep
/// every invariant positive, so a bad basin cannot make things worse.
pub(crate) fn polish_stretch_invariants<T: Real>(inv: &PrincipalInvariants<T>, i: &mut [T]) {
    let n = inv.dim();
    debug_assert_eq!(i.len(), n);
    let norm = |vals: &[T]| -> T {
        identity_residuals(inv, vals)
            .iter()
            .fold(T::zero(), |m, &(r, s)| m.max(r.abs() / s))
    };
    let mut current = norm(i);
    for _ in 0..4 {
        if current <= T::of(4.0) * T::epsilon() {
            break;
        }
        let res = identity_residuals(inv, i);
        // J[k][m] = ∂F_k/∂i_m for F_k = i_k² − I_k − 2Σ(−1)^{j−1} i_{k−j} i_{k+j}
        let mut jac = [[T::zero(); MAX_DIM]; MAX_DIM];
        let mut rhs = [T::zero(); MAX_DIM];
        let two = T::of(2.0);
        for k in 1..=n {
            rhs[k - 1] = -res[k - 1].0;
            jac[k - 1][k - 1] = two * i[k - 1];
            let mut sign = T::one();
            for j in 1..=k.min(n - k) {
                let lo = k - j;
                let hi = k + j;
                if lo >= 1 {
                    jac[k - 1][lo - 1] = jac[k - 1][lo - 1] - two * sign * i[hi - 1];
                }
                let lo_val = if lo == 0 { T::one() } else { i[lo - 1] };
                jac[k - 1][hi - 1] = jac[k - 1][hi - 1] - two * sign * lo_val;
                sign = -sign;
            }
        }
        let Some(delta) = solve_dense(&mut jac, &mut rhs, n) else { break };
        let mut trial = [T::zero(); MAX_DIM];
        trial[..n].copy_from_slice(i);
        for k in 0..n {
            trial[k] = trial[k] + delta[k];
        }
        if trial[..n].iter().any(|&v| v <= T::zero()) {
            break;
        }
        let trial_norm = norm(&trial[..n]);
        if trial_norm < current {
            i.copy_from_slice(&trial[..n]);
            current = trial_norm;
        } else {
            break;
        }
    }
}

/// In-place Gaussian elimination with partial pivoting; returns the solution
/// or None on a zero pivot.
fn solve_dense<T: Real>(
    a: &mut [[T; MAX_DIM]; MAX_DIM],
    b: &mut [T; MAX_DIM],
    n: usize,
) -> Option<[T; MAX_DIM]> {
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col] == T::zero() {
            return None;
        }
        if piv != col {
            a.swap(piv, col);
            b.swap(piv, col);
        }
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] = a[r][c] - f * a[col][c];
            }
            b[r] = b[r] - f * b[col];
        }
    }
    let mut x = [T::zero(); MAX_DIM];
    for row in (0..n).rev() {
        let mut s = b[row];
        for c in (row + 1)..n {
            s = s - a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    Some(x)
}

/// Principal invariants of C from traces of matrix powers (Newton's
/// identities), with the determinant computed separately by pivoted
/// elimination: the trace formula for the last invariant amplifies
/// cancellation, elimination does not.
pub fn invariants_from_tensor<T: Real>(
    c: &SymTensor<T>,
) -> Result<PrincipalInvariants<T>, Error> {
    if !c.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let n = c.dim();
    let mut e = [T::zero(); MAX_DIM];

    let c2 = c.square();
    let mut p = [T::zero(); MAX_DIM + 1];
    p[1] = c.trace();
    p[2] = c2.trace();
    if n >= 4 {
        p[3] = c2.dot(c);
    }
    if n >= 5 {
        p[4] = c2.dot(&c2);
    }
    if n >= 6 {
        let c3 = c2.mul_commuting(c);
        p[5] = c3.dot(&c2);
    }

    e[0] = p[1];
    for k in 2..n {
        // k·e_k = Σ_{j=1..k} (−1)^{j−1} e_{k−j} p_j, with e_0 = 1
        let mut s = T::zero();
        let mut sign = T::one();
        for j in 1..=k {
            let ekj = if k == j { T::one() } else { e[k - j - 1] };
            s = s + sign * ekj * p[j];
            sign = -sign;
        }
        e[k - 1] = s / T::of(k as f64);
    }
    e[n - 1] = c.det();

    PrincipalInvariants::new(&e[..n])
}

/// Elementary symmetric functions of the squared stretches: the fixture
/// generator for every test in the repository.
pub fn invariants_from_stretches<T: Real>(s: &Stretches<T>) -> PrincipalInvariants<T> {
    let sq: Vec<T> = s.values().iter().map(|&l| l * l).collect();
    let e = elementary_symmetric(&sq);
    PrincipalInvariants::new(&e[..s.dim()]).expect("dim already validated")
}

//! U and U⁻¹ as explicit polynomials in C, and the polar decomposition F = RU.
//!
//! U⁻¹ always comes from the C⁻¹-elimination formulas, never from inverting
//! U; no matrix inversion happens anywhere on this path.

use crate::closed_form::{n2_stretch_invariants, n3_stretch_invariants, n4_stretch_invariants};
use crate::error::Error;
use crate::high_dim::{n5_stretch_invariants, n6_stretch_invariants};
use crate::invariants::{
    invariants_from_tensor, PrincipalInvariants, Route, StretchInvariants,
};
use crate::scalar::Real;
use crate::tensor::{mat_poly, Mat, SymTensor};

/// Scale-invariant near-singularity cutoff: the geometric mean of the
/// (λᵢ + λⱼ) factors of ν, relative to i₁.
const NEAR_SINGULAR_GM_REL: f64 = 1e-12;

/// The denominator Π_{i<j}(λᵢ + λⱼ) of every reconstruction of U, computed
/// from the invariant expression of the matching dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NuScalar<T> {
    pub value: T,
}

/// ν from the invariants of U. Strictly positive for SPD inputs; a value
/// whose factor geometric mean falls below 1e−12·i₁ signals an extremely
/// ill-conditioned C and errors as NearSingular.
pub fn nu<T: Real>(si: &StretchInvariants<T>) -> Result<NuScalar<T>, Error> {
    let i = |k: usize| si.at(k);
    let value = match si.dim() {
        2 => i(1),
        3 => i(1) * i(2) - i(3),
        4 => i(1) * i(2) * i(3) - i(3) * i(3) - i(1) * i(1) * i(4),
        5 => {
            i(1) * i(2) * i(3) * i(4) + T::of(2.0) * i(1) * i(4) * i(5) + i(2) * i(3) * i(5)
                - i(1) * i(1) * i(4) * i(4)
                - i(1) * i(2) * i(2) * i(5)
                - i(3) * i(3) * i(4)
                - i(5) * i(5)
        }
        6 => {
            i(1) * i(2) * i(3) * i(4) * i(5)
                + i(1) * i(1) * i(3) * i(4) * i(6)
                + T::of(2.0) * i(1) * i(1) * i(2) * i(5) * i(6)
                + T::of(2.0) * i(1) * i(4) * i(5) * i(5)
                + i(3) * i(3) * i(3) * i(6)
                + i(2) * i(3) * i(5) * i(5)
                - i(1) * i(1) * i(1) * i(6) * i(6)
                - i(1) * i(2) * i(3) * i(3) * i(6)
                - T::of(3.0) * i(1) * i(3) * i(5) * i(6)
                - i(1) * i(1) * i(4) * i(4) * i(5)
                - i(1) * i(2) * i(2) * i(5) * i(5)
                - i(3) * i(3) * i(4) * i(5)
                - i(5) * i(5) * i(5)
        }
        d => return Err(Error::DimUnsupported(d)),
    };
    let m = si.dim() * (si.dim() - 1) / 2;
    if value <= T::zero() {
        return Err(Error::NearSingular);
    }
    let gm = (value.ln() / T::of(m as f64)).exp();
    if gm <= T::of(NEAR_SINGULAR_GM_REL) * si.at(1) {
        return Err(Error::NearSingular);
    }
    Ok(NuScalar { value })
}

/// Invariants of U for any supported dimension, dispatching to the matching
/// route.
pub fn stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    match inv.dim() {
        2 => n2_stretch_invariants(inv),
        3 => n3_stretch_invariants(inv),
        4 => n4_stretch_invariants(inv),
        5 => n5_stretch_invariants(inv),
        6 => n6_stretch_invariants(inv),
        d => Err(Error::DimUnsupported(d)),
    }
}

fn u_coeffs<T: Real>(
    inv: &PrincipalInvariants<T>,
    si: &StretchInvariants<T>,
) -> Result<Vec<T>, Error> {
    let i = |k: usize| si.at(k);
    let two = T::of(2.0);
    match si.dim() {
        2 => {
            let d = nu(si)?.value; // = i₁
            Ok(vec![i(2) / d, T::one() / d])
        }
        3 => {
            let d = nu(si)?.value;
            Ok(vec![
                i(1) * i(3) / d,
                (inv.at(1) + i(2)) / d,
                -T::one() / d,
            ])
        }
        4 => {
            let d = nu(si)?.value;
            let p0 = (i(1) * i(2) - i(3)) * i(4);
            let p1 = i(1) * i(2) * i(2) - i(1) * i(1) * i(3) - i(2) * i(3) + i(1) * i(4);
            let p2 = i(1) * i(1) * i(1) - two * i(1) * i(2) + i(3);
            Ok(vec![p0 / d, p1 / d, -p2 / d, i(1) / d])
        }
        5 => {
            let d = nu(si)?.value;
            let [p0, p1, p2, p3, p4] = dim5_coeffs(si);
            Ok(vec![p0 / d, p1 / d, -p2 / d, p3 / d, -p4 / d])
        }
        6 => {
            let d = nu(si)?.value;
            let [p0, p1, p2, p3, p4, p5] = dim6_coeffs(si);
            Ok(vec![p0 / d, p1 / d, -p2 / d, p3 / d, -p4 / d, p5 / d])
        }
        d => Err(Error::DimUnsupported(d)),
    }
}

/// Polynomial coefficients p₀…p₄ for dim 5, with shared monomials hoisted.
fn dim5_coeffs<T: Real>(si: &StretchInvariants<T>) -> [T; 5] {
    let (i1, i2, i3, i4, i5) = (si.at(1), si.at(2), si.at(3), si.at(4), si.at(5));
    let two = T::of(2.0);
    let i1sq = i1 * i1;
    let i2sq = i2 * i2;
    let i3sq = i3 * i3;
    let p0 = (i1 * i2 * i3 + i1 * i5 - i1sq * i4 - i3sq) * i5;
    let p1 = i1sq * i2 * i5 + i1 * i2 * i3sq + i1 * i4 * i4 + i2 * i3 * i4
        - i1sq * i3 * i4
        - i1 * i2sq * i4
        - i3sq * i3
        - i4 * i5;
    let p2 = i1sq * i1 * i4 + i1 * i2sq * i2 + two * i1 * i3sq + i2 * i5
        - two * i1sq * i2 * i3
        - i1sq * i5
        - i2sq * i3
        - i3 * i4;
    let p3 = i1sq * i1 * i2 + i1 * i4 + two * i2 * i3 - i1sq * i3 - two * i1 * i2sq - i5;
    let p4 = i1 * i2 - i3;
    [p0, p1, p2, p3, p4]
}

/// Polynomial coefficients p₀…p₅ for dim 6, with shared monomials hoisted.
fn dim6_coeffs<T: Real>(si: &StretchInvariants<T>) -> [T; 6] {
    let (i1, i2, i3, i4, i5, i6) =
        (si.at(1), si.at(2), si.at(3), si.at(4), si.at(5), si.at(6));
    let two = T::of(2.0);
    let three = T::of(3.0);
    let i1sq = i1 * i1;
    let i1cu = i1sq * i1;
    let i2sq = i2 * i2;
    let i3sq = i3 * i3;
    let i4sq = i4 * i4;
    let i5sq = i5 * i5;
    let p0 = (i1 * i2 * i3 * i4 + two * i1 * i4 * i5 + i2 * i3 * i5 + i1sq * i2 * i6
        - i1 * i2sq * i5
        - i1 * i3 * i6
        - i1sq * i4sq
        - i3sq * i4
        - i5sq)
        * i6;
    let p1 = -i1cu * i5 * i6 + i1sq * i2 * i5sq + i1sq * i3 * i4 * i5 - i1sq * i4 * i4sq
        + i1sq * i6 * i6
        + i1 * i2sq * i3 * i6
        - i1 * i2sq * i4 * i5
        - i1 * i2 * i3sq * i5
        + i1 * i2 * i3 * i4sq
        - i1 * i3 * i4 * i6
        - two * i1 * i3 * i5sq
        + two * i1 * i4sq * i5
        - i2 * i3sq * i6
        + i2 * i3 * i4 * i5
        + i3sq * i3 * i5
        - i3sq * i4sq
        + i3 * i5 * i6
        - i4 * i5sq;
    let p2 = i1cu * i3 * i6 - i1cu * i4 * i5 - i1sq * i2sq * i6 + two * i1sq * i2 * i4sq
        - i1sq * i3sq * i4
        + i1sq * i5sq
        + i1 * i2sq * i2 * i5
        - two * i1 * i2sq * i3 * i4
        + i1 * i2 * i3sq * i3
        - two * i1 * i2 * i4 * i5
        + i1 * i3sq * i5
        - i1 * i5 * i6
        - i2sq * i3 * i5
        + two * i2 * i3sq * i4
        + i2 * i5sq
        - i3sq * i3sq
        + i3sq * i6
        - i3 * i4 * i5;
    let p3 = -i1sq * i1sq * i6 + i1cu * i2 * i5 + two * i1cu * i3 * i4 - i1sq * i2sq * i4
        - two * i1sq * i2 * i3sq
        + two * i1sq * i2 * i6
        - three * i1sq * i3 * i5
        - two * i1sq * i4sq
        + i1 * i2sq * i2 * i3
        - i1 * i2sq * i5
        + two * i1 * i2 * i3 * i4
        + two * i1 * i3sq * i3
        - i1 * i3 * i6
        + three * i1 * i4 * i5
        - i2sq * i3sq
        + two * i2 * i3 * i5
        - two * i3sq * i4
        - i5sq;
    let p4 = -i1sq * i1sq * i4 + i1cu * i2 * i3 + i1cu * i5 + two * i1sq * i2 * i4
        - i1sq * i3sq
        - i1sq * i6
        - two * i1 * i2sq * i3
        - i1 * i2 * i5
        + two * i2 * i3sq
        - i3 * i5;
    let p5 = i1 * i2 * i3 + i1 * i5 - i1sq * i4 - i3sq;
    [p0, p1, p2, p3, p4, p5]
}

/// U = C^{1/2} as a polynomial in C with coefficients from the invariants.
pub fn u_from_c<T: Real>(
    c: &SymTensor<T>,
    inv: &PrincipalInvariants<T>,
    si: &StretchInvariants<T>,
) -> Result<SymTensor<T>, Error> {
    if c.dim() != si.dim() {
        return Err(Error::DimMismatch { expected: si.dim(), got: c.dim() });
    }
    let coeffs = u_coeffs(inv, si)?;
    Ok(mat_poly(c, &coeffs))
}

/// U⁻¹ as a polynomial in C, from the Cayley–Hamilton elimination of C⁻¹.
pub fn uinv_from_c<T: Real>(
    c: &SymTensor<T>,
    inv: &PrincipalInvariants<T>,
    si: &StretchInvariants<T>,
) -> Result<SymTensor<T>, Error> {
    if c.dim() != si.dim() {
        return Err(Error::DimMismatch { expected: si.dim(), got: c.dim() });
    }
    let i = |k: usize| si.at(k);
    let cv = |k: usize| inv.at(k);
    let two = T::of(2.0);
    let coeffs: Vec<T> = match si.dim() {
        2 => {
            let d = nu(si)?.value * i(2); // i₁i₂
            vec![(cv(1) + i(2)) / d, -T::one() / d]
        }
        3 => {
            let d = nu(si)?.value;
            let s3 = i(3); // = √I₃
            vec![
                (cv(1) + i(2) + i(1) * cv(2) / s3) / d,
                -(T::one() + i(1) * cv(1) / s3) / d,
                i(1) / (s3 * d),
            ]
        }
        4 => {
            let d = nu(si)?.value;
            let s4 = i(4); // = √I₄
            let g = i(1) * i(2) - i(3);
            let p1 = i(1) * i(2) * i(2) - i(1) * i(1) * i(3) - i(2) * i(3) + i(1) * s4;
            let p2 = i(1) * i(1) * i(1) - two * i(1) * i(2) + i(3);
            vec![
                (p1 + g * cv(3) / s4) / d,
                -(p2 + g * cv(2) / s4) / d,
                (i(1) + g * cv(1) / s4) / d,
                -g / (s4 * d),
            ]
        }
        5 => {
            let d = nu(si)?.value;
            let [p0, p1, p2, p3, p4] = dim5_coeffs(si);
            let i5c = cv(5);
            vec![
                (p1 + p0 * cv(4) / i5c) / d,
                -(p2 + p0 * cv(3) / i5c) / d,
                (p3 + p0 * cv(2) / i5c) / d,
                -(p4 + p0 * cv(1) / i5c) / d,
                p0 / (i5c * d),
            ]
        }
        6 => {
            let d = nu(si)?.value;
            let [p0, p1, p2, p3, p4, p5] = dim6_coeffs(si);
            let i6c = cv(6);
            vec![
                (p1 + p0 * cv(5) / i6c) / d,
                -(p2 + p0 * cv(4) / i6c) / d,
                (p3 + p0 * cv(3) / i6c) / d,
                -(p4 + p0 * cv(2) / i6c) / d,
                (p5 + p0 * cv(1) / i6c) / d,
                -p0 / (i6c * d),
            ]
        }
        d => return Err(Error::DimUnsupported(d)),
    };
    Ok(mat_poly(c, &coeffs))
}

/// The factors of F = R·U, with U SPD and R orthogonal.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarFactors<T> {
    pub u: SymTensor<T>,
    pub u_inv: SymTensor<T>,
    pub r: Mat<T>,
    pub route: Route,
    pub degenerate: bool,
}

/// Polar decomposition by the closed-form route: C = FᵀF, U = C^{1/2},
/// R = F·U⁻¹.
pub fn polar_decompose<T: Real>(f: &Mat<T>) -> Result<PolarFactors<T>, Error> {
    let n = f.dim();
    let det = f.det();
    // scale-invariant singularity guard: |det F| against (‖F‖_F/√N)^N
    let typical = (f.frobenius_norm() / T::of(n as f64).sqrt()).powi(n as i32);
    if det.abs() <= T::of(1e-12) * typical.max(T::min_positive_value()) {
        return Err(Error::SingularF);
    }
    let c = f.gram();
    let inv = invariants_from_tensor(&c)?;
    let si = stretch_invariants(&inv)?;
    let u = u_from_c(&c, &inv, &si)?;
    let u_inv = uinv_from_c(&c, &inv, &si)?;
    let r = f.mul_sym(&u_inv);
    Ok(PolarFactors { u, u_inv, r, route: si.route(), degenerate: si.degenerate() })
}

//! Invariants of U = C^{1/2} from the invariants of C, in fully closed form
//! for dimensions 2, 3 and 4.

use crate::error::Error;
use crate::invariants::{polish_stretch_invariants, PrincipalInvariants, Route, StretchInvariants};
use crate::scalar::Real;
use crate::solvers::{solve_cubic_trig, solve_reduced_quartic, CubicStd, QuarticReduced, RootSet};

/// Relative tolerance on the dim-3 cross-check between the closed form and
/// the quartic's largest root (f64 arithmetic).
const CROSS_CHECK_REL: f64 = 1e-10;

/// Returns the largest squared stretch λ₁² and the equal-root flag for a
/// dim-3 characteristic cubic.
fn lambda1_squared<T: Real>(inv: &PrincipalInvariants<T>) -> Result<(T, bool), Error> {
    let (cubic, shift) = CubicStd::from_monic(-inv.at(1), inv.at(2), -inv.at(3));
    let degenerate = cubic.p <= T::of(1e-14) * shift * shift;
    let roots = solve_cubic_trig(&cubic, shift)?;
    Ok((roots.largest(), degenerate))
}

/// Dim 2: i₁ = √(I₁ + 2√I₂), i₂ = √I₂.
pub fn n2_stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    debug_assert_eq!(inv.dim(), 2);
    if inv.at(1) <= T::zero() || inv.at(2) <= T::zero() {
        return Err(Error::NotPositiveDefinite);
    }
    let i2 = inv.at(2).sqrt();
    let i1 = (inv.at(1) + T::of(2.0) * i2).sqrt();
    Ok(StretchInvariants::new(&[i1, i2], Route::Closed2, false))
}

/// Dim 3: λ₁ from the trigonometric characteristic cubic, then
/// i₁ = λ₁ + √(I₁ − λ₁² + 2√I₃/λ₁) and
/// i₂ = √I₃/λ₁ + λ₁·√(I₁ − λ₁² + 2√I₃/λ₁), i₃ = √I₃.
pub fn n3_stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    debug_assert_eq!(inv.dim(), 3);
    let (l1sq, degenerate) = lambda1_squared(inv)?;
    if l1sq <= T::zero() {
        return Err(Error::NotPositiveDefinite);
    }
    let l1 = l1sq.sqrt();
    let i3 = inv.at(3).sqrt();
    let inner = (inv.at(1) - l1sq + T::of(2.0) * i3 / l1).max(T::zero()).sqrt();
    let i1 = l1 + inner;
    let i2 = i3 / l1 + l1 * inner;
    let mut vals = [i1, i2, i3];
    polish_stretch_invariants(inv, &mut vals);
    Ok(StretchInvariants::new(&vals, Route::Closed3, degenerate))
}

/// Quartic in i₁ for dim 3: y⁴ − 2I₁y² − 8√I₃·y + (I₁² − 4I₂) = 0.
///
/// The y² coefficient is −2I₁: eliminating i₂ and i₃ from the identity
/// system forces it, the resolvent cubic only reduces to the characteristic
/// equation with it, and at I = (14, 49, 36) the residual at y = 6 is 0
/// with I₁ but −2520 with I₂.
pub fn n3_i1_quartic<T: Real>(inv: &PrincipalInvariants<T>) -> QuarticReduced<T> {
    debug_assert_eq!(inv.dim(), 3);
    QuarticReduced::new(
        -T::of(2.0) * inv.at(1),
        -T::of(8.0) * inv.at(3).sqrt(),
        inv.at(1) * inv.at(1) - T::of(4.0) * inv.at(2),
    )
}

/// Quartic in i₂ for dim 3: z⁴ − 2I₂z² − 8I₃·z + (I₂² − 4I₁I₃) = 0.
pub fn n3_i2_quartic<T: Real>(inv: &PrincipalInvariants<T>) -> QuarticReduced<T> {
    debug_assert_eq!(inv.dim(), 3);
    QuarticReduced::new(
        -T::of(2.0) * inv.at(2),
        -T::of(8.0) * inv.at(3),
        inv.at(2) * inv.at(2) - T::of(4.0) * inv.at(1) * inv.at(3),
    )
}

/// Solves the dim-3 i₁ quartic and checks its largest root against the
/// closed form; disagreement signals an implementation bug, not bad data.
pub fn n3_quartic_cross_check<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<RootSet<T>, Error> {
    let roots = solve_reduced_quartic(&n3_i1_quartic(inv))?;
    let closed = n3_stretch_invariants(inv)?;
    let i1 = closed.at(1);
    let tol = T::of(CROSS_CHECK_REL) * T::eps_ratio() * i1.abs().max(T::one());
    if (roots.largest() - i1).abs() > tol {
        return Err(Error::CrossCheckFailed);
    }
    Ok(roots)
}

/// All four roots of the dim-3 i₂ quartic, cross-checked the same way.
pub fn n3_i2_quartic_roots<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<RootSet<T>, Error> {
    let roots = solve_reduced_quartic(&n3_i2_quartic(inv))?;
    let closed = n3_stretch_invariants(inv)?;
    let i2 = closed.at(2);
    let tol = T::of(CROSS_CHECK_REL) * T::eps_ratio() * i2.abs().max(T::one());
    if (roots.largest() - i2).abs() > tol {
        return Err(Error::CrossCheckFailed);
    }
    Ok(roots)
}

/// Dim 4: i₂ is the largest root of a quartic whose resolvent cubic is
/// solved trigonometrically; i₁, i₃, i₄ follow by positive square roots.
pub fn n4_stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    debug_assert_eq!(inv.dim(), 4);
    let (i1c, i2c, i3c, i4c) = (inv.at(1), inv.at(2), inv.at(3), inv.at(4));
    if i4c <= T::zero() {
        return Err(Error::NotPositiveDefinite);
    }
    let s4 = i4c.sqrt();
    let shift = (i2c + T::of(6.0) * s4) * T::of(1.0 / 3.0);
    let p = (i2c * i2c - T::of(3.0) * i1c * i3c + T::of(12.0) * i4c) * T::of(1.0 / 3.0);
    let q = (T::of(2.0) * i2c * i2c * i2c - T::of(9.0) * i1c * i2c * i3c
        + T::of(27.0) * i1c * i1c * i4c
        + T::of(27.0) * i3c * i3c
        - T::of(72.0) * i2c * i4c)
        * T::of(1.0 / 27.0);
    let degenerate = p <= T::of(1e-14) * shift * shift;
    let n1 = if degenerate {
        shift
    } else {
        solve_cubic_trig(&CubicStd::new(p, q), shift)?.largest()
    };
    if n1 <= T::zero() {
        return Err(Error::NotPositiveDefinite);
    }
    let sn1 = n1.sqrt();
    let inner = (i2c + T::of(6.0) * s4 - n1 + T::of(2.0) * (i1c * s4 + i3c) / sn1)
        .max(T::zero())
        .sqrt();
    let i2 = sn1 + inner;
    let i1 = (i1c + T::of(2.0) * i2).sqrt();
    let i3 = (i3c + T::of(2.0) * i2 * s4).sqrt();
    let mut vals = [i1, i2, i3, s4];
    polish_stretch_invariants(inv, &mut vals);
    Ok(StretchInvariants::new(&vals, Route::Closed4, degenerate))
}

/// The dim-4 quartic in i₂ in reduced form, for root diagnostics.
pub fn n4_i2_quartic<T: Real>(inv: &PrincipalInvariants<T>) -> QuarticReduced<T> {
    debug_assert_eq!(inv.dim(), 4);
    let s4 = inv.at(4).sqrt();
    QuarticReduced::new(
        -T::of(2.0) * (inv.at(2) + T::of(6.0) * s4),
        -T::of(8.0) * (inv.at(1) * s4 + inv.at(3)),
        inv.at(2) * inv.at(2) - T::of(4.0) * inv.at(1) * inv.at(3)
            - T::of(4.0) * inv.at(2) * s4
            + T::of(4.0) * inv.at(4),
    )
}

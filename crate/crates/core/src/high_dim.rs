//! Invariants of U for dimensions 5 and 6, via the high-degree invariant
//! polynomials and the numeric elimination chain.
//!
//! Both evaluators work internally in a scaled variable (x/√I₁ for dim 5,
//! w/I₁ for dim 6) with the invariants normalised as Î_α = I_α/I₁^α, so the
//! dynamic range stays controlled for stretches up to 1e3 and beyond.

use crate::error::Error;
use crate::invariants::{
    identity_residuals, polish_stretch_invariants, PrincipalInvariants, Route, StretchInvariants,
};
use crate::scalar::Real;
use crate::solvers::{
    largest_root_scan, solve_cubic_general, solve_reduced_quartic, CubicRoots, QuarticReduced,
};

/// Relative identity-system tolerance at dim 5 (f64 arithmetic).
const IDENTITY_REL_DIM5: f64 = 1e-9;
/// Relative identity-system tolerance at dim 6 (f64 arithmetic).
const IDENTITY_REL_DIM6: f64 = 1e-8;
/// Branch-selection residual ceiling, relative to local scale.
const BRANCH_REL: f64 = 1e-6;
/// Downward-scan resolution; a single retry uses 32× finer steps.
const SCAN_STEPS: usize = 1024;
const SCAN_STEPS_FINE: usize = 32768;

fn horner<T: Real>(coeffs: &[T], x: T) -> T {
    let mut acc = T::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn horner_abs<T: Real>(coeffs: &[T], x: T) -> T {
    let ax = x.abs();
    let mut acc = T::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * ax + c.abs();
    }
    acc
}

/// Invariants normalised by powers of I₁ so that Î₁ = 1.
fn normalized<T: Real>(inv: &PrincipalInvariants<T>) -> ([T; 6], T) {
    let i1 = inv.at(1);
    let mut out = [T::zero(); 6];
    let mut p = i1;
    for k in 1..=inv.dim() {
        out[k - 1] = inv.at(k) / p;
        p = p * i1;
    }
    (out, i1)
}

/// The three polynomials R, S, T whose combination T² − 64S²R vanishes at
/// every even-minus-sign sum of the five stretches. Coefficients are stored
/// ascending in x; R and S have degree 5, T degree 10.
#[derive(Clone, Debug, PartialEq)]
pub struct N5PolyParts<T> {
    pub r: [T; 6],
    pub s: [T; 6],
    pub t: [T; 11],
}

impl<T: Real> N5PolyParts<T> {
    /// Builds the coefficient lists from the invariants of C, with i₅ = √I₅.
    pub fn new(inv: &PrincipalInvariants<T>) -> Self {
        debug_assert_eq!(inv.dim(), 5);
        let (c1, c2, c3, c4, c5) = (inv.at(1), inv.at(2), inv.at(3), inv.at(4), inv.at(5));
        let s5 = c5.sqrt();
        let z = T::zero();
        let b = c1 * c1 - T::of(4.0) * c2;
        let r = [
            T::of(4.0) * c5,
            b * s5,
            T::of(4.0) * c4,
            -T::of(2.0) * c1 * s5,
            z,
            s5,
        ];
        let s = [-T::of(8.0) * s5, -b, z, -T::of(2.0) * c1, z, T::of(3.0)];
        let t = [
            T::of(128.0) * c5,
            T::of(32.0) * b * s5,
            c1 * c1 * c1 * c1 - T::of(8.0) * c1 * c1 * c2
                + T::of(16.0) * c2 * c2
                + T::of(64.0) * c4,
            z,
            -T::of(4.0) * (c1 * c1 * c1 - T::of(4.0) * c1 * c2 + T::of(16.0) * c3),
            T::of(96.0) * s5,
            T::of(6.0) * c1 * c1 - T::of(8.0) * c2,
            z,
            -T::of(4.0) * c1,
            z,
            T::one(),
        ];
        Self { r, s, t }
    }

    /// (R(x), S(x), T(x)).
    pub fn eval_each(&self, x: T) -> (T, T, T) {
        (horner(&self.r, x), horner(&self.s, x), horner(&self.t, x))
    }

    /// T(x)² − 64·S(x)²·R(x), together with a cancellation-free magnitude
    /// computed from absolute coefficient values.
    pub fn eval_composite(&self, x: T) -> (T, T) {
        let (r, s, t) = self.eval_each(x);
        let ra = horner_abs(&self.r, x);
        let sa = horner_abs(&self.s, x);
        let ta = horner_abs(&self.t, x);
        let c64 = T::of(64.0);
        (t * t - c64 * s * s * r, ta * ta + c64 * sa * sa * ra)
    }

    /// Expanded coefficients of T² − 64S²R (degree 20, ascending).
    pub fn composite_coeffs(&self) -> [T; 21] {
        fn conv<T: Real>(a: &[T], b: &[T], out: &mut [T]) {
            for v in out.iter_mut() {
                *v = T::zero();
            }
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    out[i + j] = out[i + j] + ai * bj;
                }
            }
        }
        let mut tt = [T::zero(); 21];
        conv(&self.t, &self.t, &mut tt);
        let mut ss = [T::zero(); 11];
        conv(&self.s, &self.s, &mut ss);
        let mut ssr = [T::zero(); 16];
        conv(&ss, &self.r, &mut ssr);
        let c64 = T::of(64.0);
        for (k, &v) in ssr.iter().enumerate() {
            tt[k] = tt[k] - c64 * v;
        }
        tt
    }
}

fn n5_normalized_parts<T: Real>(inv: &PrincipalInvariants<T>) -> N5PolyParts<T> {
    let (hat, _) = normalized(inv);
    let hat_inv = PrincipalInvariants::new(&hat[..5]).expect("normalized invariants");
    N5PolyParts::new(&hat_inv)
}

/// Deflated degree-16 polynomial for i₁ at dim 5: (T² − 64S²R)/x⁴,
/// evaluated in the scaled variable x/√I₁. Valid for any x ≠ 0; the catalog
/// of genuine roots contains negative values.
pub fn n5_poly_eval<T: Real>(inv: &PrincipalInvariants<T>, x: T) -> T {
    n5_poly_eval_scaled(inv, x).0
}

/// As [`n5_poly_eval`], also returning the local cancellation-free magnitude
/// the value should be compared against.
pub fn n5_poly_eval_scaled<T: Real>(inv: &PrincipalInvariants<T>, x: T) -> (T, T) {
    debug_assert_eq!(inv.dim(), 5);
    let parts = n5_normalized_parts(inv);
    let i1 = inv.at(1);
    let s_hat = x / i1.sqrt();
    let (v, m) = parts.eval_composite(s_hat);
    // value = I₁¹⁰ v̂ / x⁴ = I₁⁸ v̂ / ŝ⁴
    let rescale = i1.powi(8) / (s_hat * s_hat * s_hat * s_hat);
    (v * rescale, m * rescale.abs().max(T::min_positive_value()))
}

fn n5_recover<T: Real>(
    inv: &PrincipalInvariants<T>,
    i1: T,
) -> Result<StretchInvariants<T>, Error> {
    let i5 = inv.at(5).sqrt();
    let i2 = (i1 * i1 - inv.at(1)) * T::of(0.5);
    let a = (inv.at(2) - i2 * i2) * T::of(0.5);
    // Quadratic in i₃ from eliminating i₄ between the remaining identities:
    // i₁²·i₃² + 2(a·i₁ − i₅)·i₃ + (a² − I₄) = 0, then i₄ = a + i₁i₃.
    let qa = i1 * i1;
    let qb = T::of(2.0) * (a * i1 - i5);
    let qc = a * a - inv.at(4);
    let disc = (qb * qb - T::of(4.0) * qa * qc).max(T::zero()).sqrt();
    let qq = if qb >= T::zero() { -(qb + disc) * T::of(0.5) } else { (disc - qb) * T::of(0.5) };
    let mut candidates = [T::zero(); 2];
    if qq != T::zero() {
        candidates[0] = qq / qa;
        candidates[1] = qc / qq;
    } else {
        candidates[0] = -qb / (T::of(2.0) * qa);
        candidates[1] = candidates[0];
    }
    let mut best: Option<(T, T, T)> = None;
    for &i3 in &candidates {
        let i4 = a + i1 * i3;
        let res = (i3 * i3 - inv.at(3) - T::of(2.0) * i2 * i4 + T::of(2.0) * i1 * i5).abs();
        if best.map_or(true, |(r, _, _)| res < r) {
            best = Some((res, i3, i4));
        }
    }
    let (res, i3, i4) = best.expect("two candidates evaluated");
    let scale3 = i3 * i3 + inv.at(3).abs()
        + T::of(2.0) * (i2 * i4).abs()
        + T::of(2.0) * (i1 * i5).abs();
    if res > T::of(BRANCH_REL) * scale3.max(T::one()) {
        return Err(Error::BranchAmbiguous);
    }
    let mut vals = [i1, i2, i3, i4, i5];
    polish_stretch_invariants(inv, &mut vals);
    Ok(StretchInvariants::new(&vals, Route::Poly16N5, false))
}

fn identities_hold<T: Real>(inv: &PrincipalInvariants<T>, si: &StretchInvariants<T>, rel: f64) -> bool {
    let tol = T::of(rel) * T::eps_ratio();
    identity_residuals(inv, si.values())
        .iter()
        .all(|&(r, s)| r.abs() <= tol * s)
}

/// Invariants of U at dim 5: i₁ is the largest root of the deflated
/// degree-16 polynomial on [√I₁, √(5I₁)]; the rest follow from the identity
/// system, with the i₃ branch picked by residual minimisation.
pub fn n5_stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    debug_assert_eq!(inv.dim(), 5);
    let parts = n5_normalized_parts(inv);
    let sqrt_i1 = inv.at(1).sqrt();
    let lo = T::one() - T::of(1e-9);
    let hi = T::of(5.0_f64.sqrt()) * (T::one() + T::of(1e-9));
    let mut last_err = Error::NoRootInBracket;
    for steps in [SCAN_STEPS, SCAN_STEPS_FINE] {
        let s_star = match largest_root_scan(|s| parts.eval_composite(s).0, lo, hi, steps) {
            Ok(s) => s,
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        match n5_recover(inv, s_star * sqrt_i1) {
            Ok(si) if identities_hold(inv, &si, IDENTITY_REL_DIM5) => return Ok(si),
            Ok(_) => last_err = Error::CrossCheckFailed,
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Coefficients of the dim-6 elimination chain evaluated at a trial w = i₁².
/// Each field is a polynomial in w of the degree its subscript names.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct N6ElimState<T> {
    pub i2: T,
    pub i6: T,
    pub a2: T,
    pub a4: T,
    pub a6: T,
    pub b2: T,
    pub b4: T,
    pub b6: T,
    pub b8: T,
    pub c4: T,
    pub c6: T,
    pub c8: T,
    pub d12: T,
    pub d14: T,
}

impl<T: Real> N6ElimState<T> {
    /// Evaluates the chain at w for the given invariants of C.
    pub fn at(inv: &PrincipalInvariants<T>, w: T) -> Self {
        debug_assert_eq!(inv.dim(), 6);
        let vals = [inv.at(1), inv.at(2), inv.at(3), inv.at(4), inv.at(5), inv.at(6)];
        elim_chain(&vals, inv.at(6).sqrt(), w)
    }

    /// −2³⁰(c₈d₁₂² − c₆d₁₂d₁₄ + c₄d₁₄²) plus the cancellation-free magnitude
    /// of the same combination.
    pub fn e32(&self) -> (T, T) {
        let two30 = T::of(1024.0 * 1024.0 * 1024.0);
        let t1 = self.c8 * self.d12 * self.d12;
        let t2 = self.c6 * self.d12 * self.d14;
        let t3 = self.c4 * self.d14 * self.d14;
        (-two30 * (t1 - t2 + t3), two30 * (t1.abs() + t2.abs() + t3.abs()))
    }
}

fn elim_chain<T: Real>(c: &[T; 6], i6: T, w: T) -> N6ElimState<T> {
    let half = T::of(0.5);
    let two = T::of(2.0);
    let i2 = (w - c[0]) * half;
    let a = i2 * i2 - c[1];
    let b = c[2] + two * i6;
    let w2 = w * w;
    let w3 = w2 * w;

    let a2 = T::of(1.5) * a - two * w * i2 + w2;
    let a4 = T::of(0.75) * a * a - w * i2 * a - w * b;
    let a6 = a * a * a * T::of(0.125) - half * w * a * b + w2 * (two * i2 * i6 - c[3]);

    let u = a - two * w * i2;
    let v = a * a - T::of(4.0) * w * b;
    let b2 = two * u;
    let b4 = u * u + half * a * a - two * w * b;
    let b6 = half * u * v - T::of(8.0) * w3 * i6;
    let b8 = v * v * T::of(1.0 / 16.0) - T::of(4.0) * w3 * c[4];

    let ba = b2 - a2;
    let c4 = ba * a2 - (b4 - a4);
    let c6 = ba * a4 - (b6 - a6);
    let c8 = ba * a6 - b8;

    let ac4 = a2 * c4 - c6;
    let d12 = (a4 * c4 - c8) * c4 - ac4 * c6;
    let d14 = a6 * c4 * c4 - ac4 * c8;

    N6ElimState { i2, i6, a2, a4, a6, b2, b4, b6, b8, c4, c6, c8, d12, d14 }
}

fn n6_normalized<T: Real>(inv: &PrincipalInvariants<T>) -> ([T; 6], T, T) {
    let (hat, i1) = normalized(inv);
    let i6_hat = hat[5].max(T::zero()).sqrt();
    (hat, i6_hat, i1)
}

/// Degree-32 polynomial in w = i₁² for dim 6, evaluated through the
/// elimination chain (never expanded symbolically). Normalised so the
/// leading term is 121·w³².
pub fn n6_e32_eval<T: Real>(inv: &PrincipalInvariants<T>, w: T) -> T {
    n6_e32_eval_scaled(inv, w).0
}

/// As [`n6_e32_eval`], also returning the local magnitude scale: the
/// cancellation-free size of the chain combination, floored by the
/// leading-term size 121·max(|w|, I₁)³².
pub fn n6_e32_eval_scaled<T: Real>(inv: &PrincipalInvariants<T>, w: T) -> (T, T) {
    debug_assert_eq!(inv.dim(), 6);
    let (hat, i6_hat, i1) = n6_normalized(inv);
    let w_hat = w / i1;
    let state = elim_chain(&hat, i6_hat, w_hat);
    let (v, m) = state.e32();
    let rescale = i1.powi(32);
    let floor = T::of(121.0) * w_hat.abs().max(T::one()).powi(32);
    (v * rescale, m.max(floor) * rescale)
}

/// Coefficients (descending) of the spurious-root cubic
/// 11w³ − 7I₁w² + (5I₁² − 12I₂)w − (I₁³ − 4I₁I₂ + 8I₃ + 16i₆) = 0.
pub fn n6_spurious_cubic_coeffs<T: Real>(inv: &PrincipalInvariants<T>) -> [T; 4] {
    debug_assert_eq!(inv.dim(), 6);
    let (c1, c2, c3) = (inv.at(1), inv.at(2), inv.at(3));
    let i6 = inv.at(6).sqrt();
    [
        T::of(11.0),
        -T::of(7.0) * c1,
        T::of(5.0) * c1 * c1 - T::of(12.0) * c2,
        -(c1 * c1 * c1 - T::of(4.0) * c1 * c2 + T::of(8.0) * c3 + T::of(16.0) * i6),
    ]
}

/// Roots of the spurious cubic; its real roots are squared factors of the
/// degree-32 polynomial and must be excluded as i₁² candidates.
pub fn n6_spurious_cubic<T: Real>(inv: &PrincipalInvariants<T>) -> CubicRoots<T> {
    let [a3, a2, a1, a0] = n6_spurious_cubic_coeffs(inv);
    solve_cubic_general(a3, a2, a1, a0)
}

struct N6Candidate<T> {
    i_vals: [T; 6],
    joint_residual: T,
}

fn n6_candidate<T: Real>(inv: &PrincipalInvariants<T>, w: T, i4: T) -> N6Candidate<T> {
    let i1 = w.sqrt();
    let i2 = (w - inv.at(1)) * T::of(0.5);
    let i6 = inv.at(6).sqrt();
    let i5 = (inv.at(5) + T::of(2.0) * i4 * i6).max(T::zero()).sqrt();
    let i3 = (i2 * i2 - inv.at(2) + T::of(2.0) * i4) / (T::of(2.0) * i1);
    let two = T::of(2.0);
    let r3 = i3 * i3 - inv.at(3) - two * i2 * i4 + two * i1 * i5 - two * i6;
    let s3 = i3 * i3 + inv.at(3).abs() + (two * i2 * i4).abs() + (two * i1 * i5).abs()
        + (two * i6).abs();
    let r4 = i4 * i4 - inv.at(4) - two * i3 * i5 + two * i2 * i6;
    let s4 = i4 * i4 + inv.at(4).abs() + (two * i3 * i5).abs() + (two * i2 * i6).abs();
    N6Candidate {
        i_vals: [i1, i2, i3, i4, i5, i6],
        joint_residual: r3.abs() / s3.max(T::one()) + r4.abs() / s4.max(T::one()),
    }
}

fn n6_recover<T: Real>(
    inv: &PrincipalInvariants<T>,
    w: T,
) -> Result<StretchInvariants<T>, Error> {
    let (hat, i6_hat, i1c) = n6_normalized(inv);
    let w_hat = w / i1c;
    let state = elim_chain(&hat, i6_hat, w_hat);
    // d₁₂ scale from the magnitudes of its constituent products.
    let d12_scale = (state.a4 * state.c4).abs() + state.c8.abs() * state.c4.abs()
        + (state.a2 * state.c4).abs() * state.c6.abs()
        + state.c6.abs() * state.c6.abs();
    let degenerate =
        state.d12.abs() <= T::of(1e-12) * T::eps_ratio() * d12_scale.max(T::min_positive_value());
    let i1sq = i1c * i1c;
    if !degenerate {
        let i4 = -state.d14 / state.d12 * i1sq;
        let mut cand = n6_candidate(inv, w, i4);
        polish_stretch_invariants(inv, &mut cand.i_vals);
        return Ok(StretchInvariants::new(&cand.i_vals, Route::Poly32N6, false));
    }
    // Fallback: solve the quartic in i₄ from the b-coefficients and keep the
    // root whose joint residual of the two unused identities is smallest.
    let (b2, b4, b6, b8) = (state.b2, state.b4, state.b6, state.b8);
    let p = b4 - T::of(3.0 / 8.0) * b2 * b2;
    let q = b6 - T::of(0.5) * b2 * b4 + T::of(0.125) * b2 * b2 * b2;
    let r = b8 - T::of(0.25) * b2 * b6 + T::of(1.0 / 16.0) * b2 * b2 * b4
        - T::of(3.0 / 256.0) * b2 * b2 * b2 * b2;
    let roots = solve_reduced_quartic(&QuarticReduced::new(p, q, r))
        .map_err(|_| Error::D12Degenerate)?;
    let mut best: Option<N6Candidate<T>> = None;
    for &y in roots.roots() {
        let i4 = (y - T::of(0.25) * b2) * i1sq;
        let cand = n6_candidate(inv, w, i4);
        if best.as_ref().map_or(true, |b| cand.joint_residual < b.joint_residual) {
            best = Some(cand);
        }
    }
    let mut best = best.ok_or(Error::D12Degenerate)?;
    polish_stretch_invariants(inv, &mut best.i_vals);
    Ok(StretchInvariants::new(&best.i_vals, Route::Poly32N6, true))
}

/// Invariants of U at dim 6: w = i₁² is the largest root of the degree-32
/// evaluator on [I₁, 6I₁], checked against the spurious cubic; i₄ comes from
/// the linear elimination step, the rest from the identity system.
pub fn n6_stretch_invariants<T: Real>(
    inv: &PrincipalInvariants<T>,
) -> Result<StretchInvariants<T>, Error> {
    debug_assert_eq!(inv.dim(), 6);
    let (hat, i6_hat, i1c) = n6_normalized(inv);
    let lo = T::one() - T::of(1e-12);
    let hi = T::of(6.0) * (T::one() + T::of(1e-9));
    let spurious = n6_spurious_cubic(inv);
    let mut last_err = Error::NoRootInBracket;
    for steps in [SCAN_STEPS, SCAN_STEPS_FINE] {
        let w_hat = match largest_root_scan(
            |w| elim_chain(&hat, i6_hat, w).e32().0,
            lo,
            hi,
            steps,
        ) {
            Ok(w) => w,
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        let w = w_hat * i1c;
        let collides = spurious
            .real_roots()
            .iter()
            .any(|&r| (w - r).abs() <= T::of(1e-9) * w.abs().max(r.abs()));
        match n6_recover(inv, w) {
            Ok(si) if identities_hold(inv, &si, IDENTITY_REL_DIM6) => return Ok(si),
            Ok(_) => {
                // A genuine i₁² passes the identity system even when it
                // happens to coincide with a spurious root; failing it while
                // colliding means the scan latched onto a spurious crossing.
                last_err = if collides { Error::SpuriousCollision } else { Error::CrossCheckFailed };
            }
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{invariants_from_stretches, Stretches};

    fn inv_of(stretches: &[f64]) -> PrincipalInvariants<f64> {
        invariants_from_stretches(&Stretches::new(stretches).unwrap())
    }

    #[test]
    fn dim5_poly_known_roots() {
        let inv = inv_of(&[5.0, 4.0, 3.0, 2.0, 1.0]);
        for x in [15.0, 9.0] {
            let (v, scale) = n5_poly_eval_scaled(&inv, x);
            assert!(v.abs() <= 1e-8 * scale, "x={x}: {v:.3e} vs scale {scale:.3e}");
        }
        let ones = inv_of(&[1.0; 5]);
        for x in [5.0, 1.0] {
            let (v, scale) = n5_poly_eval_scaled(&ones, x);
            assert!(v.abs() <= 1e-8 * scale);
        }
    }

    #[test]
    fn dim5_parts_leading_coefficients() {
        let inv = inv_of(&[2.0, 1.5, 1.0, 0.7, 0.3]);
        let parts = N5PolyParts::new(&inv);
        assert_eq!(parts.t[10], 1.0);
        assert!((parts.r[5] - inv.at(5).sqrt()).abs() < 1e-15);
        // composite has zero coefficients below x⁴
        let comp = parts.composite_coeffs();
        let scale = comp.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        for c in &comp[..4] {
            assert!(c.abs() <= 1e-9 * scale, "low-order coefficient {c:.3e}");
        }
    }

    #[test]
    fn dim5_invariants_equal_and_generic() {
        let si = n5_stretch_invariants(&inv_of(&[1.0; 5])).unwrap();
        for (got, want) in si.values().iter().zip([5.0, 10.0, 10.0, 5.0, 1.0]) {
            assert!((got - want).abs() < 1e-9 * want, "got {got}, want {want}");
        }
        let si = n5_stretch_invariants(&inv_of(&[5.0, 4.0, 3.0, 2.0, 1.0])).unwrap();
        for (got, want) in si.values().iter().zip([15.0, 85.0, 225.0, 274.0, 120.0]) {
            assert!((got - want).abs() < 1e-8 * want, "got {got}, want {want}");
        }
        assert_eq!(si.route(), Route::Poly16N5);
        // elementary symmetric functions of (2,1,1,1,1)
        let si = n5_stretch_invariants(&inv_of(&[2.0, 1.0, 1.0, 1.0, 1.0])).unwrap();
        for (got, want) in si.values().iter().zip([6.0, 14.0, 16.0, 9.0, 2.0]) {
            assert!((got - want).abs() < 1e-10 * want, "got {got}, want {want}");
        }
    }

    #[test]
    fn dim6_e32_reference_roots() {
        let inv = inv_of(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let (v, scale) = n6_e32_eval_scaled(&inv, 441.0);
        assert!(v.abs() <= 1e-6 * scale, "{v:.3e} vs {scale:.3e}");

        let ones = inv_of(&[1.0; 6]);
        for w in [36.0, 4.0] {
            let (v, scale) = n6_e32_eval_scaled(&ones, w);
            assert!(v.abs() <= 1e-6 * scale, "w={w}: {v:.3e} vs {scale:.3e}");
        }

        // zero signed sum 1+2+3−5+6−7 puts a genuine root at w = 0
        let inv3 = inv_of(&[1.0, 2.0, 3.0, 5.0, 6.0, 7.0]);
        let (v, scale) = n6_e32_eval_scaled(&inv3, 0.0);
        assert!(v.abs() <= 1e-6 * scale);
    }

    #[test]
    fn dim6_spurious_cubic_integer_case() {
        let ones = inv_of(&[1.0; 6]);
        let coeffs = n6_spurious_cubic_coeffs(&ones);
        assert_eq!(coeffs, [11.0, -42.0, 0.0, -32.0]);
        match n6_spurious_cubic(&ones) {
            CubicRoots::OneReal { real, .. } => assert!((real - 4.0).abs() < 1e-12),
            other => panic!("expected one real root, got {other:?}"),
        }
    }

    #[test]
    fn dim6_spurious_cubic_factored_case() {
        // λ = 1..6: 11w³ − 637w² + 5369w − 27783 = (w − 49)(11w² − 98w + 567)
        let inv = inv_of(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let coeffs = n6_spurious_cubic_coeffs(&inv);
        assert_eq!(coeffs, [11.0, -637.0, 5369.0, -27783.0]);
        match n6_spurious_cubic(&inv) {
            CubicRoots::OneReal { real, .. } => assert!((real - 49.0).abs() < 1e-10),
            other => panic!("expected one real root, got {other:?}"),
        }
        // λ = (1,1,1,2,5,7): 11w³ − 567w² + 11709w − 40553
        let inv5 = inv_of(&[1.0, 1.0, 1.0, 2.0, 5.0, 7.0]);
        assert_eq!(n6_spurious_cubic_coeffs(&inv5), [11.0, -567.0, 11709.0, -40553.0]);
    }

    #[test]
    fn dim6_invariants_equal_and_generic() {
        let si = n6_stretch_invariants(&inv_of(&[1.0; 6])).unwrap();
        for (got, want) in si.values().iter().zip([6.0, 15.0, 20.0, 15.0, 6.0, 1.0]) {
            assert!((got - want).abs() < 1e-8 * want, "got {got}, want {want}");
        }
        let si = n6_stretch_invariants(&inv_of(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0])).unwrap();
        for (got, want) in si.values().iter().zip([21.0, 175.0, 735.0, 1624.0, 1764.0, 720.0]) {
            assert!((got - want).abs() < 1e-8 * want, "got {got}, want {want}");
        }
        let si = n6_stretch_invariants(&inv_of(&[1.0, 2.0, 4.0, 5.0, 7.0, 8.0])).unwrap();
        assert!((si.at(1) - 27.0).abs() < 1e-8 * 27.0);
    }

    #[test]
    fn dim6_elim_state_degree_scaling() {
        // Under λ → cλ each subscript-k coefficient scales by c^{2k}.
        let inv = inv_of(&[2.2, 1.7, 1.3, 0.9, 0.6, 0.4]);
        let c = 1.7_f64;
        let scaled = inv_of(&[2.2 * c, 1.7 * c, 1.3 * c, 0.9 * c, 0.6 * c, 0.4 * c]);
        let w = 1.3 * inv.at(1);
        let s1 = N6ElimState::at(&inv, w);
        let s2 = N6ElimState::at(&scaled, w * c * c);
        let c2 = c * c;
        let pairs: [(f64, f64, i32); 12] = [
            (s1.a2, s2.a2, 2),
            (s1.a4, s2.a4, 4),
            (s1.a6, s2.a6, 6),
            (s1.b2, s2.b2, 2),
            (s1.b4, s2.b4, 4),
            (s1.b6, s2.b6, 6),
            (s1.b8, s2.b8, 8),
            (s1.c4, s2.c4, 4),
            (s1.c6, s2.c6, 6),
            (s1.c8, s2.c8, 8),
            (s1.d12, s2.d12, 12),
            (s1.d14, s2.d14, 14),
        ];
        for (raw, scaled_val, deg) in pairs {
            let want = raw * c2.powi(deg);
            assert!(
                (scaled_val - want).abs() <= 1e-10 * want.abs().max(1.0),
                "degree {deg}: {scaled_val:.6e} vs {want:.6e}"
            );
        }
    }
}

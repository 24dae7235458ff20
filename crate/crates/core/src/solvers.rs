//! Real-root machinery: the trigonometric cubic, the resolvent-based reduced
//! quartic, and a bracketed largest-root finder for high-degree polynomials.

use crate::error::Error;
use crate::invariants::PrincipalInvariants;
use crate::scalar::Real;

/// Reduced cubic y³ = p·y + q. For cubics arising from SPD tensors p ≥ 0 and
/// the discriminant (q/2)² − (p/3)³ is non-positive (all roots real).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicStd<T> {
    pub p: T,
    pub q: T,
}

impl<T: Real> CubicStd<T> {
    pub fn new(p: T, q: T) -> Self {
        Self { p, q }
    }

    /// Reduced form of the monic cubic x³ + a₂x² + a₁x + a₀ under
    /// x = −a₂/3 + y, together with the shift −a₂/3.
    pub fn from_monic(a2: T, a1: T, a0: T) -> (Self, T) {
        let third = T::of(1.0 / 3.0);
        let shift = -a2 * third;
        let p = a2 * a2 * third - a1;
        let q = a2 * a1 * third - T::of(2.0 / 27.0) * a2 * a2 * a2 - a0;
        (Self { p, q }, shift)
    }

    pub fn discriminant(&self) -> T {
        let half_q = self.q * T::of(0.5);
        let p3 = self.p * T::of(1.0 / 3.0);
        half_q * half_q - p3 * p3 * p3
    }
}

/// Reduced quartic y⁴ + p·y² + q·y + r = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarticReduced<T> {
    pub p: T,
    pub q: T,
    pub r: T,
}

impl<T: Real> QuarticReduced<T> {
    pub fn new(p: T, q: T, r: T) -> Self {
        Self { p, q, r }
    }

    /// Monic coefficients (a₂, a₁, a₀) of the resolvent cubic
    /// n³ + (p/2)n² + ((p/2)² − r)n/4 − (q/8)² = 0.
    pub fn resolvent_cubic(&self) -> (T, T, T) {
        let half_p = self.p * T::of(0.5);
        let q8 = self.q * T::of(0.125);
        (half_p, (half_p * half_p - self.r) * T::of(0.25), -(q8 * q8))
    }

    pub fn eval(&self, y: T) -> T {
        ((y * y + self.p) * y + self.q) * y + self.r
    }
}

/// Real roots sorted in non-increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet<T> {
    roots: Vec<T>,
}

impl<T: Real> RootSet<T> {
    pub fn new(mut roots: Vec<T>) -> Self {
        roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self { roots }
    }

    pub fn roots(&self) -> &[T] {
        &self.roots
    }

    pub fn largest(&self) -> T {
        self.roots[0]
    }

    /// Groups roots equal within `tol` into (value, multiplicity) pairs.
    pub fn multiplicities(&self, tol: T) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize)> = Vec::new();
        for &r in &self.roots {
            match out.last_mut() {
                Some((v, m)) if (*v - r).abs() <= tol => *m += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }
}

/// Relative threshold below which the reduced cubic is treated as having a
/// triple root at the shift.
const DEGENERATE_P_REL: f64 = 1e-14;
/// Relative slack on a positive discriminant before declaring complex roots.
const COMPLEX_DISC_REL: f64 = 1e-10;

/// Three real roots of x³ = shift-translated reduced cubic, by the
/// arccos/cos formulas. The θ₁/θ₂/θ₃ branch assignment keeps the returned
/// roots in non-increasing order. Roots are polished by a guarded Newton
/// step on the translated monic cubic.
pub fn solve_cubic_trig<T: Real>(c: &CubicStd<T>, shift: T) -> Result<RootSet<T>, Error> {
    let scale = (c.p.abs() * T::of(1.0 / 3.0)).powi(3).max(c.q.abs() * c.q.abs() * T::of(0.25));
    let disc = c.discriminant();
    if disc > T::of(COMPLEX_DISC_REL) * scale.max(T::min_positive_value()) {
        return Err(Error::ComplexRoots);
    }
    // Equal-root regime: p of order rounding noise produces 0/0 in the angle.
    if c.p <= T::of(DEGENERATE_P_REL) * shift * shift {
        return Ok(RootSet::new(vec![shift; 3]));
    }
    let p3 = c.p * T::of(1.0 / 3.0);
    let arg = (c.q * T::of(0.5)) / (p3 * p3 * p3).sqrt();
    let arg = arg.min(T::one()).max(-T::one());
    let theta1 = arg.acos() * T::of(1.0 / 3.0);
    let two_pi_3 = T::of(2.0) * T::FRAC_PI_3();
    let amp = T::of(2.0) * p3.sqrt();
    let mut roots = [
        shift + amp * theta1.cos(),
        shift + amp * (theta1 - two_pi_3).cos(),
        shift + amp * (theta1 + two_pi_3).cos(),
    ];
    // One guarded Newton step per root on x³ - (shift-form) cubic: restores
    // the digits the arccos loses near double roots.
    for x in roots.iter_mut() {
        let y = *x - shift;
        let f = y * y * y - c.p * y - c.q;
        let df = T::of(3.0) * y * y - c.p;
        if df.abs() > T::epsilon() * (y * y + c.p.abs()) {
            let step = f / df;
            let y2 = y - step;
            let f2 = y2 * y2 * y2 - c.p * y2 - c.q;
            if f2.abs() < f.abs() {
                *x = shift + y2;
            }
        }
    }
    Ok(RootSet::new(roots.to_vec()))
}

/// Discriminant of the dim-3 characteristic cubic in terms of the principal
/// invariants: −(1/108)[I₁²I₂² + 18I₁I₂I₃ − 4I₁³I₃ − 4I₂³ − 27I₃²].
/// Equals −(1/108)·Π(λᵢ² − λⱼ²)², so it vanishes only when at least two
/// stretches coincide.
pub fn cubic_discriminant<T: Real>(inv: &PrincipalInvariants<T>) -> T {
    debug_assert_eq!(inv.dim(), 3);
    let (i1, i2, i3) = (inv.at(1), inv.at(2), inv.at(3));
    let four = T::of(4.0);
    let bracket = i1 * i1 * i2 * i2 + T::of(18.0) * i1 * i2 * i3
        - four * i1 * i1 * i1 * i3
        - four * i2 * i2 * i2
        - T::of(27.0) * i3 * i3;
    -bracket * T::of(1.0 / 108.0)
}

/// All four real roots of a reduced quartic via its resolvent cubic:
/// roots are ±√n₁ ±√n₂ ±√n₃ with an even number of minus signs, under the
/// sign convention √n₁√n₂√n₃ = −q/8 (the smallest square root flips sign
/// when −q/8 < 0). Tiny negative resolvent roots are clamped to zero.
pub fn solve_reduced_quartic<T: Real>(q: &QuarticReduced<T>) -> Result<RootSet<T>, Error> {
    let (a2, a1, a0) = q.resolvent_cubic();
    let (cubic, shift) = CubicStd::from_monic(a2, a1, a0);
    let ns = solve_cubic_trig(&cubic, shift).map_err(|e| match e {
        Error::ComplexRoots => Error::ResolventComplex,
        other => other,
    })?;
    let n_scale = ns.roots().iter().fold(T::zero(), |m, &n| m.max(n.abs()));
    let eps = T::of(1e-10) * n_scale.max(T::min_positive_value());
    // Roots within noise of zero are clamped before square-rooting, on both
    // sides: sqrt turns +1e-16 of rounding into a 1e-8 error otherwise.
    let clamp = T::of(1e-13) * T::eps_ratio() * n_scale;
    let mut s = [T::zero(); 3];
    for (k, &n) in ns.roots().iter().enumerate() {
        if n < -eps {
            return Err(Error::ResolventComplex);
        }
        s[k] = if n.abs() <= clamp { T::zero() } else { n.max(T::zero()).sqrt() };
    }
    // s[] is descending; enforce s₁s₂s₃ = −q/8 by flipping the smallest.
    if -q.q * T::of(0.125) < T::zero() {
        s[2] = -s[2];
    }
    let roots = vec![
        s[0] + s[1] + s[2],
        s[0] - s[1] - s[2],
        -s[0] + s[1] - s[2],
        -s[0] - s[1] + s[2],
    ];
    Ok(RootSet::new(roots))
}

/// Roots of a general cubic with leading coefficient `a3`: either three real
/// roots or one real root plus a complex-conjugate pair.
#[derive(Clone, Debug, PartialEq)]
pub enum CubicRoots<T> {
    ThreeReal([T; 3]),
    OneReal { real: T, complex: (T, T) },
}

impl<T: Real> CubicRoots<T> {
    pub fn real_roots(&self) -> Vec<T> {
        match self {
            CubicRoots::ThreeReal(r) => r.to_vec(),
            CubicRoots::OneReal { real, .. } => vec![*real],
        }
    }
}

/// Solves a₃x³ + a₂x² + a₁x + a₀ = 0 over the reals, splitting out a
/// complex-conjugate pair when the discriminant is positive.
pub fn solve_cubic_general<T: Real>(a3: T, a2: T, a1: T, a0: T) -> CubicRoots<T> {
    let (b2, b1, b0) = (a2 / a3, a1 / a3, a0 / a3);
    let (cubic, shift) = CubicStd::from_monic(b2, b1, b0);
    let disc = cubic.discriminant();
    let scale = (cubic.p.abs() * T::of(1.0 / 3.0))
        .powi(3)
        .max(cubic.q.abs() * cubic.q.abs() * T::of(0.25))
        .max(T::min_positive_value());
    if disc > T::of(COMPLEX_DISC_REL) * scale {
        // Cardano: one real root, then the conjugate pair from the deflated
        // quadratic x² + (real + b2)x - b0/real... kept in summed form.
        let sq = disc.sqrt();
        let half_q = cubic.q * T::of(0.5);
        let u = (half_q + sq).cbrt();
        let v = (half_q - sq).cbrt();
        let mut y = u + v;
        // Newton polish on y³ = p y + q.
        for _ in 0..2 {
            let f = y * y * y - cubic.p * y - cubic.q;
            let df = T::of(3.0) * y * y - cubic.p;
            if df.abs() > T::zero() {
                y = y - f / df;
            }
        }
        let real = shift + y;
        // Remaining quadratic: x² + (b2 + real)x + (b1 + real(b2 + real)).
        let s1 = b2 + real;
        let s0 = b1 + real * s1;
        let re = -s1 * T::of(0.5);
        let im = (s0 - re * re).max(T::zero()).sqrt();
        CubicRoots::OneReal { real, complex: (re, im) }
    } else {
        let rs = solve_cubic_trig(&cubic, shift).expect("discriminant already screened");
        CubicRoots::ThreeReal([rs.roots()[0], rs.roots()[1], rs.roots()[2]])
    }
}

const SCAN_STEPS_DEFAULT: usize = 1024;
const REFINE_CAP: usize = 60;

/// Largest real root of `f` in `[lo, hi]`: scan downward from `hi` for the
/// first sign change, then refine with a secant/bisection hybrid (secant is
/// Newton with a finite-difference slope; bisection guards every other step).
pub fn largest_root_bracketed<T: Real, F: Fn(T) -> T>(
    f: F,
    lo: T,
    hi: T,
) -> Result<T, Error> {
    largest_root_scan(f, lo, hi, SCAN_STEPS_DEFAULT)
}

/// As [`largest_root_bracketed`] with an explicit scan resolution.
pub fn largest_root_scan<T: Real, F: Fn(T) -> T>(
    f: F,
    lo: T,
    hi: T,
    steps: usize,
) -> Result<T, Error> {
    debug_assert!(lo < hi && steps >= 2);
    let step = (hi - lo) / T::of(steps as f64);
    let mut x_hi = hi;
    let mut f_hi = f(x_hi);
    if f_hi == T::zero() {
        return Ok(x_hi);
    }
    for k in 1..=steps {
        let x = if k == steps { lo } else { hi - T::of(k as f64) * step };
        let fx = f(x);
        if fx == T::zero() {
            return Ok(x);
        }
        if (fx > T::zero()) != (f_hi > T::zero()) {
            return Ok(refine_bracket(&f, x, fx, x_hi, f_hi));
        }
        x_hi = x;
        f_hi = fx;
    }
    Err(Error::NoRootInBracket)
}

fn refine_bracket<T: Real, F: Fn(T) -> T>(f: &F, mut a: T, mut fa: T, mut b: T, mut fb: T) -> T {
    debug_assert!(a < b);
    let mut best = if fa.abs() < fb.abs() { a } else { b };
    let mut best_f = fa.abs().min(fb.abs());
    for iter in 0..REFINE_CAP {
        let width_tol = T::of(4.0) * T::epsilon() * a.abs().max(b.abs()).max(T::one());
        if b - a <= width_tol {
            break;
        }
        // Secant proposal, forced to a bisection every other iteration so the
        // bracket shrinks geometrically no matter what.
        let mid = (a + b) * T::of(0.5);
        let x = if iter % 2 == 0 && fb != fa {
            let sec = b - fb * (b - a) / (fb - fa);
            let margin = (b - a) * T::of(1e-3);
            if sec > a + margin && sec < b - margin {
                sec
            } else {
                mid
            }
        } else {
            mid
        };
        let fx = f(x);
        if fx == T::zero() {
            return x;
        }
        if fx.abs() < best_f {
            best_f = fx.abs();
            best = x;
        }
        if (fx > T::zero()) == (fb > T::zero()) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    // Prefer the bracket midpoint once converged in width; fall back to the
    // lowest-residual point seen if the loop exited on the iteration cap.
    let mid = (a + b) * T::of(0.5);
    if b - a <= T::of(16.0) * T::epsilon() * a.abs().max(b.abs()).max(T::one()) {
        mid
    } else {
        best
    }
}

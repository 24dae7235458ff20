//! Eigendecomposition-free square roots of symmetric positive-definite
//! tensors, for dimensions 2 through 6.
//!
//! Given C = FᵀF, the crate computes the principal invariants of U = C^{1/2}
//! directly from the principal invariants of C — through closed forms at
//! dims 2–4, a deflated degree-16 polynomial at dim 5 and a degree-32
//! elimination chain at dim 6 — and then reconstructs U and U⁻¹ as explicit
//! polynomials in C. The polar decomposition F = R·U follows with
//! R = F·U⁻¹ and no eigensolver or matrix inversion anywhere on the path.
//!
//! Everything is generic over the scalar type (`f32` or `f64`, see
//! [`Real`]); the `*64` aliases below are the intended entry points.

pub mod closed_form;
pub mod error;
pub mod high_dim;
pub mod invariants;
pub mod reconstruct;
pub mod scalar;
pub mod solvers;
pub mod tensor;

pub use closed_form::{
    n2_stretch_invariants, n3_i2_quartic_roots, n3_quartic_cross_check, n3_stretch_invariants,
    n4_stretch_invariants,
};
pub use error::Error;
pub use high_dim::{
    n5_poly_eval, n5_poly_eval_scaled, n5_stretch_invariants, n6_e32_eval, n6_e32_eval_scaled,
    n6_spurious_cubic, n6_spurious_cubic_coeffs, n6_stretch_invariants, N5PolyParts, N6ElimState,
};
pub use invariants::{
    identity_residuals, invariants_from_stretches, invariants_from_tensor,
    PrincipalInvariants, Route, StretchInvariants, Stretches,
};
pub use reconstruct::{
    nu, polar_decompose, stretch_invariants, u_from_c, uinv_from_c, NuScalar, PolarFactors,
};
pub use scalar::Real;
pub use solvers::{
    cubic_discriminant, largest_root_bracketed, largest_root_scan, solve_cubic_general,
    solve_cubic_trig, solve_reduced_quartic, CubicRoots, CubicStd, QuarticReduced, RootSet,
};
pub use tensor::{mat_poly, Mat, SymTensor, MAX_DIM};

pub type SymTensor64 = SymTensor<f64>;
pub type Mat64 = Mat<f64>;
pub type PrincipalInvariants64 = PrincipalInvariants<f64>;
pub type Stretches64 = Stretches<f64>;
pub type StretchInvariants64 = StretchInvariants<f64>;
pub type PolarFactors64 = PolarFactors<f64>;
pub type RootSet64 = RootSet<f64>;

pub type SymTensor32 = SymTensor<f32>;
pub type Mat32 = Mat<f32>;
pub type PrincipalInvariants32 = PrincipalInvariants<f32>;
pub type Stretches32 = Stretches<f32>;
pub type StretchInvariants32 = StretchInvariants<f32>;
pub type PolarFactors32 = PolarFactors<f32>;
pub type RootSet32 = RootSet<f32>;

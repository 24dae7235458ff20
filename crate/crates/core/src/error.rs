//! Error type shared by the tensor, solver, and reconstruction modules.

use std::fmt;

/// Errors reported by the closed-form pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Tensor dimension outside the supported range 2..=6.
    DimUnsupported(usize),
    /// Two inputs disagree on dimension.
    DimMismatch { expected: usize, got: usize },
    /// Input rows are not exactly symmetric.
    NotSymmetric,
    /// A leading principal minor is not positive (Cholesky failed).
    NotPositiveDefinite,
    /// Deformation gradient is numerically singular.
    SingularF,
    /// Cubic discriminant is positive beyond tolerance: complex roots.
    ComplexRoots,
    /// Resolvent cubic of a quartic has complex or negative roots beyond tolerance.
    ResolventComplex,
    /// Downward scan found no sign change in the bracket.
    NoRootInBracket,
    /// Two independent routes to the same quantity disagree; indicates a bug,
    /// not bad data.
    CrossCheckFailed,
    /// Both candidate branches leave the identity residual above tolerance.
    BranchAmbiguous,
    /// Largest located root coincides with a spurious-cubic root and no
    /// distinct larger root exists.
    SpuriousCollision,
    /// The linear elimination step degenerated and the quartic fallback failed.
    D12Degenerate,
    /// The reconstruction denominator is too close to zero: extremely
    /// ill-conditioned input.
    NearSingular,
}

impl Error {
    /// Stable machine-readable code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimUnsupported(_) => "DimUnsupported",
            Error::DimMismatch { .. } => "DimMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::SingularF => "SingularF",
            Error::ComplexRoots => "ComplexRoots",
            Error::ResolventComplex => "ResolventComplex",
            Error::NoRootInBracket => "NoRootInBracket",
            Error::CrossCheckFailed => "CrossCheckFailed",
            Error::BranchAmbiguous => "BranchAmbiguous",
            Error::SpuriousCollision => "SpuriousCollision",
            Error::D12Degenerate => "D12Degenerate",
            Error::NearSingular => "NearSingular",
        }
    }

    /// True for errors caused by invalid input rather than numerical failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimUnsupported(_)
                | Error::DimMismatch { .. }
                | Error::NotSymmetric
                | Error::NotPositiveDefinite
                | Error::SingularF
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimUnsupported(d) => write!(f, "dimension {d} unsupported (expected 2..=6)"),
            Error::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::NotPositiveDefinite => write!(f, "tensor is not positive definite"),
            Error::SingularF => write!(f, "deformation gradient is singular"),
            Error::ComplexRoots => write!(f, "cubic has complex roots"),
            Error::ResolventComplex => write!(f, "resolvent cubic has complex or negative roots"),
            Error::NoRootInBracket => write!(f, "no root found in bracket"),
            Error::CrossCheckFailed => write!(f, "independent cross-check disagrees"),
            Error::BranchAmbiguous => write!(f, "branch selection ambiguous"),
            Error::SpuriousCollision => {
                write!(f, "largest root collides with a spurious root")
            }
            Error::D12Degenerate => write!(f, "elimination degenerated and fallback failed"),
            Error::NearSingular => write!(f, "reconstruction denominator near zero"),
        }
    }
}

impl std::error::Error for Error {}

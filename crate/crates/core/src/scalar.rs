//! Scalar abstraction: the library is generic over the floating-point type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the tensor machinery works over: `f32` or `f64`.
///
/// `f64` is the intended production type; the degree-16/32 root searches
/// need its precision to meet their stated tolerances. `f32` is supported
/// for the low-dimension closed forms.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Shorthand for embedding an `f64` constant.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }

    /// Ratio of this type's epsilon to f64's, used to rescale validation
    /// thresholds that are stated for f64 arithmetic.
    fn eps_ratio() -> Self {
        Self::of(Self::epsilon().to_f64().unwrap_or(f64::EPSILON) / f64::EPSILON)
    }
}

impl Real for f32 {}
impl Real for f64 {}

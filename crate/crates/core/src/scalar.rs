//! Scalar abstraction for the numeric kernels.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar every numeric kernel is generic over.
///
/// `f64` is the working precision used by the concrete aliases at the crate
/// root; `f32` instantiates for callers that can live with its precision.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lift an `f64` constant into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in this scalar type")
    }

    /// Lift a coefficient index into `Self`.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("index not representable in this scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

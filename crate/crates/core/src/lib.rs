//! Numerics for a family of close-to-convex planar harmonic mappings
//! f = h + conj(g) with dilatation g' = ζ zⁿ h'.
//!
//! The crate builds class members (sampled from Carathéodory mixtures or
//! extremal rotations), evaluates the sharp coefficient and symmetric
//! Toeplitz determinant bounds, computes growth and area envelopes from
//! Ma-Minda convex kernels, and locates Bohr radii by bracketed
//! root-finding.
//!
//! Core math is generic over the scalar via [`scalar::Real`] (`f32`/`f64`);
//! the aliases at the crate root pin the `f64` working precision.

pub mod bohr;
pub mod classes;
pub mod error;
pub mod scalar;
pub mod series;
pub mod special;
pub mod toeplitz;

pub use error::{Error, Result};
pub use scalar::Real;
pub use series::{Enclosure, TruncatedSeries};

/// Default truncation order for class constructions.
pub const DEFAULT_ORDER: usize = 128;

/// Truncation order for growth-envelope evaluation tests.
pub const GROWTH_EVAL_ORDER: usize = 256;

/// `f64` series carrying Taylor coefficients.
pub type Series64 = TruncatedSeries<f64>;
/// `f64` Carathéodory mixture.
pub type Caratheodory64 = classes::CaratheodoryFunction<f64>;
/// `f64` class parameters.
pub type Params64 = classes::HarmonicMapParams<f64>;
/// `f64` harmonic mapping.
pub type Mapping64 = classes::HarmonicMapping<f64>;
/// `f64` Ma-Minda kernel.
pub type Kernel64 = classes::MaMindaKernel<f64>;
/// `f64` Bohr-radius result.
pub type Radius64 = bohr::RadiusResult<f64>;
/// `f64` growth-envelope point.
pub type Envelope64 = bohr::EnvelopePoint<f64>;

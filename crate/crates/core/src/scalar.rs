//! Scalar abstraction: all geometry and tracing is generic over the
//! floating-point type.

use std::fmt;

/// Floating-point scalar used throughout the crate: `f32` or `f64`.
///
/// The verification tolerances quoted in this crate's tests assume `f64`;
/// `f32` builds are useful for size/throughput experiments but cannot meet
/// the 1e-9-scale acceptance thresholds.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

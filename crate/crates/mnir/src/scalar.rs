//! Scalar abstraction so the numerical core runs on `f32` or `f64`.

use nalgebra::RealField;
use serde::{de::DeserializeOwned, Serialize};

/// Floating-point scalar used throughout the numerical core.
///
/// `nalgebra::RealField` supplies the transcendental functions and lets the
/// dense solves stay generic; the extra bounds keep fits serializable and
/// shareable across worker threads.
pub trait Scalar:
    RealField + Copy + Default + Serialize + DeserializeOwned + Send + Sync
{
    fn to_f64(self) -> f64;
}

impl Scalar for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

/// Converts an `f64` literal or count into the working scalar type.
#[inline]
pub fn real<T: Scalar>(v: f64) -> T {
    nalgebra::convert(v)
}

/// Converts an integer count into the working scalar type.
#[inline]
pub fn real_count<T: Scalar>(c: u64) -> T {
    real(c as f64)
}

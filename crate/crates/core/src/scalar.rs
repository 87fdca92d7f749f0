//! Floating-point scalar abstraction shared by every geometric routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// A real scalar the geometry can be evaluated in.
///
/// Implemented for `f32` and `f64`. Tolerances are per-type because the unit
/// distance predicates are only meaningful relative to the representation.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Default slack for membership and unit-distance predicates.
    const DEFAULT_TOLERANCE: f64;
    /// Window around an integer inside which `2π/θ` snaps to it.
    const SNAP_TOLERANCE: f64;

    /// Converts an `f64` literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn default_tolerance() -> Self {
        Self::of(Self::DEFAULT_TOLERANCE)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const DEFAULT_TOLERANCE: f64 = 1e-9;
    const SNAP_TOLERANCE: f64 = 1e-9;
}

impl Scalar for f32 {
    const DEFAULT_TOLERANCE: f64 = 1e-5;
    const SNAP_TOLERANCE: f64 = 1e-5;
}

/// Normalizes an angle into `[0, 2π)`.
pub fn normalize_angle<T: Scalar>(angle: T) -> T {
    let tau = T::TAU();
    let mut a = angle % tau;
    if a < T::zero() {
        a = a + tau;
    }
    if a >= tau {
        a = a - tau;
    }
    a
}

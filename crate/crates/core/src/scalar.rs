//! Scalar abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar the matrix calculus is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Default determinant and trace-class tolerance for this precision.
    const DEFAULT_TOL: Self;

    /// Converts an `f64` literal. Every literal used by the crate is representable.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    /// Lossy conversion used for diagnostics in error values.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! impl_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const DEFAULT_TOL: Self = $tol;
        }
    };
}

impl_scalar!(f64, 1e-9);
impl_scalar!(f32, 1e-4);

/// Determinant and trace-class tolerances threaded through the classifying operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T = f64> {
    /// Allowed |det − 1| for a matrix to count as unimodular; also bounds |a11 − a22|
    /// for the equi-diagonal checks.
    pub det: T,
    /// Half-width of the parabolic band around |trace| = 2.
    pub class: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            det: T::DEFAULT_TOL,
            class: T::DEFAULT_TOL,
        }
    }
}

impl<T: Scalar> Tolerances<T> {
    pub fn new(det: T, class: T) -> Self {
        Self { det, class }
    }
}

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Float, FromPrimitive, Num, NumAssign, ToPrimitive};

/// Real scalar for the numeric layers: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal; panics only if the target cannot hold it.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact coefficient field for Laurent polynomials in `q`.
pub trait ExactField:
    Clone + PartialEq + PartialOrd + Num + Neg<Output = Self> + ToPrimitive + Display + Debug + Send + Sync + 'static
{
}

impl<F> ExactField for F where
    F: Clone + PartialEq + PartialOrd + Num + Neg<Output = F> + ToPrimitive + Display + Debug + Send + Sync + 'static
{
}

//! Scalar abstraction shared by the linear-algebra and height-vector code.
//!
//! Everything boundary-sensitive (membership, facet checks, vertex
//! deduplication) is only meaningful for an exact field such as
//! [`Rational`](crate::Rational) or `Ratio<i64>`. Floating point types satisfy
//! the bounds and work for quick numerical experiments, but equality tests are
//! then as good as the rounding.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

/// Field-like number type the core algorithms are written against.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync
{
    /// Converts a small integer. Panics only for types that cannot hold it.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer does not fit scalar type")
    }

    /// Exact value as a big rational, when the type can express it.
    fn to_rational(&self) -> Option<BigRational>;
}

impl Scalar for BigRational {
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

macro_rules! impl_ratio_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn to_rational(&self) -> Option<BigRational> {
                Some(BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom())))
            }
        }
    )*};
}

impl_ratio_scalar!(i32, i64, i128);

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn to_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

/// `a / 2` without going through `from_i64` at every call site.
pub(crate) fn half<T: Scalar>(a: T) -> T {
    a / T::from_int(2)
}

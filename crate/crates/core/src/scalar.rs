//! The scalar abstraction every computation in this crate is generic over.
//!
//! Exact work uses [`BigRational`]; `f64`/`f32` instantiate the same code for
//! quick numerical exploration. Only the rational instantiation gives the
//! bit-exact guarantees the test-suite relies on.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Field-like number type usable for lengths, matrix entries and function values.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// `true` when arithmetic is exact and `approx_eq` is plain equality.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_rational(v: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    /// Equality for rationals, a relative tolerance for floats.
    fn approx_eq(&self, other: &Self) -> bool;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(v: &BigRational) -> Self {
        v.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn from_rational(v: &BigRational) -> Self {
                ToPrimitive::to_f64(v).unwrap_or(f64::NAN) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_ratio_is_reduced() {
        let r = BigRational::ratio(6, 8);
        assert_eq!(r.to_string(), "3/4");
        assert_eq!(BigRational::half().to_string(), "1/2");
    }

    #[test]
    fn float_tolerance() {
        assert!(0.1f64.approx_eq(&(0.3 - 0.2)));
        assert!(!1.0f64.approx_eq(&1.001));
        assert!(!BigRational::ratio(1, 3).approx_eq(&BigRational::ratio(333, 1000)));
    }
}

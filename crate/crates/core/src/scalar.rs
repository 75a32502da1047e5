//! The exact integer ring the numeric code is generic over.

use std::fmt::{Debug, Display};

use num::{FromPrimitive, Integer, Signed};

/// An exact signed integer type: `i64`, `i128` or [`crate::ExactInt`].
///
/// Floating-point types are deliberately excluded: every quantity computed by
/// this crate is an integer identity that must hold exactly.
pub trait Scalar: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync {
    /// Converts a count, panicking if it does not fit.
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count does not fit in scalar type")
    }

    /// `(-1)^exponent`.
    fn sign_pow(exponent: i64) -> Self {
        if exponent.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where T: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync {}

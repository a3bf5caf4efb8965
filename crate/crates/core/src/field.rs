//! The number types the structured algorithm runs over.
//!
//! The recurrences are written once against [`Field`]. The exact path uses
//! [`Scalar`] (rational functions in the rescue parameter `t`); float mode uses
//! `f64`; the dense oracle and final results use [`BigRational`].

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::scalar::Scalar;

/// Pivot magnitude below which float mode reports a breakdown.
pub const FLOAT_PIVOT_TOLERANCE: f64 = 1e-12;

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// What a value becomes once `t = 0` is substituted.
    type Value: Field;

    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Callers guarantee `rhs` is nonzero.
    fn divide(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// The symbol substituted for vanishing divisors, if this type has one.
    fn indeterminate() -> Option<Self> {
        None
    }

    fn at_zero(&self) -> Result<Self::Value>;

    /// Converts an exact rational input entry.
    fn from_rational(q: &BigRational) -> Self;
}

impl Field for Scalar {
    type Value = BigRational;

    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divide(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn indeterminate() -> Option<Self> {
        Some(Scalar::t())
    }
    fn at_zero(&self) -> Result<BigRational> {
        self.eval_at_zero()
    }
    fn from_rational(q: &BigRational) -> Self {
        Scalar::from(q.clone())
    }
}

impl Field for BigRational {
    type Value = BigRational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divide(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn at_zero(&self) -> Result<BigRational> {
        Ok(self.clone())
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Field for f64 {
    type Value = f64;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divide(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.abs() < FLOAT_PIVOT_TOLERANCE
    }
    fn at_zero(&self) -> Result<f64> {
        Ok(*self)
    }
    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

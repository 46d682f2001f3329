//! Scalar abstractions shared by the polynomial and matrix code.
//!
//! Everything exact in this crate (integers, rationals, cyclotomic numbers,
//! polynomials over any of those) is a [`Ring`]; floating-point types are
//! rings too, which lets the same matrix code drive both the exact pipeline
//! and the power iteration.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with identity, operated on by value.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a machine integer.
    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let neg = v < 0;
        let mut m = v.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            m >>= 1;
        }
        if neg {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Rings in which division by a nonzero integer is defined whenever the
/// result is known to exist (exactly for integers, always for fields).
///
/// Faddeev–LeVerrier only ever divides by the step index, and the
/// characteristic polynomial of an integral matrix has integral
/// coefficients, so exact division suffices for `BigInt`.
pub trait DivInt: Ring {
    fn div_int(&self, k: u64) -> Self;
}

impl DivInt for BigInt {
    fn div_int(&self, k: u64) -> Self {
        let k = BigInt::from(k);
        debug_assert!((self % &k).is_zero(), "inexact integer division");
        self / k
    }
}

impl DivInt for BigRational {
    fn div_int(&self, k: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }
}

impl DivInt for f64 {
    fn div_int(&self, k: u64) -> Self {
        self / k as f64
    }
}

impl DivInt for f32 {
    fn div_int(&self, k: u64) -> Self {
        self / k as f32
    }
}

/// Rings with an exact (or floating) multiplicative inverse.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl Field for f32 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

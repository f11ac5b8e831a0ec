use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::Rat;

/// A commutative ring with unit whose elements own everything they need to
/// do arithmetic.
///
/// `zero()` and `one()` are context free; rings that carry a context (such as
/// cyclotomic fields) represent these as scalars that coerce on first use.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(k: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse, if `self` is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// `self / d` when `d` divides `self` exactly.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// Coefficients of the product of two nonempty coefficient slices.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], Self::zero()) + x.clone() * y;
            }
        }
        out
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// Rings containing the rationals.
pub trait QAlgebra: Ring {
    fn from_rat(r: &Rat) -> Self;

    fn scale(&self, r: &Rat) -> Self {
        self.clone() * Self::from_rat(r)
    }
}

pub trait Field: QAlgebra + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {}

impl Ring for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_i64(k: i64) -> Self {
        BigInt::from(k)
    }
    fn try_inv(&self) -> Option<Self> {
        if num_traits::One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
}

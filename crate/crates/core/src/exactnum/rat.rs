use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{Field, QAlgebra, Ring};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if Ring::is_zero(&denom) {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn from_integer(k: BigInt) -> Self {
        Rat(BigRational::from_integer(k))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Self> {
        if other.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(&self.0 / &other.0))
        }
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(Ring::pow(self, e as u32))
        } else {
            Ok(Ring::pow(&self.recip()?, e.unsigned_abs()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(k: i64) -> Self {
        Rat(BigRational::from_integer(k.into()))
    }
}

impl From<BigInt> for Rat {
    fn from(k: BigInt) -> Self {
        Rat::from_integer(k)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Parses `p`, `-p`, or `p/q`.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rat::from_bigints(p, q)
            }
            None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        }
    }
}

macro_rules! rat_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` for a `Result`.
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(<Rat as Ring>::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(<Rat as Ring>::one(), |a, b| a * b)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn from_i64(k: i64) -> Self {
        Rat::from(k)
    }
    fn try_inv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d).ok()
    }
    // integer convolution over a common denominator, reduced once per coefficient
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (na, da) = integer_parts(a);
        let (nb, db) = integer_parts(b);
        let mut out = vec![<BigInt as Zero>::zero(); a.len() + b.len() - 1];
        for (i, x) in na.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let d = da * db;
        out.into_iter().map(|c| Rat(BigRational::new(c, d.clone()))).collect()
    }
}

fn integer_parts(xs: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(<BigInt as One>::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    (xs.iter().map(|x| x.numer() * (&den / x.denom())).collect(), den)
}

impl QAlgebra for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}

impl Field for Rat {}

/// Binomial coefficient C(n, k) for n >= 0; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient C(n, k) for a signed top; zero when n < 0 or k > n.
///
/// Every closed form in this crate only ever needs the combinatorial range.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::from(0)
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic() {
        assert_eq!(Rat::new(1, 2) + Rat::new(1, 3), Rat::new(5, 6));
        assert_eq!(Rat::new(-5, 12) * Rat::from(0), Rat::from(0));
        assert_eq!(Rat::new(251, 720) / Rat::new(251, 720), Rat::from(1));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rat::from(3).checked_div(&Rat::from(0)), Err(Error::DivisionByZero));
        assert!(Rat::from(0).recip().is_err());
    }

    #[test]
    fn canonical_form() {
        let r = Rat::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rat::from(7).to_string(), "7");
    }

    #[test]
    fn parse() {
        assert_eq!("-19087/60480".parse::<Rat>().unwrap(), Rat::new(-19087, 60480));
        assert_eq!("12".parse::<Rat>().unwrap(), Rat::from(12));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        assert_eq!(binomial_i(-1, 0), BigInt::from(0));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }
}

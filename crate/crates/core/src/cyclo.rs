//! Exact arithmetic in the cyclotomic field `Q(zeta_n) = Q[x] / (Phi_n)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^{phi(n)-1}` as an
//! integer numerator vector over one positive common denominator. Rational
//! scalars carry no context and coerce into any field they meet; elements of
//! two different fields never mix.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{Field, QAlgebra, Rat, Ring, UniPoly};

/// `Phi_n` computed by exact division of `x^n - 1` by `Phi_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: usize) -> UniPoly<BigInt> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let mut memo = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: usize, memo: &mut HashMap<usize, UniPoly<BigInt>>) -> UniPoly<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = UniPoly::monomial(BigInt::one(), n) - UniPoly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        p = p.div_exact_poly(&phi_d).expect("Phi_d divides x^n - 1");
    }
    memo.insert(n, p.clone());
    p
}

/// The field `Q(zeta_n)`, fixed once and shared by its elements.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloCtx {
    n: usize,
    phi: UniPoly<BigInt>,
}

impl CycloCtx {
    pub fn new(n: usize) -> Arc<Self> {
        Arc::new(CycloCtx { n, phi: cyclotomic_poly(n) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phi(&self) -> &UniPoly<BigInt> {
        &self.phi
    }

    /// `phi(n)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.degree().expect("Phi_n is nonzero")
    }

    /// The primitive root `zeta_n` itself.
    pub fn zeta(self: &Arc<Self>) -> CycloElem {
        self.zeta_pow(1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycloElem {
        let e = k.rem_euclid(self.n as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        CycloElem::from_parts(Some(self.clone()), num, BigInt::one())
    }

    /// Builds an element from rational power-basis coordinates, reducing
    /// modulo `Phi_n` if more than `phi(n)` are given.
    pub fn element(self: &Arc<Self>, coords: &[Rat]) -> CycloElem {
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        CycloElem::from_parts(Some(self.clone()), num, den)
    }

    fn reduce(&self, num: &mut Vec<BigInt>) {
        let d = self.degree();
        let phi = self.phi.coeffs();
        while num.len() > d {
            let top = num.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = num.len() - d;
            for (j, c) in phi[..d].iter().enumerate() {
                if !c.is_zero() {
                    num[base + j] -= &top * c;
                }
            }
        }
    }
}

/// An element of `Q(zeta_n)`, or a context-free rational scalar.
#[derive(Clone)]
pub struct CycloElem {
    ctx: Option<Arc<CycloCtx>>,
    num: Vec<BigInt>,
    den: BigInt,
}

fn join(a: &Option<Arc<CycloCtx>>, b: &Option<Arc<CycloCtx>>) -> Result<Option<Arc<CycloCtx>>> {
    match (a, b) {
        (Some(x), Some(y)) if !Arc::ptr_eq(x, y) && x.n != y.n => Err(Error::ContextMismatch(x.n, y.n)),
        (Some(x), _) => Ok(Some(x.clone())),
        (None, y) => Ok(y.clone()),
    }
}

impl CycloElem {
    fn from_parts(ctx: Option<Arc<CycloCtx>>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if let Some(c) = &ctx {
            c.reduce(&mut num);
        }
        while num.last().is_some_and(|c| c.is_zero()) {
            num.pop();
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if num.is_empty() {
            den = BigInt::one();
        } else {
            let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        CycloElem { ctx, num, den }
    }

    pub fn from_rat(r: &Rat) -> Self {
        Self::from_parts(None, vec![r.numer().clone()], r.denom().clone())
    }

    pub fn ctx(&self) -> Option<&Arc<CycloCtx>> {
        self.ctx.as_ref()
    }

    /// Power-basis coordinates, padded to `phi(n)` entries.
    pub fn coords(&self) -> Vec<Rat> {
        let len = self.ctx.as_ref().map_or(1, |c| c.degree()).max(self.num.len());
        (0..len)
            .map(|k| match self.num.get(k) {
                Some(c) => Rat::from_bigints(c.clone(), self.den.clone()).expect("positive denominator"),
                None => Rat::zero(),
            })
            .collect()
    }

    /// The rational value, provided every coordinate past the first is zero.
    pub fn as_rational(&self) -> Result<Rat> {
        match self.num.as_slice() {
            [] => Ok(Rat::zero()),
            [c] => Rat::from_bigints(c.clone(), self.den.clone()),
            _ => Err(Error::NotRational(Box::new(self.clone()))),
        }
    }

    fn rep_poly(&self) -> UniPoly<Rat> {
        UniPoly::new(self.coords())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let ctx = join(&self.ctx, &other.ctx)?;
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let len = self.num.len().max(other.num.len());
        let num = (0..len)
            .map(|k| {
                let a = self.num.get(k).map_or_else(BigInt::zero, |c| c * &fa);
                let b = other.num.get(k).map_or_else(BigInt::zero, |c| c * &fb);
                a + b
            })
            .collect();
        Ok(Self::from_parts(ctx, num, den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let ctx = join(&self.ctx, &other.ctx)?;
        if self.num.is_empty() || other.num.is_empty() {
            return Ok(Self::from_parts(ctx, vec![], BigInt::one()));
        }
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        Ok(Self::from_parts(ctx, num, &self.den * &other.den))
    }

    /// Inverse as the product of the other Galois conjugates over the norm.
    pub fn inv(&self) -> Result<Self> {
        if self.num.is_empty() {
            return Err(Error::ZeroInverse);
        }
        let Some(ctx) = self.ctx.clone() else {
            let r = self.as_rational()?.recip()?;
            return Ok(Self::from_rat(&r));
        };
        if self.num.len() == 1 {
            let r = self.as_rational()?.recip()?;
            return Ok(Self::from_parts(Some(ctx), vec![r.numer().clone()], r.denom().clone()));
        }
        let mut conj = Self::from_parts(Some(ctx.clone()), vec![BigInt::one()], BigInt::one());
        for a in (2..ctx.n).filter(|a| a.gcd(&ctx.n) == 1) {
            conj = conj.try_mul(&self.galois(a)?)?;
        }
        let norm = self.try_mul(&conj)?.as_rational()?;
        conj.try_mul(&Self::from_rat(&norm.recip()?))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Applies the automorphism `zeta -> zeta^a` (requires `gcd(a, n) = 1`).
    pub fn galois(&self, a: usize) -> Result<Self> {
        let Some(ctx) = &self.ctx else {
            return Ok(self.clone());
        };
        if a.gcd(&ctx.n) != 1 {
            return Err(Error::BadParams(format!("{a} is not a unit modulo {}", ctx.n)));
        }
        let mut num = vec![BigInt::zero(); ctx.n];
        for (k, c) in self.num.iter().enumerate() {
            num[(k * a) % ctx.n] += c;
        }
        Ok(Self::from_parts(Some(ctx.clone()), num, self.den.clone()))
    }
}

/// `prod_{j=1}^{n-1} (1 - zeta_n^j)`, computed in the field and rationalized.
pub fn product_one_minus_powers(ctx: &Arc<CycloCtx>) -> Result<Rat> {
    if ctx.n < 2 {
        return Err(Error::BadParams("product over 1 <= j <= n-1 needs n >= 2".into()));
    }
    let one = CycloElem::one();
    let mut acc = CycloElem::one();
    for j in 1..ctx.n {
        acc = acc.try_mul(&one.try_sub(&ctx.zeta_pow(j as i64))?)?;
    }
    acc.as_rational()
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        let compatible = join(&self.ctx, &other.ctx).is_ok() || self.num.len() <= 1;
        compatible && self.num == other.num && self.den == other.den
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rep_poly().to_string_in("z"))
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ctx {
            Some(c) => write!(f, "CycloElem[n={}]({self})", c.n),
            None => write!(f, "CycloElem({self})"),
        }
    }
}

macro_rules! cyclo_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                self.$imp(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &'a CycloElem) -> CycloElem {
                self.$imp(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, 'b> $tr<&'b CycloElem> for &'a CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &'b CycloElem) -> CycloElem {
                self.$imp(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

cyclo_binop!(Add, add, try_add);
cyclo_binop!(Sub, sub, try_sub);
cyclo_binop!(Mul, mul, try_mul);
cyclo_binop!(Div, div, try_div);

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { ctx: self.ctx.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Ring for CycloElem {
    fn zero() -> Self {
        CycloElem { ctx: None, num: vec![], den: BigInt::one() }
    }
    fn one() -> Self {
        CycloElem { ctx: None, num: vec![BigInt::one()], den: BigInt::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }
    fn from_i64(k: i64) -> Self {
        Self::from_parts(None, vec![BigInt::from(k)], BigInt::one())
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.try_div(d).ok()
    }
}

impl QAlgebra for CycloElem {
    fn from_rat(r: &Rat) -> Self {
        CycloElem::from_rat(r)
    }
}

impl Field for CycloElem {}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(cs: &[i64]) -> UniPoly<BigInt> {
        UniPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inverse_of_one_minus_i() {
        let ctx = CycloCtx::new(4);
        let a = CycloElem::one() - ctx.zeta();
        let inv = a.inv().unwrap();
        assert_eq!(inv, ctx.element(&[Rat::new(1, 2), Rat::new(1, 2)]));
        assert!((a * inv).is_one());
    }

    #[test]
    fn inverse_of_zeta3() {
        let ctx = CycloCtx::new(3);
        let inv = ctx.zeta().inv().unwrap();
        assert_eq!(inv, ctx.element(&[Rat::from(-1), Rat::from(-1)]));
        assert_eq!(inv, ctx.zeta_pow(2));
        assert_eq!(CycloElem::one().inv().unwrap(), CycloElem::one());
        assert_eq!(CycloElem::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn rationalization() {
        assert_eq!(CycloElem::from_rat(&Rat::new(7, 3)).as_rational().unwrap(), Rat::new(7, 3));
        let ctx = CycloCtx::new(5);
        let mut sum = CycloElem::zero();
        for i in 1..5 {
            sum = sum + (CycloElem::one() - ctx.zeta_pow(i)).inv().unwrap();
        }
        assert_eq!(sum.as_rational().unwrap(), Rat::from(2));
        assert!(matches!(CycloCtx::new(4).zeta().as_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn product_of_one_minus_powers() {
        for (n, want) in [(2, 2), (6, 6), (7, 7)] {
            assert_eq!(product_one_minus_powers(&CycloCtx::new(n)).unwrap(), Rat::from(want));
        }
    }

    #[test]
    fn contexts_do_not_mix() {
        let a = CycloCtx::new(5).zeta();
        let b = CycloCtx::new(7).zeta();
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch(5, 7)));
        // Scalars embed everywhere.
        assert!(a.try_add(&CycloElem::from_i64(3)).is_ok());
    }

    #[test]
    fn galois_fixes_rationals_and_permutes_roots() {
        let ctx = CycloCtx::new(7);
        assert_eq!(ctx.zeta().galois(3).unwrap(), ctx.zeta_pow(3));
        assert!(ctx.zeta().galois(7).is_err());
        let r = CycloElem::from_i64(5);
        assert_eq!(r.galois(2).unwrap(), r);
    }

    #[test]
    fn small_n_fields_are_q() {
        assert_eq!(CycloCtx::new(1).zeta().as_rational().unwrap(), Rat::from(1));
        assert_eq!(CycloCtx::new(2).zeta().as_rational().unwrap(), Rat::from(-1));
    }
}

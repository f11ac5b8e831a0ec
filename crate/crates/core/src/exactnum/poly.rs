use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Field, QAlgebra, Ring};
use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

/// Polynomial in `Y` whose coefficients are polynomials in `X`.
pub type BiPoly = UniPoly<UniPoly<Rat>>;

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - a`
    pub fn linear_root(a: R) -> Self {
        Self::new(vec![-a, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a point of another ring, mapping coefficients first.
    pub fn eval_with<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x + &embed(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale_by(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Keeps only the terms of degree below `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Exact division, with the leading-coefficient quotient taken in `R`.
    /// Returns `None` when the divisor is zero or does not divide.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        let dl = d.leading()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return rem.iter().all(|c| c.is_zero()).then(|| UniPoly::new(vec![]));
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(dl)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc;
            }
            quot[k] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| UniPoly::new(quot))
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s;
        }
        Self::new(coeffs)
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        let n = a.coeffs.len().max(b.coeffs.len());
        Self::new((0..n).map(|k| a.coeff(k) - &b.coeff(k)).collect())
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return UniPoly { coeffs: vec![] };
        }
        Self::new(R::convolve(&a.coeffs, &b.coeffs))
    }

    /// Renders the polynomial in the named variable, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut cs = c.to_string();
            let compound = cs.contains(' ');
            let negative = !compound && cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if compound {
                cs = format!("({cs})");
            }
            let term = match (k, cs.as_str()) {
                (0, _) => cs.clone(),
                (_, "1") => power(var, k),
                _ => format!("{cs}*{}", power(var, k)),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

fn power(var: &str, k: usize) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((UniPoly::new(vec![]), self.clone()));
        }
        let inv = dl.try_inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic (or zero).
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0 - &(q.clone() * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0 - &(q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().and_then(|l| l.try_inv()) {
            Some(inv) => (r0.scale_by(&inv), s0.scale_by(&inv), t0.scale_by(&inv)),
            None => (r0, s0, t0),
        }
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl<R: Ring> $tr<UniPoly<R>> for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $method(self, rhs: UniPoly<R>) -> UniPoly<R> {
                UniPoly::$imp(&self, &rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a UniPoly<R>> for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $method(self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
                UniPoly::$imp(&self, rhs)
            }
        }
        impl<'a, R: Ring> $tr<UniPoly<R>> for &'a UniPoly<R> {
            type Output = UniPoly<R>;
            fn $method(self, rhs: UniPoly<R>) -> UniPoly<R> {
                UniPoly::$imp(self, &rhs)
            }
        }
        impl<'a, 'b, R: Ring> $tr<&'b UniPoly<R>> for &'a UniPoly<R> {
            type Output = UniPoly<R>;
            fn $method(self, rhs: &'b UniPoly<R>) -> UniPoly<R> {
                UniPoly::$imp(self, rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_ref);
poly_binop!(Sub, sub, sub_ref);
poly_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        -self.clone()
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(k: i64) -> Self {
        Self::constant(R::from_i64(k))
    }
    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inv().map(Self::constant),
            _ => None,
        }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div_exact_poly(d)
    }
}

impl<R: QAlgebra> QAlgebra for UniPoly<R> {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(R::from_rat(r))
    }
    fn scale(&self, r: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
}

/// Builds `scale * prod (x - root) * tail(x)`, with `tail` given from the
/// highest coefficient down.
pub fn poly_from_factors(scale: Rat, roots: &[i64], tail_high_first: &[i64]) -> UniPoly<Rat> {
    let tail = UniPoly::new(tail_high_first.iter().rev().map(|&c| Rat::from(c)).collect());
    roots.iter().fold(UniPoly::constant(scale) * tail, |acc, &r| acc * UniPoly::linear_root(Rat::from(r)))
}

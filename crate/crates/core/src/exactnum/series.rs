use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{QAlgebra, Ring};
use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Power series in `t` known modulo `t^order`.
///
/// Every operation truncates at the order of its inputs; mixing orders
/// truncates to the smaller one. Precision is never extended implicitly.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Pads or truncates `coeffs` to exactly `order` terms.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        TruncSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly<R>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order).cloned().collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![], order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// The series `t`.
    pub fn var(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn to_poly(&self) -> UniPoly<R> {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect(), order)
    }

    pub fn scale_by(&self, c: &R) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    /// Divides by `t^k`, assuming the first `k` coefficients vanish; the
    /// order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::BadConstantTerm("division by a power of t"));
        }
        Ok(TruncSeries { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); k.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        TruncSeries { coeffs }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0inv = self.coeffs[0].try_inv().ok_or(Error::NonInvertibleConstantTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(c0inv.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * &out[k - j];
            }
            out.push(-(acc * &c0inv));
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    /// `self(g(t))`; requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let n = self.order().min(g.order());
        if g.coeff(0) != R::zero() {
            return Err(Error::BadConstantTerm("composition"));
        }
        let g = g.with_order(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().take(n).rev() {
            acc = acc * &g + &Self::new(vec![c.clone()], n);
        }
        Ok(acc)
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        let n = a.order().min(b.order());
        TruncSeries { coeffs: (0..n).map(|k| a.coeffs[k].clone() + &b.coeffs[k]).collect() }
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        let n = a.order().min(b.order());
        TruncSeries { coeffs: (0..n).map(|k| a.coeffs[k].clone() - &b.coeffs[k]).collect() }
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        let n = a.order().min(b.order());
        let mut coeffs = vec![R::zero(); n];
        for (i, x) in a.coeffs.iter().take(n).enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + x.clone() * y;
            }
        }
        TruncSeries { coeffs }
    }
}

impl<R: QAlgebra> TruncSeries<R> {
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..n)
            .map(|k| self.coeffs[k].scale(&Rat::from(k as i64)))
            .chain(std::iter::once(R::zero()))
            .take(n)
            .collect();
        TruncSeries { coeffs }
    }

    /// Antiderivative with zero constant term; the top coefficient is lost.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n);
        if n > 0 {
            coeffs.push(R::zero());
        }
        for k in 1..n {
            coeffs.push(self.coeffs[k - 1].scale(&Rat::new(1, k as i64)));
        }
        TruncSeries { coeffs }
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log"));
        }
        Ok((self.derivative() * self.inv()?).integral())
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp"));
        }
        // g' = f' g, i.e. k g_k = sum_{j=1}^k j f_j g_{k-j}
        let mut g: Vec<R> = Vec::with_capacity(n);
        g.push(R::one());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].scale(&Rat::from(j as i64)) * &g[k - j];
            }
            g.push(acc.scale(&Rat::new(1, k as i64)));
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// The series `e^t - 1 = t + t^2/2! + ...`
    pub fn exp_minus_one(order: usize) -> Self {
        let mut c = Rat::from(1);
        let mut coeffs = vec![R::zero()];
        for k in 1..order {
            c = c * Rat::new(1, k as i64);
            coeffs.push(R::from_rat(&c));
        }
        Self::new(coeffs, order)
    }

    /// The series `log(1 + t)`.
    pub fn log_one_plus(order: usize) -> Self {
        let coeffs = (0..order)
            .map(|k| match k {
                0 => R::zero(),
                _ => {
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    R::from_rat(&Rat::new(sign, k as i64))
                }
            })
            .collect();
        TruncSeries { coeffs }
    }
}

macro_rules! series_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl<R: Ring> $tr<TruncSeries<R>> for TruncSeries<R> {
            type Output = TruncSeries<R>;
            fn $method(self, rhs: TruncSeries<R>) -> TruncSeries<R> {
                TruncSeries::$imp(&self, &rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a TruncSeries<R>> for TruncSeries<R> {
            type Output = TruncSeries<R>;
            fn $method(self, rhs: &'a TruncSeries<R>) -> TruncSeries<R> {
                TruncSeries::$imp(&self, rhs)
            }
        }
        impl<'a, 'b, R: Ring> $tr<&'b TruncSeries<R>> for &'a TruncSeries<R> {
            type Output = TruncSeries<R>;
            fn $method(self, rhs: &'b TruncSeries<R>) -> TruncSeries<R> {
                TruncSeries::$imp(self, rhs)
            }
        }
    };
}

series_binop!(Add, add, add_ref);
series_binop!(Sub, sub, sub_ref);
series_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        TruncSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

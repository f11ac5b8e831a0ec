use std::sync::Arc;

use num_bigint::BigInt;

use super::{Method, ZetaParams, ZetaValue};
use crate::cyclo::{CycloCtx, CycloElem};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Rat, Ring, SquareMatrix};
use crate::qstirling::{qfact, StirlingParams, StirlingTable};
use crate::seqlib::bell_complete;

use super::closed::zeta_m1_closed;

pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Brute-force tuple budget: `QMZV_BUDGET` if set and valid, else the default.
pub fn default_budget() -> u64 {
    std::env::var("QMZV_BUDGET").ok().and_then(|v| v.trim().parse().ok()).filter(|&b| b >= 1).unwrap_or(DEFAULT_BUDGET)
}

/// `(1 - zeta_n^i)^{-s}` for `i = 1..n-1`.
fn inverse_powers(n: usize, s: u32) -> Result<(Arc<CycloCtx>, Vec<CycloElem>)> {
    let ctx = CycloCtx::new(n);
    let one = CycloElem::one();
    let ws = (1..n).map(|i| Ok((&one - &ctx.zeta_pow(i as i64)).inv()?.pow(s))).collect::<Result<Vec<_>>>()?;
    Ok((ctx, ws))
}

fn value(p: ZetaParams, method: Method, value: Rat) -> ZetaValue {
    ZetaValue { value, method, params: p }
}

pub fn zeta_brute(p: ZetaParams) -> Result<ZetaValue> {
    zeta_brute_with_budget(p, default_budget())
}

/// Sums over every increasing tuple directly. Refuses when the tuple count
/// `C(n-1, m)` exceeds `budget`.
pub fn zeta_brute_with_budget(p: ZetaParams, budget: u64) -> Result<ZetaValue> {
    let count = binomial((p.n - 1) as u64, p.m as u64);
    if count > BigInt::from(budget) {
        return Err(Error::BudgetExceeded { needed: count.to_string(), budget });
    }
    if p.m == 0 {
        return Ok(value(p, Method::Brute, Rat::from(1)));
    }
    let (_, ws) = inverse_powers(p.n, p.s)?;

    fn go(ws: &[CycloElem], start: usize, left: usize, prefix: &CycloElem, acc: &mut CycloElem) {
        if left == 0 {
            *acc = acc.clone() + prefix;
            return;
        }
        for i in start..=ws.len() - left {
            go(ws, i + 1, left - 1, &(prefix.clone() * &ws[i]), acc);
        }
    }

    let mut acc = CycloElem::zero();
    if p.m <= ws.len() {
        go(&ws, 0, p.m, &CycloElem::one(), &mut acc);
    }
    Ok(value(p, Method::Brute, acc.as_rational()?))
}

/// `Z_n(zeta_n; m, s)` for `m = 0..=m_max`, read off
/// `prod_{j=1}^{n-1} (1 + X (1 - zeta_n^j)^{-s})` truncated at `X^{m_max}`.
pub fn zeta_product(n: usize, s: u32, m_max: usize) -> Result<Vec<Rat>> {
    ZetaParams::new(n, 0, s)?;
    let (_, ws) = inverse_powers(n, s)?;
    let mut coeffs = vec![CycloElem::one()];
    coeffs.resize(m_max + 1, CycloElem::zero());
    for (j, w) in ws.iter().enumerate() {
        for k in (1..=(j + 1).min(m_max)).rev() {
            let t = coeffs[k - 1].clone() * w;
            coeffs[k] = coeffs[k].clone() + t;
        }
    }
    coeffs.iter().map(CycloElem::as_rational).collect()
}

/// `Z_n(zeta_n; 1, j s)` for `j = 1..=count`.
pub fn one_row_values(n: usize, s: u32, count: usize) -> Result<Vec<Rat>> {
    ZetaParams::new(n, 1, s)?;
    let (_, ws) = inverse_powers(n, s)?;
    let mut pows = ws.clone();
    let mut out = Vec::with_capacity(count);
    for j in 1..=count {
        if j > 1 {
            pows.iter_mut().zip(&ws).for_each(|(p, w)| *p = p.clone() * w);
        }
        let total = pows.iter().fold(CycloElem::zero(), |acc, p| acc + p);
        out.push(total.as_rational()?);
    }
    Ok(out)
}

/// `([r-1]_q!)^s / ((1-q)^{sm} ([n-1]_q!)^s) * S1(n, m+1)` with `r = 1`,
/// at `q = zeta_n`.
pub fn zeta_via_stirling(p: ZetaParams) -> Result<ZetaValue> {
    if p.m == 0 {
        return Ok(value(p, Method::Stirling, Rat::from(1)));
    }
    let ctx = CycloCtx::new(p.n);
    let q = ctx.zeta();
    let table = StirlingTable::new(StirlingParams::first(1, p.s)?, q.clone());
    let stirling = table.entry(p.n, p.m + 1);
    let fact = qfact(p.n - 1, &q).pow(p.s);
    let one_minus_q = (CycloElem::one() - &q).pow(p.s * p.m as u32);
    let denom = fact * &one_minus_q;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(value(p, Method::Stirling, stirling.try_div(&denom)?.as_rational()?))
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(1/m!) Y_m(a_1, -1! a_2, 2! a_3, ...)` with `a_j = Z_n(zeta_n; 1, j s)`.
pub fn zeta_bell(p: ZetaParams) -> Result<ZetaValue> {
    if p.m == 0 {
        return Ok(value(p, Method::Bell, Rat::from(1)));
    }
    let a = one_row_values(p.n, p.s, p.m)?;
    let xs: Vec<Rat> = a.iter().enumerate().map(|(j, aj)| aj * &Rat::from(factorial(j as u64) * sign(j))).collect();
    let y = bell_complete(p.m, &xs)?;
    Ok(value(p, Method::Bell, y / Rat::from(factorial(p.m as u64))))
}

/// `(1/m!)` times the lower-Hessenberg determinant with Toeplitz body
/// `a_{i-j+1}` and superdiagonal `1, 2, ..., m-1`.
pub fn zeta_det(p: ZetaParams) -> Result<ZetaValue> {
    if p.m == 0 {
        return Ok(value(p, Method::Det, Rat::from(1)));
    }
    let a = one_row_values(p.n, p.s, p.m)?;
    let mat = SquareMatrix::from_fn(p.m, |i, j| match j {
        _ if j <= i => a[i - j].clone(),
        _ if j == i + 1 => Rat::from((i + 1) as i64),
        _ => Rat::zero(),
    });
    let det = mat.det_hessenberg()?;
    Ok(value(p, Method::Det, det / Rat::from(factorial(p.m as u64))))
}

/// Determinant with first column `j b_j`, body `b_{i-j}` and unit
/// superdiagonal, where `b_j` is supplied by `b(j)` for `j = 1..=m`.
fn power_from_elementary(m: usize, b: &[Rat]) -> Result<Rat> {
    let mat = SquareMatrix::from_fn(m, |i, j| match j {
        0 => &b[i] * &Rat::from((i + 1) as i64),
        _ if j <= i => b[i - j].clone(),
        _ if j == i + 1 => Rat::from(1),
        _ => Rat::zero(),
    });
    mat.det_hessenberg()
}

/// `Z_n(zeta_n; 1, m s)` from the column `Z_n(zeta_n; j, s)`, `j = 1..=m`.
pub fn zeta_row_from_column(p: ZetaParams) -> Result<Rat> {
    if p.m == 0 {
        return Err(Error::BadParams("need m >= 1".into()));
    }
    let column = zeta_product(p.n, p.s, p.m)?;
    power_from_elementary(p.m, &column[1..])
}

/// `Z_n(zeta_n; 1, s)` as an `s x s` determinant of scaled binomials.
pub fn zeta_1s_det(n: usize, s: u32) -> Result<Rat> {
    ZetaParams::new(n, 1, s)?;
    let b: Vec<Rat> = (1..=s as usize).map(|j| zeta_m1_closed(n, j)).collect();
    power_from_elementary(s as usize, &b)
}

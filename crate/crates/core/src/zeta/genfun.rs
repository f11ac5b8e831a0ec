use crate::error::{Error, Result};
use crate::exactnum::{binomial, BiPoly, Rat, Ring, SquareMatrix, TruncSeries, UniPoly};
use crate::report::VerifyReport;

use super::routes::zeta_product;

type QX = UniPoly<Rat>;

/// Companion matrix over `Q[X]` of the monic `(-1)^s ((1 - Y)^s + X)` in `Y`;
/// its eigenvalues are the `alpha_i`.
fn companion(s: usize) -> SquareMatrix<QX> {
    let sign = |k: usize| if (s + k).is_multiple_of(2) { 1 } else { -1 };
    let low: Vec<QX> = (0..s)
        .map(|k| {
            let c = Rat::from(binomial(s as u64, k as u64) * sign(k));
            let x = if k == 0 { Rat::from(sign(0)) } else { Rat::zero() };
            UniPoly::new(vec![c, x])
        })
        .collect();
    SquareMatrix::from_fn(s, |i, j| match j {
        _ if j + 1 == s => -low[i].clone(),
        _ if i == j + 1 => QX::one(),
        _ => QX::zero(),
    })
}

/// `F_{s,l}(X, Y) = prod_{i_1 < ... < i_l} (1 - alpha_{i_1} ... alpha_{i_l} Y)`
/// as `det(I - Y C_l)` with `C_l` the `l`-th compound of the companion
/// matrix. The result is a polynomial in `Y` with coefficients in `Q[X]`.
pub fn f_poly(s: usize, l: usize) -> Result<BiPoly> {
    if s == 0 || l > s {
        return Err(Error::BadParams(format!("need 0 <= l <= s and s >= 1, got s = {s}, l = {l}")));
    }
    let k = companion(s).compound(l);
    let m = SquareMatrix::from_fn(k.dim(), |i, j| {
        let diag = if i == j { QX::one() } else { QX::zero() };
        BiPoly::new(vec![diag, -k.get(i, j).clone()])
    });
    Ok(m.det_fraction_free())
}

/// Writes a polynomial in `Y` over `Q[X]` as a sum of `c*X^a*Y^b` terms.
pub fn bipoly_to_string(p: &BiPoly) -> String {
    let mut terms = Vec::new();
    for (b, cy) in p.coeffs().iter().enumerate() {
        for (a, c) in cy.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = c.to_string();
            if a > 0 {
                t += &if a == 1 { "*X".to_string() } else { format!("*X^{a}") };
            }
            if b > 0 {
                t += &if b == 1 { "*Y".to_string() } else { format!("*Y^{b}") };
            }
            terms.push(t);
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// `(-1)^{s-1} sum_l (-1)^l log F_{s,l}(X, Y)` through `Y^order`, before the
/// division by `X`.
fn log_side(s: usize, order: usize) -> Result<TruncSeries<QX>> {
    let mut total = TruncSeries::zero(order + 1);
    for l in 0..=s {
        let f = f_poly(s, l)?;
        let log = TruncSeries::from_poly(&f, order + 1).log()?;
        total = if l % 2 == 0 { total + log } else { total - log };
    }
    Ok(if s % 2 == 1 { total } else { total.scale_by(&-QX::one()) })
}

fn divide_by_x(series: &TruncSeries<QX>) -> Result<TruncSeries<QX>> {
    if let Some(n) = series.coeffs().iter().position(|c| !c.coeff(0).is_zero()) {
        return Err(Error::BadParams(format!("X^0 part of the Y^{n} coefficient does not vanish")));
    }
    Ok(series.map(|c| UniPoly::new(c.coeffs().iter().skip(1).cloned().collect())))
}

/// The right side of the generating identity
/// `sum_n n^{s-1} Y^n sum_m Z_n(zeta_n; m, s) X^m = (-1)^{s-1}/X log(prod_l F_{s,l}^{(-1)^l})`,
/// through `Y^order`. Entry `n` is a polynomial in `X`.
pub fn logf_series(s: usize, order: usize) -> Result<Vec<QX>> {
    Ok(divide_by_x(&log_side(s, order)?)?.coeffs().to_vec())
}

/// Compares every coefficient `X^m Y^n` (`1 <= n <= order`) of the right
/// side with `n^{s-1} Z_n(zeta_n; m, s)`, including the zero coefficients
/// for `m >= n`.
pub fn logf_identity_check(s: usize, order: usize) -> Result<VerifyReport> {
    if s == 0 || s > 5 || order > 20 {
        return Err(Error::BadParams(format!("need 1 <= s <= 5 and order <= 20, got s = {s}, order = {order}")));
    }
    let mut report = VerifyReport::new(format!("logf s={s}"));
    let raw = log_side(s, order)?;
    for n in 0..=order {
        let c0 = raw.coeff(n).coeff(0);
        report.check(format!("s={s} n={n} X^0"), "log side", &Rat::zero(), &c0);
    }
    let Ok(series) = divide_by_x(&raw) else {
        return Ok(report);
    };
    report.check(format!("s={s} n=0"), "log side", &QX::zero(), &series.coeff(0));
    for n in 1..=order {
        let actual = series.coeff(n);
        let expected: Vec<Rat> = match n {
            1 => vec![Rat::from(1)],
            _ => {
                let weight = Rat::from(n as i64).pow(s as u32 - 1);
                zeta_product(n, s as u32, n - 1)?.iter().map(|z| z * &weight).collect()
            }
        };
        let top = expected.len().max(actual.coeffs().len());
        for m in 0..top {
            let want = expected.get(m).cloned().unwrap_or_else(Rat::zero);
            report.check(format!("s={s} n={n} m={m}"), "log side vs n^(s-1) product", &want, &actual.coeff(m));
        }
    }
    Ok(report)
}

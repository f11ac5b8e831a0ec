use super::ZetaParams;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Rat, Ring, UniPoly};
use crate::qstirling::rstirling1;
use crate::seqlib::degen_bernoulli_table;

fn c(n: i64, k: i64) -> Rat {
    Rat::from(crate::exactnum::binomial_i(n, k))
}

/// `C(n-1, m) / (m+1)`.
pub fn zeta_m1_closed(n: usize, m: usize) -> Rat {
    c(n as i64 - 1, m as i64) / Rat::from(m as i64 + 1)
}

/// `(C(n-1, m) + (-1)^m C(n-1, 2m+1)) / (n (m+1))`.
pub fn zeta_m2_closed(n: usize, m: usize) -> Rat {
    let (n, m) = (n as i64, m as i64);
    let sign = if m % 2 == 0 { 1 } else { -1 };
    (c(n - 1, m) + c(n - 1, 2 * m + 1) * Rat::from(sign)) / Rat::from(n * (m + 1))
}

/// `sum_k (-1)^{m-k} S1(2m+2, m+k+2; r = m+1) n^k`, the non-trivial factor of
/// `Z_n(zeta_n; m, 2)`.
pub fn m2_inner_poly(m: usize) -> Result<UniPoly<Rat>> {
    let coeffs = (0..=m)
        .map(|k| {
            let v = Rat::from(rstirling1(2 * m + 2, m + k + 2, m + 1)?);
            Ok(if (m - k).is_multiple_of(2) { v } else { -v })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RStirlingForms {
    pub rstirling: Rat,
    pub harmonic: Rat,
}

/// The two r-Stirling forms of `Z_n(zeta_n; m, 2)`:
///
/// `2 m! / (2m+2)! * C(n-1, m) * sum_k S1(2m+2, m+k+2; m+1) (-n)^k` and
/// `(1/n) C(n, m+1) sum_k (-n)^k e_{k+1}(1/(m+1), ..., 1/(2m+1))`.
pub fn zeta_m2_rstirling(n: usize, m: usize) -> Result<RStirlingForms> {
    if m == 0 {
        return Err(Error::BadParams("need m >= 1".into()));
    }
    let minus_n = Rat::from(-(n as i64));
    let inner = m2_inner_poly(m)?.eval(&-&minus_n) * Rat::from(if m.is_multiple_of(2) { 1 } else { -1 });
    let rstirling =
        Rat::from(factorial(m as u64) * 2) / Rat::from(factorial(2 * m as u64 + 2)) * c(n as i64 - 1, m as i64) * inner;

    // e_j of the reciprocals 1/(m+1), ..., 1/(2m+1)
    let mut e = vec![Rat::from(1)];
    for i in m + 1..=2 * m + 1 {
        let x = Rat::new(1, i as i64);
        e.push(Rat::zero());
        for j in (1..e.len()).rev() {
            let t = &e[j - 1] * &x;
            e[j] = &e[j] + &t;
        }
    }
    let sum: Rat = (0..=m).map(|k| minus_n.pow(k as u32) * &e[k + 1]).sum();
    let harmonic = c(n as i64, m as i64 + 1) * sum / Rat::from(n as i64);
    Ok(RStirlingForms { rstirling, harmonic })
}

/// The double-sum closed form for `s = 3`.
pub fn zeta_m3_closed(n: usize, m: usize) -> Rat {
    let (ni, mi) = (n as i64, m as i64);
    let n2 = Rat::from(ni * ni);
    let head = (c(ni - 1, mi) + c(ni - 1, 3 * mi + 2)) / (&n2 * &Rat::from(mi + 1));
    let mut tail = Rat::zero();
    for k in 0..=(mi + 1) / 2 {
        for i in 0..=mi - 2 * k + 1 {
            let e = (mi - 2 * k - i + 1) as u32;
            let weight = Rat::from(2).pow(i as u32) * Rat::from(-3).pow(e);
            tail = tail
                + c(mi - k + 1, k) * c(mi - 2 * k + 1, i) * c(ni + mi - 2 * k - i, 3 * mi - 3 * k + 2) * weight
                    / Rat::from(mi - k + 1);
        }
    }
    head - tail / n2
}

/// `-sum_{j=1}^s C(s-1, j-1) beta_j(1/n) n^j / j!`.
pub fn zeta_1s_dgber(n: usize, s: u32) -> Result<Rat> {
    ZetaParams::new(n, 1, s)?;
    let beta = degen_bernoulli_table(s as usize, &Rat::new(1, n as i64))?;
    let nr = Rat::from(n as i64);
    let total: Rat = (1..=s as u64)
        .map(|j| {
            Rat::from(binomial(s as u64 - 1, j - 1)) * &beta[j as usize] * nr.pow(j as u32) / Rat::from(factorial(j))
        })
        .sum();
    Ok(-total)
}

/// Closed-form dispatch: `m = 0`, then `s = 1, 2, 3`, then `m = 1` for any `s`.
pub fn zeta_closed(p: ZetaParams) -> Result<Rat> {
    match (p.m, p.s) {
        (0, _) => Ok(Rat::from(1)),
        (m, 1) => Ok(zeta_m1_closed(p.n, m)),
        (m, 2) => Ok(zeta_m2_closed(p.n, m)),
        (m, 3) => Ok(zeta_m3_closed(p.n, m)),
        (1, s) => zeta_1s_dgber(p.n, s),
        (m, s) => Err(Error::UnsupportedClosedForm { m, s }),
    }
}

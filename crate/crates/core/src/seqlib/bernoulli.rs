//! Classical, higher-order, Nörlund and degenerate Bernoulli numbers, all
//! read off truncated generating series.

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rat, Ring, TruncSeries, UniPoly};

fn egf_coeffs(series: &TruncSeries<Rat>) -> Vec<Rat> {
    series.coeffs().iter().enumerate().map(|(k, c)| c * &Rat::from(factorial(k as u64))).collect()
}

/// `t / (e^t - 1)` to order `order`.
fn bernoulli_egf(order: usize) -> TruncSeries<Rat> {
    TruncSeries::exp_minus_one(order + 1).shift_down(1).and_then(|s| s.inv()).expect("(e^t - 1)/t has constant term 1")
}

/// `B_0, ..., B_{n_max}` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rat> {
    egf_coeffs(&bernoulli_egf(n_max + 1))
}

pub fn bernoulli(n: usize) -> Rat {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// `B_0^{(alpha)}, ..., B_{n_max}^{(alpha)}` from `(t / (e^t - 1))^alpha`.
pub fn bernoulli_order_table(n_max: usize, alpha: u32) -> Vec<Rat> {
    egf_coeffs(&bernoulli_egf(n_max + 1).pow(alpha))
}

pub fn bernoulli_order(n: usize, alpha: u32) -> Rat {
    bernoulli_order_table(n, alpha).pop().expect("nonempty")
}

/// Nörlund numbers `B_0^{(0)}, ..., B_{n_max}^{(n_max)}` from
/// `t / ((1 + t) log(1 + t))`.
pub fn norlund_table(n_max: usize) -> Vec<Rat> {
    let order = n_max + 1;
    let log_over_t = TruncSeries::<Rat>::log_one_plus(order + 1).shift_down(1).expect("log(1+t) = t + ...");
    let one_plus_t = TruncSeries::new(vec![Rat::from(1), Rat::from(1)], order);
    let gf = (log_over_t * &one_plus_t).inv().expect("constant term 1");
    egf_coeffs(&gf)
}

pub fn norlund(n: usize) -> Rat {
    norlund_table(n).pop().expect("nonempty")
}

/// Degenerate Bernoulli numbers `beta_0(lambda), ..., beta_{k_max}(lambda)`
/// as polynomials in `lambda`, from
/// `t / ((1 + lambda t)^{1/lambda} - 1)` with
/// `(1 + lambda t)^{1/lambda} = exp(sum_{j>=1} (-1)^{j-1} lambda^{j-1} t^j / j)`.
pub fn degen_bernoulli_symbolic_table(k_max: usize) -> Vec<UniPoly<Rat>> {
    let order = k_max + 2;
    let exponent = TruncSeries::new(
        (0..order)
            .map(|j| match j {
                0 => UniPoly::zero(),
                _ => {
                    let sign = if j % 2 == 1 { 1 } else { -1 };
                    UniPoly::monomial(Rat::new(sign, j as i64), j - 1)
                }
            })
            .collect(),
        order,
    );
    let power = exponent.exp().expect("constant term 0");
    let denom = (power - TruncSeries::one(order)).shift_down(1).expect("(1 + lambda t)^{1/lambda} - 1 = t + ...");
    let gf = denom.inv().expect("constant term 1");
    gf.coeffs().iter().enumerate().map(|(k, c)| c.scale_by(&Rat::from(factorial(k as u64)))).collect()
}

pub fn degen_bernoulli_symbolic(k: usize) -> UniPoly<Rat> {
    degen_bernoulli_symbolic_table(k).pop().expect("nonempty")
}

/// `beta_0(1/n), ..., beta_{k_max}(1/n)` from `t / ((1 + t/n)^n - 1)`,
/// expanding the binomial exactly.
pub fn degen_bernoulli_table(k_max: usize, lambda: &Rat) -> Result<Vec<Rat>> {
    let inv = lambda.recip().map_err(|_| Error::UnsupportedLambda(lambda.to_string()))?;
    if !inv.is_integer() || inv.is_negative() {
        return Err(Error::UnsupportedLambda(lambda.to_string()));
    }
    let n: u64 = inv.numer().try_into().map_err(|_| Error::UnsupportedLambda(lambda.to_string()))?;
    let order = k_max + 2;
    // (1 + t/n)^n - 1 = sum_{j>=1} C(n, j) t^j / n^j
    let mut coeffs = vec![Rat::zero()];
    let mut scale = Rat::from(1);
    for j in 1..order as u64 {
        scale = scale * lambda;
        coeffs.push(Rat::from(crate::exactnum::binomial(n, j)) * &scale);
    }
    let denom = TruncSeries::new(coeffs, order).shift_down(1)?;
    Ok(egf_coeffs(&denom.inv()?))
}

pub fn degen_bernoulli(k: usize, lambda: &Rat) -> Result<Rat> {
    Ok(degen_bernoulli_table(k, lambda)?.pop().expect("nonempty"))
}

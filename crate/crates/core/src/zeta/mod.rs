//! Finite q-multiple zeta values at roots of unity,
//!
//! `Z_n(q; m, s) = sum_{1 <= i_1 < ... < i_m <= n-1} prod_j (1 - q^{i_j})^{-s}`,
//!
//! evaluated at `q = zeta_n` by several independent routes, together with
//! the closed forms for `s = 1, 2, 3`, the degenerate-Bernoulli form for
//! `m = 1`, the multiple harmonic q-series `z_n`, and the bivariate
//! generating function.

mod btt;
mod closed;
mod genfun;
mod polyfit;
mod routes;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rat;

pub use btt::{btt26_check, btt26_check_n, btt_decomposition_check, btt_z, btt_z_at_root, Composition};
pub use closed::{
    m2_inner_poly, zeta_1s_dgber, zeta_closed, zeta_m1_closed, zeta_m2_closed, zeta_m2_rstirling, zeta_m3_closed,
    RStirlingForms,
};
pub use genfun::{bipoly_to_string, f_poly, logf_identity_check, logf_series};
pub use polyfit::{reference_polynomials, zeta_poly_in_n, ReferencePoly, DEGREE_CAP};
pub use routes::{
    default_budget, one_row_values, zeta_1s_det, zeta_bell, zeta_brute, zeta_brute_with_budget, zeta_det, zeta_product,
    zeta_row_from_column, zeta_via_stirling, DEFAULT_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ZetaParams {
    pub n: usize,
    pub m: usize,
    pub s: u32,
}

impl ZetaParams {
    pub fn new(n: usize, m: usize, s: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParams(format!("n must be at least 2, got {n}")));
        }
        if s < 1 {
            return Err(Error::BadParams("s must be at least 1".into()));
        }
        Ok(ZetaParams { n, m, s })
    }
}

impl fmt::Display for ZetaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} s={}", self.n, self.m, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Product,
    Stirling,
    Bell,
    Det,
    Closed,
}

impl Method {
    pub const ALL: [Method; 6] =
        [Method::Brute, Method::Product, Method::Stirling, Method::Bell, Method::Det, Method::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Product => "product",
            Method::Stirling => "stirling",
            Method::Bell => "bell",
            Method::Det => "det",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::BadParams(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaValue {
    pub value: Rat,
    pub method: Method,
    pub params: ZetaParams,
}

/// Evaluates `Z_n(zeta_n; m, s)` by the chosen route.
pub fn zeta_value(p: ZetaParams, method: Method) -> Result<ZetaValue> {
    let value = match method {
        Method::Brute => return zeta_brute(p),
        Method::Product => zeta_product(p.n, p.s, p.m)?.swap_remove(p.m),
        Method::Stirling => return zeta_via_stirling(p),
        Method::Bell => return zeta_bell(p),
        Method::Det => return zeta_det(p),
        Method::Closed => zeta_closed(p)?,
    };
    Ok(ZetaValue { value, method, params: p })
}

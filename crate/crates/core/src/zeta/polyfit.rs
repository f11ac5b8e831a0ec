use crate::error::{Error, Result};
use crate::exactnum::{factorial, poly_from_factors, poly_interpolate, Rat, UniPoly};

use super::routes::zeta_product;

/// Largest `m s` accepted by [`zeta_poly_in_n`].
pub const DEGREE_CAP: usize = 16;

fn value_at(n: usize, m: usize, s: u32) -> Result<Rat> {
    Ok(zeta_product(n, s, m)?.swap_remove(m))
}

/// Recovers `n -> Z_n(zeta_n; m, s)` as a polynomial in `n`, assuming degree
/// `m s`: interpolates through `m s + 3` samples starting at `n = m + 1`,
/// then confirms two further samples lie on the curve.
pub fn zeta_poly_in_n(m: usize, s: u32) -> Result<UniPoly<Rat>> {
    if s == 0 {
        return Err(Error::BadParams("s must be at least 1".into()));
    }
    let d = m * s as usize;
    if d > DEGREE_CAP {
        return Err(Error::BadParams(format!("m s = {d} exceeds the degree cap {DEGREE_CAP}")));
    }
    let start = (m + 1).max(2);
    let points =
        (start..start + d + 3).map(|n| Ok((Rat::from(n as i64), value_at(n, m, s)?))).collect::<Result<Vec<_>>>()?;
    let poly = poly_interpolate(&points)?;
    let degree = poly.degree().unwrap_or(0);
    let mismatch = Error::DegreeMismatch { m, s, degree };
    if degree > d {
        return Err(mismatch);
    }
    for n in start + d + 3..start + d + 5 {
        if poly.eval(&Rat::from(n as i64)) != value_at(n, m, s)? {
            return Err(mismatch);
        }
    }
    Ok(poly)
}

/// A known factored form of `Z_n(zeta_n; m, s)` as a polynomial in `n`.
#[derive(Debug, Clone)]
pub struct ReferencePoly {
    pub m: usize,
    pub s: u32,
    pub family: &'static str,
    pub poly: UniPoly<Rat>,
}

fn f(k: u64) -> i64 {
    factorial(k).try_into().expect("small factorial")
}

/// The factored polynomials for `m = 1` (`s <= 9`), `s = 2` and `s = 3`
/// (`m <= 4`), and `s = 4` (`m <= 2`).
pub fn reference_polynomials() -> Vec<ReferencePoly> {
    let r = |m, s, family, scale: Rat, roots: &[i64], tail: &[i64]| ReferencePoly {
        m,
        s,
        family,
        poly: poly_from_factors(scale, roots, tail),
    };
    vec![
        r(1, 1, "m=1", Rat::new(1, 2), &[1], &[1]),
        r(1, 2, "m=1", Rat::new(-1, 12), &[1, 5], &[1]),
        r(1, 3, "m=1", Rat::new(-1, 8), &[1, 3], &[1]),
        r(1, 4, "m=1", Rat::new(1, f(6)), &[1], &[1, 1, -109, 251]),
        r(1, 5, "m=1", Rat::new(1, 288), &[1, 5], &[1, 6, -19]),
        r(1, 6, "m=1", Rat::new(-1, 12 * f(7)), &[1], &[2, 2, -355, -355, 11153, -19087]),
        r(1, 7, "m=1", Rat::new(-1, 24 * f(6)), &[1, 7], &[2, 16, -33, -376, 751]),
        r(1, 8, "m=1", Rat::new(1, f(10)), &[1], &[3, 3, -917, -917, 39697, 39697, -744383, 1070017]),
        r(1, 9, "m=1", Rat::new(27, 2 * f(10)), &[1, 3, 9], &[1, 13, 10, -350, -851, 2857]),
        r(1, 2, "s=2", Rat::new(-2, f(4)), &[1, 5], &[1]),
        r(2, 2, "s=2", Rat::new(2, f(6)), &[1, 2], &[1, -12, 47]),
        r(3, 2, "s=2", Rat::new(-2, f(8)), &[1, 2, 3], &[1, -22, 179, -638]),
        r(4, 2, "s=2", Rat::new(2, f(10)), &[1, 2, 3, 4], &[1, -35, 485, -3325, 11274]),
        r(1, 3, "s=3", Rat::new(-1, 8), &[1, 3], &[1]),
        r(2, 3, "s=3", Rat::new(6, f(9)), &[1, 2], &[1, 3, 301, -2883, 6898]),
        r(3, 3, "s=3", Rat::new(-3, f(10)), &[1, 2, 3], &[1, -4, 100, -2290, 15019, -32986]),
        r(
            4,
            3,
            "s=3",
            Rat::new(2, 5 * f(14)),
            &[1, 2, 3, 4],
            &[1, 10, 3705, -53340, 360423, -7406910, 99197195, -551374960, 1157817876],
        ),
        r(1, 4, "s=4", Rat::new(1, f(6)), &[1], &[1, 1, -109, 251]),
        r(2, 4, "s=4", Rat::new(2, f(10)), &[1, 2], &[1, 3, -148, 810, 12869, -101613, 188878]),
    ]
}

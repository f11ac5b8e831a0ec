//! Rationals, polynomials, truncated power series and determinants.
//!
//! cargo run --example exact_arithmetic

use qmzv::exactnum::{poly_interpolate, Rat, Ring, SquareMatrix, TruncSeries, UniPoly};

fn main() -> qmzv::Result<()> {
    let a: Rat = "-7/12".parse()?;
    let b = Rat::new(5, 18);
    println!("a = {a}, b = {b}");
    println!("a + b = {}, a * b = {}, a / b = {}", &a + &b, &a * &b, &a / &b);
    println!("a^5 = {}", a.pow(5));

    // (1 + x)^4 and exact division back to (1 + x)^3
    let one_plus_x = UniPoly::new(vec![Rat::one(), Rat::one()]);
    let p = one_plus_x.pow(4);
    println!("\n(1+x)^4 = {}", p.to_string_in("x"));
    let q = p.div_exact_poly(&one_plus_x).expect("exact");
    println!("(1+x)^4 / (1+x) = {}", q.to_string_in("x"));

    // Lagrange interpolation through (k, k^3 - 2k) recovers the cubic
    let pts: Vec<(Rat, Rat)> = (0..5).map(|k: i64| (Rat::from(k), Rat::from(k * k * k - 2 * k))).collect();
    println!("interpolant = {}", poly_interpolate(&pts)?.to_string_in("n"));

    // log(1 + x) and exp of it, to order 8
    let order = 8;
    let s = TruncSeries::new(vec![Rat::one(), Rat::one()], order);
    let l = s.log()?;
    println!("\nlog(1+x) = {}", l.to_poly().to_string_in("x"));
    println!("exp(log(1+x)) = {}", l.exp()?.to_poly().to_string_in("x"));
    let e = TruncSeries::<Rat>::exp_minus_one(order);
    println!("x / (e^x - 1) = {}", e.shift_down(1)?.inv()?.to_poly().to_string_in("x"));

    // lower Hessenberg determinant two ways
    let m = SquareMatrix::from_fn(5, |i, j| {
        if j > i + 1 {
            Rat::zero()
        } else if j == i + 1 {
            Rat::one()
        } else {
            Rat::new((i + 2 * j + 1) as i64, (j + 1) as i64)
        }
    });
    println!("\nM = {m:?}");
    println!("det (Hessenberg) = {}", m.det_hessenberg()?);
    println!("det (Bareiss)    = {}", m.det_fraction_free());
    println!("det of 2nd compound = {}  (= det^4)", m.compound(2).det_fraction_free());
    Ok(())
}

//! For fixed (m, s), Z_n(zeta_n; m, s) is a polynomial in n of degree m s.
//!
//! cargo run --example polynomials_in_n -- [m] [s]

use qmzv::exactnum::Rat;
use qmzv::zeta::{reference_polynomials, zeta_poly_in_n, zeta_product};

fn main() -> qmzv::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(2);
    let s = args.next().unwrap_or(3) as u32;
    let p = zeta_poly_in_n(m, s)?;
    println!("Z_n(zeta_n; {m}, {s}) = {}", p.to_string_in("n"));
    for n in [m + 1, m + 5, 40] {
        let direct = &zeta_product(n, s, m)?[m];
        println!("  n={n}: polynomial {}  direct {}", p.eval(&Rat::from(n as i64)), direct);
    }

    println!("\nreference table:");
    for r in reference_polynomials() {
        let ok = zeta_poly_in_n(r.m, r.s)? == r.poly;
        println!(
            "  ({}, {}) {:<6} {}  {}",
            r.m,
            r.s,
            r.family,
            if ok { "ok" } else { "MISMATCH" },
            r.poly.to_string_in("n")
        );
    }
    Ok(())
}

//! Z_n(zeta_n; m, s) by every evaluation route.
//!
//! cargo run --example zeta_routes -- [n] [m] [s]

use qmzv::zeta::{self, Method, ZetaParams};

fn main() -> qmzv::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(9);
    let m = args.next().unwrap_or(3);
    let s = args.next().unwrap_or(2) as u32;
    let p = ZetaParams::new(n, m, s)?;
    println!("{p}");
    for method in Method::ALL {
        match zeta::zeta_value(p, method) {
            Ok(v) => println!("  {:<9} {}", method.name(), v.value),
            Err(e) => println!("  {:<9} ({e})", method.name()),
        }
    }
    if m >= 1 {
        println!("  {:<9} {}  (= Z_n(1, {}))", "row", zeta::zeta_row_from_column(p)?, m as u32 * s);
    }

    // with a small budget brute force refuses
    match zeta::zeta_brute_with_budget(ZetaParams::new(40, 12, s)?, 1_000_000) {
        Ok(v) => println!("\nbrute n=40 m=12: {}", v.value),
        Err(e) => println!("\nbrute n=40 m=12: {e}"),
    }

    let column = zeta::zeta_product(n, s, n - 1)?;
    println!("\nall m for n={n}, s={s}:");
    for (m, v) in column.iter().enumerate() {
        println!("  m={m:<2} {v}");
    }
    println!("\nZ_n(1, s) for s = 2..8 via the binomial determinant:");
    for s in 2..=8 {
        println!("  s={s} {}", zeta::zeta_1s_det(n, s)?);
    }
    Ok(())
}

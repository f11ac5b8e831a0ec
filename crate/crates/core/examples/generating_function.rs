//! The determinants F_{s,l}(X, Y) and the logarithmic identity tying them
//! to Z_n(zeta_n; m, s).
//!
//! cargo run --example generating_function -- [s] [order]

use qmzv::exactnum::{Rat, Ring};
use qmzv::zeta::{bipoly_to_string, f_poly, logf_identity_check, logf_series, zeta_product};

fn main() -> qmzv::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let s = args.next().unwrap_or(2);
    let order = args.next().unwrap_or(8);
    for l in 0..=s {
        println!("F_{{{s},{l}}} = {}", bipoly_to_string(&f_poly(s, l)?));
    }

    println!("\nY^n coefficient of the log side, divided by X, against n^(s-1) Z_n(m, s):");
    let series = logf_series(s, order)?;
    for n in 2..=order.min(6) {
        let weight = Rat::from(n as i64).pow(s as u32 - 1);
        let direct: Vec<String> = zeta_product(n, s as u32, n - 1)?.iter().map(|z| (z * &weight).to_string()).collect();
        println!("  n={n}: {}", series[n].to_string_in("X"));
        println!("        [{}]", direct.join(", "));
    }
    println!("\n{}", logf_identity_check(s, order)?.summary());
    Ok(())
}

//! Closed forms for s = 1, 2, 3 and the degenerate-Bernoulli form for m = 1.
//!
//! cargo run --example closed_forms -- [n]

use qmzv::zeta;

fn main() -> qmzv::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(12, |a| a.parse().expect("n must be an integer"));
    for s in 1..=3u32 {
        let column = zeta::zeta_product(n, s, n - 1)?;
        println!("n={n} s={s}");
        for (m, v) in column.iter().enumerate().skip(1).take(6) {
            let closed = match s {
                1 => zeta::zeta_m1_closed(n, m),
                2 => zeta::zeta_m2_closed(n, m),
                _ => zeta::zeta_m3_closed(n, m),
            };
            println!("  m={m}: closed {closed:<14} product {v:<14} {}", if &closed == v { "ok" } else { "MISMATCH" });
        }
    }

    println!("\nr-Stirling and harmonic forms for s = 2:");
    for m in 1..=4 {
        let f = zeta::zeta_m2_rstirling(n, m)?;
        println!(
            "  m={m}: {} / {}   inner factor {}",
            f.rstirling,
            f.harmonic,
            zeta::m2_inner_poly(m)?.to_string_in("n")
        );
    }

    println!("\nZ_n(1, s) from degenerate Bernoulli numbers:");
    for s in 1..=8 {
        println!("  s={s}: {}", zeta::zeta_1s_dgber(n, s)?);
    }
    Ok(())
}

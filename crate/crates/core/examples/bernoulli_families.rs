//! Classical, higher-order, Norlund and degenerate Bernoulli numbers.
//!
//! cargo run --example bernoulli_families

use qmzv::exactnum::Rat;
use qmzv::seqlib::{
    bernoulli_numbers, bernoulli_order, degen_bernoulli_symbolic, degen_bernoulli_table, norlund_table,
};

fn show(label: &str, xs: &[Rat]) {
    println!("{label:<14} {}", xs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
}

fn main() -> qmzv::Result<()> {
    show("B_k", &bernoulli_numbers(12));
    show("B_k^(k)", &(0..=8).map(|k| bernoulli_order(k, k as u32)).collect::<Vec<_>>());
    show("Norlund b_k", &norlund_table(8));

    println!();
    for k in 0..=5 {
        println!("beta_{k}(lambda) = {}", degen_bernoulli_symbolic(k).to_string_in("lambda"));
    }
    for n in [2i64, 3, 5] {
        show(&format!("beta_k(1/{n})"), &degen_bernoulli_table(8, &Rat::new(1, n))?);
    }
    Ok(())
}

//! Multiple harmonic q-sums, classically and at roots of unity.
//!
//! cargo run --example multiple_harmonic -- [n]

use qmzv::exactnum::{Rat, Ring};
use qmzv::zeta::{btt26_check_n, btt_decomposition_check, btt_z, btt_z_at_root, Composition};

fn main() -> qmzv::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(7, |a| a.parse().expect("n must be an integer"));
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 2], vec![3, 1, 1]] {
        let c = Composition::new(parts.clone())?;
        let classical = btt_z(n, &c, &Rat::one())?;
        let at_root = btt_z_at_root(n, &c)?;
        println!("z_{n}({parts:?}): q=1 -> {classical}   q=zeta_{n} -> {at_root}");
    }
    let half = btt_z(n, &Composition::new(vec![2, 1])?, &Rat::new(1, 2))?;
    println!("z_{n}([2, 1]) at q=1/2 -> {half}");

    println!();
    println!("{}", btt26_check_n(n, 6)?.summary());
    for s in 1..=5 {
        println!("{}", btt_decomposition_check(n, s)?.summary());
    }
    Ok(())
}

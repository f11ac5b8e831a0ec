//! Complete Bell polynomials, Newton's identities and the sequence
//! transform a -> b with its inverse.
//!
//! cargo run --example bell_and_trudi

use qmzv::exactnum::Rat;
use qmzv::seqlib::{
    bell_complete, bell_partition_sum, elem_from_power_sums, gtrudi_check, gtrudi_forward, gtrudi_inverse, partitions,
};

fn main() -> qmzv::Result<()> {
    let xs: Vec<Rat> = [1, -2, 3, 5, -1, 4].iter().map(|&k| Rat::new(k, 3)).collect();
    for n in 0..=6 {
        println!(
            "Y_{n} = {:>12}   ({} partitions, partition sum {})",
            bell_complete(n, &xs)?.to_string(),
            partitions(n).len(),
            bell_partition_sum(n, &xs)?
        );
    }

    // e_k of {1, 2, 3, 4} from its power sums
    let g: Vec<Rat> = (1..=4u32).map(|j| Rat::from((1..=4i64).map(|v| v.pow(j)).sum::<i64>())).collect();
    let e: Vec<String> =
        (0..=4).map(|k| elem_from_power_sums(&g, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    println!("\ne_k(1,2,3,4) = {}", e.join(", "));

    let a: Vec<Rat> = vec![Rat::new(1, 2), Rat::from(-1), Rat::new(3, 4), Rat::from(2), Rat::new(-5, 3)];
    println!("\na = {}", a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    let mut b = Vec::new();
    for m in 1..=a.len() {
        let routes = gtrudi_forward(&a, m)?;
        let line: Vec<String> = routes.iter().map(|(route, v)| format!("{route}={v}")).collect();
        println!("b_{m}: {}", line.join("  "));
        b.push(routes[0].1.clone());
    }
    for n in 1..=b.len() {
        let line: Vec<String> = gtrudi_inverse(&b, n)?.iter().map(|(route, v)| format!("{route}={v}")).collect();
        println!("a_{n}: {}", line.join("  "));
    }
    println!("\n{}", gtrudi_check(&a, "example")?.summary());
    Ok(())
}

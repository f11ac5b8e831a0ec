//! Arithmetic in Q(zeta_n).
//!
//! cargo run --example cyclotomic_field -- [n]

use qmzv::cyclo::{cyclotomic_poly, product_one_minus_powers, CycloCtx, CycloElem};
use qmzv::exactnum::{QAlgebra, Rat, Ring};
use qmzv::zeta::{zeta_value, Method, ZetaParams};

fn main() -> qmzv::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(9), |a| a.parse()).expect("n must be an integer");
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        println!("Phi_{d}(x) = {}", cyclotomic_poly(d).to_string_in("x"));
    }

    let ctx = CycloCtx::new(n);
    let z = ctx.zeta();
    println!("\nQ(zeta_{n}) has degree {} over Q", ctx.degree());
    let a = CycloElem::from_i64(2) + z.clone() - ctx.zeta_pow(3).scale(&Rat::new(1, 3));
    let inv = a.inv()?;
    println!("a       = {a}");
    println!("a^-1    = {inv}");
    println!("a a^-1  = {}", &a * &inv);
    println!("zeta^{n} = {}", z.pow(n as u32));

    // [k]_zeta = (1 - zeta^k) / (1 - zeta)
    let one = CycloElem::one();
    let qnum = |k: i64| (&one - &ctx.zeta_pow(k)) / (&one - &z);
    println!("\n[2]_zeta = {}", qnum(2));
    for a in (1..n).filter(|a| num_integer::Integer::gcd(a, &n) == 1).take(3) {
        println!("sigma_{a}([2]_zeta) = {}", qnum(2).galois(a)?);
    }

    println!("\nprod (1 - zeta^j) = {}", product_one_minus_powers(&ctx)?);

    // a zeta value is rational: every automorphism fixes it
    let v = zeta_value(ZetaParams::new(n, 2, 2)?, Method::Product)?;
    println!("Z_{n}(zeta; 2, 2) = {}", v.value);
    Ok(())
}

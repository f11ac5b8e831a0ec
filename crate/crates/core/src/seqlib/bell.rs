use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, QAlgebra, Rat, Ring};

/// All partitions of `n` as multiplicity vectors: `mult[j-1]` parts equal to `j`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max_part: usize, mult: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(mult.clone());
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            mult[part - 1] += 1;
            go(rem - part, part, mult, out);
            mult[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut vec![0; n], &mut out);
    out
}

fn need<R>(xs: &[R], n: usize) -> Result<()> {
    if xs.len() < n {
        Err(Error::InsufficientInput { needed: n, got: xs.len() })
    } else {
        Ok(())
    }
}

/// Complete exponential Bell polynomial `Y_n(x_1, ..., x_n)`, `xs[j-1] = x_j`,
/// by `Y_{k+1} = sum_{i=0}^{k} C(k, i) Y_{k-i} x_{i+1}`.
pub fn bell_complete<R: QAlgebra>(n: usize, xs: &[R]) -> Result<R> {
    Ok(bell_complete_all(n, xs)?.pop().expect("Y_0 is always present"))
}

/// `Y_0, ..., Y_n`.
pub fn bell_complete_all<R: QAlgebra>(n: usize, xs: &[R]) -> Result<Vec<R>> {
    need(xs, n)?;
    let mut ys = vec![R::one()];
    for k in 0..n {
        let mut acc = R::zero();
        for i in 0..=k {
            let c = Rat::from(binomial(k as u64, i as u64));
            acc = acc + (ys[k - i].clone() * &xs[i]).scale(&c);
        }
        ys.push(acc);
    }
    Ok(ys)
}

/// `Y_n` as the sum over partitions of `n` of
/// `n! / prod i_j! * prod (x_j / j!)^{i_j}`.
pub fn bell_partition_sum<R: QAlgebra>(n: usize, xs: &[R]) -> Result<R> {
    need(xs, n)?;
    let nfact = Rat::from(factorial(n as u64));
    let mut total = R::zero();
    for mult in partitions(n) {
        let mut coeff = nfact.clone();
        let mut term = R::one();
        for (j, &i) in mult.iter().enumerate() {
            if i == 0 {
                continue;
            }
            let jf = Rat::from(factorial(j as u64 + 1));
            coeff = coeff / Rat::from(factorial(i as u64)) / Ring::pow(&jf, i as u32);
            term = term * xs[j].pow(i as u32);
        }
        total = total + term.scale(&coeff);
    }
    Ok(total)
}

/// The `k`-th elementary symmetric polynomial of values whose power sums
/// are `g[j-1] = g_j`: `(1/k!) Y_k(g_1, -1! g_2, 2! g_3, -3! g_4, ...)`.
pub fn elem_from_power_sums<R: QAlgebra>(g: &[R], k: usize) -> Result<R> {
    need(g, k)?;
    let xs: Vec<R> = g
        .iter()
        .take(k)
        .enumerate()
        .map(|(j, gj)| {
            let mut c = Rat::from(factorial(j as u64));
            if j % 2 == 1 {
                c = -c;
            }
            gj.scale(&c)
        })
        .collect();
    let y = bell_complete(k, &xs)?;
    Ok(y.scale(&Rat::from(factorial(k as u64)).recip()?))
}

//! Five equivalent ways of passing between two sequences `a_1, a_2, ...`
//! and `b_1, b_2, ...` (with `a_0 = b_0 = 1`) linked by
//! `m b_m = sum_{i=1}^m (-1)^{i-1} a_i b_{m-i}`.
//!
//! Sequences are 1-based in meaning: `a[i-1]` holds `a_i`.

use std::fmt;

use super::bell::partitions;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, QAlgebra, Rat, Ring, SquareMatrix};
use crate::report::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForwardRoute {
    /// sum over `i_1 + 2 i_2 + ... + m i_m = m` of `prod (1/i_k!) ((-1)^{k-1} a_k / k)^{i_k}`
    PartitionSum,
    /// `(1/m!)` times the Hessenberg determinant with superdiagonal `1, 2, ..., m-1`
    Determinant,
    Recurrence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseRoute {
    /// Hessenberg determinant with first column `j b_j` and unit superdiagonal
    Determinant,
    /// `a_n = sum_{j=1}^{n-1} (-1)^{j-1} b_j a_{n-j} + (-1)^{n+1} n b_n`
    Recurrence,
}

impl fmt::Display for ForwardRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for InverseRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn need<R>(xs: &[R], n: usize) -> Result<()> {
    if xs.len() < n {
        Err(Error::InsufficientInput { needed: n, got: xs.len() })
    } else {
        Ok(())
    }
}

fn signed<R: Ring>(odd: bool, v: R) -> R {
    if odd {
        -v
    } else {
        v
    }
}

pub fn b_from_a<R: QAlgebra>(a: &[R], m: usize, route: ForwardRoute) -> Result<R> {
    need(a, m)?;
    if m == 0 {
        return Ok(R::one());
    }
    match route {
        ForwardRoute::PartitionSum => {
            let mut total = R::zero();
            for mult in partitions(m) {
                let mut term = R::one();
                for (k0, &i) in mult.iter().enumerate() {
                    if i == 0 {
                        continue;
                    }
                    let k = k0 as i64 + 1;
                    let slot = signed(k0 % 2 == 1, a[k0].scale(&Rat::new(1, k)));
                    term = (term * slot.pow(i as u32)).scale(&Rat::from(factorial(i as u64)).recip()?);
                }
                total = total + term;
            }
            Ok(total)
        }
        ForwardRoute::Determinant => {
            let mat = SquareMatrix::from_fn(m, |i, j| {
                if j <= i {
                    a[i - j].clone()
                } else if j == i + 1 {
                    R::from_i64(i as i64 + 1)
                } else {
                    R::zero()
                }
            });
            Ok(mat.det_hessenberg()?.scale(&Rat::from(factorial(m as u64)).recip()?))
        }
        ForwardRoute::Recurrence => Ok(b_sequence(a, m)?.pop().expect("b_0 present")),
    }
}

/// `b_0, ..., b_m` from the recurrence.
pub fn b_sequence<R: QAlgebra>(a: &[R], m: usize) -> Result<Vec<R>> {
    need(a, m)?;
    let mut b = vec![R::one()];
    for k in 1..=m {
        let mut acc = R::zero();
        for i in 1..=k {
            acc = acc + signed(i % 2 == 0, a[i - 1].clone() * &b[k - i]);
        }
        b.push(acc.scale(&Rat::new(1, k as i64)));
    }
    Ok(b)
}

pub fn a_from_b<R: QAlgebra>(b: &[R], n: usize, route: InverseRoute) -> Result<R> {
    need(b, n)?;
    if n == 0 {
        return Ok(R::one());
    }
    match route {
        InverseRoute::Determinant => {
            let mat = SquareMatrix::from_fn(n, |i, j| {
                if j == 0 {
                    b[i].clone() * R::from_i64(i as i64 + 1)
                } else if j <= i {
                    b[i - j].clone()
                } else if j == i + 1 {
                    R::one()
                } else {
                    R::zero()
                }
            });
            mat.det_hessenberg()
        }
        InverseRoute::Recurrence => Ok(a_sequence(b, n)?.pop().expect("n >= 1")),
    }
}

/// `a_1, ..., a_n` from the inverse recurrence.
pub fn a_sequence<R: QAlgebra>(b: &[R], n: usize) -> Result<Vec<R>> {
    need(b, n)?;
    let mut a: Vec<R> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = signed(k % 2 == 0, b[k - 1].clone() * R::from_i64(k as i64));
        for j in 1..k {
            acc = acc + signed(j % 2 == 0, b[j - 1].clone() * &a[k - j - 1]);
        }
        a.push(acc);
    }
    Ok(a)
}

/// `b_m` by all three forward routes.
pub fn gtrudi_forward<R: QAlgebra>(a: &[R], m: usize) -> Result<Vec<(ForwardRoute, R)>> {
    [ForwardRoute::PartitionSum, ForwardRoute::Determinant, ForwardRoute::Recurrence]
        .into_iter()
        .map(|r| b_from_a(a, m, r).map(|v| (r, v)))
        .collect()
}

/// `a_n` by both inverse routes.
pub fn gtrudi_inverse<R: QAlgebra>(b: &[R], n: usize) -> Result<Vec<(InverseRoute, R)>> {
    [InverseRoute::Determinant, InverseRoute::Recurrence]
        .into_iter()
        .map(|r| a_from_b(b, n, r).map(|v| (r, v)))
        .collect()
}

/// Checks that all five expressions agree on `a` and that mapping forward
/// then back recovers `a`.
pub fn gtrudi_check<R: QAlgebra>(a: &[R], label: &str) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("gtrudi");
    let len = a.len();
    let b = b_sequence(a, len)?;
    let b_tail = &b[1..];
    for m in 1..=len {
        let reference = &b[m];
        for (route, v) in gtrudi_forward(a, m)? {
            report.check(format!("{label} m={m}"), format!("Recurrence vs {route}"), reference, &v);
        }
        for (route, v) in gtrudi_inverse(b_tail, m)? {
            report.check(format!("{label} n={m}"), format!("a_n vs inverse {route}"), &a[m - 1], &v);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from(x)).collect()
    }

    #[test]
    fn unit_first_entry() {
        let a = r(&[1, 0, 0]);
        for (_, v) in gtrudi_forward(&a, 2).unwrap() {
            assert_eq!(v, Rat::new(1, 2));
        }
    }

    #[test]
    fn m_equal_one_is_identity() {
        let a = vec![Rat::new(-7, 3)];
        for (_, v) in gtrudi_forward(&a, 1).unwrap() {
            assert_eq!(v, a[0]);
        }
        let b = vec![Rat::new(4, 9)];
        for (_, v) in gtrudi_inverse(&b, 1).unwrap() {
            assert_eq!(v, b[0]);
        }
    }

    #[test]
    fn round_trip() {
        let a = r(&[2, 3, 5]);
        let b = b_sequence(&a, 3).unwrap();
        for n in 1..=3 {
            for (_, v) in gtrudi_inverse(&b[1..], n).unwrap() {
                assert_eq!(v, a[n - 1]);
            }
        }
        assert!(gtrudi_check(&r(&[2, 3, 5, -1, 4, 0]), "fixed").unwrap().passed());
    }
}

use crate::cyclo::{CycloCtx, CycloElem};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Field, Rat, Ring};
use crate::qstirling::qnum;
use crate::report::VerifyReport;
use crate::seqlib::degen_bernoulli;

use super::routes::zeta_product;

/// Exponents `(s_1, ..., s_m)`, all at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadParams("a composition needs at least one part, all >= 1".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }
}

/// `1/[i]_q` for `i = 1..n-1`; slot 0 is unused.
fn inverse_qnums<F: Field>(n: usize, q: &F) -> Result<Vec<F>> {
    let mut out = vec![F::zero()];
    for i in 1..n {
        out.push(qnum(i, q).try_inv().ok_or(Error::DivisionByZero)?);
    }
    Ok(out)
}

fn btt_z_with<F: Field>(n: usize, parts: &Composition, q: &F, inv: &[F]) -> F {
    // below[i]: the sum over the remaining inner parts with every index <= i
    let mut below = vec![F::one(); n];
    for &s in parts.parts().iter().rev() {
        let mut next = vec![F::zero(); n];
        for i in 1..n {
            let term = q.pow((s - 1) * i as u32) * inv[i].pow(s) * &below[i - 1];
            next[i] = next[i - 1].clone() + term;
        }
        below = next;
    }
    below.swap_remove(n - 1)
}

/// `z_n(q; s_1, ..., s_m) = sum_{n-1 >= i_1 > ... > i_m >= 1} prod_j q^{(s_j - 1) i_j} / [i_j]_q^{s_j}`.
///
/// Partial sums run from the innermost index outwards, so the cost is
/// `O(m n)` field operations.
pub fn btt_z<F: Field>(n: usize, parts: &Composition, q: &F) -> Result<F> {
    if n < 2 {
        return Err(Error::BadParams(format!("n must be at least 2, got {n}")));
    }
    Ok(btt_z_with(n, parts, q, &inverse_qnums(n, q)?))
}

/// `z_n(zeta_n; parts)` in `Q(zeta_n)`.
pub fn btt_z_at_root(n: usize, parts: &Composition) -> Result<CycloElem> {
    btt_z(n, parts, &CycloCtx::new(n).zeta())
}

/// Checks `z_n(zeta_n; j) / (n (1 - zeta_n))^j = -beta_j(1/n) / j!` in the
/// field for `1 <= j <= j_max`.
pub fn btt26_check_n(n: usize, j_max: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("btt26");
    let ctx = CycloCtx::new(n);
    let z = ctx.zeta();
    let scale = (CycloElem::one() - &z) * CycloElem::from_i64(n as i64);
    let inv = inverse_qnums(n, &z)?;
    let scale_inv = scale.inv()?;
    for j in 1..=j_max {
        let lhs = btt_z_with(n, &Composition::new(vec![j])?, &z, &inv) * scale_inv.pow(j);
        let rhs = -degen_bernoulli(j as usize, &Rat::new(1, n as i64))? / Rat::from(factorial(j as u64));
        report.check(format!("n={n} j={j}"), "z_n/(n(1-q))^j vs -beta_j/j!", &CycloElem::from_rat(&rhs), &lhs);
    }
    Ok(report)
}

/// [`btt26_check_n`] for every `2 <= n <= n_max`.
pub fn btt26_check(n_max: usize, j_max: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("btt26");
    for n in 2..=n_max {
        report.absorb(btt26_check_n(n, j_max)?);
    }
    Ok(report)
}

/// Checks `Z_n(q; 1, s) = sum_{j=1}^s C(s-1, j-1) z_n(q; j) / (1-q)^j` at
/// `q = zeta_n`.
pub fn btt_decomposition_check(n: usize, s: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("btt-decomposition");
    let ctx = CycloCtx::new(n);
    let z = ctx.zeta();
    let one_minus_inv = (CycloElem::one() - &z).inv()?;
    let inv = inverse_qnums(n, &z)?;
    let mut rhs = CycloElem::zero();
    for j in 1..=s {
        let term = btt_z_with(n, &Composition::new(vec![j])?, &z, &inv) * one_minus_inv.pow(j);
        rhs =
            rhs + term * CycloElem::from_i64(binomial(s as u64 - 1, j as u64 - 1).try_into().expect("small binomial"));
    }
    let lhs = CycloElem::from_rat(&zeta_product(n, s, 1)?[1]);
    report.check(format!("n={n} s={s}"), "product vs sum_j C(s-1,j-1) z_n(j)/(1-q)^j", &lhs, &rhs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn classical(n: usize, parts: &[u32]) -> Rat {
        // direct enumeration at q = 1
        fn go(parts: &[u32], upper: usize) -> Rat {
            match parts.split_first() {
                None => Rat::from(1),
                Some((&s, rest)) => (1..upper).map(|i| Rat::new(1, i as i64).pow(s) * go(rest, i)).sum(),
            }
        }
        go(parts, n)
    }

    #[test]
    fn matches_enumeration_at_one() {
        for n in 2..8 {
            for parts in [&[1][..], &[2], &[1, 1], &[2, 1], &[1, 3], &[1, 2, 1]] {
                assert_eq!(btt_z(n, &comp(parts), &Rat::from(1)).unwrap(), classical(n, parts), "n={n} {parts:?}");
            }
        }
        assert_eq!(btt_z(2, &comp(&[1, 1]), &Rat::from(1)).unwrap(), Rat::from(0));
    }

    #[test]
    fn at_root_of_three() {
        // 1/[1] + 1/[2] = 1 + 1/(1 + z) = 1 + 1/(-z^2) = 1 - z
        let ctx = CycloCtx::new(3);
        let want = CycloElem::from_i64(1) - ctx.zeta();
        assert_eq!(btt_z_at_root(3, &comp(&[1])).unwrap(), want);
    }

    #[test]
    fn identities() {
        assert!(btt26_check(8, 4).unwrap().passed());
        for (n, s) in [(5, 1), (5, 3), (7, 4)] {
            assert!(btt_decomposition_check(n, s).unwrap().passed());
        }
    }

    #[test]
    fn rejects_empty() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}

//! q-numbers, q-factorials, and q-(r,s)-Stirling numbers of both kinds.
//!
//! All routines are generic over the coefficient ring and take `q` as an
//! element of that ring: `x` in `Q[x]` for a symbolic `q`, a rational, or
//! `zeta_n` in a cyclotomic field.
//!
//! Indexing follows the factorial basis `(x)_n = x^r prod_{i=r}^{n-1} (x - [i]_q^s)`
//! for `n >= r`, extended by `(x)_n = x^n` below `r`. With that extension both
//! triangles are unitriangular and mutually inverse for every `n`.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::cyclo::{CycloCtx, CycloElem};
use crate::error::{Error, Result};
use crate::exactnum::{k_subsets, Rat, Ring, UniPoly};
use crate::report::VerifyReport;

/// Where `q` lives.
#[derive(Clone, Debug, PartialEq)]
pub enum QPoint {
    Symbolic,
    Rational(Rat),
    RootOfUnity(Arc<CycloCtx>),
}

impl QPoint {
    pub fn symbolic_q() -> UniPoly<Rat> {
        UniPoly::x()
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Symbolic => f.write_str("symbolic"),
            QPoint::Rational(r) => write!(f, "{r}"),
            QPoint::RootOfUnity(c) => write!(f, "zeta:{}", c.n()),
        }
    }
}

/// Accepts `symbolic`, `zeta:<n>` (or `root:<n>`), or a rational such as `1` or `2/3`.
impl FromStr for QPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("symbolic") || s == "q" {
            return Ok(QPoint::Symbolic);
        }
        if let Some(n) = s.strip_prefix("zeta:").or_else(|| s.strip_prefix("root:")) {
            let n: usize = n.parse().map_err(|_| Error::BadParams(format!("bad root order {n:?}")))?;
            if n == 0 {
                return Err(Error::BadParams("root of unity order must be positive".into()));
            }
            return Ok(QPoint::RootOfUnity(CycloCtx::new(n)));
        }
        s.parse().map(QPoint::Rational)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StirlingParams {
    pub r: usize,
    pub s: u32,
    pub kind: StirlingKind,
}

impl StirlingParams {
    pub fn new(r: usize, s: u32, kind: StirlingKind) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::BadParams(format!("need r >= 1 and s >= 1, got r = {r}, s = {s}")));
        }
        Ok(StirlingParams { r, s, kind })
    }

    pub fn first(r: usize, s: u32) -> Result<Self> {
        Self::new(r, s, StirlingKind::First)
    }

    pub fn second(r: usize, s: u32) -> Result<Self> {
        Self::new(r, s, StirlingKind::Second)
    }
}

/// `[i]_q = 1 + q + ... + q^{i-1}`, with no singularity at `q = 1`.
pub fn qnum<R: Ring>(i: usize, q: &R) -> R {
    let mut acc = R::zero();
    let mut p = R::one();
    for _ in 0..i {
        acc = acc + &p;
        p = p * q;
    }
    acc
}

/// `[i]_q! = [i]_q [i-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn qfact<R: Ring>(i: usize, q: &R) -> R {
    (1..=i).fold(R::one(), |acc, j| acc * qnum(j, q))
}

/// `(x)_{n,q}^{(r,s)} = x^r prod_{i=r}^{n-1} (x - [i]_q^s)` for `n >= r`.
pub fn falling_product<R: Ring>(n: usize, r: usize, s: u32, q: &R) -> Result<UniPoly<R>> {
    if r == 0 || s == 0 {
        return Err(Error::BadParams("need r >= 1 and s >= 1".into()));
    }
    if n < r {
        return Err(Error::BadParams(format!("(x)_n needs n >= r, got n = {n}, r = {r}")));
    }
    Ok((r..n).fold(UniPoly::monomial(R::one(), r), |acc, i| acc * UniPoly::linear_root(qnum(i, q).pow(s))))
}

/// Memoized triangle of q-(r,s)-Stirling numbers, grown on demand.
///
/// Reads take a shared lock; growth takes the write lock and is idempotent,
/// so a table may be shared between threads.
pub struct StirlingTable<R> {
    params: StirlingParams,
    q: R,
    rows: RwLock<Vec<Vec<R>>>,
}

impl<R: Ring> StirlingTable<R> {
    pub fn new(params: StirlingParams, q: R) -> Self {
        StirlingTable { params, q, rows: RwLock::new(vec![vec![R::one()]]) }
    }

    pub fn params(&self) -> StirlingParams {
        self.params
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    /// Multiplier of the `n-1 -> n` step in the first-kind recurrence,
    /// or of column `k` in the second-kind recurrence.
    fn weight(&self, idx: usize) -> R {
        let StirlingParams { r, s, kind } = self.params;
        match kind {
            StirlingKind::First if idx > r => qnum(idx - 1, &self.q).pow(s),
            StirlingKind::Second if idx >= r => qnum(idx, &self.q).pow(s),
            _ => R::zero(),
        }
    }

    fn grow(&self, n: usize) {
        let mut rows = self.rows.write().expect("stirling table lock poisoned");
        while rows.len() <= n {
            let m = rows.len();
            let prev = &rows[m - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(R::zero);
            let row_weight = self.weight(m);
            let row: Vec<R> = (0..=m)
                .map(|k| {
                    let diag = if k == 0 { R::zero() } else { at(k - 1) };
                    let w = match self.params.kind {
                        StirlingKind::First => row_weight.clone(),
                        StirlingKind::Second => self.weight(k),
                    };
                    diag + &(w * &at(k))
                })
                .collect();
            rows.push(row);
        }
    }

    pub fn entry(&self, n: usize, k: usize) -> R {
        if k > n {
            return R::zero();
        }
        {
            let rows = self.rows.read().expect("stirling table lock poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        self.grow(n);
        self.rows.read().expect("stirling table lock poisoned")[n][k].clone()
    }

    pub fn rows(&self, n_max: usize) -> Vec<Vec<R>> {
        self.grow(n_max);
        self.rows.read().expect("stirling table lock poisoned")[..=n_max].to_vec()
    }
}

pub fn stirling1<R: Ring>(n: usize, k: usize, r: usize, s: u32, q: &R) -> Result<R> {
    Ok(StirlingTable::new(StirlingParams::first(r, s)?, q.clone()).entry(n, k))
}

pub fn stirling2<R: Ring>(n: usize, k: usize, r: usize, s: u32, q: &R) -> Result<R> {
    Ok(StirlingTable::new(StirlingParams::second(r, s)?, q.clone()).entry(n, k))
}

/// Sum over index chains `lo <= i_1 <(=) i_2 <(=) ... <(=) i_len <= hi` of
/// `prod_j weight(j, i_j)`, by depth-first search with running products.
fn chain_sum<R: Ring>(lo: usize, hi: usize, len: usize, strict: bool, weight: &dyn Fn(usize, usize) -> R) -> R {
    fn go<R: Ring>(
        pos: usize,
        from: usize,
        hi: usize,
        len: usize,
        strict: bool,
        acc: &R,
        weight: &dyn Fn(usize, usize) -> R,
    ) -> R {
        if pos == len {
            return acc.clone();
        }
        let mut total = R::zero();
        for i in from..=hi {
            let next = acc.clone() * &weight(pos, i);
            total = total + go(pos + 1, if strict { i + 1 } else { i }, hi, len, strict, &next, weight);
        }
        total
    }
    if lo > hi {
        return if len == 0 { R::one() } else { R::zero() };
    }
    go(0, lo, hi, len, strict, &R::one(), weight)
}

/// `entry(n, m)` of the first kind for `r <= m <= n-1` from
/// `([n-1]_q!/[r-1]_q!)^s sum_{r<=i_1<...<i_{m-r}<=n-1} 1/([i_1]...[i_{m-r}])^s`.
///
/// Each summand is evaluated as the product of `[j]_q^s` over the indices
/// `j` in `r..n-1` left out of the tuple, which is the same quantity without
/// division, so this also runs over polynomial rings.
pub fn stirling1_weighted_sum<R: Ring>(n: usize, m: usize, r: usize, s: u32, q: &R) -> Result<R> {
    StirlingParams::first(r, s)?;
    if !(r <= m && m < n) {
        return Err(Error::BadParams(format!("need r <= m <= n-1, got n = {n}, m = {m}, r = {r}")));
    }
    let range: Vec<usize> = (r..n).collect();
    let powers: Vec<R> = range.iter().map(|&j| qnum(j, q).pow(s)).collect();
    let mut total = R::zero();
    for subset in k_subsets(range.len(), m - r) {
        let mut term = R::one();
        let mut skip = subset.iter().peekable();
        for (idx, p) in powers.iter().enumerate() {
            if skip.peek() == Some(&&idx) {
                skip.next();
            } else {
                term = term * p;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// The three displayed expressions for `entry(n, n-m)` of the first kind.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryForms<R> {
    /// `sum_{r<=i_1<...<i_m<=n-1} ([i_1]...[i_m])^s`
    pub strict: R,
    /// `sum_{r<=i_1<=...<=i_m<=n-m} ([i_1][i_2+1]...[i_m+m-1])^s`
    pub shifted: R,
    /// the same as an iterated sum, innermost index first
    pub nested: R,
}

pub fn stirling1_elementary<R: Ring>(n: usize, m: usize, r: usize, s: u32, q: &R) -> Result<ElementaryForms<R>> {
    StirlingParams::first(r, s)?;
    if n < m || n - m < r {
        return Err(Error::BadParams(format!("need n - m >= r, got n = {n}, m = {m}, r = {r}")));
    }
    let table: Vec<R> = (0..=n).map(|i| qnum(i, q).pow(s)).collect();
    let pw = |i: usize| table[i].clone();
    let strict = chain_sum(r, n - 1, m, true, &|_, i| pw(i));
    let shifted = chain_sum(r, n - m, m, false, &|j, i| pw(i + j));
    // g_j(x) = sum_{y=r}^{x} [y+j-1]^s g_{j-1}(y), g_0 = 1
    let top = n - m;
    let mut g: Vec<R> = vec![R::one(); top + 1];
    for j in 1..=m {
        let mut next = vec![R::zero(); top + 1];
        let mut run = R::zero();
        for x in r..=top {
            run = run + pw(x + j - 1) * &g[x];
            next[x] = run.clone();
        }
        g = next;
    }
    let nested = if m == 0 { R::one() } else { g[top].clone() };
    Ok(ElementaryForms { strict, shifted, nested })
}

/// `entry(n, k)` of the second kind for `r+1 <= k <= n` from the nested sum
/// `sum_{i_{k-r}=0}^{n-k} [k]^{(n-k-i_{k-r})s} ... sum_{i_1=0}^{i_2} [r+1]^{(i_2-i_1)s} [r]^{i_1 s}`.
pub fn stirling2_nested<R: Ring>(n: usize, k: usize, r: usize, s: u32, q: &R) -> Result<R> {
    StirlingParams::second(r, s)?;
    if !(r < k && k <= n) {
        return Err(Error::BadParams(format!("need r+1 <= k <= n, got n = {n}, k = {k}, r = {r}")));
    }
    let top = n - k;
    let powers_of = |base: usize| -> Vec<R> {
        let b = qnum(base, q).pow(s);
        let mut v = vec![R::one()];
        for _ in 0..top {
            let last = v.last().expect("nonempty").clone();
            v.push(last * &b);
        }
        v
    };
    // f(i) = [r]^{i s}, then f'(x) = sum_{y<=x} [base]^{(x-y)s} f(y) for base = r+1..k.
    let mut f = powers_of(r);
    for base in r + 1..=k {
        let p = powers_of(base);
        f = (0..=top).map(|x| (0..=x).fold(R::zero(), |acc, y| acc + p[x - y].clone() * &f[y])).collect();
    }
    Ok(f[top].clone())
}

/// `entry(n, n-k)` of the second kind for `n - k >= r` from
/// `sum_{r<=i_1<=...<=i_k<=n-k} ([i_1]...[i_k])^s`.
pub fn stirling2_monotone<R: Ring>(n: usize, k: usize, r: usize, s: u32, q: &R) -> Result<R> {
    StirlingParams::second(r, s)?;
    if n < k || n - k < r {
        return Err(Error::BadParams(format!("need n - k >= r, got n = {n}, k = {k}, r = {r}")));
    }
    let table: Vec<R> = (0..=n - k).map(|i| qnum(i, q).pow(s)).collect();
    Ok(chain_sum(r, n - k, k, false, &|_, i| table[i].clone()))
}

/// Checks both orthogonality relations for all `n, m <= n_max`.
pub fn orthogonality_check<R: Ring>(n_max: usize, r: usize, s: u32, q: &R) -> Result<VerifyReport> {
    let first = StirlingTable::new(StirlingParams::first(r, s)?, q.clone());
    let second = StirlingTable::new(StirlingParams::second(r, s)?, q.clone());
    first.rows(n_max);
    second.rows(n_max);
    let sign = |e: usize, v: R| if e.is_multiple_of(2) { v } else { -v };
    let mut report = VerifyReport::new("orthogonality");
    for n in 0..=n_max {
        for m in 0..=n_max {
            let delta = if n == m { R::one() } else { R::zero() };
            let (mut a, mut b) = (R::zero(), R::zero());
            for k in 0..=n.max(m) {
                if k <= n {
                    a = a + sign(n - k, first.entry(n, k) * &second.entry(k, m));
                }
                if k >= m {
                    b = b + sign(k - m, second.entry(n, k) * &first.entry(k, m));
                }
            }
            let params = format!("n={n} m={m} r={r} s={s}");
            report.check(params.clone(), "first*second", &delta, &a);
            report.check(params, "second*first", &delta, &b);
        }
    }
    Ok(report)
}

/// Broder's r-Stirling number of the first kind (`s = 1`, `q = 1`).
pub fn rstirling1(n: usize, k: usize, r: usize) -> Result<BigInt> {
    stirling1(n, k, r, 1, &BigInt::from(1))
}

/// A table over `Q(zeta_n)` evaluated from the symbolic one, used to check
/// that specialization commutes with the recurrence.
pub fn symbolic_row_at_root(row: &[UniPoly<Rat>], ctx: &Arc<CycloCtx>) -> Vec<CycloElem> {
    let z = ctx.zeta();
    row.iter().map(|p| p.eval_with(&z, CycloElem::from_rat)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> UniPoly<Rat> {
        QPoint::symbolic_q()
    }

    fn qpoly(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(cs.iter().map(|&c| Rat::from(c)).collect())
    }

    #[test]
    fn q_numbers() {
        assert!(qnum(0, &sym()).is_zero());
        assert_eq!(qnum(3, &sym()), qpoly(&[1, 1, 1]));
        let ctx = CycloCtx::new(4);
        assert!(qnum(4, &ctx.zeta()).is_zero());
    }

    #[test]
    fn q_factorials() {
        assert!(qfact(0, &sym()).is_one());
        assert_eq!(qfact(3, &sym()), qpoly(&[1, 1]) * qpoly(&[1, 1, 1]));
        assert_eq!(qfact(2, &Rat::from(1)), Rat::from(2));
    }

    #[test]
    fn falling_products() {
        let x2 = falling_product(2, 2, 1, &sym()).unwrap();
        assert_eq!(x2, UniPoly::monomial(UniPoly::one(), 2));
        let classical = falling_product(3, 1, 1, &Rat::from(1)).unwrap();
        let expect = UniPoly::new(vec![Rat::from(0), Rat::from(2), Rat::from(-3), Rat::from(1)]);
        assert_eq!(classical, expect);
        let f = falling_product(3, 2, 2, &sym()).unwrap();
        let one_plus_q_sq = qpoly(&[1, 2, 1]);
        assert_eq!(f, UniPoly::new(vec![UniPoly::zero(), UniPoly::zero(), -one_plus_q_sq, UniPoly::one()]));
        assert!(falling_product(1, 2, 1, &sym()).is_err());
    }

    #[test]
    fn recurrence_values() {
        let one = Rat::from(1);
        assert_eq!(stirling1(5, 5, 2, 3, &sym()).unwrap(), UniPoly::one());
        assert_eq!(stirling1(3, 2, 1, 1, &one).unwrap(), Rat::from(3));
        assert_eq!(stirling2(4, 2, 2, 1, &one).unwrap(), Rat::from(4));
        assert_eq!(stirling2(4, 2, 1, 1, &one).unwrap(), Rat::from(7));
    }

    #[test]
    fn first_kind_lower_boundary() {
        // entry(n, r) = ([n-1]!/[r-1]!)^s and everything left of column r vanishes.
        let q = sym();
        let t = StirlingTable::new(StirlingParams::first(2, 2).unwrap(), q.clone());
        for n in 3..7 {
            assert!(t.entry(n, 0).is_zero() && t.entry(n, 1).is_zero());
            let want = qfact(n - 1, &q).div_exact(&qfact(1, &q)).unwrap().pow(2);
            assert_eq!(t.entry(n, 2), want);
        }
    }

    #[test]
    fn closed_forms_small() {
        let one = Rat::from(1);
        assert_eq!(stirling1_weighted_sum(4, 2, 1, 1, &one).unwrap(), Rat::from(11));
        let e = stirling1_elementary(4, 2, 1, 1, &one).unwrap();
        assert_eq!(
            (e.strict.clone(), e.shifted.clone(), e.nested.clone()),
            (Rat::from(11), Rat::from(11), Rat::from(11))
        );
        // entry(4, 3) with r = 2: the n-1 column sum 2 + 3.
        assert_eq!(stirling1_elementary(4, 1, 2, 1, &one).unwrap().strict, Rat::from(5));
        assert_eq!(stirling2_nested(4, 2, 1, 1, &one).unwrap(), Rat::from(7));
        assert_eq!(stirling2_monotone(4, 2, 1, 1, &one).unwrap(), Rat::from(7));
        assert!(stirling1_weighted_sum(4, 4, 1, 1, &one).is_err());
        assert!(stirling2_nested(4, 1, 1, 1, &one).is_err());
    }

    #[test]
    fn r_stirling() {
        assert_eq!(rstirling1(4, 3, 2).unwrap(), BigInt::from(5));
        assert_eq!(rstirling1(10, 10, 5).unwrap(), BigInt::from(1));
        assert_eq!(rstirling1(10, 9, 5).unwrap(), BigInt::from(35));
        assert_eq!(rstirling1(10, 6, 5).unwrap(), BigInt::from(11274));
    }

    #[test]
    fn orthogonality_small() {
        assert!(orthogonality_check(8, 1, 1, &sym()).unwrap().passed());
        let z5 = CycloCtx::new(5).zeta();
        assert!(orthogonality_check(6, 2, 2, &z5).unwrap().passed());
    }

    #[test]
    fn qpoint_parsing() {
        assert_eq!("symbolic".parse::<QPoint>().unwrap(), QPoint::Symbolic);
        assert_eq!("2/3".parse::<QPoint>().unwrap(), QPoint::Rational(Rat::new(2, 3)));
        assert!(matches!("zeta:7".parse::<QPoint>().unwrap(), QPoint::RootOfUnity(c) if c.n() == 7));
        assert!("zeta:0".parse::<QPoint>().is_err());
    }
}

use std::fmt;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense square matrix, row major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        SquareMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadParams("matrix rows must all have length equal to the row count".into()));
        }
        Ok(SquareMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| {
            (0..self.dim).fold(R::zero(), |acc, k| acc + self.get(i, k).clone() * other.get(k, j))
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        Self::from_fn(rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// exact, so this works over any integral domain with `div_exact`.
    pub fn det_fraction_free(&self) -> R {
        let d = self.dim;
        if d == 0 {
            return R::one();
        }
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..d - 1 {
            if m[k * d + k].is_zero() {
                let Some(p) = (k + 1..d).find(|&i| !m[i * d + k].is_zero()) else {
                    return R::zero();
                };
                for j in 0..d {
                    m.swap(k * d + j, p * d + j);
                }
                negate = !negate;
            }
            let pivot = m[k * d + k].clone();
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = m[i * d + j].clone() * &pivot - m[i * d + k].clone() * &m[k * d + j];
                    m[i * d + j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                m[i * d + k] = R::zero();
            }
            prev = pivot;
        }
        let det = m[d * d - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub fn is_lower_hessenberg(&self) -> bool {
        self.hessenberg_violation().is_none()
    }

    fn hessenberg_violation(&self) -> Option<(usize, usize)> {
        (0..self.dim).flat_map(|i| (i + 2..self.dim).map(move |j| (i, j))).find(|&(i, j)| !self.get(i, j).is_zero())
    }

    /// Determinant of a lower-Hessenberg matrix (`M[i][j] = 0` for `j > i + 1`)
    /// by expanding each leading minor along its last column:
    ///
    /// `D_k = sum_{i<=k} (-1)^{k-i} M[k][i] (M[i][i+1] ... M[k-1][k]) D_{i-1}`.
    pub fn det_hessenberg(&self) -> Result<R> {
        if let Some((row, col)) = self.hessenberg_violation() {
            return Err(Error::ShapeViolation { row, col });
        }
        let d = self.dim;
        let mut minors: Vec<R> = Vec::with_capacity(d + 1);
        minors.push(R::one());
        for k in 0..d {
            let mut acc = R::zero();
            let mut chain = R::one();
            for i in (0..=k).rev() {
                if i < k {
                    chain = chain * self.get(i, i + 1);
                    if chain.is_zero() {
                        break;
                    }
                }
                let term = self.get(k, i).clone() * &chain * &minors[i];
                acc = if (k - i) % 2 == 0 { acc + term } else { acc - term };
            }
            minors.push(acc);
        }
        Ok(minors.pop().expect("at least D_0"))
    }

    /// The `l`-th compound matrix: all `l x l` minors, rows and columns
    /// indexed by `l`-subsets in lexicographic order.
    pub fn compound(&self, l: usize) -> Self {
        let subsets = k_subsets(self.dim, l);
        let n = subsets.len();
        Self::from_fn(n, |i, j| self.submatrix(&subsets[i], &subsets[j]).det_fraction_free())
    }
}

/// All `k`-element subsets of `0..n`, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl<R: Ring> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect()).collect();
        f.debug_list().entries(rows).finish()
    }
}

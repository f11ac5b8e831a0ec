use super::ring::Ring;
use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// The unique polynomial of degree below `points.len()` through every point,
/// built from Newton divided differences.
pub fn poly_interpolate(points: &[(Rat, Rat)]) -> Result<UniPoly<Rat>> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(xi.to_string()));
        }
    }
    let n = points.len();
    let xs: Vec<&Rat> = points.iter().map(|(x, _)| x).collect();
    let mut diffs: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner over the Newton basis.
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = acc * UniPoly::linear_root(xs[i].clone()) + UniPoly::constant(diffs[i].clone());
    }
    Ok(acc)
}

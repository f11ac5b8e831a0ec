//! Exact scalar, polynomial, matrix and truncated power series arithmetic.
//!
//! Everything is generic over [`Ring`]; concrete coefficient rings are
//! [`Rat`], [`UniPoly`] over a ring, and
//! [`CycloElem`](crate::cyclo::CycloElem).

mod interp;
mod matrix;
mod poly;
mod rat;
mod ring;
mod series;

pub use interp::poly_interpolate;
pub use matrix::{k_subsets, SquareMatrix};
pub use poly::{poly_from_factors, BiPoly, UniPoly};
pub use rat::{binomial, binomial_i, factorial, Rat};
pub use ring::{Field, QAlgebra, Ring};
pub use series::TruncSeries;

//! Certified partitioning polynomials for finite point sets.
//!
//! A partition of a point set P in R^d is a product f = g_1 ... g_t of
//! bisecting factors. Points on the zero set of any factor form the zero
//! bucket P_0; every other point is classified by its vector of factor signs,
//! and each of the at most 2^t sign classes (the cells) is certified to hold
//! at most (1/2 + delta)^t of the points. All certificates are exact rational
//! comparisons; nothing is trusted to floating point.

pub mod bisect;
pub mod build;
pub mod cells;
pub mod dump;
mod slice;

use crate::algebra::mvpoly::MvPolynomial;
use crate::algebra::scalar::{ExactScalar, Sign};
use crate::error::{Error, Result};
use crate::geometry::point::Point;

pub use bisect::bisect_step;
pub use build::build_partition;
pub use cells::{assign_curves, curve_cells, CurveAssignment, CurveTrace};
pub use dump::{parse_partition_dump, render_partition_dump};

/// One nonempty sign class of the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRecord {
    /// Factor signs identifying the cell, one per factor, never zero.
    pub signs: Vec<Sign>,
    /// Indices into the partitioned point list, ascending.
    pub points: Vec<usize>,
}

impl CellRecord {
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.glyph()).collect()
    }
}

/// A certified partitioning polynomial together with the classification of
/// the point set it was built for.
#[derive(Debug, Clone)]
pub struct Partition {
    pub dim: usize,
    /// The partition parameter requested by the caller.
    pub requested_r: usize,
    /// The power of two actually used: 2^t cells are available.
    pub r: usize,
    /// Number of bisecting factors.
    pub t: usize,
    /// Per-round imbalance allowance.
    pub delta: ExactScalar,
    /// Bisecting factors; the partitioning polynomial is their product.
    pub factors: Vec<MvPolynomial>,
    /// Total degree of the product.
    pub degree: u32,
    /// Round-by-round degree allowance the factors were built under.
    pub degree_budget: u32,
    /// Nonempty sign classes, ordered by sign string.
    pub cells: Vec<CellRecord>,
    /// Indices of points lying on some factor, ascending.
    pub zero_bucket: Vec<usize>,
    /// Number of points the partition classified.
    pub point_count: usize,
}

impl Partition {
    /// Sign of every factor at `p`; `None` when some factor vanishes there
    /// (the point belongs to the zero bucket).
    pub fn sign_vector(&self, p: &Point) -> Result<Option<Vec<Sign>>> {
        if p.dim() != self.dim {
            return Err(Error::input("point/partition dimension mismatch"));
        }
        let mut signs = Vec::with_capacity(self.factors.len());
        for g in &self.factors {
            match Sign::of(&g.eval(p.coords())?) {
                Sign::Zero => return Ok(None),
                s => signs.push(s),
            }
        }
        Ok(Some(signs))
    }

    /// Largest cell size, 0 when every point sits on the zero set.
    pub fn max_cell(&self) -> usize {
        self.cells.iter().map(|c| c.points.len()).max().unwrap_or(0)
    }

    /// Exact per-cell ceiling `m * ((1 + 2 delta) / 2)^t`.
    pub fn cell_capacity(&self) -> ExactScalar {
        let half_plus = (ExactScalar::from_integer(1.into())
            + &self.delta + &self.delta)
            / ExactScalar::from_integer(2.into());
        let mut cap = ExactScalar::from_integer(self.point_count.into());
        for _ in 0..self.t {
            cap *= &half_plus;
        }
        cap
    }
}

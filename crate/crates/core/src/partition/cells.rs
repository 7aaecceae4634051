//! Which cells does a curve visit, and is it trapped in the zero set?
//!
//! Restricting each factor to the curve turns both questions into exact
//! univariate algebra: the curve lies inside the zero set of the product
//! exactly when some factor restricts to the zero polynomial, and otherwise
//! the parameter line splits at the real roots of the product of the
//! restrictions into finitely many arcs of constant sign vector. One sample
//! per arc, evaluated exactly, enumerates every visited cell. A rational
//! parametrization reaches all of the curve except at most one explicitly
//! stored point, which is checked directly.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::roots::isolate_real_roots;
use crate::algebra::scalar::Sign;
use crate::algebra::uvpoly::UvPolynomial;
use crate::error::{Error, Result};
use crate::geometry::curve::{restrict_to_curve, Curve};

use super::Partition;

/// Cells visited by one curve.
#[derive(Debug, Clone)]
pub struct CurveTrace {
    /// The curve lies inside the zero set of the partitioning polynomial.
    pub contained: bool,
    /// Distinct sign vectors the curve passes through (empty if contained).
    pub cells: BTreeSet<Vec<Sign>>,
    /// Number of distinct parameter values on the zero set.
    pub crossings: usize,
}

/// Partition-wide curve classification: for each curve (by position), either
/// contained in the zero set or crossing it, with the visited cells of the
/// crossing curves restricted to the partition's nonempty cells.
#[derive(Debug, Clone)]
pub struct CurveAssignment {
    pub contained: Vec<usize>,
    pub crossing: Vec<usize>,
    /// For each nonempty partition cell (aligned with `Partition::cells`),
    /// the crossing curves that visit it.
    pub per_cell: Vec<Vec<usize>>,
    /// Sum over crossing curves of distinct zero-set crossings.
    pub total_crossings: usize,
    /// Sum over crossing curves of deg(curve) * deg(f): the crossing budget.
    pub crossing_budget: usize,
}

/// Trace one curve through the partition.
pub fn curve_cells(partition: &Partition, curve: &Curve) -> Result<CurveTrace> {
    if curve.dim != partition.dim {
        return Err(Error::input("curve/partition dimension mismatch"));
    }
    let par = curve.parametrization.as_ref().ok_or_else(|| {
        Error::Unsupported("cell traversal needs a parametrized curve".into())
    })?;

    // Restrict every factor; any identically-zero restriction traps the
    // whole curve inside the zero set of the product.
    let mut restrictions = Vec::with_capacity(partition.factors.len());
    for g in &partition.factors {
        let r = restrict_to_curve(g, curve)?;
        if r.is_zero() {
            return Ok(CurveTrace {
                contained: true,
                cells: BTreeSet::new(),
                crossings: 0,
            });
        }
        restrictions.push(r);
    }

    let product = restrictions
        .iter()
        .fold(UvPolynomial::one(), |acc, r| acc.mul(r));
    let mut iso = isolate_real_roots(&product)?;
    let crossings = iso.count();
    let samples = iso.gap_samples();

    // Sign of factor i at gamma(t): the restriction numerator's sign,
    // corrected by the denominator's sign when the padding power is odd.
    let mut cells = BTreeSet::new();
    for tval in &samples {
        let den_sign = Sign::of(&par.denom.eval(tval));
        debug_assert!(den_sign != Sign::Zero, "denominator has no real roots");
        let mut signs = Vec::with_capacity(restrictions.len());
        for (r, g) in restrictions.iter().zip(partition.factors.iter()) {
            let mut s = Sign::of(&r.eval(tval));
            debug_assert!(s != Sign::Zero, "samples avoid the zero set");
            if den_sign == Sign::Neg && g.degree() % 2 == 1 {
                s = s.flip();
            }
            signs.push(s);
        }
        cells.insert(signs);
    }
    if let Some(mp) = &par.missing_point {
        if let Some(signs) = partition.sign_vector(mp)? {
            cells.insert(signs);
        }
    }

    let budget = curve.degree as usize * partition.degree as usize + 1;
    if cells.len() > budget {
        return Err(Error::InvariantBreach(format!(
            "curve {} visits {} cells, over its budget {budget}",
            curve.id,
            cells.len()
        )));
    }
    Ok(CurveTrace {
        contained: false,
        cells,
        crossings,
    })
}

/// Classify every curve against the partition. Curve indices in the result
/// refer to positions in `curves`.
pub fn assign_curves(partition: &Partition, curves: &[Curve]) -> Result<CurveAssignment> {
    let traces: Vec<CurveTrace> = curves
        .par_iter()
        .map(|c| curve_cells(partition, c))
        .collect::<Result<Vec<_>>>()?;

    let mut contained = Vec::new();
    let mut crossing = Vec::new();
    let mut per_cell: Vec<Vec<usize>> = vec![Vec::new(); partition.cells.len()];
    let mut total_crossings = 0usize;
    let mut crossing_budget = 0usize;
    for (idx, trace) in traces.iter().enumerate() {
        if trace.contained {
            contained.push(idx);
            continue;
        }
        crossing.push(idx);
        total_crossings += trace.crossings;
        crossing_budget += curves[idx].degree as usize * partition.degree as usize;
        for (cell_idx, cell) in partition.cells.iter().enumerate() {
            if trace.cells.contains(&cell.signs) {
                per_cell[cell_idx].push(idx);
            }
        }
    }
    Ok(CurveAssignment {
        contained,
        crossing,
        per_cell,
        total_crossings,
        crossing_budget,
    })
}

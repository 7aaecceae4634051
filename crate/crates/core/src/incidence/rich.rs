//! Points lying on many curves.

use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::curve::Curve;
use crate::geometry::point::Point;

/// Per-point curve counts, index-aligned with `points`.
pub fn curve_counts(points: &[Point], curves: &[Curve]) -> Result<Vec<usize>> {
    points
        .par_iter()
        .map(|p| {
            let mut hits = 0usize;
            for c in curves {
                if c.contains_point(p)? {
                    hits += 1;
                }
            }
            Ok(hits)
        })
        .collect()
}

/// Indices and counts of the points on at least `threshold` curves,
/// ascending by point index.
pub fn rich_points(
    points: &[Point],
    curves: &[Curve],
    threshold: usize,
) -> Result<Vec<(usize, usize)>> {
    Ok(curve_counts(points, curves)?
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c >= threshold)
        .collect())
}

//! Exact incidence counting by direct membership tests.
//!
//! This is the ground truth the partitioned counter is checked against:
//! every point is tested against every curve with exact arithmetic. Work is
//! split across threads per point; the fold back into totals runs in index
//! order, so results never depend on scheduling.

use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::curve::Curve;
use crate::geometry::point::Point;

/// Number of (point, curve) pairs with the point on the curve.
pub fn count_brute(points: &[Point], curves: &[Curve]) -> Result<u64> {
    let per_point: Vec<u64> = points
        .par_iter()
        .map(|p| {
            let mut hits = 0u64;
            for c in curves {
                if c.contains_point(p)? {
                    hits += 1;
                }
            }
            Ok(hits)
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(per_point.iter().sum())
}

/// The incident pairs themselves, as (point index, curve index), sorted.
pub fn incident_pairs(points: &[Point], curves: &[Curve]) -> Result<Vec<(usize, usize)>> {
    let per_point: Vec<Vec<(usize, usize)>> = points
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut pairs = Vec::new();
            for (j, c) in curves.iter().enumerate() {
                if c.contains_point(p)? {
                    pairs.push((i, j));
                }
            }
            Ok(pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn grid_and_two_lines() {
        let mut points = Vec::new();
        for x in 0..5i64 {
            for y in 0..5i64 {
                points.push(Point::from_i64(&[x, y]));
            }
        }
        let curves = vec![
            // y = x: 5 grid points.
            Curve::line(0, &Point::from_i64(&[0, 0]), &[int(1), int(1)]).unwrap(),
            // y = 2: 5 grid points.
            Curve::line(1, &Point::from_i64(&[0, 2]), &[int(1), int(0)]).unwrap(),
        ];
        assert_eq!(count_brute(&points, &curves).unwrap(), 10);
        let pairs = incident_pairs(&points, &curves).unwrap();
        assert_eq!(pairs.len(), 10);
        // (2,2) lies on both.
        let idx = points.iter().position(|p| p == &Point::from_i64(&[2, 2])).unwrap();
        assert!(pairs.contains(&(idx, 0)) && pairs.contains(&(idx, 1)));
    }

    #[test]
    fn circle_through_pythagorean_points() {
        let points = vec![
            Point::from_i64(&[5, 0]),
            Point::from_i64(&[3, 4]),
            Point::from_i64(&[-3, 4]),
            Point::from_i64(&[0, 1]),
        ];
        let curves = vec![Curve::circle(0, &Point::from_i64(&[0, 0]), &int(5)).unwrap()];
        assert_eq!(count_brute(&points, &curves).unwrap(), 3);
    }

    #[test]
    fn empty_inputs_count_zero() {
        assert_eq!(count_brute(&[], &[]).unwrap(), 0);
        let p = [Point::from_i64(&[0, 0])];
        assert_eq!(count_brute(&p, &[]).unwrap(), 0);
    }
}

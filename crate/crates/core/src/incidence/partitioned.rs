//! Exact incidence counting through recursive polynomial partitioning.
//!
//! The count at each node decomposes exactly: points off the zero set meet
//! curves only inside their own cell, so the cells recurse independently;
//! points on the zero set meet the crossing curves in directly tested pairs
//! and meet the contained curves in a configuration one dimension down,
//! reached through a certified generic projection (or brute force in the
//! plane, or when no certifiable direction is found). Every level re-checks
//! its bookkeeping: cell point counts must add back up to the node's points,
//! contained plus crossing curves to the node's curves. The result equals
//! the brute-force count exactly or the run fails; there is no tolerance.

use crate::algebra::scalar::ExactScalar;
use crate::bounds::holder::{alphas_for, holder_check};
use crate::error::{Error, Result};
use crate::geometry::curve::Curve;
use crate::geometry::point::Point;
use crate::geometry::projection::make_projection;
use crate::partition::{assign_curves, build_partition};

use super::brute::count_brute;

/// Parameters of a partitioned count.
#[derive(Debug, Clone)]
pub struct CountParams {
    /// Cells per partitioning round (rounded up to a power of two).
    pub r: usize,
    /// Maximum partitioning depth; 0 forces brute force.
    pub depth_cap: usize,
    /// Per-round cell imbalance allowance.
    pub delta: ExactScalar,
    /// Seed for every random choice in the run.
    pub seed: u64,
    /// Nodes with m * n at or below this are counted directly.
    pub base_threshold: usize,
    /// Fail (instead of falling back to brute force) when no projection
    /// direction can be certified for a contained-curve subproblem.
    pub strict_projection: bool,
}

impl CountParams {
    pub fn new(r: usize, depth_cap: usize, seed: u64) -> CountParams {
        CountParams {
            r,
            depth_cap,
            delta: crate::algebra::scalar::ratio(1, 20),
            seed,
            base_threshold: 4096,
            strict_projection: false,
        }
    }
}

/// Bookkeeping of one partitioning level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub depth: usize,
    /// Points and curves entering the node.
    pub m: usize,
    pub n: usize,
    /// Zero-bucket points and contained curves.
    pub m0: usize,
    pub n0: usize,
    /// Crossing curves.
    pub n_prime: usize,
    /// Total of cell sizes; m0 + sum_mi == m always.
    pub sum_mi: usize,
    pub cells_used: usize,
    /// Distinct parameter crossings observed, and the deg(curve) * deg(f)
    /// budget they must stay within.
    pub crossings_observed: usize,
    pub crossing_budget: usize,
    pub holder_ok: bool,
}

/// Result of a partitioned count.
#[derive(Debug, Clone)]
pub struct CountOutcome {
    pub count: u64,
    /// One record per partitioning node, parents before children.
    pub levels: Vec<LevelRecord>,
    /// Contained-curve subproblems that fell back to brute force because no
    /// projection direction could be certified.
    pub projection_fallbacks: usize,
}

/// splitmix64 step, used to derive independent child seeds.
fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e3779b97f4a7c15);
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Count point-curve incidences exactly via recursive partitioning.
pub fn count_partitioned(
    points: &[Point],
    curves: &[Curve],
    params: &CountParams,
) -> Result<CountOutcome> {
    let mut outcome = CountOutcome {
        count: 0,
        levels: Vec::new(),
        projection_fallbacks: 0,
    };
    outcome.count = count_node(points, curves, params, params.depth_cap, params.seed, 0, &mut outcome.levels, &mut outcome.projection_fallbacks)?;
    Ok(outcome)
}

#[allow(clippy::too_many_arguments)]
fn count_node(
    points: &[Point],
    curves: &[Curve],
    params: &CountParams,
    depth_left: usize,
    seed: u64,
    depth: usize,
    levels: &mut Vec<LevelRecord>,
    fallbacks: &mut usize,
) -> Result<u64> {
    let m = points.len();
    let n = curves.len();
    if m == 0 || n == 0 {
        return Ok(0);
    }
    if depth_left == 0 || m * n <= params.base_threshold || m < 2 {
        return count_brute(points, curves);
    }

    let partition = build_partition(points, params.r, &params.delta, derive_seed(seed, 1))?;
    let assignment = assign_curves(&partition, curves)?;

    let sum_mi: usize = partition.cells.iter().map(|c| c.points.len()).sum();
    let m0 = partition.zero_bucket.len();
    if m0 + sum_mi != m {
        return Err(Error::InvariantBreach(format!(
            "level {depth}: zero bucket {m0} plus cells {sum_mi} misses {m} points"
        )));
    }
    let n0 = assignment.contained.len();
    let n_prime = assignment.crossing.len();
    if n0 + n_prime != n {
        return Err(Error::InvariantBreach(format!(
            "level {depth}: contained {n0} plus crossing {n_prime} misses {n} curves"
        )));
    }
    if assignment.total_crossings > assignment.crossing_budget {
        return Err(Error::InvariantBreach(format!(
            "level {depth}: {} crossings exceed the degree budget {}",
            assignment.total_crossings, assignment.crossing_budget
        )));
    }
    let sizes: Vec<usize> = partition.cells.iter().map(|c| c.points.len()).collect();
    let holder_ok = alphas_for(partition.dim)
        .iter()
        .all(|&(_, alpha)| holder_check(&sizes, alpha));
    levels.push(LevelRecord {
        depth,
        m,
        n,
        m0,
        n0,
        n_prime,
        sum_mi,
        cells_used: partition.cells.len(),
        crossings_observed: assignment.total_crossings,
        crossing_budget: assignment.crossing_budget,
        holder_ok,
    });

    let mut total = 0u64;

    // Cells: points in a cell meet a curve only if the curve visits it.
    for (cell_idx, cell) in partition.cells.iter().enumerate() {
        let cell_points: Vec<Point> = cell.points.iter().map(|&i| points[i].clone()).collect();
        let cell_curves: Vec<Curve> = assignment.per_cell[cell_idx]
            .iter()
            .map(|&j| curves[j].clone())
            .collect();
        total += count_node(
            &cell_points,
            &cell_curves,
            params,
            depth_left - 1,
            derive_seed(seed, 100 + cell_idx as u64),
            depth + 1,
            levels,
            fallbacks,
        )?;
    }

    let zero_points: Vec<Point> = partition
        .zero_bucket
        .iter()
        .map(|&i| points[i].clone())
        .collect();

    // Zero-bucket points against crossing curves: direct exact tests.
    let crossing_curves: Vec<Curve> = assignment
        .crossing
        .iter()
        .map(|&j| curves[j].clone())
        .collect();
    total += count_brute(&zero_points, &crossing_curves)?;

    // Zero-bucket points against contained curves: one dimension down.
    let contained_curves: Vec<Curve> = assignment
        .contained
        .iter()
        .map(|&j| curves[j].clone())
        .collect();
    total += count_contained(
        &zero_points,
        &contained_curves,
        params,
        depth_left,
        seed,
        depth,
        levels,
        fallbacks,
    )?;

    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn count_contained(
    zero_points: &[Point],
    contained: &[Curve],
    params: &CountParams,
    depth_left: usize,
    seed: u64,
    depth: usize,
    levels: &mut Vec<LevelRecord>,
    fallbacks: &mut usize,
) -> Result<u64> {
    if zero_points.is_empty() || contained.is_empty() {
        return Ok(0);
    }
    let dim = zero_points[0].dim();
    if dim <= 2 || zero_points.len() * contained.len() <= params.base_threshold {
        return count_brute(zero_points, contained);
    }
    match make_projection(zero_points, contained, derive_seed(seed, 2)) {
        Ok((_map, dropped_points, dropped_curves)) => count_node(
            &dropped_points,
            &dropped_curves,
            params,
            depth_left - 1,
            derive_seed(seed, 3),
            depth + 1,
            levels,
            fallbacks,
        ),
        Err(Error::GenericityFailure(msg)) => {
            if params.strict_projection {
                return Err(Error::GenericityFailure(msg));
            }
            *fallbacks += 1;
            count_brute(zero_points, contained)
        }
        Err(other) => Err(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn grid(n: i64) -> Vec<Point> {
        let mut pts = Vec::new();
        for x in 0..n {
            for y in 0..n {
                pts.push(Point::from_i64(&[x, y]));
            }
        }
        pts
    }

    fn fan_of_lines(n: i64) -> Vec<Curve> {
        // Lines y = a x + b over small slopes and offsets.
        let mut curves = Vec::new();
        let mut id = 0;
        for a in 0..n {
            for b in 0..n {
                curves.push(
                    Curve::line(id, &Point::from_i64(&[0, b]), &[int(1), int(a)]).unwrap(),
                );
                id += 1;
            }
        }
        curves
    }

    fn forced(mut p: CountParams) -> CountParams {
        // Shrink the base threshold so small fixtures actually recurse.
        p.base_threshold = 16;
        p
    }

    #[test]
    fn partitioned_count_matches_brute_force_on_grid_lines() {
        let points = grid(9);
        let curves = fan_of_lines(4);
        let oracle = count_brute(&points, &curves).unwrap();
        for seed in [1u64, 7, 23] {
            let params = forced(CountParams::new(4, 2, seed));
            let out = count_partitioned(&points, &curves, &params).unwrap();
            assert_eq!(out.count, oracle, "seed {seed}");
            assert!(!out.levels.is_empty());
            for level in &out.levels {
                assert_eq!(level.m0 + level.sum_mi, level.m);
                assert_eq!(level.n0 + level.n_prime, level.n);
                assert!(level.holder_ok);
                assert!(level.crossings_observed <= level.crossing_budget);
            }
        }
    }

    #[test]
    fn circles_and_lines_mix_counts_exactly() {
        let points = grid(8);
        let mut curves = fan_of_lines(3);
        let base = curves.len();
        for (k, (cx, cy)) in [(2i64, 2i64), (4, 3), (5, 5), (3, 6)].iter().enumerate() {
            curves.push(
                Curve::circle(base + k, &Point::from_i64(&[*cx, *cy]), &int(2)).unwrap(),
            );
        }
        let oracle = count_brute(&points, &curves).unwrap();
        let params = forced(CountParams::new(4, 2, 11));
        let out = count_partitioned(&points, &curves, &params).unwrap();
        assert_eq!(out.count, oracle);
    }

    #[test]
    fn three_dimensional_lines_count_exactly() {
        let mut points = Vec::new();
        for x in 0..4i64 {
            for y in 0..4i64 {
                for z in 0..3i64 {
                    points.push(Point::from_i64(&[x, y, z]));
                }
            }
        }
        let mut curves = Vec::new();
        for (i, dir) in [[1i64, 0, 0], [0, 1, 0], [1, 1, 1], [1, -1, 0], [0, 1, 1]]
            .iter()
            .enumerate()
        {
            curves.push(
                Curve::line(i, &Point::from_i64(&[1, 1, 1]), &[int(dir[0]), int(dir[1]), int(dir[2])])
                    .unwrap(),
            );
        }
        for (j, dir) in [[1i64, 2, 0], [2, 1, 1]].iter().enumerate() {
            curves.push(
                Curve::line(5 + j, &Point::from_i64(&[0, 0, 2]), &[int(dir[0]), int(dir[1]), int(dir[2])])
                    .unwrap(),
            );
        }
        let oracle = count_brute(&points, &curves).unwrap();
        let params = forced(CountParams::new(8, 2, 3));
        let out = count_partitioned(&points, &curves, &params).unwrap();
        assert_eq!(out.count, oracle);
    }

    #[test]
    fn depth_cap_zero_is_plain_brute_force() {
        let points = grid(5);
        let curves = fan_of_lines(3);
        let params = CountParams::new(4, 0, 1);
        let out = count_partitioned(&points, &curves, &params).unwrap();
        assert_eq!(out.count, count_brute(&points, &curves).unwrap());
        assert!(out.levels.is_empty());
    }

    #[test]
    fn same_seed_gives_identical_traces() {
        let points = grid(8);
        let curves = fan_of_lines(3);
        let params = forced(CountParams::new(4, 2, 77));
        let a = count_partitioned(&points, &curves, &params).unwrap();
        let b = count_partitioned(&points, &curves, &params).unwrap();
        assert_eq!(a.count, b.count);
        assert_eq!(a.levels, b.levels);
    }
}

//! Round-by-round construction of a certified partitioning polynomial.
//!
//! Round i must bisect every nonempty sign class of the first i-1 factors
//! at once, so its factor degree is budgeted at the least degree whose
//! monomial lift has room for 2^(i-1) pins. The classical degree guarantee
//! deg(f) <= 4 r^(1/d) is re-checked exactly at the end, as are the cell
//! capacity and coverage certificates.

use std::collections::BTreeMap;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::{ExactScalar, Sign};
use crate::algebra::veronese::min_degree_for;
use crate::error::{Error, Result};
use crate::geometry::point::Point;

use super::bisect::bisect_step;
use super::{CellRecord, Partition};

/// Build a partition with at least `requested_r` available cells (rounded up
/// to a power of two) for `points`, allowing per-round imbalance `delta`.
pub fn build_partition(
    points: &[Point],
    requested_r: usize,
    delta: &ExactScalar,
    seed: u64,
) -> Result<Partition> {
    if points.is_empty() {
        return Err(Error::input("cannot partition an empty point set"));
    }
    let dim = points[0].dim();
    if dim < 1 {
        return Err(Error::input("points must have at least one coordinate"));
    }
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::input("points of mixed dimensions"));
    }
    if requested_r < 2 {
        return Err(Error::input("partition parameter r must be at least 2"));
    }
    let two = ExactScalar::from_integer(2.into());
    let half = ExactScalar::one() / &two;
    if delta < &ExactScalar::from_integer(0.into()) || delta >= &half {
        return Err(Error::input("delta must lie in [0, 1/2)"));
    }
    let r = requested_r.next_power_of_two();
    let t = r.trailing_zeros() as usize;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::with_capacity(t);
    let mut budget_total = 0u32;
    let mut zero_bucket: Vec<usize> = Vec::new();
    // Sign classes of the factors so far; every live point starts in the
    // class of the empty sign vector.
    let mut classes: BTreeMap<Vec<Sign>, Vec<usize>> = BTreeMap::new();
    classes.insert(Vec::new(), (0..points.len()).collect());

    // The certified bound is on the total degree, so any round that
    // certifies below its nominal allowance banks the difference for the
    // rounds after it. Late rounds are the crowded ones, and one banked
    // degree buys them a much wider lift space.
    let mut banked = 0u32;
    for round in 0..t {
        let round_budget = min_degree_for(1usize << round, dim);
        budget_total += round_budget;
        let subsets: Vec<Vec<usize>> = classes.values().cloned().collect();
        let outcome =
            bisect_step(points, &subsets, dim, round_budget + banked, delta, &mut rng)?;
        banked = (round_budget + banked).saturating_sub(outcome.degree_used);
        let g = outcome.factor;
        let mut next: BTreeMap<Vec<Sign>, Vec<usize>> = BTreeMap::new();
        for (signs, members) in &classes {
            for &i in members {
                match Sign::of(&g.eval(points[i].coords())?) {
                    Sign::Zero => zero_bucket.push(i),
                    s => {
                        let mut key = signs.clone();
                        key.push(s);
                        next.entry(key).or_default().push(i);
                    }
                }
            }
        }
        classes = next;
        factors.push(g);
    }

    let degree: u32 = factors.iter().map(|g| g.degree()).sum();
    zero_bucket.sort_unstable();
    let mut cells: Vec<CellRecord> = classes
        .into_iter()
        .map(|(signs, mut points)| {
            points.sort_unstable();
            CellRecord { signs, points }
        })
        .collect();
    cells.sort_by_key(|c| c.sign_string());

    let partition = Partition {
        dim,
        requested_r,
        r,
        t,
        delta: delta.clone(),
        factors,
        degree,
        degree_budget: budget_total,
        cells,
        zero_bucket,
        point_count: points.len(),
    };
    verify_certificates(&partition)?;
    Ok(partition)
}

/// Re-check every partition certificate from scratch; all comparisons are
/// exact. Failure here means a construction bug, not bad input.
pub fn verify_certificates(p: &Partition) -> Result<()> {
    let covered: usize =
        p.zero_bucket.len() + p.cells.iter().map(|c| c.points.len()).sum::<usize>();
    if covered != p.point_count {
        return Err(Error::InvariantBreach(format!(
            "partition covers {covered} of {} points",
            p.point_count
        )));
    }
    let mut seen = vec![false; p.point_count];
    for &i in p.zero_bucket.iter().chain(p.cells.iter().flat_map(|c| c.points.iter())) {
        if i >= p.point_count || seen[i] {
            return Err(Error::InvariantBreach(format!(
                "point {i} classified twice or out of range"
            )));
        }
        seen[i] = true;
    }
    if p.cells.len() > p.r {
        return Err(Error::InvariantBreach(format!(
            "{} cells exceed the {} available sign classes",
            p.cells.len(),
            p.r
        )));
    }
    let cap = p.cell_capacity();
    for c in &p.cells {
        if ExactScalar::from_integer(c.points.len().into()) > cap {
            return Err(Error::InvariantBreach(format!(
                "cell {} holds {} points, over the exact capacity {}",
                c.sign_string(),
                c.points.len(),
                cap
            )));
        }
        if c.signs.len() != p.t || c.signs.iter().any(|s| *s == Sign::Zero) {
            return Err(Error::InvariantBreach("malformed cell sign vector".into()));
        }
    }
    let budget: u32 = (0..p.t).map(|i| min_degree_for(1usize << i, p.dim)).sum();
    if p.degree > budget {
        return Err(Error::InvariantBreach(format!(
            "partition degree {} exceeds the budget {budget}",
            p.degree
        )));
    }
    // deg(f) <= 4 r^(1/d), checked as deg(f)^d <= 4^d r in integers.
    let lhs = num_bigint::BigInt::from(p.degree).pow(p.dim as u32);
    let rhs = num_bigint::BigInt::from(4u32).pow(p.dim as u32) * num_bigint::BigInt::from(p.r);
    if lhs > rhs {
        return Err(Error::InvariantBreach(format!(
            "partition degree {} breaks the 4 r^(1/d) guarantee for r = {}",
            p.degree, p.r
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;
    use num_traits::Zero;

    fn grid(n: i64) -> Vec<Point> {
        let mut pts = Vec::new();
        for x in 0..n {
            for y in 0..n {
                pts.push(Point::from_i64(&[x, y]));
            }
        }
        pts
    }

    #[test]
    fn grid_partition_r4_certifies() {
        let pts = grid(8);
        let p = build_partition(&pts, 4, &ratio(1, 20), 7).unwrap();
        assert_eq!(p.t, 2);
        assert_eq!(p.r, 4);
        assert!(p.cells.len() <= 4);
        // 64 * 0.55^2 = 19.36
        assert!(p.max_cell() <= 19);
        verify_certificates(&p).unwrap();
    }

    #[test]
    fn requested_r_rounds_up_to_a_power_of_two() {
        let pts = grid(6);
        let p = build_partition(&pts, 5, &ratio(1, 20), 3).unwrap();
        assert_eq!(p.t, 3);
        assert_eq!(p.r, 8);
        assert_eq!(p.requested_r, 5);
    }

    #[test]
    fn zero_bucket_points_lie_on_some_factor() {
        let pts = grid(7);
        let p = build_partition(&pts, 8, &ratio(1, 20), 1).unwrap();
        for &i in &p.zero_bucket {
            let on_any = p
                .factors
                .iter()
                .any(|g| g.eval(pts[i].coords()).unwrap().is_zero());
            assert!(on_any);
        }
        for c in &p.cells {
            for &i in &c.points {
                let signs = p.sign_vector(&pts[i]).unwrap().unwrap();
                assert_eq!(&signs, &c.signs);
            }
        }
    }

    #[test]
    fn three_dimensional_points_partition() {
        let mut pts = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    pts.push(Point::from_i64(&[x, y, z]));
                }
            }
        }
        let p = build_partition(&pts, 8, &ratio(1, 20), 21).unwrap();
        assert_eq!(p.dim, 3);
        verify_certificates(&p).unwrap();
    }

    #[test]
    fn same_seed_reproduces_the_partition() {
        let pts = grid(6);
        let a = build_partition(&pts, 8, &ratio(1, 20), 42).unwrap();
        let b = build_partition(&pts, 8, &ratio(1, 20), 42).unwrap();
        let fa: Vec<String> = a.factors.iter().map(|g| g.to_text()).collect();
        let fb: Vec<String> = b.factors.iter().map(|g| g.to_text()).collect();
        assert_eq!(fa, fb);
        assert_eq!(a.zero_bucket, b.zero_bucket);
    }

    #[test]
    fn partitions_succeed_across_seeds_and_dimensions() {
        use rand::{Rng, SeedableRng};
        let delta = ratio(1, 20);
        for seed in 0..12 {
            build_partition(&grid(6), 8, &delta, seed).unwrap();
        }
        let mut cube = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    cube.push(Point::from_i64(&[x, y, z]));
                }
            }
        }
        for seed in 0..6 {
            build_partition(&cube, 8, &delta, seed).unwrap();
        }
        // Random rational clouds at the largest size the partition is asked
        // to handle elsewhere: 256 points, r = 16, both dimensions.
        for (dim, seed) in [(2usize, 5u64), (3, 6)] {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pts: Vec<Point> = (0..256)
                .map(|_| {
                    let coords: Vec<_> = (0..dim)
                        .map(|_| ratio(rng.gen_range(-64..=64), rng.gen_range(1..=8)))
                        .collect();
                    Point::new(coords)
                })
                .collect();
            let p = build_partition(&pts, 16, &delta, seed).unwrap();
            verify_certificates(&p).unwrap();
        }
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(build_partition(&[], 4, &ratio(1, 20), 0).is_err());
        let pts = grid(3);
        assert!(build_partition(&pts, 1, &ratio(1, 20), 0).is_err());
        assert!(build_partition(&pts, 4, &ratio(1, 2), 0).is_err());
        assert!(build_partition(&pts, 4, &ratio(-1, 20), 0).is_err());
    }
}

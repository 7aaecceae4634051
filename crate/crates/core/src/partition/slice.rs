//! Complete search of a one-parameter family of level-split directions.
//!
//! Each point carries a pair of integer values (a, c); a direction (alpha,
//! beta) assigns it the value alpha*a + beta*c. For every subset the feasible
//! levels form a closed band between two order statistics of its values, and
//! a direction certifies when all bands intersect. As the direction rotates,
//! the sorted order inside a subset changes only where two of its points tie,
//! so the half-circle of directions splits into finitely many arcs with a
//! fixed order each. On one arc the band endpoints are fixed linear forms,
//! the certificate condition is an intersection of homogeneous half-planes,
//! and its feasible cone is an exact interval in slope space. Sweeping the
//! arcs in angular order and intersecting each with its cone therefore finds
//! a certifying direction whenever one exists, including certificates that
//! hold only at a single direction, which no amount of sampling can hit.
//!
//! Directions are kept as primitive integer pairs with alpha > 0, or alpha on
//! the boundary as (0, 1); the antipode of a direction certifies the same
//! splits with signs flipped, so half the circle covers everything.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A direction of the slice plane, as a primitive integer pair.
pub(crate) type Dir = (BigInt, BigInt);

/// Primitive representative of (x, y) in the closed right half-circle:
/// alpha > 0, or (0, 1) for the vertical. `None` for the zero vector.
fn normalize_half(x: BigInt, y: BigInt) -> Option<Dir> {
    if x.is_zero() && y.is_zero() {
        return None;
    }
    let g = x.gcd(&y);
    let (mut x, mut y) = (x / &g, y / &g);
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        x = -x;
        y = -y;
    }
    Some((x, y))
}

/// Angular order on half-circle directions: increasing slope, vertical last.
fn angle_cmp(a: &Dir, b: &Dir) -> Ordering {
    // a before b exactly when the cross product a x b is positive.
    (&a.1 * &b.0).cmp(&(&a.0 * &b.1))
}

fn value(d: &Dir, pt: &(BigInt, BigInt)) -> BigInt {
    &d.0 * &pt.0 + &d.1 * &pt.1
}

/// Interval of feasible directions in slope space. `lo == None` means no
/// lower bound, `hi == None` means feasibility extends through the vertical.
struct Cone {
    lo: Option<Dir>,
    hi: Option<Dir>,
    empty: bool,
}

impl Cone {
    fn full() -> Self {
        Cone {
            lo: None,
            hi: None,
            empty: false,
        }
    }

    fn check_empty(&mut self) {
        if let (Some(lo), Some(hi)) = (&self.lo, &self.hi) {
            if angle_cmp(lo, hi) == Ordering::Greater {
                self.empty = true;
            }
        }
    }

    fn tighten_lo(&mut self, d: Dir) {
        if self.lo.as_ref().is_none_or(|lo| angle_cmp(&d, lo) == Ordering::Greater) {
            self.lo = Some(d);
            self.check_empty();
        }
    }

    fn tighten_hi(&mut self, d: Dir) {
        if self.hi.as_ref().is_none_or(|hi| angle_cmp(&d, hi) == Ordering::Less) {
            self.hi = Some(d);
            self.check_empty();
        }
    }

    /// Intersect with the half-plane n1*alpha + n2*beta <= 0.
    fn clip(&mut self, n1: BigInt, n2: BigInt) {
        if self.empty {
            return;
        }
        match n2.sign() {
            num_bigint::Sign::Plus => {
                // Slopes at most -n1/n2; the vertical drops out.
                let d = normalize_half(n2, -n1).expect("n2 nonzero");
                self.tighten_hi(d);
            }
            num_bigint::Sign::Minus => {
                let d = normalize_half(-n2, n1).expect("n2 nonzero");
                self.tighten_lo(d);
            }
            num_bigint::Sign::NoSign => {
                if n1.is_positive() {
                    // alpha <= 0 leaves only the vertical.
                    self.tighten_lo((BigInt::zero(), BigInt::one()));
                }
                // n1 <= 0 holds everywhere on the half-circle.
            }
        }
    }

    /// A feasible direction within the closed arc [a, b], if any. `a == None`
    /// stands for the open end of the half-circle just past the downward
    /// vertical.
    fn meet(&self, a: Option<&Dir>, b: &Dir) -> Option<Dir> {
        if self.empty {
            return None;
        }
        let left = match (&self.lo, a) {
            (Some(lo), Some(a)) => {
                if angle_cmp(lo, a) == Ordering::Greater {
                    Some(lo)
                } else {
                    Some(a)
                }
            }
            (Some(lo), None) => Some(lo),
            (None, a) => a,
        };
        let right = match &self.hi {
            Some(hi) if angle_cmp(hi, b) == Ordering::Less => hi,
            _ => b,
        };
        match left {
            Some(l) if angle_cmp(l, right) == Ordering::Greater => None,
            Some(l) => Some(l.clone()),
            None => Some(right.clone()),
        }
    }
}

struct Event {
    dir: Dir,
    subset: usize,
    p: usize,
    q: usize,
}

/// A direction whose per-subset level bands all intersect, or `None` when no
/// direction of the plane certifies. `subsets[j]` holds the (a, c) value
/// pairs of subset j's points; `caps[j]` is the largest count allowed
/// strictly on either side of the level.
pub(crate) fn sweep_slice(subsets: &[Vec<(BigInt, BigInt)>], caps: &[usize]) -> Option<Dir> {
    debug_assert_eq!(subsets.len(), caps.len());
    if subsets.is_empty() || subsets.iter().any(Vec::is_empty) {
        return None;
    }
    let vertical = || (BigInt::zero(), BigInt::one());

    // Every unordered pair that ever ties contributes the direction where it
    // does; between consecutive such directions all orders are constant.
    let mut events: Vec<Event> = Vec::new();
    for (j, pts) in subsets.iter().enumerate() {
        for p in 0..pts.len() {
            for q in p + 1..pts.len() {
                let da = &pts[p].0 - &pts[q].0;
                let dc = &pts[p].1 - &pts[q].1;
                if let Some(dir) = normalize_half(dc, -da) {
                    events.push(Event {
                        dir,
                        subset: j,
                        p,
                        q,
                    });
                }
            }
        }
    }
    events.sort_by(|x, y| angle_cmp(&x.dir, &y.dir).then(x.subset.cmp(&y.subset)));

    // Sorted orders in the first arc, ties broken by point index. Duplicate
    // value pairs tie on every arc and never produce an event, so the index
    // tiebreak keeps them in one consistent relative order throughout.
    let first_end: Dir = events.first().map_or_else(vertical, |e| e.dir.clone());
    let start_sample = if first_end.0.is_zero() {
        (BigInt::one(), BigInt::zero())
    } else {
        (first_end.0.clone(), &first_end.1 - BigInt::one())
    };
    let sort_subset = |order: &mut Vec<usize>, j: usize, at: &Dir| {
        order.sort_by(|&x, &y| {
            value(at, &subsets[j][x])
                .cmp(&value(at, &subsets[j][y]))
                .then(x.cmp(&y))
        });
    };
    let mut orders: Vec<Vec<usize>> = Vec::with_capacity(subsets.len());
    let mut pos: Vec<Vec<usize>> = Vec::with_capacity(subsets.len());
    for (j, pts) in subsets.iter().enumerate() {
        let mut order: Vec<usize> = (0..pts.len()).collect();
        sort_subset(&mut order, j, &start_sample);
        let mut p = vec![0usize; pts.len()];
        for (rank, &i) in order.iter().enumerate() {
            p[i] = rank;
        }
        orders.push(order);
        pos.push(p);
    }

    let band_of = |orders: &[Vec<usize>], j: usize| -> (usize, usize) {
        let n = orders[j].len();
        (orders[j][n - 1 - caps[j]], orders[j][caps[j]])
    };
    let mut bands: Vec<(usize, usize)> = (0..subsets.len())
        .map(|j| band_of(&orders, j))
        .collect();

    // The certificate condition with fixed bands: every subset's lower band
    // endpoint stays at most every subset's upper one. Each pair is one
    // homogeneous half-plane; their intersection is an interval of slopes.
    let rebuild = |bands: &[(usize, usize)]| -> Cone {
        let mut cone = Cone::full();
        for (j, &(lo_pt, _)) in bands.iter().enumerate() {
            for (j2, &(_, hi_pt)) in bands.iter().enumerate() {
                let n1 = &subsets[j][lo_pt].0 - &subsets[j2][hi_pt].0;
                let n2 = &subsets[j][lo_pt].1 - &subsets[j2][hi_pt].1;
                cone.clip(n1, n2);
                if cone.empty {
                    return cone;
                }
            }
        }
        cone
    };
    let mut cone = rebuild(&bands);

    let mut arc_start: Option<Dir> = None;
    let mut k = 0usize;
    loop {
        let arc_end: Dir = events.get(k).map_or_else(vertical, |e| e.dir.clone());
        if let Some(w) = cone.meet(arc_start.as_ref(), &arc_end) {
            return Some(w);
        }
        if k >= events.len() {
            return None;
        }

        // Apply the batch of ties at arc_end. A lone tie in a subset swaps
        // two order-adjacent points; anything denser is re-sorted inside the
        // next arc, which costs a sort but stays exact.
        let mut k2 = k;
        while k2 < events.len() && angle_cmp(&events[k2].dir, &arc_end) == Ordering::Equal {
            k2 += 1;
        }
        let mut touched: Vec<usize> = Vec::new();
        let mut dirty: Vec<usize> = Vec::new();
        for e in &events[k..k2] {
            if !touched.contains(&e.subset) {
                touched.push(e.subset);
            }
            if dirty.contains(&e.subset) {
                continue;
            }
            let (rp, rq) = (pos[e.subset][e.p], pos[e.subset][e.q]);
            let lone = events[k..k2]
                .iter()
                .filter(|f| f.subset == e.subset)
                .count()
                == 1;
            if lone && rp.abs_diff(rq) == 1 {
                orders[e.subset].swap(rp, rq);
                pos[e.subset][e.p] = rq;
                pos[e.subset][e.q] = rp;
            } else {
                dirty.push(e.subset);
            }
        }
        if !dirty.is_empty() {
            let next_end: Dir = events.get(k2).map_or_else(vertical, |e| e.dir.clone());
            let sample = if angle_cmp(&arc_end, &next_end) == Ordering::Equal {
                arc_end.clone()
            } else {
                (&arc_end.0 + &next_end.0, &arc_end.1 + &next_end.1)
            };
            for &j in &dirty {
                sort_subset(&mut orders[j], j, &sample);
                for (rank, &i) in orders[j].iter().enumerate() {
                    pos[j][i] = rank;
                }
            }
        }
        let mut personnel_changed = false;
        for &j in &touched {
            let b = band_of(&orders, j);
            if b != bands[j] {
                bands[j] = b;
                personnel_changed = true;
            }
        }
        if personnel_changed {
            cone = rebuild(&bands);
        }
        arc_start = Some(arc_end);
        k = k2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Independent check that a direction certifies: sort each subset's
    /// values and test that the level bands share a point.
    fn certifies(subsets: &[Vec<(BigInt, BigInt)>], caps: &[usize], dir: &Dir) -> bool {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for (j, pts) in subsets.iter().enumerate() {
            let mut vals: Vec<BigInt> = pts.iter().map(|p| value(dir, p)).collect();
            vals.sort();
            let l = vals[vals.len() - 1 - caps[j]].clone();
            let h = vals[caps[j]].clone();
            lo = Some(lo.map_or(l.clone(), |c| c.max(l)));
            hi = Some(hi.map_or(h.clone(), |c| c.min(h)));
        }
        lo.unwrap() <= hi.unwrap()
    }

    #[test]
    fn finds_a_single_direction_certificate() {
        // With caps of zero all four values must coincide at one shared
        // level, which happens only at (1, 1). Sampling cannot hit a lone
        // direction; the sweep must.
        let subsets = vec![
            vec![(b(1), b(0)), (b(0), b(1))],
            vec![(b(2), b(-1)), (b(-1), b(2))],
        ];
        let caps = [0usize, 0];
        let dir = sweep_slice(&subsets, &caps).expect("certificate exists");
        assert_eq!(dir, (b(1), b(1)));
        assert!(certifies(&subsets, &caps, &dir));
    }

    #[test]
    fn reports_no_certificate_when_ties_disagree() {
        // The two subsets tie at different directions, so with caps of zero
        // no direction certifies.
        let subsets = vec![
            vec![(b(1), b(0)), (b(0), b(1))],
            vec![(b(2), b(0)), (b(0), b(1))],
        ];
        assert!(sweep_slice(&subsets, &[0, 0]).is_none());
    }

    #[test]
    fn certificate_on_an_open_arc_is_found() {
        // The c-bands of the two subsets share the level 0 near the vertical
        // while the a-values pull them apart, so the certifying directions
        // form a small arc next to the vertical rather than a single point.
        let subsets = vec![
            vec![(b(-5), b(1)), (b(-4), b(-1)), (b(-6), b(0)), (b(-5), b(2))],
            vec![(b(5), b(1)), (b(4), b(-1)), (b(6), b(0)), (b(5), b(-2))],
        ];
        let caps = [2usize, 2];
        let dir = sweep_slice(&subsets, &caps).expect("certificate exists");
        assert!(certifies(&subsets, &caps, &dir));
    }

    #[test]
    fn vertical_direction_is_reachable() {
        // All values agree at the vertical and nowhere else: equal c
        // throughout, distinct a inside each subset.
        let subsets = vec![
            vec![(b(1), b(3)), (b(2), b(3))],
            vec![(b(0), b(3)), (b(5), b(3))],
        ];
        let caps = [0usize, 0];
        let dir = sweep_slice(&subsets, &caps).expect("certificate exists");
        assert_eq!(dir, (b(0), b(1)));
        assert!(certifies(&subsets, &caps, &dir));
    }

    #[test]
    fn exhaustive_small_instances_match_direction_enumeration() {
        // Brute force: try every primitive direction with small entries plus
        // every tie direction of the instance. On instances this small the
        // sweep and the enumeration must agree on existence.
        let instances: Vec<Vec<Vec<(i64, i64)>>> = vec![
            vec![vec![(0, 3), (1, -2), (4, 4)], vec![(2, 2), (-1, 5), (3, 0)]],
            vec![vec![(1, 1), (2, 2), (3, 3)], vec![(1, 2), (2, 4), (-1, -2)]],
            vec![vec![(5, 0), (0, 5), (5, 5), (2, 3)], vec![(1, 4), (4, 1), (3, 3), (0, 0)]],
            vec![vec![(2, 7), (7, 2)], vec![(3, 1), (1, 3)], vec![(0, 4), (4, 0)]],
        ];
        for pts in instances {
            let subsets: Vec<Vec<(BigInt, BigInt)>> = pts
                .iter()
                .map(|s| s.iter().map(|&(x, y)| (b(x), b(y))).collect())
                .collect();
            let caps: Vec<usize> = subsets.iter().map(|s| (s.len() - 1) / 2).collect();
            let mut candidates: Vec<Dir> = Vec::new();
            for x in -12i64..=12 {
                for y in -12i64..=12 {
                    if let Some(d) = normalize_half(b(x), b(y)) {
                        if !candidates.contains(&d) {
                            candidates.push(d);
                        }
                    }
                }
            }
            // Tie directions across all point pairs, same subset or not: the
            // boundary of the certifying set consists of such directions, so
            // together with the generic grid the enumeration is complete.
            let pool: Vec<&(BigInt, BigInt)> = subsets.iter().flatten().collect();
            for p in 0..pool.len() {
                for q in p + 1..pool.len() {
                    let da = &pool[p].0 - &pool[q].0;
                    let dc = &pool[p].1 - &pool[q].1;
                    if let Some(d) = normalize_half(dc, -da) {
                        if !candidates.contains(&d) {
                            candidates.push(d);
                        }
                    }
                }
            }
            let brute = candidates.iter().any(|d| certifies(&subsets, &caps, d));
            match sweep_slice(&subsets, &caps) {
                Some(dir) => {
                    assert!(certifies(&subsets, &caps, &dir));
                    assert!(brute, "sweep found a certificate enumeration missed");
                }
                None => assert!(!brute, "enumeration found a certificate the sweep missed"),
            }
        }
    }
}

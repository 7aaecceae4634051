//! Real-root isolation by Descartes'-rule bisection.
//!
//! The input is reduced to its square-free part, a Cauchy bound brackets all
//! real roots, and intervals are bisected until the sign-variation count of
//! the interval-transformed polynomial certifies zero roots or exactly one.
//! Rational roots discovered at split points are recorded exactly and
//! deflated out, so every returned interval either pins a root (`lo == hi`)
//! or brackets exactly one simple root with a sign change at its endpoints.

use num_traits::{One, Signed, Zero};

use super::scalar::{ExactScalar, Sign};
use super::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

/// One isolating interval: a degenerate `[r, r]` for an exact rational root,
/// otherwise an open `(lo, hi)` containing exactly one root of the
/// square-free part, with nonzero opposite signs at the endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: ExactScalar,
    pub hi: ExactScalar,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> ExactScalar {
        &self.hi - &self.lo
    }
}

/// Isolation result for one polynomial: disjoint intervals in increasing
/// order, one per distinct real root.
#[derive(Debug, Clone)]
pub struct RootIsolation {
    intervals: Vec<RootInterval>,
    /// Square-free part of the input; retained so intervals can be refined.
    square_free: UvPolynomial,
    /// Square-free part with every exactly-found rational root deflated out.
    /// Exact roots can sit at the endpoints of open intervals, where the
    /// square-free part vanishes; this part stays nonzero there and still
    /// changes sign across each open interval, so bisection runs against it.
    bisect_part: UvPolynomial,
    /// False when the input had a repeated root that was collapsed.
    pub multiplicity_free: bool,
}

impl RootIsolation {
    pub fn count(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[RootInterval] {
        &self.intervals
    }

    pub fn square_free(&self) -> &UvPolynomial {
        &self.square_free
    }

    /// Bisect every open interval until its width drops below `width`.
    /// The one-root-per-interval invariant is preserved: the kept half is the
    /// one whose endpoints still change sign, and a root hit exactly by a
    /// midpoint collapses to a degenerate interval.
    pub fn refine(&mut self, width: &ExactScalar) {
        assert!(width.is_positive(), "refinement width must be positive");
        let two = ExactScalar::from_integer(2.into());
        for iv in &mut self.intervals {
            // The deflated part is nonzero at both endpoints (exact roots
            // only ever coincide with endpoints, and those were divided
            // out), so the sign comparison below is always decisive.
            while !iv.is_exact() && iv.width() >= *width {
                let mid = (&iv.lo + &iv.hi) / &two;
                match self.bisect_part.sign_at(&mid) {
                    Sign::Zero => {
                        iv.lo = mid.clone();
                        iv.hi = mid;
                    }
                    s => {
                        if s == self.bisect_part.sign_at(&iv.lo) {
                            iv.lo = mid;
                        } else {
                            iv.hi = mid;
                        }
                    }
                }
            }
        }
    }

    /// Refine until consecutive intervals have strictly separated endpoints:
    /// `hi_i < lo_{i+1}`. Needed before sampling points between roots.
    pub fn separate(&mut self) {
        let two = ExactScalar::from_integer(2.into());
        loop {
            let mut touching = None;
            for i in 0..self.intervals.len().saturating_sub(1) {
                if self.intervals[i].hi >= self.intervals[i + 1].lo {
                    touching = Some(i);
                    break;
                }
            }
            let Some(i) = touching else { break };
            for j in [i, i + 1] {
                let iv = &self.intervals[j];
                if iv.is_exact() {
                    continue;
                }
                let target = iv.width() / &two;
                let mut single = RootIsolation {
                    intervals: vec![iv.clone()],
                    square_free: self.square_free.clone(),
                    bisect_part: self.bisect_part.clone(),
                    multiplicity_free: self.multiplicity_free,
                };
                single.refine(&target);
                self.intervals[j] = single.intervals.pop().unwrap();
            }
        }
    }

    /// Sample points strictly between consecutive roots, plus one point below
    /// the smallest root and one above the largest. Between them the
    /// square-free part (hence the original polynomial) has constant sign.
    pub fn gap_samples(&mut self) -> Vec<ExactScalar> {
        if self.intervals.is_empty() {
            return vec![ExactScalar::zero()];
        }
        self.separate();
        let two = ExactScalar::from_integer(2.into());
        let one = ExactScalar::one();
        let mut samples = Vec::with_capacity(self.intervals.len() + 1);
        samples.push(&self.intervals[0].lo - &one);
        for i in 0..self.intervals.len() - 1 {
            samples.push((&self.intervals[i].hi + &self.intervals[i + 1].lo) / &two);
        }
        samples.push(&self.intervals[self.intervals.len() - 1].hi + &one);
        samples
    }
}

/// Cauchy root bound: every real root of `p` has absolute value below
/// `1 + max_i |a_i| / |a_n|`.
fn cauchy_bound(p: &UvPolynomial) -> ExactScalar {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut max = ExactScalar::zero();
    let deg = p.degree().unwrap();
    for (i, c) in p.coeffs().iter().enumerate() {
        if i == deg {
            continue;
        }
        let ratio = c.abs() / &lead;
        if ratio > max {
            max = ratio;
        }
    }
    max + ExactScalar::one()
}

/// Sign-variation count of `p` mapped from the open interval `(lo, hi)` onto
/// `(0, infinity)`. Zero variations certify no roots in the interval, one
/// variation certifies exactly one.
fn descartes_variations(p: &UvPolynomial, lo: &ExactScalar, hi: &ExactScalar) -> usize {
    let span = hi - lo;
    let p01 = p.taylor_shift(lo).scale_arg(&span); // roots in (lo,hi) -> (0,1)
    let rev = p01.reverse(); // (0,1) -> (1,inf)
    rev.taylor_shift(&ExactScalar::one()).sign_variations() // -> (0,inf)
}

/// Isolate the distinct real roots of `p`.
///
/// The zero polynomial raises the zero-restriction signal: callers landed in
/// a containment case (the restricted curve lies inside the zero set) and
/// must handle it structurally rather than as a root list.
pub fn isolate_real_roots(p: &UvPolynomial) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::ZeroRestriction);
    }
    let square_free = p.square_free_part()?;
    let multiplicity_free = square_free.degree() == p.degree();
    if square_free.degree() == Some(0) {
        return Ok(RootIsolation {
            intervals: Vec::new(),
            square_free: square_free.clone(),
            bisect_part: square_free,
            multiplicity_free,
        });
    }

    // Deflating exact roots found at split points keeps endpoints off the
    // root set; `work` always has nonzero values at every queued endpoint.
    let mut work = square_free.clone();
    let bound = cauchy_bound(&work);
    let mut exact: Vec<ExactScalar> = Vec::new();
    let mut open: Vec<RootInterval> = Vec::new();
    let mut queue: Vec<(ExactScalar, ExactScalar)> = vec![(-bound.clone(), bound)];
    let two = ExactScalar::from_integer(2.into());
    let mut steps = 0usize;

    while let Some((lo, hi)) = queue.pop() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::InvariantBreach(
                "root isolation failed to converge".into(),
            ));
        }
        match descartes_variations(&work, &lo, &hi) {
            0 => {}
            1 => open.push(RootInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / &two;
                if work.eval(&mid).is_zero() {
                    let linear = UvPolynomial::from_coeffs(vec![-mid.clone(), ExactScalar::one()]);
                    work = work.div_exact(&linear)?;
                    exact.push(mid.clone());
                }
                queue.push((lo, mid.clone()));
                queue.push((mid, hi));
            }
        }
    }

    let mut intervals = open;
    intervals.extend(exact.into_iter().map(|r| RootInterval { lo: r.clone(), hi: r }));
    // Tie-break by hi so an exact root [r, r] sorts before an open interval
    // (r, b) that begins at it; separate() relies on sorted order.
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
    Ok(RootIsolation {
        intervals,
        square_free,
        bisect_part: work,
        multiplicity_free,
    })
}

/// Independent oracle: count roots of `p` seen by walking a uniform grid of
/// the given step across `[lo, hi]` and counting exact zero hits plus sign
/// alternations between consecutive nonzero samples.
///
/// Sound whenever distinct roots are farther apart than `step` and any
/// repeated root lands exactly on a grid point.
pub fn grid_sign_scan(
    p: &UvPolynomial,
    lo: &ExactScalar,
    hi: &ExactScalar,
    step: &ExactScalar,
) -> usize {
    let mut count = 0usize;
    let mut last: Option<Sign> = None;
    let mut t = lo.clone();
    while t <= *hi {
        match p.sign_at(&t) {
            Sign::Zero => {
                count += 1;
                last = None; // the alternation around this root is already counted
            }
            s => {
                if let Some(prev) = last {
                    if prev != s {
                        count += 1;
                    }
                }
                last = Some(s);
            }
        }
        t += step;
    }
    count
}

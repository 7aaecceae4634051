//! Audits of the structural assumptions behind the incidence bounds.
//!
//! A family has k degrees of freedom with multiplicity s when every k points
//! lie on at most s common curves. Any violating point tuple lies on at
//! least two curves, so it suffices to enumerate k-subsets of each curve's
//! incident points; within the sample budget that enumeration is exhaustive
//! and a clean result certifies freeness, beyond it a seeded random sample
//! can only report a violation or come back indeterminate. Pairwise
//! intersection counts and shared-component witnesses come from exact
//! univariate algebra, and containment counts against low-dimensional
//! surfaces give observed stand-ins for the q_j parameters of the bounds.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rayon::prelude::*;

use crate::algebra::mvpoly::MvPolynomial;
use crate::error::{Error, Result};
use crate::geometry::curve::{curve_in_variety, Curve};
use crate::geometry::intersect::curve_pair_intersections;
use crate::geometry::point::Point;

/// Outcome of a degrees-of-freedom audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KstStatus {
    /// Exhaustively verified: no k points lie on more than s curves.
    Free,
    /// A witness was found.
    Violation,
    /// The sampled subsets were clean but the search was not exhaustive.
    Indeterminate,
}

impl KstStatus {
    pub fn name(self) -> &'static str {
        match self {
            KstStatus::Free => "free",
            KstStatus::Violation => "violation",
            KstStatus::Indeterminate => "indeterminate",
        }
    }
}

/// k points and the more-than-s curves through all of them.
#[derive(Debug, Clone)]
pub struct DofWitness {
    pub points: Vec<usize>,
    pub curves: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DofAudit {
    pub k: u32,
    pub s: u32,
    pub status: KstStatus,
    pub witness: Option<DofWitness>,
    pub subsets_checked: u64,
    pub exhaustive: bool,
}

fn binomial_capped(n: usize, k: usize, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

/// Lexicographic k-subsets of 0..n.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            idx: (0..k).collect(),
            n,
            started: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.clone());
        }
        // Advance the rightmost index that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] + (k - i) < self.n {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
    }
}

/// The curves through every point of `subset` (global point indices),
/// stopping early once more than `s` are found when `early` is set.
fn curves_through(
    points: &[Point],
    curves: &[Curve],
    subset: &[usize],
    s: u32,
    early: bool,
) -> Result<Vec<usize>> {
    let mut through = Vec::new();
    for (j, c) in curves.iter().enumerate() {
        let mut all = true;
        for &pi in subset {
            if !c.contains_point(&points[pi])? {
                all = false;
                break;
            }
        }
        if all {
            through.push(j);
            if early && through.len() > s as usize {
                break;
            }
        }
    }
    Ok(through)
}

/// Audit the k-degrees-of-freedom condition with multiplicity s: search for
/// k points lying on more than s common curves. `sample_budget` caps the
/// number of k-subsets examined; searches within the budget are exhaustive.
pub fn audit_dof(
    points: &[Point],
    curves: &[Curve],
    k: u32,
    s: u32,
    sample_budget: u64,
    seed: u64,
) -> Result<DofAudit> {
    if k == 0 || s == 0 {
        return Err(Error::input("degrees of freedom and multiplicity must be positive"));
    }
    let k_usize = k as usize;
    // Points on each curve; any violating subset lies on one of these lists.
    let incident: Vec<Vec<usize>> = curves
        .par_iter()
        .map(|c| {
            let mut on = Vec::new();
            for (i, p) in points.iter().enumerate() {
                if c.contains_point(p)? {
                    on.push(i);
                }
            }
            Ok(on)
        })
        .collect::<Result<Vec<_>>>()?;

    let total: u128 = incident
        .iter()
        .map(|on| binomial_capped(on.len(), k_usize, sample_budget as u128))
        .fold(0u128, |acc, x| acc.saturating_add(x));

    if total <= sample_budget as u128 {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut checked = 0u64;
        for on in &incident {
            for combo in Combinations::new(on.len(), k_usize) {
                let subset: Vec<usize> = combo.iter().map(|&i| on[i]).collect();
                if !seen.insert(subset.clone()) {
                    continue;
                }
                checked += 1;
                let through = curves_through(points, curves, &subset, s, false)?;
                if through.len() > s as usize {
                    return Ok(DofAudit {
                        k,
                        s,
                        status: KstStatus::Violation,
                        witness: Some(DofWitness {
                            points: subset,
                            curves: through,
                        }),
                        subsets_checked: checked,
                        exhaustive: true,
                    });
                }
            }
        }
        return Ok(DofAudit {
            k,
            s,
            status: KstStatus::Free,
            witness: None,
            subsets_checked: checked,
            exhaustive: true,
        });
    }

    // Too many subsets: seeded random sampling. Curves with fewer than k
    // incident points carry no candidate subsets.
    let eligible: Vec<usize> = (0..curves.len())
        .filter(|&j| incident[j].len() >= k_usize)
        .collect();
    if eligible.is_empty() {
        return Ok(DofAudit {
            k,
            s,
            status: KstStatus::Free,
            witness: None,
            subsets_checked: 0,
            exhaustive: true,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0u64;
    for _ in 0..sample_budget {
        let j = eligible[rng.gen_range(0..eligible.len())];
        let mut subset: Vec<usize> = incident[j]
            .choose_multiple(&mut rng, k_usize)
            .copied()
            .collect();
        subset.sort_unstable();
        checked += 1;
        let through = curves_through(points, curves, &subset, s, true)?;
        if through.len() > s as usize {
            let full = curves_through(points, curves, &subset, s, false)?;
            return Ok(DofAudit {
                k,
                s,
                status: KstStatus::Violation,
                witness: Some(DofWitness {
                    points: subset,
                    curves: full,
                }),
                subsets_checked: checked,
                exhaustive: false,
            });
        }
    }
    Ok(DofAudit {
        k,
        s,
        status: KstStatus::Indeterminate,
        witness: None,
        subsets_checked: checked,
        exhaustive: false,
    })
}

/// Pairwise intersection audit.
#[derive(Debug, Clone)]
pub struct PairAudit {
    pub pairs_checked: usize,
    /// Pairs with no implicit side available for the intersection test.
    pub pairs_skipped: usize,
    pub max_intersections: usize,
    /// Pairs sharing a whole component, as (i, j, description).
    pub overlaps: Vec<(usize, usize, String)>,
    /// Every checked pair met in at most deg * deg points.
    pub bezout_ok: bool,
}

/// Intersect every pair of curves exactly; shared components are collected
/// as witnesses instead of failing the audit.
pub fn audit_pairs(curves: &[Curve]) -> Result<PairAudit> {
    let pairs: Vec<(usize, usize)> = (0..curves.len())
        .flat_map(|i| (i + 1..curves.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<(usize, usize, std::result::Result<usize, Error>)> = pairs
        .par_iter()
        .map(|&(i, j)| (i, j, curve_pair_intersections(&curves[i], &curves[j])))
        .collect();

    let mut audit = PairAudit {
        pairs_checked: 0,
        pairs_skipped: 0,
        max_intersections: 0,
        overlaps: Vec::new(),
        bezout_ok: true,
    };
    for (i, j, res) in results {
        match res {
            Ok(count) => {
                audit.pairs_checked += 1;
                audit.max_intersections = audit.max_intersections.max(count);
                let budget = curves[i].degree as usize * curves[j].degree as usize;
                if count > budget {
                    audit.bezout_ok = false;
                }
            }
            Err(Error::CommonComponent(msg)) => {
                audit.pairs_checked += 1;
                audit.overlaps.push((i, j, msg));
            }
            Err(Error::Unsupported(_)) => {
                audit.pairs_skipped += 1;
            }
            Err(other) => return Err(other),
        }
    }
    Ok(audit)
}

/// A low-dimensional algebraic surface: the common zero set of `polys`,
/// tracked under the dimension class `j` it witnesses.
#[derive(Debug, Clone)]
pub struct Surface {
    pub label: String,
    pub j: usize,
    pub polys: Vec<MvPolynomial>,
}

#[derive(Debug, Clone)]
pub struct ContainmentAudit {
    /// (label, j, number of curves inside), per surface.
    pub per_surface: Vec<(String, usize, usize)>,
    /// For each dimension class j, the largest count over its surfaces.
    pub q_hat: BTreeMap<usize, usize>,
}

/// Count, for every surface, the curves lying entirely inside it.
pub fn audit_containment(curves: &[Curve], surfaces: &[Surface]) -> Result<ContainmentAudit> {
    let counts: Vec<usize> = surfaces
        .par_iter()
        .map(|surf| {
            let mut count = 0usize;
            for c in curves {
                let mut inside = true;
                for g in &surf.polys {
                    if !curve_in_variety(c, g)? {
                        inside = false;
                        break;
                    }
                }
                if inside {
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut per_surface = Vec::with_capacity(surfaces.len());
    let mut q_hat = BTreeMap::new();
    for (surf, count) in surfaces.iter().zip(counts) {
        per_surface.push((surf.label.clone(), surf.j, count));
        let entry = q_hat.entry(surf.j).or_insert(0usize);
        *entry = (*entry).max(count);
    }
    Ok(ContainmentAudit { per_surface, q_hat })
}

/// Affine j-flats through j+1 sampled points, as intersections of d-j
/// independent hyperplanes. Degenerate samples yield lower-dimensional
/// flats, which only under-count and keep the audit conservative.
pub fn flats_through_points(
    points: &[Point],
    dim: usize,
    j: usize,
    count: usize,
    seed: u64,
) -> Vec<Surface> {
    use crate::algebra::linalg::nullspace_basis;
    use crate::algebra::scalar::ExactScalar;
    if j + 1 > points.len() || j >= dim {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<usize> = (0..points.len()).collect();
    let mut surfaces = Vec::with_capacity(count);
    for surf_idx in 0..count {
        let sample: Vec<usize> = indices.choose_multiple(&mut rng, j + 1).copied().collect();
        // Homogeneous rows (p, 1) so the kernel vectors are affine forms.
        let rows: Vec<Vec<ExactScalar>> = sample
            .iter()
            .map(|&i| {
                let mut row = points[i].coords().to_vec();
                row.push(ExactScalar::from_integer(1.into()));
                row
            })
            .collect();
        let basis = nullspace_basis(&rows, dim + 1);
        let polys: Vec<MvPolynomial> = basis
            .into_iter()
            .take(dim - j)
            .map(|v| {
                let mut p = MvPolynomial::constant(dim, v[dim].clone());
                for (i, a) in v[..dim].iter().enumerate() {
                    let mut exps = vec![0u32; dim];
                    exps[i] = 1;
                    p.add_term(exps, a.clone());
                }
                p
            })
            .collect();
        if polys.len() == dim - j {
            surfaces.push(Surface {
                label: format!("flat{j}d-{surf_idx}"),
                j,
                polys,
            });
        }
    }
    surfaces
}

/// Spheres through d+1 sampled points (skipping degenerate samples).
pub fn spheres_through_points(
    points: &[Point],
    dim: usize,
    count: usize,
    seed: u64,
) -> Vec<Surface> {
    use crate::algebra::linalg::solve_square;
    use crate::algebra::scalar::ExactScalar;
    if dim < 2 || points.len() < dim + 1 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<usize> = (0..points.len()).collect();
    let mut surfaces = Vec::with_capacity(count);
    for surf_idx in 0..count {
        let sample: Vec<usize> = indices.choose_multiple(&mut rng, dim + 1).copied().collect();
        // |x|^2 + b . x + e = 0: solve for (b, e) from the sampled points.
        let mut rows = Vec::with_capacity(dim + 1);
        let mut rhs = Vec::with_capacity(dim + 1);
        for &i in &sample {
            let p = &points[i];
            let mut row = p.coords().to_vec();
            row.push(ExactScalar::from_integer(1.into()));
            let norm2: ExactScalar = p.coords().iter().map(|x| x * x).sum();
            rows.push(row);
            rhs.push(-norm2);
        }
        let Some(sol) = solve_square(&rows, &rhs) else {
            continue;
        };
        let mut poly = MvPolynomial::constant(dim, sol[dim].clone());
        for i in 0..dim {
            let mut sq = vec![0u32; dim];
            sq[i] = 2;
            poly.add_term(sq, ExactScalar::from_integer(1.into()));
            let mut lin = vec![0u32; dim];
            lin[i] = 1;
            poly.add_term(lin, sol[i].clone());
        }
        surfaces.push(Surface {
            label: format!("sphere-{surf_idx}"),
            j: dim - 1,
            polys: vec![poly],
        });
    }
    surfaces
}

/// The default surface battery for a containment audit: j-flats for every
/// 2 <= j < d, plus spheres in the top class.
pub fn builtin_surfaces(points: &[Point], dim: usize, per_kind: usize, seed: u64) -> Vec<Surface> {
    let mut surfaces = Vec::new();
    for j in 2..dim {
        surfaces.extend(flats_through_points(
            points,
            dim,
            j,
            per_kind,
            seed ^ (j as u64).wrapping_mul(0x9e3779b97f4a7c15),
        ));
    }
    if dim >= 3 {
        surfaces.extend(spheres_through_points(points, dim, per_kind, seed ^ 0x5851f42d4c957f2d));
    }
    surfaces
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

    #[test]
    fn distinct_lines_are_two_free() {
        let points = grid(4);
        let curves = vec![
            Curve::line(0, &Point::from_i64(&[0, 0]), &[int(1), int(0)]).unwrap(),
            Curve::line(1, &Point::from_i64(&[0, 0]), &[int(0), int(1)]).unwrap(),
            Curve::line(2, &Point::from_i64(&[0, 1]), &[int(1), int(1)]).unwrap(),
        ];
        let audit = audit_dof(&points, &curves, 2, 1, 10_000, 7).unwrap();
        assert_eq!(audit.status, KstStatus::Free);
        assert!(audit.exhaustive);
        assert!(audit.witness.is_none());
    }

    #[test]
    fn duplicated_line_is_witnessed() {
        let points = grid(4);
        let curves = vec![
            Curve::line(0, &Point::from_i64(&[0, 0]), &[int(1), int(0)]).unwrap(),
            // Same support, different presentation.
            Curve::line(1, &Point::from_i64(&[2, 0]), &[int(-1), int(0)]).unwrap(),
            Curve::line(2, &Point::from_i64(&[0, 1]), &[int(1), int(1)]).unwrap(),
        ];
        let audit = audit_dof(&points, &curves, 2, 1, 10_000, 7).unwrap();
        assert_eq!(audit.status, KstStatus::Violation);
        let w = audit.witness.unwrap();
        assert_eq!(w.points.len(), 2);
        assert_eq!(w.curves, vec![0, 1]);

        let pairs = audit_pairs(&curves).unwrap();
        assert_eq!(pairs.overlaps.len(), 1);
        assert_eq!(pairs.overlaps[0].0, 0);
        assert_eq!(pairs.overlaps[0].1, 1);
        assert!(pairs.bezout_ok);
    }

    #[test]
    fn circles_need_three_points() {
        let points = vec![
            Point::from_i64(&[1, 0]),
            Point::from_i64(&[-1, 0]),
            Point::from_i64(&[0, 1]),
            Point::from_i64(&[0, -1]),
            Point::from_i64(&[3, 0]),
        ];
        let curves = vec![
            Curve::circle(0, &Point::from_i64(&[0, 0]), &int(1)).unwrap(),
            Curve::circle(1, &Point::from_i64(&[1, 0]), &int(2)).unwrap(),
            Curve::circle(2, &Point::from_i64(&[0, 3]), &int(3)).unwrap(),
        ];
        // Two circles share at most 2 points: 3 degrees of freedom, mult 1.
        let audit = audit_dof(&points, &curves, 3, 1, 10_000, 3).unwrap();
        assert_eq!(audit.status, KstStatus::Free);
        let pairs = audit_pairs(&curves).unwrap();
        assert!(pairs.max_intersections <= 2);
        assert!(pairs.overlaps.is_empty());
    }

    #[test]
    fn random_sampling_reports_honestly() {
        let points = grid(6);
        let curves = vec![
            Curve::line(0, &Point::from_i64(&[0, 0]), &[int(1), int(0)]).unwrap(),
            Curve::line(1, &Point::from_i64(&[0, 1]), &[int(1), int(0)]).unwrap(),
            Curve::line(2, &Point::from_i64(&[0, 2]), &[int(1), int(0)]).unwrap(),
        ];
        // Budget of 2 cannot exhaust the 3 * C(6,2) = 45 subsets.
        let audit = audit_dof(&points, &curves, 2, 1, 2, 5).unwrap();
        assert_eq!(audit.status, KstStatus::Indeterminate);
        assert!(!audit.exhaustive);
        assert_eq!(audit.subsets_checked, 2);
    }

    #[test]
    fn containment_counts_lines_in_a_plane() {
        // Lines in the plane z = 0 of R^3, one line off it.
        let curves = vec![
            Curve::line(0, &Point::from_i64(&[0, 0, 0]), &[int(1), int(0), int(0)]).unwrap(),
            Curve::line(1, &Point::from_i64(&[0, 1, 0]), &[int(1), int(1), int(0)]).unwrap(),
            Curve::line(2, &Point::from_i64(&[0, 0, 1]), &[int(1), int(0), int(0)]).unwrap(),
        ];
        let z = MvPolynomial::var(3, 2);
        let surfaces = vec![Surface {
            label: "plane-z0".into(),
            j: 2,
            polys: vec![z],
        }];
        let audit = audit_containment(&curves, &surfaces).unwrap();
        assert_eq!(audit.per_surface[0].2, 2);
        assert_eq!(audit.q_hat.get(&2), Some(&2));
    }

    #[test]
    fn builtin_surfaces_find_coplanar_structure() {
        // Points and lines living inside z = 0.
        let mut points = Vec::new();
        for x in 0..4i64 {
            for y in 0..4i64 {
                points.push(Point::from_i64(&[x, y, 0]));
            }
        }
        let curves = vec![
            Curve::line(0, &Point::from_i64(&[0, 0, 0]), &[int(1), int(0), int(0)]).unwrap(),
            Curve::line(1, &Point::from_i64(&[0, 1, 0]), &[int(0), int(1), int(0)]).unwrap(),
        ];
        let surfaces = builtin_surfaces(&points, 3, 6, 19);
        assert!(!surfaces.is_empty());
        let audit = audit_containment(&curves, &surfaces).unwrap();
        // Every sampled flat is inside z = 0, so some flat holds both lines.
        assert_eq!(audit.q_hat.get(&2), Some(&2));
    }

    #[test]
    fn sphere_solver_recovers_the_circumscribed_sphere() {
        use num_traits::Zero;
        let points = vec![
            Point::from_i64(&[1, 0, 0]),
            Point::from_i64(&[-1, 0, 0]),
            Point::from_i64(&[0, 1, 0]),
            Point::from_i64(&[0, 0, 1]),
        ];
        let spheres = spheres_through_points(&points, 3, 1, 2);
        assert_eq!(spheres.len(), 1);
        for p in &points {
            let v = spheres[0].polys[0].eval(p.coords()).unwrap();
            assert!(v.is_zero());
        }
    }
}

//! Certified generic projections to one dimension lower.
//!
//! A projection direction is generic for a configuration when dropping it
//! loses nothing: projected points stay pairwise distinct, projected curves
//! stay pairwise distinct (checked on samples), and the incidence count is
//! unchanged. Directions are drawn at random with small rational entries and
//! certified exactly; failure retries with a fresh direction up to a fixed
//! budget.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::{int, ExactScalar};
use crate::algebra::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

use super::curve::{Curve, CurveKind, Parametrization};
use super::point::Point;

const DIRECTION_RETRIES: usize = 16;

/// Linear map R^d -> R^(d-1) killing one rational direction.
#[derive(Debug, Clone)]
pub struct ProjectionMap {
    /// The direction collapsed by the projection.
    pub direction: Vec<ExactScalar>,
    /// (d-1) x d matrix applied to coordinates.
    pub matrix: Vec<Vec<ExactScalar>>,
    pub certificate: GenericityCertificate,
}

#[derive(Debug, Clone, Default)]
pub struct GenericityCertificate {
    pub points_injective: bool,
    pub curves_separated: bool,
    pub incidences_preserved: bool,
    pub incidence_count: usize,
}

impl GenericityCertificate {
    pub fn holds(&self) -> bool {
        self.points_injective && self.curves_separated && self.incidences_preserved
    }
}

fn projection_matrix(direction: &[ExactScalar]) -> Vec<Vec<ExactScalar>> {
    use num_traits::Zero;
    let d = direction.len();
    let vd = &direction[d - 1];
    debug_assert!(!vd.is_zero());
    (0..d - 1)
        .map(|i| {
            let mut row = vec![ExactScalar::zero(); d];
            row[i] = ExactScalar::from_integer(1.into());
            row[d - 1] = -&direction[i] / vd;
            row
        })
        .collect()
}

pub fn project_point(matrix: &[Vec<ExactScalar>], p: &Point) -> Point {
    Point::new(
        matrix
            .iter()
            .map(|row| row.iter().zip(p.coords().iter()).map(|(a, x)| a * x).sum())
            .collect(),
    )
}

/// Project a parametrized curve coordinatewise; the image is again a rational
/// curve with the same denominator. Any implicit system is dropped (images of
/// varieties are not cut out by substitution), so projected curves are
/// param-only records.
pub fn project_curve(matrix: &[Vec<ExactScalar>], curve: &Curve) -> Result<Curve> {
    let Some(par) = &curve.parametrization else {
        return Err(Error::Unsupported(
            "cannot project a curve without a parametrization".into(),
        ));
    };
    let coords: Vec<UvPolynomial> = matrix
        .iter()
        .map(|row| {
            let mut acc = UvPolynomial::zero();
            for (a, c) in row.iter().zip(par.coords.iter()) {
                acc = acc.add(&c.scale(a));
            }
            acc
        })
        .collect();
    let missing_point = par
        .missing_point
        .as_ref()
        .map(|mp| project_point(matrix, mp));
    let projected = Parametrization {
        coords,
        denom: par.denom.clone(),
        missing_point,
    };
    projected.validate()?;
    let degree = projected.degree();
    Ok(Curve {
        id: curve.id,
        kind: CurveKind::Param,
        dim: curve.dim - 1,
        degree,
        parametrization: Some(projected),
        implicit: None,
    })
}

fn brute_count(points: &[Point], curves: &[Curve]) -> Result<usize> {
    let mut count = 0;
    for c in curves {
        for p in points {
            if c.contains_point(p)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Certify one candidate direction. Exposed for tests that want to force a
/// degenerate direction and watch the certificate fail.
pub fn try_projection(
    points: &[Point],
    curves: &[Curve],
    direction: Vec<ExactScalar>,
) -> Result<(ProjectionMap, Vec<Point>, Vec<Curve>)> {
    use num_traits::Zero;
    let d = direction.len();
    if d < 3 {
        return Err(Error::input("projection needs ambient dimension >= 3"));
    }
    if direction[d - 1].is_zero() {
        return Err(Error::GenericityFailure(
            "projection direction has zero last coordinate".into(),
        ));
    }
    let matrix = projection_matrix(&direction);
    let mut certificate = GenericityCertificate::default();

    let projected_points: Vec<Point> = points.iter().map(|p| project_point(&matrix, p)).collect();
    let mut sorted = projected_points.clone();
    sorted.sort();
    certificate.points_injective = sorted.windows(2).all(|w| w[0] != w[1]);

    // A direction parallel to some curve collapses it to a constant map;
    // that is a genericity failure (retryable), not a structural error.
    let mut projected_curves: Vec<Curve> = Vec::with_capacity(curves.len());
    for c in curves {
        match project_curve(&matrix, c) {
            Ok(pc) => projected_curves.push(pc),
            Err(Error::Input(msg)) => {
                return Err(Error::GenericityFailure(format!(
                    "curve {} degenerates under this direction: {msg}",
                    c.id
                )))
            }
            Err(other) => return Err(other),
        }
    }

    // Curves separate when, for each pair, some sample of one misses the
    // other; overlapping images agree on more samples than their degrees
    // allow.
    certificate.curves_separated = true;
    'pairs: for i in 0..projected_curves.len() {
        for j in i + 1..projected_curves.len() {
            let a = &projected_curves[i];
            let b = &projected_curves[j];
            let samples = (a.degree * b.degree + 1) as i64;
            let par = a.parametrization.as_ref().unwrap();
            let mut all_on = true;
            for t in 0..samples {
                let p = par.eval(&int(t));
                if !b.contains_point(&p)? {
                    all_on = false;
                    break;
                }
            }
            if all_on {
                certificate.curves_separated = false;
                break 'pairs;
            }
        }
    }

    let original = brute_count(points, curves)?;
    let projected = brute_count(&projected_points, &projected_curves)?;
    certificate.incidence_count = original;
    certificate.incidences_preserved = original == projected;

    if !certificate.holds() {
        return Err(Error::GenericityFailure(format!(
            "direction failed certificate (points_injective={}, curves_separated={}, incidences_preserved={})",
            certificate.points_injective,
            certificate.curves_separated,
            certificate.incidences_preserved
        )));
    }
    Ok((
        ProjectionMap {
            direction,
            matrix,
            certificate,
        },
        projected_points,
        projected_curves,
    ))
}

/// Find a certified generic projection for the configuration, retrying fresh
/// random rational directions up to a fixed budget.
pub fn make_projection(
    points: &[Point],
    curves: &[Curve],
    seed: u64,
) -> Result<(ProjectionMap, Vec<Point>, Vec<Curve>)> {
    let d = points
        .first()
        .map(Point::dim)
        .or_else(|| curves.first().map(|c| c.dim))
        .ok_or_else(|| Error::input("empty configuration"))?;
    if d < 3 {
        return Err(Error::input("projection needs ambient dimension >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_failure = String::new();
    for _ in 0..DIRECTION_RETRIES {
        let direction: Vec<ExactScalar> = (0..d)
            .map(|i| {
                let num = rng.gen_range(-19i64..=19);
                let den = rng.gen_range(1i64..=5);
                if i == d - 1 {
                    // keep the collapsed coordinate usable
                    crate::algebra::scalar::ratio(num.abs().max(1), den)
                } else {
                    crate::algebra::scalar::ratio(num, den)
                }
            })
            .collect();
        match try_projection(points, curves, direction) {
            Ok(found) => return Ok(found),
            Err(Error::GenericityFailure(msg)) => last_failure = msg,
            Err(other) => return Err(other),
        }
    }
    Err(Error::GenericityFailure(format!(
        "no generic direction within {DIRECTION_RETRIES} retries (last: {last_failure})"
    )))
}

//! Algebraic curves carried in parametric and/or implicit form.
//!
//! A parametrization is a tuple of rational coordinate functions with a
//! shared denominator that has no real roots; polynomial curves use the
//! constant denominator 1. The denominator restriction keeps every real
//! parameter value on the curve (no poles) and keeps restriction degrees
//! within the `deg(curve) * deg(polynomial)` budget. Rational circle
//! parametrizations miss one point of the curve (the limit at infinite
//! parameter); that point is stored explicitly so membership and
//! intersection tests stay exact.
//!
//! The implicit side, when present, is a list of polynomials whose common
//! zero set is exactly the curve; the built-in constructors guarantee this.

use num_traits::Zero;

use crate::algebra::mvpoly::MvPolynomial;
use crate::algebra::roots::isolate_real_roots;
use crate::algebra::scalar::{ExactScalar, Sign};
use crate::algebra::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

use super::point::Point;

/// Rational parametrization `t -> (coords[i](t) / denom(t))_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub coords: Vec<UvPolynomial>,
    pub denom: UvPolynomial,
    /// The one curve point not attained by any finite parameter, when the
    /// parametrization has such a point (rational circle forms do).
    pub missing_point: Option<Point>,
}

impl Parametrization {
    /// Polynomial parametrization: denominator 1, nothing missing.
    pub fn polynomial(coords: Vec<UvPolynomial>) -> Self {
        Parametrization {
            coords,
            denom: UvPolynomial::one(),
            missing_point: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Max degree over numerators and denominator: the curve degree bound
    /// used in crossing budgets.
    pub fn degree(&self) -> u32 {
        self.coords
            .iter()
            .map(|c| c.degree_or_zero())
            .chain(std::iter::once(self.denom.degree_or_zero()))
            .max()
            .unwrap_or(0) as u32
    }

    /// Exact evaluation at a parameter value.
    pub fn eval(&self, t: &ExactScalar) -> Point {
        let den = self.denom.eval(t);
        debug_assert!(!den.is_zero(), "denominator has a real root");
        Point::new(self.coords.iter().map(|c| c.eval(t) / &den).collect())
    }

    /// Validate the structural requirements: same-dimension coordinates, a
    /// denominator without real roots, and a non-constant coordinate map.
    pub fn validate(&self) -> Result<()> {
        if self.coords.is_empty() {
            return Err(Error::input("parametrization with no coordinates"));
        }
        if self.denom.is_zero() {
            return Err(Error::input("parametrization with zero denominator"));
        }
        if self.denom.degree_or_zero() > 0 {
            let iso = isolate_real_roots(&self.denom)?;
            if iso.count() > 0 {
                return Err(Error::Unsupported(
                    "parametrization denominator has a real root (pole)".into(),
                ));
            }
        }
        // A map is constant iff every coordinate c/denom is a constant
        // rational function, i.e. c is a scalar multiple of denom.
        let all_const = self.coords.iter().all(|c| {
            if c.is_zero() {
                return true;
            }
            match (c.degree(), self.denom.degree()) {
                (Some(dc), Some(dd)) if dc == dd => {
                    let lead = c.leading().unwrap() / self.denom.leading().unwrap();
                    c.sub(&self.denom.scale(&lead)).is_zero()
                }
                _ => false,
            }
        });
        if all_const {
            return Err(Error::input("parametrization is a constant map"));
        }
        if let Some(mp) = &self.missing_point {
            if mp.dim() != self.coords.len() {
                return Err(Error::input("missing point dimension mismatch"));
            }
        }
        Ok(())
    }
}

/// Built-in curve kinds plus free-form parametric records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Line,
    Circle,
    Circle3d,
    Graph,
    Param,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Line => "line",
            CurveKind::Circle => "circle",
            CurveKind::Circle3d => "circle3d",
            CurveKind::Graph => "graph",
            CurveKind::Param => "param",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "line" => CurveKind::Line,
            "circle" => CurveKind::Circle,
            "circle3d" => CurveKind::Circle3d,
            "graph" => CurveKind::Graph,
            "param" => CurveKind::Param,
            other => return Err(Error::input(format!("unknown curve kind '{other}'"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Curve {
    pub id: usize,
    pub kind: CurveKind,
    pub dim: usize,
    pub degree: u32,
    pub parametrization: Option<Parametrization>,
    pub implicit: Option<Vec<MvPolynomial>>,
}

impl Curve {
    /// Line through `base` with direction `dir` (must be nonzero).
    pub fn line(id: usize, base: &Point, dir: &[ExactScalar]) -> Result<Curve> {
        let d = base.dim();
        if dir.len() != d {
            return Err(Error::input("line direction dimension mismatch"));
        }
        if dir.iter().all(|c| c.is_zero()) {
            return Err(Error::input("line with zero direction"));
        }
        let coords = base
            .coords()
            .iter()
            .zip(dir.iter())
            .map(|(b, v)| UvPolynomial::from_coeffs(vec![b.clone(), v.clone()]))
            .collect();
        // Implicit: d-1 independent hyperplanes vanishing on the line. With
        // pivot coordinate j (dir[j] != 0), each other coordinate i yields
        // dir[j] (x_i - b_i) - dir[i] (x_j - b_j) = 0.
        let pivot = dir.iter().position(|c| !c.is_zero()).unwrap();
        let mut implicit = Vec::with_capacity(d - 1);
        for i in 0..d {
            if i == pivot {
                continue;
            }
            let xi = MvPolynomial::var(d, i);
            let xj = MvPolynomial::var(d, pivot);
            let term_i = xi
                .sub(&MvPolynomial::constant(d, base.coord(i).clone()))
                .scale(&dir[pivot]);
            let term_j = xj
                .sub(&MvPolynomial::constant(d, base.coord(pivot).clone()))
                .scale(&dir[i]);
            implicit.push(term_i.sub(&term_j));
        }
        Ok(Curve {
            id,
            kind: CurveKind::Line,
            dim: d,
            degree: 1,
            parametrization: Some(Parametrization::polynomial(coords)),
            implicit: Some(implicit),
        })
    }

    /// Planar circle with rational center and radius, in the rational
    /// parametrization `(a + r(1-t^2)/(1+t^2), b + 2rt/(1+t^2))`; the point
    /// `(a - r, b)` is the parameter-infinity limit and is stored as missing.
    pub fn circle(id: usize, center: &Point, radius: &ExactScalar) -> Result<Curve> {
        if center.dim() != 2 {
            return Err(Error::input("planar circle center must be 2-dimensional"));
        }
        if !matches!(Sign::of(radius), Sign::Pos) {
            return Err(Error::input("circle radius must be positive"));
        }
        let (a, b) = (center.coord(0), center.coord(1));
        // numerators against denom 1 + t^2
        let num_x = UvPolynomial::from_coeffs(vec![a + radius, ExactScalar::zero(), a - radius]);
        let num_y = UvPolynomial::from_coeffs(vec![
            b.clone(),
            radius.clone() + radius,
            b.clone(),
        ]);
        let denom = UvPolynomial::from_i64(&[1, 0, 1]);
        let missing = Point::new(vec![a - radius, b.clone()]);
        let x = MvPolynomial::var(2, 0);
        let y = MvPolynomial::var(2, 1);
        let dx = x.sub(&MvPolynomial::constant(2, a.clone()));
        let dy = y.sub(&MvPolynomial::constant(2, b.clone()));
        let imp = dx
            .mul(&dx)
            .add(&dy.mul(&dy))
            .sub(&MvPolynomial::constant(2, radius * radius));
        Ok(Curve {
            id,
            kind: CurveKind::Circle,
            dim: 2,
            degree: 2,
            parametrization: Some(Parametrization {
                coords: vec![num_x, num_y],
                denom,
                missing_point: Some(missing),
            }),
            implicit: Some(vec![imp]),
        })
    }

    /// Circle in R^3: center `c`, scale `radius`, spanned by rational vectors
    /// `u`, `v` with `u.u == v.v != 0` and `u.v == 0`. The curve is
    /// `c + r u (1-t^2)/(1+t^2) + r v 2t/(1+t^2)`, cut out by its plane and
    /// sphere; `c - r u` is the missing parameter-infinity point.
    pub fn circle3d(
        id: usize,
        center: &Point,
        radius: &ExactScalar,
        u: &[ExactScalar],
        v: &[ExactScalar],
    ) -> Result<Curve> {
        if center.dim() != 3 || u.len() != 3 || v.len() != 3 {
            return Err(Error::input("circle3d data must be 3-dimensional"));
        }
        if !matches!(Sign::of(radius), Sign::Pos) {
            return Err(Error::input("circle3d radius must be positive"));
        }
        let dot = |a: &[ExactScalar], b: &[ExactScalar]| -> ExactScalar {
            a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
        };
        let uu = dot(u, u);
        let vv = dot(v, v);
        let uv = dot(u, v);
        if uu.is_zero() || uu != vv || !uv.is_zero() {
            return Err(Error::input(
                "circle3d spanning vectors must be orthogonal with equal nonzero norm",
            ));
        }
        let denom = UvPolynomial::from_i64(&[1, 0, 1]);
        let mut coords = Vec::with_capacity(3);
        for i in 0..3 {
            // c_i (1+t^2) + r u_i (1-t^2) + r v_i 2t
            let c0 = center.coord(i) + radius * &u[i];
            let c1 = radius * &v[i] * crate::algebra::scalar::int(2);
            let c2 = center.coord(i) - radius * &u[i];
            coords.push(UvPolynomial::from_coeffs(vec![c0, c1, c2]));
        }
        let missing = Point::new(
            (0..3)
                .map(|i| center.coord(i) - radius * &u[i])
                .collect(),
        );
        // Plane: normal w = u x v through the center.
        let w = [
            &u[1] * &v[2] - &u[2] * &v[1],
            &u[2] * &v[0] - &u[0] * &v[2],
            &u[0] * &v[1] - &u[1] * &v[0],
        ];
        let mut plane = MvPolynomial::zero(3);
        for i in 0..3 {
            plane = plane.add(
                &MvPolynomial::var(3, i)
                    .sub(&MvPolynomial::constant(3, center.coord(i).clone()))
                    .scale(&w[i]),
            );
        }
        // Sphere: |x - c|^2 = r^2 (u.u).
        let mut sphere = MvPolynomial::constant(3, -(radius * radius * &uu));
        for i in 0..3 {
            let di = MvPolynomial::var(3, i)
                .sub(&MvPolynomial::constant(3, center.coord(i).clone()));
            sphere = sphere.add(&di.mul(&di));
        }
        Ok(Curve {
            id,
            kind: CurveKind::Circle3d,
            dim: 3,
            degree: 2,
            parametrization: Some(Parametrization {
                coords,
                denom,
                missing_point: Some(missing),
            }),
            implicit: Some(vec![plane, sphere]),
        })
    }

    /// Graph curve `t -> (t, g_2(t), ..., g_d(t))`.
    pub fn graph(id: usize, polys: &[UvPolynomial]) -> Result<Curve> {
        let d = polys.len() + 1;
        if d < 2 {
            return Err(Error::input("graph curve needs at least one coordinate polynomial"));
        }
        let mut coords = Vec::with_capacity(d);
        coords.push(UvPolynomial::variable());
        coords.extend(polys.iter().cloned());
        let degree = coords.iter().map(|c| c.degree_or_zero()).max().unwrap() as u32;
        // Implicit: x_j - g_j(x_1) for j = 2..d, substituting x_1 for t.
        let mut implicit = Vec::with_capacity(d - 1);
        for (j, g) in polys.iter().enumerate() {
            let mut p = MvPolynomial::var(d, j + 1);
            for (e, c) in g.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut exps = vec![0u32; d];
                exps[0] = e as u32;
                p.add_term(exps, -c.clone());
            }
            implicit.push(p);
        }
        Ok(Curve {
            id,
            kind: CurveKind::Graph,
            dim: d,
            degree,
            parametrization: Some(Parametrization::polynomial(coords)),
            implicit: Some(implicit),
        })
    }

    /// Free-form parametric record. No implicit system is derived, so such
    /// curves support membership, restriction, and cell traversal, but can
    /// only be intersected against curves that carry an implicit system.
    pub fn param(id: usize, parametrization: Parametrization) -> Result<Curve> {
        parametrization.validate()?;
        let dim = parametrization.dim();
        let degree = parametrization.degree();
        Ok(Curve {
            id,
            kind: CurveKind::Param,
            dim,
            degree,
            parametrization: Some(parametrization),
            implicit: None,
        })
    }

    pub fn with_id(mut self, id: usize) -> Curve {
        self.id = id;
        self
    }

    /// Exact membership test. The implicit system is used when present (it
    /// cuts out exactly the curve for every built-in kind); otherwise the
    /// parametric route solves for a real parameter hitting the point, with
    /// the missing point checked separately.
    pub fn contains_point(&self, p: &Point) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::input("point/curve dimension mismatch"));
        }
        if let Some(system) = &self.implicit {
            for poly in system {
                if !poly.eval(p.coords())?.is_zero() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        self.contains_point_parametric(p)
    }

    /// Membership via the parametrization only; exercised directly by tests
    /// to confirm both routes agree.
    pub fn contains_point_parametric(&self, p: &Point) -> Result<bool> {
        let Some(par) = &self.parametrization else {
            return Err(Error::Unsupported(
                "curve has neither implicit nor parametric form".into(),
            ));
        };
        if let Some(mp) = &par.missing_point {
            if mp == p {
                return Ok(true);
            }
        }
        // Common real root of coords[i] - p_i * denom across coordinates.
        let mut h: Option<UvPolynomial> = None;
        for (c, pi) in par.coords.iter().zip(p.coords().iter()) {
            let gi = c.sub(&par.denom.scale(pi));
            h = Some(match h {
                None => gi,
                Some(acc) => acc.gcd(&gi),
            });
            if let Some(acc) = &h {
                if acc.degree() == Some(0) {
                    return Ok(false);
                }
            }
        }
        let h = h.expect("at least one coordinate");
        if h.is_zero() {
            // Constant parametrizations are rejected at construction; a zero
            // gcd cannot happen for a valid curve.
            return Err(Error::InvariantBreach("constant parametrization".into()));
        }
        Ok(isolate_real_roots(&h)?.count() > 0)
    }
}

/// Restriction of a polynomial to a parametrized curve: the univariate
/// numerator of `f` along the curve. A zero result is the containment signal
/// (the curve lies inside the zero set of `f`). The degree never exceeds
/// `deg(f) * deg(curve)`.
pub fn restrict_to_curve(f: &MvPolynomial, curve: &Curve) -> Result<UvPolynomial> {
    let Some(par) = &curve.parametrization else {
        return Err(Error::Unsupported(
            "restriction needs a parametrized curve".into(),
        ));
    };
    if f.dim() != curve.dim {
        return Err(Error::input("polynomial/curve dimension mismatch"));
    }
    f.restrict(&par.coords, &par.denom)
}

/// Does the curve lie inside the zero set of `g`? Decided exactly through
/// the restriction: containment holds iff the restriction is identically
/// zero. Requires a parametrization.
pub fn curve_in_variety(curve: &Curve, g: &MvPolynomial) -> Result<bool> {
    Ok(restrict_to_curve(g, curve)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    #[test]
    fn line_membership_agrees_on_both_routes() {
        let base = Point::from_i64(&[1, 2, 3]);
        let dir = [int(1), int(-1), int(2)];
        let line = Curve::line(7, &base, &dir).unwrap();
        assert_eq!(line.implicit.as_ref().unwrap().len(), 2);
        let on = Point::new(vec![ratio(3, 2), ratio(3, 2), int(4)]);
        let off = Point::from_i64(&[0, 0, 0]);
        for p in [&on, &off] {
            assert_eq!(
                line.contains_point(p).unwrap(),
                line.contains_point_parametric(p).unwrap()
            );
        }
        assert!(line.contains_point(&on).unwrap());
        assert!(!line.contains_point(&off).unwrap());
    }

    #[test]
    fn circle_membership_includes_missing_point() {
        let c = Curve::circle(0, &Point::from_i64(&[2, 1]), &int(1)).unwrap();
        // (1, 1) is the parameter-infinity point of this parametrization.
        let missing = Point::from_i64(&[1, 1]);
        assert!(c.contains_point(&missing).unwrap());
        assert!(c.contains_point_parametric(&missing).unwrap());
        let on = Point::new(vec![int(2) + ratio(3, 5), int(1) + ratio(4, 5)]);
        assert!(c.contains_point(&on).unwrap());
        assert!(c.contains_point_parametric(&on).unwrap());
        let off = Point::from_i64(&[4, 4]);
        assert!(!c.contains_point(&off).unwrap());
        assert!(!c.contains_point_parametric(&off).unwrap());
    }

    #[test]
    fn circle3d_structure() {
        let center = Point::from_i64(&[0, 0, 1]);
        let u = [int(1), int(0), int(0)];
        let v = [int(0), ratio(3, 5), ratio(4, 5)];
        let c = Curve::circle3d(1, &center, &int(2), &u, &v).unwrap();
        let par = c.parametrization.as_ref().unwrap();
        // Sample several parameter values; all must satisfy the implicit system.
        for t in [int(0), int(1), ratio(-7, 3)] {
            let p = par.eval(&t);
            assert!(c.contains_point(&p).unwrap());
        }
        let missing = par.missing_point.clone().unwrap();
        assert!(c.contains_point(&missing).unwrap());
        // Mismatched spanning data is rejected.
        assert!(Curve::circle3d(1, &center, &int(2), &u, &[int(0), int(1), int(1)]).is_err());
    }

    #[test]
    fn graph_curve_membership() {
        // t -> (t, t^2 - 1, 2t)
        let g = Curve::graph(3, &[
            UvPolynomial::from_i64(&[-1, 0, 1]),
            UvPolynomial::from_i64(&[0, 2]),
        ])
        .unwrap();
        assert_eq!(g.degree, 2);
        let on = Point::from_i64(&[2, 3, 4]);
        let off = Point::from_i64(&[2, 3, 5]);
        assert!(g.contains_point(&on).unwrap());
        assert!(!g.contains_point(&off).unwrap());
        assert!(g.contains_point_parametric(&on).unwrap());
        assert!(!g.contains_point_parametric(&off).unwrap());
    }

    #[test]
    fn containment_signal_through_restriction() {
        // Diagonal line inside Z(x - y).
        let diag = Curve::line(0, &Point::from_i64(&[0, 0]), &[int(1), int(1)]).unwrap();
        let f = MvPolynomial::var(2, 0).sub(&MvPolynomial::var(2, 1));
        assert!(curve_in_variety(&diag, &f).unwrap());
        let g = MvPolynomial::var(2, 0).add(&MvPolynomial::var(2, 1));
        assert!(!curve_in_variety(&diag, &g).unwrap());
        // Circle inside its own defining polynomial's zero set.
        let circ = Curve::circle(1, &Point::from_i64(&[0, 0]), &int(3)).unwrap();
        let imp = circ.implicit.as_ref().unwrap()[0].clone();
        assert!(curve_in_variety(&circ, &imp).unwrap());
    }

    #[test]
    fn param_validation_rejects_poles_and_constants() {
        // Denominator with a real root.
        let bad = Parametrization {
            coords: vec![UvPolynomial::variable(), UvPolynomial::one()],
            denom: UvPolynomial::from_i64(&[-1, 0, 1]),
            missing_point: None,
        };
        assert!(matches!(Curve::param(0, bad), Err(Error::Unsupported(_))));
        let constant = Parametrization::polynomial(vec![
            UvPolynomial::constant(int(5)),
            UvPolynomial::constant(int(2)),
        ]);
        assert!(Curve::param(0, constant).is_err());
    }
}

//! Plain-text file formats for points and curves.
//!
//! Points: one point per line, coordinates as whitespace-separated `p/q`
//! rationals. Curves: one record per line of whitespace-separated
//! `key=value` tokens, starting with `kind=<line|circle|circle3d|graph|param>
//! dim=<d>` followed by kind-specific parameters. Vector values join their
//! entries with commas; polynomial values use the compact spaceless text
//! form. Lines starting with `#` and blank lines are skipped. Writers emit
//! canonical records that re-read identically; ids are assigned by record
//! order.

use std::collections::BTreeMap;

use crate::algebra::mvpoly::MvPolynomial;
use crate::algebra::scalar::{format_scalar, parse_scalar, ExactScalar};
use crate::algebra::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

use super::curve::{Curve, CurveKind, Parametrization};
use super::point::Point;

pub fn points_to_text(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&p.to_line());
        out.push('\n');
    }
    out
}

pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    let mut dim = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = Point::parse_line(line)
            .map_err(|e| Error::input(format!("points line {}: {e}", lineno + 1)))?;
        match dim {
            None => dim = Some(p.dim()),
            Some(d) if d != p.dim() => {
                return Err(Error::input(format!(
                    "points line {}: dimension {} does not match earlier dimension {}",
                    lineno + 1,
                    p.dim(),
                    d
                )))
            }
            _ => {}
        }
        points.push(p);
    }
    Ok(points)
}

fn join_vector(v: &[ExactScalar]) -> String {
    v.iter().map(format_scalar).collect::<Vec<_>>().join(",")
}

fn parse_vector(s: &str) -> Result<Vec<ExactScalar>> {
    s.split(',').map(parse_scalar).collect()
}

fn uv_to_field(p: &UvPolynomial) -> String {
    // Univariate polynomials reuse the compact multivariate form in x1.
    let mut mv = MvPolynomial::zero(1);
    for (e, c) in p.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            mv.add_term(vec![e as u32], c.clone());
        }
    }
    mv.to_compact_text()
}

fn uv_from_field(s: &str) -> Result<UvPolynomial> {
    let mv = MvPolynomial::parse(s, 1)?;
    let deg = mv.degree() as usize;
    let mut coeffs = vec![ExactScalar::from_integer(0.into()); deg + 1];
    for (exps, c) in mv.terms() {
        coeffs[exps[0] as usize] = c.clone();
    }
    Ok(UvPolynomial::from_coeffs(coeffs))
}

pub fn curve_to_record(curve: &Curve) -> Result<String> {
    let mut fields: Vec<(String, String)> = Vec::new();
    match curve.kind {
        CurveKind::Line => {
            let par = curve.parametrization.as_ref().expect("lines are parametrized");
            let base: Vec<ExactScalar> = par.coords.iter().map(|c| c.coeff(0)).collect();
            let dir: Vec<ExactScalar> = par.coords.iter().map(|c| c.coeff(1)).collect();
            fields.push(("point".into(), join_vector(&base)));
            fields.push(("dir".into(), join_vector(&dir)));
        }
        CurveKind::Circle => {
            let imp = &curve.implicit.as_ref().expect("circles carry implicit")[0];
            let par = curve.parametrization.as_ref().expect("circles are parametrized");
            let missing = par.missing_point.as_ref().expect("circle missing point");
            // Recover center and radius from the stored forms.
            let two = crate::algebra::scalar::int(2);
            let cx = (par.coords[0].coeff(0) + par.coords[0].coeff(2)) / &two;
            let cy = par.coords[1].coeff(0);
            let radius = &cx - missing.coord(0);
            let _ = imp;
            fields.push(("center".into(), join_vector(&[cx, cy])));
            fields.push(("radius".into(), format_scalar(&radius)));
        }
        CurveKind::Circle3d => {
            return Err(Error::Unsupported(
                "circle3d records are written via their construction data".into(),
            ));
        }
        CurveKind::Graph => {
            let par = curve.parametrization.as_ref().expect("graphs are parametrized");
            for (j, g) in par.coords.iter().enumerate().skip(1) {
                fields.push((format!("g{}", j + 1), uv_to_field(g)));
            }
        }
        CurveKind::Param => {
            let par = curve.parametrization.as_ref().ok_or_else(|| {
                Error::Unsupported("param record without parametrization".into())
            })?;
            for (i, c) in par.coords.iter().enumerate() {
                fields.push((format!("x{}", i + 1), uv_to_field(c)));
            }
            fields.push(("denom".into(), uv_to_field(&par.denom)));
            if let Some(mp) = &par.missing_point {
                fields.push(("missing".into(), join_vector(mp.coords())));
            }
        }
    }
    let mut out = format!("kind={} dim={}", curve.kind.name(), curve.dim);
    for (k, v) in fields {
        out.push(' ');
        out.push_str(&k);
        out.push('=');
        out.push_str(&v);
    }
    Ok(out)
}

/// Serialize curves that round-trip through `parse_curves`. Circles in R^3
/// are written from their construction data via `circle3d_record`.
pub fn curves_to_text(curves: &[Curve]) -> Result<String> {
    let mut out = String::new();
    for c in curves {
        out.push_str(&curve_to_record(c)?);
        out.push('\n');
    }
    Ok(out)
}

/// Record line for a circle in R^3 from its construction data.
pub fn circle3d_record(
    center: &Point,
    radius: &ExactScalar,
    u: &[ExactScalar],
    v: &[ExactScalar],
) -> String {
    format!(
        "kind=circle3d dim=3 center={} radius={} u={} v={}",
        join_vector(center.coords()),
        format_scalar(radius),
        join_vector(u),
        join_vector(v)
    )
}

fn take<'a>(
    fields: &mut BTreeMap<&'a str, &'a str>,
    key: &str,
    lineno: usize,
) -> Result<&'a str> {
    fields
        .remove(key)
        .ok_or_else(|| Error::input(format!("curves line {lineno}: missing field '{key}'")))
}

pub fn parse_curves(text: &str) -> Result<Vec<Curve>> {
    let mut curves = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| {
                Error::input(format!("curves line {lineno}: token '{tok}' is not key=value"))
            })?;
            if fields.insert(k, v).is_some() {
                return Err(Error::input(format!(
                    "curves line {lineno}: duplicate field '{k}'"
                )));
            }
        }
        let kind = CurveKind::from_name(take(&mut fields, "kind", lineno)?)?;
        let dim: usize = take(&mut fields, "dim", lineno)?
            .parse()
            .map_err(|_| Error::input(format!("curves line {lineno}: bad dim")))?;
        if dim < 2 {
            return Err(Error::input(format!(
                "curves line {lineno}: ambient dimension must be at least 2"
            )));
        }
        let id = curves.len();
        let curve = match kind {
            CurveKind::Line => {
                let base = Point::new(parse_vector(take(&mut fields, "point", lineno)?)?);
                let dir = parse_vector(take(&mut fields, "dir", lineno)?)?;
                if base.dim() != dim || dir.len() != dim {
                    return Err(Error::input(format!(
                        "curves line {lineno}: line data does not match dim={dim}"
                    )));
                }
                Curve::line(id, &base, &dir)?
            }
            CurveKind::Circle => {
                if dim != 2 {
                    return Err(Error::input(format!(
                        "curves line {lineno}: circle records are planar (dim=2)"
                    )));
                }
                let center = Point::new(parse_vector(take(&mut fields, "center", lineno)?)?);
                let radius = parse_scalar(take(&mut fields, "radius", lineno)?)?;
                Curve::circle(id, &center, &radius)?
            }
            CurveKind::Circle3d => {
                if dim != 3 {
                    return Err(Error::input(format!(
                        "curves line {lineno}: circle3d records need dim=3"
                    )));
                }
                let center = Point::new(parse_vector(take(&mut fields, "center", lineno)?)?);
                let radius = parse_scalar(take(&mut fields, "radius", lineno)?)?;
                let u = parse_vector(take(&mut fields, "u", lineno)?)?;
                let v = parse_vector(take(&mut fields, "v", lineno)?)?;
                Curve::circle3d(id, &center, &radius, &u, &v)?
            }
            CurveKind::Graph => {
                let mut polys = Vec::with_capacity(dim - 1);
                for j in 2..=dim {
                    polys.push(uv_from_field(take(&mut fields, &format!("g{j}"), lineno)?)?);
                }
                let c = Curve::graph(id, &polys)?;
                if c.dim != dim {
                    return Err(Error::input(format!(
                        "curves line {lineno}: graph data does not match dim={dim}"
                    )));
                }
                c
            }
            CurveKind::Param => {
                let mut coords = Vec::with_capacity(dim);
                for i in 1..=dim {
                    coords.push(uv_from_field(take(&mut fields, &format!("x{i}"), lineno)?)?);
                }
                let denom = match fields.remove("denom") {
                    Some(v) => uv_from_field(v)?,
                    None => UvPolynomial::one(),
                };
                let missing_point = match fields.remove("missing") {
                    Some(v) => Some(Point::new(parse_vector(v)?)),
                    None => None,
                };
                Curve::param(
                    id,
                    Parametrization {
                        coords,
                        denom,
                        missing_point,
                    },
                )?
            }
        };
        if !fields.is_empty() {
            let extra: Vec<&str> = fields.keys().copied().collect();
            return Err(Error::input(format!(
                "curves line {lineno}: unknown fields {extra:?}"
            )));
        }
        curves.push(curve);
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    #[test]
    fn points_round_trip() {
        let pts = vec![
            Point::from_i64(&[1, 2]),
            Point::new(vec![ratio(1, 3), ratio(-5, 7)]),
        ];
        let text = points_to_text(&pts);
        assert_eq!(parse_points(&text).unwrap(), pts);
        let with_comments = format!("# header\n\n{text}");
        assert_eq!(parse_points(&with_comments).unwrap(), pts);
    }

    #[test]
    fn mixed_dimension_points_rejected() {
        assert!(parse_points("1/1 2/1\n1/1 2/1 3/1\n").is_err());
    }

    #[test]
    fn line_and_circle_round_trip() {
        let line = Curve::line(
            0,
            &Point::new(vec![ratio(1, 2), int(0), int(3)]),
            &[int(1), ratio(-2, 5), int(0)],
        )
        .unwrap();
        let text = curves_to_text(&[line.clone()]).unwrap();
        let parsed = parse_curves(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(curves_to_text(&parsed).unwrap(), text);

        let circle = Curve::circle(0, &Point::new(vec![int(2), ratio(1, 3)]), &ratio(5, 2)).unwrap();
        let text = curves_to_text(&[circle.clone()]).unwrap();
        assert_eq!(
            text,
            "kind=circle dim=2 center=2/1,1/3 radius=5/2\n"
        );
        let parsed = parse_curves(&text).unwrap();
        assert_eq!(parsed[0].implicit, circle.implicit);
    }

    #[test]
    fn circle3d_and_graph_and_param_records() {
        let rec = circle3d_record(
            &Point::from_i64(&[1, 0, 2]),
            &int(3),
            &[int(1), int(0), int(0)],
            &[int(0), ratio(3, 5), ratio(4, 5)],
        );
        let parsed = parse_curves(&rec).unwrap();
        assert_eq!(parsed[0].kind, CurveKind::Circle3d);
        assert_eq!(parsed[0].degree, 2);

        let graph = Curve::graph(0, &[UvPolynomial::from_i64(&[1, 0, 2])]).unwrap();
        let text = curves_to_text(&[graph.clone()]).unwrap();
        let parsed = parse_curves(&text).unwrap();
        assert_eq!(parsed[0].implicit, graph.implicit);

        let param = Curve::param(
            0,
            Parametrization {
                coords: vec![
                    UvPolynomial::from_i64(&[1, 0, -1]),
                    UvPolynomial::from_i64(&[0, 2]),
                ],
                denom: UvPolynomial::from_i64(&[1, 0, 1]),
                missing_point: Some(Point::from_i64(&[-1, 0])),
            },
        )
        .unwrap();
        let text = curves_to_text(&[param.clone()]).unwrap();
        let parsed = parse_curves(&text).unwrap();
        assert_eq!(
            parsed[0].parametrization.as_ref().unwrap(),
            param.parametrization.as_ref().unwrap()
        );
    }

    #[test]
    fn unknown_fields_and_kinds_rejected() {
        assert!(parse_curves("kind=widget dim=2").is_err());
        assert!(parse_curves("kind=line dim=2 point=0/1,0/1 dir=1/1,0/1 extra=1").is_err());
        assert!(parse_curves("kind=line dim=2 point=0/1,0/1").is_err());
        assert!(parse_curves("dim=2 point=0/1,0/1 dir=1/1,0/1").is_err());
    }
}

//! Exact intersection counting for curve pairs.
//!
//! One side must carry an implicit system (built-in kinds always do). The
//! other side's parametrization is substituted into every implicit
//! polynomial; the gcd of the resulting univariate numerators has one real
//! root per common point reached by the parametrization, and the
//! parametrization's missing point, if any, is checked separately. All
//! built-in parametrizations are injective, so distinct roots are distinct
//! points.

use crate::algebra::roots::isolate_real_roots;
use crate::algebra::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

use super::curve::Curve;

/// Number of distinct common points of two distinct curves.
///
/// Identical or overlapping curves raise the common-component signal; a pair
/// of purely parametric curves (no implicit system on either side) is
/// unsupported.
pub fn curve_pair_intersections(a: &Curve, b: &Curve) -> Result<usize> {
    if a.dim != b.dim {
        return Err(Error::input("intersecting curves of different dimensions"));
    }
    if a.id == b.id {
        return Err(Error::CommonComponent(format!(
            "curve {} intersected with itself",
            a.id
        )));
    }
    if let Some(n) = try_directed(a, b)? {
        return Ok(n);
    }
    if let Some(n) = try_directed(b, a)? {
        return Ok(n);
    }
    Err(Error::Unsupported(
        "curve pair carries no implicit system on either side".into(),
    ))
}

/// Count with `par_side` parametrized against `imp_side`'s implicit system.
/// `Ok(None)` means this orientation lacks the needed representations.
fn try_directed(par_side: &Curve, imp_side: &Curve) -> Result<Option<usize>> {
    let (Some(par), Some(system)) = (&par_side.parametrization, &imp_side.implicit) else {
        return Ok(None);
    };
    let mut h: Option<UvPolynomial> = None;
    let mut all_zero = true;
    for poly in system {
        let restricted = poly.restrict(&par.coords, &par.denom)?;
        if !restricted.is_zero() {
            all_zero = false;
        }
        h = Some(match h {
            None => restricted,
            Some(acc) => acc.gcd(&restricted),
        });
    }
    if all_zero || h.as_ref().is_some_and(|h| h.is_zero()) {
        return Err(Error::CommonComponent(format!(
            "curves {} and {} overlap",
            par_side.id, imp_side.id
        )));
    }
    let h = h.ok_or_else(|| Error::Unsupported("empty implicit system".into()))?;
    let mut count = if h.degree() == Some(0) {
        0
    } else {
        isolate_real_roots(&h)?.count()
    };
    if let Some(mp) = &par.missing_point {
        if imp_side.contains_point(mp)? {
            count += 1;
        }
    }
    Ok(Some(count))
}

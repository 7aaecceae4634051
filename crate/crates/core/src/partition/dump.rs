//! Deterministic JSON image of a partition.
//!
//! Factors travel as canonical polynomial text and delta as an exact `p/q`
//! string, so a dump re-read through `parse_partition_dump` reproduces the
//! partition bit for bit. Keys are emitted in sorted order and nothing
//! depends on time or thread count, so equal partitions dump to equal bytes.

use serde_json::{json, Map, Value};

use crate::algebra::mvpoly::MvPolynomial;
use crate::algebra::scalar::{format_scalar, parse_scalar, Sign};
use crate::error::{Error, Result};

use super::{CellRecord, Partition};

pub fn render_partition_dump(p: &Partition) -> String {
    let cells: Vec<Value> = p
        .cells
        .iter()
        .map(|c| {
            json!({
                "signs": c.sign_string(),
                "points": c.points,
            })
        })
        .collect();
    let doc = json!({
        "dim": p.dim,
        "requested_r": p.requested_r,
        "r": p.r,
        "t": p.t,
        "delta": format_scalar(&p.delta),
        "degree": p.degree,
        "degree_budget": p.degree_budget,
        "point_count": p.point_count,
        "factors": p.factors.iter().map(|f| f.to_text()).collect::<Vec<_>>(),
        "cells": cells,
        "zero_bucket": p.zero_bucket,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("partition dump serializes");
    out.push('\n');
    out
}

fn field<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| Error::input(format!("partition dump missing field '{key}'")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::input(format!("partition dump field '{key}' is not an integer")))
}

fn signs_from_string(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .map(|ch| match ch {
            '-' => Ok(Sign::Neg),
            '+' => Ok(Sign::Pos),
            other => Err(Error::input(format!(
                "cell sign string holds '{other}', expected '+' or '-'"
            ))),
        })
        .collect()
}

pub fn parse_partition_dump(text: &str) -> Result<Partition> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("partition dump is not valid JSON: {e}")))?;
    let map = doc
        .as_object()
        .ok_or_else(|| Error::input("partition dump is not a JSON object"))?;
    let dim = as_usize(field(map, "dim")?, "dim")?;
    let requested_r = as_usize(field(map, "requested_r")?, "requested_r")?;
    let r = as_usize(field(map, "r")?, "r")?;
    let t = as_usize(field(map, "t")?, "t")?;
    let point_count = as_usize(field(map, "point_count")?, "point_count")?;
    let degree = as_usize(field(map, "degree")?, "degree")? as u32;
    let degree_budget = as_usize(field(map, "degree_budget")?, "degree_budget")? as u32;
    let delta = parse_scalar(
        field(map, "delta")?
            .as_str()
            .ok_or_else(|| Error::input("delta must be a p/q string"))?,
    )?;
    let factors = field(map, "factors")?
        .as_array()
        .ok_or_else(|| Error::input("factors must be an array"))?
        .iter()
        .map(|v| {
            let text = v
                .as_str()
                .ok_or_else(|| Error::input("factor entries must be strings"))?;
            MvPolynomial::parse(text, dim)
        })
        .collect::<Result<Vec<_>>>()?;
    let cells = field(map, "cells")?
        .as_array()
        .ok_or_else(|| Error::input("cells must be an array"))?
        .iter()
        .map(|v| {
            let obj = v
                .as_object()
                .ok_or_else(|| Error::input("cell entries must be objects"))?;
            let signs = signs_from_string(
                field(obj, "signs")?
                    .as_str()
                    .ok_or_else(|| Error::input("cell signs must be a string"))?,
            )?;
            let points = field(obj, "points")?
                .as_array()
                .ok_or_else(|| Error::input("cell points must be an array"))?
                .iter()
                .map(|x| as_usize(x, "points"))
                .collect::<Result<Vec<_>>>()?;
            Ok(CellRecord { signs, points })
        })
        .collect::<Result<Vec<_>>>()?;
    let zero_bucket = field(map, "zero_bucket")?
        .as_array()
        .ok_or_else(|| Error::input("zero_bucket must be an array"))?
        .iter()
        .map(|x| as_usize(x, "zero_bucket"))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition {
        dim,
        requested_r,
        r,
        t,
        delta,
        factors,
        degree,
        degree_budget,
        cells,
        zero_bucket,
        point_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;
    use crate::geometry::point::Point;
    use crate::partition::build_partition;

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
    fn dump_round_trips_bit_for_bit() {
        let pts = grid(6);
        let p = build_partition(&pts, 4, &ratio(1, 20), 99).unwrap();
        let text = render_partition_dump(&p);
        let q = parse_partition_dump(&text).unwrap();
        assert_eq!(render_partition_dump(&q), text);
        assert_eq!(q.degree, p.degree);
        assert_eq!(q.zero_bucket, p.zero_bucket);
        assert_eq!(q.cells.len(), p.cells.len());
        let fa: Vec<String> = p.factors.iter().map(|f| f.to_text()).collect();
        let fb: Vec<String> = q.factors.iter().map(|f| f.to_text()).collect();
        assert_eq!(fa, fb);
    }

    #[test]
    fn dumps_are_stable_across_rebuilds() {
        let pts = grid(5);
        let a = build_partition(&pts, 8, &ratio(1, 20), 5).unwrap();
        let b = build_partition(&pts, 8, &ratio(1, 20), 5).unwrap();
        assert_eq!(render_partition_dump(&a), render_partition_dump(&b));
    }

    #[test]
    fn malformed_dumps_are_rejected() {
        assert!(parse_partition_dump("not json").is_err());
        assert!(parse_partition_dump("{}").is_err());
        assert!(parse_partition_dump("[1,2]").is_err());
    }
}

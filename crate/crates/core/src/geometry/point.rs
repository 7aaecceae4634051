//! Points with exact rational coordinates.

use crate::algebra::scalar::{format_scalar, parse_scalar, ExactScalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<ExactScalar>,
}

impl Point {
    pub fn new(coords: Vec<ExactScalar>) -> Self {
        Point { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| crate::algebra::scalar::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExactScalar {
        &self.coords[i]
    }

    /// One whitespace-separated `p/q` token per coordinate.
    pub fn to_line(&self) -> String {
        self.coords
            .iter()
            .map(format_scalar)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_line(line: &str) -> Result<Point> {
        let coords: Result<Vec<ExactScalar>> =
            line.split_whitespace().map(parse_scalar).collect();
        let coords = coords?;
        if coords.is_empty() {
            return Err(Error::input("empty point line"));
        }
        Ok(Point::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;

    #[test]
    fn line_round_trip() {
        let p = Point::new(vec![ratio(1, 2), ratio(-3, 4), ratio(5, 1)]);
        let line = p.to_line();
        assert_eq!(line, "1/2 -3/4 5/1");
        assert_eq!(Point::parse_line(&line).unwrap(), p);
    }

    #[test]
    fn rejects_empty() {
        assert!(Point::parse_line("   ").is_err());
    }
}

//! Curve families with declared degrees of freedom.
//!
//! A family declares `k` degrees of freedom with multiplicity `s`: at most
//! `s` member curves pass through any `k` points, and two members meet in at
//! most `s` points. The declaration is an assumption to audit, not a fact;
//! the incidence module's audits test it against concrete data.

use crate::error::{Error, Result};

use super::curve::Curve;

#[derive(Debug, Clone)]
pub struct CurveFamily {
    pub label: String,
    pub curves: Vec<Curve>,
    /// Declared degrees of freedom.
    pub k: u32,
    /// Declared multiplicity.
    pub s: u32,
    pub dim: usize,
}

impl CurveFamily {
    pub fn new(label: impl Into<String>, curves: Vec<Curve>, k: u32, s: u32) -> Result<Self> {
        if curves.is_empty() {
            return Err(Error::input("empty curve family"));
        }
        if k == 0 || s == 0 {
            return Err(Error::input("family parameters k and s must be positive"));
        }
        let dim = curves[0].dim;
        if curves.iter().any(|c| c.dim != dim) {
            return Err(Error::input("curve family mixes ambient dimensions"));
        }
        Ok(CurveFamily {
            label: label.into(),
            curves,
            k,
            s,
            dim,
        })
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.curves.iter().map(|c| c.degree).max().unwrap_or(0)
    }
}

//! Sparse multivariate polynomials over the exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent tuple, so iteration order and
//! the text representation are deterministic. Zero coefficients are never
//! stored; the zero polynomial is the empty map.
//!
//! ## Text format
//!
//! One term per `+`-separated token; each token is a coefficient in `p/q`
//! form optionally followed by `* x1^a1 x2^a2 ...` for the variables with
//! nonzero exponent. The canonical printer always writes explicit `p/q`
//! coefficients and explicit exponents, e.g. `-1/1 + 1/1 * x1^2 + 1/1 * x2^2`
//! for the unit circle. The parser also accepts the compact spaceless variant
//! used inside curve records (`-1/1+1/1*x1^2+1/1*x2^2`). Printing then
//! parsing reproduces the polynomial bit for bit.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use super::scalar::{format_scalar, parse_scalar, ExactScalar, Sign};
use super::uvpoly::UvPolynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvPolynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, ExactScalar>,
}

impl MvPolynomial {
    pub fn zero(dim: usize) -> Self {
        MvPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: ExactScalar) -> Self {
        let mut p = MvPolynomial::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    /// The coordinate variable `x_{i+1}` (zero-based index).
    pub fn var(dim: usize, i: usize) -> Self {
        assert!(i < dim, "variable index out of range");
        let mut exps = vec![0; dim];
        exps[i] = 1;
        let mut p = MvPolynomial::zero(dim);
        p.add_term(exps, ExactScalar::one());
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: ExactScalar) {
        assert_eq!(exps.len(), self.dim, "exponent tuple length mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MvPolynomial) -> MvPolynomial {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MvPolynomial) -> MvPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MvPolynomial {
        MvPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MvPolynomial) -> MvPolynomial {
        assert_eq!(self.dim, other.dim);
        let mut out = MvPolynomial::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> MvPolynomial {
        if c.is_zero() {
            return MvPolynomial::zero(self.dim);
        }
        MvPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Exact evaluation; the point must match the polynomial's dimension.
    pub fn eval(&self, point: &[ExactScalar]) -> Result<ExactScalar> {
        if point.len() != self.dim {
            return Err(Error::input(format!(
                "evaluating {}-variable polynomial at a {}-coordinate point",
                self.dim,
                point.len()
            )));
        }
        let mut acc = ExactScalar::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                if e > 0 {
                    term *= super::scalar::pow(x, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn sign_at(&self, point: &[ExactScalar]) -> Result<Sign> {
        Ok(Sign::of(&self.eval(point)?))
    }

    /// Restriction along a rational parametrization with numerators `coords`
    /// and shared denominator `denom`: returns the numerator polynomial
    /// `denom^deg(self) * self(coords/denom)`. With `denom == 1` this is the
    /// plain substitution. The result's real roots (the denominator having
    /// none) are exactly the parameter values where the restriction vanishes.
    pub fn restrict(&self, coords: &[UvPolynomial], denom: &UvPolynomial) -> Result<UvPolynomial> {
        if coords.len() != self.dim {
            return Err(Error::input(format!(
                "restricting {}-variable polynomial along {} coordinate functions",
                self.dim,
                coords.len()
            )));
        }
        let total = self.degree();
        let mut acc = UvPolynomial::zero();
        for (exps, coeff) in &self.terms {
            let term_degree: u32 = exps.iter().sum();
            let mut term = UvPolynomial::constant(coeff.clone());
            for (gamma, &e) in coords.iter().zip(exps.iter()) {
                if e > 0 {
                    term = term.mul(&gamma.pow(e));
                }
            }
            term = term.mul(&denom.pow(total - term_degree));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Canonical text form; see the module docs.
    pub fn to_text(&self) -> String {
        self.render(" + ", " * ", " ")
    }

    /// Spaceless variant safe to embed in whitespace-separated records.
    pub fn to_compact_text(&self) -> String {
        self.render("+", "*", "*")
    }

    fn render(&self, plus: &str, times: &str, var_sep: &str) -> String {
        if self.terms.is_empty() {
            return "0/1".to_string();
        }
        // Canonical term order: total degree ascending, ties by earlier
        // variables first (descending exponent vector), so x1^2 precedes x2^2.
        let mut ordered: Vec<(&Vec<u32>, &ExactScalar)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        let mut parts = Vec::with_capacity(ordered.len());
        for (exps, coeff) in ordered {
            let mut tok = format_scalar(coeff);
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| format!("x{}^{}", i + 1, e))
                .collect();
            if !vars.is_empty() {
                tok.push_str(times);
                tok.push_str(&vars.join(var_sep));
            }
            parts.push(tok);
        }
        parts.join(plus)
    }

    /// Parse either text variant back into a polynomial of dimension `dim`.
    pub fn parse(text: &str, dim: usize) -> Result<MvPolynomial> {
        let mut poly = MvPolynomial::zero(dim);
        let body = text.trim();
        if body.is_empty() {
            return Err(Error::input("empty polynomial text"));
        }
        for raw_term in body.split('+') {
            let term = raw_term.trim();
            if term.is_empty() {
                return Err(Error::input(format!("empty term in '{text}'")));
            }
            let mut factors = term.split('*').map(str::trim);
            let coeff_txt = factors
                .next()
                .ok_or_else(|| Error::input(format!("missing coefficient in '{term}'")))?;
            let coeff = parse_scalar(coeff_txt)?;
            let mut exps = vec![0u32; dim];
            for factor in factors {
                // A factor chunk may hold several space-separated powers.
                for var_tok in factor.split_whitespace() {
                    let rest = var_tok.strip_prefix('x').ok_or_else(|| {
                        Error::input(format!("expected variable power, got '{var_tok}'"))
                    })?;
                    let (idx_txt, exp_txt) = match rest.split_once('^') {
                        Some(pair) => pair,
                        None => (rest, "1"),
                    };
                    let idx: usize = idx_txt
                        .parse()
                        .map_err(|_| Error::input(format!("bad variable index '{var_tok}'")))?;
                    let exp: u32 = exp_txt
                        .parse()
                        .map_err(|_| Error::input(format!("bad exponent '{var_tok}'")))?;
                    if idx == 0 || idx > dim {
                        return Err(Error::input(format!(
                            "variable x{idx} out of range for dimension {dim}"
                        )));
                    }
                    exps[idx - 1] += exp;
                }
            }
            poly.add_term(exps, coeff);
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    fn unit_circle() -> MvPolynomial {
        // x^2 + y^2 - 1
        let x = MvPolynomial::var(2, 0);
        let y = MvPolynomial::var(2, 1);
        x.mul(&x).add(&y.mul(&y)).sub(&MvPolynomial::constant(2, int(1)))
    }

    #[test]
    fn eval_exactly() {
        let p = unit_circle();
        assert_eq!(p.eval(&[int(1), int(0)]).unwrap(), int(0));
        assert_eq!(p.eval(&[ratio(3, 5), ratio(4, 5)]).unwrap(), int(0));
        assert_eq!(p.eval(&[int(2), int(1)]).unwrap(), int(4));
        assert!(p.eval(&[int(1)]).is_err());
    }

    #[test]
    fn arithmetic_keeps_terms_normalized() {
        let p = unit_circle();
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.degree(), 0);
        let r = p.add(&MvPolynomial::constant(2, int(1)));
        // the constant term cancelled away entirely
        assert_eq!(r.term_count(), 2);
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let p = unit_circle();
        let text = p.to_text();
        assert_eq!(text, "-1/1 + 1/1 * x1^2 + 1/1 * x2^2");
        assert_eq!(MvPolynomial::parse(&text, 2).unwrap(), p);
        let compact = p.to_compact_text();
        assert_eq!(compact, "-1/1+1/1*x1^2+1/1*x2^2");
        assert_eq!(MvPolynomial::parse(&compact, 2).unwrap(), p);
        let zero = MvPolynomial::zero(3);
        assert_eq!(zero.to_text(), "0/1");
        assert_eq!(MvPolynomial::parse("0/1", 3).unwrap(), zero);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(MvPolynomial::parse("", 2).is_err());
        assert!(MvPolynomial::parse("1/1 * x3^1", 2).is_err());
        assert!(MvPolynomial::parse("1/1 * y^2", 2).is_err());
        assert!(MvPolynomial::parse("1/1 * x0^2", 2).is_err());
    }

    #[test]
    fn restriction_degree_bound() {
        // f = x^2 y + 3, curve (t^2, t^3): deg(f) * deg(curve) = 3*3 = 9.
        let x = MvPolynomial::var(2, 0);
        let y = MvPolynomial::var(2, 1);
        let f = x.mul(&x).mul(&y).add(&MvPolynomial::constant(2, int(3)));
        let gamma = [
            UvPolynomial::from_i64(&[0, 0, 1]),
            UvPolynomial::from_i64(&[0, 0, 0, 1]),
        ];
        let r = f.restrict(&gamma, &UvPolynomial::one()).unwrap();
        assert_eq!(r.degree(), Some(7));
        assert!(r.degree_or_zero() as u32 <= f.degree() * 3);
        // Spot-check against direct evaluation.
        let t = ratio(2, 3);
        let pt = [gamma[0].eval(&t), gamma[1].eval(&t)];
        assert_eq!(r.eval(&t), f.eval(&pt).unwrap());
    }

    #[test]
    fn rational_restriction_matches_denominator_scaling() {
        // f on the unit circle parametrized by ((1-t^2)/(1+t^2), 2t/(1+t^2))
        // must vanish identically.
        let f = unit_circle();
        let num_x = UvPolynomial::from_i64(&[1, 0, -1]);
        let num_y = UvPolynomial::from_i64(&[0, 2]);
        let den = UvPolynomial::from_i64(&[1, 0, 1]);
        let r = f.restrict(&[num_x, num_y], &den).unwrap();
        assert!(r.is_zero());
    }
}

//! Univariate polynomials over the exact rationals.
//!
//! These carry the restriction of a partitioning polynomial to a parametrized
//! curve, so the operations that matter are evaluation, exact division, gcd,
//! and the square-free part feeding real-root isolation.

use num_traits::{One, Zero};

use super::scalar::{ExactScalar, Sign};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` multiplies `t^i`.
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty vector and the leading coefficient is otherwise nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvPolynomial {
    coeffs: Vec<ExactScalar>,
}

impl UvPolynomial {
    pub fn zero() -> Self {
        UvPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        UvPolynomial::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UvPolynomial::constant(ExactScalar::one())
    }

    /// The identity map `t`.
    pub fn variable() -> Self {
        UvPolynomial::from_coeffs(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    pub fn from_coeffs(coeffs: Vec<ExactScalar>) -> Self {
        let mut p = UvPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UvPolynomial::from_coeffs(coeffs.iter().map(|&c| super::scalar::int(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the zero polynomial counted as 0; convenient for budgets.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn sign_at(&self, t: &ExactScalar) -> Sign {
        Sign::of(&self.eval(t))
    }

    pub fn add(&self, other: &UvPolynomial) -> UvPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UvPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UvPolynomial) -> UvPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UvPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UvPolynomial {
        UvPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UvPolynomial) -> UvPolynomial {
        if self.is_zero() || other.is_zero() {
            return UvPolynomial::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UvPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &ExactScalar) -> UvPolynomial {
        UvPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> UvPolynomial {
        let mut acc = UvPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> UvPolynomial {
        if self.coeffs.len() <= 1 {
            return UvPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * ExactScalar::from_integer(i.into()))
            .collect();
        UvPolynomial::from_coeffs(coeffs)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UvPolynomial) -> Result<(UvPolynomial, UvPolynomial)> {
        let dl = divisor
            .degree()
            .ok_or_else(|| Error::InvariantBreach("division by zero polynomial".into()))?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dl + 1 {
            return Ok((UvPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![ExactScalar::zero(); rem.len() - dl];
        while rem.len() >= dl + 1 {
            let r_lead = rem.last().unwrap().clone();
            if r_lead.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dl;
            let factor = r_lead / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = shift + i;
                let delta = c * &factor;
                rem[idx] -= delta;
            }
            quot[shift] = factor;
            // The leading entry cancels exactly.
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((
            UvPolynomial::from_coeffs(quot),
            UvPolynomial::from_coeffs(rem),
        ))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UvPolynomial) -> Result<UvPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvariantBreach(
                "inexact polynomial division".into(),
            ));
        }
        Ok(q)
    }

    /// Monic normalization: divide through by the leading coefficient.
    pub fn monic(&self) -> UvPolynomial {
        match self.leading() {
            None => UvPolynomial::zero(),
            Some(l) => {
                let inv = ExactScalar::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UvPolynomial) -> UvPolynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            // Normalizing each step keeps coefficient growth in check.
            b = r.monic();
        }
        a.monic()
    }

    /// The square-free part `p / gcd(p, p')`; shares the root set of `p` with
    /// every root simple.
    pub fn square_free_part(&self) -> Result<UvPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroRestriction);
        }
        if self.degree() == Some(0) {
            return Ok(UvPolynomial::one());
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return Ok(self.monic());
        }
        Ok(self.div_exact(&g)?.monic())
    }

    /// p(t + a): Taylor shift by Horner expansion.
    pub fn taylor_shift(&self, a: &ExactScalar) -> UvPolynomial {
        let mut result = UvPolynomial::zero();
        let shift = UvPolynomial::from_coeffs(vec![a.clone(), ExactScalar::one()]);
        for c in self.coeffs.iter().rev() {
            result = result.mul(&shift).add(&UvPolynomial::constant(c.clone()));
        }
        result
    }

    /// p(c * t).
    pub fn scale_arg(&self, c: &ExactScalar) -> UvPolynomial {
        let mut factor = ExactScalar::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &factor;
                factor *= c;
                out
            })
            .collect();
        UvPolynomial::from_coeffs(coeffs)
    }

    /// t^n * p(1/t) where n = deg p: coefficient reversal.
    pub fn reverse(&self) -> UvPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UvPolynomial::from_coeffs(coeffs)
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut count = 0;
        let mut last: Option<Sign> = None;
        for c in &self.coeffs {
            let s = Sign::of(c);
            if s == Sign::Zero {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    fn poly(coeffs: &[i64]) -> UvPolynomial {
        UvPolynomial::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_and_degree() {
        let p = poly(&[1, 0, 2]); // 1 + 2t^2
        let q = poly(&[0, 3]); // 3t
        assert_eq!(p.degree(), Some(2));
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p.mul(&q), poly(&[0, 3, 0, 6]));
        assert_eq!(p.add(&q), poly(&[1, 3, 2]));
        assert_eq!(p.sub(&p), UvPolynomial::zero());
        assert_eq!(UvPolynomial::zero().degree(), None);
    }

    #[test]
    fn eval_horner() {
        let p = poly(&[-2, 0, 1]); // t^2 - 2
        assert_eq!(p.eval(&int(3)), int(7));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(-7, 4));
    }

    #[test]
    fn division_round_trips() {
        let a = poly(&[2, -3, 1]); // (t-1)(t-2)
        let b = poly(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, poly(&[-2, 1]));
        let c = poly(&[1, 1, 1]);
        let (q2, r2) = c.div_rem(&b).unwrap();
        assert_eq!(q2.mul(&b).add(&r2), c);
    }

    #[test]
    fn gcd_extracts_common_factor() {
        let common = poly(&[-1, 1]); // t - 1
        let a = common.mul(&poly(&[5, 1]));
        let b = common.mul(&poly(&[0, 0, 7]));
        assert_eq!(a.gcd(&b), common.monic());
        assert_eq!(poly(&[1]).gcd(&poly(&[0, 1])), UvPolynomial::one());
    }

    #[test]
    fn square_free_part_drops_multiplicity() {
        let double = poly(&[-1, 1]).mul(&poly(&[-1, 1])); // (t-1)^2
        let p = double.mul(&poly(&[3, 1])); // (t-1)^2 (t+3)
        let sf = p.square_free_part().unwrap();
        assert_eq!(sf, poly(&[-1, 1]).mul(&poly(&[3, 1])).monic());
        assert!(UvPolynomial::zero().square_free_part().is_err());
    }

    #[test]
    fn transforms_agree_with_direct_eval() {
        let p = poly(&[1, -4, 0, 2]);
        let a = ratio(3, 2);
        let t = ratio(-5, 7);
        assert_eq!(p.taylor_shift(&a).eval(&t), p.eval(&(t.clone() + &a)));
        assert_eq!(p.scale_arg(&a).eval(&t), p.eval(&(t.clone() * &a)));
        // reverse: t^n p(1/t)
        let nz = ratio(2, 3);
        let n = p.degree().unwrap() as u32;
        let lhs = p.reverse().eval(&nz);
        let rhs = crate::algebra::scalar::pow(&nz, n) * p.eval(&(int(1) / &nz));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_variation_counting() {
        assert_eq!(poly(&[1, -1, 1]).sign_variations(), 2);
        assert_eq!(poly(&[1, 0, 1]).sign_variations(), 0);
        assert_eq!(poly(&[-1, 0, 0, 2]).sign_variations(), 1);
        assert_eq!(UvPolynomial::zero().sign_variations(), 0);
    }
}

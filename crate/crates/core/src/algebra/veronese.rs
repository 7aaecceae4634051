//! The Veronese lift: a point's vector of monomial values.
//!
//! Lifting degree-D sign conditions to linear ones is what turns hyperplane
//! bisection into polynomial bisection: a degree-D polynomial in d variables
//! is an affine function of the lifted coordinates.

use super::mvpoly::MvPolynomial;
use super::scalar::{pow, ExactScalar};

/// All exponent tuples in `d` variables with total degree in `1..=max_degree`,
/// ordered by total degree and, within a degree, lexicographically descending.
/// For d = 2, D = 2 the order is x1, x2, x1^2, x1x2, x2^2.
pub fn monomial_exponents(d: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn fill(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == current.len() - 1 {
            current[pos] = remaining;
            out.push(current.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            current[pos] = e;
            fill(remaining - e, pos + 1, current, out);
        }
    }
    let mut out = Vec::new();
    for deg in 1..=max_degree {
        let mut current = vec![0u32; d];
        if d == 1 {
            current[0] = deg;
            out.push(current);
        } else {
            fill(deg, 0, &mut current, &mut out);
        }
    }
    out
}

/// Dimension of the lift: C(D + d, d) - 1 monomials of degree 1..D.
pub fn lift_dim(d: usize, max_degree: u32) -> usize {
    let n = max_degree as u128 + d as u128;
    let k = d as u128;
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (n - i) / (i + 1);
    }
    (binom - 1) as usize
}

/// Least degree D whose lift has room for `s` independent constraints:
/// the smallest D with C(D + d, d) - 1 >= s.
pub fn min_degree_for(s: usize, d: usize) -> u32 {
    let mut deg = 1;
    while lift_dim(d, deg) < s {
        deg += 1;
    }
    deg
}

/// Evaluate every monomial of degree 1..max_degree at `x`, in the canonical
/// exponent order.
pub fn veronese_lift(x: &[ExactScalar], max_degree: u32) -> Vec<ExactScalar> {
    use num_traits::One;
    let exps = monomial_exponents(x.len(), max_degree);
    exps.iter()
        .map(|e| {
            let mut v = ExactScalar::one();
            for (xi, &ei) in x.iter().zip(e.iter()) {
                if ei > 0 {
                    v *= pow(xi, ei);
                }
            }
            v
        })
        .collect()
}

/// Reassemble the polynomial `sum_e coeffs[e] * x^e + constant` from lifted
/// coefficients in the canonical monomial order.
pub fn polynomial_from_lift(
    d: usize,
    max_degree: u32,
    coeffs: &[ExactScalar],
    constant: ExactScalar,
) -> MvPolynomial {
    let exps = monomial_exponents(d, max_degree);
    assert_eq!(exps.len(), coeffs.len(), "lift coefficient count mismatch");
    let mut p = MvPolynomial::constant(d, constant);
    for (e, c) in exps.into_iter().zip(coeffs.iter()) {
        p.add_term(e, c.clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn lift_matches_monomials() {
        let lifted = veronese_lift(&[int(2), int(3)], 2);
        assert_eq!(lifted, vec![int(2), int(3), int(4), int(6), int(9)]);
    }

    #[test]
    fn lift_dimension_formula() {
        assert_eq!(lift_dim(2, 2), 5);
        assert_eq!(lift_dim(2, 3), 9);
        assert_eq!(lift_dim(3, 2), 9);
        assert_eq!(lift_dim(3, 3), 19);
        for d in 1..=4 {
            for dd in 1..=5u32 {
                assert_eq!(monomial_exponents(d, dd).len(), lift_dim(d, dd));
            }
        }
    }

    #[test]
    fn minimal_degree_thresholds() {
        assert_eq!(min_degree_for(1, 2), 1);
        assert_eq!(min_degree_for(2, 2), 1);
        assert_eq!(min_degree_for(3, 2), 2);
        assert_eq!(min_degree_for(8, 2), 3);
        assert_eq!(min_degree_for(8, 3), 2);
        assert_eq!(min_degree_for(16, 3), 3);
    }

    #[test]
    fn polynomial_reassembly_agrees_with_lift() {
        use crate::algebra::scalar::ratio;
        let d = 3;
        let max_degree = 2;
        let n = lift_dim(d, max_degree);
        let coeffs: Vec<_> = (0..n).map(|i| ratio(i as i64 + 1, 3)).collect();
        let poly = polynomial_from_lift(d, max_degree, &coeffs, ratio(-7, 2));
        let x = [ratio(1, 2), int(-1), ratio(2, 5)];
        let lifted = veronese_lift(&x, max_degree);
        let direct: crate::algebra::scalar::ExactScalar = coeffs
            .iter()
            .zip(lifted.iter())
            .map(|(c, v)| c * v)
            .sum::<crate::algebra::scalar::ExactScalar>()
            + ratio(-7, 2);
        assert_eq!(poly.eval(&x).unwrap(), direct);
    }
}

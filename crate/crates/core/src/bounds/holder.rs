//! Power-mean sanity check on cell-size vectors.
//!
//! For 0 < alpha < 1 and nonnegative sizes n_1..n_u, Hölder's inequality
//! gives sum n_i^alpha <= (sum n_i)^alpha * u^(1-alpha). The partitioned
//! counter re-checks this numerically for the exponents that drive the
//! curve-incidence bounds in its ambient dimension; a failure would mean a
//! broken accounting of cell sizes, not a broken inequality.

/// Relative tolerance for the floating-point comparison.
pub const HOLDER_REL_TOL: f64 = 1e-12;

/// Does `sizes` satisfy the alpha-power-sum inequality?
pub fn holder_check(sizes: &[usize], alpha: f64) -> bool {
    assert!((0.0..=1.0).contains(&alpha), "alpha must lie in [0, 1]");
    let nonzero: Vec<f64> = sizes.iter().filter(|&&s| s > 0).map(|&s| s as f64).collect();
    if nonzero.is_empty() {
        return true;
    }
    let u = nonzero.len() as f64;
    let total: f64 = nonzero.iter().sum();
    let lhs: f64 = nonzero.iter().map(|s| s.powf(alpha)).sum();
    let rhs = total.powf(alpha) * u.powf(1.0 - alpha);
    lhs <= rhs * (1.0 + HOLDER_REL_TOL)
}

/// The cell-size exponents k/(dk - d + 1) checked after each partition
/// build, for curve families with 2 and 3 degrees of freedom.
pub fn alphas_for(dim: usize) -> Vec<(u32, f64)> {
    assert!(dim >= 2, "ambient dimension must be at least 2");
    [2u32, 3]
        .iter()
        .map(|&k| {
            let kd = k as f64;
            let d = dim as f64;
            (k, kd / (d * kd - d + 1.0))
        })
        .collect()
}

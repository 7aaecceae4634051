//! Exact algebra: rational scalars, univariate and multivariate polynomials,
//! real-root isolation, and the Veronese lift.

pub mod linalg;
pub mod mvpoly;
pub mod roots;
pub mod scalar;
pub mod uvpoly;
pub mod veronese;

pub use mvpoly::MvPolynomial;
pub use roots::{grid_sign_scan, isolate_real_roots, RootInterval, RootIsolation};
pub use scalar::{format_scalar, parse_scalar, ExactScalar, Sign};
pub use uvpoly::UvPolynomial;
pub use veronese::{lift_dim, min_degree_for, monomial_exponents, polynomial_from_lift, veronese_lift};

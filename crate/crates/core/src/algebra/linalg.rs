//! Small exact linear-algebra helpers: Gaussian elimination over the
//! rationals for the handful of dense systems the workbench solves
//! (bisection normals, hyperplanes and spheres through point tuples).

use num_traits::Zero;

use super::scalar::ExactScalar;

/// Solve `A x = b` for square `A` by Gaussian elimination with exact pivots.
/// Returns `None` when `A` is singular.
pub fn solve_square(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut m: Vec<Vec<ExactScalar>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..=n {
                let delta = &m[col][c] * &factor;
                m[r][c] -= delta;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| {
                let pivot = m[i][i].clone();
                &m[i][n] / pivot
            })
            .collect(),
    )
}

/// Indices of a maximal linearly independent subset of `rows`, found by
/// incremental elimination.
pub fn independent_rows(rows: &[Vec<ExactScalar>]) -> Vec<usize> {
    let mut basis: Vec<Vec<ExactScalar>> = Vec::new();
    let mut kept = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for b in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let factor = &v[lead] / &b[lead];
                for (vi, bi) in v.iter_mut().zip(b.iter()) {
                    let delta = bi * &factor;
                    *vi -= delta;
                }
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
            kept.push(idx);
        }
    }
    kept
}

fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Orthogonal projection of `w` off the row space of `rows`: the returned
/// vector satisfies `u . row = 0` for every row and is `w` minus a row-space
/// combination. Returns `None` when the projection vanishes (i.e. `w` lies
/// in the row space).
pub fn project_off_rowspace(
    w: &[ExactScalar],
    rows: &[Vec<ExactScalar>],
) -> Option<Vec<ExactScalar>> {
    let kept = independent_rows(rows);
    if kept.is_empty() {
        return Some(w.to_vec());
    }
    let basis: Vec<&Vec<ExactScalar>> = kept.iter().map(|&i| &rows[i]).collect();
    let k = basis.len();
    // Gram system G lambda = basis . w ; G is positive definite, so solvable.
    let gram: Vec<Vec<ExactScalar>> = (0..k)
        .map(|i| (0..k).map(|j| dot(basis[i], basis[j])).collect())
        .collect();
    let rhs: Vec<ExactScalar> = (0..k).map(|i| dot(basis[i], w)).collect();
    let lambda = solve_square(&gram, &rhs)?;
    let mut u = w.to_vec();
    for (l, b) in lambda.iter().zip(basis.iter()) {
        for (ui, bi) in u.iter_mut().zip(b.iter()) {
            let delta = bi * l;
            *ui -= delta;
        }
    }
    if u.iter().all(|x| x.is_zero()) {
        None
    } else {
        Some(u)
    }
}

/// A basis of the kernel of the row system `rows` (viewed as the coefficient
/// matrix of homogeneous equations in `width` unknowns). Empty when the
/// kernel is trivial.
pub fn nullspace_basis(rows: &[Vec<ExactScalar>], width: usize) -> Vec<Vec<ExactScalar>> {
    use num_traits::One;
    let kept = independent_rows(rows);
    if kept.len() >= width {
        return Vec::new();
    }
    // Row echelon on the independent rows.
    let mut m: Vec<Vec<ExactScalar>> = kept.iter().map(|&i| rows[i].clone()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..width {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let pivot = m[r][col].clone();
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            for c in col..width {
                let delta = &m[r][c] * &factor;
                m[i][c] -= delta;
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free_col in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ExactScalar::zero(); width];
        v[free_col] = ExactScalar::one();
        for (row_idx, &pc) in pivots.iter().enumerate() {
            // pivot row: m[row_idx][pc] * v[pc] + m[row_idx][free_col] * 1 = 0
            v[pc] = -&m[row_idx][free_col] / &m[row_idx][pc];
        }
        basis.push(v);
    }
    basis
}

/// A nontrivial kernel vector, or `None` when the kernel is trivial.
pub fn nullspace_vector(rows: &[Vec<ExactScalar>], width: usize) -> Option<Vec<ExactScalar>> {
    nullspace_basis(rows, width).into_iter().next()
}

/// The positive scalar multiple of `v` with coprime integer entries. Keeps
/// the direction (no sign flip) and leaves the zero vector alone. Exact
/// pipelines that only care about a vector up to positive scale call this
/// between stages to stop coefficient growth from compounding.
pub fn primitive_integer(v: &[ExactScalar]) -> Vec<ExactScalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::One;
    let mut den_lcm = BigInt::one();
    for x in v {
        den_lcm = den_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&den_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|n| ExactScalar::from_integer(n / &g))
        .collect()
}

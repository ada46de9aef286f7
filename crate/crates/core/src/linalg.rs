//! Small dense linear algebra on row-major `Vec<Vec<f64>>`.

use alloc::vec::Vec;

/// Solves the square system `a x = b` by Gaussian elimination with partial
/// pivoting. Returns `None` when a pivot falls below `rel_tol` times the
/// largest entry of `a`.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>, rel_tol: f64) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a.iter().flatten().fold(0.0f64, |m, x| m.max(libm::fabs(*x)));
    if scale == 0.0 {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| libm::fabs(a[i][col]).total_cmp(&libm::fabs(a[j][col])))?;
        if libm::fabs(a[pivot][col]) <= rel_tol * scale {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                for k in col..n {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = alloc::vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}

/// Least-norm solution of the underdetermined system `rows · x = rhs`
/// through the Gram matrix, `None` if the rows are numerically dependent.
pub fn least_norm(rows: &[&[f64]], rhs: &[f64], rel_tol: f64) -> Option<Vec<f64>> {
    let t = rows.len();
    let dim = rows.first().map_or(0, |r| r.len());
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let gram: Vec<Vec<f64>> = (0..t).map(|i| (0..t).map(|j| dot(rows[i], rows[j])).collect()).collect();
    let y = solve(gram, rhs.to_vec(), rel_tol)?;
    let mut x = alloc::vec![0.0; dim];
    for (row, yi) in rows.iter().zip(&y) {
        for (xk, rk) in x.iter_mut().zip(row.iter()) {
            *xk += yi * rk;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn solves_small_system() {
        let x = solve(vec![vec![2.0, 1.0], vec![1.0, 3.0]], vec![3.0, 5.0], 1e-12).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-12 && (x[1] - 1.4).abs() < 1e-12);
        assert!(solve(vec![vec![1.0, 2.0], vec![2.0, 4.0]], vec![1.0, 2.0], 1e-12).is_none());
    }

    #[test]
    fn least_norm_is_orthogonal_to_kernel() {
        let r0 = [1.0, 2.0, 0.0];
        let x = least_norm(&[&r0], &[1.0], 1e-12).unwrap();
        assert!((x[0] - 0.2).abs() < 1e-12 && (x[1] - 0.4).abs() < 1e-12 && x[2] == 0.0);
    }
}

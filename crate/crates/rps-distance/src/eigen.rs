//! Cyclic Jacobi eigensolver for symmetric matrices, eigenvalues only.
//!
//! Each Jacobi rotation is a plane rotation annihilating one off-diagonal
//! element; sweeps repeat until the off-diagonal mass falls below
//! 1e-12·‖M‖_F. The threshold strategy for early sweeps follows the
//! classic treatment in Numerical Recipes §11.1.

/// Eigenvalues of a symmetric matrix in row-major storage, ascending.
///
/// Only the upper triangle is read; callers guarantee symmetry.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), n * n, "matrix storage must be n*n");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![matrix[0]];
    }

    let mut a = matrix.to_vec();
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let fro: f64 = matrix.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = 1e-12 * fro.max(f64::MIN_POSITIVE);

    for sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += a[p * n + q].abs();
            }
        }
        if off <= stop {
            break;
        }
        let thresh = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // skip rotations whose effect is below machine precision
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let shift = t * apq;
                z[p] -= shift;
                z[q] += shift;
                d[p] -= shift;
                d[q] += shift;
                a[p * n + q] = 0.0;
                // rotate the remaining upper-triangle entries in rows/cols p, q
                for j in 0..p {
                    rotate(&mut a, n, j, p, j, q, s, tau);
                }
                for j in p + 1..q {
                    rotate(&mut a, n, p, j, j, q, s, tau);
                }
                for j in q + 1..n {
                    rotate(&mut a, n, p, j, q, j, s, tau);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }

    d.sort_by(|x, y| x.partial_cmp(y).unwrap());
    d
}

#[inline]
#[allow(clippy::too_many_arguments)] // two matrix coordinates plus the rotation pair
fn rotate(a: &mut [f64], n: usize, i: usize, j: usize, k: usize, l: usize, s: f64, tau: f64) {
    let g = a[i * n + j];
    let h = a[k * n + l];
    a[i * n + j] = g - s * (h + g * tau);
    a[k * n + l] = h + s * (g - h * tau);
}

//! Test-only helpers, including an eigenvalue oracle that shares no code with
//! the production solver: classical Jacobi rotations, which annihilate the
//! largest off-diagonal entry until the matrix is numerically diagonal.

/// All eigenvalues of a symmetric matrix by classical Jacobi iteration,
/// ascending. Independent of the Householder + QL production path; intended
/// for cross-checks at test scale (n up to a few dozen).
pub fn jacobi_eigenvalues(matrix: &[Vec<f64>]) -> Vec<f64> {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    // Exact symmetry so rotations stay consistent.
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    let scale = a
        .iter()
        .flatten()
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    let stop = 1e-14 * scale;

    for _ in 0..200_000 {
        // Largest off-diagonal entry.
        let (mut p, mut q, mut max) = (0, 1, 0.0f64);
        for i in 0..n {
            for j in (i + 1)..n {
                if a[i][j].abs() > max {
                    max = a[i][j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if max <= stop {
            break;
        }

        let apq = a[p][q];
        let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
        let t = if tau >= 0.0 {
            1.0 / (tau + (1.0 + tau * tau).sqrt())
        } else {
            -1.0 / (-tau + (1.0 + tau * tau).sqrt())
        };
        let c = 1.0 / (1.0 + t * t).sqrt();
        let s = t * c;

        let app = a[p][p];
        let aqq = a[q][q];
        a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for i in 0..n {
            if i != p && i != q {
                let aip = a[i][p];
                let aiq = a[i][q];
                a[i][p] = c * aip - s * aiq;
                a[p][i] = a[i][p];
                a[i][q] = s * aip + c * aiq;
                a[q][i] = a[i][q];
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(f64::total_cmp);
    eigs
}

/// Asserts two equal-length slices agree elementwise within `tol`.
pub fn assert_close_slices(actual: &[f64], expected: &[f64], tol: f64) {
    assert_eq!(
        actual.len(),
        expected.len(),
        "length mismatch: {actual:?} vs {expected:?}"
    );
    for (i, (a, b)) in actual.iter().zip(expected).enumerate() {
        assert!(
            (a - b).abs() <= tol,
            "index {i}: {a} vs {b} (tol {tol}); actual={actual:?} expected={expected:?}"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_on_known_2x2() {
        let m = vec![vec![2.0, -1.0], vec![-1.0, 2.0]];
        assert_close_slices(&jacobi_eigenvalues(&m), &[1.0, 3.0], 1e-12);
    }

    #[test]
    fn jacobi_on_known_3x3_path_laplacian() {
        // Path on 3 nodes: eigenvalues {0, 1, 3}.
        let m = vec![
            vec![1.0, -1.0, 0.0],
            vec![-1.0, 2.0, -1.0],
            vec![0.0, -1.0, 1.0],
        ];
        assert_close_slices(&jacobi_eigenvalues(&m), &[0.0, 1.0, 3.0], 1e-12);
    }
}

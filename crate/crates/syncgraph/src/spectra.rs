//! Laplacian spectra and eigenratio reports.
//!
//! The eigensolver is self-contained and deterministic: Householder reduction
//! to tridiagonal form followed by implicit-shift QL iteration, eigenvalues
//! only (no part of the toolkit needs eigenvectors). Identical input produces
//! bit-identical output.
//!
//! For a graph on nodes of degrees d_i with adjacency A, the Laplacian is
//! L = D − A. Its eigenvalues 0 = λ1 ≤ λ2 ≤ … ≤ λN satisfy λ1 = 0 always and
//! λ2 > 0 exactly when the graph is connected; the eigenratio r = λ2/λN is
//! the synchronizability index reported by [`sync_report`].

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default eigensolver tolerance. Also the `tol` recorded in [`Spectrum`].
pub const SOLVER_TOL: f64 = 1e-9;

/// Multiplicity clustering tolerance, scaled by `max(1, λN)` when counting.
pub const MULT_CLUSTER_TOL: f64 = 1e-6;

/// Full sorted Laplacian eigenvalue list of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Eigenvalues sorted ascending; `values[0]` is the structural zero.
    pub values: Vec<f64>,
    /// Solver tolerance the values were computed at (0 for exact closed forms).
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Second-smallest eigenvalue (algebraic connectivity).
    pub fn lambda2(&self) -> f64 {
        self.values[1]
    }

    /// Largest eigenvalue.
    pub fn lambda_max(&self) -> f64 {
        *self.values.last().expect("spectrum is nonempty")
    }
}

/// Synchronizability verdict for one connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SyncReport {
    pub lambda2: f64,
    pub lambda_max: f64,
    /// Eigenratio r = λ2/λN, in (0, 1].
    pub r: f64,
    /// Multiplicity of λ2 at the clustering tolerance.
    pub mult2: usize,
    /// Multiplicity of λN at the clustering tolerance.
    pub mult_max: usize,
}

// ---------------------------------------------------------------------------
// Symmetric eigensolver (Householder tridiagonalization + implicit-shift QL)
// ---------------------------------------------------------------------------

/// Reduces the symmetric matrix in `a` (row-major n×n, lower triangle
/// referenced, contents destroyed) to tridiagonal form: `d` receives the
/// diagonal, `e` the subdiagonal (`e[0]` unused and set to 0).
fn householder_tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                // w = A·u/h − (uᵀA u / 2h²) u, accumulated into e[0..=l].
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                // Rank-two update A ← A − u wᵀ − w uᵀ on the leading block.
                for j in 0..=l {
                    let fj = a[i * n + j];
                    let gj = e[j] - hh * fj;
                    e[j] = gj;
                    for k in 0..=j {
                        a[j * n + k] -= fj * e[k] + gj * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    for k in 0..n {
        d[k] = a[k * n + k];
    }
    if n > 0 {
        e[0] = 0.0;
    }
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix
/// (diagonal `d`, subdiagonal `e` with `e[0]` unused). On success, `d` holds
/// the eigenvalues, unsorted.
fn ql_implicit_shift(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 64 {
                    return Err(Error::NoConvergence(l));
                }

                // Implicit shift from the leading 2x2.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for i in (l + 2)..n {
                    d[i] -= h;
                }
                f += h;

                // QL sweep from m-1 down to l.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Reusable workspace for repeated eigenvalue computations of the same size.
pub(crate) struct EigenScratch {
    a: Vec<f64>,
    d: Vec<f64>,
    e: Vec<f64>,
}

impl EigenScratch {
    pub(crate) fn new(n: usize) -> Self {
        EigenScratch {
            a: vec![0.0; n * n],
            d: vec![0.0; n],
            e: vec![0.0; n],
        }
    }

    /// Eigen-extremes (second smallest, largest) of the Laplacian of the graph
    /// given by an edge iterator on `n` nodes. Intended for connected graphs
    /// in enumeration hot loops; panics if `n` exceeds the scratch size.
    pub(crate) fn laplacian_extremes(
        &mut self,
        n: usize,
        edges: impl Iterator<Item = (usize, usize)>,
    ) -> Result<(f64, f64)> {
        assert!(n * n <= self.a.len() && n >= 2);
        let a = &mut self.a[..n * n];
        a.fill(0.0);
        for (u, v) in edges {
            a[u * n + v] -= 1.0;
            a[v * n + u] -= 1.0;
            a[u * n + u] += 1.0;
            a[v * n + v] += 1.0;
        }
        let d = &mut self.d[..n];
        let e = &mut self.e[..n];
        householder_tridiagonalize(a, n, d, e);
        ql_implicit_shift(d, e)?;
        // One pass: two smallest plus the largest of the unsorted eigenvalues.
        let mut min1 = f64::INFINITY;
        let mut min2 = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for &x in d.iter() {
            if x < min1 {
                min2 = min1;
                min1 = x;
            } else if x < min2 {
                min2 = x;
            }
            if x > max {
                max = x;
            }
        }
        Ok((min2, max))
    }
}

/// All eigenvalues of a real symmetric matrix, sorted ascending.
///
/// The input is checked to be square (else [`Error::ShapeError`]) and
/// symmetric within `tol · max(1, max|a_ij|)` (else [`Error::NotSymmetric`]).
/// Deterministic: the same input yields bit-identical output.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>], tol: f64) -> Result<Vec<f64>> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::ShapeError {
                rows: n,
                cols: row.len(),
            });
        }
    }
    let mut max_abs: f64 = 0.0;
    let mut max_dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            max_abs = max_abs.max(matrix[i][j].abs());
            if j < i {
                max_dev = max_dev.max((matrix[i][j] - matrix[j][i]).abs());
            }
        }
    }
    if max_dev > tol * max_abs.max(1.0) {
        return Err(Error::NotSymmetric { max_deviation: max_dev });
    }

    // Symmetrize exactly so the reduction sees a_ij == a_ji.
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let v = 0.5 * (matrix[i][j] + matrix[j][i]);
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_tridiagonalize(&mut a, n, &mut d, &mut e);
    ql_implicit_shift(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

// ---------------------------------------------------------------------------
// Laplacian spectra
// ---------------------------------------------------------------------------

/// Dense Laplacian L = D − A of a graph, as rows.
pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = -1.0;
        m[v][u] = -1.0;
        m[u][u] += 1.0;
        m[v][v] += 1.0;
    }
    m
}

/// Full Laplacian spectrum of a graph at the default solver tolerance.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    let values = symmetric_eigenvalues(&laplacian_matrix(g), SOLVER_TOL)?;
    Ok(Spectrum {
        values,
        tol: SOLVER_TOL,
    })
}

/// Eigenratio report for a connected graph on at least two nodes.
///
/// Errors with [`Error::DisconnectedGraph`] when the graph is disconnected
/// (λ2 = 0 makes the ratio meaningless).
pub fn sync_report(g: &Graph) -> Result<SyncReport> {
    if g.node_count() < 2 {
        return Err(Error::InvalidSpec(
            "eigenratio needs at least 2 nodes".into(),
        ));
    }
    let (components, _) = g.connectivity();
    if components != 1 {
        return Err(Error::DisconnectedGraph { components });
    }
    let spectrum = laplacian_spectrum(g)?;
    let lambda2 = spectrum.lambda2();
    let lambda_max = spectrum.lambda_max();
    Ok(SyncReport {
        lambda2,
        lambda_max,
        r: lambda2 / lambda_max,
        mult2: eigen_multiplicity(&spectrum, lambda2, MULT_CLUSTER_TOL),
        mult_max: eigen_multiplicity(&spectrum, lambda_max, MULT_CLUSTER_TOL),
    })
}

/// Closed-form Laplacian spectrum of the cycle C_N:
/// μ1 = 0 and μ_{k+1} = 3 − sin(3kπ/N)/sin(kπ/N) for k = 1..N−1, sorted.
///
/// The trig identity sin 3x / sin x = 1 + 2cos 2x reduces this to the usual
/// circulant form 2 − 2cos(2kπ/N), which is why the formula extends to N = 3.
pub fn cycle_spectrum_closed_form(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!(
            "cycle spectrum requires N >= 3, got {n}"
        )));
    }
    let mut values = Vec::with_capacity(n);
    values.push(0.0);
    for k in 1..n {
        let x = k as f64 * std::f64::consts::PI / n as f64;
        values.push(3.0 - (3.0 * x).sin() / x.sin());
    }
    values.sort_by(f64::total_cmp);
    Ok(Spectrum { values, tol: 0.0 })
}

/// Spectrum of the complement graph, from the pairing identity
/// λi(Gᶜ) = N − λ_{N−i+2}(G) for 2 ≤ i ≤ N (plus the structural zero).
pub fn complement_spectrum(s: &Spectrum) -> Spectrum {
    let n = s.values.len();
    let mut values = Vec::with_capacity(n);
    values.push(0.0);
    for j in 1..n {
        values.push(n as f64 - s.values[j]);
    }
    values.sort_by(f64::total_cmp);
    Spectrum {
        values,
        tol: s.tol,
    }
}

/// Number of eigenvalues clustered at `value`, within `tol · max(1, λN)`.
///
/// The cluster is closed under the tolerance: after the entries directly
/// within the window are found, adjacent entries whose gap to the cluster is
/// within the same window are absorbed, so a cluster straddling the window
/// boundary is not split.
pub fn eigen_multiplicity(s: &Spectrum, value: f64, tol: f64) -> usize {
    let n = s.values.len();
    if n == 0 {
        return 0;
    }
    let scaled = tol * s.lambda_max().max(1.0);
    let mut lo = None;
    let mut hi = 0;
    for (i, &v) in s.values.iter().enumerate() {
        if (v - value).abs() <= scaled {
            if lo.is_none() {
                lo = Some(i);
            }
            hi = i;
        }
    }
    let Some(mut lo) = lo else { return 0 };
    while lo > 0 && s.values[lo] - s.values[lo - 1] <= scaled {
        lo -= 1;
    }
    while hi + 1 < n && s.values[hi + 1] - s.values[hi] <= scaled {
        hi += 1;
    }
    hi - lo + 1
}

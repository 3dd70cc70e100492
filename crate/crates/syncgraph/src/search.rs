//! Small-graph searches over the "best achievable eigenratio" landscape:
//! exhaustive tables over all connected labeled graphs with n nodes and m
//! edges, and simulated-annealing topology optimization at fixed (n, m).
//!
//! Enumeration is over labeled edge subsets of the complete graph (no
//! isomorphism reduction): 2^C(n,2) subsets, so n ≤ 7 is comfortable and
//! n = 8 is best-effort. Per-m maxima are merged with an order-independent
//! total order (larger r wins, bit-equal r falls back to the lexicographically
//! least edge list), so the result is identical for any thread count.

use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{random_connected_graph, Graph};
use crate::spectra::{sync_report, EigenScratch};

/// Hard ceiling for exhaustive enumeration.
const MAX_EXHAUSTIVE_N: usize = 8;

/// Margin below which two per-m maxima are treated as equal when certifying
/// a decrease; true decreases at desk scale are algebraic gaps far above it.
pub const DECREASE_MARGIN: f64 = 1e-9;

/// Best achievable eigenratio for one edge count.
#[derive(Debug, Clone)]
pub struct BestRow {
    pub m: usize,
    pub max_r: f64,
    /// λ2 of the argmax graph, recomputed through the standard report path.
    pub lambda2: f64,
    /// λN of the argmax graph.
    pub lambda_max: f64,
    /// Lexicographically least edge set attaining the maximum.
    pub argmax_edges: Vec<(usize, usize)>,
    /// Number of connected labeled graphs with this edge count.
    pub connected_count: u64,
}

/// Exhaustive per-edge-count maxima for one node count.
#[derive(Debug, Clone)]
pub struct BestTable {
    pub n: usize,
    pub rows: Vec<BestRow>,
}

impl BestTable {
    pub fn row(&self, m: usize) -> Option<&BestRow> {
        self.rows.iter().find(|r| r.m == m)
    }
}

/// Lexicographic list of all node pairs of `n` nodes; bit k of an edge-subset
/// mask refers to `pairs[k]`.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// True when mask `a` denotes a lexicographically smaller edge list than `b`
/// (equal popcount assumed): the mask holding the lowest differing bit wins.
fn edge_lex_less(a: u64, b: u64) -> bool {
    let x = a ^ b;
    if x == 0 {
        return false;
    }
    a & (x & x.wrapping_neg()) != 0
}

/// Connectivity of the subset graph via bitset BFS (n ≤ 32).
fn mask_connected(mask: u64, pairs: &[(usize, usize)], n: usize) -> bool {
    let mut adj = [0u32; 32];
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        let (u, v) = pairs[k];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        bits &= bits - 1;
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut visited = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= adj[v];
            f &= f - 1;
        }
        frontier = next & !visited;
        visited |= frontier;
    }
    visited == full
}

struct ScanAcc {
    /// Per m-offset: (max r, argmax mask).
    best: Vec<Option<(f64, u64)>>,
    counts: Vec<u64>,
    scratch: EigenScratch,
}

impl ScanAcc {
    fn new(rows: usize, n: usize) -> Self {
        ScanAcc {
            best: vec![None; rows],
            counts: vec![0; rows],
            scratch: EigenScratch::new(n),
        }
    }

    fn absorb(&mut self, other: ScanAcc) {
        for (slot, incoming) in self.best.iter_mut().zip(other.best) {
            *slot = match (slot.take(), incoming) {
                (None, x) => x,
                (x, None) => x,
                (Some(a), Some(b)) => Some(better_of(a, b)),
            };
        }
        for (c, o) in self.counts.iter_mut().zip(other.counts) {
            *c += o;
        }
    }
}

/// Total order on (r, mask) candidates; associative and commutative, so
/// parallel reductions are thread-count invariant.
fn better_of(a: (f64, u64), b: (f64, u64)) -> (f64, u64) {
    match a.0.total_cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if edge_lex_less(a.1, b.1) {
                a
            } else {
                b
            }
        }
    }
}

/// Exact maximum eigenratio per edge count over all connected labeled graphs
/// with `n` nodes, for every m in `m_range` (defaults to [n−1, n(n−1)/2]).
///
/// Errors with [`Error::DeskScaleExceeded`] for n > 8.
pub fn exhaustive_scan(n: usize, m_range: Option<RangeInclusive<usize>>) -> Result<BestTable> {
    if n < 2 {
        return Err(Error::InvalidSpec("scan needs at least 2 nodes".into()));
    }
    let pairs = pair_list(n);
    let p = pairs.len();
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::DeskScaleExceeded {
            n,
            pairs: p,
            subsets: 1u128 << p,
        });
    }
    let range = m_range.unwrap_or(n - 1..=p);
    let (m_lo, m_hi) = (*range.start(), *range.end());
    if m_lo < n - 1 || m_hi > p || m_lo > m_hi {
        return Err(Error::InvalidSpec(format!(
            "m range {m_lo}..={m_hi} outside the connected range [{}, {p}] for n = {n}",
            n - 1
        )));
    }
    let rows = m_hi - m_lo + 1;
    let total: usize = 1usize << p;

    let acc = (0..total)
        .into_par_iter()
        .with_min_len(1 << 12)
        .fold(
            || ScanAcc::new(rows, n),
            |mut acc, mask| {
                let mask = mask as u64;
                let m = mask.count_ones() as usize;
                if m < m_lo || m > m_hi {
                    return acc;
                }
                if !mask_connected(mask, &pairs, n) {
                    return acc;
                }
                let idx = m - m_lo;
                acc.counts[idx] += 1;
                let edges = EdgeBits { bits: mask }.map(|k| pairs[k]);
                let (l2, lmax) = acc
                    .scratch
                    .laplacian_extremes(n, edges)
                    .expect("tridiagonal QL converges on Laplacians");
                let r = l2 / lmax;
                let candidate = (r, mask);
                acc.best[idx] = Some(match acc.best[idx] {
                    None => candidate,
                    Some(cur) => better_of(cur, candidate),
                });
                acc
            },
        )
        .reduce(
            || ScanAcc::new(rows, n),
            |mut a, b| {
                a.absorb(b);
                a
            },
        );

    let mut out = Vec::with_capacity(rows);
    for (idx, m) in (m_lo..=m_hi).enumerate() {
        let (max_r, mask) = acc.best[idx].ok_or_else(|| {
            Error::InvalidSpec(format!("no connected graph with n = {n}, m = {m}"))
        })?;
        let argmax_edges: Vec<(usize, usize)> =
            EdgeBits { bits: mask }.map(|k| pairs[k]).collect();
        let g = Graph::build(n, &argmax_edges)?;
        let report = sync_report(&g)?;
        out.push(BestRow {
            m,
            max_r,
            lambda2: report.lambda2,
            lambda_max: report.lambda_max,
            argmax_edges,
            connected_count: acc.counts[idx],
        });
    }
    Ok(BestTable { n, rows: out })
}

/// Iterator over the set-bit indices of a mask.
struct EdgeBits {
    bits: u64,
}

impl Iterator for EdgeBits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let k = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(k)
    }
}

/// Adjacent edge counts (m, m+1) where the best achievable eigenratio drops:
/// each listed pair is a certified counterexample to "more edges mean a
/// better achievable eigenratio" at this n.
pub fn nonmonotonicity_report(t: &BestTable) -> Result<Vec<(usize, usize)>> {
    for pair in t.rows.windows(2) {
        if pair[1].m != pair[0].m + 1 {
            return Err(Error::InvalidSpec(format!(
                "table rows must cover consecutive m; gap between {} and {}",
                pair[0].m, pair[1].m
            )));
        }
    }
    Ok(t.rows
        .windows(2)
        .filter(|pair| pair[1].max_r < pair[0].max_r - DECREASE_MARGIN)
        .map(|pair| (pair[0].m, pair[1].m))
        .collect())
}

/// CSV serialization: `m,max_r,lambda2,lambdaN,argmax_edge_list,count_connected`,
/// edge lists as space-separated `u-v` tokens.
pub fn best_table_csv(t: &BestTable) -> String {
    let mut out = String::from("m,max_r,lambda2,lambdaN,argmax_edge_list,count_connected\n");
    for row in &t.rows {
        let edges: Vec<String> = row
            .argmax_edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.m,
            row.max_r,
            row.lambda2,
            row.lambda_max,
            edges.join(" "),
            row.connected_count
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Simulated annealing
// ---------------------------------------------------------------------------

/// Annealing schedule: initial temperature, geometric cooling factor applied
/// every iteration, and iteration count per restart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealSchedule {
    pub t0: f64,
    pub cooling: f64,
    pub iters: usize,
    pub restarts: usize,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule {
            t0: 0.1,
            cooling: 0.999,
            iters: 100_000,
            restarts: 8,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnnealResult {
    pub best_graph: Graph,
    pub best_r: f64,
    pub schedule_desc: String,
    /// Eigenratio evaluations across all restarts.
    pub evaluations: u64,
}

/// Maximizes the eigenratio over connected graphs with fixed (n, m) by
/// simulated annealing. One move rewires a single edge (remove a random edge,
/// add a random non-edge), rejecting moves that disconnect the graph;
/// Metropolis acceptance on the ratio change. Restarts run on independent
/// seeded streams and the best result is merged deterministically, so the
/// outcome depends only on (n, m, seed, schedule).
pub fn anneal(n: usize, m: usize, seed: u64, schedule: AnnealSchedule) -> Result<AnnealResult> {
    if n < 2 {
        return Err(Error::InvalidSpec("anneal needs at least 2 nodes".into()));
    }
    let total = n * (n - 1) / 2;
    if m + 1 < n || m > total {
        return Err(Error::InvalidSpec(format!(
            "no connected graph with n = {n}, m = {m}"
        )));
    }
    if schedule.restarts == 0 || schedule.iters == 0 {
        return Err(Error::InvalidSpec(
            "anneal needs at least one restart and one iteration".into(),
        ));
    }

    let outcomes: Vec<(f64, u64, usize, Graph)> = (0..schedule.restarts)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(restart as u64);
            let (best, best_r, evals) = anneal_restart(n, m, &schedule, &mut rng);
            (best_r, evals, restart, best)
        })
        .collect();

    let mut best = &outcomes[0];
    for o in &outcomes[1..] {
        // Larger r wins; ties go to the lower restart index.
        if o.0.total_cmp(&best.0) == std::cmp::Ordering::Greater {
            best = o;
        }
    }
    Ok(AnnealResult {
        best_graph: best.3.clone(),
        best_r: best.0,
        schedule_desc: format!(
            "t0={} cooling={} iters={} restarts={}",
            schedule.t0, schedule.cooling, schedule.iters, schedule.restarts
        ),
        evaluations: outcomes.iter().map(|o| o.1).sum(),
    })
}

fn anneal_restart(
    n: usize,
    m: usize,
    schedule: &AnnealSchedule,
    rng: &mut ChaCha8Rng,
) -> (Graph, f64, u64) {
    let mut scratch = EigenScratch::new(n);
    let ratio = |g: &Graph, scratch: &mut EigenScratch| -> f64 {
        let (l2, lmax) = scratch
            .laplacian_extremes(n, g.edges())
            .expect("tridiagonal QL converges on Laplacians");
        l2 / lmax
    };

    let mut current = random_connected_graph(n, m, rng).expect("feasible (n, m)");
    let mut current_r = ratio(&current, &mut scratch);
    let mut evals = 1u64;
    let mut best = current.clone();
    let mut best_r = current_r;
    let mut temperature = schedule.t0;

    for _ in 0..schedule.iters {
        let edges: Vec<(usize, usize)> = current.edges().collect();
        let non_edges = current.non_edges();
        if non_edges.is_empty() {
            break; // complete graph, nothing to rewire
        }
        let drop = edges[rng.gen_range(0..edges.len())];
        let add = non_edges[rng.gen_range(0..non_edges.len())];
        temperature *= schedule.cooling;

        let candidate = current
            .without_edge(drop.0, drop.1)
            .and_then(|g| g.with_edge(add.0, add.1))
            .expect("rewire endpoints are valid");
        if !candidate.is_connected() {
            continue;
        }
        let candidate_r = ratio(&candidate, &mut scratch);
        evals += 1;
        let delta = candidate_r - current_r;
        let accept = delta >= 0.0
            || (temperature > 0.0 && rng.gen::<f64>() < (delta / temperature).exp());
        if accept {
            current = candidate;
            current_r = candidate_r;
            if current_r > best_r {
                best_r = current_r;
                best = current.clone();
            }
        }
    }
    (best, best_r, evals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::cycle_spectrum_closed_form;

    #[test]
    fn scan_rejects_desk_scale() {
        match exhaustive_scan(9, None) {
            Err(Error::DeskScaleExceeded { n, pairs, subsets }) => {
                assert_eq!(n, 9);
                assert_eq!(pairs, 36);
                assert_eq!(subsets, 1u128 << 36);
            }
            other => panic!("expected DeskScaleExceeded, got {other:?}"),
        }
    }

    #[test]
    fn scan_n5_full_table() {
        let t = exhaustive_scan(5, None).unwrap();
        assert_eq!(t.rows.len(), 7); // m = 4..=10

        // m=4: trees; the star attains 1/5. Cayley count: 5^3 = 125 trees.
        let row4 = t.row(4).unwrap();
        assert!((row4.max_r - 0.2).abs() < 1e-9);
        assert_eq!(row4.connected_count, 125);

        // m=5: the 5-cycle is best; oracle from the closed form.
        let closed = cycle_spectrum_closed_form(5).unwrap();
        let r_c5 = closed.lambda2() / closed.lambda_max();
        assert!((t.row(5).unwrap().max_r - r_c5).abs() < 1e-9);

        // m=6: 2/5, attained by the complete-bipartite(2,3) structure.
        let row6 = t.row(6).unwrap();
        assert!((row6.max_r - 0.4).abs() < 1e-9);
        assert!((row6.lambda2 - 2.0).abs() < 1e-6);
        assert!((row6.lambda_max - 5.0).abs() < 1e-6);

        // m=7 also attains 2/5 (e.g. the complete graph minus a triangle,
        // whose complement is a triangle plus two isolated nodes).
        assert!((t.row(7).unwrap().max_r - 0.4).abs() < 1e-9);

        // m=8, 9: complement is a matching or a single edge, r = 3/5.
        assert!((t.row(8).unwrap().max_r - 0.6).abs() < 1e-9);
        assert!((t.row(9).unwrap().max_r - 0.6).abs() < 1e-9);

        // m=10: the complete graph, alone.
        let row10 = t.row(10).unwrap();
        assert!((row10.max_r - 1.0).abs() < 1e-12);
        assert_eq!(row10.connected_count, 1);
    }

    #[test]
    fn scan_argmax_reevaluates_to_max() {
        let t = exhaustive_scan(5, None).unwrap();
        for row in &t.rows {
            let g = Graph::build(t.n, &row.argmax_edges).unwrap();
            let r = sync_report(&g).unwrap().r;
            assert!(
                (r - row.max_r).abs() < 1e-9,
                "m={}: {} vs {}",
                row.m,
                r,
                row.max_r
            );
        }
    }

    #[test]
    fn scan_subrange() {
        let t = exhaustive_scan(6, Some(7..=7)).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].m, 7);
        assert!(exhaustive_scan(6, Some(3..=7)).is_err());
        assert!(exhaustive_scan(6, Some(7..=16)).is_err());
    }

    #[test]
    fn scan_thread_count_invariant() {
        let csv_of = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| best_table_csv(&exhaustive_scan(5, None).unwrap()))
        };
        assert_eq!(csv_of(1), csv_of(4));
    }

    #[test]
    fn nonmonotonicity_cases() {
        // The n=5 ground truth is nondecreasing across all m, so the report
        // is empty there (m=6 and m=7 tie at 2/5 rather than dropping).
        let t = exhaustive_scan(5, None).unwrap();
        assert!(nonmonotonicity_report(&t).unwrap().is_empty());

        let synthetic = BestTable {
            n: 4,
            rows: vec![
                BestRow {
                    m: 3,
                    max_r: 0.5,
                    lambda2: 1.0,
                    lambda_max: 2.0,
                    argmax_edges: vec![],
                    connected_count: 1,
                },
                BestRow {
                    m: 4,
                    max_r: 0.3,
                    lambda2: 1.0,
                    lambda_max: 3.0,
                    argmax_edges: vec![],
                    connected_count: 1,
                },
            ],
        };
        assert_eq!(nonmonotonicity_report(&synthetic).unwrap(), vec![(3, 4)]);

        let gappy = BestTable {
            n: 4,
            rows: vec![
                synthetic.rows[0].clone(),
                BestRow {
                    m: 6,
                    ..synthetic.rows[1].clone()
                },
            ],
        };
        assert!(nonmonotonicity_report(&gappy).is_err());
    }

    #[test]
    fn csv_layout() {
        let t = exhaustive_scan(4, None).unwrap();
        let csv = best_table_csv(&t);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "m,max_r,lambda2,lambdaN,argmax_edge_list,count_connected"
        );
        assert_eq!(lines.len(), 1 + t.rows.len());
        assert!(lines[1].split(',').count() == 6);
    }

    #[test]
    fn anneal_matches_exhaustive_on_small_cases() {
        // (6,9) has a genuine local optimum (the prism at 0.4 versus the
        // bipartite optimum 0.5); this schedule escapes it on every seed tried.
        let schedule = AnnealSchedule {
            t0: 0.1,
            cooling: 0.999,
            iters: 5_000,
            restarts: 8,
        };
        for (n, m) in [(5, 4), (5, 6), (6, 9)] {
            let exact = exhaustive_scan(n, Some(m..=m)).unwrap().rows[0].max_r;
            let result = anneal(n, m, 11, schedule).unwrap();
            assert!(
                result.best_r <= exact + 1e-9,
                "anneal exceeded the exhaustive max"
            );
            assert!(
                (result.best_r - exact).abs() < 1e-6,
                "(n={n}, m={m}): anneal {} vs exact {exact}",
                result.best_r
            );
            assert_eq!(result.best_graph.node_count(), n);
            assert_eq!(result.best_graph.edge_count(), m);
            assert!(result.best_graph.is_connected());
        }
    }

    #[test]
    fn anneal_rediscovers_the_15_edge_optimum() {
        // At (10, 15) most seeds stall on a local optimum near 0.2586; this
        // (schedule, seed) pair reaches the true optimum 2/5, and the graph it
        // finds is spectrally the Petersen graph: {0, 2^5, 5^4}, 3-regular.
        let schedule = AnnealSchedule {
            t0: 0.05,
            cooling: 0.999,
            iters: 10_000,
            restarts: 8,
        };
        let result = anneal(10, 15, 3, schedule).unwrap();
        assert!((result.best_r - 0.4).abs() < 1e-6, "got {}", result.best_r);
        assert!(result.best_graph.degrees().iter().all(|&d| d == 3));
        let s = crate::spectra::laplacian_spectrum(&result.best_graph).unwrap();
        let expected = [0.0, 2.0, 2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 5.0, 5.0];
        for (a, b) in s.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn anneal_respects_the_16_edge_bound() {
        let schedule = AnnealSchedule {
            t0: 0.05,
            cooling: 0.995,
            iters: 3_000,
            restarts: 4,
        };
        let result = anneal(10, 16, 5, schedule).unwrap();
        assert!(result.best_r < 0.4 - 1e-9);
    }

    #[test]
    fn anneal_deterministic_and_validated() {
        let schedule = AnnealSchedule {
            t0: 0.05,
            cooling: 0.99,
            iters: 500,
            restarts: 3,
        };
        let a = anneal(6, 8, 3, schedule).unwrap();
        let b = anneal(6, 8, 3, schedule).unwrap();
        assert_eq!(a.best_r, b.best_r);
        assert_eq!(
            crate::graph::serialize_edge_list(&a.best_graph),
            crate::graph::serialize_edge_list(&b.best_graph)
        );
        assert!(a.evaluations > 0);
        assert!(matches!(anneal(5, 3, 0, schedule), Err(Error::InvalidSpec(_))));
    }
}

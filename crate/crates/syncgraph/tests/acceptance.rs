//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured runtime (run with `--nocapture` to see them). Tolerances and
//! runtime budgets are pinned in the assertions.

use std::time::{Duration, Instant};

use syncgraph::experiments::{
    edge_add_trajectory, trajectory_csv, trajectory_stats, Strategy, StrategySpec, Trajectory,
};
use syncgraph::graph::{barabasi_albert, generate, GeneratorSpec, Graph};
use syncgraph::metrics::betweenness;
use syncgraph::search::{exhaustive_scan, nonmonotonicity_report};
use syncgraph::spectra::{cycle_spectrum_closed_form, laplacian_spectrum, sync_report};
use syncgraph::verify::{
    lemma1_suite, lemma4_suite, lemma5_suite, lemma6_suite, sample_ratio_bound,
    split_complement_ratio, verify_cycle_theorem, ClaimStatus,
};

const SUITE_SEED: u64 = 20240810;

fn cycle(n: usize) -> Graph {
    generate(&GeneratorSpec::Cycle { n }).unwrap()
}

fn k23() -> Graph {
    generate(&GeneratorSpec::CompleteBipartite { p: 2, q: 3 }).unwrap()
}

fn assert_within(label: &str, actual: f64, expected: f64, tol: f64) {
    assert!(
        (actual - expected).abs() <= tol,
        "{label}: {actual} vs {expected} (tol {tol})"
    );
}

fn finish(id: u32, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {id} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
    println!("ACCEPTANCE {id}: PASS ({elapsed:?}) - {detail}");
}

#[test]
fn criterion_1_paper_value_reproduction() {
    let started = Instant::now();
    let tol = 1e-3;

    let c5 = sync_report(&cycle(5)).unwrap();
    assert_within("r(C5)", c5.r, 0.3820, tol);

    let c5_chord = sync_report(&cycle(5).with_edge(0, 2).unwrap()).unwrap();
    assert_within("r(C5+e)", c5_chord.r, 0.2993, tol);
    assert_within("lambdaN(C5+e)", c5_chord.lambda_max, 4.6180, tol);

    let c6 = sync_report(&cycle(6)).unwrap();
    assert_within("r(C6)", c6.r, 0.25, tol);

    let c6_short = sync_report(&cycle(6).with_edge(0, 2).unwrap()).unwrap();
    assert_within("r(C6+short chord)", c6_short.r, 0.2265, tol);
    assert_within("lambdaN(C6+short chord)", c6_short.lambda_max, 4.4142, tol);

    let c6_long = sync_report(&cycle(6).with_edge(0, 3).unwrap()).unwrap();
    assert_within("r(C6+long chord)", c6_long.r, 0.2, tol);

    assert_within(
        "split ratio of K_{2,3}",
        split_complement_ratio(&k23()).unwrap(),
        0.4,
        tol,
    );

    // Two edges inside the size-3 part sharing an endpoint raise r to 3/5.
    let augmented = k23().with_edge(2, 4).unwrap().with_edge(3, 4).unwrap();
    assert_within(
        "split ratio after two additions",
        split_complement_ratio(&augmented).unwrap(),
        0.6,
        tol,
    );
    assert_within(
        "spectral ratio after two additions",
        sync_report(&augmented).unwrap().r,
        0.6,
        tol,
    );

    finish(1, started, Duration::from_secs(1), "nine cycle/bipartite ratios and extremes at 1e-3");
}

#[test]
fn criterion_2_cycle_chord_theorem() {
    let started = Instant::now();
    let reports = verify_cycle_theorem(4..=40).unwrap();
    let expected_count: usize = (4..=40).map(|n: usize| n / 2 - 1).sum();
    assert_eq!(reports.len(), expected_count);
    for r in &reports {
        assert_eq!(r.status, ClaimStatus::Pass, "{}", r.to_line());
    }
    finish(
        2,
        started,
        Duration::from_secs(10),
        &format!("{expected_count} (N, chord-class) instances for N in [4, 40]"),
    );
}

#[test]
fn criterion_3_lemma_suites() {
    let started = Instant::now();

    let l1 = lemma1_suite(500, 25, SUITE_SEED);
    assert_eq!(l1.len(), 500);
    assert!(l1.iter().all(|r| r.status == ClaimStatus::Pass));

    let l5 = lemma5_suite(200, 30, SUITE_SEED);
    assert_eq!(l5.len(), 200);
    assert!(l5.iter().all(|r| r.status == ClaimStatus::Pass));

    let l4 = lemma4_suite(500, 25, SUITE_SEED);
    assert_eq!(l4.len(), 500);
    assert!(l4.iter().all(|r| r.passed()), "no L4 failures allowed");
    let l4_pass = l4.iter().filter(|r| r.status == ClaimStatus::Pass).count();
    assert!(l4_pass > 0, "no qualifying multiplicity instances drawn");

    let l6 = lemma6_suite(300, 12, SUITE_SEED);
    assert_eq!(l6.len(), 300);
    assert!(l6.iter().all(|r| r.passed()), "no L6 violations allowed");
    let l6_pass = l6.iter().filter(|r| r.status == ClaimStatus::Pass).count();
    assert!(l6_pass > 0, "even-cycle premise never detected");

    finish(
        3,
        started,
        Duration::from_secs(60),
        &format!("L1 500/500, L5 200/200, L4 {l4_pass} qualifying, L6 {l6_pass} detected; zero failures"),
    );
}

#[test]
fn criterion_4_closed_form_cross_check() {
    let started = Instant::now();
    for n in 3..=100 {
        let closed = cycle_spectrum_closed_form(n).unwrap();
        let numeric = laplacian_spectrum(&cycle(n)).unwrap();
        for (i, (a, b)) in closed.values.iter().zip(&numeric.values).enumerate() {
            assert!(
                (a - b).abs() <= 1e-9,
                "N={n} index {i}: closed {a} vs numeric {b}"
            );
        }
    }
    finish(4, started, Duration::from_secs(5), "N in [3, 100], elementwise 1e-9");
}

#[test]
fn criterion_5_petersen_reconstruction() {
    let started = Instant::now();
    let petersen = generate(&GeneratorSpec::Petersen).unwrap();
    let report = sync_report(&petersen).unwrap();
    assert_within("lambda2", report.lambda2, 2.0, 1e-9);
    assert_within("lambdaN", report.lambda_max, 5.0, 1e-9);
    assert_within("r", report.r, 0.4, 1e-9);
    for (v, b) in betweenness(&petersen).unwrap().into_iter().enumerate() {
        assert_eq!(b, 6.0, "betweenness of node {v} must be exactly 6");
    }
    finish(5, started, Duration::from_secs(1), "lambda2=2, lambdaN=5, r=2/5, betweenness exactly 6");
}

#[test]
fn criterion_6_sixteen_edge_bound_sampling() {
    let started = Instant::now();
    let report = sample_ratio_bound(10, 16, 100_000, SUITE_SEED).unwrap();
    assert_eq!(
        report.status,
        ClaimStatus::Pass,
        "max sampled r reached the 2/5 bound: {}",
        report.to_line()
    );
    assert!(
        report.witness.contains("non-exhaustive"),
        "report must be labeled non-exhaustive"
    );
    finish(6, started, Duration::from_secs(900), &report.witness);
}

#[test]
fn criterion_7_exhaustive_more_edges_not_better() {
    let started = Instant::now();

    let t5 = exhaustive_scan(5, None).unwrap();
    let row6 = t5.row(6).unwrap();
    assert_within("max_r(n=5, m=6)", row6.max_r, 0.4, 1e-9);
    let row7 = t5.row(7).unwrap();
    let decreases = nonmonotonicity_report(&t5).unwrap();
    let verdict = if row7.max_r < row6.max_r - 1e-9 {
        assert!(decreases.contains(&(6, 7)));
        "max_r(7) < max_r(6): adding an edge lowers the achievable ratio"
    } else {
        assert!(!decreases.contains(&(6, 7)));
        "max_r(7) >= max_r(6): a 7-edge graph ties the 2/5 optimum, no decrease"
    };
    println!(
        "ACCEPTANCE 7 certified comparison at n=5: max_r(6)={} max_r(7)={} -> {verdict}",
        row6.max_r, row7.max_r
    );

    let t6 = exhaustive_scan(6, None).unwrap();
    let row = t6.row(7).unwrap();
    // A 7-edge graph on 6 nodes with r = 0.2684 exists, so the scan maximum
    // can only match or exceed it; print which.
    assert!(
        row.max_r >= 0.2684 - 1e-3,
        "scan max {} fell below the known 0.2684 graph",
        row.max_r
    );
    let comparison = if (row.max_r - 0.2684).abs() <= 1e-3 {
        "matches 0.2684 (that structure is optimal at (6,7))"
    } else {
        "exceeds 0.2684"
    };
    println!(
        "ACCEPTANCE 7 n=6 m=7: max_r={} {comparison}",
        row.max_r
    );

    finish(7, started, Duration::from_secs(600), &format!(
        "n=5 table certified (max_r(6)=2/5, max_r(7)={}); n=6 m=7 max_r={}",
        row7.max_r, row.max_r
    ));
}

/// The six criterion-8 runs with their frozen seeds.
fn trajectory_runs() -> Vec<(&'static str, Graph, Strategy, u64, usize)> {
    let c10 = cycle(10);
    let c50 = cycle(50);
    let ba = barabasi_albert(50, 2, 12345).unwrap();
    // Steps reach at least 50% edge saturation for every seed graph
    // (C10 runs to full saturation).
    vec![
        ("cycle:10", c10.clone(), Strategy::DegreeHomogeneous, 1001, 35),
        ("cycle:10", c10, Strategy::Random, 1002, 35),
        ("cycle:50", c50.clone(), Strategy::DegreeHomogeneous, 1003, 588),
        ("cycle:50", c50, Strategy::Random, 1004, 588),
        ("ba:50:2:12345", ba.clone(), Strategy::DegreeHomogeneous, 1005, 564),
        ("ba:50:2:12345", ba, Strategy::Random, 1006, 564),
    ]
}

fn run_one(desc: &str, g: &Graph, kind: Strategy, seed: u64, steps: usize) -> Trajectory {
    edge_add_trajectory(g, &StrategySpec { kind, seed }, steps, desc).unwrap()
}

#[test]
fn criterion_8_trajectory_phenomenon() {
    let started = Instant::now();
    for (desc, g, kind, seed, steps) in trajectory_runs() {
        let total_pairs = g.pair_count();
        assert!(
            g.edge_count() + steps >= total_pairs / 2,
            "{desc}: run must reach 50% saturation"
        );
        let t = run_one(desc, &g, kind, seed, steps);
        let stats = trajectory_stats(&t).unwrap();
        assert!(
            stats.net_gain > 0.0,
            "{desc}/{kind}: net gain {} not positive",
            stats.net_gain
        );
        if kind == Strategy::Random {
            assert!(
                stats.n_decreasing_steps >= 1,
                "{desc}/{kind}: no local fluctuation observed"
            );
        }
        if desc == "cycle:10" {
            // Saturated: ends at the complete graph.
            let last = t.points.last().unwrap();
            assert!(
                (last.r - 1.0).abs() <= 1e-9,
                "saturated C10 run must end at r = 1, got {}",
                last.r
            );
        }
    }
    finish(
        8,
        started,
        Duration::from_secs(300),
        "6 fixed-seed runs: net gain positive, random runs fluctuate, saturated C10 ends at r=1",
    );
}

#[test]
fn criterion_9_determinism_across_thread_counts() {
    let started = Instant::now();

    let pool = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
    };

    // Criterion 6 rerun: the sampling report must be byte-identical.
    let t2_single = pool(1).install(|| sample_ratio_bound(10, 16, 100_000, SUITE_SEED).unwrap());
    let t2_multi = pool(4).install(|| sample_ratio_bound(10, 16, 100_000, SUITE_SEED).unwrap());
    assert_eq!(t2_single.to_line(), t2_multi.to_line());

    // Criterion 8 rerun: every trajectory CSV must be byte-identical.
    for (desc, g, kind, seed, steps) in trajectory_runs() {
        let single = pool(1).install(|| trajectory_csv(&run_one(desc, &g, kind, seed, steps)));
        let multi = pool(4).install(|| trajectory_csv(&run_one(desc, &g, kind, seed, steps)));
        assert_eq!(single, multi, "{desc}/{kind} CSV differs across thread counts");
    }

    finish(
        9,
        started,
        Duration::from_secs(900),
        "criteria 6 and 8 outputs byte-identical on 1-thread and 4-thread pools",
    );
}

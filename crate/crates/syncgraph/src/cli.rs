//! Command-line front end.
//!
//! Graph sources are generator spec strings (`cycle:6`, `path:4`,
//! `complete:4`, `kbip:2:3`, `petersen`, `ba:50:2:12345`) or paths to
//! edge-list files (`n m` header, then one `u v` line per edge). `--add-edge
//! u,v` applies after the source graph is built and may repeat.
//!
//! Exit codes: 0 success, 1 any verification FAIL, 2 usage or input errors.
//! Numbers printed to stdout are rounded to 12 significant digits; CSV files
//! keep full precision (shortest representation that parses back exactly).

use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::experiments::{
    edge_add_trajectory, export_csv, export_meta, trajectory_stats, Strategy, StrategySpec,
};
use crate::graph::{generate, parse_edge_list, serialize_edge_list, GeneratorSpec, Graph};
use crate::metrics::metric_report;
use crate::search::{anneal, best_table_csv, exhaustive_scan, nonmonotonicity_report, AnnealSchedule};
use crate::spectra::{
    eigen_multiplicity, laplacian_matrix, laplacian_spectrum, symmetric_eigenvalues, sync_report,
    MULT_CLUSTER_TOL, SOLVER_TOL,
};
use crate::verify::{self, ClaimReport};

#[derive(Parser)]
#[command(
    name = "syncgraph",
    version,
    about = "Laplacian spectra, eigenratio synchronizability, and edge-addition experiments"
)]
struct Cli {
    /// Cap the rayon worker threads (results do not depend on this).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Generator spec (cycle:6, kbip:2:3, petersen, ba:50:2:1, ...) or an
    /// edge-list file path.
    source: String,

    /// Add an edge u,v after building the source graph (repeatable, in order).
    #[arg(long = "add-edge", value_name = "u,v")]
    add_edge: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the sorted Laplacian spectrum.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Solver tolerance (symmetry check and reported Spectrum tolerance).
        #[arg(long, default_value_t = SOLVER_TOL)]
        tol: f64,
        /// Also write the eigenvalues to a file, one per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print lambda2, lambdaN, and the eigenratio r = lambda2/lambdaN.
    Ratio {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Print (or write) the complement graph as an edge-list document.
    Complement {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print betweenness, distances, degree variance, and clustering.
    Metrics {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Run verification checks; one report line per instance, exit 1 on FAIL.
    Verify {
        /// lemma1 | lemma2 | lemma4 | lemma5 | lemma6 | theorem1 | theorem2 |
        /// split | all
        target: String,

        /// Graph source for single-instance targets (lemma2, split; optional
        /// for lemma1/lemma4/lemma5/lemma6, which otherwise run their suites).
        source: Option<String>,

        /// Probe edge u,v for single-instance lemma1/lemma4 checks.
        #[arg(long = "add-edge", value_name = "u,v")]
        add_edge: Vec<String>,

        /// Cycle sizes for theorem1, inclusive, e.g. 4..40.
        #[arg(long = "n-range", default_value = "4..40")]
        n_range: String,

        /// Node count for theorem2 sampling.
        #[arg(long, default_value_t = 10)]
        n: usize,

        /// Edge count for theorem2 sampling.
        #[arg(long, default_value_t = 16)]
        m: usize,

        /// Instance count for the randomized suites / theorem2 samples.
        #[arg(long)]
        samples: Option<usize>,

        /// Largest node count drawn by the randomized suites.
        #[arg(long = "max-n")]
        max_n: Option<usize>,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        /// Also write the report lines to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge-addition trajectory; writes CSV (and a .meta sidecar) to --out.
    Trajectory {
        #[command(flatten)]
        graph: GraphArgs,
        /// homog (degree-homogeneous) or random.
        #[arg(long, default_value = "homog")]
        strategy: String,
        /// Number of edges to add; defaults to full saturation.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive best-eigenratio table over connected labeled graphs.
    Scan {
        #[arg(long)]
        n: usize,
        /// Edge-count range, inclusive, e.g. 6..9; defaults to all of
        /// n-1..n(n-1)/2.
        #[arg(long = "m-range")]
        m_range: Option<String>,
        /// Write the table CSV here as well as to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulated-annealing eigenratio maximization at fixed n, m.
    Anneal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        t0: f64,
        #[arg(long, default_value_t = 0.999)]
        cooling: f64,
        #[arg(long, default_value_t = 100_000)]
        iters: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        /// Write the best graph as an edge-list document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Entry point for the binary: parses `std::env::args` and returns the exit code.
pub fn run_from_args() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout (exit 0) and errors to stderr.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Rounds to 12 significant digits, then prints the shortest form. Magnitudes
/// below 1e-12 (solver noise at desk scale) print as 0.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor();
    let scale = 10f64.powi(11 - magnitude as i32);
    format!("{}", (x * scale).round() / scale)
}

fn parse_edge_flag(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidSpec(format!(
            "--add-edge expects u,v with two endpoints, got {s:?}"
        )));
    }
    let parse = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidSpec(format!("--add-edge endpoint {p:?} is not an integer")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| {
        Error::InvalidSpec(format!("expected an inclusive range like 4..40, got {s:?}"))
    })?;
    let parse = |p: &str| {
        p.parse::<usize>()
            .map_err(|_| Error::InvalidSpec(format!("range bound {p:?} is not an integer")))
    };
    Ok(parse(lo)?..=parse(hi)?)
}

/// Resolves a graph source plus `--add-edge` applications; returns the graph
/// and a descriptive string for metadata files.
fn load_graph(source: &str, add_edges: &[String]) -> Result<(Graph, String)> {
    let (mut g, mut desc) = match GeneratorSpec::parse(source) {
        Ok(spec) => (generate(&spec)?, spec.to_string()),
        Err(spec_err) => {
            let path = PathBuf::from(source);
            if path.is_file() {
                (parse_edge_list(&fs::read_to_string(&path)?)?, source.to_string())
            } else {
                return Err(Error::InvalidSpec(format!(
                    "{source:?} staged as generator spec: {spec_err}; and no such file exists"
                )));
            }
        }
    };
    for raw in add_edges {
        let (u, v) = parse_edge_flag(raw)?;
        g = g.with_edge(u, v)?;
        desc.push_str(&format!("+e({u},{v})"));
    }
    Ok((g, desc))
}

fn write_reports(reports: &[ClaimReport], out: Option<&PathBuf>) -> Result<i32> {
    let mut text = String::new();
    for r in reports {
        let line = r.to_line();
        println!("{line}");
        text.push_str(&line);
        text.push('\n');
    }
    if let Some(path) = out {
        fs::write(path, text)?;
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Spectrum { graph, tol, out } => {
            let (g, _) = load_graph(&graph.source, &graph.add_edge)?;
            let values = symmetric_eigenvalues(&laplacian_matrix(&g), tol)?;
            let rendered: Vec<String> = values.iter().map(|&v| fmt_sig(v)).collect();
            println!("{}", rendered.join(" "));
            if let Some(path) = out {
                fs::write(path, rendered.join("\n") + "\n")?;
            }
            Ok(0)
        }
        Command::Ratio { graph } => {
            let (g, _) = load_graph(&graph.source, &graph.add_edge)?;
            let report = sync_report(&g)?;
            println!(
                "r={} lambda2={} lambdaN={}",
                fmt_sig(report.r),
                fmt_sig(report.lambda2),
                fmt_sig(report.lambda_max)
            );
            Ok(0)
        }
        Command::Complement { graph, out } => {
            let (g, _) = load_graph(&graph.source, &graph.add_edge)?;
            let doc = serialize_edge_list(&g.complement());
            println!("{doc}");
            if let Some(path) = out {
                fs::write(path, doc + "\n")?;
            }
            Ok(0)
        }
        Command::Metrics { graph } => {
            let (g, _) = load_graph(&graph.source, &graph.add_edge)?;
            let report = metric_report(&g)?;
            let b: Vec<String> = report.betweenness.iter().map(|&v| fmt_sig(v)).collect();
            println!("betweenness={}", b.join(" "));
            println!("avg_distance={}", fmt_sig(report.avg_distance));
            println!("diameter={}", report.diameter);
            println!("degree_variance={}", fmt_sig(report.degree_variance));
            println!("clustering={}", fmt_sig(report.clustering));
            Ok(0)
        }
        Command::Verify {
            target,
            source,
            add_edge,
            n_range,
            n,
            m,
            samples,
            max_n,
            seed,
            out,
        } => {
            let single = |edges: &[String]| -> Result<Option<(Graph, (usize, usize))>> {
                match &source {
                    None => Ok(None),
                    Some(src) => {
                        let (g, _) = load_graph(src, &[])?;
                        let probe = match edges.first() {
                            Some(raw) => parse_edge_flag(raw)?,
                            None => (0, 0),
                        };
                        Ok(Some((g, probe)))
                    }
                }
            };
            let reports: Vec<ClaimReport> = match target.as_str() {
                "lemma1" => match single(&add_edge)? {
                    Some((g, e)) => vec![verify::verify_edge_monotonicity(&g, e)?],
                    None => verify::lemma1_suite(samples.unwrap_or(500), max_n.unwrap_or(25), seed),
                },
                "lemma2" => {
                    let src = source.ok_or_else(|| {
                        Error::InvalidSpec("verify lemma2 needs a graph source".into())
                    })?;
                    let (g, _) = load_graph(&src, &add_edge)?;
                    vec![verify::verify_degree_bounds(&g)?]
                }
                "lemma4" => match single(&add_edge)? {
                    Some((g, e)) => vec![verify::verify_lambda2_preservation(&g, e)?],
                    None => verify::lemma4_suite(samples.unwrap_or(500), max_n.unwrap_or(25), seed),
                },
                "lemma5" => match single(&add_edge)? {
                    Some((g, _)) => vec![verify::verify_complement_identities(&g)?],
                    None => verify::lemma5_suite(samples.unwrap_or(200), max_n.unwrap_or(30), seed),
                },
                "lemma6" => match single(&add_edge)? {
                    Some((g, _)) => vec![verify::verify_even_cycle_bound(&g)?],
                    None => verify::lemma6_suite(samples.unwrap_or(300), max_n.unwrap_or(12), seed),
                },
                "theorem1" => verify::verify_cycle_theorem(parse_range(&n_range)?)?,
                "theorem2" => {
                    vec![verify::sample_ratio_bound(n, m, samples.unwrap_or(100_000), seed)?]
                }
                "split" => {
                    let src = source.ok_or_else(|| {
                        Error::InvalidSpec("verify split needs a graph source".into())
                    })?;
                    let (g, _) = load_graph(&src, &add_edge)?;
                    vec![verify::verify_split_complement(&g)?]
                }
                "all" => {
                    let mut all = verify::verify_cycle_theorem(4..=40)?;
                    all.extend(verify::lemma1_suite(500, 25, seed));
                    all.extend(verify::lemma4_suite(500, 25, seed));
                    all.extend(verify::lemma5_suite(200, 30, seed));
                    all.extend(verify::lemma6_suite(300, 12, seed));
                    all.push(verify::sample_ratio_bound(10, 16, samples.unwrap_or(100_000), seed)?);
                    all
                }
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown verify target {other:?} (lemma1|lemma2|lemma4|lemma5|lemma6|theorem1|theorem2|split|all)"
                    )))
                }
            };
            write_reports(&reports, out.as_ref())
        }
        Command::Trajectory {
            graph,
            strategy,
            steps,
            seed,
            out,
        } => {
            let (g, desc) = load_graph(&graph.source, &graph.add_edge)?;
            let spec = StrategySpec {
                kind: Strategy::parse(&strategy)?,
                seed,
            };
            let steps = steps.unwrap_or(g.pair_count() - g.edge_count());
            let trajectory = edge_add_trajectory(&g, &spec, steps, desc)?;
            export_csv(&trajectory, &out)?;
            export_meta(&trajectory, &out)?;
            let stats = trajectory_stats(&trajectory)?;
            println!(
                "points={} r_first={} r_last={} net_gain={} decreases={} max_drawdown={}",
                trajectory.points.len(),
                fmt_sig(trajectory.points.first().unwrap().r),
                fmt_sig(trajectory.points.last().unwrap().r),
                fmt_sig(stats.net_gain),
                stats.n_decreasing_steps,
                fmt_sig(stats.max_drawdown)
            );
            Ok(0)
        }
        Command::Scan { n, m_range, out } => {
            let range = m_range.as_deref().map(parse_range).transpose()?;
            let table = exhaustive_scan(n, range)?;
            let csv = best_table_csv(&table);
            print!("{csv}");
            if let Some(path) = out {
                fs::write(path, &csv)?;
            }
            let decreases = nonmonotonicity_report(&table)?;
            if decreases.is_empty() {
                eprintln!("no adjacent decrease in max_r for n={n}");
            } else {
                eprintln!("adjacent decreases in max_r for n={n}: {decreases:?}");
            }
            Ok(0)
        }
        Command::Anneal {
            n,
            m,
            seed,
            t0,
            cooling,
            iters,
            restarts,
            out,
        } => {
            let schedule = AnnealSchedule {
                t0,
                cooling,
                iters,
                restarts,
            };
            let result = anneal(n, m, seed, schedule)?;
            let s = laplacian_spectrum(&result.best_graph)?;
            println!(
                "best_r={} lambda2={} lambdaN={} mult2={} multN={} evaluations={} schedule: {}",
                fmt_sig(result.best_r),
                fmt_sig(s.lambda2()),
                fmt_sig(s.lambda_max()),
                eigen_multiplicity(&s, s.lambda2(), MULT_CLUSTER_TOL),
                eigen_multiplicity(&s, s.lambda_max(), MULT_CLUSTER_TOL),
                result.evaluations,
                result.schedule_desc
            );
            let doc = serialize_edge_list(&result.best_graph);
            println!("{doc}");
            if let Some(path) = out {
                fs::write(path, doc + "\n")?;
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_sig_rounds_to_twelve_digits() {
        assert_eq!(fmt_sig(0.25), "0.25");
        assert_eq!(fmt_sig(0.9999999999999998), "1");
        assert_eq!(fmt_sig(1.0000000000000002), "1");
        assert_eq!(fmt_sig(4.0), "4");
        assert_eq!(fmt_sig(0.3819660112501051), "0.38196601125");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-4.44e-16), "0");
        assert_eq!(fmt_sig(-2.5000000000000004), "-2.5");
    }

    #[test]
    fn edge_flag_parsing() {
        assert_eq!(parse_edge_flag("0,2").unwrap(), (0, 2));
        assert_eq!(parse_edge_flag(" 3 , 4 ").unwrap(), (3, 4));
        assert!(parse_edge_flag("3").is_err());
        assert!(parse_edge_flag("a,b").is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("4..40").unwrap(), 4..=40);
        assert!(parse_range("4-40").is_err());
        assert!(parse_range("x..9").is_err());
    }

    #[test]
    fn load_graph_resolves_specs_and_add_edges() {
        let (g, desc) = load_graph("cycle:5", &["0,2".to_string()]).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(desc, "cycle:5+e(0,2)");
        assert!(load_graph("nonsense:5", &[]).is_err());
        assert!(load_graph("cycle:5", &["0,1".to_string()]).is_err()); // exists
    }

    #[test]
    fn load_graph_reads_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.edges");
        std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
        let (g, _) = load_graph(path.to_str().unwrap(), &[]).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }
}

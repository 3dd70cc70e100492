//! Edge-addition trajectory experiments: start from a connected seed graph,
//! add one edge per step by a strategy, and record the eigenratio (plus λ2
//! and λN) after every addition.
//!
//! Strategies:
//! - degree-homogeneous: pick the non-edge minimizing
//!   (deg(u)+deg(v), max(deg(u), deg(v))) lexicographically, ties broken
//!   uniformly by the seeded generator;
//! - random: uniform over the current non-edges.
//!
//! A trajectory is fully determined by (seed graph, strategy kind, seed).

use std::fmt;
use std::fs;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::sync_report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    DegreeHomogeneous,
    Random,
}

impl Strategy {
    /// Accepts the CLI names `homog` and `random`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "homog" => Ok(Strategy::DegreeHomogeneous),
            "random" => Ok(Strategy::Random),
            _ => Err(Error::InvalidSpec(format!(
                "unknown strategy {s:?} (expected homog or random)"
            ))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::DegreeHomogeneous => "homog",
            Strategy::Random => "random",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategySpec {
    pub kind: Strategy,
    pub seed: u64,
}

/// One record per trajectory point: the graph after `m_add` added edges.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub m_add: usize,
    pub r: f64,
    pub lambda2: f64,
    pub lambda_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// Point 0 is the unmodified seed graph; `m_add` increases by 1 per step.
    pub points: Vec<TrajectoryPoint>,
    pub seed_graph_desc: String,
    pub strategy: StrategySpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryStats {
    /// r at the final point minus r at the seed graph.
    pub net_gain: f64,
    /// Number of consecutive-point decreases of r.
    pub n_decreasing_steps: usize,
    /// Largest peak-to-trough drop of r along the trajectory.
    pub max_drawdown: f64,
}

/// Runs `steps` edge additions from `g0`, recording the eigenratio after each.
pub fn edge_add_trajectory(
    g0: &Graph,
    strategy: &StrategySpec,
    steps: usize,
    seed_graph_desc: impl Into<String>,
) -> Result<Trajectory> {
    let (components, _) = g0.connectivity();
    if components != 1 {
        return Err(Error::DisconnectedGraph { components });
    }
    let available = g0.pair_count() - g0.edge_count();
    if steps > available {
        return Err(Error::InvalidSpec(format!(
            "{steps} steps requested but only {available} non-edges available"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut g = g0.clone();
    let mut points = Vec::with_capacity(steps + 1);
    let report = sync_report(&g)?;
    points.push(TrajectoryPoint {
        m_add: 0,
        r: report.r,
        lambda2: report.lambda2,
        lambda_max: report.lambda_max,
    });

    for step in 1..=steps {
        let non_edges = g.non_edges();
        let (u, v) = match strategy.kind {
            Strategy::Random => non_edges[rng.gen_range(0..non_edges.len())],
            Strategy::DegreeHomogeneous => {
                let deg = g.degrees();
                let key = |&(u, v): &(usize, usize)| (deg[u] + deg[v], deg[u].max(deg[v]));
                let best = non_edges.iter().map(key).min().expect("non-edges remain");
                let tied: Vec<(usize, usize)> = non_edges
                    .iter()
                    .copied()
                    .filter(|e| key(e) == best)
                    .collect();
                tied[rng.gen_range(0..tied.len())]
            }
        };
        g = g.with_edge(u, v)?;
        let report = sync_report(&g)?;
        points.push(TrajectoryPoint {
            m_add: step,
            r: report.r,
            lambda2: report.lambda2,
            lambda_max: report.lambda_max,
        });
    }

    Ok(Trajectory {
        points,
        seed_graph_desc: seed_graph_desc.into(),
        strategy: *strategy,
    })
}

/// Net gain, decrease count, and maximum drawdown of r over the trajectory.
pub fn trajectory_stats(t: &Trajectory) -> Result<TrajectoryStats> {
    if t.points.len() < 2 {
        return Err(Error::InvalidSpec(
            "trajectory stats need at least 2 points".into(),
        ));
    }
    let first = t.points.first().unwrap().r;
    let last = t.points.last().unwrap().r;
    let mut n_decreasing = 0;
    let mut peak = first;
    let mut max_drawdown = 0.0f64;
    for pair in t.points.windows(2) {
        if pair[1].r < pair[0].r {
            n_decreasing += 1;
        }
        peak = peak.max(pair[1].r);
        max_drawdown = max_drawdown.max(peak - pair[1].r);
    }
    Ok(TrajectoryStats {
        net_gain: last - first,
        n_decreasing_steps: n_decreasing,
        max_drawdown,
    })
}

/// CSV serialization: header `m_add,r,lambda2,lambdaN`, one row per point.
/// Floats use the shortest decimal that parses back to the identical value.
pub fn trajectory_csv(t: &Trajectory) -> String {
    let mut out = String::from("m_add,r,lambda2,lambdaN\n");
    for p in &t.points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            p.m_add, p.r, p.lambda2, p.lambda_max
        ));
    }
    out
}

/// Writes the trajectory CSV to `path` (LF endings, UTF-8).
pub fn export_csv(t: &Trajectory, path: &Path) -> Result<()> {
    fs::write(path, trajectory_csv(t))?;
    Ok(())
}

/// Writes the sidecar metadata file `<path>.meta`: seed graph description,
/// strategy, seed, and tool version, one `key=value` per line.
pub fn export_meta(t: &Trajectory, csv_path: &Path) -> Result<()> {
    let meta = format!(
        "seed_graph={}\nstrategy={}\nseed={}\ntool_version={}\n",
        t.seed_graph_desc,
        t.strategy.kind,
        t.strategy.seed,
        env!("CARGO_PKG_VERSION"),
    );
    let mut meta_path = csv_path.as_os_str().to_owned();
    meta_path.push(".meta");
    fs::write(meta_path, meta)?;
    Ok(())
}

//! Structural characteristics correlated with synchronizability: betweenness
//! centrality, distances, degree homogeneity, and clustering.
//!
//! Betweenness is unnormalized ordered-pair shortest-path betweenness: for
//! node v, the sum over ordered pairs (s, t) with s ≠ t ≠ v of the fraction
//! of shortest s–t paths passing through v. Under this convention every node
//! of the Petersen graph scores exactly 6.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bundle of the structural indicators for one connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub betweenness: Vec<f64>,
    pub avg_distance: f64,
    pub diameter: usize,
    pub degree_variance: f64,
    pub clustering: f64,
}

/// Computes every indicator at once. Requires a connected graph.
pub fn metric_report(g: &Graph) -> Result<MetricReport> {
    let (avg_distance, diameter) = distance_stats(g)?;
    Ok(MetricReport {
        betweenness: betweenness(g)?,
        avg_distance,
        diameter,
        degree_variance: degree_homogeneity(g),
        clustering: clustering_coefficient(g),
    })
}

/// Unnormalized ordered-pair betweenness centrality (Brandes accumulation,
/// one BFS per source; no halving, so each unordered pair counts twice).
pub fn betweenness(g: &Graph) -> Result<Vec<f64>> {
    let (components, _) = g.connectivity();
    if components != 1 {
        return Err(Error::DisconnectedGraph { components });
    }
    let n = g.node_count();
    let adj = g.adjacency();
    let mut scores = vec![0.0; n];

    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::new();

    for s in 0..n {
        stack.clear();
        for p in &mut preds {
            p.clear();
        }
        sigma.fill(0.0);
        dist.fill(-1);
        delta.fill(0.0);

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                scores[w] += delta[w];
            }
        }
    }
    Ok(scores)
}

/// Average shortest-path distance over unordered distinct node pairs, and the
/// diameter. Unweighted BFS distances; requires a connected graph.
pub fn distance_stats(g: &Graph) -> Result<(f64, usize)> {
    let (components, _) = g.connectivity();
    if components != 1 {
        return Err(Error::DisconnectedGraph { components });
    }
    let n = g.node_count();
    if n < 2 {
        return Ok((0.0, 0));
    }
    let adj = g.adjacency();
    let mut sum = 0u64;
    let mut diameter = 0usize;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for t in (s + 1)..n {
            sum += dist[t] as u64;
            diameter = diameter.max(dist[t]);
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok((sum as f64 / pairs, diameter))
}

/// Population variance of the degree sequence; 0 exactly for regular graphs.
pub fn degree_homogeneity(g: &Graph) -> f64 {
    let deg = g.degrees();
    let n = deg.len() as f64;
    let mean = deg.iter().sum::<usize>() as f64 / n;
    deg.iter()
        .map(|&d| {
            let diff = d as f64 - mean;
            diff * diff
        })
        .sum::<f64>()
        / n
}

/// Average local clustering coefficient; nodes of degree < 2 contribute 0.
pub fn clustering_coefficient(g: &Graph) -> f64 {
    let n = g.node_count();
    let adj = g.adjacency();
    let mut total = 0.0;
    for v in 0..n {
        let neighbors = &adj[v];
        let k = neighbors.len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[(i + 1)..] {
                if g.contains_edge(a, b) {
                    links += 1;
                }
            }
        }
        total += 2.0 * links as f64 / (k * (k - 1)) as f64;
    }
    total / n as f64
}

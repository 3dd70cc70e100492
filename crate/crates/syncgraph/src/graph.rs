//! Simple undirected labeled graphs: representation, generators, mutation,
//! complementation, induced subgraphs, connectivity, and the edge-list text
//! format.
//!
//! A [`Graph`] is a node count plus a set of unordered edges stored with
//! `u < v`. Graphs are immutable values: every mutating operation returns a
//! new graph, so callers can compare spectra before and after a change.
//! Node labels are 0-based throughout.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Simple undirected graph on nodes `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, all endpoints in `[0, n)`,
/// edges stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Normalizes an unordered pair, rejecting self-loops and out-of-range endpoints.
fn normalize_pair(u: usize, v: usize, n: usize) -> Result<(usize, usize)> {
    if u == v {
        return Err(Error::InvalidEdge {
            u,
            v,
            n,
            reason: "self-loop",
        });
    }
    if u >= n || v >= n {
        return Err(Error::InvalidEdge {
            u,
            v,
            n,
            reason: "endpoint out of range",
        });
    }
    Ok((u.min(v), u.max(v)))
}

impl Graph {
    /// Builds a graph from a node count and a list of node pairs.
    ///
    /// Duplicate pairs collapse; pair order is irrelevant. Self-loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("graph needs at least one node".into()));
        }
        let mut edges = BTreeSet::new();
        for &(u, v) in pairs {
            edges.insert(normalize_pair(u, v, n)?);
        }
        Ok(Graph { n, edges })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::build(n, &[])
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Number of node pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Non-edges in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.pair_count() - self.edges.len());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Per-node degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Returns a copy with one edge added or removed.
    pub fn mutate_edge(&self, u: usize, v: usize, action: EdgeAction) -> Result<Self> {
        let pair = normalize_pair(u, v, self.n)?;
        let mut next = self.clone();
        match action {
            EdgeAction::Add => {
                if !next.edges.insert(pair) {
                    return Err(Error::EdgeExists(pair.0, pair.1));
                }
            }
            EdgeAction::Remove => {
                if !next.edges.remove(&pair) {
                    return Err(Error::EdgeMissing(pair.0, pair.1));
                }
            }
        }
        Ok(next)
    }

    /// Copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.mutate_edge(u, v, EdgeAction::Add)
    }

    /// Copy with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.mutate_edge(u, v, EdgeAction::Remove)
    }

    /// Complement within the complete graph on the same nodes.
    pub fn complement(&self) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Induced subgraph on `nodes`, relabeled `0..|nodes|` in ascending
    /// original order. Keeps exactly the edges with both endpoints in `nodes`.
    pub fn induced_subgraph(&self, nodes: &BTreeSet<usize>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidSubset("empty node set".into()));
        }
        if let Some(&bad) = nodes.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidSubset(format!(
                "node {bad} out of range for graph on {} nodes",
                self.n
            )));
        }
        let relabel: std::collections::BTreeMap<usize, usize> =
            nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (relabel.get(&u), relabel.get(&v)) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph {
            n: nodes.len(),
            edges,
        })
    }

    /// Connected components via BFS in ascending node order.
    ///
    /// Returns `(component_count, labels)`; labels are assigned in order of
    /// first discovery, so node 0 always has label 0.
    pub fn connectivity(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if labels[w] == usize::MAX {
                        labels[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, labels)
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().0 == 1
    }

    /// Per-node degrees together with the minimum and maximum degree.
    pub fn degree_profile(&self) -> (Vec<usize>, usize, usize) {
        let deg = self.degrees();
        let d_min = deg.iter().copied().min().unwrap_or(0);
        let d_max = deg.iter().copied().max().unwrap_or(0);
        (deg, d_min, d_max)
    }

    /// Proper 2-coloring test. When the graph is bipartite, returns the
    /// coloring (0/1 per node, assigned by BFS from each component's least node).
    pub fn is_bipartite(&self) -> (bool, Option<Vec<u8>>) {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return (false, None);
                    }
                }
            }
        }
        (true, Some(color))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

/// Single-edge mutation direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeAction {
    Add,
    Remove,
}

/// Builds a graph from a node count and pair list (see [`Graph::build`]).
pub fn build_graph(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    Graph::build(n, pairs)
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Named graph generator with its parameters.
///
/// The string form accepted by the CLI is `cycle:N`, `path:N`, `complete:N`,
/// `kbip:P:Q`, `petersen`, `ba:N:M:SEED`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Petersen,
    /// Preferential attachment: complete seed on `m_attach + 1` nodes, then
    /// each new node attaches `m_attach` edges to distinct existing nodes with
    /// probability proportional to degree. Deterministic for a fixed seed.
    BarabasiAlbert { n: usize, m_attach: usize, seed: u64 },
}

impl GeneratorSpec {
    /// Parses the CLI spec string, e.g. `"cycle:6"` or `"ba:50:2:12345"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = |msg: &str| Error::InvalidSpec(format!("{msg} (in generator spec {s:?})"));
        let int = |p: &str| -> Result<usize> {
            p.parse()
                .map_err(|_| bad(&format!("expected a non-negative integer, got {p:?}")))
        };
        match parts.as_slice() {
            ["cycle", n] => Ok(GeneratorSpec::Cycle { n: int(n)? }),
            ["path", n] => Ok(GeneratorSpec::Path { n: int(n)? }),
            ["complete", n] => Ok(GeneratorSpec::Complete { n: int(n)? }),
            ["kbip", p, q] => Ok(GeneratorSpec::CompleteBipartite {
                p: int(p)?,
                q: int(q)?,
            }),
            ["petersen"] => Ok(GeneratorSpec::Petersen),
            ["ba", n, m, seed] => Ok(GeneratorSpec::BarabasiAlbert {
                n: int(n)?,
                m_attach: int(m)?,
                seed: seed
                    .parse()
                    .map_err(|_| bad(&format!("expected a u64 seed, got {seed:?}")))?,
            }),
            _ => Err(bad("unknown generator")),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GeneratorSpec::Path { n } => write!(f, "path:{n}"),
            GeneratorSpec::Complete { n } => write!(f, "complete:{n}"),
            GeneratorSpec::CompleteBipartite { p, q } => write!(f, "kbip:{p}:{q}"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::BarabasiAlbert { n, m_attach, seed } => {
                write!(f, "ba:{n}:{m_attach}:{seed}")
            }
        }
    }
}

/// Instantiates a generator spec.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match *spec {
        GeneratorSpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidSpec(format!("cycle requires N >= 3, got {n}")));
            }
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::build(n, &pairs)
        }
        GeneratorSpec::Path { n } => {
            if n < 1 {
                return Err(Error::InvalidSpec("path requires N >= 1".into()));
            }
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::build(n, &pairs)
        }
        GeneratorSpec::Complete { n } => {
            if n < 1 {
                return Err(Error::InvalidSpec("complete requires N >= 1".into()));
            }
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    pairs.push((u, v));
                }
            }
            Graph::build(n, &pairs)
        }
        GeneratorSpec::CompleteBipartite { p, q } => {
            if p < 1 || q < 1 {
                return Err(Error::InvalidSpec(format!(
                    "complete bipartite requires p, q >= 1, got ({p}, {q})"
                )));
            }
            let mut pairs = Vec::with_capacity(p * q);
            for u in 0..p {
                for v in 0..q {
                    pairs.push((u, p + v));
                }
            }
            Graph::build(p + q, &pairs)
        }
        GeneratorSpec::Petersen => {
            // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
            let mut pairs = Vec::with_capacity(15);
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
                pairs.push((i, i + 5));
            }
            Graph::build(10, &pairs)
        }
        GeneratorSpec::BarabasiAlbert { n, m_attach, seed } => {
            barabasi_albert(n, m_attach, seed)
        }
    }
}

/// Preferential-attachment generator. Starts from a complete graph on
/// `m_attach + 1` nodes; each later node attaches `m_attach` edges to distinct
/// existing nodes chosen with probability proportional to current degree.
/// Edge count is m(n-m) + C(m,2); the result is always connected.
pub fn barabasi_albert(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || n <= m_attach {
        return Err(Error::InvalidSpec(format!(
            "preferential attachment requires N > m_attach >= 1, got N={n}, m_attach={m_attach}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    let seed_size = m_attach + 1;
    for u in 0..seed_size {
        for v in (u + 1)..seed_size {
            pairs.push((u, v));
        }
    }
    let mut degree = vec![m_attach; seed_size];
    for new in seed_size..n {
        let mut chosen: BTreeSet<usize> = BTreeSet::new();
        while chosen.len() < m_attach {
            // Degree-weighted pick over nodes not already chosen this round.
            let total: usize = (0..new).filter(|v| !chosen.contains(v)).map(|v| degree[v]).sum();
            let mut ticket = rng.gen_range(0..total);
            let mut pick = 0;
            for v in 0..new {
                if chosen.contains(&v) {
                    continue;
                }
                if ticket < degree[v] {
                    pick = v;
                    break;
                }
                ticket -= degree[v];
            }
            chosen.insert(pick);
        }
        degree.push(0);
        for &v in &chosen {
            pairs.push((v, new));
            degree[v] += 1;
            degree[new] += 1;
        }
    }
    Graph::build(n, &pairs)
}

/// Uniform random graph with exactly `m` edges: a uniform `m`-subset of all
/// node pairs, via partial Fisher–Yates on the pair list.
pub fn random_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSpec("graph needs at least one node".into()));
    }
    let total = n * (n - 1) / 2;
    if m > total {
        return Err(Error::InvalidSpec(format!(
            "m = {m} exceeds the {total} node pairs of n = {n}"
        )));
    }
    let mut pool: Vec<(usize, usize)> = Vec::with_capacity(total);
    for u in 0..n {
        for v in (u + 1)..n {
            pool.push((u, v));
        }
    }
    for i in 0..m {
        let j = rng.gen_range(i..total);
        pool.swap(i, j);
    }
    Graph::build(n, &pool[..m])
}

/// Uniform random *connected* graph with exactly `m` edges, by rejection
/// sampling on connectivity. Requires `m >= n - 1`.
pub fn random_connected_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if n >= 1 && m + 1 < n {
        return Err(Error::InvalidSpec(format!(
            "no connected graph with n = {n}, m = {m} (need m >= n - 1)"
        )));
    }
    loop {
        let g = random_graph(n, m, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

/// Parses the edge-list document: header line `"n m"`, then `m` lines `"u v"`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "empty document".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_int = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line,
            reason: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            reason: format!("{what} is not a non-negative integer"),
        })
    };
    let n = parse_int(it.next(), 1, "node count")?;
    let m = parse_int(it.next(), 1, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: 1,
            reason: "header has trailing tokens".into(),
        });
    }
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            reason: "node count must be >= 1".into(),
        });
    }

    let mut pairs = Vec::with_capacity(m);
    let mut line_no = 1;
    for line in lines {
        line_no += 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u = parse_int(it.next(), line_no, "edge endpoint")?;
        let v = parse_int(it.next(), line_no, "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                reason: "edge line has trailing tokens".into(),
            });
        }
        normalize_pair(u, v, n).map_err(|e| Error::Parse {
            line: line_no,
            reason: e.to_string(),
        })?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: line_no,
            reason: format!("header declares {m} edges but {} edge lines found", pairs.len()),
        });
    }
    Graph::build(n, &pairs)
}

/// Serializes to the edge-list document, edges sorted lexicographically.
/// No trailing newline; callers writing files append one.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

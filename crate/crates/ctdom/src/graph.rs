//! Immutable simple-graph values.
//!
//! Graphs are plain values: every operation returns a fresh graph, nothing
//! mutates in place, so contraction-sequence searches can share them freely.
//! Vertices are `0..n` with `n <= MAX_VERTICES`.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{VertexSet, MAX_VERTICES};

/// Attempts made by [`Graph::random_connected`] before giving up.
pub const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("capacity is {MAX_VERTICES} vertices, requested {0}")]
    CapacityExceeded(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid family descriptor {0:?}: {1}")]
    InvalidSpec(String, String),
    #[error("no connected sample after {0} attempts")]
    GiveUp(usize),
    #[error("bad label map: {0}")]
    Label(String),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<BTreeMap<usize, String>>,
}

impl Graph {
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, labels: None })
    }

    /// Attach vertex labels (gadget provenance). Labels must be unique and in range.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Graph, GraphError> {
        let mut seen = std::collections::HashSet::new();
        for (&i, name) in &labels {
            if i >= self.n {
                return Err(GraphError::IndexOutOfRange { index: i, n: self.n });
            }
            if !seen.insert(name.clone()) {
                return Err(GraphError::Label(format!("label {name:?} repeats")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u,v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    pub fn labels(&self) -> Option<&BTreeMap<usize, String>> {
        self.labels.as_ref()
    }

    pub fn label_of(&self, v: usize) -> Option<&str> {
        self.labels.as_ref()?.get(&v).map(|s| s.as_str())
    }

    /// Index carrying the given label, if labels are attached.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .find(|(_, l)| l.as_str() == name)
            .map(|(&i, _)| i)
    }

    /// Vertices reachable from `start` (including it).
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    frontier.push(v);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.component_of(v);
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.n {
            0 => true,
            _ => self.component_of(0).len() == self.n,
        }
    }

    /// BFS distances from `u`; `None` marks unreachable vertices.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut cur = VertexSet::singleton(u);
        let mut seen = cur;
        let mut d = 0;
        while !cur.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for w in cur.iter() {
                next = next.union(&self.adj[w]);
            }
            next = next.difference(&seen);
            for w in next.iter() {
                dist[w] = Some(d);
            }
            seen = seen.union(&next);
            cur = next;
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        // Expand a ball around u until v falls in or the ball stops growing.
        let mut seen = VertexSet::singleton(u);
        let mut cur = seen;
        let mut d = 0;
        loop {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for w in cur.iter() {
                next = next.union(&self.adj[w]);
            }
            next = next.difference(&seen);
            if next.contains(v) {
                return Some(d);
            }
            if next.is_empty() {
                return None;
            }
            seen = seen.union(&next);
            cur = next;
        }
    }

    /// min over pairs of distance(a,b) for a in A, b in B.
    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> Option<usize> {
        if a.intersects(b) {
            return Some(0);
        }
        let mut best: Option<usize> = None;
        for x in a.iter() {
            let dist = self.distances_from(x);
            for y in b.iter() {
                if let Some(d) = dist[y] {
                    if best.map_or(true, |b| d < b) {
                        best = Some(d);
                    }
                }
            }
        }
        best
    }

    /// Vertices at distance <= 2 from v, including v.
    pub fn ball2(&self, v: usize) -> VertexSet {
        let mut s = self.closed_neighborhood(v);
        for w in self.adj[v].iter() {
            s = s.union(&self.adj[w]);
        }
        s
    }

    /// Vertices at distance exactly 2 from v.
    pub fn dist2_exact(&self, v: usize) -> VertexSet {
        self.ball2(v).difference(&self.closed_neighborhood(v))
    }

    /// Contract edge uv. The merged vertex takes min(u,v)'s slot and indices
    /// above max(u,v) shift down by one, so sequences replay identically.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::IndexOutOfRange { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::IndexOutOfRange { index: v, n: self.n });
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        let remap = |w: usize| -> usize {
            if w == b {
                a
            } else if w > b {
                w - 1
            } else {
                w
            }
        };
        let mut adj = vec![VertexSet::EMPTY; self.n - 1];
        for w in 0..self.n {
            if w == b {
                continue;
            }
            let nw = remap(w);
            let src = if w == a { self.adj[a].union(&self.adj[b]) } else { self.adj[w] };
            for x in src.iter() {
                let nx = remap(x);
                if nx != nw {
                    adj[nw].insert(nx);
                }
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            ls.iter()
                .filter(|(&i, _)| i != b)
                .map(|(&i, l)| (remap(i), l.clone()))
                .collect()
        });
        Ok(Graph { n: self.n - 1, adj, labels })
    }

    /// Subgraph induced by S, reindexed to 0..|S| preserving relative order.
    /// The second component maps new indices back to originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let verts = s.to_vec();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            back[old] = new;
        }
        let mut adj = vec![VertexSet::EMPTY; verts.len()];
        for (new, &old) in verts.iter().enumerate() {
            for w in self.adj[old].intersection(s).iter() {
                adj[new].insert(back[w]);
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            ls.iter()
                .filter(|(&i, _)| s.contains(i))
                .map(|(&i, l)| (back[i], l.clone()))
                .collect()
        });
        (Graph { n: verts.len(), adj, labels }, verts)
    }

    /// Replace every edge uv by a path u,e1,e2,e3,e4,v. Original vertices keep
    /// their indices; path vertices are appended per edge in sorted edge order.
    pub fn four_subdivide(&self) -> Result<(Graph, SubdivisionMap), GraphError> {
        let edges = self.edges();
        let n2 = self.n + 4 * edges.len();
        if n2 > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(n2));
        }
        let mut new_edges = Vec::with_capacity(5 * edges.len());
        let mut map = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let base = self.n + 4 * i;
            let path = [base, base + 1, base + 2, base + 3];
            new_edges.push((u, path[0]));
            new_edges.push((path[0], path[1]));
            new_edges.push((path[1], path[2]));
            new_edges.push((path[2], path[3]));
            new_edges.push((path[3], v));
            map.push(((u, v), path));
        }
        let mut g = Graph::build(n2, &new_edges)?;
        g.labels = self.labels.clone();
        Ok((g, SubdivisionMap { entries: map }))
    }

    /// Erdős–Rényi sample, resampled until connected; deterministic per seed.
    pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(n));
        }
        assert!((0.0..=1.0).contains(&p), "edge probability out of range");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RESAMPLE_BUDGET {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).expect("sampled edges are simple");
            if g.is_connected() {
                return Ok(g);
            }
        }
        Err(GraphError::GiveUp(RESAMPLE_BUDGET))
    }

    /// Identity key for level dedup in contraction searches: equal keys mean
    /// the same labelled graph (not isomorphism).
    pub fn adjacency_key(&self) -> Vec<u64> {
        let mut key = Vec::with_capacity(1 + 4 * self.n);
        key.push(self.n as u64);
        for s in &self.adj {
            key.extend_from_slice(&s.words());
        }
        key
    }

    // ----- text and JSON formats -----

    /// Parse "n m" followed by m lines "u v"; '#' starts a comment.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut nums = Vec::new();
            for tok in body.split_whitespace() {
                let x: usize = tok.parse().map_err(|_| GraphError::Parse {
                    line,
                    msg: format!("expected a number, got {tok:?}"),
                })?;
                nums.push(x);
            }
            if nums.len() != 2 {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("expected two numbers, got {}", nums.len()),
                });
            }
            if header.is_none() {
                header = Some((nums[0], nums[1]));
            } else {
                edges.push((nums[0], nums[1]));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Graph::build(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let labels: BTreeMap<String, String> = self
            .labels
            .iter()
            .flat_map(|m| m.iter())
            .map(|(i, l)| (i.to_string(), l.clone()))
            .collect();
        let mut v = serde_json::json!({
            "n": self.n,
            "edges": self.edges(),
        });
        if !labels.is_empty() {
            v["labels"] = serde_json::to_value(labels).unwrap();
        }
        v
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
            #[serde(default)]
            labels: BTreeMap<String, String>,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| GraphError::Parse { line: e.line(), msg: e.to_string() })?;
        let g = Graph::build(raw.n, &raw.edges)?;
        if raw.labels.is_empty() {
            return Ok(g);
        }
        let mut labels = BTreeMap::new();
        for (k, l) in raw.labels {
            let i: usize = k
                .parse()
                .map_err(|_| GraphError::Label(format!("index {k:?} is not a number")))?;
            labels.insert(i, l);
        }
        g.with_labels(labels)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

/// Where each original edge's four path vertices live after [`Graph::four_subdivide`].
#[derive(Debug, Clone, Serialize)]
pub struct SubdivisionMap {
    /// ((u,v) with u < v, [e1,e2,e3,e4]) with e1 adjacent to u and e4 to v.
    pub entries: Vec<((usize, usize), [usize; 4])>,
}

impl SubdivisionMap {
    pub fn path_of(&self, u: usize, v: usize) -> Option<[usize; 4]> {
        let key = (u.min(v), u.max(v));
        self.entries.iter().find(|(e, _)| *e == key).map(|(_, p)| *p)
    }
}

// ----- named families -----

pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::build(k, &edges).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((k - 1, 0));
    Graph::build(k, &edges).unwrap()
}

pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::build(k, &edges).unwrap()
}

/// K_{1,k}: vertex 0 is the center, 1..=k the leaves.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::build(k + 1, &edges).unwrap()
}

/// Triangle P(1)P(2)P(3) plus pendant P(4) on P(3); vertex i is P(i+1).
pub fn paw() -> Graph {
    Graph::build(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// Triangle P(1)P(2)P(3) plus pendant path P(3)-P(4)-P(5); vertex i is P(i+1).
/// See WIRING.md for why the pendant path runs through P(4).
pub fn long_paw() -> Graph {
    Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap()
}

pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().map(|g| g.vertex_count()).sum();
    let mut edges = Vec::new();
    let mut off = 0;
    for g in parts {
        for (u, v) in g.edges() {
            edges.push((u + off, v + off));
        }
        off += g.vertex_count();
    }
    Graph::build(n, &edges)
}

/// Parse a family descriptor: terms joined by '+', each an optionally
/// repeated P<k>, C<k>, K<k>, K1,<k>, paw, or longpaw. Examples: "P6",
/// "2P3", "P4+2P3", "K1,3", "3K1", "long paw".
pub fn make_named_graph(spec: &str) -> Result<Graph, GraphError> {
    let bad = |msg: &str| GraphError::InvalidSpec(spec.to_string(), msg.to_string());
    let mut parts: Vec<Graph> = Vec::new();
    for term in spec.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let (count, rest) = if digits.is_empty() {
            (1usize, term)
        } else {
            (digits.parse().map_err(|_| bad("bad repeat count"))?, term[digits.len()..].trim_start())
        };
        if count == 0 {
            return Err(bad("repeat count 0"));
        }
        let norm: String = rest.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let g = if norm == "paw" {
            paw()
        } else if norm == "longpaw" {
            long_paw()
        } else if let Some(k) = norm.strip_prefix("k1,") {
            let k: usize = k.parse().map_err(|_| bad("bad star size"))?;
            star(k)
        } else if let Some(k) = norm.strip_prefix('p') {
            let k: usize = k.parse().map_err(|_| bad("bad path length"))?;
            if k == 0 {
                return Err(bad("P0 is empty"));
            }
            path(k)
        } else if let Some(k) = norm.strip_prefix('c') {
            let k: usize = k.parse().map_err(|_| bad("bad cycle length"))?;
            if k < 3 {
                return Err(bad("cycles need at least 3 vertices"));
            }
            cycle(k)
        } else if let Some(k) = norm.strip_prefix('k') {
            let k: usize = k.parse().map_err(|_| bad("bad clique size"))?;
            if k == 0 {
                return Err(bad("K0 is empty"));
            }
            complete(k)
        } else {
            return Err(bad("unknown family"));
        };
        for _ in 0..count {
            parts.push(g.clone());
        }
    }
    if parts.is_empty() {
        return Err(bad("no terms"));
    }
    disjoint_union(&parts)
}

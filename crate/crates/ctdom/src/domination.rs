//! Exact total / semitotal domination: validity checking, minimum computation,
//! lazy enumeration, and the neighborhood bookkeeping (private neighbors,
//! witnesses) the structural arguments lean on.
//!
//! Two independent exact routes are kept deliberately separate: a plain
//! subset-enumeration solver ([`gamma_enumerative`], the cross-check oracle)
//! and a branch-and-bound solver ([`gamma`]) used everywhere performance
//! matters. Tests hold them equal on random corpora.

use std::time::{Duration, Instant};

use crate::bits::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DomKind {
    Total,
    Semitotal,
}

impl std::fmt::Display for DomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomKind::Total => write!(f, "total"),
            DomKind::Semitotal => write!(f, "semitotal"),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("vertex {0} is isolated; domination number undefined")]
    IsolatedVertex(usize),
    #[error("graph too small for this domination kind")]
    TooSmall,
    #[error("solver budget exhausted")]
    Timeout,
    #[error("vertex {0} is not in the set")]
    NotInSet(usize),
}

/// Node and wall-clock limits for the branch-and-bound solver.
#[derive(Debug, Clone, Copy)]
pub struct SolverBudget {
    pub node_limit: u64,
    pub wall_limit: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { node_limit: 100_000_000, wall_limit: Duration::from_secs(60) }
    }
}

impl SolverBudget {
    pub fn nodes(node_limit: u64) -> Self {
        SolverBudget { node_limit, ..Default::default() }
    }
}

/// Validity per kind. Total: every vertex has a neighbor in D. Semitotal:
/// D dominates (closed neighborhoods) and every member has another member
/// within distance 2.
pub fn is_dom_set(g: &Graph, d: &VertexSet, kind: DomKind) -> bool {
    let n = g.vertex_count();
    match kind {
        DomKind::Total => {
            let mut covered = VertexSet::EMPTY;
            for x in d.iter() {
                covered = covered.union(&g.neighbors(x));
            }
            VertexSet::all_below(n).is_subset_of(&covered)
        }
        DomKind::Semitotal => {
            let mut covered = VertexSet::EMPTY;
            for x in d.iter() {
                covered = covered.union(&g.closed_neighborhood(x));
            }
            if !VertexSet::all_below(n).is_subset_of(&covered) {
                return false;
            }
            d.iter().all(|x| {
                let mut w = g.ball2(x).intersection(d);
                w.remove(x);
                !w.is_empty()
            })
        }
    }
}

/// PN_D(x): vertices whose only neighbor inside D is x.
pub fn private_neighborhood(g: &Graph, d: &VertexSet, x: usize) -> Result<VertexSet, SolveError> {
    if !d.contains(x) {
        return Err(SolveError::NotInSet(x));
    }
    let mut out = VertexSet::EMPTY;
    for y in g.neighbors(x).iter() {
        if g.neighbors(y).intersection(d) == VertexSet::singleton(x) {
            out.insert(y);
        }
    }
    Ok(out)
}

/// w_D(x): other members of D within distance 2 of x.
pub fn witnesses(g: &Graph, d: &VertexSet, x: usize) -> Result<VertexSet, SolveError> {
    if !d.contains(x) {
        return Err(SolveError::NotInSet(x));
    }
    let mut w = g.ball2(x).intersection(d);
    w.remove(x);
    Ok(w)
}

fn check_preconditions(g: &Graph, kind: DomKind) -> Result<(), SolveError> {
    let n = g.vertex_count();
    if n == 0 || (kind == DomKind::Semitotal && n < 2) {
        return Err(SolveError::TooSmall);
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            return Err(SolveError::IsolatedVertex(v));
        }
    }
    Ok(())
}

/// Minimum size by iterative-deepening subset enumeration. Independent
/// cross-check oracle; capped at 20 vertices where it is still instant.
pub fn gamma_enumerative(g: &Graph, kind: DomKind) -> Result<usize, SolveError> {
    check_preconditions(g, kind)?;
    let n = g.vertex_count();
    assert!(n <= 20, "enumeration oracle is capped at 20 vertices");
    for k in 2..=n {
        let mut cur = Vec::with_capacity(k);
        if enum_first(g, kind, k, 0, &mut cur) {
            return Ok(k);
        }
    }
    unreachable!("V(G) itself dominates once preconditions hold")
}

fn enum_first(g: &Graph, kind: DomKind, k: usize, from: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == k {
        let d: VertexSet = cur.iter().copied().collect();
        return is_dom_set(g, &d, kind);
    }
    let need = k - cur.len();
    let n = g.vertex_count();
    if n - from < need {
        return false;
    }
    for v in from..n {
        cur.push(v);
        if enum_first(g, kind, k, v + 1, cur) {
            cur.pop();
            return true;
        }
        cur.pop();
    }
    false
}

/// Result of an exact minimum computation, with one optimal set as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

struct Bb<'a> {
    g: &'a Graph,
    kind: DomKind,
    n: usize,
    /// cover[v]: vertices whose selection dominates v.
    cover: Vec<VertexSet>,
    /// ball2 per vertex (semitotal witness range), computed once.
    ball2: Vec<VertexSet>,
    best: usize,
    best_set: VertexSet,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    timed_out: bool,
}

impl<'a> Bb<'a> {
    fn lower_bound(&self, uncovered: &VertexSet, lonely: &VertexSet) -> usize {
        if uncovered.is_empty() {
            return usize::from(!lonely.is_empty());
        }
        // Disjoint dominator-set packing: vertices whose dominator sets are
        // pairwise disjoint each force a distinct new member.
        let mut packed = 0usize;
        let mut used = VertexSet::EMPTY;
        let mut max_gain = 1usize;
        for v in uncovered.iter() {
            if self.cover[v].is_disjoint_from(&used) {
                packed += 1;
                used = used.union(&self.cover[v]);
            }
        }
        // Coverage-ratio bound as a second opinion.
        for u in 0..self.n {
            let gain = self.cover_gain(u, uncovered);
            if gain > max_gain {
                max_gain = gain;
            }
        }
        let ratio = uncovered.len().div_ceil(max_gain);
        packed.max(ratio)
    }

    fn cover_gain(&self, u: usize, uncovered: &VertexSet) -> usize {
        // u dominates exactly the uncovered v with u in cover[v]; by symmetry
        // that is N(u) (total) or N[u] (semitotal) intersected with uncovered.
        let dominated = match self.kind {
            DomKind::Total => self.g.neighbors(u),
            DomKind::Semitotal => self.g.closed_neighborhood(u),
        };
        dominated.intersection(uncovered).len()
    }

    fn add(&self, d: &VertexSet, u: usize, covered: &VertexSet, lonely: &VertexSet) -> (VertexSet, VertexSet, VertexSet) {
        let mut d2 = *d;
        d2.insert(u);
        let dominated = match self.kind {
            DomKind::Total => self.g.neighbors(u),
            DomKind::Semitotal => self.g.closed_neighborhood(u),
        };
        let covered2 = covered.union(&dominated);
        let lonely2 = if self.kind == DomKind::Semitotal {
            let mut l = lonely.difference(&self.ball2[u]);
            let mut w = self.ball2[u].intersection(&d2);
            w.remove(u);
            if w.is_empty() {
                l.insert(u);
            }
            l
        } else {
            VertexSet::EMPTY
        };
        (d2, covered2, lonely2)
    }

    fn search(&mut self, d: VertexSet, covered: VertexSet, lonely: VertexSet) {
        if self.timed_out {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.timed_out = true;
            return;
        }
        let uncovered = VertexSet::all_below(self.n).difference(&covered);
        if uncovered.is_empty() && lonely.is_empty() {
            if d.len() < self.best {
                self.best = d.len();
                self.best_set = d;
            }
            return;
        }
        if d.len() + self.lower_bound(&uncovered, &lonely) >= self.best {
            return;
        }
        let candidates = if let Some(v) = self.most_constrained(&uncovered, &d) {
            self.cover[v].difference(&d)
        } else {
            // All dominated; fix the first lonely member.
            let x = lonely.first().expect("lonely nonempty here");
            let mut c = self.ball2[x];
            c.remove(x);
            c.difference(&d)
        };
        // Prefer candidates that dominate more, lex on ties, for fast first descent.
        let mut order: Vec<usize> = candidates.to_vec();
        order.sort_by_key(|&u| (usize::MAX - self.cover_gain(u, &uncovered), u));
        for u in order {
            let (d2, covered2, lonely2) = self.add(&d, u, &covered, &lonely);
            self.search(d2, covered2, lonely2);
            if self.timed_out {
                return;
            }
        }
    }

    fn most_constrained(&self, uncovered: &VertexSet, d: &VertexSet) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in uncovered.iter() {
            let options = self.cover[v].difference(d).len();
            if best.map_or(true, |(o, _)| options < o) {
                best = Some((options, v));
            }
        }
        best.map(|(_, v)| v)
    }
}

/// Exact minimum via branch-and-bound on the most-constrained undominated
/// vertex, seeded by a greedy upper bound.
pub fn gamma(g: &Graph, kind: DomKind, budget: SolverBudget) -> Result<GammaResult, SolveError> {
    gamma_bounded(g, kind, budget, None)
}

/// As [`gamma`], with an optional known upper bound (a valid set) to seed the
/// search; useful when a certificate is already in hand.
pub fn gamma_bounded(
    g: &Graph,
    kind: DomKind,
    budget: SolverBudget,
    seed: Option<&VertexSet>,
) -> Result<GammaResult, SolveError> {
    check_preconditions(g, kind)?;
    let n = g.vertex_count();
    let cover: Vec<VertexSet> = (0..n)
        .map(|v| match kind {
            DomKind::Total => g.neighbors(v),
            DomKind::Semitotal => g.closed_neighborhood(v),
        })
        .collect();
    let ball2: Vec<VertexSet> = (0..n).map(|v| g.ball2(v)).collect();

    let greedy = greedy_dom_set(g, kind, &cover, &ball2);
    debug_assert!(is_dom_set(g, &greedy, kind));
    let mut best = greedy.len();
    let mut best_set = greedy;
    if let Some(s) = seed {
        debug_assert!(is_dom_set(g, s, kind));
        if s.len() < best {
            best = s.len();
            best_set = *s;
        }
    }

    let mut bb = Bb {
        g,
        kind,
        n,
        cover,
        ball2,
        best,
        best_set,
        nodes: 0,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.wall_limit,
        timed_out: false,
    };
    bb.search(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
    if bb.timed_out {
        return Err(SolveError::Timeout);
    }
    Ok(GammaResult { value: bb.best, witness: bb.best_set, nodes: bb.nodes })
}

fn greedy_dom_set(g: &Graph, kind: DomKind, cover: &[VertexSet], ball2: &[VertexSet]) -> VertexSet {
    let n = g.vertex_count();
    let all = VertexSet::all_below(n);
    let mut d = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while !all.difference(&covered).is_empty() {
        let uncovered = all.difference(&covered);
        let mut pick = 0;
        let mut gain = 0;
        for u in 0..n {
            let dominated = match kind {
                DomKind::Total => g.neighbors(u),
                DomKind::Semitotal => g.closed_neighborhood(u),
            };
            let gm = dominated.intersection(&uncovered).len();
            if gm > gain {
                gain = gm;
                pick = u;
            }
        }
        d.insert(pick);
        let dominated = match kind {
            DomKind::Total => g.neighbors(pick),
            DomKind::Semitotal => g.closed_neighborhood(pick),
        };
        covered = covered.union(&dominated);
    }
    if kind == DomKind::Semitotal {
        loop {
            let lonely = d.iter().find(|&x| {
                let mut w = ball2[x].intersection(&d);
                w.remove(x);
                w.is_empty()
            });
            match lonely {
                None => break,
                Some(x) => {
                    let mut cand = ball2[x];
                    cand.remove(x);
                    let y = cand.difference(&d).first().expect("no isolated vertices");
                    d.insert(y);
                }
            }
        }
    }
    let _ = cover;
    d
}

/// Lazy stream of every dominating set of the given kind and exact size,
/// in ascending element-lexicographic order.
pub fn enumerate_dom_sets<'a>(
    g: &'a Graph,
    kind: DomKind,
    size: usize,
) -> impl Iterator<Item = VertexSet> + 'a {
    DomSetIter::new(g, kind, size)
}

struct DomSetIter<'a> {
    g: &'a Graph,
    kind: DomKind,
    size: usize,
    /// DFS stack of (vertex to try next, chosen-prefix length at that point).
    stack: Vec<(usize, usize)>,
    chosen: Vec<usize>,
    cover: Vec<VertexSet>,
    ball2: Vec<VertexSet>,
}

impl<'a> DomSetIter<'a> {
    fn new(g: &'a Graph, kind: DomKind, size: usize) -> Self {
        let n = g.vertex_count();
        let cover = (0..n)
            .map(|v| match kind {
                DomKind::Total => g.neighbors(v),
                DomKind::Semitotal => g.closed_neighborhood(v),
            })
            .collect();
        let ball2 = (0..n).map(|v| g.ball2(v)).collect();
        DomSetIter { g, kind, size, stack: vec![(0, 0)], chosen: Vec::new(), cover, ball2 }
    }

    /// Sound feasibility test: can the current prefix, extended only with
    /// vertices >= from, still reach a valid set of the target size?
    fn feasible(&self, from: usize) -> bool {
        let n = self.g.vertex_count();
        let need = self.size - self.chosen.len();
        if n.saturating_sub(from) < need {
            return false;
        }
        let mut reach: VertexSet = self.chosen.iter().copied().collect();
        let available = VertexSet::all_below(n).difference(&VertexSet::all_below(from));
        let pool = reach.union(&available);
        // Every vertex must keep at least one potential dominator.
        for v in 0..n {
            if self.cover[v].is_disjoint_from(&pool) {
                return false;
            }
        }
        if self.kind == DomKind::Semitotal {
            // Every committed member must keep a potential witness.
            for &x in &self.chosen {
                let mut w = self.ball2[x].intersection(&pool);
                w.remove(x);
                if w.is_empty() {
                    return false;
                }
            }
        }
        let _ = &mut reach;
        true
    }
}

impl<'a> Iterator for DomSetIter<'a> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.vertex_count();
        while let Some((v, depth)) = self.stack.pop() {
            self.chosen.truncate(depth);
            if v >= n {
                continue;
            }
            // Sibling: skip v entirely.
            self.stack.push((v + 1, depth));
            // Child: take v.
            self.chosen.push(v);
            if self.chosen.len() == self.size {
                let d: VertexSet = self.chosen.iter().copied().collect();
                self.chosen.pop();
                if is_dom_set(self.g, &d, self.kind) {
                    return Some(d);
                }
            } else if self.feasible(v + 1) {
                self.stack.push((v + 1, self.chosen.len()));
            } else {
                self.chosen.pop();
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, make_named_graph, path, star, Graph};

    #[test]
    fn validity_examples() {
        let p3 = path(3);
        assert!(!is_dom_set(&p3, &VertexSet::from_slice(&[1]), DomKind::Total));
        assert!(is_dom_set(&p3, &VertexSet::from_slice(&[0, 1]), DomKind::Total));
        let p6 = path(6);
        let d = VertexSet::from_slice(&[1, 3, 5]);
        assert!(is_dom_set(&p6, &d, DomKind::Semitotal));
        assert!(!is_dom_set(&p6, &d, DomKind::Total));
    }

    #[test]
    fn gamma_small_values() {
        let b = SolverBudget::default();
        assert_eq!(gamma(&star(3), DomKind::Total, b).unwrap().value, 2);
        assert_eq!(gamma(&path(4), DomKind::Total, b).unwrap().value, 2);
        assert_eq!(gamma(&cycle(6), DomKind::Total, b).unwrap().value, 4);
        assert_eq!(gamma(&path(6), DomKind::Semitotal, b).unwrap().value, 3);
        assert_eq!(gamma(&cycle(6), DomKind::Semitotal, b).unwrap().value, 3);
        // Oracle agrees on the same examples.
        assert_eq!(gamma_enumerative(&cycle(6), DomKind::Total).unwrap(), 4);
        assert_eq!(gamma_enumerative(&path(6), DomKind::Semitotal).unwrap(), 3);
    }

    #[test]
    fn gamma_rejects_isolated_vertices() {
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        assert_eq!(gamma(&g, DomKind::Total, SolverBudget::default()), Err(SolveError::IsolatedVertex(2)));
        assert_eq!(gamma_enumerative(&g, DomKind::Semitotal), Err(SolveError::IsolatedVertex(2)));
    }

    #[test]
    fn gamma_sums_over_components() {
        let g = make_named_graph("2P4").unwrap();
        assert_eq!(gamma(&g, DomKind::Total, SolverBudget::default()).unwrap().value, 4);
    }

    #[test]
    fn gamma_witness_is_valid() {
        for (n, p, seed) in [(7, 0.3, 1u64), (8, 0.4, 2), (9, 0.5, 3)] {
            let g = Graph::random_connected(n, p, seed).unwrap();
            for kind in [DomKind::Total, DomKind::Semitotal] {
                let r = gamma(&g, kind, SolverBudget::default()).unwrap();
                assert!(is_dom_set(&g, &r.witness, kind));
                assert_eq!(r.witness.len(), r.value);
            }
        }
    }

    #[test]
    fn timeout_is_reported() {
        let g = Graph::random_connected(12, 0.3, 9).unwrap();
        let tiny = SolverBudget { node_limit: 1, wall_limit: Duration::from_secs(60) };
        assert_eq!(gamma(&g, DomKind::Total, tiny), Err(SolveError::Timeout));
    }

    #[test]
    fn enumeration_examples() {
        let p3 = path(3);
        let sets: Vec<_> = enumerate_dom_sets(&p3, DomKind::Total, 2).collect();
        assert_eq!(sets, vec![VertexSet::from_slice(&[0, 1]), VertexSet::from_slice(&[1, 2])]);
        let p4 = path(4);
        let sets: Vec<_> = enumerate_dom_sets(&p4, DomKind::Total, 2).collect();
        assert_eq!(sets, vec![VertexSet::from_slice(&[1, 2])]);
        assert_eq!(enumerate_dom_sets(&p4, DomKind::Total, 1).count(), 0);
    }

    #[test]
    fn enumeration_matches_blind_subsets() {
        // Pruned stream equals the filter of all k-subsets, in the same order.
        for seed in 0..6u64 {
            let n = 7usize;
            let g = Graph::random_connected(n, 0.35, 100 + seed).unwrap();
            for kind in [DomKind::Total, DomKind::Semitotal] {
                for size in 2..=4usize {
                    let fast: Vec<_> = enumerate_dom_sets(&g, kind, size).collect();
                    let mut slow: Vec<VertexSet> = (0u32..1 << n)
                        .filter(|m| m.count_ones() as usize == size)
                        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
                        .filter(|d| is_dom_set(&g, d, kind))
                        .collect();
                    slow.sort();
                    assert_eq!(fast, slow, "kind {kind:?} size {size} seed {seed}");
                }
            }
        }
    }

    #[test]
    fn private_neighborhoods() {
        let p4 = path(4);
        let d = VertexSet::from_slice(&[1, 2]);
        assert_eq!(private_neighborhood(&p4, &d, 1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(private_neighborhood(&p4, &d, 2).unwrap().to_vec(), vec![1, 3]);
        assert_eq!(private_neighborhood(&p4, &d, 0), Err(SolveError::NotInSet(0)));
        // In K_n with D = {0,1}: every vertex outside D sees both members, but
        // each member's sole D-neighbor is the other (open neighborhoods), so
        // the members are each other's private neighbors.
        let k5 = complete(5);
        let d = VertexSet::from_slice(&[0, 1]);
        assert_eq!(private_neighborhood(&k5, &d, 0).unwrap().to_vec(), vec![1]);
        assert_eq!(private_neighborhood(&k5, &d, 1).unwrap().to_vec(), vec![0]);
        let s = star(4);
        let d = VertexSet::from_slice(&[0]);
        assert_eq!(private_neighborhood(&s, &d, 0).unwrap().to_vec(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn witness_sets() {
        let p6 = path(6);
        let d = VertexSet::from_slice(&[1, 3, 5]);
        assert_eq!(witnesses(&p6, &d, 1).unwrap().to_vec(), vec![3]);
        let p4 = path(4);
        let d = VertexSet::from_slice(&[0, 1]);
        assert_eq!(witnesses(&p4, &d, 0).unwrap().to_vec(), vec![1]);
        let d = VertexSet::from_slice(&[0]);
        assert!(witnesses(&p4, &d, 0).unwrap().is_empty());
    }

    #[test]
    fn bb_matches_enumeration_on_random_corpus() {
        for seed in 0..30u64 {
            let n = 5 + (seed % 5) as usize;
            let g = Graph::random_connected(n, 0.4, 500 + seed).unwrap();
            for kind in [DomKind::Total, DomKind::Semitotal] {
                let fast = gamma(&g, kind, SolverBudget::default()).unwrap().value;
                let slow = gamma_enumerative(&g, kind).unwrap();
                assert_eq!(fast, slow, "seed {seed} kind {kind:?} on {g:?}");
            }
        }
    }

    #[test]
    fn semitotal_never_exceeds_total() {
        for seed in 0..20u64 {
            let g = Graph::random_connected(7, 0.35, 900 + seed).unwrap();
            let b = SolverBudget::default();
            let t = gamma(&g, DomKind::Total, b).unwrap().value;
            let s = gamma(&g, DomKind::Semitotal, b).unwrap().value;
            assert!(t >= s && s >= 2);
        }
    }
}

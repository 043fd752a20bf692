//! Induced-subgraph search and the tractability classification of
//! 2-Edge-Contraction by forbidden pattern: polynomial families are
//! P5 + t*K1 and P4 + t*P3 for the total parameter, P5 + t*K1 and
//! P3 + t*P2 for the semitotal one; everything else is hard. The same
//! split holds for the 1-contraction decision problem.

use crate::bits::VertexSet;
use crate::graph::{cycle, disjoint_union, path, Graph, GraphError};

pub const MAX_PATTERN_VERTICES: usize = 12;

/// A forbidden induced pattern. Both edges and non-edges of the pattern
/// must be matched exactly.
#[derive(Debug, Clone)]
pub struct HDescriptor {
    g: Graph,
}

impl HDescriptor {
    pub fn new(g: Graph) -> Result<HDescriptor, GraphError> {
        if g.vertex_count() > MAX_PATTERN_VERTICES {
            return Err(GraphError::CapacityExceeded(g.vertex_count()));
        }
        Ok(HDescriptor { g })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn parse(spec: &str) -> Result<HDescriptor, GraphError> {
        HDescriptor::new(crate::graph::make_named_graph(spec)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Tractability {
    PolynomialTime,
    Hard,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DichotomyVerdict {
    pub tractability: Tractability,
    /// Which clause fired: the family containing H, or "outside both families".
    pub clause: &'static str,
}

/// Deterministic first embedding of H into G as an induced subgraph, as a
/// map from H-vertex to G-vertex, or None. H's vertices are matched in an
/// order that keeps each non-root vertex adjacent to an already-matched
/// one, so its candidates come from one neighborhood rather than all of G.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let nh = h.vertex_count();
    let ng = g.vertex_count();
    if nh > ng {
        return None;
    }
    if nh == 0 {
        return Some(Vec::new());
    }
    let order = matching_order(h);
    // anchor[i]: index into `order` of an earlier H-neighbor of order[i], if any.
    let mut pos_of = vec![0usize; nh];
    for (i, &hv) in order.iter().enumerate() {
        pos_of[hv] = i;
    }
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &hv)| h.neighbors(hv).iter().map(|u| pos_of[u]).filter(|&p| p < i).min())
        .collect();
    let mut image = vec![usize::MAX; nh];
    let mut used = VertexSet::EMPTY;
    if extend(g, h, &order, &anchor, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn matching_order(h: &Graph) -> Vec<usize> {
    // Component by component, breadth-first from the smallest unvisited
    // vertex: every later vertex sees a neighbor among the earlier ones.
    let mut order = Vec::with_capacity(h.vertex_count());
    let mut visited = VertexSet::EMPTY;
    for root in 0..h.vertex_count() {
        if visited.contains(root) {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([root]);
        visited.insert(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in h.neighbors(v).iter() {
                if !visited.contains(u) {
                    visited.insert(u);
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let hdeg = h.degree(hv);
    let candidates: Vec<usize> = match anchor[depth] {
        Some(p) => g.neighbors(image[order[p]]).iter().collect(),
        None => (0..g.vertex_count()).collect(),
    };
    'cand: for gv in candidates {
        if used.contains(gv) || g.degree(gv) < hdeg {
            continue;
        }
        for earlier in &order[..depth] {
            let want = h.has_edge(hv, *earlier);
            if g.has_edge(gv, image[*earlier]) != want {
                continue 'cand;
            }
        }
        image[hv] = gv;
        used.insert(gv);
        if extend(g, h, order, anchor, depth + 1, image, used) {
            return true;
        }
        used.remove(gv);
        image[hv] = usize::MAX;
    }
    false
}

pub fn is_h_free(g: &Graph, h: &Graph) -> bool {
    contains_induced(g, h).is_none()
}

/// Does g contain k pairwise nonadjacent induced copies of the connected
/// pattern `part`? Equivalent to asking for the disjoint union of k copies
/// as an induced subgraph, but built for large clique-heavy hosts: each
/// placed copy strips its closed neighborhood before the next is sought,
/// and each level confines its copy to the graph left after deleting the
/// currently largest cliques of a fixed partition, which collapses the
/// cross-component branching the generic matcher pays.
pub fn contains_k_disjoint_induced(g: &Graph, part: &Graph, k: usize) -> bool {
    assert!(part.is_connected() && part.vertex_count() >= 1, "part must be connected");
    if k == 0 {
        return true;
    }
    let order = matching_order(part);
    let mut pos_of = vec![0usize; part.vertex_count()];
    for (i, &hv) in order.iter().enumerate() {
        pos_of[hv] = i;
    }
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &hv)| part.neighbors(hv).iter().map(|u| pos_of[u]).filter(|&p| p < i).min())
        .collect();
    let cliques = greedy_clique_partition(g);
    let mut image = vec![usize::MAX; part.vertex_count()];
    place_copies(g, part, &order, &anchor, &cliques, k, &g.vertex_set(), &mut image)
}

fn greedy_clique_partition(g: &Graph) -> Vec<VertexSet> {
    let mut remaining = g.vertex_set();
    let mut cliques = Vec::new();
    while let Some(v) = remaining.first() {
        let mut q = VertexSet::singleton(v);
        let mut cand = g.neighbors(v).intersection(&remaining);
        while let Some(u) = cand.first() {
            q.insert(u);
            cand = cand.intersection(&g.neighbors(u));
        }
        remaining = remaining.difference(&q);
        cliques.push(q);
    }
    cliques
}

fn place_copies(
    g: &Graph,
    part: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    cliques: &[VertexSet],
    copies_left: usize,
    allowed: &VertexSet,
    image: &mut [usize],
) -> bool {
    if allowed.len() < copies_left * part.vertex_count() {
        return false;
    }
    // A clique meets at most one of the pairwise nonadjacent copies, so
    // among copies_left copies at least one avoids the copies_left - 1
    // largest surviving cliques. Enumerate that copy at this level; the
    // others come from the recursion on the stripped vertex set.
    let mut sizes: Vec<(usize, usize)> = cliques
        .iter()
        .enumerate()
        .map(|(i, q)| (q.intersection(allowed).len(), i))
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut narrowed = *allowed;
    for &(sz, i) in sizes.iter().take(copies_left - 1) {
        if sz > 0 {
            narrowed = narrowed.difference(&cliques[i]);
        }
    }
    embed_within(g, part, order, anchor, 0, &narrowed, image, &mut |g, image| {
        if copies_left == 1 {
            return true;
        }
        let mut blocked = VertexSet::EMPTY;
        for &gv in image.iter() {
            blocked = blocked.union(&g.closed_neighborhood(gv));
        }
        let mut fresh = vec![usize::MAX; image.len()];
        place_copies(
            g,
            part,
            order,
            anchor,
            cliques,
            copies_left - 1,
            &allowed.difference(&blocked),
            &mut fresh,
        )
    })
}

fn embed_within(
    g: &Graph,
    part: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    allowed: &VertexSet,
    image: &mut [usize],
    found: &mut dyn FnMut(&Graph, &[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return found(g, image);
    }
    let hv = order[depth];
    let candidates = match anchor[depth] {
        Some(p) => g.neighbors(image[order[p]]).intersection(allowed),
        None => *allowed,
    };
    'cand: for gv in candidates.iter() {
        for earlier in &order[..depth] {
            if image[*earlier] == gv {
                continue 'cand;
            }
            let want = part.has_edge(hv, *earlier);
            if g.has_edge(gv, image[*earlier]) != want {
                continue 'cand;
            }
        }
        image[hv] = gv;
        if embed_within(g, part, order, anchor, depth + 1, allowed, image, found) {
            return true;
        }
        image[hv] = usize::MAX;
    }
    false
}

/// First induced cycle of length >= min_len, shortest first. Used to check
/// the gadget class claims that forbid all long holes.
pub fn find_induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    for len in min_len..=g.vertex_count() {
        if let Some(emb) = contains_induced(g, &cycle(len)) {
            return Some(emb);
        }
    }
    None
}

fn k1s(t: usize) -> Graph {
    Graph::build(t, &[]).expect("edgeless graph")
}

fn copies(part: &Graph, t: usize) -> Vec<Graph> {
    std::iter::repeat(part).cloned().take(t).collect()
}

/// The saturating family member: base + t copies of `unit` with t = |V(H)|.
/// H fits base + t'*unit for some t' iff it fits this one, because an
/// embedding can never occupy more than |V(H)| of the copies.
fn family_member(base: &Graph, unit: &Graph, t: usize) -> Graph {
    let mut parts = vec![base.clone()];
    parts.extend(copies(unit, t));
    disjoint_union(&parts).expect("small family graphs stay within capacity")
}

/// Classification of "is 1- or 2-Edge-Contraction of the domination number
/// decidable in polynomial time on H-free graphs". The answer depends only
/// on the kind, not on k (both k = 1 and k = 2 split the same way).
pub fn classify_dichotomy(h: &HDescriptor, kind: crate::domination::DomKind, k: usize) -> DichotomyVerdict {
    assert!(k == 1 || k == 2, "only the 1- and 2-contraction problems are classified");
    let hg = h.graph();
    let t = hg.vertex_count();
    let p5_tk1 = family_member(&path(5), &k1s(1), t);
    if contains_induced(&p5_tk1, hg).is_some() {
        return DichotomyVerdict { tractability: Tractability::PolynomialTime, clause: "P5+tK1" };
    }
    let (base, unit, clause) = match kind {
        crate::domination::DomKind::Total => (path(4), path(3), "P4+tP3"),
        crate::domination::DomKind::Semitotal => (path(3), path(2), "P3+tP2"),
    };
    let second = family_member(&base, &unit, t);
    if contains_induced(&second, hg).is_some() {
        return DichotomyVerdict { tractability: Tractability::PolynomialTime, clause };
    }
    DichotomyVerdict { tractability: Tractability::Hard, clause: "outside both families" }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::DomKind;
    use crate::graph::{complete, make_named_graph, paw, star};

    fn check_embedding(g: &Graph, h: &Graph, emb: &[usize]) {
        assert_eq!(emb.len(), h.vertex_count());
        let mut seen = std::collections::HashSet::new();
        for &gv in emb {
            assert!(gv < g.vertex_count());
            assert!(seen.insert(gv), "not injective: {emb:?}");
        }
        for a in 0..h.vertex_count() {
            for b in a + 1..h.vertex_count() {
                assert_eq!(h.has_edge(a, b), g.has_edge(emb[a], emb[b]), "pair {a},{b}");
            }
        }
    }

    #[test]
    fn claws_paths_and_paws() {
        assert!(contains_induced(&cycle(5), &star(3)).is_none());
        let emb = contains_induced(&path(6), &path(5)).unwrap();
        check_embedding(&path(6), &path(5), &emb);
        assert_eq!(emb, vec![0, 1, 2, 3, 4]);
        let emb = contains_induced(&paw(), &path(3)).unwrap();
        assert_eq!(emb, vec![0, 2, 3]);
    }

    #[test]
    fn agrees_with_blind_subset_scan() {
        let patterns: Vec<Graph> =
            ["P3", "P4", "K1,3", "C4", "K3", "2P2"].iter().map(|s| make_named_graph(s).unwrap()).collect();
        for seed in 0..12u64 {
            let g = Graph::random_connected(8, 0.35, 4400 + seed).unwrap();
            for h in &patterns {
                let fast = contains_induced(&g, h);
                let slow = blind_scan(&g, h);
                assert_eq!(fast.is_some(), slow, "pattern {h:?} on seed {seed}");
                if let Some(emb) = fast {
                    check_embedding(&g, h, &emb);
                }
            }
        }
    }

    fn blind_scan(g: &Graph, h: &Graph) -> bool {
        let n = g.vertex_count();
        let k = h.vertex_count();
        let mut picks = vec![0usize; k];
        fn rec(g: &Graph, h: &Graph, picks: &mut Vec<usize>, depth: usize, n: usize) -> bool {
            if depth == h.vertex_count() {
                // picks is an ordered selection; test it as a candidate image
                let mut distinct = std::collections::HashSet::new();
                if !picks.iter().all(|p| distinct.insert(*p)) {
                    return false;
                }
                for a in 0..h.vertex_count() {
                    for b in a + 1..h.vertex_count() {
                        if h.has_edge(a, b) != g.has_edge(picks[a], picks[b]) {
                            return false;
                        }
                    }
                }
                return true;
            }
            for v in 0..n {
                picks[depth] = v;
                if rec(g, h, picks, depth + 1, n) {
                    return true;
                }
            }
            false
        }
        rec(g, h, &mut picks, 0, n)
    }

    #[test]
    fn long_hole_finder() {
        assert!(find_induced_cycle_at_least(&cycle(6), 5).is_some());
        assert!(find_induced_cycle_at_least(&complete(6), 4).is_none());
        assert_eq!(find_induced_cycle_at_least(&cycle(4), 5), None);
    }

    #[test]
    fn dichotomy_known_rows() {
        let rows: [(&str, Tractability, Tractability); 10] = [
            ("P6", Tractability::Hard, Tractability::Hard),
            ("2P3", Tractability::PolynomialTime, Tractability::Hard),
            ("P4 + P2", Tractability::PolynomialTime, Tractability::Hard),
            ("K1,3", Tractability::Hard, Tractability::Hard),
            ("C3", Tractability::Hard, Tractability::Hard),
            ("C6", Tractability::Hard, Tractability::Hard),
            ("P5 + 2K1", Tractability::PolynomialTime, Tractability::PolynomialTime),
            ("P4 + 2P3", Tractability::PolynomialTime, Tractability::Hard),
            ("P3 + 3P2", Tractability::PolynomialTime, Tractability::PolynomialTime),
            ("P5", Tractability::PolynomialTime, Tractability::PolynomialTime),
        ];
        for (spec, total, semi) in rows {
            let h = HDescriptor::parse(spec).unwrap();
            for k in [1, 2] {
                assert_eq!(classify_dichotomy(&h, DomKind::Total, k).tractability, total, "{spec} total");
                assert_eq!(
                    classify_dichotomy(&h, DomKind::Semitotal, k).tractability,
                    semi,
                    "{spec} semitotal"
                );
            }
        }
        let p4p3 = HDescriptor::parse("P4 + P3").unwrap();
        assert_eq!(classify_dichotomy(&p4p3, DomKind::Total, 2).clause, "P4+tP3");
    }

    #[test]
    fn disjoint_copies_matches_generic_matcher() {
        // known positives and negatives first
        let three_p4 = make_named_graph("3P4").unwrap();
        assert!(contains_k_disjoint_induced(&three_p4, &path(4), 3));
        assert!(!contains_k_disjoint_induced(&three_p4, &path(4), 4));
        assert!(!contains_k_disjoint_induced(&path(8), &path(4), 2));
        assert!(contains_k_disjoint_induced(&path(9), &path(4), 2));
        assert!(contains_k_disjoint_induced(&complete(5), &path(1), 1));
        assert!(!contains_k_disjoint_induced(&complete(5), &path(1), 2));

        for seed in 0..40u64 {
            let n = 6 + (seed as usize) % 5;
            let g = Graph::random_connected(n, 0.3, 7100 + seed).unwrap();
            for (part, k) in [(path(3), 2), (path(3), 3), (path(4), 2), (path(2), 3)] {
                let pattern = disjoint_union(&vec![part.clone(); k]).unwrap();
                assert_eq!(
                    contains_k_disjoint_induced(&g, &part, k),
                    contains_induced(&g, &pattern).is_some(),
                    "part {part:?} x{k} on seed {seed}"
                );
            }
        }
    }
}

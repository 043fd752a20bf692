//! Structural witnesses inside a vertex set: P3/P4/K1,3/2P3 patterns,
//! friendly triples, and the seven O-configurations.
//!
//! All shapes are "not necessarily induced": solid pairs must be edges,
//! dashed pairs must be at distance exactly two in the host graph (see
//! WIRING.md), and no edge absence is ever required. Every detector returns
//! the lexicographically first witness tuple so fixtures stay stable, and
//! every witness re-validates through the check_* functions.

use crate::bits::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Pattern {
    P3,
    P4,
    K13,
    TwoP3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum STConfig {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
}

pub const ALL_ST_CONFIGS: [STConfig; 7] = [
    STConfig::O1,
    STConfig::O2,
    STConfig::O3,
    STConfig::O4,
    STConfig::O5,
    STConfig::O6,
    STConfig::O7,
];

/// Ordered vertex tuple realizing a pattern or configuration.
pub type PatternWitness = Vec<usize>;

// ----- path/star patterns -----

/// First witness of `p` inside D, in tuple-lexicographic order.
pub fn find_pattern(g: &Graph, d: &VertexSet, p: Pattern) -> Option<PatternWitness> {
    match p {
        Pattern::P3 => find_p3(g, d, &VertexSet::EMPTY),
        Pattern::P4 => find_p4(g, d),
        Pattern::K13 => find_k13(g, d),
        Pattern::TwoP3 => find_two_p3(g, d),
    }
}

pub fn check_pattern(g: &Graph, d: &VertexSet, p: Pattern, w: &[usize]) -> bool {
    let all_in = |w: &[usize]| w.iter().all(|&v| v < g.vertex_count() && d.contains(v));
    let distinct = |w: &[usize]| {
        let s: VertexSet = w.iter().copied().collect();
        s.len() == w.len()
    };
    match p {
        Pattern::P3 => {
            w.len() == 3 && all_in(w) && distinct(w) && g.has_edge(w[0], w[1]) && g.has_edge(w[1], w[2])
        }
        Pattern::P4 => {
            w.len() == 4
                && all_in(w)
                && distinct(w)
                && g.has_edge(w[0], w[1])
                && g.has_edge(w[1], w[2])
                && g.has_edge(w[2], w[3])
        }
        Pattern::K13 => {
            w.len() == 4
                && all_in(w)
                && distinct(w)
                && w[1..].iter().all(|&l| g.has_edge(w[0], l))
        }
        Pattern::TwoP3 => {
            w.len() == 6
                && all_in(w)
                && distinct(w)
                && g.has_edge(w[0], w[1])
                && g.has_edge(w[1], w[2])
                && g.has_edge(w[3], w[4])
                && g.has_edge(w[4], w[5])
        }
    }
}

/// P3 inside D avoiding `banned`. Shared by the 2P3 and O-searches.
fn find_p3(g: &Graph, d: &VertexSet, banned: &VertexSet) -> Option<PatternWitness> {
    let pool = d.difference(banned);
    for a in pool.iter() {
        for b in g.neighbors(a).intersection(&pool).iter() {
            let mut cs = g.neighbors(b).intersection(&pool);
            cs.remove(a);
            if let Some(c) = cs.first() {
                return Some(vec![a, b, c]);
            }
        }
    }
    None
}

fn find_p4(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for a in d.iter() {
        for b in g.neighbors(a).intersection(d).iter() {
            let mut cs = g.neighbors(b).intersection(d);
            cs.remove(a);
            for c in cs.iter() {
                let mut ds = g.neighbors(c).intersection(d);
                ds.remove(a);
                ds.remove(b);
                if let Some(x) = ds.first() {
                    return Some(vec![a, b, c, x]);
                }
            }
        }
    }
    None
}

fn find_k13(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for c in d.iter() {
        let legs = g.neighbors(c).intersection(d);
        if legs.len() >= 3 {
            let mut it = legs.iter();
            let l1 = it.next().unwrap();
            let l2 = it.next().unwrap();
            let l3 = it.next().unwrap();
            return Some(vec![c, l1, l2, l3]);
        }
    }
    None
}

fn find_two_p3(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    // The lex-first 6-tuple starts with the lex-first P3 that has any
    // disjoint partner, paired with its lex-first partner.
    let mut first = all_p3s(g, d).into_iter();
    first.find_map(|t1| {
        let used: VertexSet = t1.iter().copied().collect();
        find_p3(g, d, &used).map(|t2| {
            let mut w = t1.clone();
            w.extend(t2);
            w
        })
    })
}

/// Every P3 tuple in D, lexicographic.
fn all_p3s(g: &Graph, d: &VertexSet) -> Vec<PatternWitness> {
    let mut out = Vec::new();
    for a in d.iter() {
        for b in g.neighbors(a).intersection(d).iter() {
            let mut cs = g.neighbors(b).intersection(d);
            cs.remove(a);
            for c in cs.iter() {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

// ----- friendly triples -----

/// x,y,z in D, distinct, xy an edge, z within distance 2 of {x,y}.
/// Distances are in G, not in G[D]; the edge's endpoints are treated
/// symmetrically (the definitional text names only y, but the labeling of an
/// edge is arbitrary, so the two readings are existentially equivalent).
pub fn find_friendly_triple(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for x in d.iter() {
        for y in g.neighbors(x).intersection(d).iter() {
            if y == x {
                continue;
            }
            let mut zs = g.ball2(x).union(&g.ball2(y)).intersection(d);
            zs.remove(x);
            zs.remove(y);
            if let Some(z) = zs.first() {
                return Some(vec![x, y, z]);
            }
        }
    }
    None
}

pub fn check_friendly_triple(g: &Graph, d: &VertexSet, w: &[usize]) -> bool {
    if w.len() != 3 {
        return false;
    }
    let (x, y, z) = (w[0], w[1], w[2]);
    let s: VertexSet = w.iter().copied().collect();
    s.len() == 3
        && w.iter().all(|&v| d.contains(v))
        && g.has_edge(x, y)
        && (g.ball2(x).contains(z) || g.ball2(y).contains(z))
}

// ----- O-configurations -----

/// Search one configuration, or all of O1..O7 in order.
pub fn find_st_config(
    g: &Graph,
    d: &VertexSet,
    which: Option<STConfig>,
) -> Option<(STConfig, PatternWitness)> {
    let try_one = |c: STConfig| -> Option<(STConfig, PatternWitness)> {
        let w = match c {
            STConfig::O1 => find_two_p3(g, d),
            STConfig::O2 => find_o2(g, d),
            STConfig::O3 => find_o3(g, d),
            STConfig::O4 => find_o4(g, d),
            STConfig::O5 => find_k13(g, d),
            STConfig::O6 => find_o6(g, d),
            STConfig::O7 => find_o7(g, d),
        };
        w.map(|w| (c, w))
    };
    match which {
        Some(c) => try_one(c),
        None => ALL_ST_CONFIGS.iter().copied().find_map(|c| try_one(c)),
    }
}

pub fn check_st_config(g: &Graph, d: &VertexSet, c: STConfig, w: &[usize]) -> bool {
    let all_in = w.iter().all(|&v| v < g.vertex_count() && d.contains(v));
    if !all_in {
        return false;
    }
    let distinct = |ix: &[usize]| -> bool {
        let s: VertexSet = ix.iter().map(|&i| w[i]).collect();
        s.len() == ix.len()
    };
    let edge = |i: usize, j: usize| g.has_edge(w[i], w[j]);
    let dash = |i: usize, j: usize| g.distance(w[i], w[j]) == Some(2);
    match c {
        STConfig::O1 => {
            w.len() == 6 && distinct(&[0, 1, 2, 3, 4, 5]) && edge(0, 1) && edge(1, 2) && edge(3, 4) && edge(4, 5)
        }
        STConfig::O2 => {
            w.len() == 6 && distinct(&[0, 1, 2, 3, 4, 5]) && edge(0, 1) && dash(1, 2) && edge(3, 4) && edge(4, 5)
        }
        STConfig::O3 => {
            // Positions 3 and 6 (indices 2 and 5) may coincide.
            w.len() == 6
                && distinct(&[0, 1, 3, 4])
                && w[2] != w[0]
                && w[2] != w[1]
                && w[2] != w[3]
                && w[2] != w[4]
                && w[5] != w[0]
                && w[5] != w[1]
                && w[5] != w[3]
                && w[5] != w[4]
                && edge(0, 1)
                && dash(1, 2)
                && edge(3, 4)
                && dash(4, 5)
        }
        STConfig::O4 => w.len() == 4 && distinct(&[0, 1, 2, 3]) && edge(0, 1) && edge(1, 2) && dash(2, 3),
        STConfig::O5 => {
            w.len() == 4 && distinct(&[0, 1, 2, 3]) && edge(0, 1) && edge(0, 2) && edge(0, 3)
        }
        STConfig::O6 => w.len() == 4 && distinct(&[0, 1, 2, 3]) && edge(1, 0) && edge(1, 3) && dash(1, 2),
        STConfig::O7 => w.len() == 4 && distinct(&[0, 1, 2, 3]) && edge(0, 1) && dash(1, 2) && edge(2, 3),
    }
}

/// O2: edge (1,2), vertex 3 at distance two from 2, disjoint P3 (4,5,6).
fn find_o2(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for v1 in d.iter() {
        for v2 in g.neighbors(v1).intersection(d).iter() {
            for v3 in g.dist2_exact(v2).intersection(d).iter() {
                if v3 == v1 {
                    continue;
                }
                let used = VertexSet::from_slice(&[v1, v2, v3]);
                if let Some(t) = find_p3(g, d, &used) {
                    return Some(vec![v1, v2, v3, t[0], t[1], t[2]]);
                }
            }
        }
    }
    None
}

/// O3: edges (1,2) and (4,5); 3 at distance two from 2, 6 at distance two
/// from 5; 3 and 6 may be the same vertex.
fn find_o3(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for v1 in d.iter() {
        for v2 in g.neighbors(v1).intersection(d).iter() {
            for v3 in g.dist2_exact(v2).intersection(d).iter() {
                if v3 == v1 {
                    continue;
                }
                let e1 = VertexSet::from_slice(&[v1, v2]);
                for v4 in d.iter() {
                    if e1.contains(v4) || v4 == v3 {
                        continue;
                    }
                    for v5 in g.neighbors(v4).intersection(d).iter() {
                        if e1.contains(v5) || v5 == v3 {
                            continue;
                        }
                        for v6 in g.dist2_exact(v5).intersection(d).iter() {
                            if e1.contains(v6) || v6 == v4 {
                                continue;
                            }
                            return Some(vec![v1, v2, v3, v4, v5, v6]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// O4: path (1,2,3) plus vertex 4 at distance two from 3.
fn find_o4(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for v1 in d.iter() {
        for v2 in g.neighbors(v1).intersection(d).iter() {
            let mut v3s = g.neighbors(v2).intersection(d);
            v3s.remove(v1);
            for v3 in v3s.iter() {
                let mut v4s = g.dist2_exact(v3).intersection(d);
                v4s.remove(v1);
                v4s.remove(v2);
                if let Some(v4) = v4s.first() {
                    return Some(vec![v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

/// O6: edges (2,1) and (2,4) plus vertex 3 at distance two from the center 2.
fn find_o6(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for v1 in d.iter() {
        for v2 in g.neighbors(v1).intersection(d).iter() {
            for v3 in g.dist2_exact(v2).intersection(d).iter() {
                if v3 == v1 {
                    continue;
                }
                let mut v4s = g.neighbors(v2).intersection(d);
                v4s.remove(v1);
                v4s.remove(v3);
                if let Some(v4) = v4s.first() {
                    return Some(vec![v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

/// O7: edges (1,2) and (3,4) with 2 and 3 at mutual distance two.
fn find_o7(g: &Graph, d: &VertexSet) -> Option<PatternWitness> {
    for v1 in d.iter() {
        for v2 in g.neighbors(v1).intersection(d).iter() {
            for v3 in g.dist2_exact(v2).intersection(d).iter() {
                if v3 == v1 {
                    continue;
                }
                let mut v4s = g.neighbors(v3).intersection(d);
                v4s.remove(v1);
                v4s.remove(v2);
                if let Some(v4) = v4s.first() {
                    return Some(vec![v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

//! Moving total dominating sets across a 4-subdivision: up from G to H
//! (adding exactly two path vertices per original edge) and down from H
//! to G (shedding at least two per edge). Together these witness
//! gamma_t(H) = gamma_t(G) + 2|E(G)|.

use crate::bits::VertexSet;
use crate::domination::{is_dom_set, DomKind};
use crate::graph::{Graph, SubdivisionMap};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("input set is not a total dominating set")]
    NotDominating,
    #[error("graph pair does not look like a 4-subdivision of the base graph")]
    WrongShape,
}

fn check_shape(g: &Graph, h: &Graph, map: &SubdivisionMap) -> Result<(), TransformError> {
    let ok = h.vertex_count() == g.vertex_count() + 4 * g.edge_count()
        && map.entries.len() == g.edge_count()
        && h.edge_count() == 5 * g.edge_count();
    if ok {
        Ok(())
    } else {
        Err(TransformError::WrongShape)
    }
}

/// Lift a TD set of G to one of H: keep D, then per edge uv add the far
/// pair {e3,e4} when only u is in D, {e1,e2} when only v is, {e1,e4} when
/// both are, {e2,e3} when neither is. Result has size |D| + 2|E(G)|.
pub fn td_transform_up(
    g: &Graph,
    h: &Graph,
    map: &SubdivisionMap,
    d: &VertexSet,
) -> Result<VertexSet, TransformError> {
    check_shape(g, h, map)?;
    if !is_dom_set(g, d, DomKind::Total) {
        return Err(TransformError::NotDominating);
    }
    let mut out = *d;
    for (u, v) in g.edges() {
        let [e1, e2, e3, e4] = map.path_of(u, v).ok_or(TransformError::WrongShape)?;
        let pair = match (d.contains(u), d.contains(v)) {
            (false, false) => [e2, e3],
            (true, false) => [e3, e4],
            (false, true) => [e1, e2],
            (true, true) => [e1, e4],
        };
        out.insert(pair[0]);
        out.insert(pair[1]);
    }
    assert_eq!(out.len(), d.len() + 2 * g.edge_count(), "two new vertices per edge");
    assert!(is_dom_set(h, &out, DomKind::Total), "lifted set must dominate H totally");
    Ok(out)
}

/// Project a TD set of H back to G, un-subdividing one edge at a time.
/// Per edge, the four path vertices leave the set and an endpoint may
/// enter, chosen by which of e1, e4 were present; each step sheds at
/// least two vertices, so the result has size at most |D| - 2|E(G)|.
pub fn td_transform_down(
    g: &Graph,
    h: &Graph,
    map: &SubdivisionMap,
    d: &VertexSet,
) -> Result<VertexSet, TransformError> {
    check_shape(g, h, map)?;
    if !is_dom_set(h, d, DomKind::Total) {
        return Err(TransformError::NotDominating);
    }
    let mut cur = *d;
    for (u, v) in g.edges() {
        let [e1, e2, e3, e4] = map.path_of(u, v).ok_or(TransformError::WrongShape)?;
        // Membership of interior vertices never changes before their own
        // edge is processed, and endpoints only ever enter the set, so the
        // forced-membership facts below stay valid along the iteration.
        let case = (cur.contains(e1), cur.contains(e4));
        for p in [e1, e2, e3, e4] {
            cur.remove(p);
        }
        match case {
            (true, true) => {
                if !cur.contains(u) {
                    assert!(d.contains(e2), "e1 has no dominator besides e2 here");
                }
                if !cur.contains(v) {
                    assert!(d.contains(e3), "e4 has no dominator besides e3 here");
                }
                cur.insert(u);
                cur.insert(v);
            }
            (true, false) => {
                assert!(d.contains(e2), "e3 has no dominator besides e2 here");
                if !cur.contains(v) {
                    assert!(d.contains(e3), "e4 has no dominator besides e3 here");
                    cur.insert(v);
                }
            }
            (false, true) => {
                assert!(d.contains(e3), "e2 has no dominator besides e3 here");
                if !cur.contains(u) {
                    assert!(d.contains(e2), "e1 has no dominator besides e2 here");
                    cur.insert(u);
                }
            }
            (false, false) => {
                assert!(d.contains(e2) && d.contains(e3), "interior must dominate itself");
            }
        }
    }
    for (u, v) in g.edges() {
        let [e1, _, _, e4] = map.path_of(u, v).expect("checked above");
        if d.contains(e1) {
            assert!(cur.contains(v), "e1 in D forces v into the projection");
        }
        if d.contains(e4) {
            assert!(cur.contains(u), "e4 in D forces u into the projection");
        }
    }
    assert!(d.len() >= 2 * g.edge_count() && cur.len() <= d.len() - 2 * g.edge_count());
    assert!(is_dom_set(g, &cur, DomKind::Total), "projection must dominate G totally");
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{gamma, gamma_enumerative, SolverBudget};
    use crate::graph::complete;

    #[test]
    fn k2_lifts_to_p6_endpoints_and_tips() {
        let g = complete(2);
        let (h, map) = g.four_subdivide().unwrap();
        let d: VertexSet = [0usize, 1].into_iter().collect();
        let up = td_transform_up(&g, &h, &map, &d).unwrap();
        let [e1, _, _, e4] = map.path_of(0, 1).unwrap();
        let expect: VertexSet = [0, 1, e1, e4].into_iter().collect();
        assert_eq!(up, expect);
    }

    #[test]
    fn k3_lifts_to_a_minimum_set_of_c15() {
        let g = complete(3);
        let (h, map) = g.four_subdivide().unwrap();
        let d: VertexSet = [0usize, 1].into_iter().collect();
        let up = td_transform_up(&g, &h, &map, &d).unwrap();
        assert_eq!(up.len(), 8);
        let gh = gamma_enumerative(&h, DomKind::Total).unwrap();
        assert_eq!(gh, 8);
    }

    #[test]
    fn every_td_set_of_p6_projects_onto_k2() {
        let g = complete(2);
        let (h, map) = g.four_subdivide().unwrap();
        for mask in 0u32..1 << 6 {
            let d: VertexSet = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            if !is_dom_set(&h, &d, DomKind::Total) {
                assert_eq!(
                    td_transform_down(&g, &h, &map, &d),
                    Err(TransformError::NotDominating)
                );
                continue;
            }
            let down = td_transform_down(&g, &h, &map, &d).unwrap();
            assert!(down.len() <= d.len() - 2);
            assert!(is_dom_set(&g, &down, DomKind::Total));
        }
    }

    #[test]
    fn round_trip_never_grows() {
        for seed in 0..10u64 {
            let g = match Graph::random_connected(5, 0.5, 6100 + seed) {
                Ok(g) => g,
                Err(_) => continue,
            };
            if g.edge_count() > 8 {
                continue;
            }
            let (h, map) = g.four_subdivide().unwrap();
            let d0 = gamma(&g, DomKind::Total, SolverBudget::default()).unwrap().witness;
            let up = td_transform_up(&g, &h, &map, &d0).unwrap();
            let down = td_transform_down(&g, &h, &map, &up).unwrap();
            assert!(down.len() <= d0.len());
            assert!(is_dom_set(&g, &down, DomKind::Total));
        }
    }
}

//! Total domination reductions.

use crate::bits::VertexSet;
use crate::formula::{Formula, Lit};
use crate::graph::Graph;

use super::{
    clause_name, clause_vars, lv, occurrences, Augmented, AugmentedShape, Builder, GadgetError,
    LocalClaim,
};

fn lit_label(f: &Formula, l: Lit) -> String {
    let name = f.var_name(l.var);
    if l.positive {
        name
    } else {
        format!("{name}_bar")
    }
}

// ----- paw-per-variable construction, tier 2 -----

// Variable x becomes a paw: triangle on the two literal vertices and u_x,
// plus a pendant v_x on u_x. Clause vertices form a clique, each adjacent to
// the vertices of its literals.
pub(super) fn build_td2p4(f: &Formula) -> Result<Graph, GadgetError> {
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        let name = f.var_name(x);
        let pos = b.vx(name.clone());
        let neg = b.vx(format!("{name}_bar"));
        let u = b.vx(format!("u_{name}"));
        let v = b.vx(format!("v_{name}"));
        b.clique(&[pos, neg, u]);
        b.edge(u, v);
    }
    let mut cl = Vec::new();
    for j in 0..f.num_clauses() {
        cl.push(b.vx(clause_name(j)));
    }
    b.clique(&cl);
    for (j, c) in f.clauses().iter().enumerate() {
        for l in c {
            let lit = b.get(&lit_label(f, *l));
            b.edge(cl[j], lit);
        }
    }
    b.finish()
}

pub(super) fn certificate_td2p4(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        let name = f.var_name(x);
        d.insert(lv(g, &format!("u_{name}")));
        let lit = if a[x] { name } else { format!("{name}_bar") };
        d.insert(lv(g, &lit));
    }
    d
}

// Retarget two variable pairs at the literals of one clause and add the
// clause vertex. The clause clique keeps every other clause dominated no
// matter which literals the certificate drops.
pub(super) fn augmented_td2p4(g: &Graph, f: &Formula, a: &[bool]) -> Option<Augmented> {
    let (j, c) = f
        .clauses()
        .iter()
        .enumerate()
        .find(|(_, c)| clause_vars(c).len() >= 2)?;
    let vars = clause_vars(c);
    let picked: Vec<Lit> = vars[..2]
        .iter()
        .map(|&z| *c.iter().find(|l| l.var == z).unwrap())
        .collect();
    let mut set = certificate_td2p4(g, f, a);
    for l in &picked {
        let name = f.var_name(l.var);
        set.remove(lv(g, &name));
        set.remove(lv(g, &format!("{name}_bar")));
        set.insert(lv(g, &lit_label(f, *l)));
    }
    let cv = lv(g, &clause_name(j));
    set.insert(cv);
    let ux = lv(g, &format!("u_{}", f.var_name(picked[0].var)));
    let wx = lv(g, &lit_label(f, picked[0]));
    let wy = lv(g, &lit_label(f, picked[1]));
    Some(Augmented {
        set,
        witness: [ux, wx, cv, wy],
        shape: AugmentedShape::PathFour,
    })
}

// ----- claw-free construction, tier 2 -----

// Variable gadget: a core diamond-ish piece u,v,T,F plus one satellite chain
// per occurrence on each side. The T side hangs a triangle b,c,d behind each
// clique vertex a; the F side mirrors it with g,h,i,j and pendant f.
pub(super) fn build_tdclawk2(f: &Formula) -> Result<Graph, GadgetError> {
    let occ = occurrences(f);
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        let u = b.vx(format!("u_{xn}"));
        let v = b.vx(format!("v_{xn}"));
        let t = b.vx(format!("T_{xn}"));
        let fv = b.vx(format!("F_{xn}"));
        b.edge(u, v);
        b.edge(u, t);
        b.edge(u, fv);
        b.edge(t, fv);
        let mut side_a = Vec::new();
        let mut side_g = Vec::new();
        for &p in &occ[x] {
            let cn = clause_name(p);
            let av = b.vx(format!("a_{xn}^{cn}"));
            let bv = b.vx(format!("b_{xn}^{cn}"));
            let cv = b.vx(format!("c_{xn}^{cn}"));
            let dv = b.vx(format!("d_{xn}^{cn}"));
            let tv = b.vx(format!("t_{xn}^{cn}"));
            b.edge(t, av);
            b.edge(av, bv);
            b.clique(&[bv, cv, dv]);
            b.edge(dv, tv);
            side_a.push(av);
            let gv = b.vx(format!("g_{xn}^{cn}"));
            let hv = b.vx(format!("h_{xn}^{cn}"));
            let iv = b.vx(format!("i_{xn}^{cn}"));
            let jv = b.vx(format!("j_{xn}^{cn}"));
            let fvv = b.vx(format!("f_{xn}^{cn}"));
            b.edge(fv, gv);
            b.edge(gv, hv);
            b.clique(&[hv, iv, jv]);
            b.edge(jv, fvv);
            side_g.push(gv);
        }
        b.clique(&side_a);
        b.clique(&side_g);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let u = b.vx(format!("u_{cn}"));
        let mut side_a = Vec::new();
        for &w in &clause_vars(c) {
            let wn = f.var_name(w);
            let av = b.vx(format!("a_{cn}^{wn}"));
            let bv = b.vx(format!("b_{cn}^{wn}"));
            let cv = b.vx(format!("c_{cn}^{wn}"));
            let dv = b.vx(format!("d_{cn}^{wn}"));
            let tv = b.vx(format!("t_{cn}^{wn}"));
            b.edge(u, av);
            // the triangle sits on a,b,c here, unlike the variable side
            b.clique(&[av, bv, cv]);
            b.edge(cv, dv);
            b.edge(dv, tv);
            side_a.push(av);
        }
        b.clique(&side_a);
        let v = b.vx(format!("v_{cn}"));
        let w = b.vx(format!("w_{cn}"));
        b.edge(v, w);
        let mut side_g = Vec::new();
        for &z in &clause_vars(c) {
            let zn = f.var_name(z);
            let gv = b.vx(format!("g_{cn}^{zn}"));
            let fvv = b.vx(format!("f_{cn}^{zn}"));
            b.edge(v, gv);
            b.edge(gv, fvv);
            side_g.push(gv);
        }
        b.clique(&side_g);
    }
    // tie each occurrence's chains to its clause
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        for &p in &occ[x] {
            let cn = clause_name(p);
            b.edge_l(&format!("t_{xn}^{cn}"), &format!("t_{cn}^{xn}"));
            b.edge_l(&format!("f_{xn}^{cn}"), &format!("f_{cn}^{xn}"));
        }
    }
    b.finish()
}

pub(super) fn certificate_tdclawk2(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let occ = occurrences(f);
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        d.insert(lv(g, &format!("u_{xn}")));
        let side = if a[x] { "T" } else { "F" };
        d.insert(lv(g, &format!("{side}_{xn}")));
        for &p in &occ[x] {
            let cn = clause_name(p);
            let picks: [&str; 4] = if a[x] {
                ["d", "t", "h", "j"]
            } else {
                ["b", "d", "j", "f"]
            };
            for fam in picks {
                d.insert(lv(g, &format!("{fam}_{xn}^{cn}")));
            }
        }
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let vars = clause_vars(c);
        let cn = clause_name(j);
        let tv = *vars.iter().find(|&&z| a[z]).expect("one true variable");
        let tn = f.var_name(tv);
        d.insert(lv(g, &format!("v_{cn}")));
        d.insert(lv(g, &format!("g_{cn}^{tn}")));
        d.insert(lv(g, &format!("c_{cn}^{tn}")));
        d.insert(lv(g, &format!("a_{cn}^{tn}")));
        for &z in vars.iter().filter(|&&z| !a[z]) {
            let zn = f.var_name(z);
            d.insert(lv(g, &format!("c_{cn}^{zn}")));
            d.insert(lv(g, &format!("d_{cn}^{zn}")));
        }
    }
    d
}

// Add the false side's clique vertex next to the true side's; the a clique
// supplies the middle edge of the planted path.
pub(super) fn augmented_tdclawk2(g: &Graph, f: &Formula, a: &[bool]) -> Augmented {
    let c = &f.clauses()[0];
    let cn = clause_name(0);
    let vars = clause_vars(c);
    let tv = *vars.iter().find(|&&z| a[z]).expect("one true variable");
    let fv = *vars.iter().find(|&&z| !a[z]).expect("a false variable");
    let (tn, fnm) = (f.var_name(tv), f.var_name(fv));
    let mut set = certificate_tdclawk2(g, f, a);
    let added = lv(g, &format!("a_{cn}^{fnm}"));
    set.insert(added);
    Augmented {
        set,
        witness: [
            lv(g, &format!("c_{cn}^{tn}")),
            lv(g, &format!("a_{cn}^{tn}")),
            added,
            lv(g, &format!("c_{cn}^{fnm}")),
        ],
        shape: AugmentedShape::PathFour,
    }
}

// ----- claw-free construction, tier 3 -----

// Variable gadget: central paw T,F,v with pendant u, clique vertices p
// behind T and q behind F, and a four-vertex paw satellite per occurrence on
// each side. Clause gadget: a true side of t,p pairs over a p clique and a
// false side where v_c serves a q clique with pendant f's and its own
// pendant u_c.
pub(super) fn build_tdclawk3(f: &Formula) -> Result<Graph, GadgetError> {
    let occ = occurrences(f);
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        let t = b.vx(format!("T_{xn}"));
        let fv = b.vx(format!("F_{xn}"));
        let v = b.vx(format!("v_{xn}"));
        let u = b.vx(format!("u_{xn}"));
        b.clique(&[t, fv, v]);
        b.edge(v, u);
        let mut ps = Vec::new();
        let mut qs = Vec::new();
        for &p in &occ[x] {
            let cn = clause_name(p);
            let pv = b.vx(format!("p_{xn}^{cn}"));
            b.edge(t, pv);
            ps.push(pv);
            let qv = b.vx(format!("q_{xn}^{cn}"));
            b.edge(fv, qv);
            qs.push(qv);
            for side in ["T", "F"] {
                let mut paw = Vec::new();
                for i in 1..=4 {
                    paw.push(b.vx(format!("P_{{{xn},{side}}}^{cn}({i})")));
                }
                b.clique(&[paw[0], paw[1], paw[2]]);
                b.edge(paw[2], paw[3]);
            }
            b.edge_l(&format!("p_{xn}^{cn}"), &format!("P_{{{xn},T}}^{cn}(2)"));
            b.edge_l(&format!("q_{xn}^{cn}"), &format!("P_{{{xn},F}}^{cn}(1)"));
        }
        b.clique(&ps);
        b.clique(&qs);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let mut ps = Vec::new();
        for &w in &clause_vars(c) {
            let wn = f.var_name(w);
            let tv = b.vx(format!("t_{cn}^{wn}"));
            let pv = b.vx(format!("p_{cn}^{wn}"));
            b.edge(tv, pv);
            ps.push(pv);
        }
        b.clique(&ps);
        let u = b.vx(format!("u_{cn}"));
        let v = b.vx(format!("v_{cn}"));
        b.edge(u, v);
        let mut qs = Vec::new();
        for &w in &clause_vars(c) {
            let wn = f.var_name(w);
            let qv = b.vx(format!("q_{cn}^{wn}"));
            b.edge(v, qv);
            let fv = b.vx(format!("f_{cn}^{wn}"));
            b.edge(qv, fv);
            qs.push(qv);
        }
        b.clique(&qs);
    }
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        for &p in &occ[x] {
            let cn = clause_name(p);
            b.edge_l(&format!("P_{{{xn},T}}^{cn}(1)"), &format!("t_{cn}^{xn}"));
            b.edge_l(&format!("P_{{{xn},F}}^{cn}(2)"), &format!("f_{cn}^{xn}"));
        }
    }
    b.finish()
}

pub(super) fn certificate_tdclawk3(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let occ = occurrences(f);
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        d.insert(lv(g, &format!("v_{xn}")));
        let side = if a[x] { "T" } else { "F" };
        d.insert(lv(g, &format!("{side}_{xn}")));
        // satellites pay two each: the triangle vertex with the pendant and
        // the attachment matching the truth value
        let lead = if a[x] { 1 } else { 2 };
        for &p in &occ[x] {
            let cn = clause_name(p);
            for r in ["T", "F"] {
                d.insert(lv(g, &format!("P_{{{xn},{r}}}^{cn}({lead})")));
                d.insert(lv(g, &format!("P_{{{xn},{r}}}^{cn}(3)")));
            }
        }
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let tv = *vars.iter().find(|&&z| a[z]).expect("one true variable");
        d.insert(lv(g, &format!("v_{cn}")));
        d.insert(lv(g, &format!("q_{cn}^{}", f.var_name(tv))));
        for &z in vars.iter().filter(|&&z| !a[z]) {
            d.insert(lv(g, &format!("p_{cn}^{}", f.var_name(z))));
        }
    }
    d
}

pub(super) fn claims_tdclawk3(g: &Graph, f: &Formula) -> Vec<LocalClaim> {
    let occ = occurrences(f);
    let mut claims = Vec::new();
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        claims.push(LocalClaim {
            name: format!("variable {xn} central paw"),
            vertices: ["T", "F", "v", "u"]
                .iter()
                .map(|fam| lv(g, &format!("{fam}_{xn}")))
                .collect(),
            min_hits: 2,
            forced: vec![lv(g, &format!("v_{xn}"))],
            hit_one_of: vec![],
        });
        for &p in &occ[x] {
            let cn = clause_name(p);
            for r in ["T", "F"] {
                claims.push(LocalClaim {
                    name: format!("variable {xn} paw {r}/{cn}"),
                    vertices: (1..=4)
                        .map(|i| lv(g, &format!("P_{{{xn},{r}}}^{cn}({i})")))
                        .collect(),
                    min_hits: 2,
                    forced: vec![lv(g, &format!("P_{{{xn},{r}}}^{cn}(3)"))],
                    hit_one_of: vec![],
                });
            }
        }
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let mut true_side = Vec::new();
        let mut false_side = vec![lv(g, &format!("u_{cn}")), lv(g, &format!("v_{cn}"))];
        for &w in &vars {
            let wn = f.var_name(w);
            true_side.push(lv(g, &format!("t_{cn}^{wn}")));
            true_side.push(lv(g, &format!("p_{cn}^{wn}")));
            false_side.push(lv(g, &format!("q_{cn}^{wn}")));
            false_side.push(lv(g, &format!("f_{cn}^{wn}")));
        }
        claims.push(LocalClaim {
            name: format!("clause {cn} true side"),
            vertices: true_side,
            min_hits: 2,
            forced: vec![],
            hit_one_of: vec![],
        });
        claims.push(LocalClaim {
            name: format!("clause {cn} false side"),
            vertices: false_side,
            min_hits: 2,
            forced: vec![lv(g, &format!("v_{cn}"))],
            hit_one_of: vec![],
        });
    }
    claims
}

#[cfg(test)]
mod tests {
    use super::super::{build_gadget, check_local_claim, GadgetKind};
    use crate::domination::{is_dom_set, DomKind};
    use crate::formula::{Flavor, Formula, Lit};
    use crate::patterns::{check_pattern, find_pattern, Pattern};

    fn tiny_3sat() -> Formula {
        // (x1 | x2 | x3) & (!x1 | x2)
        Formula::new(
            Flavor::Standard3Sat,
            3,
            vec![
                vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)],
                vec![Lit::neg(0), Lit::pos(1)],
            ],
        )
        .unwrap()
    }

    // three identical clauses over three variables is the smallest legal
    // exactly-3-bounded instance
    fn tiny_1in3() -> Formula {
        Formula::new(
            Flavor::OneInThreePositive3Bounded,
            3,
            vec![vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)]; 3],
        )
        .unwrap()
    }

    #[test]
    fn td2p4_counts_and_certificate() {
        let f = tiny_3sat();
        let bundle = build_gadget(GadgetKind::Td2P4, &f).unwrap();
        assert_eq!(bundle.prediction.vertex_count, 14);
        assert_eq!(bundle.graph().vertex_count(), 14);
        let a = vec![true, true, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 6);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Total));
        // pairs only, no path of three inside the certificate
        assert!(find_pattern(bundle.graph(), &d, Pattern::P3).is_none());
    }

    #[test]
    fn td2p4_augmented_plants_a_path() {
        let f = tiny_3sat();
        let bundle = build_gadget(GadgetKind::Td2P4, &f).unwrap();
        let a = vec![false, true, true];
        let aug = bundle.augmented(&a).unwrap().unwrap().remove(0);
        assert_eq!(aug.set.len(), bundle.prediction.gamma_if_sat + 1);
        assert!(is_dom_set(bundle.graph(), &aug.set, DomKind::Total));
        assert!(check_pattern(
            bundle.graph(),
            &aug.set,
            Pattern::P4,
            &aug.witness
        ));
    }

    #[test]
    fn td2p4_rejects_unsat_assignment() {
        let f = tiny_3sat();
        let bundle = build_gadget(GadgetKind::Td2P4, &f).unwrap();
        assert!(bundle.certificate(&[true, false, false]).is_err());
    }

    #[test]
    fn tdclawk2_counts_certificate_and_augmented() {
        let f = tiny_1in3();
        let bundle = build_gadget(GadgetKind::TdClawK2, &f).unwrap();
        assert_eq!(bundle.prediction.vertex_count, 34 * 3 + 24 * 3);
        assert_eq!(bundle.graph().vertex_count(), 174);
        let a = vec![false, true, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 14 * 3 + 8 * 3);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Total));
        assert!(find_pattern(bundle.graph(), &d, Pattern::P3).is_none());
        let aug = bundle.augmented(&a).unwrap().unwrap().remove(0);
        assert_eq!(aug.set.len(), d.len() + 1);
        assert!(is_dom_set(bundle.graph(), &aug.set, DomKind::Total));
        assert!(check_pattern(
            bundle.graph(),
            &aug.set,
            Pattern::P4,
            &aug.witness
        ));
    }

    #[test]
    fn tdclawk3_counts_certificate_and_claims() {
        let f = tiny_1in3();
        let bundle = build_gadget(GadgetKind::TdClawK3, &f).unwrap();
        assert_eq!(bundle.prediction.vertex_count, 34 * 3 + 14 * 3);
        assert_eq!(bundle.graph().vertex_count(), 144);
        let a = vec![true, false, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 14 * 3 + 4 * 3);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Total));
        assert!(find_pattern(bundle.graph(), &d, Pattern::P3).is_none());
        assert!(bundle.augmented(&a).unwrap().is_none());
        let claims = bundle.local_claims();
        // one central and six satellite paws per variable, two per clause
        assert_eq!(claims.len(), 3 * 7 + 3 * 2);
        for claim in &claims {
            check_local_claim(bundle.graph(), DomKind::Total, &claim).unwrap();
        }
    }
}

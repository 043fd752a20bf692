//! Semitotal domination reductions.

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

// ----- long-paw-per-variable construction, tier 2 -----

// Variable x becomes a long paw: triangle on the literal vertices and u_x,
// then the tail u_x, v_x, w_x. Clause vertices form a clique, each adjacent
// to the vertices of its literals.
pub(super) fn build_stdlongpaw(f: &Formula) -> Result<Graph, GadgetError> {
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        let name = f.var_name(x);
        let pos = b.vx(name.clone());
        let neg = b.vx(format!("{name}_bar"));
        let u = b.vx(format!("u_{name}"));
        let v = b.vx(format!("v_{name}"));
        let w = b.vx(format!("w_{name}"));
        b.clique(&[pos, neg, u]);
        b.edge(u, v);
        b.edge(v, w);
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

pub(super) fn certificate_stdlongpaw(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        let name = f.var_name(x);
        d.insert(lv(g, &format!("v_{name}")));
        let lit = if a[x] { name } else { format!("{name}_bar") };
        d.insert(lv(g, &lit));
    }
    d
}

pub(super) fn augmented_stdlongpaw(g: &Graph, f: &Formula, a: &[bool]) -> Option<Augmented> {
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
    let mut set = certificate_stdlongpaw(g, f, a);
    for l in &picked {
        let name = f.var_name(l.var);
        set.remove(lv(g, &name));
        set.remove(lv(g, &format!("{name}_bar")));
        set.insert(lv(g, &lit_label(f, *l)));
    }
    let cv = lv(g, &clause_name(j));
    set.insert(cv);
    let wx = lv(g, &lit_label(f, picked[0]));
    let wy = lv(g, &lit_label(f, picked[1]));
    let vy = lv(g, &format!("v_{}", f.var_name(picked[1].var)));
    Some(Augmented {
        set,
        witness: [wx, cv, wy, vy],
        shape: AugmentedShape::PathThreePlusDistTwo,
    })
}

pub(super) fn claims_stdlongpaw(g: &Graph, f: &Formula) -> Vec<LocalClaim> {
    (0..f.num_vars())
        .map(|x| {
            let name = f.var_name(x);
            LocalClaim {
                name: format!("variable {name} gadget"),
                vertices: vec![
                    lv(g, &name),
                    lv(g, &format!("{name}_bar")),
                    lv(g, &format!("u_{name}")),
                    lv(g, &format!("v_{name}")),
                    lv(g, &format!("w_{name}")),
                ],
                min_hits: 2,
                forced: vec![],
                hit_one_of: vec![],
            }
        })
        .collect()
}

// ----- five-cycle construction, tier 2, two output graphs -----

// Variable x becomes a five-cycle F,T,v,w,u with a pendant r on w. Clause c
// gets a vertex adjacent to the T's of its variables and a twin adjacent to
// the F's. The first output leaves the clause vertices independent, the
// second turns each of the two clause families into a clique.
pub(super) fn build_stdc3c4(f: &Formula) -> Result<Vec<Graph>, GadgetError> {
    let one = |cliques: bool| -> Result<Graph, GadgetError> {
        let mut b = Builder::new();
        for x in 0..f.num_vars() {
            let name = f.var_name(x);
            let t = b.vx(format!("T_{name}"));
            let fv = b.vx(format!("F_{name}"));
            let v = b.vx(format!("v_{name}"));
            let w = b.vx(format!("w_{name}"));
            let u = b.vx(format!("u_{name}"));
            let r = b.vx(format!("r_{name}"));
            b.edge(fv, t);
            b.edge(t, v);
            b.edge(v, w);
            b.edge(w, u);
            b.edge(u, fv);
            b.edge(w, r);
        }
        let mut pos_side = Vec::new();
        let mut neg_side = Vec::new();
        for (j, c) in f.clauses().iter().enumerate() {
            let cn = clause_name(j);
            let cv = b.vx(cn.clone());
            let cb = b.vx(format!("{cn}_bar"));
            pos_side.push(cv);
            neg_side.push(cb);
            for &z in &clause_vars(c) {
                let zn = f.var_name(z);
                b.edge(cv, b.get(&format!("T_{zn}")));
                b.edge(cb, b.get(&format!("F_{zn}")));
            }
        }
        if cliques {
            b.clique(&pos_side);
            b.clique(&neg_side);
        }
        b.finish()
    };
    Ok(vec![one(false)?, one(true)?])
}

pub(super) fn certificate_stdc3c4(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        let name = f.var_name(x);
        d.insert(lv(g, &format!("w_{name}")));
        let side = if a[x] { "T" } else { "F" };
        d.insert(lv(g, &format!("{side}_{name}")));
    }
    d
}

// A not-all-equal assignment leaves either two true or two false variables
// in the first clause; the matching clause twin closes the planted pattern.
pub(super) fn augmented_stdc3c4(g: &Graph, f: &Formula, a: &[bool]) -> Augmented {
    let vars = clause_vars(&f.clauses()[0]);
    let cn = clause_name(0);
    let trues: Vec<usize> = vars.iter().copied().filter(|&z| a[z]).collect();
    let falses: Vec<usize> = vars.iter().copied().filter(|&z| !a[z]).collect();
    let (added, side, pair) = if trues.len() >= 2 {
        (lv(g, &cn), "T", [trues[0], trues[1]])
    } else {
        (lv(g, &format!("{cn}_bar")), "F", [falses[0], falses[1]])
    };
    let mut set = certificate_stdc3c4(g, f, a);
    set.insert(added);
    let first = lv(g, &format!("{side}_{}", f.var_name(pair[0])));
    let second = lv(g, &format!("{side}_{}", f.var_name(pair[1])));
    let wb = lv(g, &format!("w_{}", f.var_name(pair[1])));
    Augmented {
        set,
        witness: [first, added, second, wb],
        shape: AugmentedShape::PathThreePlusDistTwo,
    }
}

pub(super) fn claims_stdc3c4(g: &Graph, f: &Formula) -> Vec<LocalClaim> {
    (0..f.num_vars())
        .map(|x| {
            let name = f.var_name(x);
            LocalClaim {
                name: format!("variable {name} gadget"),
                vertices: ["T", "F", "v", "w", "u", "r"]
                    .iter()
                    .map(|fam| lv(g, &format!("{fam}_{name}")))
                    .collect(),
                min_hits: 2,
                forced: vec![],
                hit_one_of: vec![],
            }
        })
        .collect()
}

// ----- shared claw-free variable gadget -----

// Central long paw T,F,u,v,w plus one clique vertex p behind T and q behind
// F per occurrence, each clique vertex carrying its own long paw satellite.
// The T satellites attach at their second vertex, the F satellites at their
// first; the loose ends tie to the clause gadgets.
fn claw_variable_gadget(b: &mut Builder, f: &Formula, occ: &[Vec<usize>], x: usize) {
    let xn = f.var_name(x);
    let t = b.vx(format!("T_{xn}"));
    let fv = b.vx(format!("F_{xn}"));
    let u = b.vx(format!("u_{xn}"));
    let v = b.vx(format!("v_{xn}"));
    let w = b.vx(format!("w_{xn}"));
    b.clique(&[t, fv, u]);
    b.edge(u, v);
    b.edge(v, w);
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
            for i in 1..=5 {
                paw.push(b.vx(format!("P_{{{xn},{side}}}^{cn}({i})")));
            }
            b.clique(&[paw[0], paw[1], paw[2]]);
            b.edge(paw[2], paw[3]);
            b.edge(paw[3], paw[4]);
        }
        b.edge_l(&format!("p_{xn}^{cn}"), &format!("P_{{{xn},T}}^{cn}(2)"));
        b.edge_l(&format!("q_{xn}^{cn}"), &format!("P_{{{xn},F}}^{cn}(1)"));
    }
    b.clique(&ps);
    b.clique(&qs);
}

// Certificate share of one claw-free variable gadget: v_x, the side vertex,
// and two satellite vertices per paw.
fn claw_variable_certificate(g: &Graph, f: &Formula, occ: &[Vec<usize>], x: usize, value: bool, d: &mut VertexSet) {
    let xn = f.var_name(x);
    d.insert(lv(g, &format!("v_{xn}")));
    let side = if value { "T" } else { "F" };
    d.insert(lv(g, &format!("{side}_{xn}")));
    let lead = if value { 1 } else { 2 };
    for &p in &occ[x] {
        let cn = clause_name(p);
        for r in ["T", "F"] {
            d.insert(lv(g, &format!("P_{{{xn},{r}}}^{cn}({lead})")));
            d.insert(lv(g, &format!("P_{{{xn},{r}}}^{cn}(4)")));
        }
    }
}

// Seven long-paw floors per variable: two members each, one of them on the
// tail.
fn claw_variable_claims(g: &Graph, f: &Formula, occ: &[Vec<usize>], x: usize, out: &mut Vec<LocalClaim>) {
    let xn = f.var_name(x);
    let central: Vec<usize> = ["T", "F", "u", "v", "w"]
        .iter()
        .map(|fam| lv(g, &format!("{fam}_{xn}")))
        .collect();
    out.push(LocalClaim {
        name: format!("variable {xn} central paw"),
        min_hits: 2,
        forced: vec![],
        hit_one_of: vec![vec![central[3], central[4]]],
        vertices: central,
    });
    for &p in &occ[x] {
        let cn = clause_name(p);
        for r in ["T", "F"] {
            let paw: Vec<usize> = (1..=5)
                .map(|i| lv(g, &format!("P_{{{xn},{r}}}^{cn}({i})")))
                .collect();
            out.push(LocalClaim {
                name: format!("variable {xn} paw {r}/{cn}"),
                min_hits: 2,
                forced: vec![],
                hit_one_of: vec![vec![paw[3], paw[4]]],
                vertices: paw,
            });
        }
    }
}

// ----- claw-free construction, tier 2 -----

// Clause gadget: a triangle of pair vertices w, a triangle of per-variable
// vertices t glued between them, a hub u_c under the t's, and a separate
// triangle of pair vertices f. Pair vertices tie to the satellites of both
// their variables.
pub(super) fn build_stdclawk2(f: &Formula) -> Result<Graph, GadgetError> {
    let occ = occurrences(f);
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        claw_variable_gadget(&mut b, f, &occ, x);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let pair_name = |i: usize, k: usize| {
            format!("{},{}", f.var_name(vars[i]), f.var_name(vars[k]))
        };
        let mut ws = Vec::new();
        let mut fs = Vec::new();
        for (i, k) in [(0, 1), (0, 2), (1, 2)] {
            ws.push(b.vx(format!("w_{cn}^{{{}}}", pair_name(i, k))));
            fs.push(b.vx(format!("f_{cn}^{{{}}}", pair_name(i, k))));
        }
        b.clique(&ws);
        b.clique(&fs);
        let mut ts = Vec::new();
        for &z in &vars {
            ts.push(b.vx(format!("t_{cn}^{}", f.var_name(z))));
        }
        b.clique(&ts);
        let u = b.vx(format!("u_{cn}"));
        for &t in &ts {
            b.edge(u, t);
        }
        // each t touches the two pair vertices naming its variable, and each
        // pair vertex reaches into the satellites of its two variables
        for (pair_pos, (i, k)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            b.edge(ts[i], ws[pair_pos]);
            b.edge(ts[k], ws[pair_pos]);
            for z in [vars[i], vars[k]] {
                let zn = f.var_name(z);
                b.edge_l(
                    &format!("P_{{{zn},T}}^{cn}(1)"),
                    &format!("w_{cn}^{{{}}}", pair_name(i, k)),
                );
                b.edge_l(
                    &format!("P_{{{zn},F}}^{cn}(2)"),
                    &format!("f_{cn}^{{{}}}", pair_name(i, k)),
                );
            }
        }
        for &z in &vars {
            let zn = f.var_name(z);
            b.edge_l(&format!("P_{{{zn},T}}^{cn}(1)"), &format!("t_{cn}^{zn}"));
        }
    }
    b.finish()
}

pub(super) fn certificate_stdclawk2(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let occ = occurrences(f);
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        claw_variable_certificate(g, f, &occ, x, a[x], &mut d);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let ti = vars.iter().position(|&z| a[z]).expect("one true variable");
        let next = f.var_name(vars[(ti + 1) % 3]);
        d.insert(lv(g, &format!("t_{cn}^{next}")));
    }
    d
}

// The true variable's own t vertex joins the set; its satellite supplies the
// distance-two tail of the planted pattern.
pub(super) fn augmented_stdclawk2(g: &Graph, f: &Formula, a: &[bool]) -> Augmented {
    let cn = clause_name(0);
    let vars = clause_vars(&f.clauses()[0]);
    let ti = vars.iter().position(|&z| a[z]).expect("one true variable");
    let tn = f.var_name(vars[ti]);
    let next = f.var_name(vars[(ti + 1) % 3]);
    let mut set = certificate_stdclawk2(g, f, a);
    let added = lv(g, &format!("t_{cn}^{tn}"));
    set.insert(added);
    Augmented {
        set,
        witness: [
            lv(g, &format!("t_{cn}^{next}")),
            added,
            lv(g, &format!("P_{{{tn},T}}^{cn}(1)")),
            lv(g, &format!("P_{{{tn},T}}^{cn}(4)")),
        ],
        shape: AugmentedShape::PathThreePlusDistTwo,
    }
}

// ----- claw-free construction, tier 3 -----

// Clause gadget, true side: per variable a triangle t,u,v; the u's plus a_c
// and the v's plus b_c form cliques. False side: path w,v,u into a q clique
// with pendant f's.
pub(super) fn build_stdclawk3(f: &Formula) -> Result<Graph, GadgetError> {
    let occ = occurrences(f);
    let mut b = Builder::new();
    for x in 0..f.num_vars() {
        claw_variable_gadget(&mut b, f, &occ, x);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let mut us = Vec::new();
        let mut vs = Vec::new();
        for &z in &vars {
            let zn = f.var_name(z);
            let tv = b.vx(format!("t_{cn}^{zn}"));
            let uv = b.vx(format!("u_{cn}^{zn}"));
            let vv = b.vx(format!("v_{cn}^{zn}"));
            b.clique(&[tv, uv, vv]);
            us.push(uv);
            vs.push(vv);
        }
        let a_c = b.vx(format!("a_{cn}"));
        let b_c = b.vx(format!("b_{cn}"));
        us.push(a_c);
        vs.push(b_c);
        b.clique(&us);
        b.clique(&vs);
        let w = b.vx(format!("w_{cn}"));
        let v = b.vx(format!("v_{cn}"));
        let u = b.vx(format!("u_{cn}"));
        b.edge(w, v);
        b.edge(v, u);
        let mut qs = Vec::new();
        for &z in &vars {
            let zn = f.var_name(z);
            let qv = b.vx(format!("q_{cn}^{zn}"));
            b.edge(u, qv);
            let fv = b.vx(format!("f_{cn}^{zn}"));
            b.edge(qv, fv);
            qs.push(qv);
        }
        b.clique(&qs);
    }
    for x in 0..f.num_vars() {
        let xn = f.var_name(x);
        for &p in &occ[x] {
            let cn = clause_name(p);
            b.edge_l(&format!("t_{cn}^{xn}"), &format!("P_{{{xn},T}}^{cn}(1)"));
            b.edge_l(&format!("f_{cn}^{xn}"), &format!("P_{{{xn},F}}^{cn}(2)"));
        }
    }
    b.finish()
}

pub(super) fn certificate_stdclawk3(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let occ = occurrences(f);
    let mut d = VertexSet::EMPTY;
    for x in 0..f.num_vars() {
        claw_variable_certificate(g, f, &occ, x, a[x], &mut d);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let tv = *vars.iter().find(|&&z| a[z]).expect("one true variable");
        let falses: Vec<usize> = vars.iter().copied().filter(|&z| !a[z]).collect();
        d.insert(lv(g, &format!("v_{cn}")));
        d.insert(lv(g, &format!("q_{cn}^{}", f.var_name(tv))));
        d.insert(lv(g, &format!("v_{cn}^{}", f.var_name(falses[0]))));
        d.insert(lv(g, &format!("u_{cn}^{}", f.var_name(falses[1]))));
    }
    d
}

pub(super) fn claims_stdclawk3(g: &Graph, f: &Formula) -> Vec<LocalClaim> {
    let occ = occurrences(f);
    let mut claims = Vec::new();
    for x in 0..f.num_vars() {
        claw_variable_claims(g, f, &occ, x, &mut claims);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let mut core = vec![
            lv(g, &format!("u_{cn}")),
            lv(g, &format!("v_{cn}")),
            lv(g, &format!("w_{cn}")),
        ];
        let mut u_clique = vec![lv(g, &format!("a_{cn}"))];
        let mut v_clique = vec![lv(g, &format!("b_{cn}"))];
        for &z in &vars {
            let zn = f.var_name(z);
            core.push(lv(g, &format!("q_{cn}^{zn}")));
            u_clique.push(lv(g, &format!("u_{cn}^{zn}")));
            v_clique.push(lv(g, &format!("v_{cn}^{zn}")));
        }
        claims.push(LocalClaim {
            name: format!("clause {cn} false core"),
            vertices: core,
            min_hits: 2,
            forced: vec![],
            hit_one_of: vec![],
        });
        claims.push(LocalClaim {
            name: format!("clause {cn} u clique"),
            vertices: u_clique,
            min_hits: 1,
            forced: vec![],
            hit_one_of: vec![],
        });
        claims.push(LocalClaim {
            name: format!("clause {cn} v clique"),
            vertices: v_clique,
            min_hits: 1,
            forced: vec![],
            hit_one_of: vec![],
        });
    }
    claims
}

// ----- 3P4-free construction, tier 3 -----

// Each clause becomes two mirrored copies of a fourteen-vertex block: a
// five-clique V of p, q and per-variable v's, and a nine-clique K of
// per-occurrence u's and per-pair t's, with v's wired into K. The copies
// cross-link through the p's and the complementary t's, occurrences link
// copy 1 to copy 2 across clauses, and all first-copy K's merge into one
// global clique, likewise the second-copy K's.
pub(super) fn build_std3p4k3(f: &Formula) -> Result<Graph, GadgetError> {
    let occ = occurrences(f);
    let mut b = Builder::new();
    let mut k_global: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        for copy in [1usize, 2] {
            let p = b.vx(format!("p_{{{cn},{copy}}}"));
            let q = b.vx(format!("q_{{{cn},{copy}}}"));
            let mut v_clique = vec![p, q];
            let mut k_clique = Vec::new();
            for &z in &vars {
                let zn = f.var_name(z);
                let vv = b.vx(format!("v_{{{cn},{copy}}}^{zn}"));
                v_clique.push(vv);
                for &d in occ[z].iter().filter(|&&d| d != j) {
                    let dn = clause_name(d);
                    let uv = b.vx(format!("u_{{{cn},{copy}}}^{{{zn},{dn}}}"));
                    b.edge(vv, uv);
                    k_clique.push(uv);
                }
            }
            for (i, k) in [(0, 1), (0, 2), (1, 2)] {
                let tn = format!(
                    "t_{{{cn},{copy}}}^{{{},{}}}",
                    f.var_name(vars[i]),
                    f.var_name(vars[k])
                );
                let tv = b.vx(tn);
                b.edge(v_clique[2 + i], tv);
                b.edge(v_clique[2 + k], tv);
                k_clique.push(tv);
            }
            b.clique(&v_clique);
            k_global[copy - 1].extend(k_clique);
        }
        // cross edges between the two copies
        for (copy, other) in [(1, 2), (2, 1)] {
            let p = b.get(&format!("p_{{{cn},{copy}}}"));
            let q_other = b.get(&format!("q_{{{cn},{other}}}"));
            b.edge(p, q_other);
            for (pos, &z) in vars.iter().enumerate() {
                let zn = f.var_name(z);
                b.edge(p, b.get(&format!("v_{{{cn},{other}}}^{zn}")));
                // the complementary pair vertex of the other copy
                let (i, k) = match pos {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                b.edge_l(
                    &format!("v_{{{cn},{copy}}}^{zn}"),
                    &format!(
                        "t_{{{cn},{other}}}^{{{},{}}}",
                        f.var_name(vars[i]),
                        f.var_name(vars[k])
                    ),
                );
            }
        }
    }
    // occurrences tie copy i of one clause to copy 3-i of the other
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        for &z in &clause_vars(c) {
            let zn = f.var_name(z);
            for &d in occ[z].iter().filter(|&&d| d != j) {
                let dn = clause_name(d);
                for (copy, other) in [(1, 2), (2, 1)] {
                    let uv = b.get(&format!("u_{{{cn},{copy}}}^{{{zn},{dn}}}"));
                    for &w in clause_vars(&f.clauses()[d]).iter().filter(|&&w| w != z) {
                        let wn = f.var_name(w);
                        b.edge(uv, b.get(&format!("v_{{{dn},{other}}}^{wn}")));
                    }
                }
            }
        }
    }
    b.clique(&k_global[0]);
    b.clique(&k_global[1]);
    b.finish()
}

pub(super) fn certificate_std3p4k3(g: &Graph, f: &Formula, a: &[bool]) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    for (j, c) in f.clauses().iter().enumerate() {
        let cn = clause_name(j);
        let vars = clause_vars(c);
        let tv = *vars.iter().find(|&&z| a[z]).expect("one true variable");
        let tn = f.var_name(tv);
        for copy in [1, 2] {
            d.insert(lv(g, &format!("v_{{{cn},{copy}}}^{tn}")));
        }
    }
    d
}

pub(super) fn claims_std3p4k3(g: &Graph, f: &Formula) -> Vec<LocalClaim> {
    f.clauses()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let cn = clause_name(j);
            let mut vertices = Vec::new();
            for copy in [1, 2] {
                vertices.push(lv(g, &format!("p_{{{cn},{copy}}}")));
                vertices.push(lv(g, &format!("q_{{{cn},{copy}}}")));
                for &z in &clause_vars(c) {
                    vertices.push(lv(g, &format!("v_{{{cn},{copy}}}^{}", f.var_name(z))));
                }
            }
            LocalClaim {
                name: format!("clause {cn} core pair"),
                vertices,
                min_hits: 2,
                forced: vec![],
                hit_one_of: vec![],
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{build_gadget, check_local_claim, GadgetKind};
    use crate::domination::{is_dom_set, DomKind};
    use crate::formula::{Flavor, Formula, Lit};
    use crate::patterns::{check_st_config, find_friendly_triple, STConfig};

    fn tiny_3sat() -> Formula {
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

    fn tiny_1in3() -> Formula {
        Formula::new(
            Flavor::OneInThreePositive3Bounded,
            3,
            vec![vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)]; 3],
        )
        .unwrap()
    }

    fn tiny_nae() -> Formula {
        Formula::new(
            Flavor::NaePositive,
            3,
            vec![vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)]; 2],
        )
        .unwrap()
    }

    #[test]
    fn stdlongpaw_counts_certificate_and_pattern() {
        let f = tiny_3sat();
        let bundle = build_gadget(GadgetKind::StdLongPaw, &f).unwrap();
        assert_eq!(bundle.graph().vertex_count(), 5 * 3 + 2);
        let a = vec![true, true, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 6);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Semitotal));
        assert!(find_friendly_triple(bundle.graph(), &d).is_none());
        let aug = bundle.augmented(&a).unwrap().unwrap().remove(0);
        assert_eq!(aug.set.len(), 7);
        assert!(is_dom_set(bundle.graph(), &aug.set, DomKind::Semitotal));
        assert!(check_st_config(
            bundle.graph(),
            &aug.set,
            STConfig::O4,
            &aug.witness
        ));
        for claim in bundle.local_claims() {
            check_local_claim(bundle.graph(), DomKind::Semitotal, &claim).unwrap();
        }
    }

    #[test]
    fn stdc3c4_emits_two_graphs_with_shared_certificate() {
        let f = tiny_nae();
        let bundle = build_gadget(GadgetKind::StdC3C4, &f).unwrap();
        assert_eq!(bundle.graphs.len(), 2);
        assert_eq!(bundle.graph().vertex_count(), 6 * 3 + 2 * 2);
        // clause twins are independent in the first graph, cliqued in the second
        assert!(bundle.graphs[1].edge_count() > bundle.graphs[0].edge_count());
        let a = vec![true, false, true];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 6);
        let augs = bundle.augmented(&a).unwrap().unwrap();
        for (g, aug) in bundle.graphs.iter().zip(&augs) {
            assert!(is_dom_set(g, &d, DomKind::Semitotal));
            assert!(find_friendly_triple(g, &d).is_none());
            assert_eq!(aug.set.len(), 7);
            assert!(is_dom_set(g, &aug.set, DomKind::Semitotal));
            assert!(check_st_config(g, &aug.set, STConfig::O4, &aug.witness));
            for claim in bundle.local_claims() {
                check_local_claim(g, DomKind::Semitotal, &claim).unwrap();
            }
        }
        assert!(bundle.class_holds());
    }

    #[test]
    fn stdclawk2_counts_certificate_and_augmented() {
        let f = tiny_1in3();
        let bundle = build_gadget(GadgetKind::StdClawK2, &f).unwrap();
        assert_eq!(bundle.graph().vertex_count(), 41 * 3 + 10 * 3);
        let a = vec![false, true, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 14 * 3 + 3);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Semitotal));
        assert!(find_friendly_triple(bundle.graph(), &d).is_none());
        let aug = bundle.augmented(&a).unwrap().unwrap().remove(0);
        assert_eq!(aug.set.len(), d.len() + 1);
        assert!(is_dom_set(bundle.graph(), &aug.set, DomKind::Semitotal));
        assert!(check_st_config(
            bundle.graph(),
            &aug.set,
            STConfig::O4,
            &aug.witness
        ));
    }

    #[test]
    fn stdclawk3_counts_certificate_and_claims() {
        let f = tiny_1in3();
        let bundle = build_gadget(GadgetKind::StdClawK3, &f).unwrap();
        assert_eq!(bundle.graph().vertex_count(), 41 * 3 + 20 * 3);
        let a = vec![false, false, true];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 14 * 3 + 4 * 3);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Semitotal));
        assert!(find_friendly_triple(bundle.graph(), &d).is_none());
        assert!(bundle.augmented(&a).unwrap().is_none());
        let claims = bundle.local_claims();
        assert_eq!(claims.len(), 3 * 7 + 3 * 3);
        for claim in &claims {
            check_local_claim(bundle.graph(), DomKind::Semitotal, claim).unwrap();
        }
    }

    #[test]
    fn std3p4k3_counts_certificate_and_claims() {
        let f = tiny_1in3();
        let bundle = build_gadget(GadgetKind::Std3P4K3, &f).unwrap();
        assert_eq!(bundle.graph().vertex_count(), 28 * 3);
        let a = vec![true, false, false];
        let d = bundle.certificate(&a).unwrap();
        assert_eq!(d.len(), 2 * 3);
        assert!(is_dom_set(bundle.graph(), &d, DomKind::Semitotal));
        assert!(find_friendly_triple(bundle.graph(), &d).is_none());
        assert!(bundle.augmented(&a).unwrap().is_none());
        for claim in bundle.local_claims() {
            check_local_claim(bundle.graph(), DomKind::Semitotal, &claim).unwrap();
        }
    }
}

//! SAT-to-graph constructions with machine-checkable predictions.
//!
//! Each builder consumes a formula of the flavor it expects and produces one
//! graph (two for the triangle-free / square-free pair) together with the
//! numbers the construction stakes its correctness on: vertex count, the
//! domination number reached under a satisfying assignment, and the
//! contraction tier. Certificates, augmented sets and per-piece lower-bound
//! claims are all derived from vertex labels, so callers can cross-check
//! everything against the solvers.

pub mod semitotal;
pub mod total;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::bits::VertexSet;
use crate::domination::DomKind;
use crate::formula::{Flavor, Formula, Lit};
use crate::bits::MAX_VERTICES;
use crate::graph::{Graph, GraphError};

/// The eight reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum GadgetKind {
    /// 3-SAT to total domination; paw per variable, clause clique. Tier 2.
    Td2P4,
    /// 1-in-3 SAT to total domination, claw-free output. Tier 2.
    TdClawK2,
    /// 1-in-3 SAT to total domination, claw-free output. Tier 3.
    TdClawK3,
    /// 3-SAT to semitotal domination; long paw per variable. Tier 2.
    StdLongPaw,
    /// 1-in-3 SAT to semitotal domination, claw-free output. Tier 2.
    StdClawK2,
    /// NAE-SAT to semitotal domination; emits a triangle-free and a
    /// square-free graph over the same vertex indices. Tier 2.
    StdC3C4,
    /// 1-in-3 SAT to semitotal domination, claw-free output. Tier 3.
    StdClawK3,
    /// 1-in-3 SAT to semitotal domination, 3P4-free output. Tier 3.
    Std3P4K3,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 8] = [
        GadgetKind::Td2P4,
        GadgetKind::TdClawK2,
        GadgetKind::TdClawK3,
        GadgetKind::StdLongPaw,
        GadgetKind::StdClawK2,
        GadgetKind::StdC3C4,
        GadgetKind::StdClawK3,
        GadgetKind::Std3P4K3,
    ];

    pub fn token(self) -> &'static str {
        match self {
            GadgetKind::Td2P4 => "td2p4",
            GadgetKind::TdClawK2 => "tdclawk2",
            GadgetKind::TdClawK3 => "tdclawk3",
            GadgetKind::StdLongPaw => "stdlongpaw",
            GadgetKind::StdClawK2 => "stdclawk2",
            GadgetKind::StdC3C4 => "stdc3c4",
            GadgetKind::StdClawK3 => "stdclawk3",
            GadgetKind::Std3P4K3 => "std3p4k3",
        }
    }

    /// Formula flavor the builder insists on.
    pub fn flavor(self) -> Flavor {
        match self {
            GadgetKind::Td2P4 | GadgetKind::StdLongPaw => Flavor::Standard3Sat,
            GadgetKind::StdC3C4 => Flavor::NaePositive,
            _ => Flavor::OneInThreePositive3Bounded,
        }
    }

    pub fn dom_kind(self) -> DomKind {
        match self {
            GadgetKind::Td2P4 | GadgetKind::TdClawK2 | GadgetKind::TdClawK3 => DomKind::Total,
            _ => DomKind::Semitotal,
        }
    }

    /// Contraction number the construction promises on satisfiable input.
    pub fn ct_if_sat(self) -> u8 {
        match self {
            GadgetKind::TdClawK3 | GadgetKind::StdClawK3 | GadgetKind::Std3P4K3 => 3,
            _ => 2,
        }
    }

    pub fn graphs_produced(self) -> usize {
        match self {
            GadgetKind::StdC3C4 => 2,
            _ => 1,
        }
    }

    /// Class the construction lands in, one entry per produced graph.
    pub fn claimed_classes(self) -> &'static [&'static str] {
        match self {
            GadgetKind::Td2P4 => &["2P4-free"],
            GadgetKind::TdClawK2
            | GadgetKind::TdClawK3
            | GadgetKind::StdClawK2
            | GadgetKind::StdClawK3 => &["K1,3-free"],
            GadgetKind::StdLongPaw => &["no induced cycle of length 5 or more"],
            GadgetKind::StdC3C4 => &["C3-free", "C4-free"],
            GadgetKind::Std3P4K3 => &["3P4-free"],
        }
    }

    pub fn vertex_count(self, f: &Formula) -> usize {
        let x = f.num_vars();
        let c = f.num_clauses();
        match self {
            GadgetKind::Td2P4 => 4 * x + c,
            GadgetKind::TdClawK2 => 34 * x + 24 * c,
            GadgetKind::TdClawK3 => 34 * x + 14 * c,
            GadgetKind::StdLongPaw => 5 * x + c,
            GadgetKind::StdClawK2 => 41 * x + 10 * c,
            GadgetKind::StdC3C4 => 6 * x + 2 * c,
            GadgetKind::StdClawK3 => 41 * x + 20 * c,
            GadgetKind::Std3P4K3 => 28 * c,
        }
    }

    pub fn gamma_if_sat(self, f: &Formula) -> usize {
        let x = f.num_vars();
        let c = f.num_clauses();
        match self {
            GadgetKind::Td2P4 | GadgetKind::StdLongPaw | GadgetKind::StdC3C4 => 2 * x,
            GadgetKind::TdClawK2 => 14 * x + 8 * c,
            GadgetKind::TdClawK3 | GadgetKind::StdClawK3 => 14 * x + 4 * c,
            GadgetKind::StdClawK2 => 14 * x + c,
            GadgetKind::Std3P4K3 => 2 * c,
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for GadgetKind {
    type Err = GadgetError;

    fn from_str(s: &str) -> Result<GadgetKind, GadgetError> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| GadgetError::UnknownKind(s.to_owned()))
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("{kind} consumes {expected} formulas, got {got}")]
    FlavorMismatch {
        kind: &'static str,
        expected: Flavor,
        got: Flavor,
    },
    #[error("construction needs {0} vertices, over capacity")]
    TooLarge(usize),
    #[error("assignment has {got} values for {want} variables")]
    AssignmentLength { want: usize, got: usize },
    #[error("assignment does not satisfy the formula")]
    UnsatAssignment,
    #[error("unknown gadget kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Numbers a construction promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Prediction {
    pub vertex_count: usize,
    pub gamma_if_sat: usize,
    pub ct_if_sat: u8,
}

/// A built reduction instance.
#[derive(Debug, Clone)]
pub struct GadgetBundle {
    pub kind: GadgetKind,
    pub formula: Formula,
    pub graphs: Vec<Graph>,
    pub prediction: Prediction,
}

/// Shape of the pattern planted in an augmented set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum AugmentedShape {
    /// Four set members joined by three consecutive edges.
    PathFour,
    /// Three set members on a path plus a fourth at distance exactly two
    /// from the path's end.
    PathThreePlusDistTwo,
}

/// Dominating set one over minimum together with its planted pattern.
///
/// `witness` lists the four pattern vertices in order: consecutive edges for
/// [`AugmentedShape::PathFour`]; two edges then a distance-two pair for
/// [`AugmentedShape::PathThreePlusDistTwo`].
#[derive(Debug, Clone)]
pub struct Augmented {
    pub set: VertexSet,
    pub witness: [usize; 4],
    pub shape: AugmentedShape,
}

/// What every dominating set must pay inside one piece of a gadget.
///
/// `vertices` spans the piece. Restricting any global dominating set to the
/// piece yields a locally feasible trace, so if every such trace hits the
/// piece `min_hits` times, contains each `forced` vertex, and meets every
/// `hit_one_of` group, the same holds globally.
#[derive(Debug, Clone)]
pub struct LocalClaim {
    pub name: String,
    pub vertices: Vec<usize>,
    pub min_hits: usize,
    pub forced: Vec<usize>,
    pub hit_one_of: Vec<Vec<usize>>,
}

/// Exhaustively verify a lower-bound claim against one graph.
///
/// A trace is locally feasible when every piece vertex without an outside
/// neighbor is dominated by the trace and, for semitotal, every trace member
/// that cannot reach outside the piece within two steps has a trace witness.
/// Piece vertices touching the outside get the benefit of the doubt, so a
/// passing claim is a valid bound for every dominating set of the full
/// graph. Err carries the first feasible trace violating the claim.
pub fn check_local_claim(g: &Graph, kind: DomKind, claim: &LocalClaim) -> Result<(), String> {
    let k = claim.vertices.len();
    assert!(k <= 16, "claim {} spans {} vertices", claim.name, k);
    let mut piece = VertexSet::EMPTY;
    for &v in &claim.vertices {
        piece.insert(v);
    }
    let mut boundary = VertexSet::EMPTY;
    for &v in &claim.vertices {
        if !g.neighbors(v).difference(&piece).is_empty() {
            boundary.insert(v);
        }
    }
    let fail = |s: &VertexSet, what: String| {
        Err(format!(
            "claim {}: feasible trace {:?} {}",
            claim.name,
            s.iter().collect::<Vec<_>>(),
            what
        ))
    };
    'trace: for mask in 0u32..(1u32 << k) {
        let mut s = VertexSet::EMPTY;
        for (i, &v) in claim.vertices.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.insert(v);
            }
        }
        for &v in &claim.vertices {
            if boundary.contains(v) {
                continue;
            }
            let dominated = match kind {
                DomKind::Total => g.neighbors(v).intersects(&s),
                DomKind::Semitotal => s.contains(v) || g.neighbors(v).intersects(&s),
            };
            if !dominated {
                continue 'trace;
            }
        }
        if let DomKind::Semitotal = kind {
            for v in s.iter() {
                if boundary.contains(v) || g.neighbors(v).intersects(&boundary) {
                    continue;
                }
                let mut reach = g.ball2(v);
                reach.remove(v);
                if !reach.intersects(&s) {
                    continue 'trace;
                }
            }
        }
        if s.len() < claim.min_hits {
            return fail(&s, format!("has only {} hits, claim wants {}", s.len(), claim.min_hits));
        }
        for &v in &claim.forced {
            if !s.contains(v) {
                return fail(&s, format!("dodges forced vertex {v}"));
            }
        }
        for group in &claim.hit_one_of {
            if !group.iter().any(|&v| s.contains(v)) {
                return fail(&s, format!("misses group {group:?}"));
            }
        }
    }
    Ok(())
}

pub fn build_gadget(kind: GadgetKind, f: &Formula) -> Result<GadgetBundle, GadgetError> {
    if f.flavor() != kind.flavor() {
        return Err(GadgetError::FlavorMismatch {
            kind: kind.token(),
            expected: kind.flavor(),
            got: f.flavor(),
        });
    }
    let want = kind.vertex_count(f);
    if want > MAX_VERTICES {
        return Err(GadgetError::TooLarge(want));
    }
    let graphs = match kind {
        GadgetKind::Td2P4 => vec![total::build_td2p4(f)?],
        GadgetKind::TdClawK2 => vec![total::build_tdclawk2(f)?],
        GadgetKind::TdClawK3 => vec![total::build_tdclawk3(f)?],
        GadgetKind::StdLongPaw => vec![semitotal::build_stdlongpaw(f)?],
        GadgetKind::StdClawK2 => vec![semitotal::build_stdclawk2(f)?],
        GadgetKind::StdC3C4 => semitotal::build_stdc3c4(f)?,
        GadgetKind::StdClawK3 => vec![semitotal::build_stdclawk3(f)?],
        GadgetKind::Std3P4K3 => vec![semitotal::build_std3p4k3(f)?],
    };
    for g in &graphs {
        debug_assert_eq!(g.vertex_count(), want, "{kind} vertex arithmetic");
    }
    Ok(GadgetBundle {
        kind,
        formula: f.clone(),
        graphs,
        prediction: Prediction {
            vertex_count: want,
            gamma_if_sat: kind.gamma_if_sat(f),
            ct_if_sat: kind.ct_if_sat(),
        },
    })
}

impl GadgetBundle {
    pub fn graph(&self) -> &Graph {
        &self.graphs[0]
    }

    fn checked_assignment(&self, a: &[bool]) -> Result<(), GadgetError> {
        if a.len() != self.formula.num_vars() {
            return Err(GadgetError::AssignmentLength {
                want: self.formula.num_vars(),
                got: a.len(),
            });
        }
        if !self.formula.satisfies(&a.to_vec()) {
            return Err(GadgetError::UnsatAssignment);
        }
        Ok(())
    }

    /// Dominating set of the promised minimum size, read off a satisfying
    /// assignment. The same vertex set serves every produced graph.
    pub fn certificate(&self, a: &[bool]) -> Result<VertexSet, GadgetError> {
        self.checked_assignment(a)?;
        let g = self.graph();
        let f = &self.formula;
        Ok(match self.kind {
            GadgetKind::Td2P4 => total::certificate_td2p4(g, f, a),
            GadgetKind::TdClawK2 => total::certificate_tdclawk2(g, f, a),
            GadgetKind::TdClawK3 => total::certificate_tdclawk3(g, f, a),
            GadgetKind::StdLongPaw => semitotal::certificate_stdlongpaw(g, f, a),
            GadgetKind::StdClawK2 => semitotal::certificate_stdclawk2(g, f, a),
            GadgetKind::StdC3C4 => semitotal::certificate_stdc3c4(g, f, a),
            GadgetKind::StdClawK3 => semitotal::certificate_stdclawk3(g, f, a),
            GadgetKind::Std3P4K3 => semitotal::certificate_std3p4k3(g, f, a),
        })
    }

    /// Dominating set one over minimum carrying the pattern that pins the
    /// contraction number to 2, one entry per produced graph. None for tier-3
    /// constructions, or when no clause spans two variables.
    pub fn augmented(&self, a: &[bool]) -> Result<Option<Vec<Augmented>>, GadgetError> {
        self.checked_assignment(a)?;
        let f = &self.formula;
        Ok(match self.kind {
            GadgetKind::Td2P4 => total::augmented_td2p4(self.graph(), f, a).map(|w| vec![w]),
            GadgetKind::TdClawK2 => Some(vec![total::augmented_tdclawk2(self.graph(), f, a)]),
            GadgetKind::StdLongPaw => {
                semitotal::augmented_stdlongpaw(self.graph(), f, a).map(|w| vec![w])
            }
            GadgetKind::StdClawK2 => {
                Some(vec![semitotal::augmented_stdclawk2(self.graph(), f, a)])
            }
            GadgetKind::StdC3C4 => Some(
                self.graphs
                    .iter()
                    .map(|g| semitotal::augmented_stdc3c4(g, f, a))
                    .collect(),
            ),
            GadgetKind::TdClawK3 | GadgetKind::StdClawK3 | GadgetKind::Std3P4K3 => None,
        })
    }

    /// Lower-bound claims on every dominating set, checkable piece by piece.
    /// Vertex indices are shared across produced graphs; check each claim
    /// against each graph.
    pub fn local_claims(&self) -> Vec<LocalClaim> {
        let g = self.graph();
        let f = &self.formula;
        match self.kind {
            GadgetKind::TdClawK3 => total::claims_tdclawk3(g, f),
            GadgetKind::StdLongPaw => semitotal::claims_stdlongpaw(g, f),
            GadgetKind::StdC3C4 => semitotal::claims_stdc3c4(g, f),
            GadgetKind::StdClawK3 => semitotal::claims_stdclawk3(g, f),
            GadgetKind::Std3P4K3 => semitotal::claims_std3p4k3(g, f),
            _ => Vec::new(),
        }
    }

    /// Verify the claimed class membership of every produced graph.
    pub fn class_holds(&self) -> bool {
        use crate::classes::{contains_k_disjoint_induced, find_induced_cycle_at_least, is_h_free};
        use crate::graph::{complete, cycle, make_named_graph, path, star};
        match self.kind {
            GadgetKind::Td2P4 => is_h_free(&self.graphs[0], &make_named_graph("2P4").unwrap()),
            GadgetKind::TdClawK2
            | GadgetKind::TdClawK3
            | GadgetKind::StdClawK2
            | GadgetKind::StdClawK3 => is_h_free(&self.graphs[0], &star(3)),
            GadgetKind::StdLongPaw => find_induced_cycle_at_least(&self.graphs[0], 5).is_none(),
            GadgetKind::StdC3C4 => {
                is_h_free(&self.graphs[0], &complete(3)) && is_h_free(&self.graphs[1], &cycle(4))
            }
            GadgetKind::Std3P4K3 => !contains_k_disjoint_induced(&self.graphs[0], &path(4), 3),
        }
    }
}

// ----- construction scratchpad -----

// Label-indexed edge collector. Duplicate edge requests collapse; duplicate
// labels are construction bugs and panic.
pub(crate) struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Builder {
    pub(crate) fn new() -> Builder {
        Builder {
            labels: Vec::new(),
            index: HashMap::new(),
            edges: BTreeSet::new(),
        }
    }

    pub(crate) fn vx(&mut self, label: String) -> usize {
        let id = self.labels.len();
        let prev = self.index.insert(label.clone(), id);
        assert!(prev.is_none(), "label {label:?} repeats");
        self.labels.push(label);
        id
    }

    pub(crate) fn get(&self, label: &str) -> usize {
        match self.index.get(label) {
            Some(&v) => v,
            None => panic!("no vertex labeled {label:?}"),
        }
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loop at {}", self.labels[u]);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub(crate) fn edge_l(&mut self, a: &str, b: &str) {
        let (u, v) = (self.get(a), self.get(b));
        self.edge(u, v);
    }

    pub(crate) fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    pub(crate) fn finish(self) -> Result<Graph, GadgetError> {
        let n = self.labels.len();
        let edges: Vec<(usize, usize)> = self.edges.into_iter().collect();
        let mut names = BTreeMap::new();
        for (i, l) in self.labels.into_iter().enumerate() {
            names.insert(i, l);
        }
        Ok(Graph::build(n, &edges)?.with_labels(names)?)
    }
}

// Resolve a label on a finished gadget graph.
pub(crate) fn lv(g: &Graph, label: &str) -> usize {
    match g.vertex_by_label(label) {
        Some(v) => v,
        None => panic!("no vertex labeled {label:?}"),
    }
}

// Clause indices containing each variable, in clause order.
pub(crate) fn occurrences(f: &Formula) -> Vec<Vec<usize>> {
    let mut occ = vec![Vec::new(); f.num_vars()];
    for (j, c) in f.clauses().iter().enumerate() {
        let mut seen = BTreeSet::new();
        for l in c {
            if seen.insert(l.var) {
                occ[l.var].push(j);
            }
        }
    }
    occ
}

// Distinct variables of a clause in first-appearance order.
pub(crate) fn clause_vars(c: &[Lit]) -> Vec<usize> {
    let mut vs = Vec::new();
    for l in c {
        if !vs.contains(&l.var) {
            vs.push(l.var);
        }
    }
    vs
}

pub(crate) fn clause_name(j: usize) -> String {
    format!("c{}", j + 1)
}

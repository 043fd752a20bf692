//! Class-restricted deciders for "can two contractions lower gamma":
//! the recursive solver on (P6 + k*P3)-free graphs for the total parameter
//! and the lifting solver on (P8 + t*P3)- or (2P4 + t*P3)-free graphs for
//! the semitotal one. Out-of-class callers get an error (total side) or
//! None (semitotal side); in-class verdicts are cross-checked elsewhere
//! against the exhaustive contraction search.

use crate::classes::{contains_induced, is_h_free};
use crate::contraction::{ct_characterization, CtError, CtValue};
use crate::domination::{gamma_bounded, DomKind, SolveError, SolverBudget};
use crate::graph::{disjoint_union, path, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFn {
    /// Recursion bound for the (P6 + k*P3)-free solver; parameter is k.
    TotalP6kP3(usize),
    /// Lifting bound; parameter is the vertex count of the class graph
    /// being lifted from.
    SemitotalLift(usize),
}

pub fn bound_value(b: BoundFn) -> u64 {
    match b {
        BoundFn::TotalP6kP3(k) => {
            let k = k as u64;
            k.pow(4) + 4 * k.pow(2) + 21 * k + 19
        }
        BoundFn::SemitotalLift(h_vertices) => 8 * h_vertices as u64,
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("graph is not in the solver's class")]
    NotInClass,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("gamma is 2; the contraction question is undefined")]
    Undefined,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph too small")]
    TooSmall,
    #[error("budget exhausted")]
    Timeout,
}

impl From<SolveError> for PolyError {
    fn from(e: SolveError) -> PolyError {
        match e {
            SolveError::IsolatedVertex(v) => PolyError::IsolatedVertex(v),
            SolveError::Timeout => PolyError::Timeout,
            SolveError::TooSmall | SolveError::NotInSet(_) => PolyError::TooSmall,
        }
    }
}

impl From<CtError> for PolyError {
    fn from(e: CtError) -> PolyError {
        match e {
            CtError::Disconnected => PolyError::Disconnected,
            CtError::TooSmall => PolyError::TooSmall,
            CtError::IsolatedVertex(v) => PolyError::IsolatedVertex(v),
            CtError::Timeout => PolyError::Timeout,
            CtError::Undefined => PolyError::Undefined,
            CtError::TheoryViolation => PolyError::TooSmall,
        }
    }
}

fn base_plus_p3s(base: &Graph, t: usize) -> Graph {
    let mut parts = vec![base.clone()];
    parts.extend(std::iter::repeat(path(3)).take(t));
    disjoint_union(&parts).expect("class patterns are small")
}

fn p6_kp3(k: usize) -> Graph {
    base_plus_p3s(&path(6), k)
}

/// Can gamma_t be lowered by at most two contractions, decided on
/// (P6 + k*P3)-free inputs by the published recursion: delegate down a
/// class level when possible, answer yes when gamma_t clears the bound,
/// otherwise fall back to the witness-based decision.
pub fn two_ec_total_p6kp3(g: &Graph, k: usize, budget: SolverBudget) -> Result<bool, PolyError> {
    if !g.is_connected() {
        return Err(PolyError::Disconnected);
    }
    if contains_induced(g, &p6_kp3(k)).is_some() {
        return Err(PolyError::NotInClass);
    }
    let gamma = gamma_bounded(g, DomKind::Total, budget, None)?.value;
    if gamma == 2 {
        return Err(PolyError::Undefined);
    }
    if k == 0 {
        // P6-free with gamma_t >= 3 always admits two contractions.
        return Ok(true);
    }
    if is_h_free(g, &p6_kp3(k - 1)) {
        return two_ec_total_p6kp3(g, k - 1, budget);
    }
    if gamma as u64 > bound_value(BoundFn::TotalP6kP3(k)) {
        return Ok(true);
    }
    let ct = ct_characterization(g, DomKind::Total, budget)?;
    Ok(matches!(ct.value, CtValue::One | CtValue::Two))
}

/// Semitotal analogue. Returns None when the graph fits no supported class
/// (it must be (B + t*P3)-free for B in {P8, 2P4} and some t <= 3).
pub fn two_ec_semitotal(g: &Graph, budget: SolverBudget) -> Result<Option<bool>, PolyError> {
    if !g.is_connected() {
        return Err(PolyError::Disconnected);
    }
    let two_p4 = disjoint_union(&[path(4), path(4)]).expect("2P4 within capacity");
    let bases = [path(8), two_p4];
    let mut fit: Option<(&Graph, usize)> = None;
    'scan: for t in 0..=3usize {
        for base in &bases {
            if is_h_free(g, &base_plus_p3s(base, t)) {
                fit = Some((base, t));
                break 'scan;
            }
        }
    }
    let Some((base, t)) = fit else {
        return Ok(None);
    };
    let gamma = gamma_bounded(g, DomKind::Semitotal, budget, None)?.value;
    if gamma == 2 {
        return Err(PolyError::Undefined);
    }
    lift_semitotal(g, base, t, gamma, budget).map(Some)
}

fn lift_semitotal(
    g: &Graph,
    base: &Graph,
    t: usize,
    gamma: usize,
    budget: SolverBudget,
) -> Result<bool, PolyError> {
    if t == 0 {
        // P8-free and 2P4-free graphs with gamma >= 3 are always yes-instances.
        return Ok(true);
    }
    let below = base_plus_p3s(base, t - 1);
    if is_h_free(g, &below) {
        return lift_semitotal(g, base, t - 1, gamma, budget);
    }
    if gamma as u64 > bound_value(BoundFn::SemitotalLift(below.vertex_count())) {
        return Ok(true);
    }
    let ct = ct_characterization(g, DomKind::Semitotal, budget)?;
    Ok(matches!(ct.value, CtValue::One | CtValue::Two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::k_edge_contraction;
    use crate::graph::cycle;

    fn b() -> SolverBudget {
        SolverBudget::default()
    }

    #[test]
    fn bound_values_pin_down() {
        assert_eq!(bound_value(BoundFn::TotalP6kP3(0)), 19);
        assert_eq!(bound_value(BoundFn::TotalP6kP3(2)), 93);
        assert_eq!(bound_value(BoundFn::SemitotalLift(8)), 64);
    }

    #[test]
    fn out_of_class_is_rejected() {
        assert_eq!(two_ec_total_p6kp3(&path(6), 0, b()), Err(PolyError::NotInClass));
        let long = path(10);
        assert_eq!(two_ec_total_p6kp3(&long, 0, b()), Err(PolyError::NotInClass));
    }

    #[test]
    fn p6_free_base_case_says_yes() {
        // C6 is P6-free (only 6 vertices, and its one 6-vertex subgraph is C6).
        assert_eq!(two_ec_total_p6kp3(&cycle(6), 0, b()), Ok(true));
        assert_eq!(two_ec_semitotal(&cycle(6), b()), Ok(Some(true)));
    }

    #[test]
    fn semitotal_no_instance_detected() {
        // P10 contains P8 and 2P4 but is (P8+P3)-free by size; its semitotal
        // contraction number is 3, so the verdict must be no.
        assert_eq!(two_ec_semitotal(&path(10), b()), Ok(Some(false)));
        assert_eq!(two_ec_semitotal(&path(7), b()), Ok(Some(true)));
    }

    #[test]
    fn no_supported_class_gives_none() {
        assert_eq!(two_ec_semitotal(&path(30), b()), Ok(None));
    }

    #[test]
    fn verdicts_match_search_on_small_corpus() {
        let mut done = 0;
        let mut seed = 0u64;
        while done < 12 {
            seed += 1;
            let n = 5 + (seed % 4) as usize;
            let g = match Graph::random_connected(n, 0.35, 5200 + seed) {
                Ok(g) => g,
                Err(_) => continue,
            };
            // Everything with n <= 8 is (P6+P3)-free by size.
            let verdict = match two_ec_total_p6kp3(&g, 1, b()) {
                Ok(v) => v,
                Err(PolyError::Undefined) => continue,
                Err(PolyError::NotInClass) => continue,
                Err(e) => panic!("unexpected {e}"),
            };
            let oracle = k_edge_contraction(&g, DomKind::Total, 2, b()).unwrap();
            assert_eq!(verdict, oracle, "seed {seed}");
            done += 1;
        }
    }
}

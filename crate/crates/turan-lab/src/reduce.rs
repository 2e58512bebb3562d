//! Iterative hole removal: find a (w,v)-hole, drop its vertices, shrink
//! (q,p) to (q-w, p-v), and repeat. Each removal raises the slack
//! gamma*p - q by at least the grid minimum theta0.

use crate::error::{Error, Result};
use crate::hypergraph::{UniformHypergraph, VertexSet};
use crate::property::{find_hole_within, has_property, verify_hole, Hole};
use crate::Rat;
use serde::{Deserialize, Serialize};

/// The slack gamma * p - q.
pub fn slack(q: i64, p: i64, gamma: Rat) -> Rat {
    gamma * Rat::from_integer(p) - Rat::from_integer(q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub hole: Hole,
    /// Parameters in force when the hole was found.
    pub q: usize,
    pub p: usize,
    #[serde(with = "crate::ratio_serde")]
    pub slack: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// No hole exists among the remaining vertices under the effective
    /// size cap (the requested ell, possibly lowered to q - 1 in verified
    /// mode so every step is a valid shrinking instance).
    HoleFree,
    /// Fewer live vertices remain than the cap asks for, and no hole fits
    /// among the ones left.
    VertexExhaustion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    #[serde(with = "crate::ratio_serde")]
    pub gamma: Rat,
    pub ell: usize,
    pub steps: Vec<ReductionStep>,
    pub final_vertices: VertexSet,
    pub terminated: Termination,
    /// True when every step's shrunken property instance was confirmed
    /// exhaustively.
    pub verified: bool,
}

/// Single-step shrinking check: given a (w,v)-hole Z of H with w < q,
/// does the rest of the graph have property (q-w, p-v)? Expected true
/// whenever H itself has property (q,p).
pub fn hole_shrink_check(h: &UniformHypergraph, z: &VertexSet, q: usize, p: usize) -> Result<bool> {
    // the gamma value is irrelevant here; only (w, v) matter, so accept
    // any set and read its parameters directly
    let w = z.len();
    let v = h.max_clique_size_within(z.mask());
    if w >= q {
        return Err(Error::DegenerateParameters(format!(
            "hole size w = {w} must stay below q = {q}"
        )));
    }
    if v >= p {
        return Err(Error::DegenerateParameters(format!(
            "hole clique number v = {v} must stay below p = {p}"
        )));
    }
    if p - v < h.r() {
        return Err(Error::DegenerateParameters(format!(
            "p - v = {} drops below the uniformity {}",
            p - v,
            h.r()
        )));
    }
    let rest = VertexSet::from_members((0..h.n()).filter(|&x| !z.contains(x)));
    let induced = h.induced(&rest)?;
    Ok(has_property(&induced, q - w, p - v)?.holds())
}

/// Run the reduction. With `verify` set, the starting property and every
/// step's shrunken property are confirmed exhaustively, and the hole size
/// cap is additionally clamped to q - 1 so each step is a valid shrinking
/// instance. Without it the pipeline only does bookkeeping.
pub fn run_reduction(
    h: &UniformHypergraph,
    q: usize,
    p: usize,
    gamma: Rat,
    ell: usize,
    verify: bool,
) -> Result<ReductionTrace> {
    if gamma <= Rat::from_integer(1) {
        return Err(Error::BadParams(format!("gamma = {gamma} must exceed 1")));
    }
    if verify && !has_property(h, q, p)?.holds() {
        return Err(Error::PropertyViolation(format!(
            "the input does not have property ({q},{p})"
        )));
    }
    let mut live = VertexSet::full(h.n());
    let mut qi = q as i64;
    let mut pi = p as i64;
    let mut steps = Vec::new();
    let mut terminated = Termination::VertexExhaustion;
    while qi > 0 && pi > 0 && !live.is_empty() {
        let mut cap = ell;
        if verify {
            cap = cap.min((qi - 1).max(0) as usize);
        }
        let vertex_limited = live.len() < cap;
        cap = cap.min(live.len());
        let hole = find_hole_within(h, &live, gamma, cap)?;
        let hole = match hole {
            Some(hole) => hole,
            None => {
                terminated = if vertex_limited {
                    Termination::VertexExhaustion
                } else {
                    Termination::HoleFree
                };
                break;
            }
        };
        debug_assert!(verify_hole(h, &hole.z, gamma).is_ok());
        steps.push(ReductionStep {
            hole: hole.clone(),
            q: qi as usize,
            p: pi as usize,
            slack: slack(qi, pi, gamma),
        });
        live = VertexSet::from_members(
            live.members().into_iter().filter(|&x| !hole.z.contains(x)),
        );
        qi -= hole.w as i64;
        pi -= hole.v as i64;
        if verify && pi >= h.r() as i64 && qi >= pi {
            let induced = h.induced(&live)?;
            if !has_property(&induced, qi as usize, pi as usize)?.holds() {
                return Err(Error::PropertyViolation(format!(
                    "after removing {:?} the rest lacks property ({qi},{pi})",
                    hole.z.members()
                )));
            }
        }
    }
    Ok(ReductionTrace { gamma, ell, steps, final_vertices: live, terminated, verified: verify })
}

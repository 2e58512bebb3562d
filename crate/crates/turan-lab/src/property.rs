//! The (q,p) covering property, its complement-side duality self-check,
//! and (w,v)-hole search.
//!
//! A hypergraph has property (q,p) when every q-subset of its vertices
//! contains a clique of size p. Sets of fewer than r vertices count as
//! cliques, so p below r makes the property trivial and is rejected.

use crate::comb::k_subsets;
use crate::error::{Error, Result};
use crate::hypergraph::{UniformHypergraph, VertexSet};
use crate::{oracle, Rat};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Number of q-subsets above which the scan switches to the parallel path.
const PARALLEL_THRESHOLD: u64 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PropertyVerdict {
    Holds,
    /// The colex-least q-subset with no p-clique inside it.
    Fails { witness: VertexSet },
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PropertyVerdict::Holds)
    }
}

fn check_params(h: &UniformHypergraph, q: usize, p: usize) -> Result<()> {
    if p < h.r() {
        return Err(Error::DegenerateParameters(format!(
            "p = {p} below the uniformity r = {} makes the property trivial",
            h.r()
        )));
    }
    if q < p {
        return Err(Error::DegenerateParameters(format!("q = {q} is smaller than p = {p}")));
    }
    Ok(())
}

/// Decide property (q,p), returning the colex-least failing q-subset on
/// failure. Vacuously true when q exceeds the vertex count.
pub fn has_property(h: &UniformHypergraph, q: usize, p: usize) -> Result<PropertyVerdict> {
    check_params(h, q, p)?;
    if q > h.n() {
        return Ok(PropertyVerdict::Holds);
    }
    let total = crate::comb::binomial(h.n() as u64, q as u64);
    if total > PARALLEL_THRESHOLD {
        return Ok(has_property_parallel(h, q, p));
    }
    // certificates: p-cliques already found; any q-set containing one is
    // covered without a fresh search
    let mut certificates: Vec<u128> = Vec::new();
    for qmask in k_subsets(h.n(), q) {
        if certificates.iter().any(|&c| c & !qmask == 0) {
            continue;
        }
        match h.find_clique_of_size(qmask, p) {
            Some(clique) => certificates.push(clique),
            None => return Ok(PropertyVerdict::Fails { witness: VertexSet(qmask) }),
        }
    }
    Ok(PropertyVerdict::Holds)
}

fn has_property_parallel(h: &UniformHypergraph, q: usize, p: usize) -> PropertyVerdict {
    let masks: Vec<u128> = k_subsets(h.n(), q).collect();
    let failing = masks
        .par_iter()
        .filter(|&&qmask| h.find_clique_of_size(qmask, p).is_none())
        .min();
    match failing {
        Some(&witness) => PropertyVerdict::Fails { witness: VertexSet(witness) },
        None => PropertyVerdict::Holds,
    }
}

/// Cross-check two equivalent readings of property (q,p): the direct
/// clique scan, and the complement-side one (in every q-subset, the
/// complement restricted to that subset has an edge-free set of size p,
/// checked by the naive oracle). Returns the shared verdict; errors if the
/// two routes disagree.
pub fn duality_check(h: &UniformHypergraph, q: usize, p: usize) -> Result<bool> {
    check_params(h, q, p)?;
    let direct = has_property(h, q, p)?.holds();
    let comp = h.complement();
    let via_complement = if q > h.n() {
        true
    } else {
        k_subsets(h.n(), q).try_fold(true, |acc, qmask| -> Result<bool> {
            if !acc {
                return Ok(false);
            }
            let ind = comp.induced(&VertexSet(qmask))?;
            Ok(oracle::naive_independence_number(&ind) >= p)
        })?
    };
    if direct != via_complement {
        return Err(Error::PropertyViolation(format!(
            "routes disagree on ({q},{p}): direct = {direct}, complement = {via_complement}"
        )));
    }
    Ok(direct)
}

/// A (w,v)-hole: a vertex set Z of size w whose induced clique number is
/// v, with w strictly greater than gamma * v.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hole {
    pub z: VertexSet,
    pub w: usize,
    pub v: usize,
}

/// First hole by ascending size w, then colex order of Z, inside the
/// whole vertex set. Only sets of size at most `ell` are considered.
pub fn find_hole(h: &UniformHypergraph, gamma: Rat, ell: usize) -> Result<Option<Hole>> {
    find_hole_within(h, &VertexSet::full(h.n()), gamma, ell)
}

/// Hole search restricted to `within`, keeping original vertex labels.
pub fn find_hole_within(
    h: &UniformHypergraph,
    within: &VertexSet,
    gamma: Rat,
    ell: usize,
) -> Result<Option<Hole>> {
    if gamma <= Rat::from_integer(0) {
        return Err(Error::BadParams(format!("gamma = {gamma} must be positive")));
    }
    // the smallest candidate size: a hole needs w > gamma * v with
    // v >= min(w, r-1), so sizes up to gamma*(r-1) can never qualify
    let v_floor = h.r() - 1;
    let w_start = (floor_rat(gamma * Rat::from_integer(v_floor as i64)) + 1).max(v_floor as i64 + 1);
    let cap = ell.min(within.len());
    for w in (w_start as usize)..=cap {
        let mut found: Option<Hole> = None;
        crate::comb::for_each_k_subset_of_mask(within.mask(), w, |zmask| {
            let v = h.max_clique_size_within(zmask);
            if Rat::from_integer(w as i64) > gamma * Rat::from_integer(v as i64) {
                found = Some(Hole { z: VertexSet(zmask), w, v });
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn floor_rat(r: Rat) -> i64 {
    r.floor().to_integer()
}

/// Check that a given set is a hole for the stated parameters.
pub fn verify_hole(h: &UniformHypergraph, z: &VertexSet, gamma: Rat) -> Result<Hole> {
    let w = z.len();
    let v = h.max_clique_size_within(z.mask());
    if Rat::from_integer(w as i64) > gamma * Rat::from_integer(v as i64) {
        Ok(Hole { z: *z, w, v })
    } else {
        Err(Error::NotAHole(format!(
            "|Z| = {w} does not exceed gamma * v = {}",
            gamma * Rat::from_integer(v as i64)
        )))
    }
}

/// The minimum slack w - gamma*v over the admissible grid: integer pairs
/// with r-1 <= v, v < w <= ell and w > gamma*v.
pub fn theta0(gamma: Rat, ell: usize, r: usize) -> Result<Rat> {
    if gamma <= Rat::from_integer(0) {
        return Err(Error::BadParams(format!("gamma = {gamma} must be positive")));
    }
    if r < 2 {
        return Err(Error::BadParams(format!("uniformity r = {r} must be at least 2")));
    }
    let mut best: Option<Rat> = None;
    for v in (r - 1)..=ell {
        let gv = gamma * Rat::from_integer(v as i64);
        let w = (floor_rat(gv) + 1).max(v as i64 + 1);
        if w as usize > ell {
            continue;
        }
        let slack = Rat::from_integer(w) - gv;
        if best.map_or(true, |b| slack < b) {
            best = Some(slack);
        }
    }
    best.ok_or(Error::EmptyGrid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, f5};
    use crate::UniformHypergraph;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn property_basics() {
        let k5 = complete(5, 3).unwrap();
        assert!(has_property(&k5, 4, 4).unwrap().holds());
        assert!(has_property(&k5, 5, 5).unwrap().holds());

        let empty = UniformHypergraph::new(6, 3, &[]).unwrap();
        match has_property(&empty, 4, 3).unwrap() {
            PropertyVerdict::Fails { witness } => {
                assert_eq!(witness, VertexSet::from_members([0, 1, 2, 3]))
            }
            _ => panic!("empty graph cannot have the property"),
        }
        // vacuous when q exceeds n
        assert!(has_property(&empty, 7, 3).unwrap().holds());
    }

    #[test]
    fn property_rejects_degenerate_parameters() {
        let k5 = complete(5, 3).unwrap();
        assert!(matches!(
            has_property(&k5, 4, 2),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            has_property(&k5, 3, 4),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn property_failing_witness_is_colex_least() {
        // two disjoint complete 3-graphs on 4 vertices each; every 5-subset
        // meeting both parts in at least 2 vertices has clique number 4 or
        // less only when split 3+2 or 2+3, and the colex-least 5-set with
        // no 4-clique mixes the parts.
        let mut edges = Vec::new();
        for e in complete(4, 3).unwrap().edge_lists() {
            edges.push(e.clone());
            edges.push(e.iter().map(|v| v + 4).collect());
        }
        let h = UniformHypergraph::new(8, 3, &edges).unwrap();
        match has_property(&h, 5, 4).unwrap() {
            PropertyVerdict::Fails { witness } => {
                assert_eq!(witness, VertexSet::from_members([0, 1, 2, 4, 5]));
                // the oracle agrees there is no 4-clique in the witness
                let ind = h.induced(&witness).unwrap();
                assert!(crate::oracle::naive_clique_number(&ind) < 4);
            }
            _ => panic!("split construction must fail (5,4)"),
        }
    }

    #[test]
    fn property_agrees_with_oracle_on_f5() {
        let f5 = f5();
        for q in 3..=5 {
            for p in 3..=q {
                assert_eq!(
                    has_property(&f5, q, p).unwrap().holds(),
                    crate::oracle::naive_has_property(&f5, q, p),
                    "({q},{p})"
                );
            }
        }
    }

    #[test]
    fn duality_routes_agree() {
        // every 4-subset of F5 contains one of its three edges
        let f5 = f5();
        assert!(duality_check(&f5, 4, 3).unwrap());
        assert!(duality_check(&f5, 5, 3).unwrap());
        let k5 = complete(5, 3).unwrap();
        assert!(duality_check(&k5, 4, 4).unwrap());
        let empty = UniformHypergraph::new(5, 3, &[]).unwrap();
        assert!(!duality_check(&empty, 4, 3).unwrap());
    }

    #[test]
    fn hole_in_f5_plus_isolated_vertex() {
        // F5 together with an isolated sixth vertex
        let f5e = f5().edge_lists();
        let h = UniformHypergraph::new(6, 3, &f5e).unwrap();
        let hole = find_hole(&h, rat(3, 2), 5).unwrap().unwrap();
        // first edge-free 4-set in colex order
        assert_eq!(hole.w, 4);
        assert_eq!(hole.v, 2);
        assert_eq!(hole.z, VertexSet::from_members([0, 2, 3, 5]));
        assert!(verify_hole(&h, &hole.z, rat(3, 2)).is_ok());
    }

    #[test]
    fn complete_graph_is_hole_free() {
        let k6 = complete(6, 3).unwrap();
        assert!(find_hole(&k6, rat(3, 2), 6).unwrap().is_none());
        assert!(find_hole(&k6, rat(2, 1), 6).unwrap().is_none());
    }

    #[test]
    fn verify_hole_rejects_non_holes() {
        let k6 = complete(6, 3).unwrap();
        let z = VertexSet::from_members([0, 1, 2, 3]);
        assert!(matches!(verify_hole(&k6, &z, rat(3, 2)), Err(Error::NotAHole(_))));
    }

    #[test]
    fn theta0_grid() {
        assert_eq!(theta0(rat(2, 1), 5, 3).unwrap(), rat(1, 1));
        assert_eq!(theta0(rat(3, 2), 6, 3).unwrap(), rat(1, 2));
        assert_eq!(theta0(rat(3, 2), 4, 3).unwrap(), rat(1, 1));
        assert!(matches!(theta0(rat(2, 1), 4, 3), Err(Error::EmptyGrid)));
    }

    #[test]
    fn hole_slack_never_undercuts_theta0() {
        // every hole found under (gamma, ell) has slack at least theta0
        let f5e = f5().edge_lists();
        let h = UniformHypergraph::new(6, 3, &f5e).unwrap();
        for (gn, gd, ell) in [(3i64, 2i64, 5usize), (2, 1, 5), (3, 2, 4)] {
            let gamma = rat(gn, gd);
            if let Some(hole) = find_hole(&h, gamma, ell).unwrap() {
                let slack = Rat::from_integer(hole.w as i64)
                    - gamma * Rat::from_integer(hole.v as i64);
                assert!(slack >= theta0(gamma, ell, h.r()).unwrap());
            }
        }
    }
}

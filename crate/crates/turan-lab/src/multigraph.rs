//! Multigraphs with integer edge multiplicities: the (a+1)-subset
//! hypothesis, the edge-count lower bound it forces, the graph-case closed
//! form for the minimum edge count, and the link-union helper that builds
//! such multigraphs out of a 3-graph and a clique.

use crate::comb::{binomial, for_each_k_subset_of_mask, indices_of_mask, k_subsets};
use crate::error::{Error, Result};
use crate::hypergraph::{UniformHypergraph, VertexSet};
use crate::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    /// Pair (u, v) with u < v mapped to its multiplicity; absent pairs
    /// have multiplicity zero.
    mult: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("n must be at least 1".into()));
        }
        Ok(Multigraph { n, mult: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_mult(&mut self, u: usize, v: usize, m: u64) -> Result<()> {
        if u == v {
            return Err(Error::BadParams(format!("loop at vertex {u}")));
        }
        let (u, v) = (u.min(v), u.max(v));
        if v >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
        }
        if m == 0 {
            self.mult.remove(&(u, v));
        } else {
            self.mult.insert((u, v), m);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let cur = self.mult_of(u, v);
        self.set_mult(u, v, cur + 1)
    }

    pub fn mult_of(&self, u: usize, v: usize) -> u64 {
        let (u, v) = (u.min(v), u.max(v));
        self.mult.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Total edge count with multiplicities.
    pub fn edge_sum(&self) -> u64 {
        self.mult.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HypothesisVerdict {
    Holds,
    /// Colex-least (a+1)-subset inducing no pair of multiplicity >= 2.
    Fails { witness: VertexSet },
}

impl HypothesisVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, HypothesisVerdict::Holds)
    }
}

/// Does every (a+1)-subset of vertices induce at least one pair with
/// multiplicity at least 2? Vacuously true when a + 1 exceeds n.
pub fn hypothesis_holds(g: &Multigraph, a: usize) -> Result<HypothesisVerdict> {
    if a < 2 {
        return Err(Error::BadParams(format!("a = {a} must be at least 2")));
    }
    if a + 1 > g.n() {
        return Ok(HypothesisVerdict::Holds);
    }
    for smask in k_subsets(g.n(), a + 1) {
        let has_heavy_pair = !for_each_k_subset_of_mask(smask, 2, |pair| {
            let vs = indices_of_mask(pair);
            g.mult_of(vs[0], vs[1]) < 2
        });
        if !has_heavy_pair {
            return Ok(HypothesisVerdict::Fails { witness: VertexSet::from_members(indices_of_mask(smask)) });
        }
    }
    Ok(HypothesisVerdict::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lhs: u64,
    #[serde(with = "crate::ratio_serde")]
    pub rhs: Rat,
    pub satisfied: bool,
}

/// The forced lower bound: once the hypothesis holds, the total edge count
/// is at least (2/a) C(n,2) - n.
pub fn bound_check(g: &Multigraph, a: usize) -> Result<BoundCheck> {
    if !hypothesis_holds(g, a)?.holds() {
        return Err(Error::HypothesisFails);
    }
    let lhs = g.edge_sum();
    let n = g.n() as i64;
    let rhs = Rat::new(2, a as i64) * Rat::from_integer(n * (n - 1) / 2) - Rat::from_integer(n);
    let satisfied = Rat::from_integer(lhs as i64) >= rhs;
    Ok(BoundCheck { lhs, rhs, satisfied })
}

/// Edge count of the complete s-partite graph on n vertices with parts as
/// equal as possible.
pub fn turan_edge_count(n: u64, s: u64) -> u64 {
    if s == 0 {
        return 0;
    }
    let s = s.min(n);
    let b = n / s;
    let t = n % s;
    binomial(n, 2) - (t * binomial(b + 1, 2) + (s - t) * binomial(b, 2))
}

/// Minimum edge count of an n-vertex graph in which every q-subset spans
/// an edge: the complement of the densest (q-1)-partite graph.
pub fn t2_closed_form(n: u64, q: u64) -> Result<u64> {
    if q < 2 || q > n {
        return Err(Error::BadParams(format!("need 2 <= q <= n, got q = {q}, n = {n}")));
    }
    Ok(binomial(n, 2) - turan_edge_count(n, q - 1))
}

/// Union with multiplicities of the link graphs of the given clique
/// vertices of a 3-graph: the result lives on the remaining vertices,
/// relabelled ascending, and the pair {y, z} has multiplicity
/// #{c in clique : {c, y, z} is an edge}.
pub fn link_union(h: &UniformHypergraph, clique: &VertexSet) -> Result<Multigraph> {
    if h.r() != 3 {
        return Err(Error::UniformityMismatch { left: h.r(), right: 3 });
    }
    if !clique.is_subset_of(&VertexSet::full(h.n())) {
        let bad = clique.members().into_iter().find(|&v| v >= h.n()).unwrap();
        return Err(Error::OutOfRangeVertex { vertex: bad, n: h.n() });
    }
    let rest: Vec<usize> = (0..h.n()).filter(|&v| !clique.contains(v)).collect();
    if rest.len() < 2 {
        return Err(Error::BadParams("fewer than two vertices outside the clique".into()));
    }
    let mut relabel = vec![usize::MAX; h.n()];
    for (new, &old) in rest.iter().enumerate() {
        relabel[old] = new;
    }
    let mut g = Multigraph::new(rest.len())?;
    for c in clique.members() {
        for e in h.edge_lists() {
            if e.contains(&c) {
                let outside: Vec<usize> =
                    e.iter().copied().filter(|&v| v != c && !clique.contains(v)).collect();
                if outside.len() == 2 {
                    g.add_edge(relabel[outside[0]], relabel[outside[1]])?;
                }
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doubled_complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_mult(u, v, 2).unwrap();
            }
        }
        g
    }

    /// Simple Turán graph edges plus doubled complement edges on 6
    /// vertices with 3 parts of size 2.
    fn turan_mixed_6_3() -> Multigraph {
        let parts = [vec![0usize, 1], vec![2, 3], vec![4, 5]];
        let part_of = |v: usize| parts.iter().position(|p| p.contains(&v)).unwrap();
        let mut g = Multigraph::new(6).unwrap();
        for u in 0..6 {
            for v in (u + 1)..6 {
                let m = if part_of(u) == part_of(v) { 2 } else { 1 };
                g.set_mult(u, v, m).unwrap();
            }
        }
        g
    }

    #[test]
    fn hypothesis_examples() {
        assert!(hypothesis_holds(&doubled_complete(5), 2).unwrap().holds());
        // all multiplicities 1: the very first triple violates
        let mut simple = Multigraph::new(5).unwrap();
        for u in 0..5 {
            for v in (u + 1)..5 {
                simple.set_mult(u, v, 1).unwrap();
            }
        }
        match hypothesis_holds(&simple, 2).unwrap() {
            HypothesisVerdict::Fails { witness } => {
                assert_eq!(witness, VertexSet::from_members([0, 1, 2]))
            }
            _ => panic!("simple graph cannot satisfy the hypothesis"),
        }
        // every 4-subset of the 3-part Turán layout has two vertices in
        // one part, and that pair is doubled
        assert!(hypothesis_holds(&turan_mixed_6_3(), 3).unwrap().holds());
    }

    #[test]
    fn bound_examples() {
        // doubled complement of the 3-partite graph alone
        let mut g = Multigraph::new(6).unwrap();
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.set_mult(u, v, 2).unwrap();
        }
        let chk = bound_check(&g, 3).unwrap();
        assert_eq!(chk.lhs, 6);
        assert_eq!(chk.rhs, Rat::from_integer(4));
        assert!(chk.satisfied);

        let chk = bound_check(&doubled_complete(5), 2).unwrap();
        assert_eq!(chk.lhs, 20);
        assert_eq!(chk.rhs, Rat::from_integer(5));
        assert!(chk.satisfied);

        let mut simple = Multigraph::new(4).unwrap();
        simple.set_mult(0, 1, 1).unwrap();
        assert!(matches!(bound_check(&simple, 2), Err(Error::HypothesisFails)));
    }

    #[test]
    fn bound_holds_on_all_small_hypothesis_instances() {
        // every multiplicity <= 2 multigraph on 5 vertices
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
        let npairs = pairs.len();
        let mut code = vec![0u8; npairs];
        loop {
            let mut g = Multigraph::new(5).unwrap();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                g.set_mult(u, v, code[i] as u64).unwrap();
            }
            for a in 2..=3usize {
                if hypothesis_holds(&g, a).unwrap().holds() {
                    assert!(bound_check(&g, a).unwrap().satisfied);
                }
            }
            // advance base-3 odometer
            let mut i = 0;
            loop {
                if i == npairs {
                    return;
                }
                code[i] += 1;
                if code[i] < 3 {
                    break;
                }
                code[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_edge_count(6, 3), 12);
        assert_eq!(turan_edge_count(8, 4), 24);
        assert_eq!(turan_edge_count(7, 3), 16);
        assert_eq!(turan_edge_count(5, 5), 10);
    }

    #[test]
    fn t2_values() {
        assert_eq!(t2_closed_form(6, 4).unwrap(), 3);
        assert_eq!(t2_closed_form(8, 5).unwrap(), 4);
        for n in 2..=8u64 {
            assert_eq!(t2_closed_form(n, 2).unwrap(), binomial(n, 2));
        }
        assert!(t2_closed_form(4, 9).is_err());
    }

    #[test]
    fn t2_density_trend() {
        // T2(n,q)/C(n,2) approaches 1/(q-1)
        for q in 3..=5u64 {
            for n in (2 * q)..=30 {
                let ratio = Rat::new(
                    t2_closed_form(n, q).unwrap() as i64,
                    binomial(n, 2) as i64,
                );
                let target = Rat::new(1, q as i64 - 1);
                let diff = if ratio > target { ratio - target } else { target - ratio };
                assert!(diff <= Rat::new(2, n as i64), "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn link_union_counts() {
        // complete 3-graph on 6 vertices, clique {0, 1}: each outside pair
        // {y, z} appears with both clique vertices
        let k6 = crate::constructions::complete(6, 3).unwrap();
        let g = link_union(&k6, &VertexSet::from_members([0, 1])).unwrap();
        assert_eq!(g.n(), 4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert_eq!(g.mult_of(u, v), 2);
            }
        }
        assert_eq!(g.edge_sum(), 12);

        // the H_a graph at a = 2 with clique P = {0..3}: every Q-pair has
        // all four links, so the link union on Q is a 4-fold triangle
        let ha = crate::constructions::h_a(2).unwrap();
        let g = link_union(&ha, &VertexSet::from_members([0, 1, 2, 3])).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_sum(), 12);
        assert!(hypothesis_holds(&g, 2).unwrap().holds());
    }
}

//! The canonical r-uniform hypergraph type and its exact subroutines:
//! cliques, independent sets, induced subhypergraphs and embedding search.
//!
//! Vertices are 0-based contiguous integers below [`MAX_VERTICES`]. Edges
//! are stored as sorted vertex bitmasks, so the stored order is colex and
//! all witness tie-breaks ("colex-least") reduce to numeric minima.

use crate::comb::{
    for_each_k_subset_of_mask, indices_of_mask, k_subsets, lowest_k_bits, mask_from_indices,
};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard cap on the vertex count; a vertex set must fit in a u128 mask.
pub const MAX_VERTICES: usize = 127;

/// A subset of the vertex universe {0..n-1}, iterated ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
#[derive(Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(pub(crate) u128);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        VertexSet(if n == 0 { 0 } else { (1u128 << n) - 1 })
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(mask_from_indices(it))
    }

    pub fn mask(&self) -> u128 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v <= MAX_VERTICES && self.0 & (1u128 << v) != 0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<usize> {
        indices_of_mask(self.0)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Vec<usize> {
        s.members()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = String;

    fn try_from(v: Vec<usize>) -> std::result::Result<Self, String> {
        for &x in &v {
            if x > MAX_VERTICES {
                return Err(format!("vertex {x} exceeds the supported universe"));
            }
        }
        Ok(VertexSet::from_members(v))
    }
}

/// An injective map from pattern vertices to host vertices in which every
/// pattern edge lands on a host edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// `map[i]` is the host vertex carrying pattern vertex `i`.
    pub map: Vec<usize>,
}

/// Verdict of a family-freeness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FamilyVerdict {
    Free,
    Contains { index: usize, embedding: Embedding },
}

impl FamilyVerdict {
    pub fn is_free(&self) -> bool {
        matches!(self, FamilyVerdict::Free)
    }
}

/// An r-uniform hypergraph on vertices {0..n-1}, edges canonical and
/// duplicate-free. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    /// Edge bitmasks, strictly ascending (= colex order on r-subsets).
    edges: Vec<u128>,
}

impl UniformHypergraph {
    /// Build a hypergraph, validating and canonicalizing the edge list.
    pub fn new(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("n must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::BadParams(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )));
        }
        if r < 2 {
            return Err(Error::BadParams(format!("uniformity r = {r} must be at least 2")));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            if e.len() != r {
                return Err(Error::WrongEdgeSize { edge: e.clone(), expected: r, got: e.len() });
            }
            let mut m = 0u128;
            for &v in e {
                if v >= n {
                    return Err(Error::OutOfRangeVertex { vertex: v, n });
                }
                if m & (1u128 << v) != 0 {
                    return Err(Error::DuplicateVertexInEdge { edge: e.clone() });
                }
                m |= 1u128 << v;
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(UniformHypergraph { n, r, edges: masks })
    }

    /// Build from already-validated edge masks (internal constructors).
    pub(crate) fn from_masks(n: usize, r: usize, mut masks: Vec<u128>) -> Self {
        debug_assert!(n >= 1 && n <= MAX_VERTICES && r >= 2);
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(masks.iter().all(|m| m.count_ones() as usize == r
            && indices_of_mask(*m).iter().all(|&v| v < n)));
        UniformHypergraph { n, r, edges: masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edge_masks(&self) -> &[u128] {
        &self.edges
    }

    /// Edges as sorted vertex lists, in colex order.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&m| indices_of_mask(m)).collect()
    }

    pub fn has_edge(&self, mask: u128) -> bool {
        self.edges.binary_search(&mask).is_ok()
    }

    /// The complement: every r-subset flips membership.
    pub fn complement(&self) -> UniformHypergraph {
        let masks = k_subsets(self.n, self.r).filter(|m| !self.has_edge(*m)).collect();
        UniformHypergraph { n: self.n, r: self.r, edges: masks }
    }

    /// Induced subhypergraph on `s`, relabelled ascending to {0..|s|-1}.
    pub fn induced(&self, s: &VertexSet) -> Result<UniformHypergraph> {
        if !s.is_subset_of(&VertexSet::full(self.n)) {
            let bad = s.members().into_iter().find(|&v| v >= self.n).unwrap();
            return Err(Error::OutOfRangeVertex { vertex: bad, n: self.n });
        }
        let verts = s.members();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            relabel[old] = new;
        }
        let masks = self
            .edges
            .iter()
            .filter(|&&e| e & !s.0 == 0)
            .map(|&e| mask_from_indices(indices_of_mask(e).into_iter().map(|v| relabel[v])))
            .collect();
        Ok(UniformHypergraph { n: verts.len().max(1), r: self.r, edges: masks })
    }

    /// Can `v` be added to the partial clique `clique`? Checks every
    /// r-subset of `clique ∪ {v}` that contains `v`.
    pub(crate) fn can_extend_clique(&self, clique: u128, v: usize) -> bool {
        let size = clique.count_ones() as usize;
        if size + 1 < self.r {
            return true;
        }
        for_each_k_subset_of_mask(clique, self.r - 1, |t| self.has_edge(t | (1u128 << v)))
    }

    /// Is `set` a clique? Sets of size below r are cliques by convention.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        if set.len() < self.r {
            return true;
        }
        for_each_k_subset_of_mask(set.0, self.r, |t| self.has_edge(t))
    }

    /// Maximum clique size inside `within`, with the convention that any
    /// set of size <= r-1 is a clique.
    pub(crate) fn max_clique_size_within(&self, within: u128) -> usize {
        let m = within.count_ones() as usize;
        let mut best = m.min(self.r - 1);
        let verts = indices_of_mask(within);
        self.clique_size_dfs(0, 0, &verts, &mut best);
        best
    }

    fn clique_size_dfs(&self, clique: u128, size: usize, cands: &[usize], best: &mut usize) {
        for (i, &v) in cands.iter().enumerate() {
            if size + (cands.len() - i) <= *best {
                return;
            }
            if self.can_extend_clique(clique, v) {
                let c2 = clique | (1u128 << v);
                if size + 1 > *best {
                    *best = size + 1;
                }
                let next: Vec<usize> = cands[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| self.can_extend_clique(c2, u))
                    .collect();
                self.clique_size_dfs(c2, size + 1, &next, best);
            }
        }
    }

    /// Colex-least clique of exactly size k inside `within`, assuming one
    /// exists. Picks elements largest-first, trying small vertices first;
    /// the first complete solution of that DFS is the colex minimum.
    fn colex_least_clique(&self, within: u128, k: usize) -> Option<u128> {
        if k == 0 {
            return Some(0);
        }
        let verts = indices_of_mask(within);
        let mut chosen = 0u128;
        if self.colex_descend(&verts, verts.len(), k, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn colex_descend(&self, verts: &[usize], limit: usize, need: usize, chosen: &mut u128) -> bool {
        if need == 0 {
            return true;
        }
        for idx in (need - 1)..limit {
            let v = verts[idx];
            if self.can_extend_clique(*chosen, v) {
                *chosen |= 1u128 << v;
                if self.colex_descend(verts, idx, need - 1, chosen) {
                    return true;
                }
                *chosen &= !(1u128 << v);
            }
        }
        false
    }

    /// Any clique of exactly size `p` inside `within`, or `None`.
    pub(crate) fn find_clique_of_size(&self, within: u128, p: usize) -> Option<u128> {
        let m = within.count_ones() as usize;
        if p > m {
            return None;
        }
        if p <= self.r - 1 {
            return Some(lowest_k_bits(within, p));
        }
        let verts = indices_of_mask(within);
        self.find_clique_dfs(0, 0, &verts, p)
    }

    fn find_clique_dfs(&self, clique: u128, size: usize, cands: &[usize], p: usize) -> Option<u128> {
        if size == p {
            return Some(clique);
        }
        for (i, &v) in cands.iter().enumerate() {
            if size + (cands.len() - i) < p {
                return None;
            }
            if self.can_extend_clique(clique, v) {
                let c2 = clique | (1u128 << v);
                let next: Vec<usize> = cands[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| self.can_extend_clique(c2, u))
                    .collect();
                if let Some(found) = self.find_clique_dfs(c2, size + 1, &next, p) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Clique number with a colex-least maximum witness.
    pub fn clique_number(&self) -> (usize, VertexSet) {
        self.clique_number_within(&VertexSet::full(self.n))
    }

    /// Clique number restricted to `within`.
    pub fn clique_number_within(&self, within: &VertexSet) -> (usize, VertexSet) {
        let k = self.max_clique_size_within(within.0);
        if k == 0 {
            return (0, VertexSet::empty());
        }
        let witness = if k <= self.r - 1 {
            // all such sets are vacuous cliques; the colex minimum is the
            // k smallest vertices
            lowest_k_bits(within.0, k)
        } else {
            self.colex_least_clique(within.0, k)
                .expect("a maximum clique of the computed size exists")
        };
        (k, VertexSet(witness))
    }

    /// Independence number with a colex-least maximum witness; dual to the
    /// clique number of the complement.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        self.complement().clique_number()
    }

    /// First (lexicographic vertex-assignment order) embedding of `pattern`
    /// into `self`, mapping every pattern edge onto a host edge.
    pub fn contains_subhypergraph(&self, pattern: &UniformHypergraph) -> Result<Option<Embedding>> {
        if pattern.r != self.r {
            return Err(Error::UniformityMismatch { left: self.r, right: pattern.r });
        }
        if pattern.n > self.n {
            return Ok(None);
        }
        // pattern edges grouped by their largest vertex, so each edge is
        // checked as soon as it is fully assigned
        let mut by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); pattern.n];
        for e in pattern.edge_lists() {
            let max = *e.last().unwrap();
            by_max[max].push(e);
        }
        let mut map = vec![usize::MAX; pattern.n];
        let mut used = 0u128;
        if self.embed_dfs(pattern, &by_max, &mut map, &mut used, 0) {
            Ok(Some(Embedding { map }))
        } else {
            Ok(None)
        }
    }

    fn embed_dfs(
        &self,
        pattern: &UniformHypergraph,
        by_max: &[Vec<Vec<usize>>],
        map: &mut Vec<usize>,
        used: &mut u128,
        next: usize,
    ) -> bool {
        if next == pattern.n {
            return true;
        }
        for host in 0..self.n {
            let bit = 1u128 << host;
            if *used & bit != 0 {
                continue;
            }
            map[next] = host;
            let ok = by_max[next].iter().all(|e| {
                let image = mask_from_indices(e.iter().map(|&pv| map[pv]));
                self.has_edge(image)
            });
            if ok {
                *used |= bit;
                if self.embed_dfs(pattern, by_max, map, used, next + 1) {
                    return true;
                }
                *used &= !bit;
            }
        }
        map[next] = usize::MAX;
        false
    }

    /// Freeness with respect to a family: the first member (in list order)
    /// that embeds wins.
    pub fn is_family_free(&self, family: &[UniformHypergraph]) -> Result<FamilyVerdict> {
        for (index, f) in family.iter().enumerate() {
            if let Some(embedding) = self.contains_subhypergraph(f)? {
                return Ok(FamilyVerdict::Contains { index, embedding });
            }
        }
        Ok(FamilyVerdict::Free)
    }

    /// Maximum total weight of an independent set, by branch and bound.
    /// Weights are per vertex; the empty set has weight 0.
    pub fn max_weight_independent_set(&self, weights: &[u64]) -> Result<u64> {
        if weights.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: weights.len() });
        }
        let mut suffix = vec![0u64; self.n + 1];
        for v in (0..self.n).rev() {
            suffix[v] = suffix[v + 1] + weights[v];
        }
        let mut best = 0u64;
        self.mwis_dfs(0, 0u128, 0, weights, &suffix, &mut best);
        Ok(best)
    }

    fn mwis_dfs(
        &self,
        v: usize,
        chosen: u128,
        weight: u64,
        weights: &[u64],
        suffix: &[u64],
        best: &mut u64,
    ) {
        if weight > *best {
            *best = weight;
        }
        if v == self.n || weight + suffix[v] <= *best {
            return;
        }
        // include v unless it closes an edge
        let with_v = chosen | (1u128 << v);
        if self.edges.iter().all(|&e| e & with_v != e) {
            self.mwis_dfs(v + 1, with_v, weight + weights[v], weights, suffix, best);
        }
        self.mwis_dfs(v + 1, chosen, weight, weights, suffix, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, f5};
    use crate::oracle;
    use proptest::prelude::*;

    fn edges(list: &[[usize; 3]]) -> Vec<Vec<usize>> {
        list.iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn construction_examples() {
        let f5 = f5();
        assert_eq!((f5.n(), f5.r(), f5.edge_count()), (5, 3, 3));
        let k4 = complete(4, 3).unwrap();
        assert_eq!(k4.edge_count(), 4);
        let empty = UniformHypergraph::new(5, 3, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn construction_rejects_malformed_edges() {
        assert!(matches!(
            UniformHypergraph::new(5, 3, &edges(&[[0, 1, 5]])),
            Err(Error::OutOfRangeVertex { vertex: 5, n: 5 })
        ));
        assert!(matches!(
            UniformHypergraph::new(5, 3, &[vec![0, 1]]),
            Err(Error::WrongEdgeSize { .. })
        ));
        assert!(matches!(
            UniformHypergraph::new(5, 3, &edges(&[[0, 1, 1]])),
            Err(Error::DuplicateVertexInEdge { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let empty = UniformHypergraph::new(5, 3, &[]).unwrap();
        assert_eq!(empty.complement().edge_count(), 10);
        let k4 = complete(4, 3).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(f5().complement().edge_count(), 7);
    }

    #[test]
    fn induced_examples() {
        let k5 = complete(5, 3).unwrap();
        let s = VertexSet::from_members([0, 2, 3, 4]);
        assert_eq!(k5.induced(&s).unwrap(), complete(4, 3).unwrap());

        // edges of F5 inside {1,2,3,4}: {123}, {124} in 1-based labels
        let ind = f5().induced(&VertexSet::from_members([0, 1, 2, 3])).unwrap();
        assert_eq!(ind.edge_count(), 2);

        // any set smaller than r induces an edgeless hypergraph
        let small = f5().induced(&VertexSet::from_members([0, 1])).unwrap();
        assert_eq!(small.edge_count(), 0);
    }

    #[test]
    fn clique_number_examples() {
        let k6 = complete(6, 3).unwrap();
        assert_eq!(k6.clique_number(), (6, VertexSet::full(6)));

        // brute-force oracle confirms omega(F5) = 3
        let f5 = f5();
        assert_eq!(oracle::naive_clique_number(&f5), 3);
        let (w, witness) = f5.clique_number();
        assert_eq!(w, 3);
        assert_eq!(witness, VertexSet::from_members([0, 1, 2]));

        let empty = UniformHypergraph::new(6, 3, &[]).unwrap();
        assert_eq!(empty.clique_number(), (2, VertexSet::from_members([0, 1])));
    }

    #[test]
    fn independence_number_examples() {
        let empty = UniformHypergraph::new(6, 3, &[]).unwrap();
        assert_eq!(empty.independence_number().0, 6);
        let k6 = complete(6, 3).unwrap();
        assert_eq!(k6.independence_number(), (2, VertexSet::from_members([0, 1])));

        let f5 = f5();
        assert_eq!(oracle::naive_independence_number(&f5), 3);
        let (a, witness) = f5.independence_number();
        assert_eq!(a, 3);
        // colex-least edge-free triple of F5 ({0,1,2} and {0,1,3} are edges)
        assert_eq!(witness, VertexSet::from_members([0, 2, 3]));
    }

    #[test]
    fn embedding_examples() {
        let f5 = f5();
        let id = f5.contains_subhypergraph(&f5).unwrap().unwrap();
        assert_eq!(id.map, vec![0, 1, 2, 3, 4]);

        let k5 = complete(5, 3).unwrap();
        assert!(k5.contains_subhypergraph(&f5).unwrap().is_some());

        let empty7 = UniformHypergraph::new(7, 3, &[]).unwrap();
        assert!(empty7.contains_subhypergraph(&f5).unwrap().is_none());

        let g2 = UniformHypergraph::new(4, 2, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            f5.contains_subhypergraph(&g2),
            Err(Error::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn family_free_examples() {
        let f5 = f5();
        let empty = UniformHypergraph::new(6, 3, &[]).unwrap();
        assert!(empty.is_family_free(std::slice::from_ref(&f5)).unwrap().is_free());
        let k7 = complete(7, 3).unwrap();
        assert!(!k7.is_family_free(std::slice::from_ref(&f5)).unwrap().is_free());
    }

    #[test]
    fn family_free_of_k_construction_complement() {
        use crate::constructions::{build_k, PartitionSpec};
        let spec = PartitionSpec::new(1, 2, vec![3, 3, 3]).unwrap();
        let h = build_k(9, 3, &spec).unwrap();
        // the complement is the complete 3-partite 3-graph on 3+3+3: the 27
        // transversal triples. F5 has two edges through a shared pair whose
        // third vertices later share an edge, which forces two vertices into
        // one class — so no embedding exists.
        let comp = h.complement();
        assert_eq!(comp.edge_count(), 27);
        assert_eq!(comp.is_family_free(&[f5()]).unwrap(), FamilyVerdict::Free);

        // adding any within-class triple breaks freeness
        let mut edges = comp.edge_lists();
        edges.push(vec![0, 1, 2]);
        let bumped = UniformHypergraph::new(9, 3, &edges).unwrap();
        match bumped.is_family_free(&[f5()]).unwrap() {
            FamilyVerdict::Contains { index, ref embedding } => {
                assert_eq!(index, 0);
                // the returned embedding really maps edges to edges
                for e in f5().edge_lists() {
                    let image = mask_from_indices(e.iter().map(|&v| embedding.map[v]));
                    assert!(bumped.has_edge(image));
                }
            }
            FamilyVerdict::Free => panic!("expected an F5 embedding"),
        }
    }

    #[test]
    fn clique_matches_oracle_exhaustively_small() {
        // every 3-graph on 5 vertices with edges drawn from a fixed pool
        let pool: Vec<u128> = k_subsets(5, 3).collect();
        for bits in 0u32..(1 << 10) {
            let masks: Vec<u128> =
                pool.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &m)| m).collect();
            let h = UniformHypergraph::from_masks(5, 3, masks);
            assert_eq!(h.clique_number().0, oracle::naive_clique_number(&h));
            assert_eq!(h.independence_number().0, oracle::naive_independence_number(&h));
        }
    }

    #[test]
    fn weighted_independent_set_matches_blowup() {
        let f5 = f5();
        let w = f5.max_weight_independent_set(&[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(w, 6);
        let single = UniformHypergraph::new(1, 2, &[]).unwrap();
        assert_eq!(single.max_weight_independent_set(&[7]).unwrap(), 7);
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(seed in 0u64..500) {
            let h = crate::verify::random_hypergraph_seeded(seed, 7, 3);
            prop_assert_eq!(h.complement().complement(), h.clone());
            prop_assert_eq!(
                h.edge_count() + h.complement().edge_count(),
                crate::comb::binomial(h.n() as u64, h.r() as u64)
            );
        }

        #[test]
        fn clique_independence_duality(seed in 0u64..300) {
            let h = crate::verify::random_hypergraph_seeded(seed, 7, 3);
            prop_assert_eq!(h.clique_number().0, h.complement().independence_number().0);
        }

        #[test]
        fn induced_commutes_with_complement(seed in 0u64..200, subset in 0u32..128) {
            let h = crate::verify::random_hypergraph_seeded(seed, 7, 3);
            let s = VertexSet((subset as u128) & VertexSet::full(7).0);
            if s.len() >= 1 {
                prop_assert_eq!(
                    h.induced(&s).unwrap().complement(),
                    h.complement().induced(&s).unwrap()
                );
            }
        }

        #[test]
        fn embedding_is_monotone_in_host_edges(seed in 0u64..150) {
            let h = crate::verify::random_hypergraph_seeded(seed, 6, 3);
            let pattern = f5();
            if h.contains_subhypergraph(&pattern).unwrap().is_some() {
                // add one more edge and re-check
                let mut masks = h.edge_masks().to_vec();
                if let Some(extra) = k_subsets(6, 3).find(|m| !h.has_edge(*m)) {
                    masks.push(extra);
                    let larger = UniformHypergraph::from_masks(6, 3, masks);
                    prop_assert!(larger.contains_subhypergraph(&pattern).unwrap().is_some());
                }
            }
        }
    }
}

//! Slow reference implementations used to cross-check the optimized
//! routines. Everything here enumerates subsets directly from edge lists
//! with no pruning, shared state or bit tricks beyond set membership.

use crate::comb::{indices_of_mask, k_subsets, k_subsets_of_mask};
use crate::hypergraph::UniformHypergraph;

fn is_clique_list(h: &UniformHypergraph, set: &[usize]) -> bool {
    if set.len() < h.r() {
        return true;
    }
    let edges = h.edge_lists();
    k_subsets(set.len(), h.r()).all(|idx_mask| {
        let sub: Vec<usize> = indices_of_mask(idx_mask).into_iter().map(|i| set[i]).collect();
        edges.iter().any(|e| *e == sub)
    })
}

/// Clique number by full subset enumeration, largest sizes first.
pub fn naive_clique_number(h: &UniformHypergraph) -> usize {
    for k in (h.r()..=h.n()).rev() {
        for mask in k_subsets(h.n(), k) {
            if is_clique_list(h, &indices_of_mask(mask)) {
                return k;
            }
        }
    }
    h.n().min(h.r() - 1)
}

/// Independence number by full subset enumeration.
pub fn naive_independence_number(h: &UniformHypergraph) -> usize {
    let edges = h.edge_lists();
    let is_independent = |set: &[usize]| -> bool {
        edges.iter().all(|e| !e.iter().all(|v| set.contains(v)))
    };
    for k in (0..=h.n()).rev() {
        for mask in k_subsets(h.n(), k) {
            if is_independent(&indices_of_mask(mask)) {
                return k;
            }
        }
    }
    0
}

/// Property (q,p) straight from the definition: every q-subset of the
/// vertices contains a clique of size p. No memoization, no early
/// certificates, no parallelism.
pub fn naive_has_property(h: &UniformHypergraph, q: usize, p: usize) -> bool {
    if q > h.n() {
        return true;
    }
    k_subsets(h.n(), q).all(|qmask| {
        k_subsets_of_mask(qmask, p)
            .into_iter()
            .any(|pmask| is_clique_list(h, &indices_of_mask(pmask)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, f5};
    use crate::hypergraph::UniformHypergraph;

    #[test]
    fn basics() {
        let k4 = complete(4, 3).unwrap();
        assert_eq!(naive_clique_number(&k4), 4);
        assert_eq!(naive_independence_number(&k4), 2);
        let f5 = f5();
        assert_eq!(naive_clique_number(&f5), 3);
        assert_eq!(naive_independence_number(&f5), 3);
        let empty = UniformHypergraph::new(5, 3, &[]).unwrap();
        assert_eq!(naive_clique_number(&empty), 2);
        assert_eq!(naive_independence_number(&empty), 5);
    }

    #[test]
    fn property_basics() {
        let k5 = complete(5, 3).unwrap();
        assert!(naive_has_property(&k5, 4, 4));
        let empty = UniformHypergraph::new(5, 3, &[]).unwrap();
        assert!(naive_has_property(&empty, 3, 2));
        assert!(!naive_has_property(&empty, 3, 3));
        // q > n is vacuous
        assert!(naive_has_property(&empty, 9, 3));
    }
}

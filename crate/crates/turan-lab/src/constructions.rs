//! Constructions: complete hypergraphs, the two partitioned clique-union
//! families K and L, blow-ups, and a catalog of named small hypergraphs.

use crate::comb::{k_subsets_of_mask, mask_from_indices};
use crate::error::{Error, Result};
use crate::hypergraph::{UniformHypergraph, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Complete r-uniform hypergraph on n vertices.
pub fn complete(n: usize, r: usize) -> Result<UniformHypergraph> {
    UniformHypergraph::new(n, r, &[]).map(|h| h.complement())
}

/// Edgeless r-uniform hypergraph on n vertices.
pub fn edgeless(n: usize, r: usize) -> Result<UniformHypergraph> {
    UniformHypergraph::new(n, r, &[])
}

/// Disjoint union; the second summand is shifted past the first.
pub fn disjoint_union(a: &UniformHypergraph, b: &UniformHypergraph) -> Result<UniformHypergraph> {
    if a.r() != b.r() {
        return Err(Error::UniformityMismatch { left: a.r(), right: b.r() });
    }
    let shift = a.n();
    let mut edges = a.edge_lists();
    for e in b.edge_lists() {
        edges.push(e.into_iter().map(|v| v + shift).collect());
    }
    UniformHypergraph::new(a.n() + b.n(), a.r(), &edges)
}

/// Part sizes for the K / L families. The layout is `a - 1` outer parts
/// V_1..V_{a-1} followed by `k + 1` inner parts U_0..U_k; the last outer
/// class V_a is the union of the inner parts. Parts occupy consecutive
/// vertex ranges in this order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub a: usize,
    pub k: usize,
    pub sizes: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(a: usize, k: usize, sizes: Vec<usize>) -> Result<Self> {
        if a < 1 {
            return Err(Error::BadPartition("a must be at least 1".into()));
        }
        if k < 1 {
            return Err(Error::BadPartition("k must be at least 1".into()));
        }
        let expected = (a - 1) + (k + 1);
        if sizes.len() != expected {
            return Err(Error::BadPartition(format!(
                "expected {expected} part sizes for a = {a}, k = {k}, got {}",
                sizes.len()
            )));
        }
        Ok(PartitionSpec { a, k, sizes })
    }

    /// All parts as equal as possible, larger parts first.
    pub fn balanced(n: usize, a: usize, k: usize) -> Result<Self> {
        let m = (a - 1) + (k + 1);
        if m == 0 || n < m {
            return Err(Error::BadPartition(format!("cannot split {n} vertices into {m} parts")));
        }
        let base = n / m;
        let extra = n % m;
        let sizes = (0..m).map(|i| base + usize::from(i < extra)).collect();
        PartitionSpec::new(a, k, sizes)
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Vertex mask per part, consecutive ranges.
    pub(crate) fn part_masks(&self) -> Vec<u128> {
        let mut masks = Vec::with_capacity(self.sizes.len());
        let mut offset = 0usize;
        for &s in &self.sizes {
            masks.push(mask_from_indices(offset..offset + s));
            offset += s;
        }
        masks
    }
}

/// The clique supports of the K family as part-index sets: each outer part
/// V_i, the complement of U_0 inside V_a, and each U_0 with one other
/// inner part.
pub fn k_clique_parts(a: usize, k: usize) -> Vec<u64> {
    let u = |j: usize| 1u64 << (a - 1 + j);
    let mut cliques: Vec<u64> = (0..a - 1).map(|i| 1u64 << i).collect();
    cliques.push((1..=k).map(u).fold(0, |m, b| m | b));
    for j in 1..=k {
        cliques.push(u(0) | u(j));
    }
    cliques
}

/// The clique supports of the L family: each outer part V_i, and the
/// complement of each inner part inside V_a.
pub fn l_clique_parts(a: usize, k: usize) -> Vec<u64> {
    let u = |j: usize| 1u64 << (a - 1 + j);
    let all_inner: u64 = (0..=k).map(u).fold(0, |m, b| m | b);
    let mut cliques: Vec<u64> = (0..a - 1).map(|i| 1u64 << i).collect();
    for j in 0..=k {
        cliques.push(all_inner & !u(j));
    }
    cliques
}

fn union_of_cliques(
    n: usize,
    r: usize,
    part_masks: &[u128],
    clique_parts: &[u64],
) -> Result<UniformHypergraph> {
    let mut edges: BTreeSet<u128> = BTreeSet::new();
    for &cp in clique_parts {
        let mut vmask = 0u128;
        for (i, &pm) in part_masks.iter().enumerate() {
            if cp >> i & 1 == 1 {
                vmask |= pm;
            }
        }
        for e in k_subsets_of_mask(vmask, r) {
            edges.insert(e);
        }
    }
    let _ = edgeless(n, r)?; // parameter validation
    Ok(UniformHypergraph::from_masks(n, r, edges.into_iter().collect()))
}

/// The K family member for the given partition.
pub fn build_k(n: usize, r: usize, spec: &PartitionSpec) -> Result<UniformHypergraph> {
    if spec.total() != n {
        return Err(Error::BadPartition(format!(
            "part sizes sum to {}, expected n = {n}",
            spec.total()
        )));
    }
    union_of_cliques(n, r, &spec.part_masks(), &k_clique_parts(spec.a, spec.k))
}

/// The L family member for the given partition. Requires 2 <= k <= r - 1.
pub fn build_l(n: usize, r: usize, spec: &PartitionSpec) -> Result<UniformHypergraph> {
    if spec.k < 2 || spec.k > r - 1 {
        return Err(Error::KOutOfRange { k: spec.k, min: 2, max: r - 1 });
    }
    if spec.total() != n {
        return Err(Error::BadPartition(format!(
            "part sizes sum to {}, expected n = {n}",
            spec.total()
        )));
    }
    union_of_cliques(n, r, &spec.part_masks(), &l_clique_parts(spec.a, spec.k))
}

/// Complete 3-graph minus the triples inside any class of the balanced
/// a-partition.
pub fn g_na(n: usize, a: usize) -> Result<UniformHypergraph> {
    if a < 1 || n < a {
        return Err(Error::BadPartition(format!("cannot split {n} vertices into {a} classes")));
    }
    let base = n / a;
    let extra = n % a;
    let mut within = Vec::new();
    let mut offset = 0usize;
    for i in 0..a {
        let s = base + usize::from(i < extra);
        within.push(mask_from_indices(offset..offset + s));
        offset += s;
    }
    let masks = complete(n, 3)?
        .edge_masks()
        .iter()
        .copied()
        .filter(|&e| within.iter().all(|&w| e & !w != 0))
        .collect();
    Ok(UniformHypergraph::from_masks(n, 3, masks))
}

fn from_one_based(n: usize, r: usize, edges: &[&[usize]]) -> UniformHypergraph {
    let lists: Vec<Vec<usize>> =
        edges.iter().map(|e| e.iter().map(|&v| v - 1).collect()).collect();
    UniformHypergraph::new(n, r, &lists).expect("catalog edge lists are well formed")
}

/// Three triples on five vertices: {123, 124, 345}.
pub fn f5() -> UniformHypergraph {
    from_one_based(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5]])
}

/// The complete 3-graph on four vertices.
pub fn h1() -> UniformHypergraph {
    from_one_based(4, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
}

pub fn h2() -> UniformHypergraph {
    from_one_based(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[3, 4, 5], &[3, 4, 6]])
}

/// H2 with its last edge removed.
pub fn h2_minus() -> UniformHypergraph {
    from_one_based(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[3, 4, 5]])
}

pub fn h3() -> UniformHypergraph {
    from_one_based(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5], &[1, 5, 6], &[2, 5, 6]])
}

pub fn h4() -> UniformHypergraph {
    from_one_based(
        6,
        3,
        &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[3, 4, 6], &[3, 5, 6], &[4, 5, 6]],
    )
}

/// Fifteen triples on seven vertices: the complete 3-graph on {1..4},
/// together with every triple made of one vertex of {1..4} and a pair from
/// {5,6,7}, except {1,5,6}.
pub fn h7() -> UniformHypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for e in k_subsets_of_mask(mask_from_indices(0..4), 3) {
        edges.push(crate::comb::indices_of_mask(e));
    }
    for a in 0..4 {
        for x in 4..7 {
            for y in (x + 1)..7 {
                if (a, x, y) == (0, 4, 5) {
                    continue;
                }
                edges.push(vec![a, x, y]);
            }
        }
    }
    UniformHypergraph::new(7, 3, &edges).expect("catalog edge lists are well formed")
}

/// Generalized triangle: three r-edges on 2r - 1 vertices, two of them
/// sharing r - 1 vertices and the third covering their symmetric
/// difference. For r = 3 this is isomorphic to [`f5`].
pub fn generalized_triangle(r: usize) -> Result<UniformHypergraph> {
    if r < 2 {
        return Err(Error::BadParams(format!("uniformity r = {r} must be at least 2")));
    }
    let n = 2 * r - 1;
    let a: Vec<usize> = (0..r).collect();
    let mut b: Vec<usize> = (0..r - 1).collect();
    b.push(r);
    let mut c: Vec<usize> = vec![r - 1, r];
    c.extend(r + 1..n);
    UniformHypergraph::new(n, r, &[a, b, c])
}

/// Generalized fan: an apex x in r edges that pairwise meet only in x,
/// plus one edge picking one non-apex vertex from each. r + 1 edges on
/// r^2 - r + 1 vertices. Vertex layout: apex 0, the transversal edge is
/// {1..r}, and edge i continues with a block of r - 2 fresh vertices.
pub fn generalized_fan(r: usize) -> Result<UniformHypergraph> {
    if r < 3 {
        return Err(Error::BadParams(format!(
            "the fan needs r >= 3, got r = {r}"
        )));
    }
    let n = r * r - r + 1;
    let mut edges: Vec<Vec<usize>> = vec![(1..=r).collect()];
    for i in 1..=r {
        let start = r + 1 + (i - 1) * (r - 2);
        let mut e = vec![0, i];
        e.extend(start..start + (r - 2));
        edges.push(e);
    }
    UniformHypergraph::new(n, r, &edges)
}

/// The 3-graph H_a on 3a + 1 vertices: a class P of 2a vertices carrying
/// all its triples, a class Q of a + 1 vertices, and every triple with one
/// vertex in P and two in Q.
pub fn h_a(a: usize) -> Result<UniformHypergraph> {
    if a < 1 {
        return Err(Error::BadParams("a must be at least 1".into()));
    }
    let p = 2 * a;
    let n = 3 * a + 1;
    if n > MAX_VERTICES {
        return Err(Error::BadParams(format!("a = {a} needs {n} vertices")));
    }
    let mut edges: Vec<Vec<usize>> = k_subsets_of_mask(mask_from_indices(0..p), 3)
        .into_iter()
        .map(crate::comb::indices_of_mask)
        .collect();
    for x in 0..p {
        for y in p..n {
            for z in (y + 1)..n {
                edges.push(vec![x, y, z]);
            }
        }
    }
    UniformHypergraph::new(n, 3, &edges)
}

/// Lazy enumeration of the variants of [`h_a`]: for each pair of Q
/// vertices, keep at least 2a - 1 of its 2a links into P. Each pair has
/// 2a + 1 admissible link sets, enumerated odometer style, so the family
/// has (2a + 1)^C(a+1, 2) members.
pub fn ha_family(a: usize) -> Result<impl Iterator<Item = UniformHypergraph>> {
    if a < 1 {
        return Err(Error::BadParams("a must be at least 1".into()));
    }
    let p = 2 * a;
    let n = 3 * a + 1;
    if n > MAX_VERTICES {
        return Err(Error::BadParams(format!("a = {a} needs {n} vertices")));
    }
    let pairs: Vec<(usize, usize)> = (p..n)
        .flat_map(|y| ((y + 1)..n).map(move |z| (y, z)))
        .collect();
    // choice c for a pair: c == 0 keeps all 2a links, c == x drops only
    // the P vertex x - 1
    let base: usize = 2 * a + 1;
    let num_pairs = pairs.len();
    let core: Vec<Vec<usize>> = k_subsets_of_mask(mask_from_indices(0..p), 3)
        .into_iter()
        .map(crate::comb::indices_of_mask)
        .collect();
    let mut odometer = vec![0usize; num_pairs];
    let mut exhausted = false;
    Ok(std::iter::from_fn(move || {
        if exhausted {
            return None;
        }
        let mut edges = core.clone();
        for (pi, &(y, z)) in pairs.iter().enumerate() {
            let dropped = odometer[pi];
            for x in 0..p {
                if dropped != 0 && x == dropped - 1 {
                    continue;
                }
                edges.push(vec![x, y, z]);
            }
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == num_pairs {
                exhausted = true;
                break;
            }
            odometer[i] += 1;
            if odometer[i] < base {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
        Some(UniformHypergraph::new(n, 3, &edges).expect("family edge lists are well formed"))
    }))
}

/// Blow-up: pattern vertex i becomes a class of `mu[i]` copies; the edges
/// are all transversals of the pattern edges.
pub fn blowup(pattern: &UniformHypergraph, mu: &[u64]) -> Result<UniformHypergraph> {
    if mu.len() != pattern.n() {
        return Err(Error::LengthMismatch { expected: pattern.n(), got: mu.len() });
    }
    if let Some(i) = mu.iter().position(|&m| m == 0) {
        return Err(Error::ZeroMultiplicity(i));
    }
    let nu: u64 = mu.iter().sum();
    if nu as usize > MAX_VERTICES {
        return Err(Error::BadParams(format!(
            "blow-up has {nu} vertices, above the supported maximum of {MAX_VERTICES}"
        )));
    }
    let mut offsets = vec![0usize; pattern.n() + 1];
    for i in 0..pattern.n() {
        offsets[i + 1] = offsets[i] + mu[i] as usize;
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for e in pattern.edge_lists() {
        let mut picks = vec![0usize; e.len()];
        loop {
            edges.push(
                e.iter().zip(&picks).map(|(&cls, &off)| offsets[cls] + off).collect(),
            );
            let mut i = 0;
            loop {
                if i == e.len() {
                    break;
                }
                picks[i] += 1;
                if picks[i] < mu[e[i]] as usize {
                    break;
                }
                picks[i] = 0;
                i += 1;
            }
            if i == e.len() {
                break;
            }
        }
    }
    UniformHypergraph::new(nu as usize, pattern.r(), &edges)
}

/// Independence number of the blow-up `pattern(mu)` without materializing
/// it: the maximum weight of an independent set of the pattern.
pub fn alpha_of_blowup(pattern: &UniformHypergraph, mu: &[u64]) -> Result<u64> {
    if let Some(i) = mu.iter().position(|&m| m == 0) {
        return Err(Error::ZeroMultiplicity(i));
    }
    pattern.max_weight_independent_set(mu)
}

/// The multiplicities turning the r-fan into its p-th blow-up member:
/// apex weight (r-1)^2, transversal-edge vertices p - r^2 + 2r, block
/// vertices r - 1. Total r*p + 1 vertices.
pub fn frp_multiplicities(r: usize, p: usize) -> Result<Vec<u64>> {
    if r < 3 {
        return Err(Error::BadParams(format!("the fan needs r >= 3, got r = {r}")));
    }
    let min_p = r * r - 2 * r + 1;
    if p <= min_p {
        return Err(Error::BadParams(format!(
            "p = {p} too small for r = {r}; need p > {min_p}"
        )));
    }
    let fan_n = r * r - r + 1;
    let mut mu = vec![0u64; fan_n];
    mu[0] = ((r - 1) * (r - 1)) as u64;
    for i in 1..=r {
        mu[i] = (p + 2 * r - r * r) as u64;
    }
    for v in (r + 1)..fan_n {
        mu[v] = (r - 1) as u64;
    }
    Ok(mu)
}

/// The blow-up of the r-fan with the [`frp_multiplicities`] weights.
pub fn build_frp(r: usize, p: usize) -> Result<UniformHypergraph> {
    let fan = generalized_fan(r)?;
    blowup(&fan, &frp_multiplicities(r, p)?)
}

/// Named catalog lookup. Fixed names: F5, H1, H2, H2-, H3, H4, H7.
/// Parametric: T(r), F(r), Ha(a), K(n,r), G(n,a).
pub fn catalog(name: &str) -> Result<UniformHypergraph> {
    match name {
        "F5" => return Ok(f5()),
        "H1" => return Ok(h1()),
        "H2" => return Ok(h2()),
        "H2-" => return Ok(h2_minus()),
        "H3" => return Ok(h3()),
        "H4" => return Ok(h4()),
        "H7" => return Ok(h7()),
        _ => {}
    }
    let parse_args = |s: &str, head: &str| -> Option<Vec<usize>> {
        let body = s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
        body.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
    };
    if let Some(args) = parse_args(name, "T") {
        if args.len() == 1 {
            return generalized_triangle(args[0]);
        }
    }
    if let Some(args) = parse_args(name, "F") {
        if args.len() == 1 {
            return generalized_fan(args[0]);
        }
    }
    if let Some(args) = parse_args(name, "Ha") {
        if args.len() == 1 {
            return h_a(args[0]);
        }
    }
    if let Some(args) = parse_args(name, "K") {
        if args.len() == 2 {
            return complete(args[0], args[1]);
        }
    }
    if let Some(args) = parse_args(name, "G") {
        if args.len() == 2 {
            return g_na(args[0], args[1]);
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

/// The fixed catalog entries, for listing.
pub fn catalog_names() -> Vec<&'static str> {
    vec!["F5", "H1", "H2", "H2-", "H3", "H4", "H7"]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::binomial;

    #[test]
    fn catalog_edge_counts() {
        assert_eq!((f5().n(), f5().edge_count()), (5, 3));
        assert_eq!((h1().n(), h1().edge_count()), (4, 4));
        assert_eq!((h2().n(), h2().edge_count()), (6, 5));
        assert_eq!((h2_minus().n(), h2_minus().edge_count()), (5, 4));
        assert_eq!((h3().n(), h3().edge_count()), (6, 5));
        assert_eq!((h4().n(), h4().edge_count()), (6, 6));
        assert_eq!((h7().n(), h7().edge_count()), (7, 15));
        let ha2 = h_a(2).unwrap();
        assert_eq!((ha2.n(), ha2.edge_count()), (7, 16));
    }

    #[test]
    fn generalized_triangle_small_cases() {
        let t3 = generalized_triangle(3).unwrap();
        assert_eq!((t3.n(), t3.edge_count()), (5, 3));
        // isomorphic to F5 both ways
        assert!(t3.contains_subhypergraph(&f5()).unwrap().is_some());
        assert!(f5().contains_subhypergraph(&t3).unwrap().is_some());
        let t4 = generalized_triangle(4).unwrap();
        assert_eq!((t4.n(), t4.r(), t4.edge_count()), (7, 4, 3));
    }

    #[test]
    fn fan_shape() {
        let f3 = generalized_fan(3).unwrap();
        assert_eq!((f3.n(), f3.edge_count()), (7, 4));
        let f4 = generalized_fan(4).unwrap();
        assert_eq!((f4.n(), f4.r(), f4.edge_count()), (13, 4, 5));
        // the r apex edges pairwise meet only in the apex
        let masks: Vec<u128> = f4.edge_masks().iter().copied().filter(|m| m & 1 == 1).collect();
        assert_eq!(masks.len(), 4);
        for i in 0..masks.len() {
            for j in (i + 1)..masks.len() {
                assert_eq!(masks[i] & masks[j], 1);
            }
        }
    }

    #[test]
    fn ha_family_size_and_membership() {
        let members: Vec<_> = ha_family(2).unwrap().collect();
        assert_eq!(members.len(), 125);
        // the all-links member is h_a itself
        assert!(members.contains(&h_a(2).unwrap()));
        // edge counts: 4 core triples plus per pair 3 or 4 links
        for m in &members {
            let e = m.edge_count();
            assert!((4 + 3 * 3..=4 + 3 * 4).contains(&e), "edge count {e}");
        }
    }

    #[test]
    fn k_family_small_cases() {
        // one class split into U0, U1, U2 of size 3 each
        let spec = PartitionSpec::new(1, 2, vec![3, 3, 3]).unwrap();
        let h = build_k(9, 3, &spec).unwrap();
        // 3 cliques of 6 vertices pairwise sharing one part of size 3
        assert_eq!(h.edge_count(), 3 * binomial(6, 3) - 3 * binomial(3, 3));

        // outer parts only contribute their own triples
        let spec = PartitionSpec::new(2, 1, vec![3, 2, 1]).unwrap();
        let h = build_k(6, 3, &spec).unwrap();
        // V1 = {0,1,2} gives 1 edge; V2 = U0 u U1 = {3,4} u {5}:
        // V2 \ U0 = {5} gives none, U0 u U1 = {3,4,5} gives 1
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn l_family_small_cases() {
        let spec = PartitionSpec::balanced(12, 1, 2).unwrap();
        assert_eq!(spec.sizes, vec![4, 4, 4]);
        let h = build_l(12, 3, &spec).unwrap();
        // 3 cliques of 8 vertices pairwise sharing a part of size 4
        assert_eq!(h.edge_count(), 3 * binomial(8, 3) - 3 * binomial(4, 3));

        // k outside 2..=r-1 is rejected
        let bad = PartitionSpec::new(1, 3, vec![3, 3, 3, 3]).unwrap();
        assert!(matches!(build_l(12, 3, &bad), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn l_family_one_part_per_inner_class() {
        // with every vertex in U0 and the other inner parts empty, the
        // L edges are the cliques on V_a minus U_j: the complement of U_0
        // is empty and the complements of U_1, U_2 are everything
        let spec = PartitionSpec::new(1, 2, vec![3, 0, 0]).unwrap();
        let h = build_l(3, 3, &spec).unwrap();
        assert_eq!(h.edge_count(), 1);
        // all inner parts of size 1: every pair is a clique support of
        // size 2, below r, so no edges at all
        let spec = PartitionSpec::new(1, 2, vec![1, 1, 1]).unwrap();
        let h = build_l(3, 3, &spec).unwrap();
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn g_na_counts() {
        let g = g_na(6, 2).unwrap();
        assert_eq!(g.edge_count(), binomial(6, 3) - 2 * binomial(3, 3));
        let g = g_na(7, 3).unwrap();
        assert_eq!(g.edge_count(), binomial(7, 3) - binomial(3, 3));
    }

    #[test]
    fn blowup_counts_and_alpha() {
        let f5 = f5();
        let b = blowup(&f5, &[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(b.n(), 10);
        assert_eq!(b.edge_count(), 3 * 8);
        assert_eq!(alpha_of_blowup(&f5, &[2, 2, 2, 2, 2]).unwrap(), 6);
        assert_eq!(b.independence_number().0, 6);

        assert!(matches!(blowup(&f5, &[1, 1, 1]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(blowup(&f5, &[1, 0, 1, 1, 1]), Err(Error::ZeroMultiplicity(1))));
    }

    #[test]
    fn frp_invariants() {
        for (r, p, nu, alpha) in [(3usize, 5usize, 16u64, 10u64), (3, 6, 19, 12)] {
            let mu = frp_multiplicities(r, p).unwrap();
            assert_eq!(mu.iter().sum::<u64>(), nu);
            let fan = generalized_fan(r).unwrap();
            assert_eq!(alpha_of_blowup(&fan, &mu).unwrap(), alpha);
            let h = build_frp(r, p).unwrap();
            assert_eq!(h.n() as u64, nu);
            assert_eq!(h.independence_number().0 as u64, alpha);
        }
        // larger case checked via weights only
        let mu = frp_multiplicities(4, 11).unwrap();
        assert_eq!(mu.iter().sum::<u64>(), 45);
        let fan = generalized_fan(4).unwrap();
        assert_eq!(alpha_of_blowup(&fan, &mu).unwrap(), 33);
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(catalog("F5").unwrap(), f5());
        assert_eq!(catalog("T(3)").unwrap(), generalized_triangle(3).unwrap());
        assert_eq!(catalog("K(5,3)").unwrap(), complete(5, 3).unwrap());
        assert_eq!(catalog("Ha(2)").unwrap(), h_a(2).unwrap());
        assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn disjoint_union_counts() {
        let u = disjoint_union(&f5(), &f5()).unwrap();
        assert_eq!((u.n(), u.edge_count()), (10, 6));
    }
}

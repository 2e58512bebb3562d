//! Exact densities of the K / L families, their closed-form limits, part
//! size optimization, and reference Turán-density constants.
//!
//! Edge counts of clique unions are computed by inclusion-exclusion over
//! the clique supports, so they stay exact far beyond the vertex cap of
//! the materialized hypergraph type.

use crate::comb::binomial;
use crate::constructions::{k_clique_parts, l_clique_parts, PartitionSpec};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::Rat;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub n: usize,
    pub r: usize,
    pub edges: u64,
    #[serde(with = "crate::ratio_serde")]
    pub density: Rat,
    #[serde(with = "crate::ratio_serde_opt")]
    pub target: Option<Rat>,
    #[serde(with = "crate::ratio_serde_opt")]
    pub gap: Option<Rat>,
}

impl DensityReport {
    pub fn new(n: usize, r: usize, edges: u64, target: Option<Rat>) -> Self {
        let total = binomial(n as u64, r as u64);
        let density =
            if total == 0 { Rat::from_integer(0) } else { Rat::new(edges as i64, total as i64) };
        let gap = target.map(|t| {
            let d = density - t;
            if d < Rat::from_integer(0) {
                -d
            } else {
                d
            }
        });
        DensityReport { n, r, edges, density, target, gap }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    Exact,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceDensity {
    pub name: String,
    #[serde(with = "crate::ratio_serde")]
    pub value: Rat,
    pub kind: DensityKind,
}

/// Limit density of the K family at r = 3, a = 1: (5k + 4) / (9k).
pub fn rho_formula(k: usize) -> Result<Rat> {
    if k < 1 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    Ok(Rat::new(5 * k as i64 + 4, 9 * k as i64))
}

/// Limit density of the K family at k = 1: 1 / a^(r-1).
pub fn rho_limit_k1(r: usize, a: usize) -> Result<Rat> {
    if r < 2 || a < 1 {
        return Err(Error::BadParams(format!("need r >= 2 and a >= 1, got r = {r}, a = {a}")));
    }
    let den = (a as i64)
        .checked_pow((r - 1) as u32)
        .ok_or_else(|| Error::BadParams(format!("a^(r-1) overflows for a = {a}, r = {r}")))?;
    Ok(Rat::new(1, den))
}

/// Limit density of the L family at a = 1:
/// sum_{i=1..k} (-1)^(i+1) C(k+1, k+1-i) ((k+1-i)/(k+1))^r.
pub fn eta_formula(r: usize, k: usize) -> Result<Rat> {
    if r < 3 || k < 2 || k > r - 1 {
        return Err(Error::KOutOfRange { k, min: 2, max: r.saturating_sub(1) });
    }
    let pow = |base: i64, exp: usize| -> Result<i64> {
        base.checked_pow(exp as u32)
            .ok_or_else(|| Error::BadParams(format!("{base}^{exp} overflows")))
    };
    let kp1 = k as i64 + 1;
    let den = pow(kp1, r)?;
    let mut acc = Rat::from_integer(0);
    for i in 1..=k as i64 {
        let choose = binomial(kp1 as u64, (kp1 - i) as u64) as i64;
        let term = Rat::new(choose * pow(kp1 - i, r)?, den);
        if i % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Number of r-subsets covered by a union of cliques, where each clique is
/// a union of parts (given as a part-index bitmask) and only the part
/// sizes matter. Inclusion-exclusion over the clique supports.
pub fn union_clique_count(r: usize, part_sizes: &[usize], clique_parts: &[u64]) -> u64 {
    let mut cliques = clique_parts.to_vec();
    cliques.sort_unstable();
    cliques.dedup();
    let m = cliques.len();
    assert!(m <= 20, "too many distinct cliques for inclusion-exclusion");
    let mut acc: i128 = 0;
    for sel in 1u32..(1 << m) {
        let mut inter = u64::MAX;
        for (i, &c) in cliques.iter().enumerate() {
            if sel >> i & 1 == 1 {
                inter &= c;
            }
        }
        let size: usize = part_sizes
            .iter()
            .enumerate()
            .filter(|(i, _)| inter >> i & 1 == 1)
            .map(|(_, &s)| s)
            .sum();
        let count = binomial(size as u64, r as u64) as i128;
        if sel.count_ones() % 2 == 1 {
            acc += count;
        } else {
            acc -= count;
        }
    }
    u64::try_from(acc).expect("inclusion-exclusion yields a nonnegative count")
}

fn check_spec_total(n: usize, spec: &PartitionSpec) -> Result<()> {
    if spec.total() != n {
        return Err(Error::BadPartition(format!(
            "part sizes sum to {}, expected n = {n}",
            spec.total()
        )));
    }
    Ok(())
}

/// Edge count of the K family member, without materializing it.
pub fn k_edge_count(n: usize, r: usize, spec: &PartitionSpec) -> Result<u64> {
    check_spec_total(n, spec)?;
    Ok(union_clique_count(r, &spec.sizes, &k_clique_parts(spec.a, spec.k)))
}

/// Edge count of the L family member, without materializing it.
pub fn l_edge_count(n: usize, r: usize, spec: &PartitionSpec) -> Result<u64> {
    if spec.k < 2 || spec.k > r - 1 {
        return Err(Error::KOutOfRange { k: spec.k, min: 2, max: r - 1 });
    }
    check_spec_total(n, spec)?;
    Ok(union_clique_count(r, &spec.sizes, &l_clique_parts(spec.a, spec.k)))
}

/// Exact edge density of a concrete hypergraph.
pub fn density_of(h: &UniformHypergraph) -> DensityReport {
    DensityReport::new(h.n(), h.r(), h.edge_count(), None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    K,
    L,
}

fn family_edge_count(family: Family, n: usize, r: usize, spec: &PartitionSpec) -> Result<u64> {
    match family {
        Family::K => k_edge_count(n, r, spec),
        Family::L => l_edge_count(n, r, spec),
    }
}

/// The known limit density for the family at these parameters, if a
/// closed form applies.
pub fn limit_target(family: Family, r: usize, a: usize, k: usize) -> Option<Rat> {
    match family {
        Family::K if k == 1 => rho_limit_k1(r, a).ok(),
        Family::K if r == 3 && a == 1 => rho_formula(k).ok(),
        Family::L if a == 1 => eta_formula(r, k).ok(),
        _ => None,
    }
}

fn seeds(family: Family, n: usize, r: usize, a: usize, k: usize) -> Vec<Vec<usize>> {
    let m = (a - 1) + (k + 1);
    let mut out = Vec::new();
    if let Ok(b) = PartitionSpec::balanced(n, a, k) {
        out.push(b.sizes);
    }
    if family == Family::K && r == 3 && a == 1 {
        // continuous optimum of the a = 1 objective: inner parts of 2n/(3k)
        let u = (2 * n + 3 * k / 2) / (3 * k);
        if u * k <= n {
            let mut sizes = vec![n - u * k];
            sizes.extend(std::iter::repeat(u).take(k));
            out.push(sizes);
        }
    }
    if family == Family::K && k == 1 && m >= 2 {
        // U0 empty: the family degenerates to a disjoint cliques
        let outer = n / a;
        let mut sizes: Vec<usize> = (0..a - 1).map(|i| outer + usize::from(i < n % a)).collect();
        sizes.push(0);
        sizes.push(n - sizes.iter().sum::<usize>());
        out.push(sizes);
    }
    out.retain(|s| s.len() == m && s.iter().sum::<usize>() == n);
    out
}

/// Seed-and-hill-climb part optimization: start from the balanced split
/// and the continuous-relaxation seeds, then move single vertices between
/// parts while the edge count drops (ties broken toward lexicographically
/// smaller size vectors). `budget` caps the number of edge-count
/// evaluations.
pub fn optimize_parts(
    family: Family,
    n: usize,
    r: usize,
    a: usize,
    k: usize,
    budget: u64,
) -> Result<(PartitionSpec, DensityReport)> {
    let _ = PartitionSpec::balanced(n, a, k)?; // validates feasibility
    if family == Family::L && (k < 2 || k > r - 1) {
        return Err(Error::KOutOfRange { k, min: 2, max: r - 1 });
    }
    let evals = std::cell::Cell::new(0u64);
    let eval = |sizes: &[usize]| -> Result<u64> {
        evals.set(evals.get() + 1);
        let spec = PartitionSpec::new(a, k, sizes.to_vec())?;
        family_edge_count(family, n, r, &spec)
    };
    let mut best: Option<(u64, Vec<usize>)> = None;
    for seed in seeds(family, n, r, a, k) {
        let mut cur = seed;
        let mut cur_count = eval(&cur)?;
        loop {
            if evals.get() >= budget {
                break;
            }
            let mut improved = false;
            'moves: for i in 0..cur.len() {
                for j in 0..cur.len() {
                    if i == j || cur[i] == 0 {
                        continue;
                    }
                    let mut cand = cur.clone();
                    cand[i] -= 1;
                    cand[j] += 1;
                    let c = eval(&cand)?;
                    if c < cur_count || (c == cur_count && cand < cur) {
                        cur = cand;
                        cur_count = c;
                        improved = true;
                        break 'moves;
                    }
                    if evals.get() >= budget {
                        break 'moves;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        match &best {
            Some((bc, bs)) if (*bc, bs) <= (cur_count, &cur) => {}
            _ => best = Some((cur_count, cur)),
        }
    }
    let (count, sizes) = best.expect("at least the balanced seed is evaluated");
    let spec = PartitionSpec::new(a, k, sizes)?;
    let report = DensityReport::new(n, r, count, limit_target(family, r, a, k));
    Ok((spec, report))
}

/// Exhaustive sweep over all compositions of n into the family's parts,
/// returning the minimum edge count with a lexicographically least size
/// vector. Intended as a small-n oracle.
pub fn sweep_parts(
    family: Family,
    n: usize,
    r: usize,
    a: usize,
    k: usize,
) -> Result<(PartitionSpec, DensityReport)> {
    let m = (a - 1) + (k + 1);
    if family == Family::L && (k < 2 || k > r - 1) {
        return Err(Error::KOutOfRange { k, min: 2, max: r - 1 });
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut sizes = vec![0usize; m];
    sweep_rec(family, n, r, a, k, n, 0, &mut sizes, &mut best)?;
    let (count, sizes) = best.ok_or(Error::EmptyGrid)?;
    let spec = PartitionSpec::new(a, k, sizes)?;
    let report = DensityReport::new(n, r, count, limit_target(family, r, a, k));
    Ok((spec, report))
}

#[allow(clippy::too_many_arguments)]
fn sweep_rec(
    family: Family,
    n: usize,
    r: usize,
    a: usize,
    k: usize,
    remaining: usize,
    idx: usize,
    sizes: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) -> Result<()> {
    if idx + 1 == sizes.len() {
        sizes[idx] = remaining;
        let spec = PartitionSpec::new(a, k, sizes.clone())?;
        let count = family_edge_count(family, n, r, &spec)?;
        match best {
            Some((bc, bs)) if (*bc, &*bs) <= (count, sizes) => {}
            _ => *best = Some((count, sizes.clone())),
        }
        return Ok(());
    }
    for s in 0..=remaining {
        sizes[idx] = s;
        sweep_rec(family, n, r, a, k, remaining - s, idx + 1, sizes, best)?;
    }
    Ok(())
}

/// Named reference density constants. Exact values and cited numeric
/// upper bounds.
pub fn reference(name: &str) -> Result<ReferenceDensity> {
    let make = |value: Rat, kind: DensityKind| ReferenceDensity {
        name: name.to_string(),
        value,
        kind,
    };
    match name {
        "F5" => return Ok(make(Rat::new(2, 9), DensityKind::Exact)),
        "H1-H4" => return Ok(make(Rat::new(8, 27), DensityKind::Exact)),
        "H7" => return Ok(make(Rat::new(3, 4), DensityKind::Exact)),
        "T(4)" => return Ok(make(Rat::new(3, 32), DensityKind::Exact)),
        "K4_3" => return Ok(make(Rat::new(561_666, 1_000_000), DensityKind::UpperBound)),
        "K6_3" => return Ok(make(Rat::new(8_583_903, 10_000_000), DensityKind::UpperBound)),
        _ => {}
    }
    if let Some(body) = name.strip_prefix("Fan(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(r) = body.trim().parse::<usize>() {
            if (3..=15).contains(&r) {
                let mut fact: i64 = 1;
                let mut pow: i64 = 1;
                for i in 1..=r as i64 {
                    fact *= i;
                    pow = pow
                        .checked_mul(r as i64)
                        .ok_or_else(|| Error::BadParams(format!("r = {r} too large")))?;
                }
                return Ok(make(Rat::new(fact, pow), DensityKind::Exact));
            }
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

//! Exact minimum edge counts for property (q,p), small-n Turán numbers,
//! and a DIMACS CNF route used to cross-validate the internal solver.
//!
//! The internal solver is constraint-generation branch and bound over edge
//! subsets: pick an uncovered q-set, branch on which p-subset of it gets
//! completed into a clique. The CNF path encodes the same predicate with a
//! totalizer cardinality bound and is solved by a bundled DPLL, so the two
//! routes share no code beyond the problem statement.

use crate::comb::{binomial, colex_rank, indices_of_mask, k_subsets, k_subsets_of_mask};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::oracle;
use serde::{Deserialize, Serialize};
use std::io::Write as _;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget_secs: u64,
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: 10_000_000, time_budget_secs: 60, symmetry_breaking: true }
    }
}

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub value: u64,
    pub witness: UniformHypergraph,
    pub proved_optimal: bool,
    pub nodes: u64,
}

/// Largest edge-variable count the bit-state solver supports.
pub const MAX_EDGE_VARS: u64 = 64;

struct TSearch {
    rsubs: Vec<u128>,
    /// Per q-set: bitmask of the r-subset indices lying inside it.
    q_rmask: Vec<u64>,
    /// Per q-set: for each p-subset of it, the edge bits a complete clique
    /// on that p-set requires.
    p_req: Vec<Vec<u64>>,
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    budget_hit: bool,
    best_state: u64,
    best_count: u32,
    symmetry_breaking: bool,
}

impl TSearch {
    fn covered(&self, qi: usize, state: u64) -> bool {
        self.p_req[qi].iter().any(|&req| req & !state == 0)
    }

    fn first_uncovered(&self, state: u64) -> Option<usize> {
        (0..self.p_req.len()).find(|&qi| !self.covered(qi, state))
    }

    /// Greedy lower bound: sum the cheapest completion over a family of
    /// uncovered q-sets with pairwise disjoint edge supports.
    fn lower_bound(&self, state: u64) -> u32 {
        let mut used = 0u64;
        let mut extra = 0u32;
        for qi in 0..self.p_req.len() {
            if self.q_rmask[qi] & used != 0 || self.covered(qi, state) {
                continue;
            }
            let need = self.p_req[qi]
                .iter()
                .map(|&req| (req & !state).count_ones())
                .min()
                .unwrap_or(0);
            extra += need;
            used |= self.q_rmask[qi];
        }
        state.count_ones() + extra
    }

    fn dfs(&mut self, state: u64) {
        self.nodes += 1;
        if self.budget_hit {
            return;
        }
        if self.nodes > self.node_budget
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.budget_hit = true;
            return;
        }
        let qi = match self.first_uncovered(state) {
            None => {
                let count = state.count_ones();
                if count < self.best_count || (count == self.best_count && state < self.best_state)
                {
                    self.best_count = count;
                    self.best_state = state;
                }
                return;
            }
            Some(qi) => qi,
        };
        if self.lower_bound(state) >= self.best_count {
            return;
        }
        let mut options: Vec<u64> =
            self.p_req[qi].iter().map(|&req| req | state).collect();
        if state == 0 && self.symmetry_breaking {
            // any solution can be relabelled so that the colex-least
            // p-subset of the first q-set carries the clique
            options.truncate(1);
        }
        options.sort_by_key(|s| s.count_ones());
        options.dedup();
        for child in options {
            if child.count_ones() < self.best_count {
                self.dfs(child);
            }
        }
    }
}

fn hypergraph_of_state(n: usize, r: usize, rsubs: &[u128], state: u64) -> UniformHypergraph {
    let masks = rsubs
        .iter()
        .enumerate()
        .filter(|(i, _)| state >> i & 1 == 1)
        .map(|(_, &m)| m)
        .collect();
    UniformHypergraph::from_masks(n, r, masks)
}

/// Minimum edge count of an n-vertex r-uniform hypergraph with property
/// (q,p), with an optimal witness. Budget expiry returns the best found
/// so far flagged non-optimal.
pub fn exact_t(n: usize, r: usize, q: usize, p: usize, cfg: &SearchConfig) -> Result<ExactResult> {
    if !(2 <= r && r <= p && p <= q && q <= n) {
        return Err(Error::DegenerateParameters(format!(
            "need 2 <= r <= p <= q <= n, got n = {n}, r = {r}, q = {q}, p = {p}"
        )));
    }
    let total = binomial(n as u64, r as u64);
    if total > MAX_EDGE_VARS {
        return Err(Error::BadParams(format!(
            "C({n},{r}) = {total} exceeds the {MAX_EDGE_VARS}-edge solver limit"
        )));
    }
    let rsubs: Vec<u128> = k_subsets(n, r).collect();
    let mut q_rmask = Vec::new();
    let mut p_req = Vec::new();
    for qmask in k_subsets(n, q) {
        let mut rm = 0u64;
        for s in k_subsets_of_mask(qmask, r) {
            rm |= 1u64 << colex_rank(s);
        }
        q_rmask.push(rm);
        let reqs: Vec<u64> = k_subsets_of_mask(qmask, p)
            .into_iter()
            .map(|pmask| {
                let mut req = 0u64;
                for s in k_subsets_of_mask(pmask, r) {
                    req |= 1u64 << colex_rank(s);
                }
                req
            })
            .collect();
        p_req.push(reqs);
    }
    let full = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
    let mut search = TSearch {
        rsubs,
        q_rmask,
        p_req,
        nodes: 0,
        node_budget: cfg.node_budget,
        deadline: Instant::now() + Duration::from_secs(cfg.time_budget_secs),
        budget_hit: false,
        best_state: full,
        best_count: total as u32,
        symmetry_breaking: cfg.symmetry_breaking,
    };
    search.dfs(0);
    let witness = hypergraph_of_state(n, r, &search.rsubs, search.best_state);
    debug_assert!(verify_witness(&witness, q, p, search.best_count as u64));
    Ok(ExactResult {
        value: search.best_count as u64,
        witness,
        proved_optimal: !search.budget_hit,
        nodes: search.nodes,
    })
}

struct ExSearch<'a> {
    n: usize,
    r: usize,
    rsubs: Vec<u128>,
    family: &'a [UniformHypergraph],
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    budget_hit: bool,
    best_count: u32,
    best: Vec<u128>,
}

impl ExSearch<'_> {
    fn dfs(&mut self, idx: usize, chosen: &mut Vec<u128>) -> Result<()> {
        self.nodes += 1;
        if self.budget_hit {
            return Ok(());
        }
        if self.nodes > self.node_budget
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.budget_hit = true;
            return Ok(());
        }
        if chosen.len() as u32 + (self.rsubs.len() - idx) as u32 <= self.best_count {
            return Ok(());
        }
        if idx == self.rsubs.len() {
            if chosen.len() as u32 > self.best_count {
                self.best_count = chosen.len() as u32;
                self.best = chosen.clone();
            }
            return Ok(());
        }
        // include first, so large solutions are found early
        chosen.push(self.rsubs[idx]);
        let h = UniformHypergraph::from_masks(self.n, self.r, chosen.clone());
        if h.is_family_free(self.family)?.is_free() {
            self.dfs(idx + 1, chosen)?;
        }
        chosen.pop();
        self.dfs(idx + 1, chosen)
    }
}

/// Maximum edge count of an n-vertex r-uniform hypergraph containing no
/// member of the family.
pub fn exact_ex(
    n: usize,
    family: &[UniformHypergraph],
    cfg: &SearchConfig,
) -> Result<ExactResult> {
    let first = family
        .first()
        .ok_or_else(|| Error::BadParams("the forbidden family is empty".into()))?;
    let r = first.r();
    if let Some(bad) = family.iter().find(|f| f.r() != r) {
        return Err(Error::UniformityMismatch { left: r, right: bad.r() });
    }
    let mut search = ExSearch {
        n,
        r,
        rsubs: k_subsets(n, r).collect(),
        family,
        nodes: 0,
        node_budget: cfg.node_budget,
        deadline: Instant::now() + Duration::from_secs(cfg.time_budget_secs),
        budget_hit: false,
        best_count: 0,
        best: Vec::new(),
    };
    // the empty graph is always free
    let mut chosen = Vec::new();
    search.dfs(0, &mut chosen)?;
    let witness = UniformHypergraph::from_masks(n, r, search.best.clone());
    Ok(ExactResult {
        value: search.best_count as u64,
        witness,
        proved_optimal: !search.budget_hit,
        nodes: search.nodes,
    })
}

/// Every q-vertex r-graph whose independence number is below p, generated
/// by raw enumeration (duplicates up to isomorphism are kept). Only
/// sensible for tiny q.
pub fn generate_alpha_bounded_family(
    q: usize,
    r: usize,
    p: usize,
) -> Result<Vec<UniformHypergraph>> {
    if q > 5 {
        return Err(Error::BadParams(format!("raw generation is limited to q <= 5, got {q}")));
    }
    if r < 2 || p < r || q < p {
        return Err(Error::DegenerateParameters(format!("bad (q, r, p) = ({q}, {r}, {p})")));
    }
    let pool: Vec<u128> = k_subsets(q, r).collect();
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << pool.len()) {
        let masks: Vec<u128> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        let h = UniformHypergraph::from_masks(q, r, masks);
        if oracle::naive_independence_number(&h) <= p - 1 {
            out.push(h);
        }
    }
    Ok(out)
}

/// Independent witness check against the raw definition: edge budget plus
/// the unpruned property oracle.
pub fn verify_witness(h: &UniformHypergraph, q: usize, p: usize, claimed_m: u64) -> bool {
    h.edge_count() <= claimed_m && oracle::naive_has_property(h, q, p)
}

/// A CNF formula in memory, 1-based variable numbering.
#[derive(Clone, Debug)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    pub comments: Vec<String>,
}

impl Cnf {
    fn fresh_var(&mut self) -> i32 {
        self.num_vars += 1;
        self.num_vars as i32
    }
}

/// Totalizer node: output variables o_1..o_s meaning "at least j of the
/// inputs are true". Returns the outputs of the merged node.
fn totalizer_merge(cnf: &mut Cnf, a: &[i32], b: &[i32]) -> Vec<i32> {
    let out: Vec<i32> = (0..a.len() + b.len()).map(|_| cnf.fresh_var()).collect();
    for alpha in 0..=a.len() {
        for beta in 0..=b.len() {
            let sigma = alpha + beta;
            if sigma == 0 {
                continue;
            }
            let mut clause = Vec::with_capacity(3);
            if alpha > 0 {
                clause.push(-a[alpha - 1]);
            }
            if beta > 0 {
                clause.push(-b[beta - 1]);
            }
            clause.push(out[sigma - 1]);
            cnf.clauses.push(clause);
        }
    }
    out
}

fn totalizer_tree(cnf: &mut Cnf, leaves: &[Vec<i32>]) -> Vec<i32> {
    match leaves.len() {
        0 => Vec::new(),
        1 => leaves[0].clone(),
        _ => {
            let mid = leaves.len() / 2;
            let left = totalizer_tree(cnf, &leaves[..mid]);
            let right = totalizer_tree(cnf, &leaves[mid..]);
            totalizer_merge(cnf, &left, &right)
        }
    }
}

/// CNF satisfiable exactly when some n-vertex r-uniform hypergraph with at
/// most m edges has property (q,p). Edge variables are 1-based colex ranks
/// of the r-subsets; the header comments document the numbering.
pub fn build_property_cnf(n: usize, r: usize, q: usize, p: usize, m: u64) -> Result<Cnf> {
    if !(2 <= r && r <= p && p <= q && q <= n) {
        return Err(Error::DegenerateParameters(format!(
            "need 2 <= r <= p <= q <= n, got n = {n}, r = {r}, q = {q}, p = {p}"
        )));
    }
    let rsubs: Vec<u128> = k_subsets(n, r).collect();
    let num_edges = rsubs.len();
    let mut cnf = Cnf { num_vars: num_edges, clauses: Vec::new(), comments: Vec::new() };
    cnf.comments.push(format!(
        "minimum edge count instance: n = {n}, r = {r}, q = {q}, p = {p}, edge budget m = {m}"
    ));
    cnf.comments.push(format!(
        "variables 1..{num_edges}: edge indicators, colex order of the r-subsets"
    ));
    for (i, &s) in rsubs.iter().enumerate() {
        cnf.comments.push(format!("  var {} = edge {:?}", i + 1, indices_of_mask(s)));
    }
    // per q-set: some p-subset is a complete clique
    for qmask in k_subsets(n, q) {
        let mut q_clause = Vec::new();
        for pmask in k_subsets_of_mask(qmask, p) {
            let y = cnf.fresh_var();
            q_clause.push(y);
            for s in k_subsets_of_mask(pmask, r) {
                let x = colex_rank(s) as i32 + 1;
                cnf.clauses.push(vec![-y, x]);
            }
        }
        cnf.clauses.push(q_clause);
    }
    cnf.comments.push(format!(
        "variables {}..{}: one selector per (q-set, p-subset) pair",
        num_edges + 1,
        cnf.num_vars
    ));
    // cardinality: at most m edge variables true, totalizer encoding
    let first_tot = cnf.num_vars + 1;
    let leaves: Vec<Vec<i32>> = (1..=num_edges as i32).map(|v| vec![v]).collect();
    let outputs = totalizer_tree(&mut cnf, &leaves);
    cnf.comments.push(format!(
        "variables {}..{}: totalizer counters over the edge variables",
        first_tot, cnf.num_vars
    ));
    for (j, &o) in outputs.iter().enumerate() {
        if (j + 1) as u64 > m {
            cnf.clauses.push(vec![-o]);
        }
    }
    Ok(cnf)
}

/// Write a CNF in DIMACS format.
pub fn write_dimacs(cnf: &Cnf, path: &std::path::Path) -> Result<()> {
    let mut out = String::new();
    for c in &cnf.comments {
        out.push_str("c ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("p cnf {} {}\n", cnf.num_vars, cnf.clauses.len()));
    for clause in &cnf.clauses {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(out.as_bytes())?;
    Ok(())
}

/// Build and write the property CNF in one step.
pub fn export_cnf(
    n: usize,
    r: usize,
    q: usize,
    p: usize,
    m: u64,
    path: &std::path::Path,
) -> Result<()> {
    let cnf = build_property_cnf(n, r, q, p, m)?;
    write_dimacs(&cnf, path)
}

/// Plain DPLL with unit propagation; adequate for the cross-check sizes.
pub fn dpll_sat(cnf: &Cnf) -> bool {
    let mut assign = vec![0i8; cnf.num_vars + 1];
    dpll(&cnf.clauses, &mut assign)
}

fn lit_value(assign: &[i8], lit: i32) -> i8 {
    let v = assign[lit.unsigned_abs() as usize];
    if lit > 0 {
        v
    } else {
        -v
    }
}

/// Unit propagation to fixpoint. Returns false on conflict; assigned
/// variables are recorded on the trail either way.
fn propagate(clauses: &[Vec<i32>], assign: &mut [i8], trail: &mut Vec<usize>) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned: Option<i32> = None;
            let mut open = 0usize;
            let mut satisfied = false;
            for &lit in clause {
                match lit_value(assign, lit) {
                    1 => {
                        satisfied = true;
                        break;
                    }
                    0 => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                    _ => {}
                }
            }
            if satisfied {
                continue;
            }
            match open {
                0 => return false,
                1 => {
                    let lit = unassigned.unwrap();
                    let var = lit.unsigned_abs() as usize;
                    assign[var] = if lit > 0 { 1 } else { -1 };
                    trail.push(var);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn dpll(clauses: &[Vec<i32>], assign: &mut Vec<i8>) -> bool {
    let mut trail = Vec::new();
    if !propagate(clauses, assign, &mut trail) {
        for v in trail {
            assign[v] = 0;
        }
        return false;
    }
    let var = match (1..assign.len()).find(|&v| assign[v] == 0) {
        None => return true,
        Some(v) => v,
    };
    for val in [1i8, -1] {
        assign[var] = val;
        if dpll(clauses, assign) {
            return true;
        }
        assign[var] = 0;
    }
    for v in trail {
        assign[v] = 0;
    }
    false
}

/// Smallest edge budget m for which the CNF route is satisfiable: an
/// independent computation of the minimum edge count.
pub fn least_satisfiable_m(n: usize, r: usize, q: usize, p: usize) -> Result<u64> {
    let total = binomial(n as u64, r as u64);
    for m in 0..=total {
        if dpll_sat(&build_property_cnf(n, r, q, p, m)?) {
            return Ok(m);
        }
    }
    unreachable!("the complete graph satisfies every feasible instance")
}

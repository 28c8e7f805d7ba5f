//! Search over whole function tables: find every social choice or social
//! preference function on an `(n, m)` domain satisfying a set of axioms.
//!
//! Axioms whose quantifiers relate at most two profiles become unary
//! domain restrictions or pairwise allowed-matrices checked incrementally
//! during backtracking; existential axioms (non-imposition,
//! non-dictatorship, liberalism) are checked on complete tables, with a
//! cheap reachability prune for non-imposition. Variables are assigned in
//! breadth-first order from the unanimous profiles, so strategy-proofness
//! and independence constraints bind as early as possible.

use std::collections::HashMap;

use crate::alts::{Alt, AltSet};
use crate::axioms::domain::Domain;
use crate::axioms::{check_scf_axiom_values, check_spf_axiom_values, AxiomId};
use crate::error::{Error, Result};
use crate::profile::WeakOrder;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SearchKind {
    Scf,
    Spf,
}

#[derive(Clone, Debug)]
pub enum TableValues {
    Scf(Vec<AltSet>),
    Spf(Vec<WeakOrder>),
}

/// A complete function table over the domain's profile order.
#[derive(Clone, Debug)]
pub struct FunctionTable {
    pub n: usize,
    pub m: usize,
    pub values: TableValues,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Unsat,
    Census {
        count: u64,
        witnesses: Vec<FunctionTable>,
    },
}

impl SearchOutcome {
    pub fn count(&self) -> u64 {
        match self {
            SearchOutcome::Unsat => 0,
            SearchOutcome::Census { count, .. } => *count,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Max value assignments tried before giving up.
    pub node_budget: u64,
    /// Max explicit witnesses returned (the census count is always exact).
    pub max_witnesses: usize,
    /// Max profiles materialized for the domain.
    pub domain_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 50_000_000,
            max_witnesses: 16,
            domain_budget: 100_000,
        }
    }
}

/// All weak orders over `m` alternatives, deterministically ordered.
pub fn all_weak_orders(m: usize) -> Vec<WeakOrder> {
    fn rec(remaining: AltSet, tiers: &mut Vec<AltSet>, out: &mut Vec<WeakOrder>) {
        if remaining.is_empty() {
            out.push(WeakOrder::new(tiers.clone()).expect("disjoint tiers"));
            return;
        }
        let bits = remaining.bits();
        let mut subsets: Vec<u32> = Vec::new();
        let mut s = bits;
        loop {
            if s != 0 {
                subsets.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & bits;
        }
        subsets.sort_unstable();
        for sub in subsets {
            let tier = AltSet::from_bits(sub);
            tiers.push(tier);
            rec(remaining.difference(tier), tiers, out);
            tiers.pop();
        }
    }
    let mut out = Vec::new();
    rec(AltSet::full(m), &mut Vec::new(), &mut out);
    out
}

/// Dense allowed-matrix over ordered value pairs of a canonical `(lo, hi)`
/// variable pair.
struct PairMatrix {
    allowed: Vec<bool>,
    k: usize,
}

impl PairMatrix {
    fn new(k: usize) -> Self {
        PairMatrix {
            allowed: vec![true; k * k],
            k,
        }
    }

    fn forbid(&mut self, v_lo: usize, v_hi: usize) {
        self.allowed[v_lo * self.k + v_hi] = false;
    }

    fn ok(&self, v_lo: usize, v_hi: usize) -> bool {
        self.allowed[v_lo * self.k + v_hi]
    }
}

struct Builder {
    k: usize,
    unary: Vec<Vec<bool>>,
    pairs: HashMap<(usize, usize), PairMatrix>,
}

impl Builder {
    fn new(vars: usize, k: usize) -> Self {
        let _ = vars;
        Builder {
            k,
            unary: vec![vec![true; k]; vars],
            pairs: HashMap::new(),
        }
    }

    fn forbid_pair(&mut self, i: usize, j: usize, vi: usize, vj: usize) {
        debug_assert_ne!(i, j);
        let (lo, hi, v_lo, v_hi) = if i < j {
            (i, j, vi, vj)
        } else {
            (j, i, vj, vi)
        };
        let k = self.k;
        self.pairs
            .entry((lo, hi))
            .or_insert_with(|| PairMatrix::new(k))
            .forbid(v_lo, v_hi);
    }

    /// Require `value(j) == map[value(i)]`.
    fn require_map(&mut self, i: usize, j: usize, map: &[usize]) {
        for (vi, &image) in map.iter().enumerate() {
            for vj in 0..self.k {
                if vj != image {
                    self.forbid_pair(i, j, vi, vj);
                }
            }
        }
    }
}

/// Search for all functions on the `(n, m)` profile domain satisfying the
/// axioms. Returns the exact census (with up to `max_witnesses` explicit
/// tables) or `Unsat`.
pub fn impossibility_search(
    n: usize,
    m: usize,
    kind: SearchKind,
    axioms: &[AxiomId],
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    for axiom in axioms {
        match kind {
            SearchKind::Scf if axiom.is_spf() => {
                return Err(Error::invalid(format!(
                    "axiom `{axiom}` does not apply to social choice functions"
                )))
            }
            SearchKind::Spf if !axiom.is_spf() && *axiom != AxiomId::Resolute => {
                return Err(Error::invalid(format!(
                    "axiom `{axiom}` is not supported in the preference-function search"
                )))
            }
            _ => {}
        }
    }
    let resolute = axioms.contains(&AxiomId::Resolute);
    if axioms.contains(&AxiomId::StrategyProof) && !resolute {
        return Err(Error::invalid(
            "strategy-proofness is defined for resolute rules; add `resolute`",
        ));
    }

    let d = Domain::with_budget(n, m, cfg.domain_budget)?;
    let vars = d.len();
    let masks = d.supporter_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let alts: Vec<Alt> = (0..m as u32).map(Alt).collect();

    // candidate outputs
    let scf_outputs: Vec<AltSet>;
    let spf_outputs: Vec<WeakOrder>;
    let k;
    match kind {
        SearchKind::Scf => {
            scf_outputs = if resolute {
                alts.iter().map(|&a| AltSet::singleton(a)).collect()
            } else {
                (1..(1u32 << m)).map(AltSet::from_bits).collect()
            };
            spf_outputs = Vec::new();
            k = scf_outputs.len();
        }
        SearchKind::Spf => {
            spf_outputs = if resolute {
                all_weak_orders(m)
                    .into_iter()
                    .filter(|w| w.is_linear())
                    .collect()
            } else {
                all_weak_orders(m)
            };
            scf_outputs = Vec::new();
            k = spf_outputs.len();
        }
    }

    let mut b = Builder::new(vars, k);

    // unary restrictions and pairwise matrices per axiom
    for &axiom in axioms {
        match axiom {
            AxiomId::Resolute => {} // encoded in the output set
            AxiomId::Anonymous => {
                for perm in d.voter_permutations() {
                    if perm.iter().enumerate().all(|(i, &p)| i == p) {
                        continue;
                    }
                    for (i, p) in d.profiles.iter().enumerate() {
                        let j = d.index_of(&p.permute_voters(&perm)?);
                        if i == j {
                            continue;
                        }
                        let identity: Vec<usize> = (0..k).collect();
                        b.require_map(i, j, &identity);
                    }
                }
            }
            AxiomId::Neutral => {
                for perm in d.alternative_permutations() {
                    if perm.iter().enumerate().all(|(i, &a)| i == a.idx()) {
                        continue;
                    }
                    let omap: Vec<usize> = match kind {
                        SearchKind::Scf => scf_outputs
                            .iter()
                            .map(|v| {
                                let mapped: AltSet = v.iter().map(|a| perm[a.idx()]).collect();
                                scf_outputs
                                    .iter()
                                    .position(|o| *o == mapped)
                                    .expect("closed under permutation")
                            })
                            .collect(),
                        SearchKind::Spf => spf_outputs
                            .iter()
                            .map(|w| {
                                let mapped = WeakOrder::new(
                                    w.tiers()
                                        .iter()
                                        .map(|t| t.iter().map(|a| perm[a.idx()]).collect())
                                        .collect(),
                                )
                                .expect("permuted tiers stay disjoint");
                                spf_outputs
                                    .iter()
                                    .position(|o| *o == mapped)
                                    .expect("closed under permutation")
                            })
                            .collect(),
                    };
                    for (i, p) in d.profiles.iter().enumerate() {
                        let j = d.index_of(&p.permute_alternatives(&perm)?);
                        if i == j {
                            for (v, &image) in omap.iter().enumerate() {
                                if image != v {
                                    b.unary[i][v] = false;
                                }
                            }
                        } else {
                            b.require_map(i, j, &omap);
                        }
                    }
                }
            }
            AxiomId::Unanimous => {
                for (i, p) in d.profiles.iter().enumerate() {
                    let top = p.ballots()[0].top();
                    if p.ballots().iter().all(|bl| bl.top() == top) {
                        for (v, out) in scf_outputs.iter().enumerate() {
                            if *out != AltSet::singleton(top) {
                                b.unary[i][v] = false;
                            }
                        }
                    }
                }
            }
            AxiomId::Pareto => {
                for (i, _) in d.profiles.iter().enumerate() {
                    for &x in &alts {
                        let dominated = alts
                            .iter()
                            .any(|&y| y != x && masks[i][y.idx() * m + x.idx()] == full);
                        if dominated {
                            for (v, out) in scf_outputs.iter().enumerate() {
                                if out.contains(x) {
                                    b.unary[i][v] = false;
                                }
                            }
                        }
                    }
                }
            }
            AxiomId::CondorcetConsistent => {
                for (i, p) in d.profiles.iter().enumerate() {
                    let cw = crate::tournaments::condorcet_winner(p, false);
                    if cw.len() == 1 {
                        for (v, out) in scf_outputs.iter().enumerate() {
                            if *out != cw {
                                b.unary[i][v] = false;
                            }
                        }
                    }
                }
            }
            AxiomId::ParetoSpf => {
                for (i, mask_row) in masks.iter().enumerate() {
                    for &x in &alts {
                        for &y in &alts {
                            if x != y && mask_row[x.idx() * m + y.idx()] == full {
                                for (v, out) in spf_outputs.iter().enumerate() {
                                    if !out.strictly_prefers(x, y) {
                                        b.unary[i][v] = false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            AxiomId::Monotonic | AxiomId::PositivelyResponsive => {
                let positively = axiom == AxiomId::PositivelyResponsive;
                for i in 0..vars {
                    for j in 0..vars {
                        if i == j {
                            continue;
                        }
                        for &x in &alts {
                            if !super::raise_conditions(&masks[i], &masks[j], m, x) {
                                continue;
                            }
                            for (vi, out_i) in scf_outputs.iter().enumerate() {
                                if !out_i.contains(x) {
                                    continue;
                                }
                                for (vj, out_j) in scf_outputs.iter().enumerate() {
                                    let ok = if positively {
                                        *out_j == AltSet::singleton(x)
                                    } else {
                                        out_j.contains(x)
                                    };
                                    if !ok {
                                        b.forbid_pair(i, j, vi, vj);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            AxiomId::Independent => {
                for i in 0..vars {
                    for j in 0..vars {
                        if i == j {
                            continue;
                        }
                        for &x in &alts {
                            for &y in &alts {
                                if x == y
                                    || masks[i][x.idx() * m + y.idx()]
                                        != masks[j][x.idx() * m + y.idx()]
                                {
                                    continue;
                                }
                                for (vi, out_i) in scf_outputs.iter().enumerate() {
                                    if !(out_i.contains(x) && !out_i.contains(y)) {
                                        continue;
                                    }
                                    for (vj, out_j) in scf_outputs.iter().enumerate() {
                                        if out_j.contains(y) {
                                            b.forbid_pair(i, j, vi, vj);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            AxiomId::StrategyProof => {
                for (i, p) in d.profiles.iter().enumerate() {
                    for voter in 0..n {
                        let truthful = &p.ballots()[voter];
                        let current = d.rank_of_ballot(truthful);
                        for rank in 0..d.ballot_count() {
                            if rank == current {
                                continue;
                            }
                            let j = d.index_with_ballot(i, voter, rank);
                            for (vi, out_i) in scf_outputs.iter().enumerate() {
                                let before = out_i.first().expect("resolute output");
                                for (vj, out_j) in scf_outputs.iter().enumerate() {
                                    let after = out_j.first().expect("resolute output");
                                    if truthful.prefers(after, before) {
                                        b.forbid_pair(i, j, vi, vj);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            AxiomId::IiaSpf => {
                for i in 0..vars {
                    for j in i + 1..vars {
                        for &x in &alts {
                            for &y in &alts {
                                if x == y
                                    || masks[i][x.idx() * m + y.idx()]
                                        != masks[j][x.idx() * m + y.idx()]
                                {
                                    continue;
                                }
                                for (vi, out_i) in spf_outputs.iter().enumerate() {
                                    for (vj, out_j) in spf_outputs.iter().enumerate() {
                                        if out_i.weakly_prefers(x, y) != out_j.weakly_prefers(x, y)
                                        {
                                            b.forbid_pair(i, j, vi, vj);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            // completion-checked axioms
            AxiomId::NonImposed
            | AxiomId::NonDictatorial
            | AxiomId::NonDictatorialSpf
            | AxiomId::Liberal => {}
        }
    }

    // variable order: breadth-first from the unanimous profiles
    let order = bfs_order(&d);

    // constraint adjacency per variable
    let matrices: Vec<((usize, usize), PairMatrix)> = b.pairs.into_iter().collect();
    let mut adjacency: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); vars];
    for (idx, &((lo, hi), _)) in matrices.iter().enumerate() {
        adjacency[lo].push((hi, idx, true));
        adjacency[hi].push((lo, idx, false));
    }

    // non-imposition bookkeeping
    let track_imposition = axioms.contains(&AxiomId::NonImposed) && kind == SearchKind::Scf;
    let singleton_output: Vec<Option<usize>> = alts
        .iter()
        .map(|&a| scf_outputs.iter().position(|o| *o == AltSet::singleton(a)))
        .collect();
    let mut possible: Vec<u32> = alts
        .iter()
        .map(|&a| {
            let Some(v) = singleton_output[a.idx()] else {
                return 0;
            };
            (0..vars).filter(|&i| b.unary[i][v]).count() as u32
        })
        .collect();
    let mut chosen: Vec<u32> = vec![0; m];

    // completion data
    let dictator_tables: Vec<Vec<usize>> =
        if axioms.contains(&AxiomId::NonDictatorial) && kind == SearchKind::Scf {
            (0..n)
                .map(|voter| {
                    d.profiles
                        .iter()
                        .map(|p| {
                            let top = p.ballots()[voter].top();
                            scf_outputs
                                .iter()
                                .position(|o| *o == AltSet::singleton(top))
                                .unwrap_or(usize::MAX)
                        })
                        .collect()
                })
                .collect()
        } else if axioms.contains(&AxiomId::NonDictatorialSpf) && kind == SearchKind::Spf {
            (0..n)
                .map(|voter| {
                    d.profiles
                        .iter()
                        .map(|p| {
                            let w = WeakOrder::from_ballot(&p.ballots()[voter]);
                            spf_outputs
                                .iter()
                                .position(|o| *o == w)
                                .unwrap_or(usize::MAX)
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
    let check_liberal = axioms.contains(&AxiomId::Liberal);
    let check_nonimposed_complete = axioms.contains(&AxiomId::NonImposed);

    // depth-first search
    let mut assignment: Vec<usize> = vec![usize::MAX; vars];
    let mut count: u64 = 0;
    let mut witnesses: Vec<FunctionTable> = Vec::new();
    let mut nodes: u64 = 0;

    struct Frame {
        var: usize,
        next_value: usize,
    }
    let mut stack: Vec<Frame> = vec![Frame {
        var: order[0],
        next_value: 0,
    }];

    'search: while !stack.is_empty() {
        let depth = stack.len() - 1;
        let frame = stack.last_mut().expect("nonempty");
        let var = frame.var;

        // undo any previous value at this var
        if assignment[var] != usize::MAX {
            let old = assignment[var];
            assignment[var] = usize::MAX;
            if track_imposition {
                for (xi, &s) in singleton_output.iter().enumerate() {
                    if s == Some(old) {
                        chosen[xi] -= 1;
                    }
                    if matches!(s, Some(v) if b.unary[var][v]) {
                        possible[xi] += 1;
                    }
                }
            }
        }

        // try the next value
        let mut placed = false;
        while frame.next_value < k {
            let v = frame.next_value;
            frame.next_value += 1;
            if !b.unary[var][v] {
                continue;
            }
            nodes += 1;
            if nodes > cfg.node_budget {
                return Err(Error::Budget(format!(
                    "table search exceeded {} nodes with {count} solutions found",
                    cfg.node_budget
                )));
            }
            let consistent = adjacency[var].iter().all(|&(other, mat_idx, var_is_lo)| {
                let w = assignment[other];
                if w == usize::MAX {
                    return true;
                }
                let mat = &matrices[mat_idx].1;
                if var_is_lo {
                    mat.ok(v, w)
                } else {
                    mat.ok(w, v)
                }
            });
            if !consistent {
                continue;
            }
            // tentative imposition prune
            if track_imposition {
                let mut feasible = true;
                for (xi, &s) in singleton_output.iter().enumerate() {
                    let p = possible[xi] - u32::from(matches!(s, Some(sv) if b.unary[var][sv]));
                    let c = chosen[xi] + u32::from(s == Some(v));
                    if c == 0 && p == 0 {
                        feasible = false;
                        break;
                    }
                }
                if !feasible {
                    continue;
                }
            }

            // commit
            assignment[var] = v;
            if track_imposition {
                for (xi, &s) in singleton_output.iter().enumerate() {
                    if matches!(s, Some(sv) if b.unary[var][sv]) {
                        possible[xi] -= 1;
                    }
                    if s == Some(v) {
                        chosen[xi] += 1;
                    }
                }
            }
            placed = true;
            break;
        }

        if !placed {
            stack.pop();
            continue;
        }

        if depth + 1 == vars {
            // complete table: run completion checks
            let mut accept = true;
            if check_nonimposed_complete && kind == SearchKind::Scf {
                accept &= alts.iter().all(|&a| {
                    assignment
                        .iter()
                        .any(|&v| scf_outputs[v] == AltSet::singleton(a))
                });
            }
            if accept && !dictator_tables.is_empty() {
                accept &= dictator_tables.iter().all(|t| t != &assignment);
            }
            if accept && check_liberal {
                let values: Vec<AltSet> = assignment.iter().map(|&v| scf_outputs[v]).collect();
                accept &= check_scf_axiom_values(&d, &values, AxiomId::Liberal)?.holds();
            }
            if accept {
                count += 1;
                if witnesses.len() < cfg.max_witnesses {
                    let values = match kind {
                        SearchKind::Scf => {
                            TableValues::Scf(assignment.iter().map(|&v| scf_outputs[v]).collect())
                        }
                        SearchKind::Spf => TableValues::Spf(
                            assignment.iter().map(|&v| spf_outputs[v].clone()).collect(),
                        ),
                    };
                    witnesses.push(FunctionTable { n, m, values });
                }
            }
            // stay on this frame to try the next value
            continue 'search;
        }

        stack.push(Frame {
            var: order[depth + 1],
            next_value: 0,
        });
    }

    if count == 0 {
        Ok(SearchOutcome::Unsat)
    } else {
        Ok(SearchOutcome::Census { count, witnesses })
    }
}

/// Breadth-first variable order from the unanimous profiles over the
/// single-ballot-change adjacency; ties broken by profile index.
fn bfs_order(d: &Domain) -> Vec<usize> {
    let vars = d.len();
    let mut dist = vec![usize::MAX; vars];
    let mut queue = std::collections::VecDeque::new();
    for rank in 0..d.ballot_count() {
        let mut index = 0usize;
        for _ in 0..d.n {
            index = index * d.ballot_count() + rank;
        }
        dist[index] = 0;
        queue.push_back(index);
    }
    while let Some(i) = queue.pop_front() {
        for voter in 0..d.n {
            for rank in 0..d.ballot_count() {
                let j = d.index_with_ballot(i, voter, rank);
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..vars).collect();
    order.sort_by_key(|&i| (dist[i], i));
    order
}

impl FunctionTable {
    /// Evaluate the table as a social choice function over its domain.
    pub fn scf_values(&self) -> Option<&[AltSet]> {
        match &self.values {
            TableValues::Scf(v) => Some(v),
            TableValues::Spf(_) => None,
        }
    }

    pub fn spf_values(&self) -> Option<&[WeakOrder]> {
        match &self.values {
            TableValues::Spf(v) => Some(v),
            TableValues::Scf(_) => None,
        }
    }
}

/// Re-check a census table against the axiom set, using the value-level
/// checkers directly.
pub fn verify_table(table: &FunctionTable, axioms: &[AxiomId]) -> Result<bool> {
    let d = Domain::new(table.n, table.m)?;
    for &axiom in axioms {
        let holds = match (&table.values, axiom) {
            (_, AxiomId::Resolute) => match &table.values {
                TableValues::Scf(v) => v.iter().all(|s| s.len() == 1),
                TableValues::Spf(v) => v.iter().all(|w| w.is_linear()),
            },
            (TableValues::Scf(v), _) => check_scf_axiom_values(&d, v, axiom)?.holds(),
            (TableValues::Spf(v), _) => check_spf_axiom_values(&d, v, axiom)?.holds(),
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

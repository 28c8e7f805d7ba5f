//! Black-box axiom checking over enumerable domains, decisive and blocking
//! coalition analysis, and backtracking searches over whole function tables.
//!
//! Every check quantifies exactly as the axiom is stated: monotonicity and
//! positive responsiveness range over all profile pairs satisfying their
//! side conditions, liberalism searches pair assignments per voter, and
//! strategy-proofness scans every single-voter deviation.

pub mod coalitions;
pub mod domain;
pub mod search;

use std::fmt;

use crate::alts::{Alt, AltSet};
use crate::error::{Error, Result};
use crate::profile::{Profile, WeakOrder};
use crate::rules::RuleHandle;
use crate::tournaments::condorcet_winner;

pub use domain::Domain;

/// The axiom identifiers. The `*Spf` variants apply to the social
/// preference function induced by a rule via [`spf_of`].
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum AxiomId {
    Anonymous,
    Neutral,
    /// No voter's top is the whole choice set on every profile. This is the
    /// set-equality form: an irresolute rule that merely always contains
    /// some voter's top still counts as non-dictatorial.
    NonDictatorial,
    Pareto,
    Unanimous,
    Monotonic,
    PositivelyResponsive,
    NonImposed,
    Resolute,
    Independent,
    CondorcetConsistent,
    /// Exists-forall: every voter has some pair of alternatives on which
    /// they are two-way decisive. The checker searches pairs per voter and
    /// reports the best partial assignment on failure.
    Liberal,
    StrategyProof,
    IiaSpf,
    ParetoSpf,
    NonDictatorialSpf,
}

impl AxiomId {
    pub fn is_spf(self) -> bool {
        matches!(
            self,
            AxiomId::IiaSpf | AxiomId::ParetoSpf | AxiomId::NonDictatorialSpf
        )
    }

    pub const ALL: [AxiomId; 16] = [
        AxiomId::Anonymous,
        AxiomId::Neutral,
        AxiomId::NonDictatorial,
        AxiomId::Pareto,
        AxiomId::Unanimous,
        AxiomId::Monotonic,
        AxiomId::PositivelyResponsive,
        AxiomId::NonImposed,
        AxiomId::Resolute,
        AxiomId::Independent,
        AxiomId::CondorcetConsistent,
        AxiomId::Liberal,
        AxiomId::StrategyProof,
        AxiomId::IiaSpf,
        AxiomId::ParetoSpf,
        AxiomId::NonDictatorialSpf,
    ];

    pub fn parse(s: &str) -> Result<AxiomId> {
        let id = match s {
            "anonymous" => AxiomId::Anonymous,
            "neutral" => AxiomId::Neutral,
            "non-dictatorial" => AxiomId::NonDictatorial,
            "pareto" => AxiomId::Pareto,
            "unanimous" => AxiomId::Unanimous,
            "monotonic" => AxiomId::Monotonic,
            "positively-responsive" => AxiomId::PositivelyResponsive,
            "non-imposed" => AxiomId::NonImposed,
            "resolute" => AxiomId::Resolute,
            "independent" => AxiomId::Independent,
            "condorcet-consistent" => AxiomId::CondorcetConsistent,
            "liberal" => AxiomId::Liberal,
            "strategy-proof" => AxiomId::StrategyProof,
            "iia-spf" => AxiomId::IiaSpf,
            "pareto-spf" => AxiomId::ParetoSpf,
            "non-dictatorial-spf" => AxiomId::NonDictatorialSpf,
            other => return Err(Error::invalid(format!("unknown axiom `{other}`"))),
        };
        Ok(id)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomId::Anonymous => "anonymous",
            AxiomId::Neutral => "neutral",
            AxiomId::NonDictatorial => "non-dictatorial",
            AxiomId::Pareto => "pareto",
            AxiomId::Unanimous => "unanimous",
            AxiomId::Monotonic => "monotonic",
            AxiomId::PositivelyResponsive => "positively-responsive",
            AxiomId::NonImposed => "non-imposed",
            AxiomId::Resolute => "resolute",
            AxiomId::Independent => "independent",
            AxiomId::CondorcetConsistent => "condorcet-consistent",
            AxiomId::Liberal => "liberal",
            AxiomId::StrategyProof => "strategy-proof",
            AxiomId::IiaSpf => "iia-spf",
            AxiomId::ParetoSpf => "pareto-spf",
            AxiomId::NonDictatorialSpf => "non-dictatorial-spf",
        };
        f.write_str(s)
    }
}

/// Counterexample bundle for a failed axiom; carries exactly the objects
/// the axiom's quantifiers range over.
#[derive(Clone, Debug, Default)]
pub struct Witness {
    pub profiles: Vec<Profile>,
    pub voter: Option<usize>,
    pub alternatives: Vec<Alt>,
    pub voter_permutation: Option<Vec<usize>>,
    pub alternative_permutation: Option<Vec<Alt>>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub enum CheckReport {
    Holds,
    Fails(Witness),
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        matches!(self, CheckReport::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CheckReport::Holds => None,
            CheckReport::Fails(w) => Some(w),
        }
    }
}

/// Check one axiom of a rule over the full `(n, m)` profile domain.
pub fn check_axiom(rule: &RuleHandle, axiom: AxiomId, n: usize, m: usize) -> Result<CheckReport> {
    let d = Domain::new(n, m)?;
    check_axiom_on(&d, rule, axiom)
}

/// Check one axiom against an already materialized domain.
pub fn check_axiom_on(d: &Domain, rule: &RuleHandle, axiom: AxiomId) -> Result<CheckReport> {
    if axiom.is_spf() {
        let spf = spf_of(rule.clone());
        let values: Vec<WeakOrder> = d
            .profiles
            .iter()
            .map(|p| spf.evaluate(p))
            .collect::<Result<_>>()?;
        check_spf_axiom_values(d, &values, axiom)
    } else {
        let values: Vec<AltSet> = d
            .profiles
            .iter()
            .map(|p| rule.winners(p))
            .collect::<Result<_>>()?;
        check_scf_axiom_values(d, &values, axiom)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// Check an SCF axiom given the rule's value on every domain profile.
pub fn check_scf_axiom_values(
    d: &Domain,
    values: &[AltSet],
    axiom: AxiomId,
) -> Result<CheckReport> {
    debug_assert_eq!(values.len(), d.len());
    let m = d.m;
    let alts: Vec<Alt> = (0..m as u32).map(Alt).collect();
    match axiom {
        AxiomId::Anonymous => {
            for perm in d.voter_permutations() {
                for (i, p) in d.profiles.iter().enumerate() {
                    let j = d.index_of(&p.permute_voters(&perm)?);
                    if values[i] != values[j] {
                        return Ok(CheckReport::Fails(Witness {
                            profiles: vec![p.clone()],
                            voter_permutation: Some(perm),
                            note: "winners change under a voter permutation".into(),
                            ..Witness::default()
                        }));
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Neutral => {
            for perm in d.alternative_permutations() {
                for (i, p) in d.profiles.iter().enumerate() {
                    let j = d.index_of(&p.permute_alternatives(&perm)?);
                    let expected: AltSet = values[i].iter().map(|a| perm[a.idx()]).collect();
                    if values[j] != expected {
                        return Ok(CheckReport::Fails(Witness {
                            profiles: vec![p.clone()],
                            alternative_permutation: Some(perm),
                            note: "winners do not commute with an alternative permutation".into(),
                            ..Witness::default()
                        }));
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::NonDictatorial => {
            for voter in 0..d.n {
                let dictates = d
                    .profiles
                    .iter()
                    .enumerate()
                    .all(|(i, p)| values[i] == AltSet::singleton(p.ballots()[voter].top()));
                if dictates {
                    return Ok(CheckReport::Fails(Witness {
                        voter: Some(voter),
                        note: format!("voter {voter} is a dictator"),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Pareto => {
            let full = full_mask(d.n);
            let masks = d.supporter_masks();
            for (i, p) in d.profiles.iter().enumerate() {
                for &x in &alts {
                    let dominated = alts
                        .iter()
                        .any(|&y| y != x && masks[i][y.idx() * m + x.idx()] == full);
                    if dominated && values[i].contains(x) {
                        return Ok(CheckReport::Fails(Witness {
                            profiles: vec![p.clone()],
                            alternatives: vec![x],
                            note: "a unanimously dominated alternative was chosen".into(),
                            ..Witness::default()
                        }));
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Unanimous => {
            for (i, p) in d.profiles.iter().enumerate() {
                let top = p.ballots()[0].top();
                if p.ballots().iter().all(|b| b.top() == top) && values[i] != AltSet::singleton(top)
                {
                    return Ok(CheckReport::Fails(Witness {
                        profiles: vec![p.clone()],
                        alternatives: vec![top],
                        note: "a unanimous top is not the unique winner".into(),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Monotonic | AxiomId::PositivelyResponsive => {
            let masks = d.supporter_masks();
            let positively = axiom == AxiomId::PositivelyResponsive;
            for i in 0..d.len() {
                for j in 0..d.len() {
                    if positively && i == j {
                        continue;
                    }
                    for &x in &alts {
                        if !values[i].contains(x) {
                            continue;
                        }
                        if !raise_conditions(&masks[i], &masks[j], m, x) {
                            continue;
                        }
                        let ok = if positively {
                            values[j] == AltSet::singleton(x)
                        } else {
                            values[j].contains(x)
                        };
                        if !ok {
                            return Ok(CheckReport::Fails(Witness {
                                profiles: vec![d.profiles[i].clone(), d.profiles[j].clone()],
                                alternatives: vec![x],
                                note: "raising a winner dropped it".into(),
                                ..Witness::default()
                            }));
                        }
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::NonImposed => {
            for &x in &alts {
                if !values.iter().any(|v| *v == AltSet::singleton(x)) {
                    return Ok(CheckReport::Fails(Witness {
                        alternatives: vec![x],
                        note: "never the unique winner on any profile".into(),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Resolute => {
            for (i, p) in d.profiles.iter().enumerate() {
                if values[i].len() != 1 {
                    return Ok(CheckReport::Fails(Witness {
                        profiles: vec![p.clone()],
                        note: "tied winner set".into(),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Independent => {
            let masks = d.supporter_masks();
            for i in 0..d.len() {
                for j in 0..d.len() {
                    for &x in &alts {
                        for &y in &alts {
                            if x == y {
                                continue;
                            }
                            if masks[i][x.idx() * m + y.idx()] != masks[j][x.idx() * m + y.idx()] {
                                continue;
                            }
                            if values[i].contains(x)
                                && !values[i].contains(y)
                                && values[j].contains(y)
                            {
                                return Ok(CheckReport::Fails(Witness {
                                    profiles: vec![d.profiles[i].clone(), d.profiles[j].clone()],
                                    alternatives: vec![x, y],
                                    note: "membership of the pair not independent".into(),
                                    ..Witness::default()
                                }));
                            }
                        }
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::CondorcetConsistent => {
            for (i, p) in d.profiles.iter().enumerate() {
                let cw = condorcet_winner(p, false);
                if cw.len() == 1 && values[i] != cw {
                    return Ok(CheckReport::Fails(Witness {
                        profiles: vec![p.clone()],
                        alternatives: cw.iter().collect(),
                        note: "the Condorcet winner is not the unique winner".into(),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::Liberal => {
            let masks = d.supporter_masks();
            let mut assigned: Vec<(usize, Alt, Alt)> = Vec::new();
            for voter in 0..d.n {
                let bit = 1u64 << voter;
                let mut found = None;
                'pairs: for &x in &alts {
                    for &y in &alts {
                        if x >= y {
                            continue;
                        }
                        let vetoes = (0..d.len()).all(|i| {
                            let prefers_xy = masks[i][x.idx() * m + y.idx()] & bit != 0;
                            let prefers_yx = masks[i][y.idx() * m + x.idx()] & bit != 0;
                            (!prefers_xy || !values[i].contains(y))
                                && (!prefers_yx || !values[i].contains(x))
                        });
                        if vetoes {
                            found = Some((x, y));
                            break 'pairs;
                        }
                    }
                }
                match found {
                    Some((x, y)) => assigned.push((voter, x, y)),
                    None => {
                        let partial = assigned
                            .iter()
                            .map(|(v, x, y)| format!("voter {v}: ({}, {})", x.0, y.0))
                            .collect::<Vec<_>>()
                            .join("; ");
                        return Ok(CheckReport::Fails(Witness {
                            voter: Some(voter),
                            note: format!(
                                "no two-way decisive pair for voter {voter}; best partial assignment: [{partial}]"
                            ),
                            ..Witness::default()
                        }));
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::StrategyProof => {
            let singletons: Vec<Alt> = values
                .iter()
                .map(|v| {
                    if v.len() == 1 {
                        Ok(v.first().expect("singleton"))
                    } else {
                        Err(Error::Irresolute)
                    }
                })
                .collect::<Result<_>>()?;
            for (i, p) in d.profiles.iter().enumerate() {
                for voter in 0..d.n {
                    let truthful = &p.ballots()[voter];
                    let current_rank = d.rank_of_ballot(truthful);
                    for rank in 0..d.ballot_count() {
                        if rank == current_rank {
                            continue;
                        }
                        let j = d.index_with_ballot(i, voter, rank);
                        if truthful.prefers(singletons[j], singletons[i]) {
                            return Ok(CheckReport::Fails(Witness {
                                profiles: vec![p.clone(), d.profiles[j].clone()],
                                voter: Some(voter),
                                alternatives: vec![singletons[i], singletons[j]],
                                note: "profitable misreport".into(),
                                ..Witness::default()
                            }));
                        }
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::IiaSpf | AxiomId::ParetoSpf | AxiomId::NonDictatorialSpf => {
            Err(Error::invalid("SPF axiom passed to the SCF value checker"))
        }
    }
}

/// Side conditions for raising `x` from profile `i` to profile `j`: the
/// supporters of `x` against everything only grow, and every pair not
/// involving `x` keeps exactly the same supporters.
fn raise_conditions(masks_i: &[u64], masks_j: &[u64], m: usize, x: Alt) -> bool {
    for y in 0..m {
        if y == x.idx() {
            continue;
        }
        let xy_i = masks_i[x.idx() * m + y];
        let xy_j = masks_j[x.idx() * m + y];
        if xy_i & !xy_j != 0 {
            return false;
        }
        for z in 0..m {
            if z == x.idx() || z == y {
                continue;
            }
            if masks_i[y * m + z] != masks_j[y * m + z] {
                return false;
            }
        }
    }
    true
}

/// Check an SPF axiom given the induced weak order on every domain profile.
pub fn check_spf_axiom_values(
    d: &Domain,
    values: &[WeakOrder],
    axiom: AxiomId,
) -> Result<CheckReport> {
    let m = d.m;
    let alts: Vec<Alt> = (0..m as u32).map(Alt).collect();
    match axiom {
        AxiomId::IiaSpf => {
            let masks = d.supporter_masks();
            for i in 0..d.len() {
                for j in 0..d.len() {
                    for &x in &alts {
                        for &y in &alts {
                            if x == y {
                                continue;
                            }
                            if masks[i][x.idx() * m + y.idx()] != masks[j][x.idx() * m + y.idx()] {
                                continue;
                            }
                            if values[i].weakly_prefers(x, y) != values[j].weakly_prefers(x, y) {
                                return Ok(CheckReport::Fails(Witness {
                                    profiles: vec![d.profiles[i].clone(), d.profiles[j].clone()],
                                    alternatives: vec![x, y],
                                    note:
                                        "social ranking of the pair depends on other alternatives"
                                            .into(),
                                    ..Witness::default()
                                }));
                            }
                        }
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::ParetoSpf => {
            let full = full_mask(d.n);
            let masks = d.supporter_masks();
            for (i, p) in d.profiles.iter().enumerate() {
                for &x in &alts {
                    for &y in &alts {
                        if x != y
                            && masks[i][x.idx() * m + y.idx()] == full
                            && !values[i].strictly_prefers(x, y)
                        {
                            return Ok(CheckReport::Fails(Witness {
                                profiles: vec![p.clone()],
                                alternatives: vec![x, y],
                                note: "unanimous pair not strictly ranked socially".into(),
                                ..Witness::default()
                            }));
                        }
                    }
                }
            }
            Ok(CheckReport::Holds)
        }
        AxiomId::NonDictatorialSpf => {
            for voter in 0..d.n {
                let dictates = d
                    .profiles
                    .iter()
                    .enumerate()
                    .all(|(i, p)| values[i] == WeakOrder::from_ballot(&p.ballots()[voter]));
                if dictates {
                    return Ok(CheckReport::Fails(Witness {
                        voter: Some(voter),
                        note: format!("the social preference always equals voter {voter}'s ballot"),
                        ..Witness::default()
                    }));
                }
            }
            Ok(CheckReport::Holds)
        }
        other => Err(Error::invalid(format!(
            "axiom `{other}` is not an SPF axiom"
        ))),
    }
}

/// The social preference function induced by iterated choice-and-removal:
/// the first tier is the rule's winner set, the next tier its winner set on
/// the restriction without them, and so on.
#[derive(Clone, Debug)]
pub struct SpfHandle {
    pub rule: RuleHandle,
}

pub fn spf_of(rule: RuleHandle) -> SpfHandle {
    SpfHandle { rule }
}

impl SpfHandle {
    pub fn evaluate(&self, p: &Profile) -> Result<WeakOrder> {
        let mut tiers = Vec::new();
        let mut remaining = p.domain();
        while !remaining.is_empty() {
            // a lone survivor forms the last tier without consulting the rule
            if remaining.len() == 1 {
                tiers.push(remaining);
                break;
            }
            let restricted = p.restrict(remaining)?;
            let chosen = self.rule.winners(&restricted)?;
            tiers.push(chosen);
            remaining = remaining.difference(chosen);
        }
        WeakOrder::new(tiers)
    }
}

/// Outcome of checking that a Pareto + IIA social preference function never
/// ties (and reporting honestly when the premises already fail).
#[derive(Clone, Debug)]
pub enum LinearityReport {
    /// One of the premises fails, so the linearity claim is vacuous.
    PremiseFails { axiom: AxiomId, witness: Witness },
    /// Premises hold and no profile produces a tie tier.
    Linear,
    /// Premises hold yet a tie appeared (would contradict the theorem).
    TieFound { profile: Profile, tie: AltSet },
}

/// Verify that an SPF satisfying both IIA and Pareto outputs a linear order
/// on every profile of the `(n, m)` domain.
pub fn spf_linearity_check(rule: &RuleHandle, n: usize, m: usize) -> Result<LinearityReport> {
    let d = Domain::new(n, m)?;
    let spf = spf_of(rule.clone());
    let values: Vec<WeakOrder> = d
        .profiles
        .iter()
        .map(|p| spf.evaluate(p))
        .collect::<Result<_>>()?;
    for axiom in [AxiomId::IiaSpf, AxiomId::ParetoSpf] {
        if let CheckReport::Fails(witness) = check_spf_axiom_values(&d, &values, axiom)? {
            return Ok(LinearityReport::PremiseFails { axiom, witness });
        }
    }
    for (i, value) in values.iter().enumerate() {
        if let Some(tie) = value.first_tie() {
            return Ok(LinearityReport::TieFound {
                profile: d.profiles[i].clone(),
                tie,
            });
        }
    }
    Ok(LinearityReport::Linear)
}

/// One rule's row in the implication suite.
#[derive(Clone, Debug)]
pub struct ImplicationRow {
    pub rule: String,
    pub non_imposed: bool,
    pub monotonic: bool,
    pub unanimous: bool,
    pub pareto: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ImplicationReport {
    pub rows: Vec<ImplicationRow>,
}

impl ImplicationReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.violations.is_empty())
    }
}

/// For every catalog rule, verify the axiom implications as material
/// conditionals: non-imposed and monotonic entail unanimous; Pareto entails
/// unanimous; unanimous entails non-imposed.
pub fn implication_suite(
    n: usize,
    m: usize,
    catalog: &[(String, RuleHandle)],
) -> Result<ImplicationReport> {
    let d = Domain::new(n, m)?;
    let mut rows = Vec::new();
    for (name, rule) in catalog {
        let values: Vec<AltSet> = d
            .profiles
            .iter()
            .map(|p| rule.winners(p))
            .collect::<Result<_>>()?;
        let verdict = |axiom: AxiomId| -> Result<bool> {
            Ok(check_scf_axiom_values(&d, &values, axiom)?.holds())
        };
        let non_imposed = verdict(AxiomId::NonImposed)?;
        let monotonic = verdict(AxiomId::Monotonic)?;
        let unanimous = verdict(AxiomId::Unanimous)?;
        let pareto = verdict(AxiomId::Pareto)?;
        let mut violations = Vec::new();
        if non_imposed && monotonic && !unanimous {
            violations.push("non-imposed and monotonic but not unanimous".to_string());
        }
        if pareto && !unanimous {
            violations.push("pareto but not unanimous".to_string());
        }
        if unanimous && !non_imposed {
            violations.push("unanimous but imposed".to_string());
        }
        rows.push(ImplicationRow {
            rule: name.clone(),
            non_imposed,
            monotonic,
            unanimous,
            pareto,
            violations,
        });
    }
    Ok(ImplicationReport { rows })
}

/// Assignment of a two-way decisive pair to a voter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiberalAssignment {
    pub voter: usize,
    pub pair: (Alt, Alt),
}

/// A profile on which liberal vetoes plus Pareto dominance exclude every
/// alternative, together with the exclusion record.
#[derive(Clone, Debug)]
pub struct SenWitness {
    pub profile: Profile,
    /// `(voter, alternative)` pairs: the voter's veto excludes the alternative.
    pub excluded_by_liberal: Vec<(usize, Alt)>,
    /// `(dominated, dominator)` pairs.
    pub excluded_by_pareto: Vec<(Alt, Alt)>,
}

/// Construct a profile witnessing the inconsistency of Pareto with
/// liberalism for the given pair assignment: every alternative is excluded
/// either by some voter's veto or by Pareto dominance, so no valid social
/// choice remains.
pub fn sen_witness(n: usize, m: usize, assignments: &[LiberalAssignment]) -> Result<SenWitness> {
    if n < 2 || m < 3 {
        return Err(Error::invalid("the construction needs n >= 2 and m > 2"));
    }
    let mut distinct: Vec<&LiberalAssignment> = Vec::new();
    for a in assignments {
        if a.voter >= n || a.pair.0 == a.pair.1 {
            return Err(Error::invalid("assignment names a bad voter or pair"));
        }
        if !distinct.iter().any(|b| **b == *a) {
            distinct.push(a);
        }
    }
    let voters: std::collections::BTreeSet<usize> = distinct.iter().map(|a| a.voter).collect();
    if distinct.len() < 2 || voters.len() < 2 {
        return Err(Error::invalid(
            "degenerate pair assignment: need two voters with assigned pairs",
        ));
    }

    let d = Domain::new(n, m)?;
    let full = full_mask(n);
    for p in &d.profiles {
        let mut excluded = AltSet::EMPTY;
        let mut by_liberal = Vec::new();
        let mut by_pareto = Vec::new();
        for a in &distinct {
            let (x, y) = a.pair;
            if p.ballots()[a.voter].prefers(x, y) {
                excluded.insert(y);
                by_liberal.push((a.voter, y));
            } else {
                excluded.insert(x);
                by_liberal.push((a.voter, x));
            }
        }
        for x in p.domain().iter() {
            for y in p.domain().iter() {
                if x != y && p.supporters(y, x) == full {
                    excluded.insert(x);
                    by_pareto.push((x, y));
                }
            }
        }
        if excluded == p.domain() {
            return Ok(SenWitness {
                profile: p.clone(),
                excluded_by_liberal: by_liberal,
                excluded_by_pareto: by_pareto,
            });
        }
    }
    Err(Error::invalid(
        "no profile forces an empty choice for this assignment",
    ))
}

/// Re-evaluate a failure witness against the rule and confirm it violates
/// the axiom. Existentially-quantified axioms (non-dictatorship,
/// non-imposition, liberalism) re-run the full check instead, since their
/// failures are global statements.
pub fn replay_witness(
    rule: &RuleHandle,
    axiom: AxiomId,
    w: &Witness,
    n: usize,
    m: usize,
) -> Result<bool> {
    match axiom {
        AxiomId::Anonymous => {
            let p = &w.profiles[0];
            let perm = w.voter_permutation.as_ref().expect("anonymity witness");
            Ok(rule.winners(p)? != rule.winners(&p.permute_voters(perm)?)?)
        }
        AxiomId::Neutral => {
            let p = &w.profiles[0];
            let perm = w
                .alternative_permutation
                .as_ref()
                .expect("neutrality witness");
            let mapped: AltSet = rule.winners(p)?.iter().map(|a| perm[a.idx()]).collect();
            Ok(rule.winners(&p.permute_alternatives(perm)?)? != mapped)
        }
        AxiomId::Pareto => {
            let p = &w.profiles[0];
            let x = w.alternatives[0];
            let dominated = p
                .domain()
                .iter()
                .any(|y| y != x && p.ballots().iter().all(|b| b.prefers(y, x)));
            Ok(dominated && rule.winners(p)?.contains(x))
        }
        AxiomId::Unanimous => {
            let p = &w.profiles[0];
            let top = p.ballots()[0].top();
            let unanimous = p.ballots().iter().all(|b| b.top() == top);
            Ok(unanimous && rule.winners(p)? != AltSet::singleton(top))
        }
        AxiomId::Monotonic | AxiomId::PositivelyResponsive => {
            let (p, q) = (&w.profiles[0], &w.profiles[1]);
            let x = w.alternatives[0];
            let mp = profile_masks(p);
            let mq = profile_masks(q);
            if !raise_conditions(&mp, &mq, p.m(), x) {
                return Ok(false);
            }
            let before = rule.winners(p)?;
            let after = rule.winners(q)?;
            Ok(before.contains(x)
                && if axiom == AxiomId::Monotonic {
                    !after.contains(x)
                } else {
                    after != AltSet::singleton(x)
                })
        }
        AxiomId::Resolute => Ok(rule.winners(&w.profiles[0])?.len() != 1),
        AxiomId::Independent => {
            let (p, q) = (&w.profiles[0], &w.profiles[1]);
            let (x, y) = (w.alternatives[0], w.alternatives[1]);
            if p.supporters(x, y) != q.supporters(x, y) {
                return Ok(false);
            }
            let vp = rule.winners(p)?;
            let vq = rule.winners(q)?;
            Ok(vp.contains(x) && !vp.contains(y) && vq.contains(y))
        }
        AxiomId::CondorcetConsistent => {
            let p = &w.profiles[0];
            let cw = condorcet_winner(p, false);
            Ok(cw.len() == 1 && rule.winners(p)? != cw)
        }
        AxiomId::StrategyProof => {
            let (p, q) = (&w.profiles[0], &w.profiles[1]);
            let voter = w.voter.expect("manipulation witness");
            let truthful = &p.ballots()[voter];
            Ok(truthful.prefers(rule.resolved(q)?, rule.resolved(p)?))
        }
        AxiomId::IiaSpf => {
            let spf = spf_of(rule.clone());
            let (p, q) = (&w.profiles[0], &w.profiles[1]);
            let (x, y) = (w.alternatives[0], w.alternatives[1]);
            if p.supporters(x, y) != q.supporters(x, y) {
                return Ok(false);
            }
            Ok(spf.evaluate(p)?.weakly_prefers(x, y) != spf.evaluate(q)?.weakly_prefers(x, y))
        }
        AxiomId::ParetoSpf => {
            let spf = spf_of(rule.clone());
            let p = &w.profiles[0];
            let (x, y) = (w.alternatives[0], w.alternatives[1]);
            let unanimous = p.ballots().iter().all(|b| b.prefers(x, y));
            Ok(unanimous && !spf.evaluate(p)?.strictly_prefers(x, y))
        }
        AxiomId::NonDictatorial
        | AxiomId::NonImposed
        | AxiomId::Liberal
        | AxiomId::NonDictatorialSpf => Ok(!check_axiom(rule, axiom, n, m)?.holds()),
    }
}

fn profile_masks(p: &Profile) -> Vec<u64> {
    let m = p.alternatives().len();
    let mut masks = vec![0u64; m * m];
    for x in p.domain().iter() {
        for y in p.domain().iter() {
            if x != y {
                masks[x.idx() * m + y.idx()] = p.supporters(x, y);
            }
        }
    }
    masks
}

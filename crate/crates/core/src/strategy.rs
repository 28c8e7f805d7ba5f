//! Strategic voting: manipulation search, the greedy manipulation
//! algorithm for scoring rules, dominating manipulations under partial
//! information, single-peakedness, and the median-rule guarantees.

use crate::alts::{Alt, TieBreak};
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::{median_rule, positional, RuleHandle, RuleKind, ScoreVector};
use crate::tournaments::{condorcet_winner, majority_graph};

/// A successful single-voter manipulation: submitting `strategic` instead of
/// `truthful` moves the resolved outcome to something the truthful ballot
/// strictly prefers.
#[derive(Clone, Debug)]
pub struct ManipulationWitness {
    pub voter: usize,
    pub truthful: Ballot,
    pub strategic: Ballot,
    pub outcome_truthful: Alt,
    pub outcome_strategic: Alt,
}

impl ManipulationWitness {
    /// Re-run the two profiles through the rule and confirm the violation.
    pub fn replay(&self, rule: &RuleHandle, p: &Profile) -> Result<bool> {
        let truthful_outcome = rule.resolved(p)?;
        let q = p.with_ballot(self.voter, self.strategic.clone())?;
        let strategic_outcome = rule.resolved(&q)?;
        Ok(truthful_outcome == self.outcome_truthful
            && strategic_outcome == self.outcome_strategic
            && self.truthful.prefers(strategic_outcome, truthful_outcome))
    }
}

/// Scan all `m!` strategic ballots for `voter`, in lexicographic order, and
/// return the witness with the least strategic ballot, if any. The rule must
/// be resolute after its tie-break.
pub fn find_manipulation(
    rule: &RuleHandle,
    p: &Profile,
    voter: usize,
) -> Result<Option<ManipulationWitness>> {
    let outcome_truthful = rule.resolved(p)?;
    let truthful = p.ballot(voter)?.clone();
    for strategic in all_ballots(p.domain()) {
        if strategic == truthful {
            continue;
        }
        let q = p.with_ballot(voter, strategic.clone())?;
        let outcome_strategic = rule.resolved(&q)?;
        if truthful.prefers(outcome_strategic, outcome_truthful) {
            return Ok(Some(ManipulationWitness {
                voter,
                truthful,
                strategic,
                outcome_truthful,
                outcome_strategic,
            }));
        }
    }
    Ok(None)
}

/// Greedy constructive manipulation for positional scoring rules with the
/// lexicographic tie-break: rank the target first, then repeatedly append
/// the first alternative (in canonical order) whose final score cannot
/// displace the target. Returns the completed ballot, or `None` when stuck.
///
/// Any returned ballot provably elects the target; failure to return one
/// does not prove that no manipulation exists.
pub fn greedy_manipulation(
    rule: &RuleHandle,
    p_minus_i: &Profile,
    target: Alt,
) -> Result<Option<Ballot>> {
    let vector = rule
        .score_vector()
        .ok_or_else(|| Error::invalid("greedy manipulation needs a positional scoring rule"))?;
    if rule.tiebreak != TieBreak::Lexicographic {
        return Err(Error::invalid(
            "greedy manipulation needs the lexicographic tie-break",
        ));
    }
    if !p_minus_i.domain().contains(target) {
        return Err(Error::invalid("target outside the profile domain"));
    }
    let m = p_minus_i.m();
    let weights = vector.weights(m)?;
    let base = positional(p_minus_i, &vector)?
        .scores
        .expect("positional rules report scores");
    let score_of = |a: Alt| {
        base.iter()
            .find(|(x, _)| *x == a)
            .map(|(_, s)| s.clone())
            .expect("domain member")
    };

    let target_final = score_of(target) + weights[0].clone();
    let mut placed = vec![target];
    let mut remaining: Vec<Alt> = p_minus_i.domain().iter().filter(|&a| a != target).collect();

    for slot in weights.iter().skip(1) {
        let pick = remaining.iter().position(|&y| {
            let y_final = score_of(y) + slot.clone();
            // y must not end up beating the target under (score, then lex)
            y_final < target_final || (y_final == target_final && target < y)
        });
        match pick {
            Some(i) => placed.push(remaining.remove(i)),
            None => return Ok(None),
        }
    }

    let ballot = Ballot::new(placed)?;
    // soundness replay: the constructed ballot elects the target
    let mut ballots = p_minus_i.ballots().to_vec();
    ballots.push(ballot.clone());
    let full = Profile::with_domain(
        p_minus_i.alternatives().clone(),
        p_minus_i.domain(),
        ballots,
    )?;
    debug_assert_eq!(rule.resolved(&full)?, target);
    Ok(Some(ballot))
}

/// A voter's information set: profiles that agree on the voter's own ballot.
#[derive(Clone, Debug)]
pub struct InformationSet {
    voter: usize,
    profiles: Vec<Profile>,
}

impl InformationSet {
    pub fn new(voter: usize, profiles: Vec<Profile>) -> Result<Self> {
        if profiles.is_empty() {
            return Err(Error::invalid("information set must be nonempty"));
        }
        let own = profiles[0].ballot(voter)?.clone();
        for p in &profiles[1..] {
            if p.ballot(voter)? != &own {
                return Err(Error::invalid(
                    "information set profiles must agree on the voter's ballot",
                ));
            }
            if p.domain() != profiles[0].domain() {
                return Err(Error::invalid(
                    "information set profiles must share a domain",
                ));
            }
        }
        Ok(InformationSet { voter, profiles })
    }

    /// The maximal information set: every completion of the other voters'
    /// ballots around the voter's ballot in `p`.
    pub fn maximal(p: &Profile, voter: usize) -> Result<Self> {
        let own = p.ballot(voter)?.clone();
        let orders = all_ballots(p.domain());
        let others = p.n() - 1;
        let total = (orders.len() as u64).checked_pow(others as u32);
        if !matches!(total, Some(t) if t <= 1_000_000) {
            return Err(Error::Budget(
                "maximal information set too large to enumerate".into(),
            ));
        }
        let mut profiles = Vec::new();
        let mut indices = vec![0usize; others];
        loop {
            let mut ballots = Vec::with_capacity(p.n());
            let mut it = indices.iter();
            for v in 0..p.n() {
                if v == voter {
                    ballots.push(own.clone());
                } else {
                    ballots.push(orders[*it.next().expect("sized")].clone());
                }
            }
            profiles.push(Profile::with_domain(
                p.alternatives().clone(),
                p.domain(),
                ballots,
            )?);
            let mut pos = indices.len();
            loop {
                if pos == 0 {
                    return InformationSet::new(voter, profiles);
                }
                pos -= 1;
                indices[pos] += 1;
                if indices[pos] < orders.len() {
                    break;
                }
                indices[pos] = 0;
            }
        }
    }

    pub fn voter(&self) -> usize {
        self.voter
    }

    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }
}

/// Search for a dominating manipulation: a ballot that weakly improves the
/// resolved outcome on every profile of the information set and strictly on
/// at least one, judged by the voter's truthful order. Candidates are tried
/// in lexicographic order.
pub fn dominating_manipulation(rule: &RuleHandle, is: &InformationSet) -> Result<Option<Ballot>> {
    let voter = is.voter();
    let truthful = is.profiles()[0].ballot(voter)?.clone();
    let domain = is.profiles()[0].domain();
    let candidates = all_ballots(domain);
    let work = (is.profiles().len() as u64).saturating_mul(candidates.len() as u64);
    if work > 10_000_000 {
        return Err(Error::Budget(format!(
            "dominating manipulation scan of {work} rule evaluations"
        )));
    }
    let honest: Vec<Alt> = is
        .profiles()
        .iter()
        .map(|p| rule.resolved(p))
        .collect::<Result<_>>()?;
    for candidate in candidates {
        if candidate == truthful {
            continue;
        }
        let mut strict = false;
        let mut dominates = true;
        for (p, &truthful_outcome) in is.profiles().iter().zip(&honest) {
            let q = p.with_ballot(voter, candidate.clone())?;
            let outcome = rule.resolved(&q)?;
            if outcome == truthful_outcome {
                continue;
            }
            if truthful.prefers(outcome, truthful_outcome) {
                strict = true;
            } else {
                dominates = false;
                break;
            }
        }
        if dominates && strict {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Is `b` single-peaked with respect to `axis`: whenever `x` lies between
/// the peak and `y` on the axis, the ballot ranks `x` above `y`.
pub fn ballot_single_peaked(b: &Ballot, axis: &Ballot) -> bool {
    let peak_pos = match axis.position(b.top()) {
        Some(p) => p,
        None => return false,
    };
    let order = axis.as_slice();
    for (px, &x) in order.iter().enumerate() {
        for (py, &y) in order.iter().enumerate() {
            if px == py {
                continue;
            }
            let between = (peak_pos < px && px < py) || (py < px && px < peak_pos);
            if between && !b.prefers(x, y) {
                return false;
            }
        }
    }
    true
}

pub fn profile_single_peaked(p: &Profile, axis: &Ballot) -> bool {
    axis.alts() == p.domain() && p.ballots().iter().all(|b| ballot_single_peaked(b, axis))
}

/// All axes with respect to which the profile is single-peaked; the result
/// is closed under axis reversal.
pub fn single_peaked_axes(p: &Profile) -> Vec<Ballot> {
    all_ballots(p.domain())
        .into_iter()
        .filter(|axis| profile_single_peaked(p, axis))
        .collect()
}

/// All ballots over the axis's alternatives that are single-peaked with
/// respect to it.
pub fn single_peaked_ballots(axis: &Ballot) -> Vec<Ballot> {
    all_ballots(axis.alts())
        .into_iter()
        .filter(|b| ballot_single_peaked(b, axis))
        .collect()
}

/// One failed check of the Black suite.
#[derive(Clone, Debug)]
pub struct BlackViolation {
    pub profile: Profile,
    pub what: String,
}

/// Result of verifying the single-peaked guarantees over every profile that
/// is single-peaked with respect to the canonical axis.
///
/// Strict and weak tournament transitivity are tracked separately: for odd
/// `n` the two graphs coincide, while for even `n` the strict part stays
/// transitive but the weak relation can fail transitivity across ties
/// (2 x abc with 2 x bca already does it: a ties both b and c while b
/// strictly beats c).
#[derive(Debug)]
pub struct BlackReport {
    pub profiles_checked: usize,
    /// Strict majority tournament not transitive.
    pub strict_transitivity: Vec<BlackViolation>,
    /// Weak majority tournament not transitive.
    pub weak_transitivity: Vec<BlackViolation>,
    /// Median equals the Condorcet winner (odd n) or is contained in the
    /// weak Condorcet winners (even n).
    pub median_condorcet: Vec<BlackViolation>,
    /// No voter gains by deviating to another single-peaked ballot (odd n).
    pub median_manipulation: Vec<BlackViolation>,
}

impl BlackReport {
    pub fn all_hold(&self) -> bool {
        self.strict_transitivity.is_empty()
            && self.weak_transitivity.is_empty()
            && self.median_condorcet.is_empty()
            && self.median_manipulation.is_empty()
    }
}

/// Verify Black's guarantees at `(n, m)` over the canonical axis
/// `a > b > c > ...`: tournament transitivity, the median/Condorcet
/// correspondence, and (for odd `n`) strategy-proofness of the median rule
/// against deviations that stay single-peaked on the same axis.
pub fn black_suite(n: usize, m: usize) -> Result<BlackReport> {
    use crate::alts::Alternatives;
    let alts = Alternatives::default_labels(m);
    let axis = Ballot::new(alts.full_set().iter().collect())?;
    let sp_ballots = single_peaked_ballots(&axis);
    match (sp_ballots.len() as u64).checked_pow(n as u32) {
        Some(total) if total <= 1_000_000 => {}
        _ => {
            return Err(Error::Budget(
                "single-peaked profile space too large".into(),
            ))
        }
    }

    let odd = n % 2 == 1;
    let mut report = BlackReport {
        profiles_checked: 0,
        strict_transitivity: Vec::new(),
        weak_transitivity: Vec::new(),
        median_condorcet: Vec::new(),
        median_manipulation: Vec::new(),
    };

    let mut indices = vec![0usize; n];
    loop {
        let ballots: Vec<Ballot> = indices.iter().map(|&i| sp_ballots[i].clone()).collect();
        let p = Profile::new(alts.clone(), ballots)?;
        report.profiles_checked += 1;

        if !majority_graph(&p, false).is_transitive() {
            report.strict_transitivity.push(BlackViolation {
                profile: p.clone(),
                what: "strict majority tournament not transitive".into(),
            });
        }
        if !majority_graph(&p, true).is_transitive() {
            report.weak_transitivity.push(BlackViolation {
                profile: p.clone(),
                what: "weak majority tournament not transitive".into(),
            });
        }

        let median = median_rule(&p, &axis)?.winners;
        if odd {
            let cw = condorcet_winner(&p, false);
            if median != cw {
                report.median_condorcet.push(BlackViolation {
                    profile: p.clone(),
                    what: "median differs from the Condorcet winner".into(),
                });
            }
        } else {
            let weak_cw = condorcet_winner(&p, true);
            if !median.is_subset(weak_cw) {
                report.median_condorcet.push(BlackViolation {
                    profile: p.clone(),
                    what: "median not among the weak Condorcet winners".into(),
                });
            }
        }

        if odd {
            let outcome = median.first().expect("odd n gives a singleton median");
            'voters: for voter in 0..n {
                let truthful = p.ballot(voter)?.clone();
                for deviation in &sp_ballots {
                    if *deviation == truthful {
                        continue;
                    }
                    let q = p.with_ballot(voter, deviation.clone())?;
                    let new_outcome = median_rule(&q, &axis)?
                        .winners
                        .first()
                        .expect("still odd n");
                    if truthful.prefers(new_outcome, outcome) {
                        report.median_manipulation.push(BlackViolation {
                            profile: p.clone(),
                            what: format!("voter {voter} manipulates the median rule"),
                        });
                        break 'voters;
                    }
                }
            }
        }

        let mut pos = indices.len();
        loop {
            if pos == 0 {
                return Ok(report);
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < sp_ballots.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// Convenience handle: positional rule + lexicographic tie-break.
pub fn positional_lex(vector: ScoreVector) -> RuleHandle {
    RuleHandle::new(RuleKind::Positional(vector)).with_tiebreak(TieBreak::Lexicographic)
}

//! Committee-selection rules and their axioms: best-k score-and-cut rules,
//! Chamberlin-Courant, proportional k-approval, sequential plurality, the
//! committee variant of STV with the Droop quota, and Condorcet committees.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alts::{Alt, AltSet, TieBreak};
use crate::error::{Error, Result};
use crate::profile::{Profile, WeakOrder};
use crate::rules::{plurality_counts, positional, Score, ScoreVector};

const COMMITTEE_BUDGET: usize = 1_000_000;
pub const DEFAULT_BRANCH_BUDGET: usize = 100_000;

/// One step of a staged committee computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StageEvent {
    /// An alternative met the quota and was elected, consuming the listed voters.
    Elect { alt: Alt, voters: Vec<usize> },
    /// A plurality loser was removed.
    Eliminate { alt: Alt },
    /// The remaining alternatives exactly filled the committee.
    CompleteElect { alts: AltSet },
    /// A sequential pick.
    Pick { alt: Alt },
}

/// Exploration counters for the staged searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StageStats {
    pub states_explored: usize,
    /// Largest number of alternatives meeting the quota in any one stage.
    pub max_quota_meeters: usize,
}

/// The outcome of a committee rule: all tied committees of the requested
/// size, optional scores, an optional stage trace, and a flag set when a
/// branch budget cut the exploration short.
#[derive(Clone, Debug)]
pub struct CommitteeResult {
    pub committees: Vec<AltSet>,
    pub scores: Option<Vec<(AltSet, Score)>>,
    pub trace: Option<Vec<StageEvent>>,
    pub truncated: bool,
    pub stats: Option<StageStats>,
}

impl CommitteeResult {
    fn plain(mut committees: Vec<AltSet>) -> Self {
        committees.sort();
        committees.dedup();
        CommitteeResult {
            committees,
            scores: None,
            trace: None,
            truncated: false,
            stats: None,
        }
    }
}

fn check_k(p: &Profile, k: usize) -> Result<()> {
    if k < 1 || k > p.m() {
        return Err(Error::invalid(format!(
            "committee size must satisfy 1 <= k <= m, got k={k}, m={}",
            p.m()
        )));
    }
    Ok(())
}

/// The weak order ranking alternatives by their positional score.
pub fn score_order(p: &Profile, scoring: &ScoreVector) -> Result<WeakOrder> {
    let scores = positional(p, scoring)?.scores.expect("positional scores");
    let mut levels: Vec<Score> = scores.iter().map(|(_, s)| s.clone()).collect();
    levels.sort();
    levels.dedup();
    levels.reverse();
    let tiers = levels
        .iter()
        .map(|level| {
            scores
                .iter()
                .filter(|(_, s)| s == level)
                .map(|(a, _)| *a)
                .collect::<AltSet>()
        })
        .collect();
    WeakOrder::new(tiers)
}

/// Best-k rule for a scoring function: committees are the top-k prefixes of
/// all linearizations of the score order, so a tie at the boundary expands
/// combinatorially.
pub fn best_k(scoring: &ScoreVector, p: &Profile, k: usize) -> Result<CommitteeResult> {
    check_k(p, k)?;
    let order = score_order(p, scoring)?;
    Ok(CommitteeResult::plain(order.top_k_sets(k)))
}

/// Chamberlin-Courant: each voter is scored by the weight at the rank of
/// their best committee member; committees maximize the total.
pub fn chamberlin_courant(p: &Profile, k: usize, w: &ScoreVector) -> Result<CommitteeResult> {
    check_k(p, k)?;
    let weights = w.weights(p.m())?;
    let committees = committee_space(p, k)?;
    let mut scored: Vec<(AltSet, Score)> = Vec::with_capacity(committees.len());
    for c in committees {
        let mut total = Score::zero();
        for b in p.ballots() {
            let rep_pos = b
                .as_slice()
                .iter()
                .position(|a| c.contains(*a))
                .expect("committee is in the domain");
            total += weights[rep_pos].clone();
        }
        scored.push((c, total));
    }
    Ok(scored_result(scored))
}

/// Proportional k-approval: voter contribution is the harmonic number of
/// the overlap between their top-k set and the committee (zero overlap
/// contributes nothing).
pub fn pav_k(p: &Profile, k: usize) -> Result<CommitteeResult> {
    check_k(p, k)?;
    let harmonic: Vec<Score> = {
        let mut acc = Score::zero();
        let mut table = vec![Score::zero()];
        for t in 1..=k {
            acc += Score::new(BigInt::from(1), BigInt::from(t as i64));
            table.push(acc.clone());
        }
        table
    };
    let tops: Vec<AltSet> = p
        .ballots()
        .iter()
        .map(|b| b.as_slice()[..k].iter().copied().collect())
        .collect();
    let committees = committee_space(p, k)?;
    let mut scored: Vec<(AltSet, Score)> = Vec::with_capacity(committees.len());
    for c in committees {
        let mut total = Score::zero();
        for top in &tops {
            total += harmonic[top.intersection(c).len()].clone();
        }
        scored.push((c, total));
    }
    Ok(scored_result(scored))
}

fn committee_space(p: &Profile, k: usize) -> Result<Vec<AltSet>> {
    let space = p.domain().subsets_of_size(k);
    if space.len() > COMMITTEE_BUDGET {
        return Err(Error::Budget(format!(
            "{} committees exceed the enumeration budget",
            space.len()
        )));
    }
    Ok(space)
}

fn scored_result(scored: Vec<(AltSet, Score)>) -> CommitteeResult {
    let best = scored
        .iter()
        .map(|(_, s)| s.clone())
        .max()
        .expect("nonempty committee space");
    let committees: Vec<AltSet> = scored
        .iter()
        .filter(|(_, s)| *s == best)
        .map(|(c, _)| *c)
        .collect();
    CommitteeResult {
        committees,
        scores: Some(scored),
        trace: None,
        truncated: false,
        stats: None,
    }
}

/// Sequential plurality: repeatedly take a plurality winner of the
/// restriction and remove it. With the lexicographic tie-break one branch is
/// followed; with no tie-break every tied pick is explored and the outcomes
/// are unioned.
pub fn sequential_plurality(p: &Profile, k: usize, tiebreak: TieBreak) -> Result<CommitteeResult> {
    check_k(p, k)?;
    let mut committees = Vec::new();
    let mut trace = Vec::new();
    let mut stack: Vec<(AltSet, AltSet)> = vec![(AltSet::EMPTY, p.domain())];
    while let Some((selected, remaining)) = stack.pop() {
        if selected.len() == k {
            committees.push(selected);
            continue;
        }
        let restricted = p.restrict(remaining)?;
        let counts = plurality_counts(&restricted);
        let max = counts.iter().map(|&(_, c)| c).max().expect("nonempty");
        let winners: AltSet = counts
            .iter()
            .filter(|&&(_, c)| c == max)
            .map(|&(a, _)| a)
            .collect();
        let picks: Vec<Alt> = match tiebreak {
            TieBreak::Lexicographic => vec![winners.first().expect("nonempty")],
            TieBreak::None => winners.iter().collect(),
        };
        for pick in picks {
            if tiebreak == TieBreak::Lexicographic {
                trace.push(StageEvent::Pick { alt: pick });
            }
            let mut sel = selected;
            sel.insert(pick);
            stack.push((sel, remaining.difference(AltSet::singleton(pick))));
        }
    }
    let mut result = CommitteeResult::plain(committees);
    if tiebreak == TieBreak::Lexicographic {
        result.trace = Some(trace);
    }
    Ok(result)
}

/// Tie-handling for the committee STV stage machine.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CstvMode {
    /// Deterministic policies: elect the lexicographically least alternative
    /// meeting the quota, consuming the lowest-indexed supporting voters;
    /// eliminate the lexicographically least plurality loser.
    Canonical,
    /// Parallel-universe tie-breaking: branch on every choice of elected
    /// alternative, consumed voter set, and eliminated loser.
    Parallel,
}

/// The Droop quota `floor(n / (k+1)) + 1`.
pub fn droop_quota(n: usize, k: usize) -> usize {
    n / (k + 1) + 1
}

/// Committee STV. Stages either elect an alternative whose plurality score
/// meets the Droop quota (removing it and a quota's worth of its supporters)
/// or eliminate one plurality loser; a stage electing is never mixed with a
/// stage eliminating. When the survivors exactly fill the committee they are
/// elected outright, which keeps the output nonempty on degenerate inputs.
pub fn cstv(
    p: &Profile,
    k: usize,
    mode: CstvMode,
    branch_budget: usize,
) -> Result<CommitteeResult> {
    check_k(p, k)?;
    let q = droop_quota(p.n(), k);
    let mut committees: Vec<AltSet> = Vec::new();
    let mut trace: Vec<StageEvent> = Vec::new();
    let mut stats = StageStats::default();
    let mut truncated = false;

    // state: elected set, remaining alternatives, active voters (sorted)
    type State = (AltSet, AltSet, Vec<usize>);
    let mut seen: std::collections::HashSet<(u32, u32, Vec<usize>)> =
        std::collections::HashSet::new();
    let initial: State = (AltSet::EMPTY, p.domain(), (0..p.n()).collect());
    let mut stack: Vec<State> = vec![initial];

    while let Some((elected, remaining, voters)) = stack.pop() {
        if elected.len() == k {
            committees.push(elected);
            continue;
        }
        if !seen.insert((elected.bits(), remaining.bits(), voters.clone())) {
            continue;
        }
        if stats.states_explored >= branch_budget {
            truncated = true;
            break;
        }
        stats.states_explored += 1;

        // plurality scores of the remaining alternatives over active voters
        let top_of = |voter: usize| -> Alt {
            *p.ballots()[voter]
                .as_slice()
                .iter()
                .find(|a| remaining.contains(**a))
                .expect("remaining is nonempty")
        };
        let mut counts: Vec<(Alt, usize)> = remaining.iter().map(|a| (a, 0)).collect();
        for &v in &voters {
            let t = top_of(v);
            counts
                .iter_mut()
                .find(|(a, _)| *a == t)
                .expect("remaining member")
                .1 += 1;
        }

        let meeting: Vec<Alt> = counts
            .iter()
            .filter(|&&(_, c)| c >= q)
            .map(|&(a, _)| a)
            .collect();
        stats.max_quota_meeters = stats.max_quota_meeters.max(meeting.len());

        if !meeting.is_empty() {
            let elect_choices: Vec<Alt> = match mode {
                CstvMode::Canonical => vec![meeting[0]],
                CstvMode::Parallel => meeting,
            };
            for x in elect_choices {
                let supporters: Vec<usize> =
                    voters.iter().copied().filter(|&v| top_of(v) == x).collect();
                let voter_choices: Vec<Vec<usize>> = match mode {
                    CstvMode::Canonical => vec![supporters[..q].to_vec()],
                    CstvMode::Parallel => subsets_of_size(&supporters, q),
                };
                for consumed in voter_choices {
                    if mode == CstvMode::Canonical {
                        trace.push(StageEvent::Elect {
                            alt: x,
                            voters: consumed.clone(),
                        });
                    }
                    let mut new_elected = elected;
                    new_elected.insert(x);
                    let new_remaining = remaining.difference(AltSet::singleton(x));
                    let new_voters: Vec<usize> = voters
                        .iter()
                        .copied()
                        .filter(|v| !consumed.contains(v))
                        .collect();
                    if new_elected.len() == k {
                        committees.push(new_elected);
                    } else {
                        stack.push((new_elected, new_remaining, new_voters));
                    }
                }
            }
        } else if elected.len() + remaining.len() == k {
            if mode == CstvMode::Canonical {
                trace.push(StageEvent::CompleteElect { alts: remaining });
            }
            committees.push(elected.union(remaining));
        } else {
            let min = counts.iter().map(|&(_, c)| c).min().expect("nonempty");
            let losers: Vec<Alt> = counts
                .iter()
                .filter(|&&(_, c)| c == min)
                .map(|&(a, _)| a)
                .collect();
            let elim_choices: Vec<Alt> = match mode {
                CstvMode::Canonical => vec![losers[0]],
                CstvMode::Parallel => losers,
            };
            for y in elim_choices {
                if mode == CstvMode::Canonical {
                    trace.push(StageEvent::Eliminate { alt: y });
                }
                stack.push((
                    elected,
                    remaining.difference(AltSet::singleton(y)),
                    voters.clone(),
                ));
            }
        }
    }

    if committees.is_empty() && !truncated {
        return Err(Error::invalid("committee STV reached no committee"));
    }
    let mut result = CommitteeResult::plain(committees);
    result.truncated = truncated;
    result.stats = Some(stats);
    if mode == CstvMode::Canonical {
        result.trace = Some(trace);
    }
    Ok(result)
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(pick.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] != i + items.len() - k {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All weak Condorcet committees of size `k`: every member weakly
/// majority-beats every non-member.
pub fn condorcet_committees(p: &Profile, k: usize) -> Result<Vec<AltSet>> {
    check_k(p, k)?;
    let mut out = Vec::new();
    for c in committee_space(p, k)? {
        let outside = p.domain().difference(c);
        let stable = c.iter().all(|x| {
            outside
                .iter()
                .all(|y| p.support(x, y).expect("distinct") >= p.support(y, x).expect("distinct"))
        });
        if stable {
            out.push(c);
        }
    }
    Ok(out)
}

/// A family of committee rules, indexed by committee size.
#[derive(Clone, Debug)]
pub enum CommitteeRule {
    BestK(ScoreVector),
    ChamberlinCourant(ScoreVector),
    Pav,
    SequentialPlurality(TieBreak),
    Cstv {
        mode: CstvMode,
        branch_budget: usize,
    },
    /// The weak Condorcet committees when they exist, otherwise every
    /// committee of the requested size; stable by construction.
    CondorcetSets,
}

impl CommitteeRule {
    pub fn evaluate(&self, p: &Profile, k: usize) -> Result<CommitteeResult> {
        match self {
            CommitteeRule::BestK(w) => best_k(w, p, k),
            CommitteeRule::ChamberlinCourant(w) => chamberlin_courant(p, k, w),
            CommitteeRule::Pav => pav_k(p, k),
            CommitteeRule::SequentialPlurality(t) => sequential_plurality(p, k, *t),
            CommitteeRule::Cstv {
                mode,
                branch_budget,
            } => cstv(p, k, *mode, *branch_budget),
            CommitteeRule::CondorcetSets => {
                let cc = condorcet_committees(p, k)?;
                if cc.is_empty() {
                    Ok(CommitteeResult::plain(committee_space(p, k)?))
                } else {
                    Ok(CommitteeResult::plain(cc))
                }
            }
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CommitteeAxiom {
    /// Whenever weak Condorcet committees exist, the rule returns a subset
    /// of them.
    Stable,
    /// Winning committees extend to winning committees one seat larger, in
    /// both inclusion directions.
    CommitteeMonotonic,
}

/// A committee-axiom violation.
#[derive(Clone, Debug)]
pub struct CommitteeWitness {
    pub profile: Profile,
    pub k: usize,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub enum CommitteeCheck {
    Holds,
    Fails(CommitteeWitness),
}

impl CommitteeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CommitteeCheck::Holds)
    }
}

/// Check a committee axiom on an explicit list of profiles for all committee
/// sizes up to `k_max`.
pub fn check_committee_axiom<'a>(
    rule: &CommitteeRule,
    axiom: CommitteeAxiom,
    profiles: impl IntoIterator<Item = &'a Profile>,
    k_max: usize,
) -> Result<CommitteeCheck> {
    for p in profiles {
        let k_max = k_max.min(p.m());
        match axiom {
            CommitteeAxiom::Stable => {
                for k in 1..=k_max {
                    let cc = condorcet_committees(p, k)?;
                    if cc.is_empty() {
                        continue;
                    }
                    let chosen = rule.evaluate(p, k)?.committees;
                    if let Some(bad) = chosen.iter().find(|c| !cc.contains(c)) {
                        return Ok(CommitteeCheck::Fails(CommitteeWitness {
                            profile: p.clone(),
                            k,
                            detail: format!("committee {bad:?} is not a weak Condorcet committee"),
                        }));
                    }
                }
            }
            CommitteeAxiom::CommitteeMonotonic => {
                for k in 1..k_max {
                    let small = rule.evaluate(p, k)?.committees;
                    let large = rule.evaluate(p, k + 1)?.committees;
                    for c in &small {
                        if !large.iter().any(|c2| c.is_subset(*c2)) {
                            return Ok(CommitteeCheck::Fails(CommitteeWitness {
                                profile: p.clone(),
                                k,
                                detail: format!(
                                    "committee {c:?} at k={k} extends to no winner at k={}",
                                    k + 1
                                ),
                            }));
                        }
                    }
                    for c2 in &large {
                        if !small.iter().any(|c| c.is_subset(*c2)) {
                            return Ok(CommitteeCheck::Fails(CommitteeWitness {
                                profile: p.clone(),
                                k,
                                detail: format!(
                                    "committee {c2:?} at k={} restricts to no winner at k={k}",
                                    k + 1
                                ),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(CommitteeCheck::Holds)
}

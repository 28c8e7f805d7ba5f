//! Ballot distances and the closest-consensus view of voting rules.
//!
//! A rule can be recovered by naming a class of "consensus" profiles (all
//! tops equal, all ballots equal, or a Condorcet winner exists) and a
//! distance, then electing from the consensus profiles closest to the input.

use crate::alts::{Alt, AltSet};
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::tournaments::condorcet_winner;

/// Number of alternative pairs two linear orders rank oppositely (Kendall
/// tau); equals the minimum number of adjacent transpositions between them.
pub fn swap_distance(b1: &Ballot, b2: &Ballot) -> Result<u64> {
    if b1.alts() != b2.alts() {
        return Err(Error::invalid(
            "swap distance needs ballots over the same set",
        ));
    }
    let order = b1.as_slice();
    let mut count = 0u64;
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            if b2.prefers(y, x) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// 0 when the ballots are equal, 1 otherwise.
pub fn discrete_distance(b1: &Ballot, b2: &Ballot) -> Result<u64> {
    if b1.alts() != b2.alts() {
        return Err(Error::invalid(
            "discrete distance needs ballots over the same set",
        ));
    }
    Ok(if b1 == b2 { 0 } else { 1 })
}

/// Sum of swap distances from `order` to every ballot of the profile.
pub fn kemeny_distance(order: &Ballot, p: &Profile) -> Result<u64> {
    let mut total = 0u64;
    for b in p.ballots() {
        total += swap_distance(b, order)?;
    }
    Ok(total)
}

/// Consensus classes: same tops, identical ballots, or a strict Condorcet
/// winner exists.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ConsensusClass {
    Unanimous,
    StrongUnanimous,
    Condorcet,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DistanceId {
    Swap,
    Discrete,
}

pub fn ballot_distance(d: DistanceId, b1: &Ballot, b2: &Ballot) -> Result<u64> {
    match d {
        DistanceId::Swap => swap_distance(b1, b2),
        DistanceId::Discrete => discrete_distance(b1, b2),
    }
}

/// Outcome of a closest-consensus search: the minimizing consensus profiles
/// (up to the canonical completion documented per class), the minimum total
/// distance, and the winners read off the minimizers.
#[derive(Clone, Debug)]
pub struct ConsensusOutcome {
    pub minimizers: Vec<Profile>,
    pub min_distance: u64,
    pub winners: AltSet,
}

/// Default cap on the Dodgson deepening budget (total adjacent swaps).
pub const DEFAULT_SWAP_BUDGET: u64 = 16;

/// Find the consensus profiles of `class` closest to `p` under `d`.
///
/// For the unanimity classes the per-voter optimum is computed analytically:
/// under swap distance the cheapest ballot with top `x` promotes `x` and
/// keeps the remainder unchanged (cost `rank - 1`), and under the discrete
/// distance any ballot with top `x` costs 1, canonicalized the same way.
/// The Condorcet class delegates to the deepening search over adjacent
/// transpositions.
pub fn closest_consensus(
    p: &Profile,
    class: ConsensusClass,
    d: DistanceId,
) -> Result<ConsensusOutcome> {
    match class {
        ConsensusClass::Unanimous => unanimous_consensus(p, d),
        ConsensusClass::StrongUnanimous => strong_unanimous_consensus(p, d),
        ConsensusClass::Condorcet => {
            if d == DistanceId::Discrete {
                return Err(Error::invalid(
                    "the Condorcet consensus class is characterized for swap distance only",
                ));
            }
            let search = condorcet_deepening_search(p, DEFAULT_SWAP_BUDGET)?;
            Ok(ConsensusOutcome {
                minimizers: search.minimizers,
                min_distance: search.budget,
                winners: search.winners,
            })
        }
    }
}

fn unanimous_consensus(p: &Profile, d: DistanceId) -> Result<ConsensusOutcome> {
    let mut best: Option<(u64, Vec<Profile>, AltSet)> = None;
    for target in p.domain().iter() {
        let mut cost = 0u64;
        let mut ballots = Vec::with_capacity(p.n());
        for b in p.ballots() {
            let promoted = b.promoted(target);
            cost += match d {
                DistanceId::Swap => (b.rank_of(target)? - 1) as u64,
                DistanceId::Discrete => u64::from(b.top() != target),
            };
            ballots.push(promoted);
        }
        let candidate = Profile::with_domain(p.alternatives().clone(), p.domain(), ballots)?;
        match &mut best {
            None => best = Some((cost, vec![candidate], AltSet::singleton(target))),
            Some((min, mins, winners)) => {
                if cost < *min {
                    *min = cost;
                    *mins = vec![candidate];
                    *winners = AltSet::singleton(target);
                } else if cost == *min {
                    mins.push(candidate);
                    winners.insert(target);
                }
            }
        }
    }
    let (min_distance, minimizers, winners) = best.expect("domain is nonempty");
    Ok(ConsensusOutcome {
        minimizers,
        min_distance,
        winners,
    })
}

fn strong_unanimous_consensus(p: &Profile, d: DistanceId) -> Result<ConsensusOutcome> {
    let orders = all_ballots(p.domain());
    let mut best: Option<(u64, Vec<Profile>, AltSet)> = None;
    for order in orders {
        let mut cost = 0u64;
        for b in p.ballots() {
            cost += ballot_distance(d, b, &order)?;
        }
        let candidate = Profile::with_domain(
            p.alternatives().clone(),
            p.domain(),
            vec![order.clone(); p.n()],
        )?;
        let top = order.top();
        match &mut best {
            None => best = Some((cost, vec![candidate], AltSet::singleton(top))),
            Some((min, mins, winners)) => {
                if cost < *min {
                    *min = cost;
                    *mins = vec![candidate];
                    *winners = AltSet::singleton(top);
                } else if cost == *min {
                    mins.push(candidate);
                    winners.insert(top);
                }
            }
        }
    }
    let (min_distance, minimizers, winners) = best.expect("domain is nonempty");
    Ok(ConsensusOutcome {
        minimizers,
        min_distance,
        winners,
    })
}

/// Result of the layered search over adjacent transpositions.
pub struct DeepeningOutcome {
    /// All profiles with a strict Condorcet winner at the minimum budget.
    pub minimizers: Vec<Profile>,
    /// The minimum total number of adjacent swaps.
    pub budget: u64,
    /// Union of the Condorcet winners of the minimizers.
    pub winners: AltSet,
}

/// Breadth-first search over profiles reachable from `p` by adjacent
/// transpositions, layered by total swap count; stops at the first layer
/// containing profiles with a strict Condorcet winner.
///
/// Each adjacent transposition changes the summed swap distance to `p` by
/// exactly one, so with deduplication the BFS depth of a profile equals its
/// total swap distance from `p`.
pub fn condorcet_deepening_search(p: &Profile, max_budget: u64) -> Result<DeepeningOutcome> {
    use std::collections::HashSet;

    let key = |q: &Profile| -> Vec<Vec<Alt>> {
        q.ballots().iter().map(|b| b.as_slice().to_vec()).collect()
    };

    let mut seen: HashSet<Vec<Vec<Alt>>> = HashSet::new();
    let mut layer = vec![p.clone()];
    seen.insert(key(p));

    for budget in 0..=max_budget {
        let mut winners = AltSet::EMPTY;
        let mut minimizers = Vec::new();
        for q in &layer {
            let cw = condorcet_winner(q, false);
            if !cw.is_empty() {
                winners = winners.union(cw);
                minimizers.push(q.clone());
            }
        }
        if !minimizers.is_empty() {
            return Ok(DeepeningOutcome {
                minimizers,
                budget,
                winners,
            });
        }
        let mut next = Vec::new();
        for q in &layer {
            for voter in 0..q.n() {
                let ballot = &q.ballots()[voter];
                for pos in 0..ballot.len() - 1 {
                    let mut order = ballot.as_slice().to_vec();
                    order.swap(pos, pos + 1);
                    let neighbor = q
                        .with_ballot(voter, Ballot::new(order)?)
                        .expect("swap keeps the domain");
                    if seen.insert(key(&neighbor)) {
                        next.push(neighbor);
                    }
                }
            }
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Err(Error::Budget(format!(
        "no Condorcet profile within {max_budget} adjacent swaps"
    )))
}

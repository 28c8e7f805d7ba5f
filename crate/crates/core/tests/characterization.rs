//! Closest-consensus characterizations cross-checked against independent
//! brute-force oracles: the analytic per-voter decompositions and the
//! deepening search must agree with direct argmin enumeration over the
//! respective consensus classes, and the induced winners must match the
//! rules they characterize.

use scrutineer_core::alts::{Alt, AltSet};
use scrutineer_core::ballot::{all_ballots, Ballot};
use scrutineer_core::consensus::{ballot_distance, closest_consensus, ConsensusClass, DistanceId};
use scrutineer_core::profile::{enumerate_profiles, Profile};
use scrutineer_core::rules::{dodgson, kemeny, plurality, positional, ScoreVector};
use scrutineer_core::tournaments::condorcet_winner;

/// Total distance between two equal-length profiles, voter by voter.
fn profile_distance(d: DistanceId, p: &Profile, q: &Profile) -> u64 {
    p.ballots()
        .iter()
        .zip(q.ballots())
        .map(|(a, b)| ballot_distance(d, a, b).unwrap())
        .sum()
}

/// Oracle: enumerate every profile in the unanimity class (all tops equal)
/// and return the minimum total distance and the achieving tops.
fn unanimous_oracle(p: &Profile, d: DistanceId) -> (u64, AltSet) {
    let orders = all_ballots(p.domain());
    let mut best: Option<(u64, AltSet)> = None;
    for top in p.domain().iter() {
        let with_top: Vec<&Ballot> = orders.iter().filter(|o| o.top() == top).collect();
        // per-voter independent minimum over ballots with this top
        let cost: u64 = p
            .ballots()
            .iter()
            .map(|b| {
                with_top
                    .iter()
                    .map(|o| ballot_distance(d, b, o).unwrap())
                    .min()
                    .unwrap()
            })
            .sum();
        match &mut best {
            None => best = Some((cost, AltSet::singleton(top))),
            Some((min, tops)) => {
                if cost < *min {
                    *min = cost;
                    *tops = AltSet::singleton(top);
                } else if cost == *min {
                    tops.insert(top);
                }
            }
        }
    }
    best.unwrap()
}

/// Oracle: enumerate all profiles of the domain, filter to the Condorcet
/// class, and take the argmin of the total swap distance.
fn condorcet_oracle(p: &Profile) -> (u64, AltSet) {
    let mut best: Option<(u64, AltSet)> = None;
    for q in enumerate_profiles(p.n(), p.m()).unwrap() {
        let cw = condorcet_winner(&q, false);
        if cw.is_empty() {
            continue;
        }
        let dist = profile_distance(DistanceId::Swap, p, &q);
        match &mut best {
            None => best = Some((dist, cw)),
            Some((min, winners)) => {
                if dist < *min {
                    *min = dist;
                    *winners = cw;
                } else if dist == *min {
                    *winners = winners.union(cw);
                }
            }
        }
    }
    best.unwrap()
}

#[test]
fn unanimous_discrete_characterizes_plurality() {
    for p in enumerate_profiles(3, 3).unwrap() {
        let out = closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Discrete).unwrap();
        assert_eq!(out.winners, plurality(&p).winners);
        let (oracle_cost, oracle_tops) = unanimous_oracle(&p, DistanceId::Discrete);
        assert_eq!(out.min_distance, oracle_cost);
        assert_eq!(out.winners, oracle_tops);
        assert_eq!(out.min_distance as usize, p.n() - top_count_max(&p));
    }
}

fn top_count_max(p: &Profile) -> usize {
    p.domain()
        .iter()
        .map(|x| p.ballots().iter().filter(|b| b.top() == x).count())
        .max()
        .unwrap()
}

#[test]
fn unanimous_swap_characterizes_borda() {
    for p in enumerate_profiles(3, 3).unwrap() {
        let out = closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Swap).unwrap();
        assert_eq!(
            out.winners,
            positional(&p, &ScoreVector::Borda).unwrap().winners
        );
        let (oracle_cost, oracle_tops) = unanimous_oracle(&p, DistanceId::Swap);
        assert_eq!(out.min_distance, oracle_cost);
        assert_eq!(out.winners, oracle_tops);
    }
}

#[test]
fn strong_unanimous_swap_characterizes_kemeny() {
    for p in enumerate_profiles(3, 3).unwrap() {
        let out = closest_consensus(&p, ConsensusClass::StrongUnanimous, DistanceId::Swap).unwrap();
        let k = kemeny(&p).unwrap();
        assert_eq!(out.winners, k.choice.winners);
        assert_eq!(out.min_distance, k.min_distance);
        // every minimizer is a constant profile built from an optimal order
        for q in &out.minimizers {
            let first = &q.ballots()[0];
            assert!(q.ballots().iter().all(|b| b == first));
            assert!(k.optimal_orders.contains(first));
        }
    }
}

#[test]
fn condorcet_swap_characterizes_dodgson() {
    for p in enumerate_profiles(3, 3).unwrap() {
        let out = closest_consensus(&p, ConsensusClass::Condorcet, DistanceId::Swap).unwrap();
        assert_eq!(out.winners, dodgson(&p).unwrap().winners);
        let (oracle_cost, oracle_winners) = condorcet_oracle(&p);
        assert_eq!(out.min_distance, oracle_cost);
        assert_eq!(out.winners, oracle_winners);
    }
}

#[test]
fn minimizers_live_in_their_class() {
    let p = scrutineer_core::fixtures::fixture("CONDORCET1").unwrap();
    let unanimous = closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Discrete).unwrap();
    for q in &unanimous.minimizers {
        let top = q.ballots()[0].top();
        assert!(q.ballots().iter().all(|b| b.top() == top));
    }
    let condorcet = closest_consensus(&p, ConsensusClass::Condorcet, DistanceId::Swap).unwrap();
    assert_eq!(condorcet.min_distance, 1);
    for q in &condorcet.minimizers {
        assert!(!condorcet_winner(q, false).is_empty());
    }
    assert_eq!(condorcet.winners, AltSet::full(3));
}

#[test]
fn condorcet_class_rejects_discrete_distance() {
    let p = Profile::from_indices(2, &[&[0, 1], &[1, 0]]);
    assert!(closest_consensus(&p, ConsensusClass::Condorcet, DistanceId::Discrete).is_err());
}

#[test]
fn borda_mle_agrees_with_borda_exhaustively() {
    use scrutineer_core::epistemic::borda_mle_winners;
    for p in enumerate_profiles(3, 3).unwrap() {
        assert_eq!(
            borda_mle_winners(&p),
            positional(&p, &ScoreVector::Borda).unwrap().winners
        );
    }
}

#[test]
fn pliny_unanimous_swap_minimizer_promotes_winner() {
    let p = scrutineer_core::fixtures::fixture("PLINY").unwrap();
    let out = closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Swap).unwrap();
    // Borda scores: a 305, b 404, c 200; the swap-consensus winner is b
    assert_eq!(out.winners, AltSet::singleton(Alt(1)));
    assert_eq!(out.minimizers.len(), 1);
    let consensus = &out.minimizers[0];
    for (orig, fixed) in p.ballots().iter().zip(consensus.ballots()) {
        assert_eq!(fixed.top(), Alt(1));
        assert_eq!(
            ballot_distance(DistanceId::Swap, orig, fixed).unwrap(),
            (orig.rank_of(Alt(1)).unwrap() - 1) as u64
        );
    }
}

//! Jury-theorem computations with exact rational arithmetic, the pairwise
//! noise model over tournament ballots, and the maximum-likelihood
//! characterizations of Kemeny-style ranking and Borda winners.
//!
//! Closed-form probabilities use arbitrary-precision rationals so the
//! recursion identity can be checked with equality; Monte-Carlo simulation
//! is the only floating-point path.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::alts::{Alt, AltSet};
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::Score;
use crate::tournaments::Tournament;

/// A voter competence: the probability of choosing the objectively better
/// alternative in a pairwise comparison.
#[derive(Clone, PartialEq, Debug)]
pub struct Accuracy(Score);

impl Accuracy {
    /// The standard range `1/2 < p <= 1`.
    pub fn competent(p: Score) -> Result<Accuracy> {
        let half = Score::new(BigInt::one(), BigInt::from(2));
        if p <= half || p > Score::one() {
            return Err(Error::invalid("competence must satisfy 1/2 < p <= 1"));
        }
        Ok(Accuracy(p))
    }

    /// The relaxed range `0 <= p <= 1` used by the exercise variants.
    pub fn any(p: Score) -> Result<Accuracy> {
        if p < Score::zero() || p > Score::one() {
            return Err(Error::invalid("accuracy must lie in [0, 1]"));
        }
        Ok(Accuracy(p))
    }

    pub fn value(&self) -> &Score {
        &self.0
    }
}

fn pow(base: &Score, exp: u64) -> Score {
    let mut acc = Score::one();
    for _ in 0..exp {
        acc *= base.clone();
    }
    acc
}

fn require_odd(n: u64) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::invalid("the jury size must be odd"));
    }
    Ok(())
}

/// Exact probability that a majority of `n` independent voters with
/// accuracy `p` is correct: the upper tail of the binomial distribution
/// from `(n+1)/2` successes on.
pub fn jury_accuracy(n: u64, p: &Accuracy) -> Result<Score> {
    require_odd(n)?;
    let p = p.value();
    let q = Score::one() - p.clone();
    let mut total = Score::zero();
    for h in n.div_ceil(2)..=n {
        let ways = binomial(BigInt::from(n), BigInt::from(h));
        total += Score::from_integer(ways) * pow(p, h) * pow(&q, n - h);
    }
    Ok(total)
}

/// The same accuracies computed through the recurrence
/// `p(n+2) = p(n) + (2p - 1) * C(n, (n+1)/2) * (p(1-p))^((n+1)/2)`,
/// returned for every odd `n` up to `n_max`. Equals [`jury_accuracy`]
/// term by term, exactly.
pub fn jury_accuracy_sequence(n_max: u64, p: &Accuracy) -> Result<Vec<(u64, Score)>> {
    require_odd(n_max)?;
    let p = p.value();
    let q = Score::one() - p.clone();
    let two_p_minus_one = p.clone() + p.clone() - Score::one();
    let mut out = Vec::new();
    let mut current = p.clone();
    let mut n = 1u64;
    loop {
        out.push((n, current.clone()));
        if n >= n_max {
            break;
        }
        let ways = binomial(BigInt::from(n), BigInt::from(n.div_ceil(2)));
        let increment = two_p_minus_one.clone()
            * Score::from_integer(ways)
            * pow(&(p.clone() * q.clone()), n.div_ceil(2));
        current += increment;
        n += 2;
    }
    Ok(out)
}

/// The counter-based generator used by every simulation in this crate.
///
/// State advances by the 64-bit golden-ratio constant and each output is the
/// SplitMix64 finalizer of the new state, so a seed fully determines the
/// stream. Documented so runs are bit-reproducible across implementations.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Exact Bernoulli draw: true with probability exactly `p`, decided by
    /// comparing the 64-bit draw `x` against `p` via `x * den < num * 2^64`.
    pub fn bernoulli(&mut self, p: &Score) -> bool {
        let x = BigInt::from(self.next_u64());
        x * p.denom() < p.numer() * (BigInt::one() << 64u32)
    }
}

/// Trials are pre-partitioned into this many shards with per-shard derived
/// seeds; worker threads map shards to threads, so the estimate does not
/// depend on the worker count.
pub const SIMULATION_SHARDS: u64 = 64;

/// A Monte-Carlo estimate with a 95% normal-approximation interval.
#[derive(Clone, Debug, PartialEq)]
pub struct JuryEstimate {
    pub n: u64,
    pub trials: u64,
    pub seed: u64,
    pub estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Estimate the majority-correct probability by simulating `trials`
/// elections of `n` coin-toss voters. The master generator seeded with
/// `seed` emits one sub-seed per shard; shard `s` simulates its share of
/// trials on its own stream. `jobs` only controls threading.
pub fn jury_simulate(
    n: u64,
    p: &Accuracy,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<JuryEstimate> {
    require_odd(n)?;
    if trials == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    let mut master = SplitMix64::new(seed);
    let shard_seeds: Vec<u64> = (0..SIMULATION_SHARDS).map(|_| master.next_u64()).collect();
    let shard_trials: Vec<u64> = (0..SIMULATION_SHARDS)
        .map(|s| trials / SIMULATION_SHARDS + u64::from(s < trials % SIMULATION_SHARDS))
        .collect();

    let run_shard = |s: usize| -> u64 {
        let mut rng = SplitMix64::new(shard_seeds[s]);
        let mut correct = 0u64;
        for _ in 0..shard_trials[s] {
            let mut votes = 0u64;
            for _ in 0..n {
                if rng.bernoulli(p.value()) {
                    votes += 1;
                }
            }
            if 2 * votes > n {
                correct += 1;
            }
        }
        correct
    };

    let jobs = jobs.max(1);
    let correct: u64 = if jobs == 1 {
        (0..SIMULATION_SHARDS as usize).map(run_shard).sum()
    } else {
        std::thread::scope(|scope| {
            let chunk = (SIMULATION_SHARDS as usize).div_ceil(jobs);
            let handles: Vec<_> = (0..SIMULATION_SHARDS as usize)
                .collect::<Vec<_>>()
                .chunks(chunk)
                .map(|shard_ids| {
                    let shard_ids = shard_ids.to_vec();
                    scope.spawn(move || shard_ids.into_iter().map(run_shard).sum::<u64>())
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).sum()
        })
    };

    let estimate = correct as f64 / trials as f64;
    let half_width = 1.96 * (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok(JuryEstimate {
        n,
        trials,
        seed,
        estimate,
        ci_low: (estimate - half_width).max(0.0),
        ci_high: (estimate + half_width).min(1.0),
    })
}

/// Draw `n` tournament ballots around `true_order`: each of the `C(m,2)`
/// pairwise opinions independently agrees with the true order with
/// probability `p`. Draws happen in row-major order, voters outer, index
/// pairs `(x, y)` with `x < y` inner.
pub fn sample_tournament_profile(
    true_order: &Ballot,
    p: &Accuracy,
    n: usize,
    seed: u64,
) -> Result<Vec<Tournament>> {
    let domain = true_order.alts();
    let members: Vec<Alt> = domain.iter().collect();
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut edges = Vec::new();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let agree = rng.bernoulli(p.value());
                let true_direction = if true_order.prefers(x, y) {
                    (x, y)
                } else {
                    (y, x)
                };
                let edge = if agree {
                    true_direction
                } else {
                    (true_direction.1, true_direction.0)
                };
                edges.push(edge);
            }
        }
        out.push(Tournament::from_edges(domain, edges)?);
    }
    Ok(out)
}

/// Pairs on which a linear order and a tournament ballot disagree: the
/// natural extension of the swap distance to a possibly cyclic opinion.
pub fn tournament_disagreement(order: &Ballot, t: &Tournament) -> u64 {
    let slice = order.as_slice();
    let mut count = 0;
    for (i, &x) in slice.iter().enumerate() {
        for &y in &slice[i + 1..] {
            if t.beats(y, x) {
                count += 1;
            }
        }
    }
    count
}

/// Exact likelihood of a tournament profile given a candidate true order:
/// `p^(n*C(m,2) - D) * (1-p)^D` where `D` sums the pairwise disagreements.
pub fn profile_likelihood(ballots: &[Tournament], order: &Ballot, p: &Accuracy) -> Score {
    let m = order.len() as u64;
    let pairs = m * (m - 1) / 2;
    let d: u64 = ballots
        .iter()
        .map(|t| tournament_disagreement(order, t))
        .sum();
    let total = pairs * ballots.len() as u64;
    let q = Score::one() - p.value().clone();
    pow(p.value(), total - d) * pow(&q, d)
}

/// Maximum-likelihood rankings: the linear orders maximizing the exact
/// likelihood of the observed tournament profile.
pub fn mle_rankings(ballots: &[Tournament], p: &Accuracy) -> Result<Vec<Ballot>> {
    let domain = domain_of(ballots)?;
    let mut best: Option<(Score, Vec<Ballot>)> = None;
    for order in all_ballots(domain) {
        let likelihood = profile_likelihood(ballots, &order, p);
        match &mut best {
            None => best = Some((likelihood, vec![order])),
            Some((max, orders)) => {
                if likelihood > *max {
                    *max = likelihood;
                    *orders = vec![order];
                } else if likelihood == *max {
                    orders.push(order);
                }
            }
        }
    }
    Ok(best.expect("nonempty domain").1)
}

/// The combinatorial route: linear orders minimizing the summed pairwise
/// disagreement with the tournament profile. For competent accuracies this
/// must coincide with [`mle_rankings`].
pub fn min_disagreement_rankings(ballots: &[Tournament]) -> Result<Vec<Ballot>> {
    let domain = domain_of(ballots)?;
    let mut best: Option<(u64, Vec<Ballot>)> = None;
    for order in all_ballots(domain) {
        let d: u64 = ballots
            .iter()
            .map(|t| tournament_disagreement(&order, t))
            .sum();
        match &mut best {
            None => best = Some((d, vec![order])),
            Some((min, orders)) => {
                if d < *min {
                    *min = d;
                    *orders = vec![order];
                } else if d == *min {
                    orders.push(order);
                }
            }
        }
    }
    Ok(best.expect("nonempty domain").1)
}

fn domain_of(ballots: &[Tournament]) -> Result<AltSet> {
    let first = ballots
        .first()
        .ok_or_else(|| Error::invalid("need at least one tournament ballot"))?;
    for t in ballots {
        if t.domain() != first.domain() {
            return Err(Error::invalid("tournament ballots must share a domain"));
        }
        if !t.is_strict_complete() {
            return Err(Error::invalid(
                "tournament ballots must be strict and complete",
            ));
        }
    }
    if (first.domain().len() as u64) > 8 {
        return Err(Error::Budget("mle enumerates m! orders; m > 8".into()));
    }
    Ok(first.domain())
}

/// Winners under the rank-noise model where the probability of placing the
/// true winner at rank `k` scales as `2^(m-k)`: the alternatives maximizing
/// the summed exponent, which is exactly the Borda score.
pub fn borda_mle_winners(p: &Profile) -> AltSet {
    let m = p.m() as u64;
    let mut best: Option<(u64, AltSet)> = None;
    for x in p.domain().iter() {
        let exponent: u64 = p
            .ballots()
            .iter()
            .map(|b| m - b.rank_of(x).expect("domain member") as u64)
            .sum();
        match &mut best {
            None => best = Some((exponent, AltSet::singleton(x))),
            Some((max, set)) => {
                if exponent > *max {
                    *max = exponent;
                    *set = AltSet::singleton(x);
                } else if exponent == *max {
                    set.insert(x);
                }
            }
        }
    }
    best.expect("nonempty domain").1
}

/// `1 - accuracy <= exp(-2 n (p - 1/2)^2)`, the concrete non-asymptotic
/// stand-in for the limit claim. Uses floating point for the bound only.
pub fn hoeffding_bound_holds(n: u64, p: &Accuracy, accuracy: &Score) -> bool {
    let p_f = rational_to_f64(p.value());
    let failure = 1.0 - rational_to_f64(accuracy);
    let bound = (-2.0 * n as f64 * (p_f - 0.5).powi(2)).exp();
    failure <= bound + 1e-12
}

pub fn rational_to_f64(r: &Score) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("finite rational")
}

//! Induced voting games: best-response graphs over strategy profiles, pure
//! Nash equilibria as sinks, and the dynamic price of anarchy for scoring
//! rules.

use num_traits::Zero;

use crate::alts::Alt;
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};
use crate::profile::{enumerate_profiles, Profile};
use crate::rules::{positional, RuleHandle, Score};

/// What a strategy is: just a top choice (expanded by moving it to the front
/// of the voter's truthful ballot) or a full ballot.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StrategySpace {
    TopOnly,
    FullOrders,
}

/// Which deviations induce graph edges: any profitable deviation, or only
/// deviations to a best response.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum DeviationKind {
    #[default]
    Profitable,
    BestResponse,
}

/// An ordinal game induced by a resolute rule: players are the voters, the
/// true profile fixes their preferences over outcomes, and every player
/// submits a strategy from the chosen space.
#[derive(Clone, Debug)]
pub struct VotingGame {
    pub true_profile: Profile,
    pub rule: RuleHandle,
    pub space: StrategySpace,
    pub deviation: DeviationKind,
}

const MAX_GAME_NODES: u64 = 1_000_000;

/// The best-response graph of a game: one node per strategy profile, an edge
/// per profitable deviation, and the sinks (pure Nash equilibria).
#[derive(Clone, Debug)]
pub struct GameGraph {
    /// Per-node strategy index tuple (one entry per voter).
    pub nodes: Vec<Vec<usize>>,
    /// The submitted profile at each node.
    pub profiles: Vec<Profile>,
    /// Resolved outcome at each node.
    pub outcomes: Vec<Alt>,
    /// `(from, to, deviator)` triples.
    pub edges: Vec<(usize, usize, usize)>,
    /// Nodes with no outgoing edge.
    pub sinks: Vec<usize>,
    /// Index of the node where everyone plays truthfully.
    pub truthful_node: usize,
}

impl VotingGame {
    fn strategy_count(&self) -> usize {
        match self.space {
            StrategySpace::TopOnly => self.true_profile.m(),
            StrategySpace::FullOrders => all_ballots(self.true_profile.domain()).len(),
        }
    }

    fn ballot_for(&self, voter: usize, strategy: usize, orders: &[Ballot]) -> Ballot {
        match self.space {
            StrategySpace::TopOnly => {
                let tops: Vec<Alt> = self.true_profile.domain().iter().collect();
                self.true_profile.ballots()[voter].promoted(tops[strategy])
            }
            StrategySpace::FullOrders => orders[strategy].clone(),
        }
    }

    fn truthful_strategy(&self, voter: usize, orders: &[Ballot]) -> usize {
        let truthful = &self.true_profile.ballots()[voter];
        match self.space {
            StrategySpace::TopOnly => {
                let tops: Vec<Alt> = self.true_profile.domain().iter().collect();
                tops.iter()
                    .position(|&a| a == truthful.top())
                    .expect("top is in the domain")
            }
            StrategySpace::FullOrders => orders
                .iter()
                .position(|b| b == truthful)
                .expect("truthful ballot is a linear order"),
        }
    }
}

/// Build the full best-response graph of the game.
pub fn best_response_graph(game: &VotingGame) -> Result<GameGraph> {
    let n = game.true_profile.n();
    let orders = all_ballots(game.true_profile.domain());
    let s = game.strategy_count();
    match (s as u64).checked_pow(n as u32) {
        Some(total) if total <= MAX_GAME_NODES => {}
        _ => {
            return Err(Error::Budget(format!(
                "strategy profile space {s}^{n} exceeds {MAX_GAME_NODES} nodes"
            )))
        }
    }

    // nodes in lexicographic order of strategy tuples, voter 0 most significant
    let mut nodes = Vec::new();
    let mut indices = vec![0usize; n];
    loop {
        nodes.push(indices.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < s {
                break;
            }
            indices[pos] = 0;
        }
        if indices.iter().all(|&i| i == 0) {
            break;
        }
    }

    let node_index = |node: &[usize]| -> usize { node.iter().fold(0usize, |acc, &i| acc * s + i) };

    let mut profiles = Vec::with_capacity(nodes.len());
    let mut outcomes = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let ballots: Vec<Ballot> = (0..n)
            .map(|v| game.ballot_for(v, node[v], &orders))
            .collect();
        let submitted = Profile::with_domain(
            game.true_profile.alternatives().clone(),
            game.true_profile.domain(),
            ballots,
        )?;
        let outcome = game.rule.resolved(&submitted)?;
        profiles.push(submitted);
        outcomes.push(outcome);
    }

    let mut edges = Vec::new();
    let mut has_out = vec![false; nodes.len()];
    for (u, node) in nodes.iter().enumerate() {
        for voter in 0..n {
            let truthful = &game.true_profile.ballots()[voter];
            let current = outcomes[u];
            // candidate deviations and their outcomes
            let mut targets: Vec<(usize, Alt)> = Vec::new();
            for alt_strategy in 0..s {
                if alt_strategy == node[voter] {
                    continue;
                }
                let mut dev = node.clone();
                dev[voter] = alt_strategy;
                let v = node_index(&dev);
                targets.push((v, outcomes[v]));
            }
            match game.deviation {
                DeviationKind::Profitable => {
                    for (v, outcome) in targets {
                        if truthful.prefers(outcome, current) {
                            edges.push((u, v, voter));
                            has_out[u] = true;
                        }
                    }
                }
                DeviationKind::BestResponse => {
                    // the best achievable outcome for this voter from u
                    let mut best: Option<Alt> = Some(current);
                    for &(_, outcome) in &targets {
                        let better = match best {
                            Some(b) => truthful.prefers(outcome, b),
                            None => true,
                        };
                        if better {
                            best = Some(outcome);
                        }
                    }
                    let best = best.expect("at least the current outcome");
                    if truthful.prefers(best, current) {
                        for (v, outcome) in targets {
                            if outcome == best {
                                edges.push((u, v, voter));
                                has_out[u] = true;
                            }
                        }
                    }
                }
            }
        }
    }

    let sinks: Vec<usize> = (0..nodes.len()).filter(|&u| !has_out[u]).collect();
    let truthful_node = node_index(
        &(0..n)
            .map(|v| game.truthful_strategy(v, &orders))
            .collect::<Vec<_>>(),
    );
    Ok(GameGraph {
        nodes,
        profiles,
        outcomes,
        edges,
        sinks,
        truthful_node,
    })
}

impl GameGraph {
    /// Sinks reachable from the truthful node along deviation edges.
    pub fn reachable_equilibria(&self) -> Vec<usize> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![self.truthful_node];
        seen[self.truthful_node] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        self.sinks.iter().copied().filter(|&u| seen[u]).collect()
    }
}

/// The minimizing instance of the price-of-anarchy ratio.
#[derive(Clone, Debug)]
pub struct PoaOutcome {
    pub value: Score,
    pub true_profile: Profile,
    pub equilibrium_profile: Profile,
    pub true_winner: Alt,
    pub equilibrium_winner: Alt,
}

/// Dynamic price of anarchy of a positional rule with lexicographic
/// tie-break over the full `(n, m)` domain: the minimum, over true profiles
/// and equilibria reachable from them by deviation paths, of the ratio
/// between the truthful winner's score in the true profile and the
/// equilibrium winner's score in the equilibrium profile.
///
/// True profiles whose best-response dynamics reach no equilibrium
/// contribute nothing to the minimum.
pub fn dynamic_poa(
    rule: &RuleHandle,
    n: usize,
    m: usize,
    space: StrategySpace,
) -> Result<PoaOutcome> {
    dynamic_poa_with(rule, n, m, space, DeviationKind::Profitable)
}

/// [`dynamic_poa`] with an explicit deviation mode for the reachability
/// dynamics.
pub fn dynamic_poa_with(
    rule: &RuleHandle,
    n: usize,
    m: usize,
    space: StrategySpace,
    deviation: DeviationKind,
) -> Result<PoaOutcome> {
    let vector = rule
        .score_vector()
        .ok_or_else(|| Error::invalid("the price of anarchy is defined for scoring rules"))?;
    if rule.tiebreak != crate::alts::TieBreak::Lexicographic {
        return Err(Error::invalid(
            "the price of anarchy needs the lexicographic tie-break",
        ));
    }

    let score_of = |x: Alt, q: &Profile| -> Result<Score> {
        let scores = positional(q, &vector)?.scores.expect("positional scores");
        Ok(scores
            .iter()
            .find(|(a, _)| *a == x)
            .map(|(_, s)| s.clone())
            .expect("domain member"))
    };

    let mut best: Option<PoaOutcome> = None;
    for true_profile in enumerate_profiles(n, m)? {
        let game = VotingGame {
            true_profile: true_profile.clone(),
            rule: rule.clone(),
            space,
            deviation,
        };
        let graph = best_response_graph(&game)?;
        let true_winner = graph.outcomes[graph.truthful_node];
        let numerator = score_of(true_winner, &true_profile)?;
        for sink in graph.reachable_equilibria() {
            let eq_winner = graph.outcomes[sink];
            let eq_profile = &graph.profiles[sink];
            let denominator = score_of(eq_winner, eq_profile)?;
            if denominator.is_zero() {
                return Err(Error::invalid(
                    "equilibrium winner has score zero; ratio undefined",
                ));
            }
            let value = numerator.clone() / denominator;
            let replace = match &best {
                None => true,
                Some(b) => value < b.value,
            };
            if replace {
                best = Some(PoaOutcome {
                    value,
                    true_profile: true_profile.clone(),
                    equilibrium_profile: eq_profile.clone(),
                    true_winner,
                    equilibrium_winner: eq_winner,
                });
            }
        }
    }
    best.ok_or_else(|| Error::invalid("no reachable equilibrium anywhere in the domain"))
}

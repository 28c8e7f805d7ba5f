//! A materialized profile domain: every profile for `(n, m)` with fast
//! index lookup, used by the exhaustive axiom checkers and the table
//! searches.

use std::collections::HashMap;

use crate::alts::{Alt, Alternatives};
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};
use crate::profile::{profile_space_size, Profile};

/// Default cap on the number of profiles a checker will materialize.
pub const DEFAULT_DOMAIN_BUDGET: u64 = 1_000_000;

pub struct Domain {
    pub n: usize,
    pub m: usize,
    pub alts: Alternatives,
    /// All `m!` ballots in lexicographic order.
    pub ballots: Vec<Ballot>,
    /// All `(m!)^n` profiles, lexicographic by ballot rank tuple with voter 0
    /// most significant.
    pub profiles: Vec<Profile>,
    ballot_rank: HashMap<Vec<Alt>, usize>,
}

impl Domain {
    pub fn new(n: usize, m: usize) -> Result<Domain> {
        Domain::with_budget(n, m, DEFAULT_DOMAIN_BUDGET)
    }

    pub fn with_budget(n: usize, m: usize, budget: u64) -> Result<Domain> {
        if n < 1 || m < 1 {
            return Err(Error::invalid("domain needs n >= 1 and m >= 1"));
        }
        match profile_space_size(n, m) {
            Some(total) if total <= budget => {}
            _ => {
                return Err(Error::Budget(format!(
                    "(m!)^n profile space for n={n}, m={m} exceeds {budget}"
                )))
            }
        }
        let alts = Alternatives::default_labels(m);
        let ballots = all_ballots(alts.full_set());
        let ballot_rank: HashMap<Vec<Alt>, usize> = ballots
            .iter()
            .enumerate()
            .map(|(i, b)| (b.as_slice().to_vec(), i))
            .collect();
        let count = ballots.len().pow(n as u32);
        let mut profiles = Vec::with_capacity(count);
        let mut indices = vec![0usize; n];
        loop {
            let bs: Vec<Ballot> = indices.iter().map(|&i| ballots[i].clone()).collect();
            profiles.push(Profile::new(alts.clone(), bs)?);
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(Domain {
                        n,
                        m,
                        alts,
                        ballots,
                        profiles,
                        ballot_rank,
                    });
                }
                pos -= 1;
                indices[pos] += 1;
                if indices[pos] < ballots.len() {
                    break;
                }
                indices[pos] = 0;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn ballot_count(&self) -> usize {
        self.ballots.len()
    }

    pub fn rank_of_ballot(&self, b: &Ballot) -> usize {
        *self
            .ballot_rank
            .get(b.as_slice())
            .expect("ballot over the domain's alternatives")
    }

    /// Index of a profile over this domain.
    pub fn index_of(&self, p: &Profile) -> usize {
        let radix = self.ballots.len();
        p.ballots()
            .iter()
            .fold(0usize, |acc, b| acc * radix + self.rank_of_ballot(b))
    }

    /// Index of the profile reached by swapping one voter's ballot.
    pub fn index_with_ballot(&self, p_index: usize, voter: usize, ballot_rank: usize) -> usize {
        let radix = self.ballots.len();
        let place = radix.pow((self.n - 1 - voter) as u32);
        let current = p_index / place % radix;
        p_index - current * place + ballot_rank * place
    }

    /// All voter permutations of `{0, .., n-1}`.
    pub fn voter_permutations(&self) -> Vec<Vec<usize>> {
        use itertools::Itertools;
        (0..self.n).permutations(self.n).collect()
    }

    /// All alternative permutations as index maps.
    pub fn alternative_permutations(&self) -> Vec<Vec<Alt>> {
        use itertools::Itertools;
        (0..self.m as u32).map(Alt).permutations(self.m).collect()
    }

    /// Voter mask of supporters of `x` over `y` per profile.
    pub fn supporter_masks(&self) -> Vec<Vec<u64>> {
        let m = self.m;
        self.profiles
            .iter()
            .map(|p| {
                let mut masks = vec![0u64; m * m];
                for x in p.domain().iter() {
                    for y in p.domain().iter() {
                        if x != y {
                            masks[x.idx() * m + y.idx()] = p.supporters(x, y);
                        }
                    }
                }
                masks
            })
            .collect()
    }
}

//! Preference profiles and profile-space enumeration.

use std::fmt;

use crate::alts::{Alt, AltSet, Alternatives};
use crate::ballot::{all_ballots, Ballot};
use crate::error::{Error, Result};

/// Default cap on the number of profiles an enumeration may yield.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// An indexed tuple of ballots over a common alternative domain.
///
/// Ballots are stored fully expanded; the counted form of the profile file
/// format is an I/O convenience only, so voter indices stay well defined.
/// A profile produced by [`Profile::restrict`] keeps the original label
/// table and indices but ranks only the alternatives in its `domain`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    alts: Alternatives,
    domain: AltSet,
    ballots: Vec<Ballot>,
}

impl Profile {
    /// Build a profile over the full label table.
    pub fn new(alts: Alternatives, ballots: Vec<Ballot>) -> Result<Self> {
        let domain = alts.full_set();
        Self::with_domain(alts, domain, ballots)
    }

    /// Build a profile whose ballots rank exactly the alternatives in `domain`.
    pub fn with_domain(alts: Alternatives, domain: AltSet, ballots: Vec<Ballot>) -> Result<Self> {
        if ballots.is_empty() {
            return Err(Error::invalid("a profile needs at least one ballot"));
        }
        if !domain.is_subset(alts.full_set()) {
            return Err(Error::invalid("domain exceeds label table"));
        }
        for (i, b) in ballots.iter().enumerate() {
            if b.alts() != domain {
                return Err(Error::invalid(format!(
                    "ballot {} is not a permutation of the domain",
                    i
                )));
            }
        }
        Ok(Profile {
            alts,
            domain,
            ballots,
        })
    }

    /// A profile over `a, b, c, ...` given ballots as index slices.
    /// Intended for tests and synthetic domains.
    pub fn from_indices(m: usize, ballots: &[&[u32]]) -> Self {
        let alts = Alternatives::default_labels(m);
        let ballots = ballots
            .iter()
            .map(|b| Ballot::from_indices(b.iter().copied()))
            .collect();
        Profile::new(alts, ballots).expect("malformed synthetic profile")
    }

    /// Number of voters.
    pub fn n(&self) -> usize {
        self.ballots.len()
    }

    /// Number of alternatives currently in the domain.
    pub fn m(&self) -> usize {
        self.domain.len()
    }

    pub fn alternatives(&self) -> &Alternatives {
        &self.alts
    }

    pub fn domain(&self) -> AltSet {
        self.domain
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn ballot(&self, voter: usize) -> Result<&Ballot> {
        self.ballots
            .get(voter)
            .ok_or_else(|| Error::invalid(format!("no voter {voter} (n = {})", self.n())))
    }

    /// Number of voters that strictly prefer `x` to `y`.
    pub fn support(&self, x: Alt, y: Alt) -> Result<usize> {
        if x == y {
            return Err(Error::invalid("support requires two distinct alternatives"));
        }
        if !self.domain.contains(x) || !self.domain.contains(y) {
            return Err(Error::invalid("alternative outside the profile domain"));
        }
        Ok(self.ballots.iter().filter(|b| b.prefers(x, y)).count())
    }

    /// The voters that strictly prefer `x` to `y`, as a bitmask over voter
    /// indices (usable only when `n <= 64`).
    pub fn supporters(&self, x: Alt, y: Alt) -> u64 {
        debug_assert!(self.n() <= 64);
        let mut mask = 0u64;
        for (i, b) in self.ballots.iter().enumerate() {
            if b.prefers(x, y) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Restrict every ballot to the alternatives in `keep`.
    pub fn restrict(&self, keep: AltSet) -> Result<Profile> {
        let keep = keep.intersection(self.domain);
        if keep.is_empty() {
            return Err(Error::invalid(
                "cannot restrict a profile to no alternatives",
            ));
        }
        Ok(Profile {
            alts: self.alts.clone(),
            domain: keep,
            ballots: self.ballots.iter().map(|b| b.restrict(keep)).collect(),
        })
    }

    /// Reorder voters: ballot `i` of the output is ballot `perm[i]` of `self`.
    pub fn permute_voters(&self, perm: &[usize]) -> Result<Profile> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::invalid("voter permutation has wrong length"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::invalid("voter permutation is not a bijection"));
            }
            seen[p] = true;
        }
        Ok(Profile {
            alts: self.alts.clone(),
            domain: self.domain,
            ballots: perm.iter().map(|&p| self.ballots[p].clone()).collect(),
        })
    }

    /// Relabel alternatives in place: every occurrence of `x` becomes `perm[x]`.
    /// `perm` must be a bijection of the full index range that fixes the domain.
    pub fn permute_alternatives(&self, perm: &[Alt]) -> Result<Profile> {
        let m_full = self.alts.len();
        if perm.len() != m_full {
            return Err(Error::invalid("alternative permutation has wrong length"));
        }
        let mut seen = AltSet::EMPTY;
        for &p in perm {
            if p.idx() >= m_full || seen.contains(p) {
                return Err(Error::invalid("alternative permutation is not a bijection"));
            }
            seen.insert(p);
        }
        let image: AltSet = self.domain.iter().map(|a| perm[a.idx()]).collect();
        if image != self.domain {
            return Err(Error::invalid(
                "alternative permutation must map the domain onto itself",
            ));
        }
        Ok(Profile {
            alts: self.alts.clone(),
            domain: self.domain,
            ballots: self.ballots.iter().map(|b| b.relabel(perm)).collect(),
        })
    }

    /// Replace one voter's ballot.
    pub fn with_ballot(&self, voter: usize, ballot: Ballot) -> Result<Profile> {
        if voter >= self.n() {
            return Err(Error::invalid(format!("no voter {voter}")));
        }
        if ballot.alts() != self.domain {
            return Err(Error::invalid("replacement ballot has wrong domain"));
        }
        let mut ballots = self.ballots.clone();
        ballots[voter] = ballot;
        Ok(Profile {
            alts: self.alts.clone(),
            domain: self.domain,
            ballots,
        })
    }

    /// Group identical ballots in first-occurrence order, with counts.
    pub fn grouped(&self) -> Vec<(usize, &Ballot)> {
        let mut groups: Vec<(usize, &Ballot)> = Vec::new();
        for b in &self.ballots {
            match groups.iter_mut().find(|(_, g)| *g == b) {
                Some((count, _)) => *count += 1,
                None => groups.push((1, b)),
            }
        }
        groups
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile(n={}, m={})", self.n(), self.m())
    }
}

/// A total preorder: an ordered sequence of disjoint tiers covering the domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakOrder {
    tiers: Vec<AltSet>,
}

impl WeakOrder {
    pub fn new(tiers: Vec<AltSet>) -> Result<Self> {
        let mut seen = AltSet::EMPTY;
        for t in &tiers {
            if t.is_empty() {
                return Err(Error::invalid("weak order has an empty tier"));
            }
            if !t.intersection(seen).is_empty() {
                return Err(Error::invalid("weak order tiers overlap"));
            }
            seen = seen.union(*t);
        }
        Ok(WeakOrder { tiers })
    }

    /// The single-ballot weak order (singleton tiers).
    pub fn from_ballot(b: &Ballot) -> Self {
        WeakOrder {
            tiers: b.as_slice().iter().map(|&a| AltSet::singleton(a)).collect(),
        }
    }

    pub fn tiers(&self) -> &[AltSet] {
        &self.tiers
    }

    pub fn domain(&self) -> AltSet {
        self.tiers
            .iter()
            .fold(AltSet::EMPTY, |acc, t| acc.union(*t))
    }

    /// Tier index of `x` (0 = best).
    pub fn tier_of(&self, x: Alt) -> Option<usize> {
        self.tiers.iter().position(|t| t.contains(x))
    }

    /// Weak social preference: `x` at least as good as `y`.
    pub fn weakly_prefers(&self, x: Alt, y: Alt) -> bool {
        match (self.tier_of(x), self.tier_of(y)) {
            (Some(tx), Some(ty)) => tx <= ty,
            _ => false,
        }
    }

    /// Strict social preference.
    pub fn strictly_prefers(&self, x: Alt, y: Alt) -> bool {
        match (self.tier_of(x), self.tier_of(y)) {
            (Some(tx), Some(ty)) => tx < ty,
            _ => false,
        }
    }

    /// True when every tier is a singleton.
    pub fn is_linear(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// The first tier whose members are tied, if any.
    pub fn first_tie(&self) -> Option<AltSet> {
        self.tiers.iter().copied().find(|t| t.len() > 1)
    }

    /// All top-`k` prefixes across the linearizations of this weak order:
    /// whole tiers are taken until the boundary, then every way of filling
    /// the remainder from the boundary tier.
    pub fn top_k_sets(&self, k: usize) -> Vec<AltSet> {
        let mut base = AltSet::EMPTY;
        for tier in &self.tiers {
            let need = k - base.len();
            if need == 0 {
                break;
            }
            if tier.len() <= need {
                base = base.union(*tier);
            } else {
                return tier
                    .subsets_of_size(need)
                    .into_iter()
                    .map(|fill| base.union(fill))
                    .collect();
            }
        }
        if base.len() == k {
            vec![base]
        } else {
            Vec::new()
        }
    }
}

/// Deterministic stream over all `(m!)^n` profiles for the default label
/// table on `m` alternatives, lexicographic by ballot index tuple with
/// voter 0 most significant.
pub struct ProfileEnumeration {
    alts: Alternatives,
    domain: AltSet,
    ballots: Vec<Ballot>,
    indices: Vec<usize>,
    done: bool,
}

impl Iterator for ProfileEnumeration {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let profile = Profile {
            alts: self.alts.clone(),
            domain: self.domain,
            ballots: self
                .indices
                .iter()
                .map(|&i| self.ballots[i].clone())
                .collect(),
        };
        // advance the mixed-radix counter, last voter fastest
        let mut pos = self.indices.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.ballots.len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(profile)
    }
}

/// Total number of profiles for `n` voters over `m` alternatives, if it
/// fits in a `u64`.
pub fn profile_space_size(n: usize, m: usize) -> Option<u64> {
    let mut fact = 1u64;
    for i in 2..=m as u64 {
        fact = fact.checked_mul(i)?;
    }
    fact.checked_pow(u32::try_from(n).ok()?)
}

/// Enumerate all profiles for `(n, m)` under the default budget.
pub fn enumerate_profiles(n: usize, m: usize) -> Result<ProfileEnumeration> {
    enumerate_profiles_with_budget(n, m, DEFAULT_ENUMERATION_BUDGET)
}

/// Enumerate all profiles for `(n, m)`, failing fast when `(m!)^n` exceeds
/// the budget.
pub fn enumerate_profiles_with_budget(
    n: usize,
    m: usize,
    budget: u64,
) -> Result<ProfileEnumeration> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("enumeration needs n >= 1 and m >= 1"));
    }
    match profile_space_size(n, m) {
        Some(total) if total <= budget => {}
        _ => {
            return Err(Error::Budget(format!(
                "profile space (m!)^n for n={n}, m={m} exceeds budget {budget}"
            )))
        }
    }
    let alts = Alternatives::default_labels(m);
    let domain = alts.full_set();
    Ok(ProfileEnumeration {
        alts,
        domain,
        ballots: all_ballots(domain),
        indices: vec![0; n],
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_counts() {
        // three voters over {a, b}: ab, ab, ba
        let p = Profile::from_indices(2, &[&[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(p.support(Alt(0), Alt(1)).unwrap(), 2);
        assert_eq!(p.support(Alt(1), Alt(0)).unwrap(), 1);
        assert!(p.support(Alt(0), Alt(0)).is_err());
    }

    #[test]
    fn support_sums_to_n() {
        for p in enumerate_profiles(2, 3).unwrap() {
            for x in p.domain().iter() {
                for y in p.domain().iter() {
                    if x != y {
                        assert_eq!(p.support(x, y).unwrap() + p.support(y, x).unwrap(), p.n());
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_identity_and_nesting() {
        let p = Profile::from_indices(3, &[&[0, 1, 2], &[2, 1, 0]]);
        assert_eq!(p.restrict(p.domain()).unwrap(), p);
        let xy: AltSet = [Alt(0), Alt(1)].into_iter().collect();
        let x = AltSet::singleton(Alt(0));
        let via_xy = p.restrict(xy).unwrap().restrict(x).unwrap();
        assert_eq!(via_xy, p.restrict(x).unwrap());
        assert!(p.restrict(AltSet::EMPTY).is_err());
    }

    #[test]
    fn permutation_roundtrip() {
        let p = Profile::from_indices(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        let perm = vec![2, 0, 1];
        let inverse = vec![1, 2, 0];
        let q = p.permute_voters(&perm).unwrap();
        assert_eq!(q.permute_voters(&inverse).unwrap(), p);
        let rho = vec![Alt(1), Alt(0), Alt(2)];
        let r = p.permute_alternatives(&rho).unwrap();
        assert_eq!(r.permute_alternatives(&rho).unwrap(), p);
        assert!(p.permute_voters(&[0, 0, 1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_profiles(1, 2).unwrap().count(), 2);
        assert_eq!(enumerate_profiles(3, 2).unwrap().count(), 8);
        assert_eq!(enumerate_profiles(2, 3).unwrap().count(), 36);
        assert!(enumerate_profiles_with_budget(3, 2, 7).is_err());
    }

    #[test]
    fn enumeration_is_distinct() {
        let all: Vec<Profile> = enumerate_profiles(2, 3).unwrap().collect();
        for (i, p) in all.iter().enumerate() {
            for q in &all[i + 1..] {
                assert_ne!(p, q);
            }
        }
    }

    #[test]
    fn weak_order_top_k() {
        // tiers {c}, {a,b,d}
        let tiers = vec![
            AltSet::singleton(Alt(2)),
            [Alt(0), Alt(1), Alt(3)].into_iter().collect(),
        ];
        let w = WeakOrder::new(tiers).unwrap();
        let top2 = w.top_k_sets(2);
        assert_eq!(top2.len(), 3);
        for s in &top2 {
            assert!(s.contains(Alt(2)) && s.len() == 2);
        }
        assert_eq!(w.top_k_sets(4).len(), 1);
        assert!(!w.is_linear());
    }
}

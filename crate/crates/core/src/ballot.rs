//! Linear-order ballots.

use std::fmt;

use crate::alts::{Alt, AltSet};
use crate::error::{Error, Result};

/// A strict total order over a set of alternatives, most preferred first.
///
/// A ballot over a full election ranks every alternative; restricting a
/// profile yields ballots over a subset of the indices, with the relative
/// order preserved.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ballot(Vec<Alt>);

impl Ballot {
    /// Build a ballot, checking that the entries are distinct.
    pub fn new(order: Vec<Alt>) -> Result<Self> {
        let mut seen = AltSet::EMPTY;
        for &a in &order {
            if seen.contains(a) {
                return Err(Error::invalid(format!(
                    "duplicate alternative at index {}",
                    a.0
                )));
            }
            seen.insert(a);
        }
        Ok(Ballot(order))
    }

    /// Build from raw indices without duplicate checking (internal use).
    pub(crate) fn from_indices(order: impl IntoIterator<Item = u32>) -> Self {
        Ballot(order.into_iter().map(Alt).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Alt] {
        &self.0
    }

    /// The most preferred alternative (the voter's peak).
    pub fn top(&self) -> Alt {
        self.0[0]
    }

    /// The set of alternatives this ballot ranks.
    pub fn alts(&self) -> AltSet {
        self.0.iter().copied().collect()
    }

    /// 0-based position of `x`, if ranked.
    pub fn position(&self, x: Alt) -> Option<usize> {
        self.0.iter().position(|&a| a == x)
    }

    /// 1-based rank of `x`; the top alternative has rank 1.
    pub fn rank_of(&self, x: Alt) -> Result<usize> {
        self.position(x)
            .map(|p| p + 1)
            .ok_or_else(|| Error::invalid(format!("alternative {} not in ballot", x.0)))
    }

    /// Does this ballot strictly prefer `x` to `y`?
    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(px), Some(py)) => px < py,
            _ => false,
        }
    }

    /// Keep only the alternatives in `keep`, preserving relative order.
    pub fn restrict(&self, keep: AltSet) -> Ballot {
        Ballot(
            self.0
                .iter()
                .copied()
                .filter(|&a| keep.contains(a))
                .collect(),
        )
    }

    /// Relabel every entry through `map` (indexed by alternative index).
    pub fn relabel(&self, map: &[Alt]) -> Ballot {
        Ballot(self.0.iter().map(|&a| map[a.idx()]).collect())
    }

    /// The reversed order.
    pub fn reversed(&self) -> Ballot {
        Ballot(self.0.iter().rev().copied().collect())
    }

    /// Move `x` to the front, keeping the rest of the order unchanged.
    pub fn promoted(&self, x: Alt) -> Ballot {
        let mut order = Vec::with_capacity(self.0.len());
        order.push(x);
        order.extend(self.0.iter().copied().filter(|&a| a != x));
        Ballot(order)
    }
}

impl fmt::Debug for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ballot[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ">")?;
            }
            write!(f, "{}", a.0)?;
        }
        write!(f, "]")
    }
}

/// All linear orders over `domain`, in lexicographic order of their index
/// sequences. The first entry is the domain in ascending index order.
pub fn all_ballots(domain: AltSet) -> Vec<Ballot> {
    use itertools::Itertools;
    let members: Vec<Alt> = domain.iter().collect();
    members
        .iter()
        .copied()
        .permutations(members.len())
        .map(Ballot)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(order: &[u32]) -> Ballot {
        Ballot::from_indices(order.iter().copied())
    }

    #[test]
    fn rank_of_is_one_based() {
        let abc = b(&[0, 1, 2]);
        assert_eq!(abc.rank_of(Alt(0)).unwrap(), 1);
        assert_eq!(abc.rank_of(Alt(2)).unwrap(), 3);
        assert_eq!(abc.rank_of(abc.top()).unwrap(), 1);
    }

    #[test]
    fn restrict_preserves_order() {
        let ballot = b(&[2, 0, 1]);
        let keep: AltSet = [Alt(0), Alt(1)].into_iter().collect();
        assert_eq!(ballot.restrict(keep), b(&[0, 1]));
        assert_eq!(ballot.restrict(ballot.alts()), ballot);
        assert_eq!(ballot.restrict(AltSet::singleton(Alt(2))), b(&[2]));
    }

    #[test]
    fn all_ballots_lexicographic() {
        let got = all_ballots(AltSet::full(3));
        assert_eq!(got.len(), 6);
        assert_eq!(got[0], b(&[0, 1, 2]));
        assert_eq!(got[5], b(&[2, 1, 0]));
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted);
    }

    #[test]
    fn duplicate_rejected() {
        assert!(Ballot::new(vec![Alt(0), Alt(0)]).is_err());
    }
}

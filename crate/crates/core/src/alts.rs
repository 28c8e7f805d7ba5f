//! Alternatives, alternative sets, and label tables.
//!
//! Alternatives are referred to by index into an election's label table.
//! The index order of the table is the canonical order: it is the order of
//! the `alternatives:` header of a profile file and the order used by every
//! lexicographic tie-break in the crate.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An alternative, identified by its index in the canonical label order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alt(pub u32);

impl Alt {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Alt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alt({})", self.0)
    }
}

/// A set of alternatives, stored as a bitmask (at most 32 alternatives).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AltSet(u32);

impl AltSet {
    pub const EMPTY: AltSet = AltSet(0);

    pub fn singleton(a: Alt) -> Self {
        AltSet(1 << a.0)
    }

    /// The full set `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= 32);
        if m == 32 {
            AltSet(u32::MAX)
        } else {
            AltSet((1u32 << m) - 1)
        }
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        AltSet(bits)
    }

    pub fn contains(self, a: Alt) -> bool {
        self.0 >> a.0 & 1 == 1
    }

    pub fn insert(&mut self, a: Alt) {
        self.0 |= 1 << a.0;
    }

    pub fn remove(&mut self, a: Alt) {
        self.0 &= !(1 << a.0);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: AltSet) -> AltSet {
        AltSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AltSet) -> AltSet {
        AltSet(self.0 & other.0)
    }

    pub fn difference(self, other: AltSet) -> AltSet {
        AltSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AltSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = Alt> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let a = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Alt(a))
            }
        })
    }

    /// The minimum-index member, used by the lexicographic tie-break.
    pub fn first(self) -> Option<Alt> {
        if self.0 == 0 {
            None
        } else {
            Some(Alt(self.0.trailing_zeros()))
        }
    }

    /// All subsets of `self` with exactly `k` members, in ascending mask order.
    pub fn subsets_of_size(self, k: usize) -> Vec<AltSet> {
        let members: Vec<Alt> = self.iter().collect();
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let mut pick = vec![0usize; k];
        fn rec(
            members: &[Alt],
            k: usize,
            start: usize,
            pick: &mut Vec<usize>,
            depth: usize,
            out: &mut Vec<AltSet>,
        ) {
            if depth == k {
                let mut s = AltSet::EMPTY;
                for &i in pick.iter() {
                    s.insert(members[i]);
                }
                out.push(s);
                return;
            }
            for i in start..members.len() {
                pick[depth] = i;
                rec(members, k, i + 1, pick, depth + 1, out);
            }
        }
        rec(&members, k, 0, &mut pick, 0, &mut out);
        out
    }
}

impl FromIterator<Alt> for AltSet {
    fn from_iter<T: IntoIterator<Item = Alt>>(iter: T) -> Self {
        let mut s = AltSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|a| a.0)).finish()
    }
}

/// The label table of an election. Cheap to clone and share.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alternatives(Arc<[String]>);

impl Alternatives {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() || labels.len() > 32 {
            return Err(Error::invalid(format!(
                "need between 1 and 32 alternatives, got {}",
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if a.is_empty() || !a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::invalid(format!("invalid label `{a}`")));
            }
            if labels[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate label `{a}`")));
            }
        }
        Ok(Alternatives(labels.into()))
    }

    /// Default labels `a, b, c, ...` for synthetic elections.
    pub fn default_labels(m: usize) -> Self {
        assert!(m <= 26, "default labels support at most 26 alternatives");
        let labels: Vec<String> = (0..m)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        Alternatives(labels.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, a: Alt) -> &str {
        &self.0[a.idx()]
    }

    pub fn by_label(&self, label: &str) -> Option<Alt> {
        self.0
            .iter()
            .position(|l| l == label)
            .map(|i| Alt(i as u32))
    }

    pub fn iter(&self) -> impl Iterator<Item = Alt> + '_ {
        (0..self.0.len()).map(|i| Alt(i as u32))
    }

    pub fn full_set(&self) -> AltSet {
        AltSet::full(self.0.len())
    }
}

/// Tie-break policy for resolving a tied winner set.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum TieBreak {
    #[default]
    None,
    /// Resolve to the minimum-index (canonically first) member.
    Lexicographic,
}

impl TieBreak {
    /// Apply the policy to a nonempty winner set.
    pub fn resolve(self, winners: AltSet) -> AltSet {
        match self {
            TieBreak::None => winners,
            TieBreak::Lexicographic => match winners.first() {
                Some(a) => AltSet::singleton(a),
                None => winners,
            },
        }
    }
}

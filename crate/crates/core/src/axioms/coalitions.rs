//! Decisive and blocking coalitions, and the ultrafilter structure that
//! forces dictatorship.

use crate::alts::{Alt, AltSet};
use crate::axioms::domain::Domain;
use crate::error::{Error, Result};
use crate::profile::{Profile, WeakOrder};

/// A set of voter subsets over `{0, .., n-1}`, each stored as a bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionFamily {
    pub n: usize,
    members: Vec<u64>,
}

impl CoalitionFamily {
    pub fn new(n: usize, mut members: Vec<u64>) -> Result<Self> {
        if n > 16 {
            return Err(Error::Budget(
                "coalition analysis enumerates 2^n subsets".into(),
            ));
        }
        members.sort_unstable();
        members.dedup();
        Ok(CoalitionFamily { n, members })
    }

    pub fn contains(&self, coalition: u64) -> bool {
        self.members.binary_search(&coalition).is_ok()
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn grand(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }
}

/// Per-pair coalition families plus their intersection over all pairs.
#[derive(Clone, Debug)]
pub struct PairFamilies {
    pub n: usize,
    pub per_pair: Vec<((Alt, Alt), CoalitionFamily)>,
    pub overall: CoalitionFamily,
}

impl PairFamilies {
    pub fn family_for(&self, x: Alt, y: Alt) -> Option<&CoalitionFamily> {
        self.per_pair
            .iter()
            .find(|((a, b), _)| *a == x && *b == y)
            .map(|(_, f)| f)
    }
}

fn intersect_families(
    n: usize,
    families: &[((Alt, Alt), CoalitionFamily)],
) -> Result<CoalitionFamily> {
    let count = 1u64 << n;
    let members = (0..count)
        .filter(|&c| families.iter().all(|(_, f)| f.contains(c)))
        .collect();
    CoalitionFamily::new(n, members)
}

/// Coalitions decisive for `x` over `y` under a social preference function:
/// whenever every coalition member ranks `x` above `y`, so does the social
/// preference, strictly. The overall family intersects over all pairs.
pub fn decisive_coalitions<F>(spf: F, n: usize, m: usize) -> Result<PairFamilies>
where
    F: Fn(&Profile) -> Result<WeakOrder>,
{
    if n > 16 {
        return Err(Error::Budget(
            "coalition analysis enumerates 2^n subsets".into(),
        ));
    }
    let d = Domain::new(n, m)?;
    let values: Vec<WeakOrder> = d.profiles.iter().map(spf).collect::<Result<_>>()?;
    let masks = d.supporter_masks();
    let mut per_pair = Vec::new();
    for x in (0..m as u32).map(Alt) {
        for y in (0..m as u32).map(Alt) {
            if x == y {
                continue;
            }
            let mut members = Vec::new();
            for coalition in 0..(1u64 << n) {
                let decisive = (0..d.len()).all(|i| {
                    let supporters = masks[i][x.idx() * m + y.idx()];
                    coalition & !supporters != 0 || values[i].strictly_prefers(x, y)
                });
                if decisive {
                    members.push(coalition);
                }
            }
            per_pair.push(((x, y), CoalitionFamily::new(n, members)?));
        }
    }
    let overall = intersect_families(n, &per_pair)?;
    Ok(PairFamilies {
        n,
        per_pair,
        overall,
    })
}

/// Coalitions blocking `y` by `x` under a resolute rule: whenever every
/// member ranks `x` above `y`, `y` is not chosen.
pub fn blocking_coalitions<F>(scf: F, n: usize, m: usize) -> Result<PairFamilies>
where
    F: Fn(&Profile) -> Result<AltSet>,
{
    if n > 16 {
        return Err(Error::Budget(
            "coalition analysis enumerates 2^n subsets".into(),
        ));
    }
    let d = Domain::new(n, m)?;
    let values: Vec<AltSet> = d.profiles.iter().map(scf).collect::<Result<_>>()?;
    if values.iter().any(|v| v.len() != 1) {
        return Err(Error::Irresolute);
    }
    let masks = d.supporter_masks();
    let mut per_pair = Vec::new();
    for x in (0..m as u32).map(Alt) {
        for y in (0..m as u32).map(Alt) {
            if x == y {
                continue;
            }
            let mut members = Vec::new();
            for coalition in 0..(1u64 << n) {
                let blocking = (0..d.len()).all(|i| {
                    let supporters = masks[i][x.idx() * m + y.idx()];
                    coalition & !supporters != 0 || !values[i].contains(y)
                });
                if blocking {
                    members.push(coalition);
                }
            }
            per_pair.push(((x, y), CoalitionFamily::new(n, members)?));
        }
    }
    let overall = intersect_families(n, &per_pair)?;
    Ok(PairFamilies {
        n,
        per_pair,
        overall,
    })
}

/// Evaluation of the ultrafilter properties on a coalition family, plus
/// superset closure and the principal element when the properties hold.
#[derive(Clone, Debug)]
pub struct UltrafilterReport {
    /// i) the grand coalition belongs to the family.
    pub grand_set: bool,
    /// ii) exactly one of each complementary pair belongs.
    pub complement_dichotomy: bool,
    pub dichotomy_witness: Option<u64>,
    /// iii) closed under pairwise intersection.
    pub intersection_closed: bool,
    pub intersection_witness: Option<(u64, u64)>,
    /// Closure under supersets (a consequence of i-iii).
    pub superset_closed: bool,
    pub superset_witness: Option<(u64, u64)>,
    /// The singleton member when the family is a principal ultrafilter.
    pub principal_element: Option<usize>,
}

impl UltrafilterReport {
    pub fn is_ultrafilter(&self) -> bool {
        self.grand_set && self.complement_dichotomy && self.intersection_closed
    }
}

/// Check the three ultrafilter properties plus superset closure, and report
/// the principal singleton if the family is an ultrafilter.
pub fn ultrafilter_check(fam: &CoalitionFamily) -> UltrafilterReport {
    let grand = fam.grand();
    let grand_set = fam.contains(grand);

    let mut complement_dichotomy = true;
    let mut dichotomy_witness = None;
    for c in 0..=grand {
        if fam.contains(c) == fam.contains(grand & !c) {
            complement_dichotomy = false;
            dichotomy_witness = Some(c);
            break;
        }
    }

    let mut intersection_closed = true;
    let mut intersection_witness = None;
    'outer: for &c in fam.members() {
        for &e in fam.members() {
            if !fam.contains(c & e) {
                intersection_closed = false;
                intersection_witness = Some((c, e));
                break 'outer;
            }
        }
    }

    let mut superset_closed = true;
    let mut superset_witness = None;
    'sup: for &c in fam.members() {
        for s in 0..=grand {
            if c & !s == 0 && !fam.contains(s) {
                superset_closed = false;
                superset_witness = Some((c, s));
                break 'sup;
            }
        }
    }

    let principal_element = if grand_set && complement_dichotomy && intersection_closed {
        (0..fam.n).find(|&i| fam.contains(1 << i))
    } else {
        None
    };

    UltrafilterReport {
        grand_set,
        complement_dichotomy,
        dichotomy_witness,
        intersection_closed,
        intersection_witness,
        superset_closed,
        superset_witness,
        principal_element,
    }
}

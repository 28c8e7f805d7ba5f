//! Single-winner voting rules as named, parameterized handles.
//!
//! Every rule maps a profile to a nonempty set of tied winners, optionally
//! with exact rational scores and a round-by-round trace. No floating point
//! is used anywhere in rule evaluation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alts::{Alt, AltSet, TieBreak};
use crate::ballot::{all_ballots, Ballot};
use crate::consensus::{condorcet_deepening_search, kemeny_distance, DEFAULT_SWAP_BUDGET};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::strategy::profile_single_peaked;
use crate::tournaments::{condorcet_winner, majority_graph, net};

/// Exact rational score.
pub type Score = num_rational::BigRational;

pub fn score_int(i: i64) -> Score {
    Score::from_integer(BigInt::from(i))
}

/// Maximum number of alternatives for which Kemeny enumerates all `m!` orders.
pub const KEMENY_MAX_M: usize = 8;

/// A score vector for positional scoring rules. The presets adapt to the
/// profile's current number of alternatives; a custom vector must match it
/// exactly. Weights are not required to be non-increasing; axiom checks can
/// legitimately fail for pathological vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScoreVector {
    /// `<1, 0, ..., 0>`
    Plurality,
    /// `<m-1, m-2, ..., 0>`
    Borda,
    /// `<1, ..., 1, 0>`
    Veto,
    /// `k` ones then zeros.
    KApproval(usize),
    Custom(Vec<Score>),
}

impl ScoreVector {
    /// Materialize the weights for `m` alternatives.
    pub fn weights(&self, m: usize) -> Result<Vec<Score>> {
        match self {
            ScoreVector::Plurality => Ok((0..m).map(|i| score_int((i == 0) as i64)).collect()),
            ScoreVector::Borda => Ok((0..m).map(|i| score_int((m - 1 - i) as i64)).collect()),
            ScoreVector::Veto => Ok((0..m).map(|i| score_int((i + 1 != m) as i64)).collect()),
            ScoreVector::KApproval(k) => {
                if *k < 1 || *k > m {
                    return Err(Error::invalid(format!(
                        "k-approval needs 1 <= k <= m, got k={k}, m={m}"
                    )));
                }
                Ok((0..m).map(|i| score_int((i < *k) as i64)).collect())
            }
            ScoreVector::Custom(w) => {
                if w.len() != m {
                    return Err(Error::invalid(format!(
                        "score vector has length {}, profile has {m} alternatives",
                        w.len()
                    )));
                }
                Ok(w.clone())
            }
        }
    }
}

/// One entry of a rule's round-by-round trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceEvent {
    /// Runoff ended in round one with an absolute majority.
    MajorityShortcut { winner: Alt },
    /// Runoff restricted the profile to the finalists.
    RunoffPair {
        finalists: AltSet,
        eliminated: AltSet,
    },
    /// One multiround elimination step.
    EliminationRound {
        eliminated: AltSet,
        remaining: AltSet,
    },
    /// Total adjacent-swap budget at which a search succeeded.
    SwapBudget { budget: u64 },
}

/// The outcome of a rule: a nonempty winner set, optional exact scores, and
/// an optional trace.
#[derive(Clone, Debug)]
pub struct ChoiceResult {
    pub winners: AltSet,
    pub scores: Option<Vec<(Alt, Score)>>,
    pub trace: Option<Vec<TraceEvent>>,
}

impl ChoiceResult {
    fn plain(winners: AltSet) -> Self {
        ChoiceResult {
            winners,
            scores: None,
            trace: None,
        }
    }

    fn scored(winners: AltSet, scores: Vec<(Alt, Score)>) -> Self {
        ChoiceResult {
            winners,
            scores: Some(scores),
            trace: None,
        }
    }
}

/// Apply a tie-break policy to a result's winner set.
pub fn resolve(r: &ChoiceResult, t: TieBreak) -> AltSet {
    t.resolve(r.winners)
}

fn argmax(scores: &[(Alt, Score)]) -> AltSet {
    let best = scores
        .iter()
        .map(|(_, s)| s)
        .max()
        .expect("nonempty domain");
    scores
        .iter()
        .filter(|(_, s)| s == best)
        .map(|(a, _)| *a)
        .collect()
}

/// First-place counts per alternative, in index order over the domain.
pub fn plurality_counts(p: &Profile) -> Vec<(Alt, u64)> {
    let mut counts: Vec<(Alt, u64)> = p.domain().iter().map(|a| (a, 0)).collect();
    for b in p.ballots() {
        let top = b.top();
        let slot = counts
            .iter_mut()
            .find(|(a, _)| *a == top)
            .expect("top is in the domain");
        slot.1 += 1;
    }
    counts
}

fn counts_to_scores(counts: &[(Alt, u64)]) -> Vec<(Alt, Score)> {
    counts
        .iter()
        .map(|&(a, c)| (a, score_int(c as i64)))
        .collect()
}

/// Alternatives with maximal first-place count.
pub fn plurality(p: &Profile) -> ChoiceResult {
    let scores = counts_to_scores(&plurality_counts(p));
    ChoiceResult::scored(argmax(&scores), scores)
}

/// Quota rule for two alternatives: everything reaching first-place count
/// `q`, or the whole domain when nothing does.
pub fn quota_rule(p: &Profile, q: usize) -> Result<ChoiceResult> {
    if p.m() != 2 {
        return Err(Error::invalid("the quota rule is defined for m = 2"));
    }
    if q < 1 || q > p.n() + 1 {
        return Err(Error::invalid(format!(
            "quota must satisfy 1 <= q <= n+1, got q={q}, n={}",
            p.n()
        )));
    }
    let counts = plurality_counts(p);
    let reaching: AltSet = counts
        .iter()
        .filter(|&&(_, c)| c as usize >= q)
        .map(|&(a, _)| a)
        .collect();
    let winners = if reaching.is_empty() {
        p.domain()
    } else {
        reaching
    };
    Ok(ChoiceResult::scored(winners, counts_to_scores(&counts)))
}

/// The top alternative of voter `i`'s ballot.
pub fn dictatorship(p: &Profile, i: usize) -> Result<ChoiceResult> {
    let ballot = p.ballot(i)?;
    Ok(ChoiceResult::plain(AltSet::singleton(ballot.top())))
}

/// The Condorcet winner when one exists, otherwise the whole domain.
pub fn condorcet_rule(p: &Profile) -> ChoiceResult {
    let cw = condorcet_winner(p, false);
    ChoiceResult::plain(if cw.is_empty() { p.domain() } else { cw })
}

/// Maximizes wins minus losses in the strict majority graph.
pub fn copeland(p: &Profile) -> ChoiceResult {
    let t = majority_graph(p, false);
    let scores: Vec<(Alt, Score)> = p
        .domain()
        .iter()
        .map(|x| {
            let wins = p
                .domain()
                .iter()
                .filter(|&y| y != x && t.beats(x, y))
                .count() as i64;
            let losses = p
                .domain()
                .iter()
                .filter(|&y| y != x && t.beats(y, x))
                .count() as i64;
            (x, score_int(wins - losses))
        })
        .collect();
    ChoiceResult::scored(argmax(&scores), scores)
}

/// Positional scoring: maximize the total weight collected at each rank.
pub fn positional(p: &Profile, w: &ScoreVector) -> Result<ChoiceResult> {
    let weights = w.weights(p.m())?;
    let scores: Vec<(Alt, Score)> = p
        .domain()
        .iter()
        .map(|x| {
            let total = p
                .ballots()
                .iter()
                .map(|b| weights[b.position(x).expect("domain member")].clone())
                .fold(Score::zero(), |acc, s| acc + s);
            (x, total)
        })
        .collect();
    Ok(ChoiceResult::scored(argmax(&scores), scores))
}

/// Maximizes the total net preference against all other alternatives; the
/// winner set coincides with Borda's.
pub fn symmetric_borda(p: &Profile) -> ChoiceResult {
    let scores: Vec<(Alt, Score)> = p
        .domain()
        .iter()
        .map(|x| {
            let total: i64 = p
                .domain()
                .iter()
                .filter(|&y| y != x)
                .map(|y| net(p, x, y).expect("distinct domain members"))
                .sum();
            (x, score_int(total))
        })
        .collect();
    ChoiceResult::scored(argmax(&scores), scores)
}

/// Plurality with run-off. An absolute-majority top wins outright;
/// otherwise plurality is applied to the restriction to the two highest
/// plurality scorers. Ties in selecting the finalists expand the runoff set
/// to whole score levels until it has at least two members.
pub fn plurality_runoff(p: &Profile) -> Result<ChoiceResult> {
    if p.m() < 2 {
        return Err(Error::invalid("runoff needs at least 2 alternatives"));
    }
    let counts = plurality_counts(p);
    let mut trace = Vec::new();

    if let Some(&(winner, _)) = counts.iter().find(|&&(_, c)| 2 * c >= (p.n() + 1) as u64) {
        trace.push(TraceEvent::MajorityShortcut { winner });
        return Ok(ChoiceResult {
            winners: AltSet::singleton(winner),
            scores: Some(counts_to_scores(&counts)),
            trace: Some(trace),
        });
    }

    let mut levels: Vec<u64> = counts.iter().map(|&(_, c)| c).collect();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    let mut finalists = AltSet::EMPTY;
    for level in levels {
        for &(a, c) in &counts {
            if c == level {
                finalists.insert(a);
            }
        }
        if finalists.len() >= 2 {
            break;
        }
    }
    trace.push(TraceEvent::RunoffPair {
        finalists,
        eliminated: p.domain().difference(finalists),
    });
    let restricted = p.restrict(finalists)?;
    let final_round = plurality(&restricted);
    Ok(ChoiceResult {
        winners: final_round.winners,
        scores: final_round.scores,
        trace: Some(trace),
    })
}

/// Single transferable vote: repeatedly delete every alternative with
/// lowest plurality score from the restriction; the winners are the last
/// nonempty set before the elimination step would empty it.
pub fn stv(p: &Profile) -> ChoiceResult {
    let mut current = p.domain();
    let mut trace = Vec::new();
    loop {
        let restricted = p.restrict(current).expect("current stays nonempty");
        let counts = plurality_counts(&restricted);
        let min = counts.iter().map(|&(_, c)| c).min().expect("nonempty");
        let lowest: AltSet = counts
            .iter()
            .filter(|&&(_, c)| c == min)
            .map(|&(a, _)| a)
            .collect();
        trace.push(TraceEvent::EliminationRound {
            eliminated: lowest,
            remaining: current.difference(lowest),
        });
        if lowest == current {
            return ChoiceResult {
                winners: current,
                scores: None,
                trace: Some(trace),
            };
        }
        current = current.difference(lowest);
    }
}

/// Kemeny outcome: the winners, every distance-minimizing order, and the
/// minimum summed swap distance.
#[derive(Clone, Debug)]
pub struct KemenyOutcome {
    pub choice: ChoiceResult,
    pub optimal_orders: Vec<Ballot>,
    pub min_distance: u64,
}

/// Exhaustively score all `m!` orders by summed swap distance to the
/// profile; winners are the tops of all minimizers.
pub fn kemeny(p: &Profile) -> Result<KemenyOutcome> {
    if p.m() > KEMENY_MAX_M {
        return Err(Error::Budget(format!(
            "kemeny enumerates m! orders; m={} exceeds the limit {KEMENY_MAX_M}",
            p.m()
        )));
    }
    let mut best: Option<(u64, Vec<Ballot>)> = None;
    for order in all_ballots(p.domain()) {
        let d = kemeny_distance(&order, p)?;
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
    let (min_distance, optimal_orders) = best.expect("m >= 1");
    let winners: AltSet = optimal_orders.iter().map(|o| o.top()).collect();
    Ok(KemenyOutcome {
        choice: ChoiceResult::plain(winners),
        optimal_orders,
        min_distance,
    })
}

/// Dodgson rule via iterative deepening over the total adjacent-swap budget,
/// with the default budget cap.
pub fn dodgson(p: &Profile) -> Result<ChoiceResult> {
    dodgson_with_budget(p, DEFAULT_SWAP_BUDGET)
}

/// Dodgson rule with an explicit cap on the swap budget.
pub fn dodgson_with_budget(p: &Profile, max_budget: u64) -> Result<ChoiceResult> {
    let out = condorcet_deepening_search(p, max_budget)?;
    Ok(ChoiceResult {
        winners: out.winners,
        scores: None,
        trace: Some(vec![TraceEvent::SwapBudget { budget: out.budget }]),
    })
}

/// Exercise rule on two alternatives: the canonically first alternative wins
/// exactly when its support is odd.
pub fn odd_rule(p: &Profile) -> Result<ChoiceResult> {
    if p.m() != 2 {
        return Err(Error::invalid("the odd rule is defined for m = 2"));
    }
    let mut members = p.domain().iter();
    let a = members.next().expect("m = 2");
    let b = members.next().expect("m = 2");
    let winner = if p.support(a, b)? % 2 == 1 { a } else { b };
    Ok(ChoiceResult::plain(AltSet::singleton(winner)))
}

/// Median rule on a single-peaked profile: sort the peaks along the axis and
/// take the middle one (`n` odd) or the middle one or two (`n` even).
pub fn median_rule(p: &Profile, axis: &Ballot) -> Result<ChoiceResult> {
    if axis.alts() != p.domain() {
        return Err(Error::invalid(
            "axis must order exactly the profile's domain",
        ));
    }
    if !profile_single_peaked(p, axis) {
        return Err(Error::NotSinglePeaked);
    }
    let mut peak_positions: Vec<usize> = p
        .ballots()
        .iter()
        .map(|b| axis.position(b.top()).expect("domain member"))
        .collect();
    peak_positions.sort_unstable();
    let n = peak_positions.len();
    let winners: AltSet = if n % 2 == 1 {
        AltSet::singleton(axis.as_slice()[peak_positions[n / 2]])
    } else {
        [
            axis.as_slice()[peak_positions[n / 2 - 1]],
            axis.as_slice()[peak_positions[n / 2]],
        ]
        .into_iter()
        .collect()
    };
    Ok(ChoiceResult::plain(winners))
}

/// How a median handle names its axis: by labels (resolved against the
/// profile at evaluation time) or directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxisSpec {
    Labels(Vec<String>),
    Order(Ballot),
}

impl AxisSpec {
    fn resolve(&self, p: &Profile) -> Result<Ballot> {
        match self {
            AxisSpec::Order(b) => Ok(b.clone()),
            AxisSpec::Labels(labels) => {
                let alts = p.alternatives();
                let order = labels
                    .iter()
                    .map(|l| {
                        alts.by_label(l)
                            .ok_or_else(|| Error::invalid(format!("unknown label `{l}` in axis")))
                    })
                    .collect::<Result<Vec<Alt>>>()?;
                Ballot::new(order)
            }
        }
    }
}

/// The rule identifier and its parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RuleKind {
    Plurality,
    Quota(usize),
    Dictatorship(usize),
    Condorcet,
    Copeland,
    Positional(ScoreVector),
    SymmetricBorda,
    PluralityRunoff,
    Stv,
    Kemeny,
    Dodgson(u64),
    Odd,
    Median(AxisSpec),
}

/// A named, parameterized rule usable as a black box, together with a
/// tie-break policy applied by [`RuleHandle::winners`].
#[derive(Clone, PartialEq, Debug)]
pub struct RuleHandle {
    pub kind: RuleKind,
    pub tiebreak: TieBreak,
}

impl RuleHandle {
    pub fn new(kind: RuleKind) -> Self {
        RuleHandle {
            kind,
            tiebreak: TieBreak::None,
        }
    }

    pub fn with_tiebreak(mut self, t: TieBreak) -> Self {
        self.tiebreak = t;
        self
    }

    /// The positional score vector, when this is a positional handle
    /// (plurality included).
    pub fn score_vector(&self) -> Option<ScoreVector> {
        match &self.kind {
            RuleKind::Plurality => Some(ScoreVector::Plurality),
            RuleKind::Positional(w) => Some(w.clone()),
            _ => None,
        }
    }

    /// Evaluate the rule without tie-breaking.
    pub fn evaluate(&self, p: &Profile) -> Result<ChoiceResult> {
        match &self.kind {
            RuleKind::Plurality => Ok(plurality(p)),
            RuleKind::Quota(q) => quota_rule(p, *q),
            RuleKind::Dictatorship(i) => dictatorship(p, *i),
            RuleKind::Condorcet => Ok(condorcet_rule(p)),
            RuleKind::Copeland => Ok(copeland(p)),
            RuleKind::Positional(w) => positional(p, w),
            RuleKind::SymmetricBorda => Ok(symmetric_borda(p)),
            RuleKind::PluralityRunoff => plurality_runoff(p),
            RuleKind::Stv => Ok(stv(p)),
            RuleKind::Kemeny => kemeny(p).map(|k| k.choice),
            RuleKind::Dodgson(budget) => dodgson_with_budget(p, *budget),
            RuleKind::Odd => odd_rule(p),
            RuleKind::Median(axis) => median_rule(p, &axis.resolve(p)?),
        }
    }

    /// Winner set after the handle's tie-break.
    pub fn winners(&self, p: &Profile) -> Result<AltSet> {
        Ok(self.tiebreak.resolve(self.evaluate(p)?.winners))
    }

    /// The unique winner; errors when the tie-broken set is not a singleton.
    pub fn resolved(&self, p: &Profile) -> Result<Alt> {
        let winners = self.winners(p)?;
        if winners.len() == 1 {
            Ok(winners.first().expect("singleton"))
        } else {
            Err(Error::Irresolute)
        }
    }

    /// Parse a CLI rule spec such as `borda`, `quota:2`, `dictator:0`,
    /// `approval:2`, `positional:3,1,0`, `dodgson:8`, or `median:l>m>s`.
    pub fn parse(spec: &str) -> Result<RuleHandle> {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let need = |what: &str| Error::invalid(format!("rule `{name}` needs {what}"));
        let no_params = |kind: RuleKind| {
            if params.is_some() {
                Err(Error::invalid(format!("rule `{name}` takes no parameters")))
            } else {
                Ok(kind)
            }
        };
        let kind = match name {
            "plurality" => no_params(RuleKind::Plurality)?,
            "borda" => no_params(RuleKind::Positional(ScoreVector::Borda))?,
            "veto" => no_params(RuleKind::Positional(ScoreVector::Veto))?,
            "condorcet" => no_params(RuleKind::Condorcet)?,
            "copeland" => no_params(RuleKind::Copeland)?,
            "symborda" | "symmetric-borda" => no_params(RuleKind::SymmetricBorda)?,
            "runoff" | "plurality-runoff" => no_params(RuleKind::PluralityRunoff)?,
            "stv" => no_params(RuleKind::Stv)?,
            "kemeny" => no_params(RuleKind::Kemeny)?,
            "odd" => no_params(RuleKind::Odd)?,
            "dodgson" => match params {
                None => RuleKind::Dodgson(DEFAULT_SWAP_BUDGET),
                Some(b) => {
                    RuleKind::Dodgson(b.parse().map_err(|_| need("an integer swap budget"))?)
                }
            },
            "quota" => RuleKind::Quota(
                params
                    .ok_or_else(|| need("a quota, e.g. quota:2"))?
                    .parse()
                    .map_err(|_| need("an integer quota"))?,
            ),
            "dictator" | "dictatorship" => RuleKind::Dictatorship(
                params
                    .ok_or_else(|| need("a voter index, e.g. dictator:0"))?
                    .parse()
                    .map_err(|_| need("an integer voter index"))?,
            ),
            "approval" => RuleKind::Positional(ScoreVector::KApproval(
                params
                    .ok_or_else(|| need("a k, e.g. approval:2"))?
                    .parse()
                    .map_err(|_| need("an integer k"))?,
            )),
            "positional" => {
                let raw = params.ok_or_else(|| need("a weight list, e.g. positional:3,1,0"))?;
                let weights = raw
                    .split(',')
                    .map(|w| {
                        parse_rational(w.trim())
                            .ok_or_else(|| Error::invalid(format!("bad weight `{w}`")))
                    })
                    .collect::<Result<Vec<Score>>>()?;
                RuleKind::Positional(ScoreVector::Custom(weights))
            }
            "median" => {
                let raw = params.ok_or_else(|| need("an axis, e.g. median:l>m>s"))?;
                RuleKind::Median(AxisSpec::Labels(
                    raw.split('>').map(|l| l.trim().to_string()).collect(),
                ))
            }
            other => return Err(Error::invalid(format!("unknown rule `{other}`"))),
        };
        Ok(RuleHandle::new(kind))
    }
}

/// Parse `p/q` or an integer into an exact rational.
pub fn parse_rational(s: &str) -> Option<Score> {
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Score::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.trim().parse().ok()?;
            Some(Score::from_integer(num))
        }
    }
}

/// The catalog of rule handles evaluable on any `(n, m)` domain, used by the
/// axiom suites. Domain-restricted rules (quota, odd) appear only at m = 2.
pub fn rule_catalog(n: usize, m: usize) -> Vec<(String, RuleHandle)> {
    let mut out: Vec<(String, RuleHandle)> = vec![
        ("plurality".into(), RuleHandle::new(RuleKind::Plurality)),
        (
            "borda".into(),
            RuleHandle::new(RuleKind::Positional(ScoreVector::Borda)),
        ),
        (
            "veto".into(),
            RuleHandle::new(RuleKind::Positional(ScoreVector::Veto)),
        ),
        ("condorcet".into(), RuleHandle::new(RuleKind::Condorcet)),
        ("copeland".into(), RuleHandle::new(RuleKind::Copeland)),
        ("symborda".into(), RuleHandle::new(RuleKind::SymmetricBorda)),
        ("runoff".into(), RuleHandle::new(RuleKind::PluralityRunoff)),
        ("stv".into(), RuleHandle::new(RuleKind::Stv)),
        ("kemeny".into(), RuleHandle::new(RuleKind::Kemeny)),
        (
            "dodgson".into(),
            RuleHandle::new(RuleKind::Dodgson(DEFAULT_SWAP_BUDGET)),
        ),
    ];
    if m == 2 {
        out.push((
            format!("quota:{}", (n + 2) / 2),
            RuleHandle::new(RuleKind::Quota((n + 2) / 2)),
        ));
        out.push(("odd".into(), RuleHandle::new(RuleKind::Odd)));
    }
    for i in 0..n {
        out.push((
            format!("dictator:{i}"),
            RuleHandle::new(RuleKind::Dictatorship(i)),
        ));
    }
    out
}

impl fmt::Display for RuleHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RuleKind::Plurality => write!(f, "plurality"),
            RuleKind::Quota(q) => write!(f, "quota:{q}"),
            RuleKind::Dictatorship(i) => write!(f, "dictator:{i}"),
            RuleKind::Condorcet => write!(f, "condorcet"),
            RuleKind::Copeland => write!(f, "copeland"),
            RuleKind::Positional(ScoreVector::Borda) => write!(f, "borda"),
            RuleKind::Positional(ScoreVector::Plurality) => write!(f, "plurality"),
            RuleKind::Positional(ScoreVector::Veto) => write!(f, "veto"),
            RuleKind::Positional(ScoreVector::KApproval(k)) => write!(f, "approval:{k}"),
            RuleKind::Positional(ScoreVector::Custom(w)) => {
                write!(f, "positional:")?;
                for (i, s) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            RuleKind::SymmetricBorda => write!(f, "symborda"),
            RuleKind::PluralityRunoff => write!(f, "runoff"),
            RuleKind::Stv => write!(f, "stv"),
            RuleKind::Kemeny => write!(f, "kemeny"),
            RuleKind::Dodgson(b) => write!(f, "dodgson:{b}"),
            RuleKind::Odd => write!(f, "odd"),
            RuleKind::Median(_) => write!(f, "median"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::profile::enumerate_profiles;

    fn b(order: &[u32]) -> Ballot {
        Ballot::from_indices(order.iter().copied())
    }

    fn set(alts: &[u32]) -> AltSet {
        alts.iter().map(|&a| Alt(a)).collect()
    }

    fn int_score(r: &ChoiceResult, a: Alt) -> i64 {
        use num_traits::ToPrimitive;
        let scores = r.scores.as_ref().expect("scored rule");
        let s = &scores
            .iter()
            .find(|(x, _)| *x == a)
            .expect("domain member")
            .1;
        assert!(s.is_integer());
        s.to_integer().to_i64().unwrap()
    }

    #[test]
    fn plurality_examples() {
        let pliny = fixture("PLINY").unwrap();
        let r = plurality(&pliny);
        assert_eq!(r.winners, set(&[0]));
        assert_eq!(int_score(&r, Alt(0)), 102);
        assert_eq!(int_score(&r, Alt(1)), 101);
        assert_eq!(int_score(&r, Alt(2)), 100);

        let tiny = Profile::from_indices(2, &[&[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(plurality(&tiny).winners, set(&[0]));

        let spread = Profile::from_indices(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        assert_eq!(plurality(&spread).winners, set(&[0, 1, 2]));
    }

    #[test]
    fn quota_examples() {
        let p = Profile::from_indices(2, &[&[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(quota_rule(&p, 2).unwrap().winners, set(&[0]));
        assert_eq!(quota_rule(&p, 4).unwrap().winners, set(&[0, 1]));
        assert!(quota_rule(&p, 0).is_err());
        assert!(quota_rule(&p, 5).is_err());
        let wide = Profile::from_indices(3, &[&[0, 1, 2]]);
        assert!(quota_rule(&wide, 1).is_err());
    }

    #[test]
    fn simple_majority_quota_is_plurality() {
        // q = ceil((n+1)/2) over all 8 profiles at (3, 2)
        for p in enumerate_profiles(3, 2).unwrap() {
            let q = (p.n() + 2) / 2;
            assert_eq!(quota_rule(&p, q).unwrap().winners, plurality(&p).winners);
        }
    }

    #[test]
    fn dictatorship_examples() {
        let p = Profile::from_indices(2, &[&[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(dictatorship(&p, 2).unwrap().winners, set(&[1]));
        assert!(dictatorship(&p, 3).is_err());
        let pliny = fixture("PLINY").unwrap();
        assert_eq!(dictatorship(&pliny, 0).unwrap().winners, set(&[0]));
        let unanimous = Profile::from_indices(3, &[&[1, 0, 2], &[1, 0, 2]]);
        assert_eq!(
            dictatorship(&unanimous, 0).unwrap().winners,
            plurality(&unanimous).winners
        );
    }

    #[test]
    fn condorcet_rule_examples() {
        assert_eq!(
            condorcet_rule(&fixture("CONDORCET3").unwrap()).winners,
            set(&[0, 1, 2, 3])
        );
        assert_eq!(
            condorcet_rule(&fixture("PLINY").unwrap()).winners,
            set(&[1])
        );
        let single = Profile::from_indices(1, &[&[0]]);
        assert_eq!(condorcet_rule(&single).winners, set(&[0]));
    }

    #[test]
    fn copeland_examples() {
        assert_eq!(
            copeland(&fixture("CONDORCET3").unwrap()).winners,
            set(&[0, 1, 2])
        );
        let gore = fixture("GORE").unwrap();
        let r = copeland(&gore);
        let alts = gore.alternatives();
        let gore_alt = alts.by_label("Gore").unwrap();
        assert_eq!(r.winners, AltSet::singleton(gore_alt));
        assert_eq!(int_score(&r, gore_alt), 3);
        assert_eq!(
            copeland(&fixture("CONDORCET1").unwrap()).winners,
            set(&[0, 1, 2])
        );
    }

    #[test]
    fn gore_borda_scores() {
        // the table's expressions give Bush 3*48 + 2*50 + 1*2 = 246,
        // Gore 200, Nader 55; Buchanan's printed 2*48 misses the top-rank
        // term of the single Buchanan ballot, so the true score is 99
        let gore = fixture("GORE").unwrap();
        let r = positional(&gore, &ScoreVector::Borda).unwrap();
        let alts = gore.alternatives();
        let by = |l: &str| alts.by_label(l).unwrap();
        assert_eq!(r.winners, AltSet::singleton(by("Bush")));
        assert_eq!(int_score(&r, by("Bush")), 3 * 48 + 2 * 50 + 2);
        assert_eq!(int_score(&r, by("Gore")), 3 * 49 + 2 * 2 + 49);
        assert_eq!(int_score(&r, by("Nader")), 3 * 2 + 49);
        assert_eq!(int_score(&r, by("Buchanan")), 99);
    }

    #[test]
    fn plurality_preset_matches_plurality() {
        for p in enumerate_profiles(3, 2).unwrap() {
            assert_eq!(
                positional(&p, &ScoreVector::Plurality).unwrap().winners,
                plurality(&p).winners
            );
        }
    }

    #[test]
    fn unanimous_profile_decreasing_vector() {
        let p = Profile::from_indices(3, &[&[2, 0, 1], &[2, 0, 1]]);
        for w in [ScoreVector::Borda, ScoreVector::Plurality] {
            assert_eq!(positional(&p, &w).unwrap().winners, set(&[2]));
        }
    }

    #[test]
    fn custom_vector_arity_checked() {
        let p = Profile::from_indices(3, &[&[0, 1, 2]]);
        let short = ScoreVector::Custom(vec![score_int(1), score_int(0)]);
        assert!(positional(&p, &short).is_err());
    }

    #[test]
    fn symmetric_borda_examples() {
        let gore = fixture("GORE").unwrap();
        let bush = gore.alternatives().by_label("Bush").unwrap();
        assert_eq!(symmetric_borda(&gore).winners, AltSet::singleton(bush));
        // cycle symmetry: every net sums to zero
        let r = symmetric_borda(&fixture("CONDORCET1").unwrap());
        assert_eq!(r.winners, set(&[0, 1, 2]));
        for (_, s) in r.scores.unwrap() {
            assert_eq!(s, score_int(0));
        }
        for p in enumerate_profiles(3, 2).unwrap() {
            assert_eq!(symmetric_borda(&p).winners, plurality(&p).winners);
        }
    }

    #[test]
    fn symmetric_borda_equals_borda_exhaustively() {
        for (n, m) in [(3usize, 3usize), (2, 4)] {
            for p in enumerate_profiles(n, m).unwrap() {
                assert_eq!(
                    symmetric_borda(&p).winners,
                    positional(&p, &ScoreVector::Borda).unwrap().winners
                );
            }
        }
    }

    #[test]
    fn runoff_textbook_pair() {
        let a = plurality_runoff(&fixture("RUNOFF_A").unwrap()).unwrap();
        assert_eq!(a.winners, set(&[2]));
        let trace = a.trace.unwrap();
        assert!(matches!(
            trace[0],
            TraceEvent::RunoffPair { eliminated, .. } if eliminated == set(&[1])
        ));
        let b = plurality_runoff(&fixture("RUNOFF_B").unwrap()).unwrap();
        assert_eq!(b.winners, set(&[1]));
        // the staged senate vote: b wins the runoff
        assert_eq!(
            plurality_runoff(&fixture("PLINY").unwrap())
                .unwrap()
                .winners,
            set(&[1])
        );
    }

    #[test]
    fn runoff_majority_shortcut() {
        let p = Profile::from_indices(3, &[&[1, 0, 2], &[1, 2, 0], &[0, 1, 2]]);
        let r = plurality_runoff(&p).unwrap();
        assert_eq!(r.winners, set(&[1]));
        assert!(matches!(
            r.trace.unwrap()[0],
            TraceEvent::MajorityShortcut { winner: Alt(1) }
        ));
    }

    #[test]
    fn runoff_tied_top2_expands() {
        // counts 2, 2, 2: the whole domain goes to the final round
        let p = fixture("CONDORCET1").unwrap();
        let r = plurality_runoff(&p).unwrap();
        assert_eq!(r.winners, set(&[0, 1, 2]));
    }

    #[test]
    fn stv_examples() {
        let r = stv(&fixture("PLINY").unwrap());
        assert_eq!(r.winners, set(&[1]));
        let trace = r.trace.unwrap();
        assert!(matches!(
            trace[0],
            TraceEvent::EliminationRound { eliminated, .. } if eliminated == set(&[2])
        ));
        assert_eq!(
            stv(&fixture("CONDORCET1").unwrap()).winners,
            set(&[0, 1, 2])
        );
        let majority = Profile::from_indices(3, &[&[1, 0, 2], &[1, 2, 0], &[0, 1, 2]]);
        assert_eq!(stv(&majority).winners, set(&[1]));
    }

    #[test]
    fn stv_coincides_with_runoff_without_top2_ties() {
        for p in enumerate_profiles(3, 3).unwrap() {
            let runoff = plurality_runoff(&p).unwrap();
            let clean = match &runoff.trace.as_ref().unwrap()[0] {
                TraceEvent::MajorityShortcut { .. } => true,
                TraceEvent::RunoffPair { finalists, .. } => finalists.len() == 2,
                _ => unreachable!(),
            };
            if clean {
                assert_eq!(stv(&p).winners, runoff.winners);
            }
        }
    }

    #[test]
    fn kemeny_young_example() {
        let out = kemeny(&fixture("YOUNG").unwrap()).unwrap();
        assert_eq!(out.choice.winners, set(&[1]));
        assert_eq!(out.min_distance, 76);
        assert_eq!(out.optimal_orders, vec![b(&[1, 2, 0])]);
    }

    #[test]
    fn kemeny_unanimous_and_m2() {
        let p = Profile::from_indices(3, &[&[1, 2, 0], &[1, 2, 0]]);
        let out = kemeny(&p).unwrap();
        assert_eq!(out.choice.winners, set(&[1]));
        assert_eq!(out.min_distance, 0);
        for p in enumerate_profiles(3, 2).unwrap() {
            assert_eq!(kemeny(&p).unwrap().choice.winners, plurality(&p).winners);
        }
    }

    #[test]
    fn dodgson_examples() {
        let r = dodgson(&fixture("PLINY").unwrap()).unwrap();
        assert_eq!(r.winners, set(&[1]));
        assert_eq!(r.trace.unwrap()[0], TraceEvent::SwapBudget { budget: 0 });
        let cycle = dodgson(&fixture("CONDORCET1").unwrap()).unwrap();
        assert_eq!(cycle.winners, set(&[0, 1, 2]));
        assert_eq!(
            cycle.trace.unwrap()[0],
            TraceEvent::SwapBudget { budget: 1 }
        );
    }

    #[test]
    fn condorcet_consistent_rules_exhaustive() {
        use crate::tournaments::condorcet_winner;
        for p in enumerate_profiles(3, 3).unwrap() {
            let cw = condorcet_winner(&p, false);
            if cw.len() == 1 {
                assert_eq!(condorcet_rule(&p).winners, cw);
                assert_eq!(copeland(&p).winners, cw);
                assert_eq!(dodgson(&p).unwrap().winners, cw);
            }
        }
    }

    #[test]
    fn odd_rule_examples() {
        let p = Profile::from_indices(2, &[&[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(odd_rule(&p).unwrap().winners, set(&[1]));
        let q = Profile::from_indices(2, &[&[0, 1], &[1, 0], &[1, 0]]);
        assert_eq!(odd_rule(&q).unwrap().winners, set(&[0]));
        let single = Profile::from_indices(2, &[&[0, 1]]);
        assert_eq!(odd_rule(&single).unwrap().winners, set(&[0]));
        let wide = Profile::from_indices(3, &[&[0, 1, 2]]);
        assert!(odd_rule(&wide).is_err());
    }

    #[test]
    fn median_examples() {
        let hikers = fixture("HIKERS").unwrap();
        let axis = b(&[0, 1, 2]); // l > m > s
        assert_eq!(median_rule(&hikers, &axis).unwrap().winners, set(&[1]));
        let lone = Profile::from_indices(3, &[&[2, 1, 0]]);
        assert_eq!(median_rule(&lone, &axis).unwrap().winners, set(&[2]));
        assert!(matches!(
            median_rule(&fixture("CONDORCET1").unwrap(), &axis),
            Err(Error::NotSinglePeaked)
        ));
    }

    #[test]
    fn resolve_examples() {
        let tied = ChoiceResult::plain(set(&[0, 1, 2]));
        assert_eq!(resolve(&tied, TieBreak::Lexicographic), set(&[0]));
        assert_eq!(resolve(&tied, TieBreak::None), set(&[0, 1, 2]));
        let single = ChoiceResult::plain(set(&[1]));
        assert_eq!(resolve(&single, TieBreak::Lexicographic), set(&[1]));
        let sp = fixture("SP_RESOLUTE").unwrap();
        let handle = RuleHandle::new(RuleKind::Plurality).with_tiebreak(TieBreak::Lexicographic);
        assert_eq!(handle.winners(&sp).unwrap(), set(&[0]));
    }

    #[test]
    fn every_rule_nonempty_everywhere() {
        for p in enumerate_profiles(2, 3).unwrap() {
            for (name, rule) in rule_catalog(2, 3) {
                let winners = rule.evaluate(&p).unwrap().winners;
                assert!(!winners.is_empty(), "{name}");
                assert!(winners.is_subset(p.domain()), "{name}");
            }
        }
    }

    #[test]
    fn rule_spec_parsing() {
        for spec in [
            "plurality",
            "borda",
            "veto",
            "condorcet",
            "copeland",
            "symborda",
            "runoff",
            "stv",
            "kemeny",
            "dodgson",
            "dodgson:4",
            "odd",
            "quota:2",
            "dictator:0",
            "approval:2",
            "positional:3,1,0",
            "positional:1/2,0",
            "median:a>b>c",
        ] {
            assert!(RuleHandle::parse(spec).is_ok(), "{spec}");
        }
        for bad in ["", "nope", "quota", "quota:x", "plurality:1", "approval"] {
            assert!(RuleHandle::parse(bad).is_err(), "{bad}");
        }
        let parsed = RuleHandle::parse("positional:1/2,0").unwrap();
        match parsed.kind {
            RuleKind::Positional(ScoreVector::Custom(w)) => {
                assert_eq!(w[0], Score::new(1.into(), 2.into()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kemeny_budget_guard() {
        let p = Profile::from_indices(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]);
        assert!(matches!(kemeny(&p), Err(Error::Budget(_))));
    }
}

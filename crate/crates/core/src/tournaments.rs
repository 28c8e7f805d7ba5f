//! Net preferences, majority graphs, Condorcet winners, and the McGarvey
//! construction realizing an arbitrary tournament as a majority graph.

use crate::alts::{Alt, AltSet, Alternatives};
use crate::ballot::Ballot;
use crate::error::{Error, Result};
use crate::profile::Profile;

/// Net preference `support(x,y) - support(y,x)`.
pub fn net(p: &Profile, x: Alt, y: Alt) -> Result<i64> {
    let sxy = p.support(x, y)? as i64;
    Ok(2 * sxy - p.n() as i64)
}

/// The full matrix of net preferences over the profile's domain, indexed by
/// raw alternative index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityGraph {
    domain: AltSet,
    size: usize,
    net: Vec<i64>, // size x size, row-major by raw index
}

impl MajorityGraph {
    pub fn of(p: &Profile) -> MajorityGraph {
        let size = p.alternatives().len();
        let mut net = vec![0i64; size * size];
        let n = p.n() as i64;
        let members: Vec<Alt> = p.domain().iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let sxy = p.ballots().iter().filter(|b| b.prefers(x, y)).count() as i64;
                let value = 2 * sxy - n;
                net[x.idx() * size + y.idx()] = value;
                net[y.idx() * size + x.idx()] = -value;
            }
        }
        MajorityGraph {
            domain: p.domain(),
            size,
            net,
        }
    }

    pub fn domain(&self) -> AltSet {
        self.domain
    }

    pub fn net(&self, x: Alt, y: Alt) -> i64 {
        self.net[x.idx() * self.size + y.idx()]
    }

    /// The induced tournament: strict keeps edges with positive net, weak
    /// additionally keeps both directions of every tie.
    pub fn tournament(&self, weak: bool) -> Tournament {
        let mut t = Tournament::empty(self.domain);
        for x in self.domain.iter() {
            for y in self.domain.iter() {
                if x == y {
                    continue;
                }
                let n = self.net(x, y);
                if n > 0 || (weak && n == 0) {
                    t.add_edge(x, y);
                }
            }
        }
        t
    }
}

/// A directed graph over alternatives; the strict majority graph is
/// irreflexive with at most one direction per pair, the weak variant keeps
/// both directions on ties. The edge list is kept sorted and deduplicated,
/// so equality and hashing have set semantics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tournament {
    domain: AltSet,
    beats: Vec<(Alt, Alt)>,
}

impl Tournament {
    pub fn empty(domain: AltSet) -> Tournament {
        Tournament {
            domain,
            beats: Vec::new(),
        }
    }

    pub fn from_edges(domain: AltSet, edges: Vec<(Alt, Alt)>) -> Result<Tournament> {
        let mut t = Tournament::empty(domain);
        for (x, y) in edges {
            if x == y {
                return Err(Error::invalid("tournament edge may not be reflexive"));
            }
            if !domain.contains(x) || !domain.contains(y) {
                return Err(Error::invalid("tournament edge outside domain"));
            }
            t.add_edge(x, y);
        }
        Ok(t)
    }

    fn add_edge(&mut self, x: Alt, y: Alt) {
        if let Err(pos) = self.beats.binary_search(&(x, y)) {
            self.beats.insert(pos, (x, y));
        }
    }

    pub fn domain(&self) -> AltSet {
        self.domain
    }

    pub fn edges(&self) -> &[(Alt, Alt)] {
        &self.beats
    }

    pub fn beats(&self, x: Alt, y: Alt) -> bool {
        self.beats.binary_search(&(x, y)).is_ok()
    }

    /// Strict, complete and antisymmetric: exactly one direction per pair.
    pub fn is_strict_complete(&self) -> bool {
        let members: Vec<Alt> = self.domain.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if self.beats(x, y) == self.beats(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// No `x, y, z` with edges `x->y` and `y->z` but no `x->z`.
    pub fn is_transitive(&self) -> bool {
        for x in self.domain.iter() {
            for y in self.domain.iter() {
                if x == y || !self.beats(x, y) {
                    continue;
                }
                for z in self.domain.iter() {
                    if z == x || z == y {
                        continue;
                    }
                    if self.beats(y, z) && !self.beats(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Alternatives beating every other alternative (the sources).
    pub fn sources(&self) -> AltSet {
        self.domain
            .iter()
            .filter(|&x| self.domain.iter().all(|y| y == x || self.beats(x, y)))
            .collect()
    }
}

/// Build the majority graph and induced tournament of a profile.
pub fn majority_graph(p: &Profile, weak: bool) -> Tournament {
    MajorityGraph::of(p).tournament(weak)
}

/// Condorcet winners: with `weak = false` the (at most one) alternative with
/// positive net preference against every other; with `weak = true` the set
/// of weak Condorcet winners.
pub fn condorcet_winner(p: &Profile, weak: bool) -> AltSet {
    majority_graph(p, weak).sources()
}

/// Realize a strict complete tournament as the majority graph of a profile
/// with two voters per edge.
///
/// Per edge `(x, y)` the construction emits one ballot `x y r1 r2 ...` (the
/// remaining alternatives in canonical order) and one ballot
/// `... r2 r1 x y`; every pair other than `(x, y)` cancels between the two.
pub fn mcgarvey_realize(t: &Tournament, alts: &Alternatives) -> Result<Profile> {
    if !t.domain().is_subset(alts.full_set()) {
        return Err(Error::invalid("tournament domain exceeds label table"));
    }
    if t.domain().len() < 2 {
        return Err(Error::invalid("tournament needs at least 2 alternatives"));
    }
    if !t.is_strict_complete() {
        return Err(Error::invalid(
            "mcgarvey_realize needs a strict complete tournament",
        ));
    }
    let mut ballots = Vec::with_capacity(2 * t.edges().len());
    for &(x, y) in t.edges() {
        let rest: Vec<Alt> = t.domain().iter().filter(|&a| a != x && a != y).collect();
        let mut forward = vec![x, y];
        forward.extend(rest.iter().copied());
        let mut backward: Vec<Alt> = rest.iter().rev().copied().collect();
        backward.push(x);
        backward.push(y);
        ballots.push(Ballot::new(forward)?);
        ballots.push(Ballot::new(backward)?);
    }
    Profile::with_domain(alts.clone(), t.domain(), ballots)
}

/// Parse the tournament text format: a `tournament: m` header followed by
/// one `x>y` line per edge. Labels are assigned indices in order of first
/// appearance.
pub fn parse_tournament(text: &str) -> Result<(Tournament, Alternatives)> {
    let mut m: Option<usize> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match m {
            None => {
                let rest = line
                    .strip_prefix("tournament:")
                    .ok_or_else(|| Error::parse(lineno, "expected `tournament: m` header"))?;
                let count: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad alternative count"))?;
                if !(2..=32).contains(&count) {
                    return Err(Error::parse(lineno, "m must be between 2 and 32"));
                }
                m = Some(count);
            }
            Some(count) => {
                let (x, y) = line
                    .split_once('>')
                    .ok_or_else(|| Error::parse(lineno, "expected `x>y` edge"))?;
                let (x, y) = (x.trim().to_string(), y.trim().to_string());
                for label in [&x, &y] {
                    if !labels.contains(label) {
                        if labels.len() == count {
                            return Err(Error::parse(
                                lineno,
                                format!("more than {count} distinct labels"),
                            ));
                        }
                        labels.push(label.clone());
                    }
                }
                edges.push((x, y));
            }
        }
    }

    let m = m.ok_or_else(|| Error::parse(1, "empty document"))?;
    if labels.len() != m {
        return Err(Error::parse(
            1,
            format!("header promises {m} alternatives, found {}", labels.len()),
        ));
    }
    let alts = Alternatives::new(labels)?;
    let edges = edges
        .into_iter()
        .map(|(x, y)| {
            let x = alts.by_label(&x).expect("label collected above");
            let y = alts.by_label(&y).expect("label collected above");
            (x, y)
        })
        .collect();
    let t = Tournament::from_edges(alts.full_set(), edges)?;
    Ok((t, alts))
}

/// Render the tournament text format; edges sorted by index pair.
pub fn render_tournament(t: &Tournament, alts: &Alternatives) -> String {
    let mut out = format!("tournament: {}\n", t.domain().len());
    for &(x, y) in t.edges() {
        out.push_str(&format!("{}>{}\n", alts.label(x), alts.label(y)));
    }
    out
}

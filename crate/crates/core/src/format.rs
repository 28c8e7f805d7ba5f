//! The profile file format.
//!
//! ```text
//! # optional comments anywhere
//! alternatives: a,b,c
//! 102: a>b>c
//! 101: b>a>c
//! 100: c>b>a
//! ```
//!
//! The file is UTF-8. `#` starts a comment running to end of line. The first
//! non-comment line names the alternatives (labels match `[A-Za-z0-9_]+`);
//! their order is the canonical order used by lexicographic tie-breaks.
//! Each following non-comment line is `COUNT: l1>l2>...>lm` with COUNT a
//! positive decimal integer; ballots expand in reading order.

use crate::alts::{Alt, Alternatives};
use crate::ballot::Ballot;
use crate::error::{Error, Result};
use crate::profile::Profile;

/// Parse a profile document. Errors carry 1-based line numbers.
pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut alts: Option<Alternatives> = None;
    let mut ballots: Vec<Ballot> = Vec::new();

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

        match &alts {
            None => {
                let rest = line
                    .strip_prefix("alternatives:")
                    .ok_or_else(|| Error::parse(lineno, "expected `alternatives:` header"))?;
                let labels: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                let table =
                    Alternatives::new(labels).map_err(|e| Error::parse(lineno, e.to_string()))?;
                if table.len() < 2 {
                    return Err(Error::parse(lineno, "need at least 2 alternatives"));
                }
                alts = Some(table);
            }
            Some(table) => {
                let (count_str, order_str) = line
                    .split_once(':')
                    .ok_or_else(|| Error::parse(lineno, "expected `COUNT: ballot`"))?;
                let count: u64 = count_str.trim().parse().map_err(|_| {
                    Error::parse(lineno, format!("bad count `{}`", count_str.trim()))
                })?;
                if count == 0 {
                    return Err(Error::parse(lineno, "count must be positive"));
                }
                let mut order: Vec<Alt> = Vec::with_capacity(table.len());
                for label in order_str.split('>') {
                    let label = label.trim();
                    let alt = table
                        .by_label(label)
                        .ok_or_else(|| Error::parse(lineno, format!("unknown label `{label}`")))?;
                    if order.contains(&alt) {
                        return Err(Error::parse(
                            lineno,
                            format!("duplicate alternative `{label}` in ballot"),
                        ));
                    }
                    order.push(alt);
                }
                if order.len() != table.len() {
                    return Err(Error::parse(
                        lineno,
                        format!(
                            "ballot ranks {} of {} alternatives",
                            order.len(),
                            table.len()
                        ),
                    ));
                }
                let ballot = Ballot::new(order).map_err(|e| Error::parse(lineno, e.to_string()))?;
                for _ in 0..count {
                    ballots.push(ballot.clone());
                }
            }
        }
    }

    let alts = alts.ok_or_else(|| Error::parse(1, "empty document"))?;
    if ballots.is_empty() {
        return Err(Error::parse(1, "no ballots"));
    }
    Profile::new(alts, ballots)
}

/// Render in canonical grouped form: header, then distinct ballots with
/// counts in first-occurrence order. Restricted profiles render with their
/// restricted domain as the header.
pub fn render_profile(p: &Profile) -> String {
    let alts = p.alternatives();
    let header: Vec<&str> = p.domain().iter().map(|a| alts.label(a)).collect();
    let mut out = format!("alternatives: {}\n", header.join(","));
    for (count, ballot) in p.grouped() {
        let order: Vec<&str> = ballot.as_slice().iter().map(|&a| alts.label(a)).collect();
        out.push_str(&format!("{}: {}\n", count, order.join(">")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_counted_lines_in_order() {
        let p = parse_profile("alternatives: a,b\n2: a>b\n1: b>a\n").unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.ballots()[0].top(), Alt(0));
        assert_eq!(p.ballots()[1].top(), Alt(0));
        assert_eq!(p.ballots()[2].top(), Alt(1));
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = "# election\n\nalternatives: a,b # two options\n1: a>b\n# done\n1: b>a\n";
        let p = parse_profile(doc).unwrap();
        assert_eq!(p.n(), 2);
    }

    #[test]
    fn duplicate_alternative_in_ballot() {
        let err = parse_profile("alternatives: a,b\n1: a>a\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("duplicate"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_alternative_in_ballot() {
        let err = parse_profile("alternatives: a,b,c\n1: a>b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn nonpositive_count() {
        let err = parse_profile("alternatives: a,b\n0: a>b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn unknown_label() {
        let err = parse_profile("alternatives: a,b\n1: a>z\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("unknown label"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn render_groups_distinct_ballots() {
        let p = parse_profile("alternatives: a,b\n1: a>b\n1: b>a\n2: a>b\n").unwrap();
        assert_eq!(render_profile(&p), "alternatives: a,b\n3: a>b\n1: b>a\n");
    }
}

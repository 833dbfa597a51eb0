//! Line-oriented ABA text format.
//!
//! ```text
//! p aba <n_atoms>
//! a <i>
//! c <i> <j>
//! r <head> <b1> ... <bk>
//! name <i> <string>
//! ```
//!
//! Atoms are 1-based. `#` starts a comment.

use std::fmt::Write as _;

use super::{AbaFramework, Rule};
use crate::error::{Error, ParseErrorKind, Result};
use crate::idset::AtomId;
use crate::labels::Labels;

pub(crate) fn tokens(line: &str) -> Vec<&str> {
    line.split('#').next().unwrap_or("").split_whitespace().collect()
}

pub(crate) fn parse_index(
    token: &str,
    line: usize,
    kind: &'static str,
    max: usize,
    offset: usize,
) -> Result<usize> {
    let value: i64 = token.parse().map_err(|_| {
        Error::parse(line, ParseErrorKind::Malformed(format!("expected integer, got {token:?}")))
    })?;
    let lo = offset as i64;
    if value < lo || value >= lo + max as i64 {
        let max = if offset == 0 { max.saturating_sub(1) } else { max };
        return Err(Error::parse(line, ParseErrorKind::OutOfRange { kind, value, max }));
    }
    Ok((value - lo) as usize)
}

/// Parses the header `p <tag> <n>`.
pub(crate) fn parse_header(toks: &[&str], line: usize, tag: &'static str, expected: &'static str) -> Result<usize> {
    match toks {
        ["p", t, n] if *t == tag => n
            .parse()
            .map_err(|_| Error::parse(line, ParseErrorKind::Header { expected })),
        _ => Err(Error::parse(line, ParseErrorKind::Header { expected })),
    }
}

/// Parses a `name <id> <string>` line into `labels`.
pub(crate) fn parse_name(
    toks: &[&str],
    line: usize,
    labels: &mut Labels,
    kind: &'static str,
    max: usize,
) -> Result<()> {
    let [_, id, name] = toks else {
        return Err(Error::parse(
            line,
            ParseErrorKind::Malformed("expected `name <id> <string>`".into()),
        ));
    };
    let i = parse_index(id, line, kind, max, labels.offset())?;
    if !labels.set(i, *name) {
        return Err(Error::parse(line, ParseErrorKind::DuplicateName(name.to_string())));
    }
    Ok(())
}

pub fn parse_aba(text: &str) -> Result<AbaFramework> {
    const EXPECTED: &str = "p aba <n_atoms>";
    let mut n_atoms = None;
    let mut assumption_lines: Vec<(usize, usize)> = Vec::new();
    let mut contrary_lines: Vec<(usize, usize, usize)> = Vec::new();
    let mut rules = Vec::new();
    let mut labels = Labels::new(1);

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        let Some(n) = n_atoms else {
            n_atoms = Some(parse_header(&toks, line, "aba", EXPECTED)?);
            continue;
        };
        let atom = |t: &str| parse_index(t, line, "atom", n, 1);
        match toks[0] {
            "p" => return Err(Error::parse(line, ParseErrorKind::DuplicateHeader)),
            "a" if toks.len() == 2 => assumption_lines.push((line, atom(toks[1])?)),
            "c" if toks.len() == 3 => contrary_lines.push((line, atom(toks[1])?, atom(toks[2])?)),
            "r" if toks.len() >= 2 => {
                let head = AtomId(atom(toks[1])?);
                let body = toks[2..]
                    .iter()
                    .map(|t| atom(t).map(AtomId))
                    .collect::<Result<Vec<_>>>()?;
                rules.push(Rule::new(head, body));
            }
            "name" => parse_name(&toks, line, &mut labels, "atom", n)?,
            _ => {
                return Err(Error::parse(
                    line,
                    ParseErrorKind::Malformed(raw.trim().to_string()),
                ))
            }
        }
    }

    let n = n_atoms.ok_or(Error::parse(0, ParseErrorKind::Header { expected: EXPECTED }))?;
    let mut is_assumption = vec![false; n];
    for &(_, a) in &assumption_lines {
        is_assumption[a] = true;
    }
    let mut contrary: Vec<Option<AtomId>> = vec![None; n];
    for &(line, a, c) in &contrary_lines {
        if !is_assumption[a] {
            return Err(Error::parse(line, ParseErrorKind::ContraryOnNonAssumption(a + 1)));
        }
        if contrary[a].replace(AtomId(c)).is_some() {
            return Err(Error::parse(line, ParseErrorKind::DuplicateContrary(a + 1)));
        }
    }
    if assumption_lines.is_empty() {
        return Err(Error::parse(0, ParseErrorKind::NoAssumptions));
    }
    let mut pairs = Vec::new();
    let mut seen = vec![false; n];
    for &(line, a) in &assumption_lines {
        if std::mem::replace(&mut seen[a], true) {
            continue;
        }
        let c = contrary[a].ok_or(Error::parse(line, ParseErrorKind::MissingContrary(a + 1)))?;
        pairs.push((AtomId(a), c));
    }
    Ok(AbaFramework::new(n, pairs, rules)?.with_labels(labels))
}

/// Serializes a framework so that [`parse_aba`] reproduces it.
pub fn write_aba(d: &AbaFramework) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p aba {}", d.n_atoms());
    for &a in d.assumptions() {
        let _ = writeln!(out, "a {}", a.0 + 1);
    }
    for &a in d.assumptions() {
        let c = d.contrary(a).expect("assumptions have contraries");
        let _ = writeln!(out, "c {} {}", a.0 + 1, c.0 + 1);
    }
    for rule in d.rules() {
        let _ = write!(out, "r {}", rule.head.0 + 1);
        for b in &rule.body {
            let _ = write!(out, " {}", b.0 + 1);
        }
        out.push('\n');
    }
    for (i, name) in d.labels().iter() {
        let _ = writeln!(out, "name {} {}", i + 1, name);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_input() {
        let d = parse_aba("p aba 2\na 1\nc 1 2\nr 2 1").unwrap();
        assert_eq!(d.assumptions(), &[AtomId(0)]);
        assert_eq!(d.contrary(AtomId(0)), Some(AtomId(1)));
        assert_eq!(d.rules(), &[Rule::new(AtomId(1), [AtomId(0)])]);
        assert_eq!(d.contrary(AtomId(1)), None);
    }

    #[test]
    fn example_2_2_encoding() {
        let text = "p aba 8\n# a b c d, then contraries\na 1\na 2\na 3\na 4\n\
                    c 1 5\nc 2 6\nc 3 7\nc 4 8\n\
                    r 6 1\nr 5 2\nr 8 2\nr 6 3\nr 4 3\n";
        let d = parse_aba(text).unwrap();
        assert_eq!(d.assumptions().len(), 4);
        assert_eq!(d.rules().len(), 5);
    }

    #[test]
    fn contrary_on_non_assumption() {
        let err = parse_aba("p aba 3\na 1\nc 1 2\nc 3 1").unwrap_err();
        assert_eq!(err, Error::parse(4, ParseErrorKind::ContraryOnNonAssumption(3)));
        assert!(err.to_string().contains("contrary on non-assumption"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_aba("p aba 2\na 1\nc 1 2\nr 3 1"),
            Err(Error::Parse { line: 4, kind: ParseErrorKind::OutOfRange { value: 3, .. } })
        ));
        assert!(matches!(
            parse_aba("p aba 2\na 1\nc 1 2\nc 1 1"),
            Err(Error::Parse { line: 4, kind: ParseErrorKind::DuplicateContrary(1) })
        ));
        assert!(matches!(
            parse_aba("p aba 2\na 1\nx 1"),
            Err(Error::Parse { line: 3, kind: ParseErrorKind::Malformed(_) })
        ));
        assert!(matches!(
            parse_aba("a 1"),
            Err(Error::Parse { line: 1, kind: ParseErrorKind::Header { .. } })
        ));
        assert!(matches!(
            parse_aba("p aba 2\na 1"),
            Err(Error::Parse { kind: ParseErrorKind::MissingContrary(1), .. })
        ));
        assert!(matches!(
            parse_aba("p aba 2\nr 1 2"),
            Err(Error::Parse { kind: ParseErrorKind::NoAssumptions, .. })
        ));
    }

    #[test]
    fn names_round_trip() {
        let text = "p aba 3\na 1\nc 1 2\nr 2 3\nr 3\nname 1 x\nname 2 not_x\n";
        let d = parse_aba(text).unwrap();
        assert_eq!(d.atom_name(AtomId(0)), "x");
        assert_eq!(d.atom_name(AtomId(2)), "3");
        assert_eq!(d.resolve_atom("not_x"), Some(AtomId(1)));
        assert_eq!(parse_aba(&write_aba(&d)).unwrap(), d);
    }
}

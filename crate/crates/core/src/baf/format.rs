//! Line-oriented BAF and pBAF text formats.
//!
//! ```text
//! p baf <n_args>
//! att <i> <j>
//! sup <i> <j>
//! prem <i> <p1> ... <pk>
//! name <i> <string>
//! pname <p> <string>
//! ```
//!
//! Arguments are 0-based and premises 1-based. A missing `prem` line means
//! an empty premise set. `arg` lines are translation metadata and are
//! skipped. `#` starts a comment.

use std::fmt::Write as _;

use super::{Baf, Pbaf, PremiseSet};
use crate::aba::parse::{parse_header, parse_index, parse_name, tokens};
use crate::error::{Error, ParseErrorKind, Result};
use crate::idset::{ArgId, PremiseId};
use crate::labels::Labels;

const EXPECTED: &str = "p baf <n_args>";
const MAX_PREMISES: usize = i32::MAX as usize;

struct Parsed {
    n: usize,
    attacks: Vec<(ArgId, ArgId)>,
    supports: Vec<(ArgId, ArgId)>,
    labels: Labels,
    premises: Vec<Option<PremiseSet>>,
    premise_labels: Labels,
    premise_line: Option<usize>,
}

fn parse(text: &str) -> Result<Parsed> {
    let mut p: Option<Parsed> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        let Some(st) = p.as_mut() else {
            let n = match toks.as_slice() {
                ["p", "pbaf", _] => parse_header(&toks, line, "pbaf", EXPECTED)?,
                _ => parse_header(&toks, line, "baf", EXPECTED)?,
            };
            p = Some(Parsed {
                n,
                attacks: Vec::new(),
                supports: Vec::new(),
                labels: Labels::new(0),
                premises: vec![None; n],
                premise_labels: Labels::new(1),
                premise_line: None,
            });
            continue;
        };
        let n = st.n;
        let arg = |t: &str| parse_index(t, line, "argument", n, 0).map(ArgId);
        match toks[0] {
            "p" => return Err(Error::parse(line, ParseErrorKind::DuplicateHeader)),
            "att" if toks.len() == 3 => st.attacks.push((arg(toks[1])?, arg(toks[2])?)),
            "sup" if toks.len() == 3 => st.supports.push((arg(toks[1])?, arg(toks[2])?)),
            "prem" if toks.len() >= 2 => {
                let a = arg(toks[1])?;
                let set = toks[2..]
                    .iter()
                    .map(|t| parse_index(t, line, "premise", MAX_PREMISES, 1).map(PremiseId))
                    .collect::<Result<PremiseSet>>()?;
                if st.premises[a.0].replace(set).is_some() {
                    return Err(Error::parse(
                        line,
                        ParseErrorKind::Malformed(format!("second prem line for argument {a}")),
                    ));
                }
                st.premise_line.get_or_insert(line);
            }
            "name" => parse_name(&toks, line, &mut st.labels, "argument", n)?,
            "pname" => {
                parse_name(&toks, line, &mut st.premise_labels, "premise", MAX_PREMISES)?;
                st.premise_line.get_or_insert(line);
            }
            "arg" => {}
            _ => {
                return Err(Error::parse(
                    line,
                    ParseErrorKind::Malformed(raw.trim().to_string()),
                ))
            }
        }
    }
    p.ok_or(Error::parse(0, ParseErrorKind::Header { expected: EXPECTED }))
}

fn build_baf(p: &Parsed) -> Result<Baf> {
    Ok(Baf::new(p.n, p.attacks.iter().copied(), p.supports.iter().copied())?
        .with_labels(p.labels.clone()))
}

/// Parses a BAF; premise lines are rejected.
pub fn parse_baf(text: &str) -> Result<Baf> {
    let p = parse(text)?;
    if let Some(line) = p.premise_line {
        return Err(Error::parse(
            line,
            ParseErrorKind::Malformed("premise line in a BAF; parse it as a pBAF".into()),
        ));
    }
    build_baf(&p)
}

pub fn parse_pbaf(text: &str) -> Result<Pbaf> {
    let p = parse(text)?;
    let baf = build_baf(&p)?;
    let premises = p.premises.into_iter().map(Option::unwrap_or_default).collect();
    Ok(Pbaf::new(baf, premises)?.with_premise_labels(p.premise_labels))
}

fn write_body(out: &mut String, f: &Baf) {
    let _ = writeln!(out, "p baf {}", f.n_args());
    for (x, y) in f.attacks() {
        let _ = writeln!(out, "att {x} {y}");
    }
    for (x, y) in f.supports() {
        let _ = writeln!(out, "sup {x} {y}");
    }
}

fn write_names(out: &mut String, f: &Baf) {
    for (i, name) in f.labels().iter() {
        let _ = writeln!(out, "name {i} {name}");
    }
}

/// Serializes a BAF so that [`parse_baf`] reproduces it.
pub fn write_baf(f: &Baf) -> String {
    let mut out = String::new();
    write_body(&mut out, f);
    write_names(&mut out, f);
    out
}

/// Serializes a pBAF so that [`parse_pbaf`] reproduces it. Every argument
/// gets a `prem` line.
pub fn write_pbaf(pf: &Pbaf) -> String {
    let mut out = String::new();
    let f = pf.baf();
    write_body(&mut out, f);
    for (i, p) in pf.all_premises().iter().enumerate() {
        let _ = write!(out, "prem {i}");
        for x in p.iter() {
            let _ = write!(out, " {}", x.0 + 1);
        }
        out.push('\n');
    }
    write_names(&mut out, f);
    for (i, name) in pf.premise_labels().iter() {
        let _ = writeln!(out, "pname {} {name}", i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baf::fixtures::example_3_2;
    use crate::idset::ids;

    #[test]
    fn round_trip_baf() {
        let f = example_3_2();
        let text = write_baf(&f);
        assert_eq!(parse_baf(&text).unwrap(), f);
        assert_eq!(write_baf(&parse_baf(&text).unwrap()), text);
    }

    #[test]
    fn round_trip_pbaf() {
        let f = example_3_2();
        let premises = vec![ids([0]), ids([0, 2]), PremiseSet::new(), ids([1]), ids([1])];
        let mut pl = Labels::new(1);
        pl.set(0, "a");
        let pf = Pbaf::new(f, premises).unwrap().with_premise_labels(pl);
        let text = write_pbaf(&pf);
        assert_eq!(parse_pbaf(&text).unwrap(), pf);
    }

    #[test]
    fn missing_prem_lines_mean_empty() {
        let pf = parse_pbaf("p baf 2\natt 0 1\nprem 1 3 1\n").unwrap();
        assert!(pf.premises(ArgId(0)).is_empty());
        assert_eq!(pf.premises(ArgId(1)), &ids([0, 2]));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_baf("p baf 2\natt 0 2"),
            Err(Error::Parse { line: 2, kind: ParseErrorKind::OutOfRange { .. } })
        ));
        assert!(matches!(
            parse_baf("p baf 2\nprem 0 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_baf("att 0 1"),
            Err(Error::Parse { line: 1, kind: ParseErrorKind::Header { .. } })
        ));
        assert!(matches!(
            parse_pbaf("p baf 2\nprem 0 0"),
            Err(Error::Parse { line: 2, kind: ParseErrorKind::OutOfRange { .. } })
        ));
    }

    #[test]
    fn sidecar_lines_are_skipped() {
        let f = parse_baf("p baf 1\narg 0 1 1\n# comment\n").unwrap();
        assert_eq!(f.n_args(), 1);
    }
}

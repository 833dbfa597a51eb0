//! CNF formulas and their reductions to (p)BAFs.
//!
//! Each construction names its arguments deterministically: literal
//! arguments first (`x1`, `~x1`, and primed copies where used), then one
//! argument per clause (`c1`, `c2`, ...), then per-variable gadgets, then
//! the global gadget arguments.

use crate::baf::{Baf, Pbaf, PremiseSet};
use crate::error::{Error, ParseErrorKind, Result};
use crate::idset::{ArgId, PremiseId};
use crate::labels::Labels;

/// A clause set over variables `1..=n_vars`; literals are signed indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cnf {
    n_vars: usize,
    clauses: Vec<Vec<i64>>,
}

impl Cnf {
    /// Validates and normalizes clauses: literals are sorted and
    /// deduplicated, repeated clauses are dropped.
    pub fn new(n_vars: usize, clauses: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for mut clause in clauses {
            if clause.is_empty() {
                return Err(Error::Invalid("empty clause".into()));
            }
            if let Some(&bad) = clause
                .iter()
                .find(|l| **l == 0 || l.unsigned_abs() as usize > n_vars)
            {
                return Err(Error::Invalid(format!("literal {bad} out of range")));
            }
            clause.sort_by_key(|l| (l.abs(), *l < 0));
            clause.dedup();
            if let Some(w) = clause.windows(2).find(|w| w[0] == -w[1]) {
                return Err(Error::Invalid(format!(
                    "clause contains {} and {}",
                    w[0], w[1]
                )));
            }
            if !out.contains(&clause) {
                out.push(clause);
            }
        }
        Ok(Self {
            n_vars,
            clauses: out,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    fn satisfied_by(&self, assignment: u32) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
                value == (l > 0)
            })
        })
    }

    /// DIMACS text for this formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    const EXPECTED: &str = "p cnf <vars> <clauses>";
    let mut n_vars: Option<usize> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0] == "c" || toks[0].starts_with('%') {
            continue;
        }
        last_line = line;
        let Some(n) = n_vars else {
            match toks.as_slice() {
                ["p", "cnf", v, c] if c.parse::<usize>().is_ok() => {
                    n_vars = Some(v.parse().map_err(|_| {
                        Error::parse(line, ParseErrorKind::Header { expected: EXPECTED })
                    })?);
                }
                _ => return Err(Error::parse(line, ParseErrorKind::Header { expected: EXPECTED })),
            }
            continue;
        };
        if toks[0] == "p" {
            return Err(Error::parse(line, ParseErrorKind::DuplicateHeader));
        }
        for t in toks {
            let lit: i64 = t.parse().map_err(|_| {
                Error::parse(line, ParseErrorKind::Malformed(format!("bad literal {t:?}")))
            })?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::parse(line, ParseErrorKind::EmptyClause));
                }
                let mut clause = std::mem::take(&mut current);
                clause.sort_by_key(|l| (l.abs(), *l < 0));
                clause.dedup();
                if let Some(w) = clause.windows(2).find(|w| w[0] == -w[1]) {
                    return Err(Error::parse(line, ParseErrorKind::Tautology(w[0].abs())));
                }
                clauses.push(clause);
            } else if lit.unsigned_abs() as usize > n {
                return Err(Error::parse(
                    line,
                    ParseErrorKind::OutOfRange {
                        kind: "variable",
                        value: lit,
                        max: n,
                    },
                ));
            } else {
                current.push(lit);
            }
        }
    }
    let Some(n) = n_vars else {
        return Err(Error::parse(last_line.max(1), ParseErrorKind::Header { expected: EXPECTED }));
    };
    if !current.is_empty() {
        return Err(Error::parse(last_line, ParseErrorKind::UnterminatedClause));
    }
    Cnf::new(n, clauses)
}

/// Largest variable count [`brute_force_sat`] accepts.
pub const MAX_SAT_VARS: usize = 20;

/// Decides satisfiability by trying every assignment.
pub fn brute_force_sat(phi: &Cnf) -> Result<bool> {
    if phi.n_vars > MAX_SAT_VARS {
        return Err(Error::TooLarge {
            guard: "max-sat-vars",
            size: phi.n_vars,
            limit: MAX_SAT_VARS,
        });
    }
    Ok((0..1u32 << phi.n_vars).any(|a| phi.satisfied_by(a)))
}

/// Collects named arguments and edges while a construction is built.
struct Builder {
    labels: Labels,
    n: usize,
    attacks: Vec<(ArgId, ArgId)>,
    supports: Vec<(ArgId, ArgId)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            labels: Labels::new(0),
            n: 0,
            attacks: Vec::new(),
            supports: Vec::new(),
        }
    }

    fn add(&mut self, name: String) -> ArgId {
        self.labels.set(self.n, name);
        self.n += 1;
        ArgId(self.n - 1)
    }

    fn attack(&mut self, x: ArgId, y: ArgId) {
        self.attacks.push((x, y));
    }

    fn support(&mut self, x: ArgId, y: ArgId) {
        self.supports.push((x, y));
    }

    fn build(self) -> Baf {
        Baf::new(self.n, self.attacks, self.supports)
            .expect("constructions only reference declared arguments")
            .with_labels(self.labels)
    }
}

/// Literal arguments: per variable the positive and negative argument, plus
/// the primed copies when `primed`.
struct Literals {
    pos: Vec<ArgId>,
    neg: Vec<ArgId>,
    pos_copy: Vec<ArgId>,
    neg_copy: Vec<ArgId>,
}

fn literals(b: &mut Builder, n_vars: usize, primed: bool) -> Literals {
    let mut lits = Literals {
        pos: Vec::new(),
        neg: Vec::new(),
        pos_copy: Vec::new(),
        neg_copy: Vec::new(),
    };
    for i in 1..=n_vars {
        lits.pos.push(b.add(format!("x{i}")));
        lits.neg.push(b.add(format!("~x{i}")));
        if primed {
            lits.pos_copy.push(b.add(format!("x{i}'")));
            lits.neg_copy.push(b.add(format!("~x{i}'")));
        }
    }
    lits
}

/// Adds one argument per clause, attacked by the literal arguments
/// occurring in it (and their copies, if any).
fn clauses(b: &mut Builder, phi: &Cnf, lits: &Literals) -> Vec<ArgId> {
    let mut out = Vec::new();
    for (j, clause) in phi.clauses.iter().enumerate() {
        let c = b.add(format!("c{}", j + 1));
        for &l in clause {
            let v = l.unsigned_abs() as usize - 1;
            let (main, copy) = if l > 0 {
                (&lits.pos, &lits.pos_copy)
            } else {
                (&lits.neg, &lits.neg_copy)
            };
            b.attack(main[v], c);
            if let Some(&x) = copy.get(v) {
                b.attack(x, c);
            }
        }
        out.push(c);
    }
    out
}

/// A BAF with a complete extension iff `phi` is satisfiable.
///
/// An unattacked `top` supports `phi`, which every clause attacks, so every
/// complete extension must pick literals hitting all clauses.
pub fn construct_sat_baf(phi: &Cnf) -> Baf {
    let mut b = Builder::new();
    let lits = literals(&mut b, phi.n_vars, false);
    for i in 0..phi.n_vars {
        b.attack(lits.pos[i], lits.neg[i]);
        b.attack(lits.neg[i], lits.pos[i]);
    }
    let cs = clauses(&mut b, phi, &lits);
    let top = b.add("top".into());
    let goal = b.add("phi".into());
    for c in cs {
        b.attack(c, goal);
    }
    b.support(top, goal);
    b.build()
}

/// A BAF whose grounded extension is `{top, phi}` if `phi` is satisfiable
/// and empty otherwise.
///
/// Each variable has four mutually attacking literal arguments, so no
/// literal is in every complete extension.
pub fn construct_gr_baf(phi: &Cnf) -> Baf {
    let mut b = Builder::new();
    let lits = literals(&mut b, phi.n_vars, true);
    for i in 0..phi.n_vars {
        let group = [lits.pos[i], lits.neg[i], lits.pos_copy[i], lits.neg_copy[i]];
        for &x in &group {
            for &y in &group {
                if x != y {
                    b.attack(x, y);
                }
            }
        }
    }
    let cs = clauses(&mut b, phi, &lits);
    let top = b.add("top".into());
    let goal = b.add("phi".into());
    for c in cs {
        b.attack(c, goal);
    }
    b.support(top, goal);
    b.build()
}

/// A BAF in which `neg_psi` is in every complete extension iff `psi` is
/// unsatisfiable.
///
/// Per variable, an unattacked `top_i` supports `d_i`, which a
/// self-attacking `bot_i` attacks; only the variable's literals attack
/// `bot_i`, forcing a full assignment.
pub fn construct_skept_baf(psi: &Cnf) -> Baf {
    let mut b = Builder::new();
    let lits = literals(&mut b, psi.n_vars, false);
    for i in 0..psi.n_vars {
        b.attack(lits.pos[i], lits.neg[i]);
        b.attack(lits.neg[i], lits.pos[i]);
    }
    let cs = clauses(&mut b, psi, &lits);
    for i in 0..psi.n_vars {
        let top = b.add(format!("top_{}", i + 1));
        let bot = b.add(format!("bot_{}", i + 1));
        let d = b.add(format!("d_{}", i + 1));
        b.attack(lits.pos[i], bot);
        b.attack(lits.neg[i], bot);
        b.attack(bot, bot);
        b.attack(bot, d);
        b.support(top, d);
    }
    let neg_goal = b.add("neg_psi".into());
    let goal = b.add("psi".into());
    for c in cs {
        b.attack(c, goal);
    }
    b.attack(goal, neg_goal);
    b.build()
}

/// A pBAF in which `neg_psi` is skeptically accepted under admissibility
/// iff `psi` is unsatisfiable.
///
/// The premise-free `d_i` and `t` belong to every exhaustive set, which
/// forces a full assignment and one of `psi` or `neg_psi`.
pub fn construct_skept_pbaf(psi: &Cnf) -> Pbaf {
    let mut b = Builder::new();
    let lits = literals(&mut b, psi.n_vars, false);
    for i in 0..psi.n_vars {
        b.attack(lits.pos[i], lits.neg[i]);
        b.attack(lits.neg[i], lits.pos[i]);
    }
    let cs = clauses(&mut b, psi, &lits);
    let mut premise_free = Vec::new();
    for i in 0..psi.n_vars {
        let bot = b.add(format!("bot_{}", i + 1));
        let d = b.add(format!("d_{}", i + 1));
        b.attack(lits.pos[i], bot);
        b.attack(lits.neg[i], bot);
        b.attack(bot, d);
        premise_free.push(d);
    }
    let goal = b.add("psi".into());
    let neg_goal = b.add("neg_psi".into());
    let t = b.add("t".into());
    let bot_t = b.add("bot_t".into());
    premise_free.push(t);
    for c in cs {
        b.attack(c, goal);
    }
    b.attack(goal, neg_goal);
    b.attack(bot_t, t);
    b.attack(goal, bot_t);
    b.attack(neg_goal, bot_t);

    let labels = b.labels.clone();
    let baf = b.build();
    let premises: Vec<PremiseSet> = (0..baf.n_args())
        .map(|a| {
            if premise_free.contains(&ArgId(a)) {
                PremiseSet::new()
            } else {
                std::iter::once(PremiseId(a)).collect()
            }
        })
        .collect();
    let mut premise_labels = Labels::new(1);
    for (i, name) in labels.iter() {
        premise_labels.set(i, name);
    }
    Pbaf::new(baf, premises)
        .expect("one premise set per argument")
        .with_premise_labels(premise_labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baf::Extension;
    use crate::semantics::{Semantics, Task};

    const FIGURE: &str = "p cnf 3 3\n1 2 0\n-1 3 0\n-1 -3 0\n";

    fn figure() -> Cnf {
        parse_dimacs(FIGURE).unwrap()
    }

    fn contradiction() -> Cnf {
        parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap()
    }

    #[test]
    fn parse_examples() {
        let phi = figure();
        assert_eq!(phi.n_vars(), 3);
        assert_eq!(phi.clauses(), &[vec![1, 2], vec![-1, 3], vec![-1, -3]]);
        assert_eq!(contradiction().clauses().len(), 2);
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n0"),
            Err(Error::Parse { line: 2, kind: ParseErrorKind::EmptyClause })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n2 0"),
            Err(Error::Parse { line: 2, kind: ParseErrorKind::OutOfRange { .. } })
        ));
        assert!(matches!(
            parse_dimacs("p dnf 1 1\n1 0"),
            Err(Error::Parse { line: 1, kind: ParseErrorKind::Header { .. } })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 -1 0"),
            Err(Error::Parse { kind: ParseErrorKind::Tautology(1), .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 2"),
            Err(Error::Parse { kind: ParseErrorKind::UnterminatedClause, .. })
        ));
    }

    #[test]
    fn clauses_may_span_lines_and_duplicates_collapse() {
        let phi = parse_dimacs("c hello\np cnf 2 3\n1\n2 0 2 1 0\n-2 -2 0\n").unwrap();
        assert_eq!(phi.clauses(), &[vec![1, 2], vec![-2]]);
        assert_eq!(parse_dimacs(&phi.to_dimacs()).unwrap(), phi);
    }

    #[test]
    fn sat_oracle() {
        assert!(brute_force_sat(&figure()).unwrap());
        assert!(!brute_force_sat(&contradiction()).unwrap());
        assert!(brute_force_sat(&Cnf::new(0, []).unwrap()).unwrap());
        assert!(brute_force_sat(&Cnf::new(21, []).unwrap()).is_err());
    }

    #[test]
    fn sat_baf_shape_and_lemma() {
        let f = construct_sat_baf(&figure());
        assert_eq!(f.n_args(), 11);
        assert_eq!(f.supports(), &[(f.arg("top"), f.arg("phi"))]);
        assert_eq!(f.attacks().len(), 6 + 6 + 3);
        assert!(!f.extensions(Semantics::Co).unwrap().is_empty());
        let g = construct_sat_baf(&contradiction());
        assert!(g.extensions(Semantics::Co).unwrap().is_empty());
    }

    #[test]
    fn gr_baf_lemma() {
        let f = construct_gr_baf(&figure());
        assert_eq!(f.n_args(), 12 + 3 + 2);
        assert_eq!(f.extensions(Semantics::Gr).unwrap(), vec![f.set_of(["top", "phi"])]);
        let g = construct_gr_baf(&contradiction());
        assert_eq!(g.extensions(Semantics::Gr).unwrap(), vec![Extension::new()]);
        let h = construct_gr_baf(&Cnf::new(1, [vec![1]]).unwrap());
        assert_eq!(h.extensions(Semantics::Gr).unwrap(), vec![h.set_of(["top", "phi"])]);
    }

    #[test]
    fn skept_baf_lemma() {
        let f = construct_skept_baf(&figure());
        assert_eq!(f.n_args(), 6 + 3 + 9 + 2);
        let co = f.extensions(Semantics::Co).unwrap();
        assert!(!co.is_empty());
        for e in &co {
            for i in 1..=3 {
                assert!(e.contains(f.arg(&format!("top_{i}"))));
                assert!(e.contains(f.arg(&format!("d_{i}"))));
                let x = e.contains(f.arg(&format!("x{i}")));
                let nx = e.contains(f.arg(&format!("~x{i}")));
                assert!(x != nx);
            }
        }
        assert!(!f.decide(Semantics::Co, Task::Skept, &f.set_of(["neg_psi"])).unwrap());

        let g = construct_skept_baf(&contradiction());
        assert_eq!(
            g.extensions(Semantics::Gr).unwrap(),
            vec![g.set_of(["top_1", "d_1", "neg_psi"])]
        );
        assert!(g.decide(Semantics::Co, Task::Skept, &g.set_of(["neg_psi"])).unwrap());
    }

    #[test]
    fn skept_pbaf_lemma() {
        let pf = construct_skept_pbaf(&figure());
        let f = pf.baf();
        assert!(f.supports().is_empty());
        assert_eq!(pf.display_premises(pf.premises(f.arg("psi"))), "{psi}");
        assert_eq!(pf.display_premises(pf.premises(f.arg("t"))), "{}");
        assert_eq!(pf.display_premises(pf.premises(f.arg("d_2"))), "{}");
        let q = f.set_of(["neg_psi"]);
        assert!(!pf.decide(Semantics::Ad, Task::Skept, &q).unwrap());
        let g = construct_skept_pbaf(&contradiction());
        let q = g.baf().set_of(["neg_psi"]);
        assert!(g.decide(Semantics::Ad, Task::Skept, &q).unwrap());
    }
}

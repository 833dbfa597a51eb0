//! Assumption-based argumentation over possibly non-flat frameworks.
//!
//! A framework is a set of rules over a finite language of atoms together
//! with designated assumptions and a contrary for each assumption.
//! Derivability is computed by forward chaining; semantics are enumerated
//! over subsets of the assumptions.

mod args;
pub(crate) mod parse;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::idset::{AtomId, IdSet};
use crate::labels::Labels;
use crate::semantics::{decide_over, DefenseMode, Semantics, Task, DEFAULT_MAX_ENUMERATION};

pub use args::{Argument, DEFAULT_ARGUMENT_CAP};
pub use parse::{parse_aba, write_aba};

/// A set of assumptions.
pub type AssumptionSet = IdSet<AtomId>;

/// An inference rule `head <- body`. An empty body makes the head a fact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub head: AtomId,
    /// Sorted, without duplicates.
    pub body: Vec<AtomId>,
}

impl Rule {
    pub fn new(head: AtomId, body: impl IntoIterator<Item = AtomId>) -> Self {
        let mut body: Vec<AtomId> = body.into_iter().collect();
        body.sort_unstable();
        body.dedup();
        Self { head, body }
    }
}

/// An ABA framework: atoms `0..n_atoms`, rules, assumptions and contraries.
#[derive(Clone, Debug)]
pub struct AbaFramework {
    n_atoms: usize,
    rules: Vec<Rule>,
    assumptions: Vec<AtomId>,
    assumption_set: AssumptionSet,
    contrary: Vec<Option<AtomId>>,
    labels: Labels,
    rules_by_body: Vec<Vec<usize>>,
}

impl PartialEq for AbaFramework {
    fn eq(&self, other: &Self) -> bool {
        self.n_atoms == other.n_atoms
            && self.rules == other.rules
            && self.assumptions == other.assumptions
            && self.contrary == other.contrary
            && self.labels == other.labels
    }
}

impl Eq for AbaFramework {}

impl AbaFramework {
    /// Builds a framework from `(assumption, contrary)` pairs and rules.
    ///
    /// Rules are kept in the given order with exact duplicates removed.
    pub fn new(
        n_atoms: usize,
        contraries: impl IntoIterator<Item = (AtomId, AtomId)>,
        rules: impl IntoIterator<Item = Rule>,
    ) -> Result<Self> {
        let mut contrary = vec![None; n_atoms];
        let mut assumptions = Vec::new();
        for (a, c) in contraries {
            if a.0 >= n_atoms || c.0 >= n_atoms {
                return Err(Error::Invalid(format!(
                    "assumption {a} or contrary {c} out of range for {n_atoms} atoms"
                )));
            }
            if contrary[a.0].replace(c).is_some() {
                return Err(Error::Invalid(format!("duplicate contrary for {a}")));
            }
            assumptions.push(a);
        }
        if assumptions.is_empty() {
            return Err(Error::Invalid("no assumptions".into()));
        }
        assumptions.sort_unstable();

        let mut kept: Vec<Rule> = Vec::new();
        for rule in rules {
            if rule.head.0 >= n_atoms || rule.body.iter().any(|b| b.0 >= n_atoms) {
                return Err(Error::Invalid(format!(
                    "rule {rule:?} references an atom outside 0..{n_atoms}"
                )));
            }
            if !kept.contains(&rule) {
                kept.push(rule);
            }
        }

        let mut rules_by_body = vec![Vec::new(); n_atoms];
        for (r, rule) in kept.iter().enumerate() {
            for b in &rule.body {
                rules_by_body[b.0].push(r);
            }
        }
        let assumption_set = assumptions.iter().copied().collect();
        Ok(Self {
            n_atoms,
            rules: kept,
            assumptions,
            assumption_set,
            contrary,
            labels: Labels::new(1),
            rules_by_body,
        })
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = labels;
        self
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Assumptions in increasing atom order.
    pub fn assumptions(&self) -> &[AtomId] {
        &self.assumptions
    }

    pub fn assumption_set(&self) -> &AssumptionSet {
        &self.assumption_set
    }

    pub fn is_assumption(&self, atom: AtomId) -> bool {
        self.assumption_set.contains(atom)
    }

    pub fn contrary(&self, assumption: AtomId) -> Option<AtomId> {
        self.contrary.get(assumption.0).copied().flatten()
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn atom_name(&self, atom: AtomId) -> String {
        self.labels.display(atom.0)
    }

    /// Position of an assumption in [`assumptions`](Self::assumptions).
    pub fn assumption_index(&self, atom: AtomId) -> Option<usize> {
        self.assumptions.binary_search(&atom).ok()
    }

    /// True if no rule head is an assumption, in which case every set is
    /// closed.
    pub fn is_flat_syntactically(&self) -> bool {
        !self.rules.iter().any(|r| self.is_assumption(r.head))
    }

    /// Every sentence derivable from subsets of `s`, by forward chaining.
    ///
    /// Members of `s` that are not assumptions are ignored.
    pub fn theory(&self, s: &AssumptionSet) -> IdSet<AtomId> {
        let mut derived = FixedBitSet::with_capacity(self.n_atoms);
        let mut missing: Vec<usize> = self.rules.iter().map(|r| r.body.len()).collect();
        let mut queue = Vec::new();
        for a in s.iter().filter(|&a| self.is_assumption(a)) {
            if !derived.put(a.0) {
                queue.push(a.0);
            }
        }
        for rule in self.rules.iter().filter(|r| r.body.is_empty()) {
            if !derived.put(rule.head.0) {
                queue.push(rule.head.0);
            }
        }
        while let Some(p) = queue.pop() {
            for &r in &self.rules_by_body[p] {
                missing[r] -= 1;
                if missing[r] == 0 {
                    let h = self.rules[r].head.0;
                    if !derived.put(h) {
                        queue.push(h);
                    }
                }
            }
        }
        IdSet::from_bits(derived)
    }

    /// The derivable assumptions of `s`.
    pub fn closure(&self, s: &AssumptionSet) -> AssumptionSet {
        let mut th = self.theory(s);
        th.intersect_with(&self.assumption_set);
        th
    }

    pub fn is_closed(&self, s: &AssumptionSet) -> bool {
        self.closure(s) == *s
    }

    /// True if `s` derives the contrary of some member of `t`.
    pub fn attacks(&self, s: &AssumptionSet, t: &AssumptionSet) -> bool {
        let th = self.theory(s);
        self.attacked_by_theory(&th, t)
    }

    fn attacked_by_theory(&self, theory: &IdSet<AtomId>, t: &AssumptionSet) -> bool {
        t.iter()
            .filter_map(|a| self.contrary(a))
            .any(|c| theory.contains(c))
    }

    pub fn is_conflict_free(&self, s: &AssumptionSet) -> bool {
        !self.attacks(s, s)
    }

    /// Whether `s` defends the assumption `a`.
    ///
    /// [`DefenseMode::ClosedSets`] quantifies over all closed attacking sets
    /// and is bounded by the default enumeration guard.
    /// [`DefenseMode::AttackerClosure`] counter-attacks the closure of the
    /// support of every argument for the contrary of `a`, and is bounded by
    /// [`DEFAULT_ARGUMENT_CAP`].
    pub fn defends(&self, s: &AssumptionSet, a: AtomId, mode: DefenseMode) -> Result<bool> {
        let contrary = self.contrary(a).ok_or(Error::NotAnAssumption(a))?;
        match mode {
            DefenseMode::ClosedSets => {
                self.check_guard(DEFAULT_MAX_ENUMERATION)?;
                let target: AssumptionSet = std::iter::once(a).collect();
                let s_theory = self.theory(s);
                for mask in 0..(1u64 << self.assumptions.len()) {
                    let t = self.set_from_mask(mask);
                    if self.is_closed(&t)
                        && self.attacks(&t, &target)
                        && !self.attacked_by_theory(&s_theory, &t)
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            DefenseMode::AttackerClosure => {
                let s_theory = self.theory(s);
                let arguments = self.enumerate_arguments(DEFAULT_ARGUMENT_CAP)?;
                Ok(arguments
                    .iter()
                    .filter(|arg| arg.conclusion == contrary)
                    .all(|arg| self.attacked_by_theory(&s_theory, &self.closure(&arg.support))))
            }
        }
    }

    fn check_guard(&self, limit: usize) -> Result<()> {
        if self.assumptions.len() > limit {
            return Err(Error::TooLarge {
                guard: "max-assumptions",
                size: self.assumptions.len(),
                limit,
            });
        }
        Ok(())
    }

    /// Assumption set selected by a bitmask over assumption positions.
    pub fn set_from_mask(&self, mask: u64) -> AssumptionSet {
        let mut set = IdSet::with_capacity(self.n_atoms);
        for (i, &a) in self.assumptions.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.insert(a);
            }
        }
        set
    }

    /// All σ-extensions, in canonical order, with the default guard.
    pub fn extensions(&self, sigma: Semantics) -> Result<Vec<AssumptionSet>> {
        self.extensions_bounded(sigma, DEFAULT_MAX_ENUMERATION)
    }

    pub fn extensions_bounded(
        &self,
        sigma: Semantics,
        max_assumptions: usize,
    ) -> Result<Vec<AssumptionSet>> {
        self.check_guard(max_assumptions.min(32))?;
        let table = SubsetTable::build(self);
        let masks = table.extensions(sigma);
        Ok(masks.into_iter().map(|m| self.set_from_mask(m)).collect())
    }

    /// Decides a reasoning task. `query` must be a single assumption for
    /// credulous and skeptical acceptance.
    pub fn decide(&self, sigma: Semantics, task: Task, query: &AssumptionSet) -> Result<bool> {
        self.decide_bounded(sigma, task, query, DEFAULT_MAX_ENUMERATION)
    }

    pub fn decide_bounded(
        &self,
        sigma: Semantics,
        task: Task,
        query: &AssumptionSet,
        max_assumptions: usize,
    ) -> Result<bool> {
        if let Some(bad) = query.iter().find(|&a| !self.is_assumption(a)) {
            return Err(Error::NotAnAssumption(bad));
        }
        if task != Task::Ver && query.len() != 1 {
            return Err(Error::InvalidQuery(format!(
                "{task} expects a single assumption, got {} atoms",
                query.len()
            )));
        }
        let family = self.extensions_bounded(sigma, max_assumptions)?;
        let member = query.iter().next();
        Ok(decide_over(
            &family,
            task,
            |e| member.is_some_and(|a| e.contains(a)),
            Some(query),
        ))
    }

    /// Parses a whitespace-free name or 1-based id into an atom.
    pub fn resolve_atom(&self, token: &str) -> Option<AtomId> {
        self.labels
            .lookup(token)
            .filter(|&i| i < self.n_atoms)
            .map(AtomId)
    }
}

/// Closure and attack masks for every subset of the assumptions.
struct SubsetTable {
    k: usize,
    closure: Vec<u64>,
    attacked: Vec<u64>,
    /// Per assumption position: the ⊆-minimal closed sets attacking it.
    closed_attackers: Vec<Vec<u64>>,
}

impl SubsetTable {
    fn build(d: &AbaFramework) -> Self {
        let k = d.assumptions.len();
        let size = 1usize << k;
        let mut closure = Vec::with_capacity(size);
        let mut attacked = Vec::with_capacity(size);
        let contrary_of: Vec<AtomId> = d
            .assumptions
            .iter()
            .map(|&a| d.contrary(a).expect("assumptions have contraries"))
            .collect();
        for mask in 0..size as u64 {
            let th = d.theory(&d.set_from_mask(mask));
            let mut cl = 0u64;
            let mut att = 0u64;
            for (i, &a) in d.assumptions.iter().enumerate() {
                if th.contains(a) {
                    cl |= 1 << i;
                }
                if th.contains(contrary_of[i]) {
                    att |= 1 << i;
                }
            }
            closure.push(cl);
            attacked.push(att);
        }
        let mut closed_attackers = vec![Vec::new(); k];
        for (i, list) in closed_attackers.iter_mut().enumerate() {
            let mut candidates: Vec<u64> = (0..size as u64)
                .filter(|&t| closure[t as usize] == t && attacked[t as usize] >> i & 1 == 1)
                .collect();
            candidates.sort_by_key(|t| t.count_ones());
            for t in candidates {
                if !list.iter().any(|&m: &u64| m & t == m) {
                    list.push(t);
                }
            }
        }
        Self {
            k,
            closure,
            attacked,
            closed_attackers,
        }
    }

    fn conflict_free(&self, s: u64) -> bool {
        self.attacked[s as usize] & s == 0
    }

    fn closed(&self, s: u64) -> bool {
        self.closure[s as usize] == s
    }

    fn defends(&self, s: u64, i: usize) -> bool {
        let counter = self.attacked[s as usize];
        self.closed_attackers[i].iter().all(|&t| counter & t != 0)
    }

    fn admissible(&self, s: u64) -> bool {
        self.conflict_free(s)
            && self.closed(s)
            && (0..self.k)
                .filter(|i| s >> i & 1 == 1)
                .all(|i| self.defends(s, i))
    }

    fn complete(&self, s: u64) -> bool {
        self.admissible(s)
            && (0..self.k)
                .filter(|i| s >> i & 1 == 0)
                .all(|i| !self.defends(s, i))
    }

    fn stable(&self, s: u64) -> bool {
        let all = (1u64 << self.k) - 1;
        self.conflict_free(s) && self.closed(s) && self.attacked[s as usize] | s == all
    }

    fn extensions(&self, sigma: Semantics) -> Vec<u64> {
        let all = 0..(1u64 << self.k);
        let mut out: Vec<u64> = match sigma {
            Semantics::Cf => all.filter(|&s| self.conflict_free(s)).collect(),
            Semantics::Ad => all.filter(|&s| self.admissible(s)).collect(),
            Semantics::Co => all.filter(|&s| self.complete(s)).collect(),
            Semantics::Stb => all.filter(|&s| self.stable(s)).collect(),
            Semantics::Pr => {
                let ad: Vec<u64> = all.filter(|&s| self.admissible(s)).collect();
                ad.iter()
                    .copied()
                    .filter(|&s| !ad.iter().any(|&t| t != s && t & s == s))
                    .collect()
            }
            Semantics::Gr => {
                let co: Vec<u64> = all.filter(|&s| self.complete(s)).collect();
                let meet = co.iter().copied().reduce(|a, b| a & b).unwrap_or(0);
                vec![meet]
            }
        };
        out.sort_unstable();
        out
    }
}

/// Builds frameworks from named atoms; convenient in tests and examples.
#[derive(Default)]
pub struct AbaBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    contraries: Vec<(AtomId, AtomId)>,
    rules: Vec<Rule>,
}

impl AbaBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atom(&mut self, name: &str) -> AtomId {
        if let Some(&i) = self.index.get(name) {
            return AtomId(i);
        }
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), self.names.len() - 1);
        AtomId(self.names.len() - 1)
    }

    pub fn assumption(mut self, name: &str, contrary: &str) -> Self {
        let a = self.atom(name);
        let c = self.atom(contrary);
        self.contraries.push((a, c));
        self
    }

    pub fn rule<'a>(mut self, head: &str, body: impl IntoIterator<Item = &'a str>) -> Self {
        let h = self.atom(head);
        let b: Vec<AtomId> = body.into_iter().map(|n| self.atom(n)).collect();
        self.rules.push(Rule::new(h, b));
        self
    }

    pub fn build(self) -> Result<AbaFramework> {
        let mut labels = Labels::new(1);
        for (i, n) in self.names.iter().enumerate() {
            labels.set(i, n.clone());
        }
        Ok(AbaFramework::new(self.names.len(), self.contraries, self.rules)?.with_labels(labels))
    }
}

impl AbaFramework {
    /// Looks up an atom by name; panics if absent. Test helper.
    pub fn atom(&self, name: &str) -> AtomId {
        self.resolve_atom(name)
            .unwrap_or_else(|| panic!("no atom named {name:?}"))
    }

    /// Builds an assumption set from names; panics on unknown names.
    pub fn set_of<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> AssumptionSet {
        names.into_iter().map(|n| self.atom(n)).collect()
    }

    /// Renders a set as `[x,y]` using atom names.
    pub fn display_set(&self, s: &AssumptionSet) -> String {
        let names: Vec<String> = s.iter().map(|a| self.atom_name(a)).collect();
        format!("[{}]", names.join(","))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Four assumptions with two rules deriving `d` from `c` and contraries
    /// from single assumptions.
    pub fn example_2_2() -> AbaFramework {
        AbaBuilder::new()
            .assumption("a", "na")
            .assumption("b", "nb")
            .assumption("c", "nc")
            .assumption("d", "nd")
            .rule("nb", ["a"])
            .rule("na", ["b"])
            .rule("nd", ["b"])
            .rule("nb", ["c"])
            .rule("d", ["c"])
            .build()
            .unwrap()
    }

    /// `c` is derivable from `a` and `b` jointly and attacks itself.
    pub fn example_4_4() -> AbaFramework {
        AbaBuilder::new()
            .assumption("a", "na")
            .assumption("b", "nb")
            .assumption("c", "nc")
            .rule("p", ["a"])
            .rule("q", ["b"])
            .rule("c", ["p", "q"])
            .rule("nc", ["c"])
            .build()
            .unwrap()
    }

    pub fn climate() -> AbaFramework {
        AbaBuilder::new()
            .assumption("cc", "not_cc")
            .assumption("mr", "not_mr")
            .assumption("sr", "not_sr")
            .rule("mr", ["cc"])
            .rule("not_mr", ["sr"])
            .rule("not_sr", ["s"])
            .rule("s", [])
            .build()
            .unwrap()
    }
}

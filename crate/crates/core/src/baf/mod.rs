//! Bipolar argumentation frameworks under closed-extension semantics.
//!
//! Supports are read deductively: accepting an argument forces accepting
//! everything it supports. Extensions must be closed under outgoing
//! supports, and defense counter-attacks the closure of each attacker.

mod af;
mod dot;
mod format;
mod pbaf;
mod search;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::idset::{ArgId, IdSet};
use crate::labels::Labels;
use crate::semantics::{decide_over, DefenseMode, Semantics, Task, DEFAULT_MAX_ENUMERATION};

pub use af::af_extensions;
pub use dot::{baf_to_dot, pbaf_to_dot};
pub use format::{parse_baf, parse_pbaf, write_baf, write_pbaf};
pub use pbaf::{Pbaf, PremiseSet};

/// A set of arguments.
pub type Extension = IdSet<ArgId>;

/// A BAF over arguments `0..n_args`.
#[derive(Clone, Debug)]
pub struct Baf {
    n_args: usize,
    attacks: Vec<(ArgId, ArgId)>,
    supports: Vec<(ArgId, ArgId)>,
    labels: Labels,
    att_out: Vec<FixedBitSet>,
    att_in: Vec<FixedBitSet>,
    sup_out: Vec<Vec<usize>>,
    /// `cl({a})` for every argument.
    cl_single: Vec<FixedBitSet>,
    /// Arguments whose closure contains a given argument.
    rev_cl: Vec<FixedBitSet>,
    /// Arguments attacking some member of `cl({b})`.
    counter: Vec<FixedBitSet>,
}

impl PartialEq for Baf {
    fn eq(&self, other: &Self) -> bool {
        self.n_args == other.n_args
            && self.attacks == other.attacks
            && self.supports == other.supports
            && self.labels == other.labels
    }
}

impl Eq for Baf {}

impl Baf {
    /// Builds a BAF; duplicate edges are collapsed and self-loops allowed.
    pub fn new(
        n_args: usize,
        attacks: impl IntoIterator<Item = (ArgId, ArgId)>,
        supports: impl IntoIterator<Item = (ArgId, ArgId)>,
    ) -> Result<Self> {
        let check = |(x, y): (ArgId, ArgId)| {
            if x.0 >= n_args || y.0 >= n_args {
                Err(Error::Invalid(format!(
                    "edge ({x}, {y}) out of range for {n_args} arguments"
                )))
            } else {
                Ok((x, y))
            }
        };
        let mut attacks = attacks.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        let mut supports = supports.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        attacks.sort_unstable();
        attacks.dedup();
        supports.sort_unstable();
        supports.dedup();

        let empty = FixedBitSet::with_capacity(n_args);
        let mut att_out = vec![empty.clone(); n_args];
        let mut att_in = vec![empty.clone(); n_args];
        let mut sup_out = vec![Vec::new(); n_args];
        for &(x, y) in &attacks {
            att_out[x.0].insert(y.0);
            att_in[y.0].insert(x.0);
        }
        for &(x, y) in &supports {
            sup_out[x.0].push(y.0);
        }

        let cl_single: Vec<FixedBitSet> = (0..n_args)
            .map(|a| {
                let mut seen = empty.clone();
                seen.insert(a);
                let mut stack = vec![a];
                while let Some(x) = stack.pop() {
                    for &y in &sup_out[x] {
                        if !seen.put(y) {
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect();
        let mut rev_cl = vec![empty.clone(); n_args];
        for (b, cl) in cl_single.iter().enumerate() {
            for x in cl.ones() {
                rev_cl[x].insert(b);
            }
        }
        let counter = cl_single
            .iter()
            .map(|cl| {
                let mut c = empty.clone();
                for x in cl.ones() {
                    c.union_with(&att_in[x]);
                }
                c
            })
            .collect();

        Ok(Self {
            n_args,
            attacks,
            supports,
            labels: Labels::new(0),
            att_out,
            att_in,
            sup_out,
            cl_single,
            rev_cl,
            counter,
        })
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = labels;
        self
    }

    pub fn n_args(&self) -> usize {
        self.n_args
    }

    /// Attack pairs, sorted.
    pub fn attacks(&self) -> &[(ArgId, ArgId)] {
        &self.attacks
    }

    /// Support pairs, sorted.
    pub fn supports(&self) -> &[(ArgId, ArgId)] {
        &self.supports
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn arg_name(&self, a: ArgId) -> String {
        self.labels.display(a.0)
    }

    /// Resolves a name or 0-based id.
    pub fn resolve_arg(&self, token: &str) -> Option<ArgId> {
        self.labels
            .lookup(token)
            .filter(|&i| i < self.n_args)
            .map(ArgId)
    }

    pub fn all_args(&self) -> Extension {
        IdSet::full(self.n_args)
    }

    pub fn attackers(&self, a: ArgId) -> Extension {
        IdSet::from_bits(self.att_in[a.0].clone())
    }

    /// Least superset of `e` closed under outgoing supports.
    pub fn closure(&self, e: &Extension) -> Extension {
        let mut out = self.bits_of(e);
        let mut frontier: Vec<usize> = out.ones().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in frontier {
                for &y in &self.sup_out[x] {
                    if !out.put(y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        IdSet::from_bits(out)
    }

    pub fn is_closed(&self, e: &Extension) -> bool {
        e.iter()
            .all(|x| self.sup_out[x.0].iter().all(|&y| e.contains(ArgId(y))))
    }

    /// Every argument attacked by some member of `e`.
    pub fn range(&self, e: &Extension) -> Extension {
        IdSet::from_bits(self.range_bits(&self.bits_of(e)))
    }

    /// True if some member of `e` attacks some member of `t`.
    pub fn set_attacks(&self, e: &Extension, t: &Extension) -> bool {
        self.range(e).intersects(t)
    }

    pub fn is_conflict_free(&self, e: &Extension) -> bool {
        !self.set_attacks(e, e)
    }

    /// Whether `e` defends `a`, counter-attacking the closure of each
    /// attacker.
    pub fn defends(&self, e: &Extension, a: ArgId) -> bool {
        let range = self.range_bits(&self.bits_of(e));
        self.defends_bits(&range, a.0)
    }

    /// Defense in an explicit mode. [`DefenseMode::ClosedSets`] ranges over
    /// all subsets and is guarded like enumeration.
    pub fn defends_with(&self, e: &Extension, a: ArgId, mode: DefenseMode) -> Result<bool> {
        match mode {
            DefenseMode::AttackerClosure => Ok(self.defends(e, a)),
            DefenseMode::ClosedSets => {
                self.check_guard(DEFAULT_MAX_ENUMERATION)?;
                let range = self.range(e);
                let target: Extension = std::iter::once(a).collect();
                for mask in 0..(1u64 << self.n_args) {
                    let s: Extension = (0..self.n_args)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(ArgId)
                        .collect();
                    if self.is_closed(&s) && self.set_attacks(&s, &target) && !range.intersects(&s) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// The characteristic function: all arguments `e` defends.
    pub fn characteristic(&self, e: &Extension) -> Extension {
        let range = self.range_bits(&self.bits_of(e));
        IdSet::from_bits(self.gamma_bits(&range))
    }

    pub fn is_admissible(&self, e: &Extension) -> bool {
        self.is_conflict_free(e) && self.is_closed(e) && e.is_subset(&self.characteristic(e))
    }

    pub fn is_complete(&self, e: &Extension) -> bool {
        self.is_conflict_free(e) && self.is_closed(e) && *e == self.characteristic(e)
    }

    pub fn is_stable(&self, e: &Extension) -> bool {
        self.is_conflict_free(e)
            && self.is_closed(e)
            && self.range(e) == self.all_args().difference(e)
    }

    /// All σ-extensions in canonical order, at most
    /// [`DEFAULT_MAX_ENUMERATION`] arguments.
    pub fn extensions(&self, sigma: Semantics) -> Result<Vec<Extension>> {
        self.extensions_bounded(sigma, DEFAULT_MAX_ENUMERATION)
    }

    /// As [`extensions`](Self::extensions) with an explicit guard.
    pub fn extensions_bounded(&self, sigma: Semantics, max_args: usize) -> Result<Vec<Extension>> {
        self.check_guard(max_args)?;
        Ok(search::extensions(self, None, sigma))
    }

    pub fn decide(&self, sigma: Semantics, task: Task, query: &Extension) -> Result<bool> {
        self.decide_bounded(sigma, task, query, DEFAULT_MAX_ENUMERATION)
    }

    /// Decides a task; `query` is a single argument for credulous and
    /// skeptical acceptance and a set for verification.
    pub fn decide_bounded(
        &self,
        sigma: Semantics,
        task: Task,
        query: &Extension,
        max_args: usize,
    ) -> Result<bool> {
        check_query(self.n_args, task, query)?;
        let family = self.extensions_bounded(sigma, max_args)?;
        let member = query.iter().next();
        Ok(decide_over(
            &family,
            task,
            |e| member.is_some_and(|a| e.contains(a)),
            Some(query),
        ))
    }

    /// Looks up an argument by name; panics if absent. Test helper.
    pub fn arg(&self, name: &str) -> ArgId {
        self.resolve_arg(name)
            .unwrap_or_else(|| panic!("no argument named {name:?}"))
    }

    /// Builds an extension from names; panics on unknown names.
    pub fn set_of<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Extension {
        names.into_iter().map(|n| self.arg(n)).collect()
    }

    /// Renders `[x,y]` with members in id order.
    pub fn display_set(&self, e: &Extension) -> String {
        let names: Vec<String> = e.iter().map(|a| self.arg_name(a)).collect();
        format!("[{}]", names.join(","))
    }

    pub(crate) fn check_guard(&self, limit: usize) -> Result<()> {
        if self.n_args > limit {
            return Err(Error::TooLarge {
                guard: "max-args",
                size: self.n_args,
                limit,
            });
        }
        Ok(())
    }

    fn bits_of(&self, e: &Extension) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n_args);
        for x in e.iter().filter(|x| x.0 < self.n_args) {
            bits.insert(x.0);
        }
        bits
    }

    pub(crate) fn range_bits(&self, e: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.n_args);
        for x in e.ones() {
            out.union_with(&self.att_out[x]);
        }
        out
    }

    pub(crate) fn defends_bits(&self, range: &FixedBitSet, a: usize) -> bool {
        self.att_in[a]
            .ones()
            .all(|b| !range.is_disjoint(&self.cl_single[b]))
    }

    pub(crate) fn gamma_bits(&self, range: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.n_args);
        for a in 0..self.n_args {
            if self.defends_bits(range, a) {
                out.insert(a);
            }
        }
        out
    }
}

pub(crate) fn check_query<I: crate::idset::DenseId>(
    n: usize,
    task: Task,
    query: &IdSet<I>,
) -> Result<()> {
    if query.bound() > n {
        return Err(Error::InvalidQuery(format!(
            "query {query:?} references an argument outside 0..{n}"
        )));
    }
    if task != Task::Ver && query.len() != 1 {
        return Err(Error::InvalidQuery(format!(
            "{task} expects a single argument, got {}",
            query.len()
        )));
    }
    Ok(())
}

/// Builds BAFs from named arguments; convenient in tests and examples.
#[derive(Default)]
pub struct BafBuilder {
    names: Vec<String>,
    attacks: Vec<(ArgId, ArgId)>,
    supports: Vec<(ArgId, ArgId)>,
}

impl BafBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn arg(&mut self, name: &str) -> ArgId {
        match self.names.iter().position(|n| n == name) {
            Some(i) => ArgId(i),
            None => {
                self.names.push(name.to_string());
                ArgId(self.names.len() - 1)
            }
        }
    }

    /// Declares arguments in order so that ids are predictable.
    pub fn args<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        for n in names {
            self.arg(n);
        }
        self
    }

    pub fn attack(mut self, from: &str, to: &str) -> Self {
        let edge = (self.arg(from), self.arg(to));
        self.attacks.push(edge);
        self
    }

    pub fn support(mut self, from: &str, to: &str) -> Self {
        let edge = (self.arg(from), self.arg(to));
        self.supports.push(edge);
        self
    }

    pub fn build(self) -> Result<Baf> {
        let mut labels = Labels::new(0);
        for (i, n) in self.names.iter().enumerate() {
            labels.set(i, n.clone());
        }
        Ok(Baf::new(self.names.len(), self.attacks, self.supports)?.with_labels(labels))
    }
}

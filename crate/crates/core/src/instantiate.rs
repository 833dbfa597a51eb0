//! Translation of an ABA framework into a BAF and a pBAF over its
//! arguments.
//!
//! An argument attacks another if its conclusion is the contrary of an
//! assumption in the other's support. An argument supports the base
//! argument `({a}, a)` of every assumption `a` in the closure of its own
//! support. In the pBAF each argument's premises are its support.

use std::fmt::Write as _;

use crate::aba::{AbaFramework, Argument, AssumptionSet};
use crate::baf::{write_baf, write_pbaf, Baf, Extension, Pbaf, PremiseSet};
use crate::error::Result;
use crate::idset::{ArgId, AtomId, PremiseId};
use crate::labels::Labels;

/// The instantiated BAF and pBAF of a framework, with the table mapping
/// abstract arguments back to `(support, conclusion)` pairs.
///
/// Base arguments take ids `0..k` in assumption order.
#[derive(Clone, Debug)]
pub struct Instantiation {
    pbaf: Pbaf,
    arguments: Vec<Argument>,
    assumptions: Vec<AtomId>,
    atom_labels: Labels,
}

/// Builds the instantiated frameworks, enumerating at most `cap` arguments.
pub fn instantiate(d: &AbaFramework, cap: usize) -> Result<Instantiation> {
    let arguments = d.enumerate_arguments(cap)?;
    let n = arguments.len();
    let k = d.assumptions().len();

    let mut by_conclusion: Vec<Vec<ArgId>> = vec![Vec::new(); d.n_atoms()];
    for (i, arg) in arguments.iter().enumerate() {
        by_conclusion[arg.conclusion.0].push(ArgId(i));
    }
    let mut attacks = Vec::new();
    for (j, target) in arguments.iter().enumerate() {
        for a in target.support.iter() {
            let c = d.contrary(a).expect("supports hold assumptions");
            attacks.extend(by_conclusion[c.0].iter().map(|&x| (x, ArgId(j))));
        }
    }
    let mut supports = Vec::new();
    for (i, arg) in arguments.iter().enumerate() {
        for a in d.closure(&arg.support).iter() {
            let base = ArgId(d.assumption_index(a).expect("closure holds assumptions"));
            if base.0 != i {
                supports.push((ArgId(i), base));
            }
        }
    }

    let mut labels = Labels::new(0);
    for (i, arg) in arguments.iter().enumerate() {
        let name = if i < k {
            d.atom_name(arg.conclusion)
        } else {
            format!("A{}", i - k + 1)
        };
        if !labels.set(i, name) {
            labels.set(i, format!("arg{i}"));
        }
    }
    let baf = Baf::new(n, attacks, supports)?.with_labels(labels);
    let premises: Vec<PremiseSet> = arguments
        .iter()
        .map(|arg| arg.support.iter().map(|a| PremiseId(a.0)).collect())
        .collect();
    let pbaf = Pbaf::new(baf, premises)?.with_premise_labels(d.labels().clone());
    Ok(Instantiation {
        pbaf,
        arguments,
        assumptions: d.assumptions().to_vec(),
        atom_labels: d.labels().clone(),
    })
}

impl Instantiation {
    pub fn baf(&self) -> &Baf {
        self.pbaf.baf()
    }

    pub fn pbaf(&self) -> &Pbaf {
        &self.pbaf
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    pub fn argument(&self, x: ArgId) -> &Argument {
        &self.arguments[x.0]
    }

    /// The base argument `({a}, a)` of an assumption.
    pub fn base(&self, a: AtomId) -> Option<ArgId> {
        self.assumptions.binary_search(&a).ok().map(ArgId)
    }

    /// Looks up the id of an argument, if it was built.
    pub fn id_of(&self, arg: &Argument) -> Option<ArgId> {
        self.arguments.iter().position(|x| x == arg).map(ArgId)
    }

    /// Every argument whose support lies within `s`.
    pub fn arguments_for(&self, s: &AssumptionSet) -> Extension {
        (0..self.arguments.len())
            .filter(|&i| self.arguments[i].support.is_subset(s))
            .map(ArgId)
            .collect()
    }

    /// Union of the supports of the members of `e`.
    pub fn assumptions_of(&self, e: &Extension) -> AssumptionSet {
        let mut out = AssumptionSet::new();
        for x in e.iter() {
            out.union_with(&self.arguments[x.0].support);
        }
        out
    }

    /// True if `e` contains every argument buildable from its assumptions.
    pub fn is_assumption_exhaustive(&self, e: &Extension) -> bool {
        let asms = self.assumptions_of(e);
        (0..self.arguments.len())
            .all(|i| e.contains(ArgId(i)) || !self.arguments[i].support.is_subset(&asms))
    }

    /// `arg <id> <conclusion> <s1> ... <sk>` lines, atoms 1-based.
    pub fn sidecar(&self) -> String {
        let mut out = String::new();
        for (i, arg) in self.arguments.iter().enumerate() {
            let _ = write!(out, "arg {i} {}", arg.conclusion.0 + 1);
            for a in arg.support.iter() {
                let _ = write!(out, " {}", a.0 + 1);
            }
            out.push('\n');
        }
        out
    }

    /// The BAF text format followed by the sidecar table.
    pub fn write_baf(&self) -> String {
        write_baf(self.baf()) + &self.sidecar()
    }

    /// The pBAF text format followed by the sidecar table.
    pub fn write_pbaf(&self) -> String {
        write_pbaf(&self.pbaf) + &self.sidecar()
    }

    /// Renders an argument as `{a,b} |- p` with atom names.
    pub fn describe(&self, x: ArgId) -> String {
        let arg = &self.arguments[x.0];
        let support: Vec<String> = arg
            .support
            .iter()
            .map(|a| self.atom_labels.display(a.0))
            .collect();
        format!(
            "{{{}}} |- {}",
            support.join(","),
            self.atom_labels.display(arg.conclusion.0)
        )
    }
}

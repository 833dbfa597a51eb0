use fixedbitset::FixedBitSet;

use super::search;
use super::{check_query, Baf, Extension};
use crate::error::{Error, Result};
use crate::idset::{ArgId, IdSet, PremiseId};
use crate::labels::Labels;
use crate::semantics::{decide_over, Semantics, Task, DEFAULT_MAX_ENUMERATION};

/// A set of premises.
pub type PremiseSet = IdSet<PremiseId>;

/// A BAF whose arguments carry premise sets.
///
/// Admissibility, completeness and preference additionally require
/// exhaustiveness: an extension contains every argument whose premises it
/// already covers. Stability is inherited from the underlying BAF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pbaf {
    baf: Baf,
    premises: Vec<PremiseSet>,
    premise_labels: Labels,
    premise_bits: Vec<FixedBitSet>,
}

impl Pbaf {
    pub fn new(baf: Baf, premises: Vec<PremiseSet>) -> Result<Self> {
        if premises.len() != baf.n_args() {
            return Err(Error::Invalid(format!(
                "{} premise sets for {} arguments",
                premises.len(),
                baf.n_args()
            )));
        }
        let width = premises.iter().map(IdSet::bound).max().unwrap_or(0);
        let premise_bits = premises
            .iter()
            .map(|p| {
                let mut bits = FixedBitSet::with_capacity(width);
                for x in p.iter() {
                    bits.insert(x.0);
                }
                bits
            })
            .collect();
        Ok(Self {
            baf,
            premises,
            premise_labels: Labels::new(1),
            premise_bits,
        })
    }

    /// Names premises; ids display 1-based when unnamed.
    pub fn with_premise_labels(mut self, labels: Labels) -> Self {
        self.premise_labels = labels;
        self
    }

    pub fn baf(&self) -> &Baf {
        &self.baf
    }

    pub fn premises(&self, a: ArgId) -> &PremiseSet {
        &self.premises[a.0]
    }

    pub fn all_premises(&self) -> &[PremiseSet] {
        &self.premises
    }

    pub fn premise_labels(&self) -> &Labels {
        &self.premise_labels
    }

    pub fn premise_name(&self, p: PremiseId) -> String {
        self.premise_labels.display(p.0)
    }

    /// Union of the premises of the members of `e`.
    pub fn premise_union(&self, e: &Extension) -> PremiseSet {
        let mut out = PremiseSet::new();
        for a in e.iter() {
            out.union_with(&self.premises[a.0]);
        }
        out
    }

    pub fn is_exhaustive(&self, e: &Extension) -> bool {
        let covered = self.premise_union(e);
        (0..self.baf.n_args())
            .map(ArgId)
            .all(|a| e.contains(a) || !self.premises[a.0].is_subset(&covered))
    }

    pub fn is_admissible(&self, e: &Extension) -> bool {
        self.is_exhaustive(e) && self.baf.is_admissible(e)
    }

    pub fn is_complete(&self, e: &Extension) -> bool {
        self.is_exhaustive(e) && self.baf.is_complete(e)
    }

    pub fn is_stable(&self, e: &Extension) -> bool {
        self.baf.is_stable(e)
    }

    pub fn extensions(&self, sigma: Semantics) -> Result<Vec<Extension>> {
        self.extensions_bounded(sigma, DEFAULT_MAX_ENUMERATION)
    }

    pub fn extensions_bounded(&self, sigma: Semantics, max_args: usize) -> Result<Vec<Extension>> {
        self.baf.check_guard(max_args)?;
        Ok(search::extensions(&self.baf, Some(&self.premise_bits), sigma))
    }

    pub fn decide(&self, sigma: Semantics, task: Task, query: &Extension) -> Result<bool> {
        self.decide_bounded(sigma, task, query, DEFAULT_MAX_ENUMERATION)
    }

    pub fn decide_bounded(
        &self,
        sigma: Semantics,
        task: Task,
        query: &Extension,
        max_args: usize,
    ) -> Result<bool> {
        check_query(self.baf.n_args(), task, query)?;
        let family = self.extensions_bounded(sigma, max_args)?;
        let member = query.iter().next();
        Ok(decide_over(
            &family,
            task,
            |e| member.is_some_and(|a| e.contains(a)),
            Some(query),
        ))
    }

    /// Renders a premise set as `{p,q}` using premise names.
    pub fn display_premises(&self, p: &PremiseSet) -> String {
        let names: Vec<String> = p.iter().map(|x| self.premise_name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

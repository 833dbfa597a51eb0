use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{AbaFramework, AssumptionSet};
use crate::error::{Error, Result};
use crate::idset::AtomId;

/// Default bound on the number of arguments built by instantiation.
pub const DEFAULT_ARGUMENT_CAP: usize = 5000;

/// A derivation of `conclusion` from exactly the assumptions in `support`,
/// with its tree structure forgotten.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Argument {
    pub support: AssumptionSet,
    pub conclusion: AtomId,
}

impl Argument {
    /// The base argument `({a}, a)`.
    pub fn base(a: AtomId) -> Self {
        Self {
            support: std::iter::once(a).collect(),
            conclusion: a,
        }
    }

    pub fn is_base(&self) -> bool {
        self.support.len() == 1 && self.support.contains(self.conclusion)
    }
}

impl AbaFramework {
    /// Every distinct `(support, conclusion)` pair with a derivation.
    ///
    /// Base arguments come first in assumption order. The rest are ordered
    /// by the first rule that concludes them, then by support size and
    /// support.
    pub fn enumerate_arguments(&self, cap: usize) -> Result<Vec<Argument>> {
        // Per atom: support -> smallest index of a rule deriving it.
        let mut found: Vec<HashMap<AssumptionSet, usize>> = vec![HashMap::new(); self.n_atoms];
        let mut count = 0usize;
        let mut add = |found: &mut Vec<HashMap<AssumptionSet, usize>>,
                       atom: AtomId,
                       s: AssumptionSet,
                       rule: usize| {
            match found[atom.0].get_mut(&s) {
                Some(r) => {
                    *r = (*r).min(rule);
                    Ok(false)
                }
                None => {
                    found[atom.0].insert(s, rule);
                    count += 1;
                    if count > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    Ok(true)
                }
            }
        };

        for &a in &self.assumptions {
            add(&mut found, a, std::iter::once(a).collect(), usize::MAX)?;
        }
        loop {
            let mut changed = false;
            for (r, rule) in self.rules.iter().enumerate() {
                let mut partial: HashSet<AssumptionSet> = HashSet::from([AssumptionSet::new()]);
                for b in &rule.body {
                    let mut next = HashSet::new();
                    for s in &partial {
                        for t in found[b.0].keys() {
                            next.insert(s.union(t));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for s in partial {
                    changed |= add(&mut found, rule.head, s, r)?;
                }
            }
            if !changed {
                break;
            }
        }

        let mut base = Vec::with_capacity(self.assumptions.len());
        let mut rest = Vec::new();
        for (atom, map) in found.into_iter().enumerate() {
            for (support, rule) in map {
                let arg = Argument {
                    support,
                    conclusion: AtomId(atom),
                };
                if arg.is_base() {
                    base.push(arg);
                } else {
                    rest.push((rule, arg));
                }
            }
        }
        base.sort_by_key(|a| a.conclusion);
        rest.sort_by(|(r, x), (q, y)| {
            (r, x.support.len(), &x.support, x.conclusion).cmp(&(
                q,
                y.support.len(),
                &y.support,
                y.conclusion,
            ))
        });
        base.extend(rest.into_iter().map(|(_, arg)| arg));
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{AbaBuilder, Rule};
    use super::*;

    fn arg(d: &AbaFramework, support: &[&str], conclusion: &str) -> Argument {
        Argument {
            support: d.set_of(support.iter().copied()),
            conclusion: d.atom(conclusion),
        }
    }

    #[test]
    fn example_2_2_has_nine_arguments() {
        let d = example_2_2();
        let args = d.enumerate_arguments(DEFAULT_ARGUMENT_CAP).unwrap();
        assert_eq!(args.len(), 9);
        let expected = [
            arg(&d, &["a"], "a"),
            arg(&d, &["b"], "b"),
            arg(&d, &["c"], "c"),
            arg(&d, &["d"], "d"),
            arg(&d, &["a"], "nb"),
            arg(&d, &["b"], "na"),
            arg(&d, &["b"], "nd"),
            arg(&d, &["c"], "nb"),
            arg(&d, &["c"], "d"),
        ];
        for e in &expected {
            assert!(args.contains(e), "missing {e:?}");
        }
        assert_eq!(&args[..4], &expected[..4]);
    }

    #[test]
    fn single_assumption_without_rules() {
        let d = AbaBuilder::new().assumption("a", "x").build().unwrap();
        assert_eq!(d.enumerate_arguments(10).unwrap(), vec![Argument::base(d.atom("a"))]);
    }

    #[test]
    fn example_4_4_joint_arguments() {
        let d = example_4_4();
        let args = d.enumerate_arguments(DEFAULT_ARGUMENT_CAP).unwrap();
        assert!(args.contains(&arg(&d, &["a", "b"], "c")));
        assert!(args.contains(&arg(&d, &["a", "b"], "nc")));
        assert_eq!(args.len(), 8);
    }

    #[test]
    fn facts_give_empty_supports() {
        let d = climate();
        let args = d.enumerate_arguments(DEFAULT_ARGUMENT_CAP).unwrap();
        assert!(args.contains(&arg(&d, &[], "s")));
        assert!(args.contains(&arg(&d, &[], "not_sr")));
        assert!(args.contains(&arg(&d, &["cc"], "mr")));
    }

    #[test]
    fn cap_is_enforced() {
        let d = example_2_2();
        assert_eq!(d.enumerate_arguments(3).unwrap_err(), Error::CapExceeded { cap: 3 });
        assert_eq!(d.enumerate_arguments(9).unwrap().len(), 9);
    }

    #[test]
    fn rule_order_does_not_matter() {
        let d = example_4_4();
        let mut reversed: Vec<Rule> = d.rules().to_vec();
        reversed.reverse();
        let contraries = d.assumptions().iter().map(|&a| (a, d.contrary(a).unwrap()));
        let e = AbaFramework::new(d.n_atoms(), contraries, reversed).unwrap();
        let sorted = |mut v: Vec<Argument>| {
            v.sort_by(|x, y| (&x.support, x.conclusion).cmp(&(&y.support, y.conclusion)));
            v
        };
        assert_eq!(
            sorted(d.enumerate_arguments(100).unwrap()),
            sorted(e.enumerate_arguments(100).unwrap())
        );
    }
}

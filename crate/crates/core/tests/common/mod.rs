//! Literal subset oracles written directly from the definitions. They read
//! only the raw edges, rules and premises of a framework and enumerate
//! every subset, so they share no code with the solvers under test.

#![allow(dead_code)]

use bipolar_aba::{AbaFramework, ArgId, AtomId, Baf, Extension, IdSet, Pbaf, Semantics};

pub type Mask = u32;

fn members(mask: Mask, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| mask >> i & 1 == 1)
}

fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

fn maximal(family: &[Mask]) -> Vec<Mask> {
    family
        .iter()
        .copied()
        .filter(|&e| !family.iter().any(|&o| o != e && subset(e, o)))
        .collect()
}

fn grounded(complete: &[Mask]) -> Vec<Mask> {
    vec![complete.iter().fold(
        if complete.is_empty() { 0 } else { Mask::MAX },
        |acc, &e| acc & e,
    )]
}

/// A BAF as plain edge lists, optionally with premises.
pub struct BafOracle {
    pub n: usize,
    pub attacks: Vec<(usize, usize)>,
    pub supports: Vec<(usize, usize)>,
    pub premises: Option<Vec<u64>>,
}

impl BafOracle {
    pub fn of(f: &Baf) -> Self {
        Self {
            n: f.n_args(),
            attacks: f.attacks().iter().map(|&(x, y)| (x.0, y.0)).collect(),
            supports: f.supports().iter().map(|&(x, y)| (x.0, y.0)).collect(),
            premises: None,
        }
    }

    pub fn of_pbaf(pf: &Pbaf) -> Self {
        let mut o = Self::of(pf.baf());
        o.premises = Some(
            pf.all_premises()
                .iter()
                .map(|p| p.iter().fold(0u64, |m, x| m | 1 << x.0))
                .collect(),
        );
        o
    }

    pub fn all(&self) -> Mask {
        ((1u64 << self.n) - 1) as Mask
    }

    pub fn closure(&self, e: Mask) -> Mask {
        let mut cur = e;
        loop {
            let mut next = cur;
            for &(x, y) in &self.supports {
                if cur >> x & 1 == 1 {
                    next |= 1 << y;
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_closed(&self, e: Mask) -> bool {
        self.closure(e) == e
    }

    pub fn attacks(&self, s: Mask, t: Mask) -> bool {
        self.attacks
            .iter()
            .any(|&(x, y)| s >> x & 1 == 1 && t >> y & 1 == 1)
    }

    pub fn range(&self, e: Mask) -> Mask {
        self.attacks
            .iter()
            .filter(|&&(x, _)| e >> x & 1 == 1)
            .fold(0, |m, &(_, y)| m | 1 << y)
    }

    pub fn is_conflict_free(&self, e: Mask) -> bool {
        !self.attacks(e, e)
    }

    /// `e` attacks every closed set that attacks `a`.
    pub fn defends(&self, e: Mask, a: usize) -> bool {
        (0..=self.all()).all(|s| {
            !(self.is_closed(s) && self.attacks(s, 1 << a)) || self.attacks(e, s)
        })
    }

    pub fn gamma(&self, e: Mask) -> Mask {
        (0..self.n)
            .filter(|&a| self.defends(e, a))
            .fold(0, |m, a| m | 1 << a)
    }

    pub fn is_exhaustive(&self, e: Mask) -> bool {
        let Some(p) = &self.premises else {
            return true;
        };
        let covered = members(e, self.n).fold(0u64, |m, a| m | p[a]);
        (0..self.n).all(|a| e >> a & 1 == 1 || p[a] & !covered != 0)
    }

    pub fn is_admissible(&self, e: Mask) -> bool {
        self.is_conflict_free(e)
            && self.is_closed(e)
            && self.is_exhaustive(e)
            && members(e, self.n).all(|a| self.defends(e, a))
    }

    pub fn extensions(&self, sigma: Semantics) -> Vec<Mask> {
        let sets = 0..=self.all();
        match sigma {
            Semantics::Cf => sets.filter(|&e| self.is_conflict_free(e)).collect(),
            Semantics::Ad => sets.filter(|&e| self.is_admissible(e)).collect(),
            Semantics::Co => sets
                .filter(|&e| self.is_admissible(e) && self.gamma(e) == e)
                .collect(),
            Semantics::Pr => maximal(&self.extensions(Semantics::Ad)),
            Semantics::Gr => grounded(&self.extensions(Semantics::Co)),
            Semantics::Stb => sets
                .filter(|&e| {
                    self.is_conflict_free(e)
                        && self.is_closed(e)
                        && self.range(e) == self.all() & !e
                })
                .collect(),
        }
    }
}

/// An ABA framework as plain rules and contraries.
pub struct AbaOracle {
    pub n_atoms: usize,
    pub assumptions: Vec<usize>,
    pub contrary: Vec<usize>,
    pub rules: Vec<(usize, Vec<usize>)>,
}

impl AbaOracle {
    pub fn of(d: &AbaFramework) -> Self {
        let assumptions: Vec<usize> = d.assumptions().iter().map(|a| a.0).collect();
        Self {
            n_atoms: d.n_atoms(),
            contrary: assumptions
                .iter()
                .map(|&a| d.contrary(AtomId(a)).unwrap().0)
                .collect(),
            assumptions,
            rules: d
                .rules()
                .iter()
                .map(|r| (r.head.0, r.body.iter().map(|b| b.0).collect()))
                .collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.assumptions.len()
    }

    pub fn all(&self) -> Mask {
        ((1u64 << self.k()) - 1) as Mask
    }

    /// Derivable atoms, by naive iteration to a fixpoint.
    pub fn theory(&self, s: Mask) -> Vec<bool> {
        let mut known = vec![false; self.n_atoms];
        for i in members(s, self.k()) {
            known[self.assumptions[i]] = true;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for (head, body) in &self.rules {
                if !known[*head] && body.iter().all(|&b| known[b]) {
                    known[*head] = true;
                    changed = true;
                }
            }
        }
        known
    }

    pub fn closure(&self, s: Mask) -> Mask {
        let th = self.theory(s);
        (0..self.k())
            .filter(|&i| th[self.assumptions[i]])
            .fold(0, |m, i| m | 1 << i)
    }

    pub fn is_closed(&self, s: Mask) -> bool {
        self.closure(s) == s
    }

    pub fn attacks(&self, s: Mask, t: Mask) -> bool {
        let th = self.theory(s);
        members(t, self.k()).any(|i| th[self.contrary[i]])
    }

    pub fn is_conflict_free(&self, s: Mask) -> bool {
        !self.attacks(s, s)
    }

    /// `s` attacks every closed set that attacks assumption `i`.
    pub fn defends(&self, s: Mask, i: usize) -> bool {
        (0..=self.all()).all(|t| {
            !(self.is_closed(t) && self.attacks(t, 1 << i)) || self.attacks(s, t)
        })
    }

    pub fn is_admissible(&self, s: Mask) -> bool {
        self.is_closed(s)
            && self.is_conflict_free(s)
            && members(s, self.k()).all(|i| self.defends(s, i))
    }

    pub fn extensions(&self, sigma: Semantics) -> Vec<Mask> {
        let sets = 0..=self.all();
        match sigma {
            Semantics::Cf => sets.filter(|&s| self.is_conflict_free(s)).collect(),
            Semantics::Ad => sets.filter(|&s| self.is_admissible(s)).collect(),
            Semantics::Co => sets
                .filter(|&s| {
                    self.is_admissible(s)
                        && (0..self.k()).all(|i| s >> i & 1 == 1 || !self.defends(s, i))
                })
                .collect(),
            Semantics::Pr => maximal(&self.extensions(Semantics::Ad)),
            Semantics::Gr => grounded(&self.extensions(Semantics::Co)),
            Semantics::Stb => sets
                .filter(|&s| {
                    self.is_closed(s)
                        && self.is_conflict_free(s)
                        && (0..self.k()).all(|i| s >> i & 1 == 1 || self.attacks(s, 1 << i))
                })
                .collect(),
        }
    }

    /// Converts a mask over assumption positions into atoms.
    pub fn to_set(&self, s: Mask) -> IdSet<AtomId> {
        members(s, self.k()).map(|i| AtomId(self.assumptions[i])).collect()
    }
}

pub fn to_extension(e: Mask, n: usize) -> Extension {
    members(e, n).map(ArgId).collect()
}

/// Sorted family of extensions, for order-insensitive comparison.
pub fn sorted<T: Ord + Clone>(family: &[T]) -> Vec<T> {
    let mut v = family.to_vec();
    v.sort();
    v
}

pub const SEMANTICS: [Semantics; 6] = Semantics::ALL;

pub mod strategies {
    use bipolar_aba::{AbaFramework, ArgId, AtomId, Baf, Pbaf, PremiseId, PremiseSet, Rule};
    use proptest::prelude::*;

    pub fn baf(max_args: usize, supports: bool) -> impl Strategy<Value = Baf> {
        (1..=max_args).prop_flat_map(move |n| {
            let pair = (0..n, 0..n);
            let sup_len = if supports { 0..=n + 1 } else { 0..=0 };
            (
                Just(n),
                prop::collection::vec(pair.clone(), 0..=n * 2),
                prop::collection::vec(pair, sup_len),
            )
                .prop_map(|(n, att, sup)| {
                    Baf::new(
                        n,
                        att.into_iter().map(|(x, y)| (ArgId(x), ArgId(y))),
                        sup.into_iter().map(|(x, y)| (ArgId(x), ArgId(y))),
                    )
                    .unwrap()
                })
        })
    }

    pub fn pbaf(max_args: usize, max_premises: usize) -> impl Strategy<Value = Pbaf> {
        baf(max_args, true).prop_flat_map(move |f| {
            let n = f.n_args();
            prop::collection::vec(prop::collection::btree_set(0..max_premises, 0..=2), n)
                .prop_map(move |ps| {
                    let premises: Vec<PremiseSet> = ps
                        .into_iter()
                        .map(|p| p.into_iter().map(PremiseId).collect())
                        .collect();
                    Pbaf::new(f.clone(), premises).unwrap()
                })
        })
    }

    pub fn aba(max_atoms: usize, max_assumptions: usize, max_rules: usize) -> impl Strategy<Value = AbaFramework> {
        (1..=max_atoms)
            .prop_flat_map(move |n| (Just(n), 1..=max_assumptions.min(n)))
            .prop_flat_map(move |(n, k)| {
                let rule = (0..n, prop::collection::vec(0..n, 0..=2));
                (
                    Just(n),
                    prop::collection::vec(0..n, k),
                    prop::collection::vec(rule, 0..=max_rules),
                )
                    .prop_map(|(n, contraries, rules)| {
                        AbaFramework::new(
                            n,
                            contraries.into_iter().enumerate().map(|(a, c)| (AtomId(a), AtomId(c))),
                            rules
                                .into_iter()
                                .map(|(h, body)| Rule::new(AtomId(h), body.into_iter().map(AtomId))),
                        )
                        .unwrap()
                    })
            })
    }
}

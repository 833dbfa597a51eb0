//! Backtracking enumeration with IN/OUT propagation.
//!
//! Every propagation rule only discards assignments that cannot extend to
//! an extension of the requested kind, and every leaf is re-checked with the
//! literal predicates, so the search returns exactly the extensions.

use fixedbitset::FixedBitSet;

use super::{Baf, Extension};
use crate::idset::IdSet;
use crate::semantics::Semantics;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum Mode {
    ConflictFree,
    Admissible,
    Complete,
    Stable,
}

/// Enumerates σ-extensions of `f`, or of the pBAF with the given premise
/// sets when `premises` is present.
pub(crate) fn extensions(
    f: &Baf,
    premises: Option<&[FixedBitSet]>,
    sigma: Semantics,
) -> Vec<Extension> {
    let run = |mode: Mode| {
        let exhaustive = premises.filter(|_| matches!(mode, Mode::Admissible | Mode::Complete));
        let ctx = Ctx {
            f,
            premises: exhaustive,
            mode,
        };
        let mut found = Vec::new();
        let mut state = State {
            inn: FixedBitSet::with_capacity(f.n_args),
            out: FixedBitSet::with_capacity(f.n_args),
        };
        if ctx.propagate(&mut state) {
            ctx.branch(state, &mut found);
        }
        found.sort();
        found
    };
    match sigma {
        Semantics::Cf => run(Mode::ConflictFree),
        Semantics::Ad => run(Mode::Admissible),
        Semantics::Co => run(Mode::Complete),
        Semantics::Stb => run(Mode::Stable),
        Semantics::Pr => maximal(run(Mode::Admissible)),
        Semantics::Gr => {
            let co = run(Mode::Complete);
            let meet = co
                .into_iter()
                .reduce(|a, b| a.intersection(&b))
                .unwrap_or_default();
            vec![meet]
        }
    }
}

/// The ⊆-maximal members of a family, in canonical order.
pub(crate) fn maximal(mut family: Vec<Extension>) -> Vec<Extension> {
    family.sort_by_key(|e| std::cmp::Reverse(e.len()));
    let mut kept: Vec<Extension> = Vec::new();
    for e in family {
        if !kept.iter().any(|k| e.is_subset(k)) {
            kept.push(e);
        }
    }
    kept.sort();
    kept
}

#[derive(Clone)]
struct State {
    inn: FixedBitSet,
    out: FixedBitSet,
}

struct Ctx<'a> {
    f: &'a Baf,
    premises: Option<&'a [FixedBitSet]>,
    mode: Mode,
}

fn union_over(sets: &[FixedBitSet], members: &FixedBitSet, n: usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(n);
    for x in members.ones() {
        out.union_with(&sets[x]);
    }
    out
}

impl Ctx<'_> {
    fn branch(&self, state: State, found: &mut Vec<Extension>) {
        let n = self.f.n_args;
        let next = (0..n).find(|&x| !state.inn.contains(x) && !state.out.contains(x));
        let Some(x) = next else {
            let e = IdSet::from_bits(state.inn);
            if self.accepts(&e) {
                found.push(e);
            }
            return;
        };
        let mut with = state.clone();
        with.inn.insert(x);
        if self.propagate(&mut with) {
            self.branch(with, found);
        }
        let mut without = state;
        without.out.insert(x);
        if self.propagate(&mut without) {
            self.branch(without, found);
        }
    }

    fn accepts(&self, e: &Extension) -> bool {
        let f = self.f;
        let base = match self.mode {
            Mode::ConflictFree => f.is_conflict_free(e),
            Mode::Admissible => f.is_admissible(e),
            Mode::Complete => f.is_complete(e),
            Mode::Stable => f.is_stable(e),
        };
        base && self.premises.is_none_or(|p| exhaustive(p, e.bits()))
    }

    /// Applies the propagation rules to a fixpoint; false on contradiction.
    fn propagate(&self, s: &mut State) -> bool {
        let f = self.f;
        let n = f.n_args;
        loop {
            let before = (s.inn.count_ones(..), s.out.count_ones(..));
            if self.mode != Mode::ConflictFree {
                // Closed: supported arguments follow their supporters in,
                // and an excluded argument excludes everything supporting it.
                let cl = union_over(&f.cl_single, &s.inn, n);
                s.inn.union_with(&cl);
                let rev = union_over(&f.rev_cl, &s.out, n);
                s.out.union_with(&rev);
            }
            let attacked = union_over(&f.att_out, &s.inn, n);
            let attackers = union_over(&f.att_in, &s.inn, n);
            s.out.union_with(&attacked);
            s.out.union_with(&attackers);
            if !s.inn.is_disjoint(&s.out) {
                return false;
            }

            if matches!(self.mode, Mode::Admissible | Mode::Complete) {
                // Each attacker of a member needs a counter-attacker that
                // is still allowed in.
                for b in attackers.ones() {
                    let mut candidates = f.counter[b].clone();
                    candidates.difference_with(&s.out);
                    if candidates.is_clear() {
                        return false;
                    }
                    if candidates.is_disjoint(&s.inn) && candidates.count_ones(..) == 1 {
                        s.inn.union_with(&candidates);
                    }
                }
            }

            if self.mode == Mode::Complete && !self.propagate_complete(s, &attackers) {
                return false;
            }

            if self.mode == Mode::Stable {
                for o in s.out.clone().ones() {
                    let mut candidates = f.att_in[o].clone();
                    candidates.difference_with(&s.out);
                    if candidates.is_clear() {
                        return false;
                    }
                    if candidates.is_disjoint(&s.inn) && candidates.count_ones(..) == 1 {
                        s.inn.union_with(&candidates);
                    }
                }
                for a in 0..n {
                    if !s.inn.contains(a) && !s.out.contains(a) && f.att_in[a].is_subset(&s.out) {
                        s.inn.insert(a);
                    }
                }
            }

            if let Some(premises) = self.premises {
                if !propagate_exhaustive(premises, s, n) {
                    return false;
                }
            }

            if !s.inn.is_disjoint(&s.out) {
                return false;
            }
            if (s.inn.count_ones(..), s.out.count_ones(..)) == before {
                return true;
            }
        }
    }

    /// Rules valid when the final set equals the arguments it defends.
    fn propagate_complete(&self, s: &mut State, attackers: &FixedBitSet) -> bool {
        let f = self.f;
        let n = f.n_args;
        let range_in = f.range_bits(&s.inn);
        let mut upper = s.out.clone();
        upper.toggle_range(..);
        let range_upper = f.range_bits(&upper);
        for x in 0..n {
            // Attackers of members are countered by the final set, so an
            // argument attacked only by them is defended.
            let defended = f.att_in[x].is_subset(attackers) || f.defends_bits(&range_in, x);
            if defended {
                if s.out.contains(x) {
                    return false;
                }
                s.inn.insert(x);
            } else if !f.defends_bits(&range_upper, x) {
                if s.inn.contains(x) {
                    return false;
                }
                s.out.insert(x);
            }
        }
        // Admitting a must not make an excluded argument defended.
        let outs: Vec<usize> = s.out.ones().collect();
        for a in 0..n {
            if s.inn.contains(a) || s.out.contains(a) {
                continue;
            }
            let mut with_a = attackers.clone();
            with_a.union_with(&f.att_in[a]);
            if outs.iter().any(|&o| f.att_in[o].is_subset(&with_a)) {
                s.out.insert(a);
            }
        }
        true
    }
}

/// Exhaustiveness: a set must contain every argument whose premises it
/// covers.
fn propagate_exhaustive(premises: &[FixedBitSet], s: &mut State, n: usize) -> bool {
    let width = premises.iter().map(FixedBitSet::len).max().unwrap_or(0);
    let mut covered = FixedBitSet::with_capacity(width);
    for a in s.inn.ones() {
        covered.union_with(&premises[a]);
    }
    for x in 0..n {
        if premises[x].is_subset(&covered) {
            if s.out.contains(x) {
                return false;
            }
            s.inn.insert(x);
        }
    }
    let outs: Vec<usize> = s.out.ones().collect();
    for a in 0..n {
        if s.inn.contains(a) || s.out.contains(a) {
            continue;
        }
        let mut with_a = covered.clone();
        with_a.union_with(&premises[a]);
        if outs.iter().any(|&o| premises[o].is_subset(&with_a)) {
            s.out.insert(a);
        }
    }
    true
}

pub(crate) fn exhaustive(premises: &[FixedBitSet], e: &FixedBitSet) -> bool {
    let width = premises.iter().map(FixedBitSet::len).max().unwrap_or(0);
    let mut covered = FixedBitSet::with_capacity(width);
    for a in e.ones() {
        covered.union_with(&premises[a]);
    }
    (0..premises.len()).all(|x| e.contains(x) || !premises[x].is_subset(&covered))
}

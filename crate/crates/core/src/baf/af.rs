use super::{Baf, Extension};
use crate::error::{Error, Result};
use crate::idset::ArgId;
use crate::semantics::{Semantics, DEFAULT_MAX_ENUMERATION};

/// Classic Dung semantics of a support-free BAF, by subset enumeration.
///
/// Defense counter-attacks each attacker directly and grounded is the
/// least fixpoint of the characteristic function.
pub fn af_extensions(f: &Baf, sigma: Semantics) -> Result<Vec<Extension>> {
    if !f.supports().is_empty() {
        return Err(Error::SupportsPresent);
    }
    f.check_guard(DEFAULT_MAX_ENUMERATION)?;
    let n = f.n_args();
    let mut attackers = vec![0u64; n];
    for &(x, y) in f.attacks() {
        attackers[y.0] |= 1 << x.0;
    }
    let attacked_by = |s: u64| -> u64 {
        (0..n)
            .filter(|&y| attackers[y] & s != 0)
            .fold(0, |m, y| m | 1 << y)
    };
    let defended = |s: u64| -> u64 {
        let hit = attacked_by(s);
        (0..n)
            .filter(|&a| attackers[a] & !hit == 0)
            .fold(0, |m, a| m | 1 << a)
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let cf = |s: u64| attacked_by(s) & s == 0;
    let ad = |s: u64| cf(s) && s & !defended(s) == 0;
    let co = |s: u64| ad(s) && defended(s) == s;

    let subsets = 0..=all;
    let masks: Vec<u64> = match sigma {
        Semantics::Cf => subsets.filter(|&s| cf(s)).collect(),
        Semantics::Ad => subsets.filter(|&s| ad(s)).collect(),
        Semantics::Co => subsets.filter(|&s| co(s)).collect(),
        Semantics::Stb => subsets
            .filter(|&s| cf(s) && attacked_by(s) | s == all)
            .collect(),
        Semantics::Pr => {
            let admissible: Vec<u64> = subsets.filter(|&s| ad(s)).collect();
            admissible
                .iter()
                .copied()
                .filter(|&s| !admissible.iter().any(|&t| t != s && t & s == s))
                .collect()
        }
        Semantics::Gr => {
            let mut s = 0;
            loop {
                let next = defended(s);
                if next == s {
                    break vec![s];
                }
                s = next;
            }
        }
    };
    let mut out: Vec<Extension> = masks
        .into_iter()
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(ArgId).collect())
        .collect();
    out.sort();
    Ok(out)
}

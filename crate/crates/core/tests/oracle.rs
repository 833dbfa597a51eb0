mod common;

use bipolar_aba::instantiate::instantiate;
use bipolar_aba::{AssumptionSet, DefenseMode, Semantics};
use common::strategies;
use common::{sorted, to_extension, AbaOracle, BafOracle, SEMANTICS};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn baf_extensions_match_oracle(f in strategies::baf(7, true)) {
        let oracle = BafOracle::of(&f);
        for sigma in SEMANTICS {
            let expected: Vec<_> = oracle.extensions(sigma).into_iter().map(|m| to_extension(m, f.n_args())).collect();
            prop_assert_eq!(sorted(&f.extensions(sigma).unwrap()), sorted(&expected), "{}", sigma);
        }
    }

    #[test]
    fn pbaf_extensions_match_oracle(pf in strategies::pbaf(7, 4)) {
        let oracle = BafOracle::of_pbaf(&pf);
        let n = pf.baf().n_args();
        for sigma in SEMANTICS {
            let expected: Vec<_> = oracle.extensions(sigma).into_iter().map(|m| to_extension(m, n)).collect();
            prop_assert_eq!(sorted(&pf.extensions(sigma).unwrap()), sorted(&expected), "{}", sigma);
        }
    }

    #[test]
    fn baf_predicates_match_oracle(f in strategies::baf(6, true), mask in 0u32..64) {
        let oracle = BafOracle::of(&f);
        let mask = mask & oracle.all();
        let e = to_extension(mask, f.n_args());
        prop_assert_eq!(f.closure(&e), to_extension(oracle.closure(mask), f.n_args()));
        prop_assert_eq!(f.range(&e), to_extension(oracle.range(mask), f.n_args()));
        prop_assert_eq!(f.characteristic(&e), to_extension(oracle.gamma(mask), f.n_args()));
        for a in f.all_args().iter() {
            prop_assert_eq!(f.defends_with(&e, a, DefenseMode::ClosedSets).unwrap(), oracle.defends(mask, a.0));
        }
    }

    #[test]
    fn aba_extensions_match_oracle(d in strategies::aba(7, 5, 8)) {
        let oracle = AbaOracle::of(&d);
        for sigma in SEMANTICS {
            let expected: Vec<AssumptionSet> = oracle.extensions(sigma).into_iter().map(|m| oracle.to_set(m)).collect();
            prop_assert_eq!(sorted(&d.extensions(sigma).unwrap()), sorted(&expected), "{}", sigma);
        }
    }

    #[test]
    fn aba_operators_match_oracle(d in strategies::aba(7, 5, 8), mask in 0u32..32) {
        let oracle = AbaOracle::of(&d);
        let mask = mask & oracle.all();
        let s = oracle.to_set(mask);
        let th = oracle.theory(mask);
        let theory = d.theory(&s);
        for atom in 0..d.n_atoms() {
            prop_assert_eq!(theory.contains(bipolar_aba::AtomId(atom)), th[atom]);
        }
        prop_assert_eq!(d.closure(&s), oracle.to_set(oracle.closure(mask)));
        for (i, &a) in d.assumptions().iter().enumerate() {
            for mode in [DefenseMode::ClosedSets, DefenseMode::AttackerClosure] {
                prop_assert_eq!(d.defends(&s, a, mode).unwrap(), oracle.defends(mask, i));
            }
        }
    }

    /// Instantiated frameworks agree with the oracle on semantics that
    /// transfer back to assumption sets.
    #[test]
    fn instantiated_pbaf_matches_aba_oracle(d in strategies::aba(6, 4, 6)) {
        let oracle = AbaOracle::of(&d);
        let Ok(inst) = instantiate(&d, 5000) else { return Ok(()) };
        let pbaf = inst.pbaf();
        for sigma in [Semantics::Ad, Semantics::Co, Semantics::Pr, Semantics::Gr, Semantics::Stb] {
            let got: Vec<AssumptionSet> = pbaf
                .extensions_bounded(sigma, 5000)
                .unwrap()
                .iter()
                .map(|e| inst.assumptions_of(e))
                .collect();
            let expected: Vec<AssumptionSet> = oracle.extensions(sigma).into_iter().map(|m| oracle.to_set(m)).collect();
            if sigma == Semantics::Gr && oracle.extensions(Semantics::Co).is_empty() {
                prop_assert!(pbaf.extensions_bounded(Semantics::Co, 5000).unwrap().is_empty());
                continue;
            }
            prop_assert_eq!(sorted(&got), sorted(&expected), "{}", sigma);
        }
    }
}

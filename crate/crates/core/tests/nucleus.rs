use asd_core::instances::finite::{chain, diamond, free_dl_1, free_dl_2, sigma_basis};
use asd_core::nucleus::{check_nucleus_laws, check_recovery, points_theorem_check, NucleusOptions};
use proptest::prelude::*;

#[test]
fn laws_exhaustively_on_small_carriers() {
    for b in [chain(2), free_dl_1(), diamond()] {
        let rep = check_nucleus_laws(&b, NucleusOptions::default()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

/// Exhaustive over monotone predicates on the 16 codes of `sigma_basis(2)`;
/// the enumeration is refused by the checker and would not finish anyway.
#[test]
#[ignore = "needs every monotone predicate on 2^16 subsets"]
fn laws_exhaustively_on_sigma_2() {
    let opts = NucleusOptions {
        max_card: 16,
        ..Default::default()
    };
    let rep = check_nucleus_laws(&sigma_basis(2), opts).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn points_and_recovery_on_sigma_2() {
    let b = sigma_basis(2);
    assert!(points_theorem_check(&b).unwrap().passed());
    assert!(check_recovery(&b).unwrap().passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sampled_laws_hold_for_monotone_predicates(seed in any::<u64>()) {
        for b in [free_dl_2(), sigma_basis(2)] {
            let opts = NucleusOptions { sampled: Some((20, seed)), ..Default::default() };
            let rep = check_nucleus_laws(&b, opts).unwrap();
            prop_assert!(rep.passed(), "{}", rep);
        }
    }
}

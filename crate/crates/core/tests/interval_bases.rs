use asd_core::basis::{check_axioms, classify, SearchBound, Universe};
use asd_core::instances::interval::{mutated_real_line_basis, real_line_basis, unit_interval_basis};

#[test]
fn real_line_axioms_sampled() {
    let rep = check_axioms(
        &real_line_basis(),
        Universe::Random { count: 10_000, seed: 1 },
        SearchBound::default(),
    )
    .unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.unwitnessed(), 0);
}

#[test]
fn unit_interval_axioms_sampled() {
    let rep = check_axioms(
        &unit_interval_basis(),
        Universe::Random { count: 10_000, seed: 2 },
        SearchBound::default(),
    )
    .unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn non_strict_mutation_is_caught() {
    let rep = check_axioms(
        &mutated_real_line_basis(),
        Universe::Random { count: 2_000, seed: 3 },
        SearchBound::default(),
    )
    .unwrap();
    assert!(!rep.passed(), "{rep}");
}

#[test]
fn classification_matches_the_examples() {
    let u = classify(&unit_interval_basis(), Universe::Random { count: 2_000, seed: 4 });
    assert!(u.compact && u.filter);
    assert!(!classify(&real_line_basis(), Universe::Random { count: 2_000, seed: 4 }).compact);
}

#[test]
fn every_rule_is_exercised() {
    for b in [real_line_basis(), unit_interval_basis()] {
        let rep = check_axioms(&b, Universe::Random { count: 2_000, seed: 5 }, SearchBound::default()).unwrap();
        println!("{rep}");
        for r in &rep.rules {
            assert!(r.checked > 100, "{} only checked {} times", r.rule, r.checked);
        }
    }
}

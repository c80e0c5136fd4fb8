use drg_core::catalog::builtin_catalog;
use drg_core::harness::{
    classify_theorem3, forced_parameters, names, refute_selfdual_family, verify_twice_q_identities,
    HypothesisFailure, Theorem3Case,
};
use drg_core::structures::q_structures;
use drg_core::{family_array, FamilySpec, Scheme};

const HOLDING: [&str; 12] = [
    names::THETA1_THETA4,
    names::THETA_SUM,
    names::THETA2_THETA3,
    names::A1_B1,
    names::CHAIN,
    names::R_STAR,
    names::S_STAR_SYMMETRIC,
    names::R_TILDE_STAR,
    names::S_TILDE_STAR,
    names::XI_TAU,
    names::RECURRENCE_1,
    names::RECURRENCE_2,
];

#[test]
fn forced_parameters_are_self_consistent() {
    for t in 2..=10u64 {
        let c = forced_parameters(t);
        assert_eq!(c.alpha, c.theta2);
        assert_eq!(c.beta, &c.alpha * &c.theta2 - 1);
        let r = c.verify();
        for name in HOLDING
            .into_iter()
            .chain([names::LEMMA16, names::XI_THETA2])
        {
            let check = r.check(name).unwrap();
            assert!(check.holds(), "theta2 = {t}: {check}");
        }
    }
}

#[test]
fn selfdual_family_is_refuted() {
    for mu in 2..=6 {
        let r = refute_selfdual_family(mu).unwrap();
        assert!(r.formally_admissible(), "mu = {mu}");
        assert!(r.refuted(), "mu = {mu}");
        assert_eq!(r.array.a(1), 2 * mu as i64);
        for name in HOLDING {
            assert!(
                r.identities.check(name).unwrap().holds(),
                "mu = {mu}: {name}"
            );
        }
    }
}

#[test]
fn hypotheses_are_reported() {
    let r = verify_twice_q_identities(&family_array(&FamilySpec::Hamming { d: 4 }).unwrap());
    assert_eq!(r.hypothesis_failures, vec![HypothesisFailure::Bipartite]);
    let r = verify_twice_q_identities(&family_array(&FamilySpec::Hamming { d: 5 }).unwrap());
    assert!(r
        .hypothesis_failures
        .contains(&HypothesisFailure::Diameter(5)));
}

#[test]
fn classification_agrees_with_structure_counts() {
    // The equivalence is a statement about graphs, so unrealized arrays
    // (the self-dual family) are excluded: they have two structures formally.
    for entry in builtin_catalog().iter().filter(|e| e.realized) {
        let arr = entry.parse().unwrap();
        let Ok(cases) = classify_theorem3(&arr) else {
            continue;
        };
        let count = q_structures(&Scheme::new(&arr).unwrap()).len();
        assert_eq!(
            !cases.is_empty(),
            count == 2,
            "{}: {cases:?}, {count} structures",
            entry.name
        );
    }
    let cases = classify_theorem3(&family_array(&FamilySpec::Hamming { d: 4 }).unwrap()).unwrap();
    assert!(cases.contains(&Theorem3Case::Cube { d: 4 }));
    assert!(cases.contains(&Theorem3Case::Hadamard { gamma: 2 }));
}

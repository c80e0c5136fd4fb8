use drg_core::{
    build_graph, family_array, spectrum_crosscheck, verify_drg, FamilySpec, GraphKind, Spectrum,
    DEFAULT_MAX_VERTICES,
};

fn certify(kind: GraphKind, family: FamilySpec) {
    let g = build_graph(&kind, DEFAULT_MAX_VERTICES).unwrap();
    let arr = verify_drg(&g).unwrap_or_else(|e| panic!("{kind:?}: {e:?}"));
    assert_eq!(arr, family_array(&family).unwrap(), "{kind:?}");
    let check = spectrum_crosscheck(&g, &Spectrum::new(&arr).unwrap());
    assert!(check.passed(), "{kind:?}: {check:?}");
}

#[test]
fn builders_match_family_arrays() {
    for d in 1..=5 {
        certify(GraphKind::Hypercube { d }, FamilySpec::Hamming { d });
    }
    certify(
        GraphKind::HalvedCube { n: 5 },
        FamilySpec::HalvedCube { n: 5 },
    );
    certify(
        GraphKind::FoldedCube { n: 5 },
        FamilySpec::FoldedCube { n: 5 },
    );
    certify(
        GraphKind::Hadamard { k: 2 },
        FamilySpec::Hadamard { gamma: 2 },
    );
    certify(
        GraphKind::Hadamard { k: 3 },
        FamilySpec::Hadamard { gamma: 4 },
    );
    certify(GraphKind::Cycle { n: 7 }, FamilySpec::Polygon { n: 7 });
    certify(
        GraphKind::TaylorComplement { k: 5 },
        FamilySpec::Taylor { k: 5, a1: 0 },
    );
}

#[test]
fn perturbed_graph_is_rejected() {
    let g = build_graph(&GraphKind::Hypercube { d: 4 }, DEFAULT_MAX_VERTICES).unwrap();
    assert!(verify_drg(&g.with_edge(0, 3)).is_err());
}

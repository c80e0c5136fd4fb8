//! Structural properties every distance-regular parameter set must satisfy,
//! checked exactly on a computed scheme. Used for catalog regression.

use drg_algebra::FieldElem;
use num_rational::BigRational;

use crate::array::IntersectionArray;
use crate::feasibility::{Check, CheckStatus, FeasibilityReport};
use crate::scheme::Scheme;
use crate::spectrum::cosine_sequence;
use crate::structures::{
    p_structures, q_structures, schur_closed_subsets, schur_idempotent_pairs, schur_trichotomy,
    suzuki_types, tightness_crosscheck, QStructure, RecurrenceFit,
};

fn status(result: Result<(), String>) -> CheckStatus {
    match result {
        Ok(()) => CheckStatus::Pass,
        Err(e) => CheckStatus::Fail(e),
    }
}

fn skipped(reason: &str) -> CheckStatus {
    CheckStatus::Skipped(reason.into())
}

/// Row `i` of `c_iσ_{i−1} + a_iσ_i + b_iσ_{i+1} = θσ_i` (`σ_{−1}`, `σ_{d+1}`
/// carry zero coefficients).
fn three_term_row(
    arr: &IntersectionArray,
    sigma: &[FieldElem],
    theta: &FieldElem,
    i: usize,
) -> bool {
    let f = theta.field();
    let d = arr.diameter();
    let mut lhs = f.integer(arr.a(i)) * &sigma[i];
    if i > 0 {
        lhs = lhs + f.integer(arr.c(i)) * &sigma[i - 1];
    }
    if i < d {
        lhs = lhs + f.integer(arr.b(i)) * &sigma[i + 1];
    }
    lhs == theta * &sigma[i]
}

/// `σ_0 = 1`, `kσ_1 = θ` and
/// `c_i(σ_{i−1} − σ_i) − b_i(σ_i − σ_{i+1}) = k(σ_1 − 1)σ_i` for `1 ≤ i ≤ d`.
fn difference_form(arr: &IntersectionArray, sigma: &[FieldElem], theta: &FieldElem) -> bool {
    let f = theta.field();
    let d = arr.diameter();
    let k = f.integer(arr.valency());
    if !sigma[0].is_one() || &k * &sigma[1] != *theta {
        return false;
    }
    let rhs_scale = &k * &(&sigma[1] - &f.one());
    (1..=d).all(|i| {
        let mut lhs = f.integer(arr.c(i)) * (&sigma[i - 1] - &sigma[i]);
        if i < d {
            lhs = lhs - f.integer(arr.b(i)) * (&sigma[i] - &sigma[i + 1]);
        }
        lhs == &rhs_scale * &sigma[i]
    })
}

/// Forms (ii) and (iii) of the cosine characterisation agree on every
/// eigenvalue (both hold) and on the non-eigenvalues `k + 1` and `−k − 1`
/// (both fail), with `σ` generated from the first `d` rows.
fn cosine_forms(scheme: &Scheme) -> Result<(), String> {
    let arr = &scheme.array;
    let spec = &scheme.spectrum;
    let d = arr.diameter();
    let form_ii = |sigma: &[FieldElem], theta: &FieldElem| {
        sigma[0].is_one() && (0..=d).all(|i| three_term_row(arr, sigma, theta, i))
    };
    for (i, theta) in spec.eigenvalues().iter().enumerate() {
        let sigma = spec.cosine_sequence(i);
        let (ii, iii) = (form_ii(sigma, theta), difference_form(arr, sigma, theta));
        if !(ii && iii) {
            return Err(format!("eigenvalue {i}: (ii) = {ii}, (iii) = {iii}"));
        }
    }
    let f = spec.field();
    for probe in [arr.valency() + 1, -arr.valency() - 1] {
        let theta = f.integer(probe);
        let sigma = cosine_sequence(arr, &theta);
        let (ii, iii) = (
            form_ii(&sigma, &theta),
            difference_form(arr, &sigma, &theta),
        );
        if ii != iii || ii {
            return Err(format!(
                "non-eigenvalue {probe}: (ii) = {ii}, (iii) = {iii}"
            ));
        }
    }
    Ok(())
}

/// For schemes with more than one Q-polynomial structure:
/// `q^1_{11} = 0 ⇒ q^i_{1i} = 0`, `q^1_{11} ≠ 0 ⇒ q^i_{1i} ≠ 0` and
/// `p^1_{11} = 0 ⇒ p^i_{1i} = 0` for `1 ≤ i ≤ d − 1`.
fn multiple_structure_implications(scheme: &Scheme, qs: &[QStructure]) -> Result<(), String> {
    let d = scheme.diameter();
    for q in qs {
        let zero = q.a_star[1].is_zero();
        if let Some(i) = (1..d).find(|&i| q.a_star[i].is_zero() != zero) {
            return Err(format!(
                "ordering {:?}: q^1_11 zero = {zero} but q^{i}_1{i} zero = {}",
                q.ordering, !zero
            ));
        }
    }
    let p = &scheme.ptensor;
    if p.is_zero_at(1, 1, 1) {
        if let Some(i) = (1..d).find(|&i| !p.is_zero_at(i, 1, i)) {
            return Err(format!("p^1_11 = 0 but p^{i}_1{i} != 0"));
        }
    }
    Ok(())
}

/// `p^1_{11} ≠ 0 ⇒ p^i_{1i} ≠ 0` for `1 ≤ i ≤ d − 1`.
fn triangle_propagation(scheme: &Scheme) -> Result<(), String> {
    let p = &scheme.ptensor;
    if p.is_zero_at(1, 1, 1) {
        return Ok(());
    }
    match (1..scheme.diameter()).find(|&i| p.is_zero_at(i, 1, i)) {
        Some(i) => Err(format!("a_1 != 0 but a_{i} = 0")),
        None => Ok(()),
    }
}

/// Schur-closed proper subsets `T ≠ {0}` of a structure with `m_1 > 2`
/// are `{0, 2, 4, …}` with all `a*_i = 0`, or `{0, d}` with
/// `b*_i = c*_{d−i}` for `i ≠ ⌊d/2⌋`.
fn imprimitive_shapes(scheme: &Scheme, qs: &QStructure) -> Result<(), String> {
    let d = qs.diameter();
    let two = scheme.spectrum.field().integer(2);
    if qs.k_star[1].compare(&two) != std::cmp::Ordering::Greater {
        return Ok(());
    }
    let even: Vec<usize> = (0..=d).step_by(2).collect();
    for t in schur_closed_subsets(&qs.krein) {
        if t.len() == 1 || t.len() == d + 1 {
            continue;
        }
        let dual_bipartite = t == even && qs.a_star.iter().all(FieldElem::is_zero);
        let dual_antipodal = t == [0, d]
            && (0..=d)
                .filter(|&i| i != d / 2)
                .all(|i| qs.b_star[i] == qs.c_star[d - i]);
        if !dual_bipartite && !dual_antipodal {
            return Err(format!("ordering {:?}: closed set {t:?}", qs.ordering));
        }
    }
    Ok(())
}

/// At most two Q-polynomial structures, and a second one matches a type
/// of the classification of second structures.
fn second_structure_types(scheme: &Scheme, qs: &[QStructure]) -> CheckStatus {
    let arr = &scheme.array;
    if arr.valency() < 3 || arr.diameter() < 3 {
        return skipped("requires valency at least 3 and diameter at least 3");
    }
    match qs {
        [] | [_] => CheckStatus::Pass,
        [a, b] => {
            if suzuki_types(a, b).is_empty() || suzuki_types(b, a).is_empty() {
                CheckStatus::Fail(format!(
                    "{:?} and {:?} match no type",
                    a.ordering, b.ordering
                ))
            } else {
                CheckStatus::Pass
            }
        }
        _ => CheckStatus::Fail(format!("{} Q-polynomial structures", qs.len())),
    }
}

/// `n·w(s) = Σ m_i θ_i^s` for `0 ≤ s ≤ 2d`, where `w(s)` counts closed
/// walks of length `s` at a vertex.
fn trace_moments(scheme: &Scheme) -> Result<(), String> {
    let n = scheme.array.vertex_count();
    for s in 0..=2 * scheme.diameter() as u32 {
        let walks: BigRational = scheme.ptensor.closed_walks(s) * n;
        if scheme.spectrum.moment(s).as_rational().as_ref() != Some(&walks) {
            return Err(format!("moment {s}"));
        }
    }
    Ok(())
}

fn all_structures(
    qs: &[QStructure],
    f: impl Fn(&QStructure) -> Result<(), String>,
) -> Result<(), String> {
    qs.iter().try_for_each(f)
}

/// Every property check on `scheme`, given its Q-polynomial structures.
/// Feasibility checks (including the eigenvalue bounds and cosine sign
/// patterns) come first.
pub fn property_checks(scheme: &Scheme, qs: &[QStructure]) -> Vec<Check> {
    let d = scheme.diameter();
    let mut checks = FeasibilityReport::for_scheme(scheme).checks;
    let mut push = |name: &'static str, status: CheckStatus| checks.push(Check { name, status });
    push(
        "cosine_forms_equivalent",
        if d >= 3 {
            status(cosine_forms(scheme))
        } else {
            skipped("requires diameter at least 3")
        },
    );
    push(
        "p_times_q_equals_n_identity",
        status(
            scheme
                .eigenmatrices
                .check_product(&scheme.array)
                .map_err(|e| e.to_string()),
        ),
    );
    push(
        "intersection_number_identities",
        status(scheme.ptensor.check_invariants(&scheme.array)),
    );
    push(
        "krein_identities",
        status(scheme.krein.check_invariants(&scheme.spectrum)),
    );
    push("trace_moments", status(trace_moments(scheme)));
    push(
        "schur_product_trichotomy",
        status(schur_trichotomy(scheme, &schur_idempotent_pairs(scheme))),
    );
    push(
        "multiple_structure_implications",
        if d < 3 {
            skipped("requires diameter at least 3")
        } else if qs.len() < 2 {
            skipped("requires more than one Q-polynomial structure")
        } else {
            status(multiple_structure_implications(scheme, qs))
        },
    );
    push("triangle_propagation", status(triangle_propagation(scheme)));
    push(
        "q_structure_identities",
        status(all_structures(qs, |q| q.check_invariants(scheme))),
    );
    push(
        "q_structure_recurrences",
        if d < 3 {
            skipped("requires diameter at least 3")
        } else {
            status(all_structures(qs, |q| match &q.recurrence {
                Some(RecurrenceFit::Fit { .. }) => Ok(()),
                Some(RecurrenceFit::NoFit(why)) => Err(format!("{:?}: {why}", q.ordering)),
                None => Err(format!("{:?}: no recurrence computed", q.ordering)),
            }))
        },
    );
    push(
        "tightness_characterisations",
        status(all_structures(qs, |q| tightness_crosscheck(scheme, q))),
    );
    push(
        "imprimitive_closed_sets",
        status(all_structures(qs, |q| imprimitive_shapes(scheme, q))),
    );
    push("second_structure_type", second_structure_types(scheme, qs));
    push(
        "p_structure_count",
        if p_structures(&scheme.ptensor).is_empty() {
            CheckStatus::Fail("the distance ordering is not P-polynomial".into())
        } else {
            CheckStatus::Pass
        },
    );
    checks
}

/// Builds the scheme and runs [`property_checks`].
pub fn check_properties(arr: &IntersectionArray) -> Result<Vec<Check>, crate::scheme::SchemeError> {
    let scheme = Scheme::new(arr)?;
    let qs = q_structures(&scheme);
    Ok(property_checks(&scheme, &qs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn failures(text: &str) -> Vec<Check> {
        check_properties(&parse_array(text).unwrap())
            .unwrap()
            .into_iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail(_)))
            .collect()
    }

    #[test]
    fn genuine_arrays_pass() {
        for text in [
            "4,3,2,1;1,2,3,4",
            "10,5,4,2;1,2,2,10",
            "3,2,2;1,1,3",
            "2,1,1;1,1,1",
            "16,9,4,1;1,4,9,16",
        ] {
            assert!(failures(text).is_empty(), "{text}: {:?}", failures(text));
        }
    }

    #[test]
    fn cosine_forms_disagree_nowhere() {
        let arr = parse_array("5,4,1,1;1,1,4,5").unwrap();
        let scheme = Scheme::new(&arr).unwrap();
        cosine_forms(&scheme).unwrap();
    }
}

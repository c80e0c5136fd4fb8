//! Formal feasibility checks on an intersection array. Every check runs and
//! records its own outcome; nothing aborts at the first failure.

use std::cmp::Ordering;

use drg_algebra::FieldElem;
use num_rational::BigRational;

use crate::array::IntersectionArray;
use crate::scheme::Scheme;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub checks: Vec<Check>,
}

impl FeasibilityReport {
    /// True when no check failed.
    pub fn is_feasible(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn status(&self, name: &str) -> Option<&CheckStatus> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.status)
    }

    /// Runs every check against an already computed scheme.
    pub fn for_scheme(scheme: &Scheme) -> Self {
        let arr = &scheme.array;
        let mut checks = array_checks(arr);
        checks.push(Check {
            name: "p_nonnegative_integral",
            status: match (
                scheme.ptensor.first_negative(),
                scheme.ptensor.first_non_integral(),
            ) {
                (Some((h, i, j)), _) => CheckStatus::Fail(format!("p^{h}_{{{i}{j}}} < 0")),
                (None, Some((h, i, j))) => {
                    CheckStatus::Fail(format!("p^{h}_{{{i}{j}}} is not an integer"))
                }
                (None, None) => CheckStatus::Pass,
            },
        });
        checks.push(Check {
            name: "multiplicities_positive_integral",
            status: multiplicity_status(scheme.spectrum.multiplicities()),
        });
        checks.push(Check {
            name: "krein_nonnegative",
            status: match scheme.krein.first_negative() {
                Some((h, i, j)) => CheckStatus::Fail(format!("q^{h}_{{{i}{j}}} < 0")),
                None => CheckStatus::Pass,
            },
        });
        checks.extend(lemma_checks(scheme));
        FeasibilityReport { checks }
    }
}

fn pass_if(ok: bool, msg: impl FnOnce() -> String) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(msg())
    }
}

fn array_checks(arr: &IntersectionArray) -> Vec<Check> {
    let c1 = arr.c(1);
    let neg_a = arr.a_values().iter().position(|&a| a < 0);
    let bad_k = arr.valencies().iter().position(|k| !k.is_integer());
    vec![
        Check {
            name: "c1_equals_one",
            status: pass_if(c1 == 1, || format!("c_1 = {c1}")),
        },
        Check {
            name: "a_nonnegative",
            status: pass_if(neg_a.is_none(), || {
                let i = neg_a.unwrap_or_default();
                format!("a_{i} = {}", arr.a(i))
            }),
        },
        Check {
            name: "k_integral",
            status: pass_if(bad_k.is_none(), || {
                let i = bad_k.unwrap_or_default();
                format!("k_{i} = {}", arr.k_i(i))
            }),
        },
    ]
}

fn multiplicity_status(m: &[FieldElem]) -> CheckStatus {
    for (i, mi) in m.iter().enumerate() {
        match mi.as_rational() {
            None => return CheckStatus::Fail(format!("m_{i} is irrational")),
            Some(q) if !q.is_integer() => return CheckStatus::Fail(format!("m_{i} = {q}")),
            Some(q) if q <= BigRational::from_integer(0.into()) => {
                return CheckStatus::Fail(format!("m_{i} = {q}"))
            }
            Some(_) => {}
        }
    }
    CheckStatus::Pass
}

fn lemma_checks(scheme: &Scheme) -> Vec<Check> {
    let arr = &scheme.array;
    let d = arr.diameter();
    let names = [
        "lemma6_theta1_bounds",
        "lemma6_thetad_bounds",
        "lemma5_theta1_decreasing",
        "lemma5_thetad_alternating",
    ];
    if d < 3 {
        return names
            .iter()
            .map(|&name| Check {
                name,
                status: CheckStatus::Skipped("requires diameter at least 3".into()),
            })
            .collect();
    }
    let spec = &scheme.spectrum;
    let field = spec.field();
    let k = field.integer(arr.valency());
    let t1 = spec.theta(1);
    let td = spec.theta(d);
    let lower = field.integer(arr.a(1) - arr.valency());
    let t1_ok = t1.is_positive() && t1.compare(&k) == Ordering::Less;
    let lower_cmp = lower.compare(td);
    let td_ok = lower_cmp != Ordering::Greater
        && td.compare(&field.integer(-1)) == Ordering::Less
        && (arr.is_bipartite() || lower_cmp == Ordering::Less);
    let s1 = spec.cosine_sequence(1);
    let decreasing = s1
        .windows(2)
        .all(|w| w[0].compare(&w[1]) == Ordering::Greater);
    let sd = spec.cosine_sequence(d);
    let alternating = sd.iter().enumerate().all(|(i, s)| {
        if i % 2 == 0 {
            s.is_positive()
        } else {
            s.is_negative()
        }
    });
    vec![
        Check {
            name: names[0],
            status: pass_if(t1_ok, || format!("theta_1 = {t1} outside (0, k)")),
        },
        Check {
            name: names[1],
            status: pass_if(td_ok, || format!("theta_d = {td} outside [a_1 - k, -1)")),
        },
        Check {
            name: names[2],
            status: pass_if(decreasing, || {
                "cosines of theta_1 not strictly decreasing".into()
            }),
        },
        Check {
            name: names[3],
            status: pass_if(alternating, || "cosines of theta_d do not alternate".into()),
        },
    ]
}

/// Builds the scheme and reports every check. Internal computation errors
/// are reported as a failing `parameter_system` check.
pub fn feasibility_report(arr: &IntersectionArray) -> FeasibilityReport {
    match Scheme::new(arr) {
        Ok(s) => FeasibilityReport::for_scheme(&s),
        Err(e) => {
            let mut checks = array_checks(arr);
            checks.push(Check {
                name: "parameter_system",
                status: CheckStatus::Fail(e.to_string()),
            });
            FeasibilityReport { checks }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::{parse_array, parse_array_raw};

    #[test]
    fn hamming_passes_everything() {
        let r = feasibility_report(&parse_array("4,3,2,1;1,2,3,4").unwrap());
        assert!(r.is_feasible(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn oversized_c_fails() {
        let r = feasibility_report(&parse_array_raw("3,2,1;1,2,4").unwrap());
        assert!(!r.is_feasible());
        assert!(matches!(
            r.status("a_nonnegative"),
            Some(CheckStatus::Fail(_))
        ));
    }

    #[test]
    fn selfdual_is_formally_feasible() {
        let r = feasibility_report(&parse_array("10,5,4,2;1,2,2,10").unwrap());
        assert!(r.is_feasible(), "{r:?}");
    }

    #[test]
    fn irrational_multiplicities_fail() {
        // {4,3;1,2}: k_2 = 6, n = 11; eigenvalues of a non-existent graph.
        let r = feasibility_report(&parse_array("4,3;1,2").unwrap());
        assert!(!r.is_feasible());
        assert!(matches!(
            r.status("lemma5_theta1_decreasing"),
            Some(CheckStatus::Skipped(_))
        ));
    }
}

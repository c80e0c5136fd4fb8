//! Non-existence argument for the formally self-dual family
//! `{μ(2μ+1), (μ−1)(2μ+1), μ², μ; 1, μ, μ(μ−1), μ(2μ+1)}`.

use drg_algebra::AlgebraicReal;

use super::identities::{verify_on_scheme, TwiceQReport};
use crate::array::IntersectionArray;
use crate::families::{family_array, FamilyError, FamilySpec};
use crate::feasibility::FeasibilityReport;
use crate::scheme::{Scheme, SchemeError};
use crate::structures::{p_structures, q_structures, tightness};

#[derive(Debug, Clone)]
pub struct SelfDualRefutation {
    pub mu: u64,
    pub array: IntersectionArray,
    pub feasibility: FeasibilityReport,
    pub p_structures: usize,
    pub q_structures: usize,
    pub tight: bool,
    pub theta1: AlgebraicReal,
    pub theta4: AlgebraicReal,
    /// Local eigenvalues `ξ = −1 − b_1/(θ_4+1)` and `τ = −1 − b_1/(θ_1+1)`.
    pub xi: Option<AlgebraicReal>,
    pub tau: Option<AlgebraicReal>,
    /// Whether `a_1 = (k − 1)/2`, the parameter condition of a conference
    /// local graph.
    pub conference_condition: bool,
    pub identities: TwiceQReport,
}

impl SelfDualRefutation {
    pub fn theta1_irrational(&self) -> bool {
        !self.theta1.is_rational()
    }

    pub fn theta4_irrational(&self) -> bool {
        !self.theta4.is_rational()
    }

    pub fn local_eigenvalues_irrational(&self) -> bool {
        [&self.xi, &self.tau]
            .iter()
            .all(|x| x.as_ref().is_some_and(|v| !v.is_rational()))
    }

    /// Passes every formal test: feasibility, two P- and two
    /// Q-polynomial structures, tightness.
    pub fn formally_admissible(&self) -> bool {
        self.feasibility.is_feasible()
            && self.p_structures == 2
            && self.q_structures == 2
            && self.tight
    }

    /// Irrational local eigenvalues force a conference local graph, whose
    /// valency condition `a_1 = (k−1)/2` fails: no graph exists.
    pub fn refuted(&self) -> bool {
        self.theta1_irrational() && self.theta4_irrational() && !self.conference_condition
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SelfDualError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Generates the member for `μ` and runs every step of the argument.
pub fn refute_selfdual_family(mu: u64) -> Result<SelfDualRefutation, SelfDualError> {
    let array = family_array(&FamilySpec::SelfDual { mu })?;
    let scheme = Scheme::new(&array)?;
    let qs = q_structures(&scheme);
    let spec = &scheme.spectrum;
    let field = spec.field();
    let b1 = field.integer(array.b(1));
    let one = field.one();
    let local = |t: &drg_algebra::FieldElem| {
        (t + &one)
            .inv()
            .map(|inv| (-(&b1 * &inv) - &one).to_algebraic())
    };
    let k = array.valency();
    Ok(SelfDualRefutation {
        mu,
        feasibility: FeasibilityReport::for_scheme(&scheme),
        p_structures: p_structures(&scheme.ptensor).len(),
        q_structures: qs.len(),
        tight: tightness(&array, spec).is_tight(),
        theta1: spec.eigenvalues_algebraic()[1].clone(),
        theta4: spec.eigenvalues_algebraic()[4].clone(),
        xi: local(spec.theta(4)),
        tau: local(spec.theta(1)),
        conference_condition: 2 * array.a(1) == k - 1,
        identities: verify_on_scheme(&scheme, &qs),
        array,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_two_is_refuted() {
        let r = refute_selfdual_family(2).unwrap();
        assert_eq!(r.array.to_string(), "10,5,4,2;1,2,2,10");
        assert_eq!(r.array.a(1), 4);
        assert!(r.formally_admissible());
        assert!(r.local_eigenvalues_irrational());
        assert!(!r.conference_condition);
        assert!(r.refuted());
    }

    #[test]
    fn mu_one_is_rejected() {
        assert!(refute_selfdual_family(1).is_err());
    }
}

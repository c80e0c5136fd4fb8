//! The parameters forced on a tight twice Q-polynomial graph of diameter
//! four whose first and last eigenvalues are integral.

use drg_algebra::{AlgebraicReal, NumberField};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::identities::{
    core_checks, eq24_constants, IdentityCheck, Outcome, TwiceQReport, TwiceQValues, Val,
};
use super::names;

/// `k = θ_2²(θ_2+2)`, `a_1 = θ_2(θ_2+1)`, `θ_1 = θ_2(θ_2+2)`, `θ_4 = −θ_2²`
/// with `α = θ_2`, `β = αθ_2 − 1` and `b_1 = β(θ_2+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightTwiceQCandidate {
    pub theta2: BigInt,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub k: BigInt,
    pub a1: BigInt,
    pub b1: BigInt,
    pub theta1: BigInt,
    pub theta4: BigInt,
    pub xi: BigInt,
    pub tau: BigInt,
}

impl TightTwiceQCandidate {
    /// `θ_0, …, θ_4` with `θ_0 = k` and `θ_3 = −θ_2`.
    pub fn theta(&self) -> [BigInt; 5] {
        [
            self.k.clone(),
            self.theta1.clone(),
            self.theta2.clone(),
            -self.theta2.clone(),
            self.theta4.clone(),
        ]
    }

    /// Runs the shared identity chain on the candidate, with `p = θ_0/θ_1`,
    /// `p̃ = θ_0/θ_4` and `r*, s*, r̃*, s̃*` solved from the eigenvalue
    /// recurrences of both orderings.
    pub fn verify(&self) -> TwiceQReport {
        let field = NumberField::rationals();
        let theta: [Val; 5] = self.theta().map(|t| Val::int(&field, &t));
        let theta_alg = self
            .theta()
            .map(|t| AlgebraicReal::from_rational(t.into()))
            .to_vec();
        let p = Val::of(&(theta[0].elem() / theta[1].elem()));
        let p_tilde = Val::of(&(theta[0].elem() / theta[4].elem()));
        let (r_star, s_star) = eq24_constants(&theta, &p);
        let second = [
            theta[0].clone(),
            theta[4].clone(),
            theta[2].clone(),
            theta[3].clone(),
            theta[1].clone(),
        ];
        let (r_tilde_star, s_tilde_star) = eq24_constants(&second, &p_tilde);
        let values = TwiceQValues {
            theta,
            k: self.k.clone(),
            a1: self.a1.clone(),
            b1: self.b1.clone(),
            p,
            r_star,
            s_star,
            p_tilde,
            r_tilde_star,
            s_tilde_star,
        };
        let mut checks = core_checks(&values);
        let (xi, tau) = values.local_eigenvalues();
        let closed = |name, statement, got: Option<Val>, want: &BigInt| IdentityCheck {
            name,
            statement,
            outcome: match got.map(|v| v.elem().as_rational()) {
                Some(Some(q)) if q == want.clone().into() => Outcome::Holds,
                Some(Some(q)) => Outcome::Fails {
                    residual: AlgebraicReal::from_rational(q - BigRational::from(want.clone())),
                },
                _ => Outcome::NotApplicable("division by zero".into()),
            },
        };
        checks.push(closed(names::XI_THETA2, "ξ = θ_2 = −τ", xi, &self.xi));
        checks.push(closed("tau_eq_minus_theta2", "τ = −θ_2", tau, &self.tau));
        let k_sum = &self.a1 + &self.b1 + 1;
        checks.push(IdentityCheck {
            name: "k_eq_a1_plus_b1_plus_1",
            statement: "k = a_1 + b_1 + 1",
            outcome: if k_sum == self.k {
                Outcome::Holds
            } else {
                Outcome::Fails {
                    residual: AlgebraicReal::from_rational(BigRational::from(k_sum - &self.k)),
                }
            },
        });
        TwiceQReport {
            hypothesis_failures: Vec::new(),
            theta: theta_alg,
            checks,
        }
    }
}

/// The closed-form candidate for `θ_2` (meaningful for `θ_2 ≥ 2`).
pub fn forced_parameters(theta2: u64) -> TightTwiceQCandidate {
    let t = BigInt::from(theta2);
    let alpha = t.clone();
    let beta = &alpha * &t - 1;
    let b1 = &beta * (&t + 1);
    TightTwiceQCandidate {
        k: &t * &t * (&t + 2),
        a1: &t * (&t + 1),
        theta1: &t * (&t + 2),
        theta4: -(&t * &t),
        xi: t.clone(),
        tau: -t.clone(),
        theta2: t,
        alpha,
        beta,
        b1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta2_two() {
        let c = forced_parameters(2);
        assert_eq!(c.k, 16.into());
        assert_eq!(c.a1, 6.into());
        assert_eq!(c.b1, 9.into());
        assert_eq!(c.theta1, 8.into());
        assert_eq!(c.theta4, (-4).into());
        assert_eq!((c.xi.clone(), c.tau.clone()), (2.into(), (-2).into()));
        let r = c.verify();
        assert!(r.check(names::LEMMA16).unwrap().holds());
        assert!(r.check(names::THETA_SUM).unwrap().holds());
        assert!(r.check(names::XI_THETA2).unwrap().holds());
    }

    #[test]
    fn theta2_three() {
        let c = forced_parameters(3);
        assert_eq!((c.k.clone(), c.a1.clone()), (45.into(), 12.into()));
        assert_eq!(
            (c.theta1.clone(), c.theta4.clone()),
            (15.into(), (-9).into())
        );
        let r = c.verify();
        for name in [
            names::THETA1_THETA4,
            names::THETA_SUM,
            names::THETA2_THETA3,
            names::A1_B1,
            names::CHAIN,
            names::R_STAR,
            names::S_STAR_SYMMETRIC,
            names::S_TILDE_STAR,
            names::XI_TAU,
            names::LEMMA16,
            names::RECURRENCE_1,
            names::RECURRENCE_2,
        ] {
            assert!(r.check(name).unwrap().holds(), "{}", r.check(name).unwrap());
        }
        // s* = θ_1θ_2 = 45 while θ_1θ_3 = −45.
        let Outcome::Fails { residual } = &r.check(names::S_STAR).unwrap().outcome else {
            panic!("s* = θ_1θ_3 should not hold");
        };
        assert_eq!(
            residual.as_rational(),
            Some(BigRational::from(BigInt::from(90)))
        );
    }
}

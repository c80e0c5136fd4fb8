//! Instance-level verification of the twice Q-polynomial diameter-four
//! derivation: the eigenvalue identities, the forced parameters of the tight
//! branch, the self-dual family refutation and the classification decision.

mod forced;
mod identities;
mod selfdual;
mod theorem3;

pub use forced::{forced_parameters, TightTwiceQCandidate};
pub use identities::{
    verify_on_scheme, verify_twice_q_identities, HypothesisFailure, IdentityCheck, Outcome,
    TwiceQReport,
};
pub use selfdual::{refute_selfdual_family, SelfDualError, SelfDualRefutation};
pub use theorem3::{classify_theorem3, Theorem3Case, Theorem3Precondition};

/// Names of the core identities shared by array inputs and forced
/// parameters.
pub mod names {
    pub const THETA1_THETA4: &str = "theta1_theta4_eq_theta0_theta3";
    pub const P: &str = "p_eq_theta0_over_theta1";
    pub const P_TILDE: &str = "p_tilde_eq_theta0_over_theta4";
    pub const THETA2_THETA3: &str = "theta2_eq_minus_theta3";
    pub const THETA_SUM: &str = "theta1_plus_theta4_eq_2theta2";
    pub const A1_B1: &str = "theta2_a1_minus_1_eq_b1_plus_1";
    pub const CHAIN: &str = "minus_theta1p1_theta4p1_eq_b1_theta2p1";
    pub const R_STAR: &str = "r_star_eq_theta2";
    pub const S_STAR: &str = "s_star_eq_theta1_theta3";
    pub const S_STAR_SYMMETRIC: &str = "s_star_eq_theta1_theta2";
    pub const R_TILDE_STAR: &str = "r_tilde_star_eq_theta2";
    pub const S_TILDE_STAR: &str = "s_tilde_star_eq_theta4_theta2";
    pub const XI_TAU: &str = "xi_eq_minus_tau";
    pub const LEMMA16: &str = "theta1_eq_half_a1_plus_sqrt_a1sq_plus_4k";
    pub const RECURRENCE_1: &str = "eigenvalue_recurrence_structure1";
    pub const RECURRENCE_2: &str = "eigenvalue_recurrence_structure2";
    pub const LEMMA11: &str = "primary_idempotents_swap";
    pub const TYPE_III_ZEROS: &str = "krein_zero_pattern_type_iii";
    pub const COSINE_PRODUCT: &str = "cosines_theta3_eq_product";
    pub const SIGMA2: &str = "sigma2_nonnegative";
    pub const DIV_B1: &str = "theta2p1_divides_b1";
    pub const DIV_A1: &str = "theta2p1_divides_a1";
    pub const DIV_XI: &str = "xi_divides_a1";
    pub const XI_THETA2: &str = "xi_eq_theta2";

    /// The identities asserted on every tight twice-Q diameter-four input.
    pub const CORE: [&str; 9] = [
        THETA1_THETA4,
        THETA_SUM,
        THETA2_THETA3,
        A1_B1,
        R_STAR,
        S_STAR,
        XI_TAU,
        LEMMA16,
        CHAIN,
    ];
}

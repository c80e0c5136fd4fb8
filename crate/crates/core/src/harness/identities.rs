//! Exact identity checks on tight twice Q-polynomial diameter-four inputs.
//!
//! Every identity is decided twice: as an expression over real algebraic
//! leaves with a certified zero test, and by direct arithmetic in the number
//! field that holds all eigenvalues. The two verdicts must agree.

use std::cmp::Ordering;
use std::fmt;

use drg_algebra::{expr_is_zero, real_roots, AlgebraicReal, Expr, FieldElem, IntPoly, NumberField};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::names;
use crate::array::IntersectionArray;
use crate::scheme::Scheme;
use crate::structures::{q_structures, tightness, QStructure, RecurrenceFit};

/// A value tracked simultaneously as a symbolic expression and as a field
/// element.
#[derive(Clone)]
pub(crate) struct Val {
    expr: Expr,
    elem: FieldElem,
}

impl Val {
    pub(crate) fn of(elem: &FieldElem) -> Self {
        Val {
            expr: Expr::real(elem.to_algebraic()),
            elem: elem.clone(),
        }
    }

    pub(crate) fn int(field: &NumberField, n: &BigInt) -> Self {
        Val {
            expr: Expr::rational(n.clone().into()),
            elem: field.rational(n.clone().into()),
        }
    }

    pub(crate) fn elem(&self) -> &FieldElem {
        &self.elem
    }

    fn add(&self, o: &Val) -> Val {
        Val {
            expr: self.expr.clone() + o.expr.clone(),
            elem: &self.elem + &o.elem,
        }
    }

    fn sub(&self, o: &Val) -> Val {
        Val {
            expr: self.expr.clone() - o.expr.clone(),
            elem: &self.elem - &o.elem,
        }
    }

    fn mul(&self, o: &Val) -> Val {
        Val {
            expr: self.expr.clone() * o.expr.clone(),
            elem: &self.elem * &o.elem,
        }
    }

    fn neg(&self) -> Val {
        Val {
            expr: -self.expr.clone(),
            elem: -self.elem.clone(),
        }
    }

    /// `None` when the divisor is zero.
    fn div(&self, o: &Val) -> Option<Val> {
        if o.elem.is_zero() {
            return None;
        }
        Some(Val {
            expr: self.expr.clone() / o.expr.clone(),
            elem: &self.elem / &o.elem,
        })
    }

    fn plus_int(&self, n: i64) -> Val {
        self.add(&Val::int(self.elem.field(), &BigInt::from(n)))
    }

    fn times_int(&self, n: i64) -> Val {
        self.mul(&Val::int(self.elem.field(), &BigInt::from(n)))
    }
}

/// Result of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The identity is false; `residual` is the exact value of
    /// `lhs − rhs` (or the offending quantity for inequalities and
    /// divisibility claims).
    Fails {
        residual: AlgebraicReal,
    },
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub outcome: Outcome,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Holds => write!(f, "{}: holds ({})", self.name, self.statement),
            Outcome::Fails { residual } => write!(
                f,
                "{}: FAILS ({}), residual {} ≈ {}",
                self.name,
                self.statement,
                residual,
                residual.to_decimal(12)
            ),
            Outcome::NotApplicable(why) => write!(f, "{}: not applicable ({why})", self.name),
        }
    }
}

/// A hypothesis of the tight twice Q-polynomial diameter-four branch that
/// the input does not satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisFailure {
    ParameterSystem(String),
    Diameter(usize),
    QStructureCount(usize),
    Bipartite,
    NotTight,
    /// The ordering `θ_0 > θ_1 > … > θ_4` is not one of the Q-polynomial
    /// structures.
    NaturalOrderingNotQ,
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ParameterSystem(e) => write!(f, "parameter system unavailable: {e}"),
            Self::Diameter(d) => write!(f, "diameter is {d}, not 4"),
            Self::QStructureCount(n) => write!(f, "{n} Q-polynomial structures, not 2"),
            Self::Bipartite => write!(f, "bipartite"),
            Self::NotTight => write!(f, "not tight"),
            Self::NaturalOrderingNotQ => write!(f, "natural ordering is not Q-polynomial"),
        }
    }
}

/// Per-identity verdicts with exact residuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwiceQReport {
    pub hypothesis_failures: Vec<HypothesisFailure>,
    /// `θ_0 > … > θ_d` when the spectrum was available.
    pub theta: Vec<AlgebraicReal>,
    pub checks: Vec<IdentityCheck>,
}

impl TwiceQReport {
    pub fn applicable(&self) -> bool {
        self.hypothesis_failures.is_empty()
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Fails { .. }))
    }

    /// Whether every named core identity was decided and holds.
    pub fn core_holds(&self) -> bool {
        self.applicable()
            && names::CORE
                .iter()
                .all(|n| self.check(n).is_some_and(IdentityCheck::holds))
    }
}

/// Decides `lhs = rhs` by both routes.
fn equality(name: &'static str, statement: &'static str, lhs: &Val, rhs: &Val) -> IdentityCheck {
    let diff = lhs.sub(rhs);
    let by_field = diff.elem.is_zero();
    let outcome = match expr_is_zero(&diff.expr) {
        Ok(by_expr) => {
            assert_eq!(by_expr, by_field, "zero tests disagree on {name}");
            if by_field {
                Outcome::Holds
            } else {
                Outcome::Fails {
                    residual: diff.elem.to_algebraic(),
                }
            }
        }
        Err(e) => Outcome::NotApplicable(e.to_string()),
    };
    IdentityCheck {
        name,
        statement,
        outcome,
    }
}

fn undefined(name: &'static str, statement: &'static str, why: &str) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        outcome: Outcome::NotApplicable(why.into()),
    }
}

fn equality_opt(
    name: &'static str,
    statement: &'static str,
    lhs: Option<Val>,
    rhs: Option<Val>,
) -> IdentityCheck {
    match (lhs, rhs) {
        (Some(l), Some(r)) => equality(name, statement, &l, &r),
        _ => undefined(name, statement, "division by zero"),
    }
}

fn predicate(
    name: &'static str,
    statement: &'static str,
    ok: bool,
    witness: &FieldElem,
) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        outcome: if ok {
            Outcome::Holds
        } else {
            Outcome::Fails {
                residual: witness.to_algebraic(),
            }
        },
    }
}

/// `θ_{ℓ+1} + θ_{ℓ−1} = pθ_ℓ + r*` and
/// `θ_{ℓ+1}θ_{ℓ−1} = θ_ℓ² − r*θ_ℓ − s*` solved at `ℓ = 1`.
pub(crate) fn eq24_constants(seq: &[Val], p: &Val) -> (Val, Val) {
    let r = seq[2].add(&seq[0]).sub(&p.mul(&seq[1]));
    let s = seq[1]
        .mul(&seq[1])
        .sub(&r.mul(&seq[1]))
        .sub(&seq[2].mul(&seq[0]));
    (r, s)
}

fn recurrence_holds(seq: &[Val], p: &Val, r: &Val, s: &Val) -> Result<(), FieldElem> {
    for l in 1..seq.len() - 1 {
        let (a, b, c) = (&seq[l - 1].elem, &seq[l].elem, &seq[l + 1].elem);
        let sum = &(c + a) - &(&(&p.elem * b) + &r.elem);
        if !sum.is_zero() {
            return Err(sum);
        }
        let prod = &(c * a) - &(&(&(b * b) - &(&r.elem * b)) - &s.elem);
        if !prod.is_zero() {
            return Err(prod);
        }
    }
    Ok(())
}

/// Quantities shared by array inputs and forced parameters, in the labels
/// `θ_0 > θ_1 > θ_2 > θ_3 > θ_4` with the second structure ordered
/// `θ_0, θ_4, θ_2, θ_3, θ_1`.
pub(crate) struct TwiceQValues {
    pub theta: [Val; 5],
    pub k: BigInt,
    pub a1: BigInt,
    pub b1: BigInt,
    pub p: Val,
    pub r_star: Val,
    pub s_star: Val,
    pub p_tilde: Val,
    pub r_tilde_star: Val,
    pub s_tilde_star: Val,
}

impl TwiceQValues {
    pub(crate) fn field(&self) -> &NumberField {
        self.theta[0].elem.field()
    }

    pub(crate) fn second_sequence(&self) -> [Val; 5] {
        let t = &self.theta;
        [
            t[0].clone(),
            t[4].clone(),
            t[2].clone(),
            t[3].clone(),
            t[1].clone(),
        ]
    }

    /// `ξ = −1 − b_1/(θ_4 + 1)` and `τ = −1 − b_1/(θ_1 + 1)`.
    pub(crate) fn local_eigenvalues(&self) -> (Option<Val>, Option<Val>) {
        let b1 = Val::int(self.field(), &self.b1);
        let local = |t: &Val| b1.div(&t.plus_int(1)).map(|q| q.neg().plus_int(-1));
        (local(&self.theta[4]), local(&self.theta[1]))
    }
}

/// `θ_1 = (a_1 + √(a_1² + 4k))/2`, decided by a certified zero test with a
/// square-root leaf and, independently, by `θ_1² − a_1θ_1 − k = 0` together
/// with `2θ_1 > a_1`.
fn lemma16(v: &TwiceQValues) -> IdentityCheck {
    let (name, statement) = (names::LEMMA16, "θ_1 = (a_1 + √(a_1² + 4k))/2");
    let disc = &v.a1 * &v.a1 + BigInt::from(4) * &v.k;
    if disc.is_negative() {
        return undefined(name, statement, "negative discriminant");
    }
    let square = IntPoly::x()
        .mul(&IntPoly::x())
        .sub(&IntPoly::constant(disc));
    let Some(root) = real_roots(&square).into_iter().max_by(|a, b| a.compare(b)) else {
        return undefined(name, statement, "no real square root");
    };
    let theta1 = &v.theta[1];
    let rhs = (Expr::rational(v.a1.clone().into()) + Expr::real(root)) / Expr::int(2);
    let diff = theta1.expr.clone() - rhs;
    let field = v.field();
    let a1 = field.rational(v.a1.clone().into());
    let quadratic = &(&(theta1.elem() * theta1.elem()) - &(&a1 * theta1.elem()))
        - &field.rational(v.k.clone().into());
    let upper_branch =
        theta1.elem().scale(&BigInt::from(2).into()).compare(&a1) == Ordering::Greater;
    let by_field = quadratic.is_zero() && upper_branch;
    let outcome = match (expr_is_zero(&diff), diff.evaluate()) {
        (Ok(by_expr), Ok(residual)) => {
            assert_eq!(by_expr, by_field, "zero tests disagree on {name}");
            if by_field {
                Outcome::Holds
            } else {
                Outcome::Fails { residual }
            }
        }
        (Err(e), _) | (_, Err(e)) => Outcome::NotApplicable(e.to_string()),
    };
    IdentityCheck {
        name,
        statement,
        outcome,
    }
}

/// The identity chain common to every tight twice-Q diameter-four input.
pub(crate) fn core_checks(v: &TwiceQValues) -> Vec<IdentityCheck> {
    let t = &v.theta;
    let field = v.field();
    let int = |n: &BigInt| Val::int(field, n);
    let (a1, b1) = (int(&v.a1), int(&v.b1));
    let (xi, tau) = v.local_eigenvalues();
    let mut out = vec![
        equality(
            names::THETA1_THETA4,
            "θ_1θ_4 = θ_0θ_3",
            &t[1].mul(&t[4]),
            &t[0].mul(&t[3]),
        ),
        equality_opt(names::P, "p = θ_0/θ_1", Some(v.p.clone()), t[0].div(&t[1])),
        equality_opt(
            names::P_TILDE,
            "p̃ = θ_0/θ_4",
            Some(v.p_tilde.clone()),
            t[0].div(&t[4]),
        ),
        equality(names::THETA2_THETA3, "θ_2 = −θ_3", &t[2], &t[3].neg()),
        equality(
            names::THETA_SUM,
            "θ_1 + θ_4 = 2θ_2",
            &t[1].add(&t[4]),
            &t[2].times_int(2),
        ),
        equality(
            names::A1_B1,
            "θ_2(a_1 − 1) = b_1 + 1",
            &t[2].mul(&a1.plus_int(-1)),
            &b1.plus_int(1),
        ),
        equality(
            names::CHAIN,
            "−(θ_1 + 1)(θ_4 + 1) = b_1(θ_2 + 1)",
            &t[1].plus_int(1).mul(&t[4].plus_int(1)).neg(),
            &b1.mul(&t[2].plus_int(1)),
        ),
        equality(names::R_STAR, "r* = θ_2", &v.r_star, &t[2]),
        equality(names::S_STAR, "s* = θ_1θ_3", &v.s_star, &t[1].mul(&t[3])),
        equality(
            names::S_STAR_SYMMETRIC,
            "s* = θ_1θ_2",
            &v.s_star,
            &t[1].mul(&t[2]),
        ),
        equality(names::R_TILDE_STAR, "r̃* = θ_2", &v.r_tilde_star, &t[2]),
        equality(
            names::S_TILDE_STAR,
            "s̃* = θ_4θ_2",
            &v.s_tilde_star,
            &t[4].mul(&t[2]),
        ),
        equality_opt(names::XI_TAU, "ξ = −τ", xi, tau.map(|x| x.neg())),
        lemma16(v),
    ];
    for (name, seq, p, r, s) in [
        (names::RECURRENCE_1, t.clone(), &v.p, &v.r_star, &v.s_star),
        (
            names::RECURRENCE_2,
            v.second_sequence(),
            &v.p_tilde,
            &v.r_tilde_star,
            &v.s_tilde_star,
        ),
    ] {
        let res = recurrence_holds(&seq, p, r, s);
        out.push(predicate(
            name,
            "θ_{ℓ+1} + θ_{ℓ−1} = pθ_ℓ + r*, θ_{ℓ+1}θ_{ℓ−1} = θ_ℓ² − r*θ_ℓ − s* for ℓ = 1, 2, 3",
            res.is_ok(),
            &res.err().unwrap_or_else(|| field.zero()),
        ));
    }
    out
}

fn hypothesis_failures(scheme: &Scheme, qs: &[QStructure]) -> Vec<HypothesisFailure> {
    let arr = &scheme.array;
    let mut out = Vec::new();
    if arr.diameter() != 4 {
        out.push(HypothesisFailure::Diameter(arr.diameter()));
    }
    if qs.len() != 2 {
        out.push(HypothesisFailure::QStructureCount(qs.len()));
    }
    if arr.is_bipartite() {
        out.push(HypothesisFailure::Bipartite);
    } else if !tightness(arr, &scheme.spectrum).is_tight() {
        out.push(HypothesisFailure::NotTight);
    }
    if out.is_empty() && !qs.iter().any(|q| q.ordering == [0, 1, 2, 3, 4]) {
        out.push(HypothesisFailure::NaturalOrderingNotQ);
    }
    out
}

fn fit_constants(qs: &QStructure) -> Option<(FieldElem, FieldElem, FieldElem)> {
    match &qs.recurrence {
        Some(RecurrenceFit::Fit {
            p, r_star, s_star, ..
        }) => Some((p.clone(), r_star.clone(), s_star.clone())),
        _ => None,
    }
}

/// Checks that need the idempotents: Lemma 11, the type-III Krein zeros,
/// `u_i = σ_iσ̃_i`, `σ_2 ≥ 0` and the divisibility claims.
fn structural_checks(scheme: &Scheme, second: &QStructure, v: &TwiceQValues) -> Vec<IdentityCheck> {
    let spec = &scheme.spectrum;
    let kt = &scheme.krein;
    let field = spec.field();
    let swap = second.ordering[1] == 4 && second.ordering[4] == 1;
    let zeros = kt.is_zero_at(4, 1, 4)
        && kt.is_zero_at(4, 3, 4)
        && !kt.is_zero_at(4, 2, 4)
        && !kt.is_zero_at(4, 2, 3);
    let sigma = spec.cosine_sequence(1);
    let sigma_tilde = spec.cosine_sequence(4);
    let u = spec.cosine_sequence(3);
    let bad_u = (0..=4).find(|&i| u[i] != &sigma[i] * &sigma_tilde[i]);
    let mut out = vec![
        IdentityCheck {
            name: names::LEMMA11,
            statement: "Ẽ_1 = E_4 and Ẽ_4 = E_1",
            outcome: if swap {
                Outcome::Holds
            } else {
                Outcome::Fails {
                    residual: AlgebraicReal::from_integer(second.ordering[1] as i64),
                }
            },
        },
        predicate(
            names::TYPE_III_ZEROS,
            "q^4_{14} = 0 = q^4_{34}, q^4_{24} ≠ 0 ≠ q^4_{23}",
            zeros,
            kt.get(4, 1, 4),
        ),
        match bad_u {
            None => predicate(names::COSINE_PRODUCT, "u_i = σ_iσ̃_i", true, &field.zero()),
            Some(i) => predicate(
                names::COSINE_PRODUCT,
                "u_i = σ_iσ̃_i",
                false,
                &(&u[i] - &(&sigma[i] * &sigma_tilde[i])),
            ),
        },
        predicate(names::SIGMA2, "σ_2 ≥ 0", !sigma[2].is_negative(), &sigma[2]),
    ];
    let (xi, _) = v.local_eigenvalues();
    let rational = v.theta.iter().all(|t| t.elem.is_rational());
    let divides =
        |name: &'static str, statement: &'static str, by: Option<BigInt>, of: &BigInt| match by {
            Some(d) if !d.is_zero() => {
                let rem = of % &d;
                IdentityCheck {
                    name,
                    statement,
                    outcome: if rem.is_zero() {
                        Outcome::Holds
                    } else {
                        Outcome::Fails {
                            residual: AlgebraicReal::from_rational(rem.into()),
                        }
                    },
                }
            }
            _ => undefined(name, statement, "eigenvalues are not all integral"),
        };
    let integer = |e: &FieldElem| {
        e.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    };
    let theta2p1 = if rational {
        integer(&v.theta[2].plus_int(1).elem)
    } else {
        None
    };
    let xi_int = if rational {
        xi.as_ref().and_then(|x| integer(&x.elem))
    } else {
        None
    };
    out.push(divides(
        names::DIV_B1,
        "(θ_2 + 1) | b_1",
        theta2p1.clone(),
        &v.b1,
    ));
    out.push(divides(names::DIV_A1, "(θ_2 + 1) | a_1", theta2p1, &v.a1));
    out.push(divides(names::DIV_XI, "ξ | a_1", xi_int, &v.a1));
    out
}

/// Verifies the identity chain of the tight twice Q-polynomial
/// diameter-four branch on `arr`, or reports which hypotheses fail.
pub fn verify_twice_q_identities(arr: &IntersectionArray) -> TwiceQReport {
    let scheme = match Scheme::new(arr) {
        Ok(s) => s,
        Err(e) => {
            return TwiceQReport {
                hypothesis_failures: vec![HypothesisFailure::ParameterSystem(e.to_string())],
                theta: Vec::new(),
                checks: Vec::new(),
            }
        }
    };
    let qs = q_structures(&scheme);
    verify_on_scheme(&scheme, &qs)
}

/// As [`verify_twice_q_identities`] for an already analysed scheme.
pub fn verify_on_scheme(scheme: &Scheme, qs: &[QStructure]) -> TwiceQReport {
    let spec = &scheme.spectrum;
    let theta = spec.eigenvalues_algebraic().to_vec();
    let hypothesis_failures = hypothesis_failures(scheme, qs);
    if !hypothesis_failures.is_empty() {
        return TwiceQReport {
            hypothesis_failures,
            theta,
            checks: Vec::new(),
        };
    }
    let natural = qs
        .iter()
        .position(|q| q.ordering == [0, 1, 2, 3, 4])
        .expect("checked by hypotheses");
    let second = &qs[1 - natural];
    let (Some((p, r_star, s_star)), Some((p_tilde, r_tilde_star, s_tilde_star))) =
        (fit_constants(&qs[natural]), fit_constants(second))
    else {
        return TwiceQReport {
            hypothesis_failures: vec![HypothesisFailure::ParameterSystem(
                "a Q-polynomial structure has no three-term recurrence".into(),
            )],
            theta,
            checks: Vec::new(),
        };
    };
    let arr = &scheme.array;
    let values = TwiceQValues {
        theta: std::array::from_fn(|i| Val::of(spec.theta(i))),
        k: arr.valency().into(),
        a1: arr.a(1).into(),
        b1: arr.b(1).into(),
        p: Val::of(&p),
        r_star: Val::of(&r_star),
        s_star: Val::of(&s_star),
        p_tilde: Val::of(&p_tilde),
        r_tilde_star: Val::of(&r_tilde_star),
        s_tilde_star: Val::of(&s_tilde_star),
    };
    let mut checks = core_checks(&values);
    checks.extend(structural_checks(scheme, second, &values));
    TwiceQReport {
        hypothesis_failures: Vec::new(),
        theta,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn report(text: &str) -> TwiceQReport {
        verify_twice_q_identities(&parse_array(text).unwrap())
    }

    #[test]
    fn hamming_fails_hypotheses() {
        let r = report("4,3,2,1;1,2,3,4");
        assert_eq!(r.hypothesis_failures, vec![HypothesisFailure::Bipartite]);
        assert!(r.checks.is_empty());
    }

    #[test]
    fn dual_polar_is_not_tight() {
        let r = report("170,168,160,128;1,5,21,85");
        assert_eq!(r.hypothesis_failures, vec![HypothesisFailure::NotTight]);
    }

    #[test]
    fn johnson_has_one_structure() {
        let r = report("16,9,4,1;1,4,9,16");
        assert_eq!(
            r.hypothesis_failures,
            vec![HypothesisFailure::QStructureCount(1)]
        );
    }

    #[test]
    fn selfdual_identities() {
        let r = report("10,5,4,2;1,2,2,10");
        assert!(r.applicable());
        for name in [
            names::THETA1_THETA4,
            names::THETA_SUM,
            names::THETA2_THETA3,
            names::A1_B1,
            names::CHAIN,
            names::P,
            names::P_TILDE,
            names::R_STAR,
            names::S_STAR_SYMMETRIC,
            names::R_TILDE_STAR,
            names::S_TILDE_STAR,
            names::XI_TAU,
            names::RECURRENCE_1,
            names::RECURRENCE_2,
            names::LEMMA11,
            names::TYPE_III_ZEROS,
            names::COSINE_PRODUCT,
            names::SIGMA2,
        ] {
            assert!(r.check(name).unwrap().holds(), "{}", r.check(name).unwrap());
        }
        // s* = θ_1θ_2 = −θ_1θ_3 with θ_1θ_3 ≠ 0.
        assert!(!r.check(names::S_STAR).unwrap().holds());
        // The equality characterises antipodal graphs; this array is not.
        assert!(!r.check(names::LEMMA16).unwrap().holds());
        assert!(!r.theta[1].is_rational() && !r.theta[4].is_rational());
        assert!(matches!(
            r.check(names::DIV_A1).unwrap().outcome,
            Outcome::NotApplicable(_)
        ));
    }
}

//! Arithmetic expressions over real algebraic leaves with certified zero
//! tests by two independent routes.
//!
//! * [`ZeroRoute::Field`] evaluates the expression symbolically in the
//!   compositum of its leaves, where zero testing is exact.
//! * [`ZeroRoute::Bound`] clears denominators to a division-free numerator
//!   and evaluates it with outward-rounded interval arithmetic until the
//!   enclosure is narrower than a root-separation lower bound.
//!
//! In builds with debug assertions, [`expr_is_zero`] runs both routes and
//! checks that they agree.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::AlgebraError;
use crate::field::{FieldElem, NumberField};
use crate::interval::Interval;

#[derive(Clone, Debug)]
pub enum Expr {
    Rational(BigRational),
    Real(AlgebraicReal),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroRoute {
    Field,
    Bound,
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(q: BigRational) -> Self {
        Expr::Rational(q)
    }

    pub fn real(a: AlgebraicReal) -> Self {
        match a.as_rational() {
            Some(q) => Expr::Rational(q),
            None => Expr::Real(a),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (1..e).fold(
            if e == 0 { Expr::int(1) } else { self.clone() },
            |acc, _| acc * self.clone(),
        )
    }

    /// Distinct irrational leaves, in order of first appearance.
    fn leaves(&self, out: &mut Vec<AlgebraicReal>) {
        match self {
            Expr::Rational(_) => {}
            Expr::Real(a) => {
                if a.as_rational().is_none() && !out.iter().any(|b| b == a) {
                    out.push(a.clone());
                }
            }
            Expr::Neg(a) => a.leaves(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }

    fn leaf_index(leaves: &[AlgebraicReal], a: &AlgebraicReal) -> usize {
        leaves
            .iter()
            .position(|b| b == a)
            .expect("leaf collected beforehand")
    }

    fn eval_in(
        &self,
        field: &NumberField,
        leaves: &[AlgebraicReal],
        elems: &[FieldElem],
    ) -> Result<FieldElem, AlgebraError> {
        Ok(match self {
            Expr::Rational(q) => field.rational(q.clone()),
            Expr::Real(a) => match a.as_rational() {
                Some(q) => field.rational(q),
                None => elems[Self::leaf_index(leaves, a)].clone(),
            },
            Expr::Neg(a) => -a.eval_in(field, leaves, elems)?,
            Expr::Add(a, b) => {
                a.eval_in(field, leaves, elems)? + b.eval_in(field, leaves, elems)?
            }
            Expr::Sub(a, b) => {
                a.eval_in(field, leaves, elems)? - b.eval_in(field, leaves, elems)?
            }
            Expr::Mul(a, b) => {
                a.eval_in(field, leaves, elems)? * b.eval_in(field, leaves, elems)?
            }
            Expr::Div(a, b) => a
                .eval_in(field, leaves, elems)?
                .checked_div(&b.eval_in(field, leaves, elems)?)?,
        })
    }

    /// Exact value as an element of the field generated by the leaves.
    pub fn eval_field(&self) -> Result<FieldElem, AlgebraError> {
        let mut leaves = Vec::new();
        self.leaves(&mut leaves);
        let (field, elems) = NumberField::generated_by(&leaves);
        self.eval_in(&field, &leaves, &elems)
    }

    /// Exact value as a real algebraic number.
    pub fn evaluate(&self) -> Result<AlgebraicReal, AlgebraError> {
        Ok(self.eval_field()?.to_algebraic())
    }
}

/// Certified zero test; both routes are cross-checked under debug assertions.
pub fn expr_is_zero(e: &Expr) -> Result<bool, AlgebraError> {
    let verdict = expr_is_zero_via(e, ZeroRoute::Field)?;
    #[cfg(debug_assertions)]
    {
        let bound = expr_is_zero_via(e, ZeroRoute::Bound)?;
        assert_eq!(verdict, bound, "zero-test routes disagree on {e:?}");
    }
    Ok(verdict)
}

pub fn expr_is_zero_via(e: &Expr, route: ZeroRoute) -> Result<bool, AlgebraError> {
    match route {
        ZeroRoute::Field => Ok(e.eval_field()?.is_zero()),
        ZeroRoute::Bound => {
            let mut leaves = Vec::new();
            e.leaves(&mut leaves);
            let ctx = BoundContext::new(leaves);
            ctx.is_zero(e)
        }
    }
}

/// Division-free expression over indexed leaves.
enum Df {
    Const(BigRational),
    Leaf(usize),
    Neg(Rc<Df>),
    Add(Rc<Df>, Rc<Df>),
    Sub(Rc<Df>, Rc<Df>),
    Mul(Rc<Df>, Rc<Df>),
}

struct BoundLeaf {
    value: AlgebraicReal,
    /// Leading coefficient: `lc·x` is an algebraic integer.
    denom: BigInt,
    /// Bound on the absolute value of every conjugate.
    conj: BigRational,
}

struct BoundContext {
    leaves: Vec<BoundLeaf>,
}

impl BoundContext {
    fn new(values: Vec<AlgebraicReal>) -> Self {
        let leaves = values
            .into_iter()
            .map(|value| {
                let p = value.minimal_polynomial();
                let lc = p.leading();
                let max = p
                    .coeffs()
                    .iter()
                    .take(p.deg())
                    .map(|c| c.abs())
                    .max()
                    .unwrap_or_else(BigInt::zero);
                let conj = BigRational::one() + BigRational::new(max, lc.clone());
                BoundLeaf {
                    value,
                    denom: lc,
                    conj,
                }
            })
            .collect();
        BoundContext { leaves }
    }

    /// Rewrites `e` as `U / V` with division-free `U`, `V` and `V ≠ 0`.
    fn split(&self, e: &Expr) -> Result<(Rc<Df>, Rc<Df>), AlgebraError> {
        let one = || Rc::new(Df::Const(BigRational::one()));
        Ok(match e {
            Expr::Rational(q) => (Rc::new(Df::Const(q.clone())), one()),
            Expr::Real(a) => match a.as_rational() {
                Some(q) => (Rc::new(Df::Const(q)), one()),
                None => {
                    let i = self
                        .leaves
                        .iter()
                        .position(|l| &l.value == a)
                        .expect("leaf collected beforehand");
                    (Rc::new(Df::Leaf(i)), one())
                }
            },
            Expr::Neg(a) => {
                let (u, v) = self.split(a)?;
                (Rc::new(Df::Neg(u)), v)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (ua, va) = self.split(a)?;
                let (ub, vb) = self.split(b)?;
                let l = Rc::new(Df::Mul(ua, vb.clone()));
                let r = Rc::new(Df::Mul(ub, va.clone()));
                let u = if matches!(e, Expr::Add(..)) {
                    Df::Add(l, r)
                } else {
                    Df::Sub(l, r)
                };
                (Rc::new(u), Rc::new(Df::Mul(va, vb)))
            }
            Expr::Mul(a, b) => {
                let (ua, va) = self.split(a)?;
                let (ub, vb) = self.split(b)?;
                (Rc::new(Df::Mul(ua, ub)), Rc::new(Df::Mul(va, vb)))
            }
            Expr::Div(a, b) => {
                let (ua, va) = self.split(a)?;
                let (ub, vb) = self.split(b)?;
                if self.df_is_zero(&ub) {
                    return Err(AlgebraError::DivisionByZero);
                }
                (Rc::new(Df::Mul(ua, vb)), Rc::new(Df::Mul(va, ub)))
            }
        })
    }

    fn is_zero(&self, e: &Expr) -> Result<bool, AlgebraError> {
        let (u, _) = self.split(e)?;
        Ok(self.df_is_zero(&u))
    }

    /// `(L, C)`: `L·x` is an algebraic integer whose conjugates are at most `L·C`.
    fn bounds(&self, d: &Df) -> (BigInt, BigRational) {
        match d {
            Df::Const(q) => (q.denom().clone(), q.abs()),
            Df::Leaf(i) => (self.leaves[*i].denom.clone(), self.leaves[*i].conj.clone()),
            Df::Neg(a) => self.bounds(a),
            Df::Add(a, b) | Df::Sub(a, b) => {
                let (la, ca) = self.bounds(a);
                let (lb, cb) = self.bounds(b);
                (la * lb, ca + cb)
            }
            Df::Mul(a, b) => {
                let (la, ca) = self.bounds(a);
                let (lb, cb) = self.bounds(b);
                (la * lb, ca * cb)
            }
        }
    }

    fn used(&self, d: &Df, out: &mut Vec<bool>) {
        match d {
            Df::Const(_) => {}
            Df::Leaf(i) => out[*i] = true,
            Df::Neg(a) => self.used(a, out),
            Df::Add(a, b) | Df::Sub(a, b) | Df::Mul(a, b) => {
                self.used(a, out);
                self.used(b, out);
            }
        }
    }

    fn enclose(&self, d: &Df, encl: &[Interval], bits: u64) -> Interval {
        let r = match d {
            Df::Const(q) => return Interval::point(q.clone()),
            Df::Leaf(i) => return encl[*i].clone(),
            Df::Neg(a) => return self.enclose(a, encl, bits).neg(),
            Df::Add(a, b) => self
                .enclose(a, encl, bits)
                .add(&self.enclose(b, encl, bits)),
            Df::Sub(a, b) => self
                .enclose(a, encl, bits)
                .sub(&self.enclose(b, encl, bits)),
            Df::Mul(a, b) => self
                .enclose(a, encl, bits)
                .mul(&self.enclose(b, encl, bits)),
        };
        r.round_out(bits + 16)
    }

    fn df_is_zero(&self, u: &Df) -> bool {
        let mut used = vec![false; self.leaves.len()];
        self.used(u, &mut used);
        let degree: usize = self
            .leaves
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(l, _)| l.value.degree())
            .product();
        let (l, c) = self.bounds(u);
        let lr = BigRational::from_integer(l);
        let lc = (&lr * &c).max(BigRational::one());
        let threshold = (lr * num_traits::pow(lc, degree.saturating_sub(1))).recip();
        let mut bits = 32u64;
        loop {
            let encl: Vec<Interval> = self
                .leaves
                .iter()
                .map(|l| l.value.refined(bits).interval())
                .collect();
            let v = self.enclose(u, &encl, bits);
            if !v.contains_zero() {
                return false;
            }
            if v.width() < threshold {
                return true;
            }
            bits *= 2;
        }
    }
}

macro_rules! expr_binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl $trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl From<AlgebraicReal> for Expr {
    fn from(a: AlgebraicReal) -> Self {
        Expr::real(a)
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Self {
        Expr::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::real_roots;
    use crate::poly::IntPoly;

    fn sqrt(n: i64) -> Expr {
        Expr::real(real_roots(&IntPoly::from_i64s(&[-n, 0, 1])).pop().unwrap())
    }

    #[test]
    fn nested_radical_identity() {
        // (sqrt2 + sqrt3)^2 - 5 - 2 sqrt6 = 0
        let e = (sqrt(2) + sqrt(3)).pow(2) - Expr::int(5) - Expr::int(2) * sqrt(6);
        for route in [ZeroRoute::Field, ZeroRoute::Bound] {
            assert!(expr_is_zero_via(&e, route).unwrap());
        }
        assert!(expr_is_zero(&e).unwrap());
    }

    #[test]
    fn tiny_nonzero_is_detected() {
        // sqrt(10^6 + 1) - 1000 ≈ 5e-4, and (1+sqrt2)^10 is near an integer.
        let e = sqrt(1_000_001) - Expr::int(1000);
        assert!(!expr_is_zero(&e).unwrap());
        let s = Expr::int(1) + sqrt(2);
        let near = s.pow(10) - Expr::int(3363) - Expr::int(2378) * sqrt(2);
        assert!(expr_is_zero(&near).unwrap());
        let off = s.pow(10) - Expr::int(6726);
        assert!(!expr_is_zero(&off).unwrap());
    }

    #[test]
    fn division_identities_and_errors() {
        let e = Expr::int(1) / (sqrt(2) - Expr::int(1)) - sqrt(2) - Expr::int(1);
        assert!(expr_is_zero(&e).unwrap());
        let bad = Expr::int(1) / (sqrt(8) - Expr::int(2) * sqrt(2));
        assert_eq!(expr_is_zero(&bad), Err(AlgebraError::DivisionByZero));
        assert_eq!(
            expr_is_zero_via(&bad, ZeroRoute::Bound),
            Err(AlgebraError::DivisionByZero)
        );
    }
}

//! Real number fields `Q(γ)` given by the minimal polynomial of a real
//! generator, with exact arithmetic and certified signs.
//!
//! Elements are polynomials in `γ` reduced modulo the (monic, integral)
//! minimal polynomial, so equality and zero tests are exact. Signs are
//! decided by evaluating the element on a shrinking enclosure of `γ`,
//! which always terminates because a nonzero element is nonzero as a real.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::{real_roots, AlgebraicReal};
use crate::error::AlgebraError;
use crate::factor::factor_square_free;
use crate::interval::Interval;
use crate::poly::{interpolate, is_square_free, resultant, IntPoly, RatPoly};
use crate::roots::SturmChain;

struct FieldData {
    /// Monic irreducible polynomial with integer coefficients.
    modulus: RatPoly,
    modulus_int: IntPoly,
    /// The generator, with its isolating interval refined on demand.
    generator: Mutex<AlgebraicReal>,
}

/// A real number field `Q(γ)`; cheap to clone.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

/// An element of a [`NumberField`].
#[derive(Clone)]
pub struct FieldElem {
    field: NumberField,
    poly: RatPoly,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl NumberField {
    fn from_parts(modulus_int: IntPoly, generator: AlgebraicReal) -> Self {
        debug_assert!(modulus_int.is_monic());
        NumberField(Arc::new(FieldData {
            modulus: modulus_int.to_rat(),
            modulus_int,
            generator: Mutex::new(generator),
        }))
    }

    /// The field of rationals, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::from_parts(IntPoly::x(), AlgebraicReal::from_integer(0))
    }

    /// `Q(α)` together with `α` as an element. The generator is the
    /// algebraic integer `lc·α`, where `lc` leads the minimal polynomial.
    pub fn from_generator(alpha: &AlgebraicReal) -> (Self, FieldElem) {
        if let Some(q) = alpha.as_rational() {
            let k = Self::rationals();
            let e = k.rational(q);
            return (k, e);
        }
        let f = alpha.minimal_polynomial();
        let modulus = monic_scaling(f);
        let l = BigRational::from_integer(f.leading());
        let gen = AlgebraicReal::from_isolating(modulus.clone(), alpha.lo() * &l, alpha.hi() * &l);
        let field = Self::from_parts(modulus, gen);
        let elem = field.gen().div_rational(&l);
        (field, elem)
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// Monic integral minimal polynomial of the generator.
    pub fn modulus(&self) -> &IntPoly {
        &self.0.modulus_int
    }

    pub fn generator(&self) -> AlgebraicReal {
        self.0.generator.lock().expect("generator lock").clone()
    }

    pub fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Enclosure of the generator of width at most `2^-bits`.
    pub fn generator_enclosure(&self, bits: u64) -> Interval {
        let mut g = self.0.generator.lock().expect("generator lock");
        g.refine(bits);
        g.interval()
    }

    pub fn elem(&self, poly: RatPoly) -> FieldElem {
        let poly = if poly.deg() >= self.degree() {
            poly.rem(&self.0.modulus)
        } else {
            poly
        };
        FieldElem {
            field: self.clone(),
            poly,
        }
    }

    pub fn rational(&self, q: BigRational) -> FieldElem {
        self.elem(RatPoly::constant(q))
    }

    pub fn integer(&self, n: i64) -> FieldElem {
        self.rational(int(n))
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(RatPoly::zero())
    }

    pub fn one(&self) -> FieldElem {
        self.integer(1)
    }

    /// The generator `γ` as an element.
    pub fn gen(&self) -> FieldElem {
        if self.is_rational() {
            return self.zero();
        }
        self.elem(RatPoly::x())
    }

    /// The smallest field containing all `values` (their compositum), with
    /// each value expressed as an element, in input order.
    pub fn generated_by(values: &[AlgebraicReal]) -> (NumberField, Vec<FieldElem>) {
        let mut field = NumberField::rationals();
        let mut elems: Vec<FieldElem> = Vec::with_capacity(values.len());
        for (i, v) in values.iter().enumerate() {
            if let Some(q) = v.as_rational() {
                elems.push(field.rational(q));
                continue;
            }
            if let Some(j) = (0..i).find(|&j| values[j] == *v) {
                let e = elems[j].clone();
                elems.push(e);
                continue;
            }
            if let Some(e) = last_conjugate(&field, v, &values[..i], &elems) {
                elems.push(e);
                continue;
            }
            let (next, embed, new_elem) = adjoin(&field, v);
            elems = elems.iter().map(embed).collect();
            elems.push(new_elem);
            field = next;
        }
        (field, elems)
    }
}

/// If every other real root of `v`'s minimal polynomial is already present,
/// `v` is determined by the root sum.
fn last_conjugate(
    field: &NumberField,
    v: &AlgebraicReal,
    earlier: &[AlgebraicReal],
    elems: &[FieldElem],
) -> Option<FieldElem> {
    let f = v.minimal_polynomial();
    let n = f.deg();
    let mut seen: Vec<&AlgebraicReal> = Vec::new();
    let mut sum = field.zero();
    for (w, e) in earlier.iter().zip(elems) {
        if w.minimal_polynomial() == f && !seen.contains(&w) {
            seen.push(w);
            sum = &sum + e;
        }
    }
    if seen.len() + 1 != n || SturmChain::new(f).count_real() != n {
        return None;
    }
    let total = BigRational::new(-f.coeff(n - 1), f.leading());
    Some(&field.rational(total) - &sum)
}

/// `lc^{n-1} f(y / lc)`: the monic minimal polynomial of `lc·α` when `f`
/// is the minimal polynomial of `α`.
fn monic_scaling(f: &IntPoly) -> IntPoly {
    let n = f.deg();
    let lc = f.leading();
    IntPoly::new(
        (0..=n)
            .map(|i| {
                if i == n {
                    BigInt::one()
                } else {
                    f.coeff(i) * num_traits::pow(lc.clone(), n - 1 - i)
                }
            })
            .collect(),
    )
}

type Embedding = Box<dyn Fn(&FieldElem) -> FieldElem>;

/// Builds `K(α)` as `Q(γ + cα')` with `α' = lc·α`, returning the new field,
/// the embedding of `K`, and `α` in the new field.
fn adjoin(k: &NumberField, alpha: &AlgebraicReal) -> (NumberField, Embedding, FieldElem) {
    if k.is_rational() {
        let (f, a) = NumberField::from_generator(alpha);
        let f2 = f.clone();
        let embed: Embedding = Box::new(move |e: &FieldElem| {
            f2.rational(e.as_rational().expect("element of the rationals"))
        });
        return (f, embed, a);
    }
    let f = alpha.minimal_polynomial();
    let e = f.deg();
    let lc = f.leading();
    let g = monic_scaling(f);
    let m = k.modulus().clone();
    let dk = m.deg();
    let lcr = BigRational::from_integer(lc.clone());

    for c in separating_constants() {
        let cr = int(c);
        // h_x(y) = c^e g((x - y)/c), whose roots in y are x - c·α'_j.
        let r_deg = dk * e;
        let xs: Vec<BigRational> = (0..=r_deg as i64).map(int).collect();
        let ys: Vec<BigRational> = xs
            .iter()
            .map(|x0| {
                let inner = RatPoly::new(vec![x0 / &cr, -BigRational::one() / &cr]);
                let h = g
                    .to_rat()
                    .compose(&inner)
                    .scale(&num_traits::pow(cr.clone(), e));
                resultant(&m.to_rat(), &h)
            })
            .collect();
        let r = interpolate(&xs, &ys).to_primitive_int();
        if r.deg() != r_deg || !is_square_free(&r) {
            continue;
        }
        let factors = factor_square_free(&r);
        let sturm = SturmChain::new(&r);
        let mut bits = 16u64;
        let (lo, hi) = loop {
            let gamma = k.generator_enclosure(bits);
            let a = alpha.refined(bits + 8).interval().scale(&lcr).scale(&cr);
            let enc = gamma.add(&a);
            let (lo, hi) = (enc.lo, enc.hi);
            if lo < hi
                && r.sign_at(&lo) != Ordering::Equal
                && r.sign_at(&hi) != Ordering::Equal
                && sturm.count_in(&lo, &hi) == 1
            {
                break (lo, hi);
            }
            bits *= 2;
        };
        let big_f = factors
            .into_iter()
            .find(|fj| fj.sign_at(&lo) != fj.sign_at(&hi))
            .expect("one factor owns the isolated root");
        let next =
            NumberField::from_parts(big_f.clone(), AlgebraicReal::from_isolating(big_f, lo, hi));
        let t = next.gen();
        // α' is the common root of g(x) and m(t - c x) over the new field.
        let p1: Vec<FieldElem> = g
            .coeffs()
            .iter()
            .map(|ci| next.rational(BigRational::from_integer(ci.clone())))
            .collect();
        let lin = vec![t.clone(), next.integer(-c)];
        let mut p2 = vec![next.rational(BigRational::from_integer(m.leading()))];
        for i in (0..dk).rev() {
            p2 = kpoly_mul(&p2, &lin);
            p2[0] = &p2[0] + &next.rational(BigRational::from_integer(m.coeff(i)));
        }
        let gcd = kpoly_gcd(p1, p2);
        assert_eq!(gcd.len(), 2, "primitive element gcd must be linear");
        let alpha_prime = -&gcd[0];
        let gamma_old = &t - &(&alpha_prime * &next.integer(c));
        let alpha_new = alpha_prime.div_rational(&lcr);
        let next2 = next.clone();
        let embed: Embedding = Box::new(move |x: &FieldElem| {
            let mut acc = next2.zero();
            for ci in x.poly.coeffs().iter().rev() {
                acc = &(&acc * &gamma_old) + &next2.rational(ci.clone());
            }
            acc
        });
        return (next, embed, alpha_new);
    }
    unreachable!("a separating constant always exists")
}

fn separating_constants() -> impl Iterator<Item = i64> {
    (1i64..).flat_map(|n| [n, -n])
}

fn kpoly_trim(p: &mut Vec<FieldElem>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn kpoly_mul(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let field = &a[0].field;
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn kpoly_rem(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut r = a.to_vec();
    let lead_inv = b
        .last()
        .expect("nonzero divisor")
        .inv()
        .expect("nonzero leading coefficient");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&q * bj);
        }
        r.pop();
        kpoly_trim(&mut r);
    }
    r
}

fn kpoly_gcd(mut a: Vec<FieldElem>, mut b: Vec<FieldElem>) -> Vec<FieldElem> {
    kpoly_trim(&mut a);
    kpoly_trim(&mut b);
    while !b.is_empty() {
        let r = kpoly_rem(&a, &b);
        a = b;
        b = r;
    }
    let inv = a.last().expect("nonzero gcd").inv().expect("nonzero");
    a.iter().map(|c| c * &inv).collect()
}

impl FieldElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Coordinates with respect to the power basis `1, γ, γ², …`.
    pub fn coordinates(&self) -> &RatPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.deg() == 0 && self.poly.coeff(0).is_one() && !self.poly.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        (self.poly.deg() == 0).then(|| self.poly.coeff(0))
    }

    pub fn is_rational(&self) -> bool {
        self.poly.deg() == 0
    }

    /// Brings a rational element of another field into this element's field.
    fn align(&self, other: &FieldElem) -> (RatPoly, NumberField) {
        if self.field.same(&other.field) {
            return (other.poly.clone(), self.field.clone());
        }
        if let Some(q) = other.as_rational() {
            return (RatPoly::constant(q), self.field.clone());
        }
        assert!(self.is_rational(), "{}", AlgebraError::FieldMismatch);
        (other.poly.clone(), other.field.clone())
    }

    fn binary(&self, other: &FieldElem, op: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> FieldElem {
        if self.field.same(&other.field) {
            return self.field.elem(op(&self.poly, &other.poly));
        }
        let (o, field) = self.align(other);
        let s = if field.same(&self.field) {
            self.poly.clone()
        } else {
            RatPoly::constant(self.as_rational().expect("rational"))
        };
        field.elem(op(&s, &o))
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(self.field.rational(q.recip()));
        }
        let (g, s, _) = self.poly.ext_gcd(&self.field.0.modulus);
        debug_assert_eq!(g.deg(), 0);
        Some(self.field.elem(s.scale(&g.coeff(0).recip())))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem, AlgebraError> {
        let inv = other.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn div_rational(&self, q: &BigRational) -> FieldElem {
        assert!(!q.is_zero(), "{}", AlgebraError::DivisionByZero);
        self.field.elem(self.poly.scale(&q.recip()))
    }

    pub fn scale(&self, q: &BigRational) -> FieldElem {
        self.field.elem(self.poly.scale(q))
    }

    pub fn pow(&self, mut e: u32) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Enclosure computed from a `2^-bits` enclosure of the generator.
    pub fn enclosure(&self, bits: u64) -> Interval {
        if let Some(q) = self.as_rational() {
            return Interval::point(q);
        }
        let g = self.field.generator_enclosure(bits);
        let mut acc = Interval::point(BigRational::zero());
        for c in self.poly.coeffs().iter().rev() {
            acc = acc
                .mul(&g)
                .add(&Interval::point(c.clone()))
                .round_out(bits + 16);
        }
        acc
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&BigRational::zero());
        }
        let mut bits = 32;
        loop {
            let enc = self.enclosure(bits);
            if enc.lo.is_positive() {
                return Ordering::Greater;
            }
            if enc.hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> FieldElem {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn compare(&self, other: &FieldElem) -> Ordering {
        (self - other).sign()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.enclosure(60).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Primitive integral minimal polynomial with positive leading coefficient.
    pub fn minimal_polynomial(&self) -> IntPoly {
        let d = self.field.degree();
        // Rows: reduced coordinate vector, combination of powers, pivot.
        let mut basis: Vec<(Vec<BigRational>, Vec<BigRational>, usize)> = Vec::new();
        let mut power = self.field.one();
        for j in 0..=d {
            let mut v: Vec<BigRational> = (0..d).map(|i| power.poly.coeff(i)).collect();
            let mut combo = vec![BigRational::zero(); d + 1];
            combo[j] = BigRational::one();
            for (bv, bc, piv) in &basis {
                if v[*piv].is_zero() {
                    continue;
                }
                let f = &v[*piv] / &bv[*piv];
                for i in 0..d {
                    v[i] = &v[i] - &(&f * &bv[i]);
                }
                for i in 0..=d {
                    combo[i] = &combo[i] - &(&f * &bc[i]);
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(piv) => basis.push((v, combo, piv)),
                None => return RatPoly::new(combo).to_primitive_int(),
            }
            power = &power * self;
        }
        unreachable!("powers up to the field degree are dependent")
    }

    /// The element as a standalone real algebraic number.
    pub fn to_algebraic(&self) -> AlgebraicReal {
        if let Some(q) = self.as_rational() {
            return AlgebraicReal::from_rational(q);
        }
        let mp = self.minimal_polynomial();
        let roots = real_roots(&mp);
        if roots.len() == 1 {
            return roots.into_iter().next().unwrap();
        }
        let mut bits = 16;
        loop {
            let enc = self.enclosure(bits);
            let hits: Vec<&AlgebraicReal> = roots
                .iter()
                .filter(|r| r.refined(bits).interval().intersects(&enc))
                .collect();
            if hits.len() == 1 {
                return hits[0].refined(bits);
            }
            bits *= 2;
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.field.same(&other.field) {
            return self.poly == other.poly;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => panic!("{}", AlgebraError::FieldMismatch),
            _ => false,
        }
    }
}

impl Eq for FieldElem {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                let f: fn(&FieldElem, &FieldElem) -> FieldElem = $body;
                f(self, rhs)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.binary(b, |x, y| x.add(y)));
forward_binop!(Sub, sub, |a, b| a.binary(b, |x, y| x.sub(y)));
forward_binop!(Mul, mul, |a, b| a.binary(b, |x, y| x.mul(y)));
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .unwrap_or_else(|e| panic!("{e}")));

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            poly: self.poly.neg(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0.modulus_int)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (≈ {:.6})", self.poly, self.to_f64())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.to_algebraic()),
        }
    }
}

fn combine(
    a: &AlgebraicReal,
    b: &AlgebraicReal,
    op: impl Fn(&FieldElem, &FieldElem) -> Result<FieldElem, AlgebraError>,
) -> Result<AlgebraicReal, AlgebraError> {
    let (_, elems) = NumberField::generated_by(&[a.clone(), b.clone()]);
    Ok(op(&elems[0], &elems[1])?.to_algebraic())
}

impl AlgebraicReal {
    pub fn add(&self, other: &AlgebraicReal) -> AlgebraicReal {
        combine(self, other, |x, y| Ok(x + y)).expect("addition is total")
    }

    pub fn sub(&self, other: &AlgebraicReal) -> AlgebraicReal {
        combine(self, other, |x, y| Ok(x - y)).expect("subtraction is total")
    }

    pub fn mul(&self, other: &AlgebraicReal) -> AlgebraicReal {
        combine(self, other, |x, y| Ok(x * y)).expect("multiplication is total")
    }

    pub fn checked_div(&self, other: &AlgebraicReal) -> Result<AlgebraicReal, AlgebraError> {
        combine(self, other, |x, y| x.checked_div(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: i64) -> AlgebraicReal {
        real_roots(&IntPoly::from_i64s(&[-n, 0, 1])).pop().unwrap()
    }

    #[test]
    fn compositum_of_two_quadratics() {
        let (k, e) = NumberField::generated_by(&[sqrt(2), sqrt(3)]);
        assert_eq!(k.degree(), 4);
        assert_eq!(&e[0] * &e[0], k.integer(2));
        assert_eq!(&e[1] * &e[1], k.integer(3));
        let s = (&e[0] * &e[1]).to_algebraic();
        assert_eq!(s, sqrt(6));
    }

    #[test]
    fn dependent_values_do_not_grow_the_field() {
        let r2 = sqrt(2);
        let (k, e) = NumberField::generated_by(&[r2.clone(), r2.neg(), sqrt(8)]);
        assert_eq!(k.degree(), 2);
        assert_eq!(&e[0] + &e[1], k.zero());
        assert_eq!(&e[2], &(&e[0] * &k.integer(2)));
    }

    #[test]
    fn non_monic_generator() {
        // Root of 2x^2 - 3 = sqrt(3/2).
        let a = real_roots(&IntPoly::from_i64s(&[-3, 0, 2])).pop().unwrap();
        let (k, e) = NumberField::from_generator(&a);
        assert_eq!(k.modulus(), &IntPoly::from_i64s(&[-6, 0, 1]));
        assert_eq!(&e * &e, k.rational(BigRational::new(3.into(), 2.into())));
        assert_eq!(e.minimal_polynomial(), IntPoly::from_i64s(&[-3, 0, 2]));
        assert_eq!(e.to_algebraic(), a);
    }

    #[test]
    fn signs_and_inverses() {
        let (k, e) = NumberField::generated_by(&[sqrt(2)]);
        let x = &e[0] - &k.rational(BigRational::new(141.into(), 100.into()));
        assert_eq!(x.sign(), Ordering::Greater);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(k.zero().inv().is_none());
    }

    #[test]
    fn cubic_compositum_with_quadratic() {
        let cubic = real_roots(&IntPoly::from_i64s(&[-1, -2, 1, 1]));
        let mut vals = cubic.clone();
        vals.push(sqrt(5));
        let (k, e) = NumberField::generated_by(&vals);
        assert_eq!(k.degree(), 6);
        let sum = &(&e[0] + &e[1]) + &e[2];
        assert_eq!(sum, k.integer(-1));
        for (v, x) in vals.iter().zip(&e) {
            assert_eq!(&x.to_algebraic(), v);
        }
    }

    #[test]
    fn algebraic_real_arithmetic() {
        let a = sqrt(2).add(&sqrt(3));
        assert_eq!(
            a.minimal_polynomial(),
            &IntPoly::from_i64s(&[1, 0, -10, 0, 1])
        );
        assert!(sqrt(2)
            .checked_div(&AlgebraicReal::from_integer(0))
            .is_err());
        assert_eq!(sqrt(2).mul(&sqrt(2)), AlgebraicReal::from_integer(2));
    }
}

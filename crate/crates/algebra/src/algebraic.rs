//! Real algebraic numbers represented by a minimal polynomial and an
//! isolating interval.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::factor::factor;
use crate::interval::{pow2, Interval};
use crate::poly::IntPoly;
use crate::roots::{bisect, isolate_irrational_roots, SturmChain};

struct MinPoly {
    poly: IntPoly,
    sturm: OnceLock<SturmChain>,
}

impl MinPoly {
    fn new(poly: IntPoly) -> Arc<Self> {
        Arc::new(MinPoly {
            poly,
            sturm: OnceLock::new(),
        })
    }

    fn sturm(&self) -> &SturmChain {
        self.sturm.get_or_init(|| SturmChain::new(&self.poly))
    }
}

/// An exact real algebraic number.
///
/// Invariants: the polynomial is irreducible over the rationals, primitive,
/// with positive leading coefficient. Rational values have a linear
/// polynomial and a degenerate interval `[r, r]`. Irrational values have an
/// open interval `(lo, hi)` with rational endpoints containing exactly one
/// root of the polynomial; the endpoints themselves are never roots.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: Arc<MinPoly>,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicReal {
    pub fn from_rational(q: BigRational) -> Self {
        let poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicReal {
            poly: MinPoly::new(poly),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds a value from a trusted irreducible polynomial and isolating interval.
    pub(crate) fn from_isolating(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(poly.deg() >= 2);
        AlgebraicReal {
            poly: MinPoly::new(poly),
            lo,
            hi,
        }
    }

    /// Validating constructor for a minimal polynomial and an interval
    /// `[lo, hi]` containing exactly one of its real roots.
    pub fn new(poly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self, AlgebraError> {
        if poly.deg() == 0 {
            return Err(AlgebraError::InvalidMinimalPolynomial(
                "polynomial must have positive degree".into(),
            ));
        }
        if lo > hi {
            return Err(AlgebraError::InvalidInterval(format!("[{lo}, {hi}]")));
        }
        let p = poly.primitive();
        if p != poly {
            return Err(AlgebraError::InvalidMinimalPolynomial(format!(
                "{poly} is not primitive with positive leading coefficient"
            )));
        }
        if !crate::factor::is_irreducible(&p) {
            return Err(AlgebraError::InvalidMinimalPolynomial(format!(
                "{poly} is reducible"
            )));
        }
        if p.deg() == 1 {
            let r = BigRational::new(-p.coeff(0), p.coeff(1));
            if lo > r || r > hi {
                return Err(AlgebraError::InvalidInterval(format!(
                    "[{lo}, {hi}] does not contain the root {r}"
                )));
            }
            return Ok(Self::from_rational(r));
        }
        let sturm = SturmChain::new(&p);
        if lo == hi || sturm.count_in(&lo, &hi) != 1 {
            return Err(AlgebraError::InvalidInterval(format!(
                "[{lo}, {hi}] does not isolate a single root of {p}"
            )));
        }
        Ok(AlgebraicReal {
            poly: Arc::new(MinPoly {
                poly: p,
                sturm: sturm.into(),
            }),
            lo,
            hi,
        })
    }

    pub fn minimal_polynomial(&self) -> &IntPoly {
        &self.poly.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.poly.deg()
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.lo.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.lo.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_integer())
    }

    /// Narrows the isolating interval until its width is at most `2^-bits`.
    pub fn refine(&mut self, bits: u64) {
        if self.is_rational() {
            return;
        }
        let target = BigRational::one() / pow2(bits);
        let p = &self.poly.poly;
        let lo_sign = p.sign_at(&self.lo);
        while &self.hi - &self.lo > target {
            let (lo, hi) = bisect(p, &self.lo, &self.hi, lo_sign);
            self.lo = lo;
            self.hi = hi;
        }
    }

    pub fn refined(&self, bits: u64) -> Self {
        let mut r = self.clone();
        r.refine(bits);
        r
    }

    fn bisect_once(&mut self) {
        if self.is_rational() {
            return;
        }
        let p = &self.poly.poly;
        let lo_sign = p.sign_at(&self.lo);
        let (lo, hi) = bisect(p, &self.lo, &self.hi, lo_sign);
        self.lo = lo;
        self.hi = hi;
    }

    pub fn sign(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&BigRational::zero());
        }
        let mut s = self.clone();
        loop {
            if s.lo >= BigRational::zero() {
                return Ordering::Greater;
            }
            if s.hi <= BigRational::zero() {
                return Ordering::Less;
            }
            s.bisect_once();
        }
    }

    pub fn neg(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(-q);
        }
        AlgebraicReal::from_isolating(self.poly.poly.reflect().primitive(), -&self.hi, -&self.lo)
    }

    /// Exact comparison.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(&b),
            (None, None) if self.poly.poly == other.poly.poly => {
                let lo = (&self.lo).max(&other.lo);
                let hi = (&self.hi).min(&other.hi);
                if lo < hi && self.poly.sturm().count_in(lo, hi) >= 1 {
                    return Ordering::Equal;
                }
            }
            _ => {}
        }
        // The values differ, so refining both isolating intervals separates them.
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.bisect_once();
            b.bisect_once();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.refined(60);
        r.interval().midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded to `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
        let value = match self.as_rational() {
            Some(q) => q,
            None => {
                let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 4;
                self.refined(bits).interval().midpoint()
            }
        };
        let scaled = (value * &scale).round().to_integer();
        format_scaled_decimal(&scaled, digits)
    }
}

fn format_scaled_decimal(scaled: &BigInt, digits: usize) -> String {
    let neg = scaled.is_negative();
    let mut s = scaled.abs().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Distinct real roots of a nonzero polynomial, in ascending order.
pub fn real_roots(p: &IntPoly) -> Vec<AlgebraicReal> {
    let mut out = Vec::new();
    for (f, _) in factor(p).factors {
        if f.deg() == 1 {
            out.push(AlgebraicReal::from_rational(BigRational::new(
                -f.coeff(0),
                f.coeff(1),
            )));
        } else {
            let shared = MinPoly::new(f.clone());
            for (lo, hi) in isolate_irrational_roots(&f) {
                out.push(AlgebraicReal {
                    poly: shared.clone(),
                    lo,
                    hi,
                });
            }
        }
    }
    out.sort_by(|a, b| a.compare(b));
    out
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<BigRational> for AlgebraicReal {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for AlgebraicReal {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.poly.poly, self.lo, self.hi
            ),
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.to_decimal(f.precision().unwrap_or(6))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn roots_of_mixed_polynomial_are_sorted() {
        // (x - 1/2)(x^2 - 2)
        let p = IntPoly::from_i64s(&[2, -4, -1, 2]);
        let r = real_roots(&p);
        assert_eq!(r.len(), 3);
        assert!(r[0] < r[1] && r[1] < r[2]);
        assert_eq!(r[1].as_rational(), Some(q(1, 2)));
        assert_eq!(r[2].to_decimal(10), "1.4142135624");
        assert_eq!(r[0].to_decimal(3), "-1.414");
    }

    #[test]
    fn equality_across_different_intervals() {
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let a = AlgebraicReal::new(p.clone(), q(1, 1), q(2, 1)).unwrap();
        let b = AlgebraicReal::new(p.clone(), q(13, 10), q(3, 2)).unwrap();
        assert_eq!(a, b);
        let c = AlgebraicReal::new(p, q(-2, 1), q(-1, 1)).unwrap();
        assert!(c < a);
        assert_eq!(c.neg(), a);
    }

    #[test]
    fn rejects_non_isolating_interval() {
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        assert!(AlgebraicReal::new(p.clone(), q(-2, 1), q(2, 1)).is_err());
        assert!(AlgebraicReal::new(IntPoly::from_i64s(&[-4, 0, 1]), q(1, 1), q(3, 1)).is_err());
    }

    #[test]
    fn sign_and_rational_comparison() {
        let sqrt2 = real_roots(&IntPoly::from_i64s(&[-2, 0, 1]))[1].clone();
        assert_eq!(sqrt2.sign(), Ordering::Greater);
        assert!(sqrt2 > AlgebraicReal::from_rational(q(141, 100)));
        assert!(sqrt2 < AlgebraicReal::from_rational(q(142, 100)));
        assert_eq!(
            AlgebraicReal::from_rational(q(-3, 7)).to_decimal(4),
            "-0.4286"
        );
    }
}

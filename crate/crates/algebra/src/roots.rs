//! Real root isolation by Sturm sequences and bisection refinement.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{IntPoly, RatPoly};

/// Sturm chain of a square-free polynomial, each member scaled by a
/// positive constant to integer coefficients.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

fn positive_integer_scaling(p: &RatPoly) -> IntPoly {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let poly = IntPoly::new(ints);
    let g = poly.content();
    if g.is_zero() || g.is_one() {
        poly
    } else {
        IntPoly::new(poly.coeffs().iter().map(|c| c / &g).collect())
    }
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.deg() == 0 {
            return SturmChain { chain };
        }
        let mut a = p.to_rat();
        let mut b = a.derivative();
        while !b.is_zero() {
            chain.push(positive_integer_scaling(&b));
            let r = a.rem(&b).neg();
            a = b;
            b = r;
        }
        SturmChain { chain }
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lc_pos = p.leading().is_positive();
            let odd = p.deg() % 2 == 1;
            let pos = if positive { lc_pos } else { lc_pos ^ odd };
            if pos {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Power of two bounding the absolute value of every complex root (Cauchy).
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.deg())
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = BigRational::one() + BigRational::new(max, lc);
    let mut b = BigRational::one();
    while b < bound {
        b *= BigRational::from_integer(BigInt::from(2));
    }
    b
}

/// Isolating intervals `(lo, hi)` for the real roots of a square-free
/// polynomial without rational roots, ascending. Each interval contains
/// exactly one root and neither endpoint is a root.
pub fn isolate_irrational_roots(p: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let sturm = SturmChain::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count_in(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// One bisection step on an isolating interval of `p` with sign(p(lo)) = `lo_sign`.
pub fn bisect(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    lo_sign: Ordering,
) -> (BigRational, BigRational) {
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    let s = p.sign_at(&mid);
    debug_assert!(
        s != Ordering::Equal,
        "irrational root hit a rational midpoint"
    );
    if s == lo_sign {
        (mid, hi.clone())
    } else {
        (lo.clone(), mid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts_roots_of_x2_minus_2() {
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_real(), 2);
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        assert_eq!(s.count_in(&one, &two), 1);
        assert_eq!(s.count_in(&-&two, &two), 2);
    }

    #[test]
    fn isolation_of_heptagon_cubic() {
        let p = IntPoly::from_i64s(&[-1, -2, 1, 1]);
        let roots = isolate_irrational_roots(&p);
        assert_eq!(roots.len(), 3);
        for (lo, hi) in &roots {
            assert_ne!(p.sign_at(lo), p.sign_at(hi));
        }
    }

    #[test]
    fn complex_roots_are_not_counted() {
        let p = IntPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(SturmChain::new(&p).count_real(), 0);
        assert!(isolate_irrational_roots(&p).is_empty());
    }
}

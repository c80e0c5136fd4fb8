//! Polynomial arithmetic and factorization over a small prime field `Z/pZ`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::poly::IntPoly;

/// Polynomial over `Z/pZ`, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub c: Vec<u64>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub p: u64,
}

impl ModPoly {
    pub fn new(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { c }
    }

    pub fn zero() -> Self {
        ModPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        ModPoly { c: vec![1] }
    }

    pub fn x() -> Self {
        ModPoly { c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    #[cfg(test)]
    pub fn is_one(&self) -> bool {
        self.c == [1]
    }
}

impl PrimeField {
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn reduce_int(&self, x: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        x.mod_floor(&m)
            .to_u64()
            .expect("reduced residue fits in u64")
    }

    /// Reduces every coefficient of `f` modulo `p`.
    pub fn reduce(&self, f: &IntPoly) -> ModPoly {
        ModPoly::new(f.coeffs().iter().map(|c| self.reduce_int(c)).collect())
    }

    pub fn add_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.c.len().max(b.c.len());
        ModPoly::new(
            (0..n)
                .map(|i| {
                    self.add(
                        a.c.get(i).copied().unwrap_or(0),
                        b.c.get(i).copied().unwrap_or(0),
                    )
                })
                .collect(),
        )
    }

    pub fn sub_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.c.len().max(b.c.len());
        ModPoly::new(
            (0..n)
                .map(|i| {
                    self.sub(
                        a.c.get(i).copied().unwrap_or(0),
                        b.c.get(i).copied().unwrap_or(0),
                    )
                })
                .collect(),
        )
    }

    pub fn mul_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_zero() || b.is_zero() {
            return ModPoly::zero();
        }
        let mut out = vec![0u64; a.c.len() + b.c.len() - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        ModPoly::new(out)
    }

    pub fn scale_poly(&self, a: &ModPoly, k: u64) -> ModPoly {
        ModPoly::new(a.c.iter().map(|&x| self.mul(x, k)).collect())
    }

    pub fn monic(&self, a: &ModPoly) -> ModPoly {
        match a.c.last() {
            None => a.clone(),
            Some(&lc) => self.scale_poly(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_zero(), "division by zero polynomial mod p");
        if a.c.len() < b.c.len() {
            return (ModPoly::zero(), a.clone());
        }
        let db = b.deg();
        let inv_lc = self.inv(*b.c.last().unwrap());
        let mut rem = a.c.clone();
        let mut quot = vec![0u64; a.c.len() - b.c.len() + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + db];
            if top == 0 {
                continue;
            }
            let q = self.mul(top, inv_lc);
            for (j, &bj) in b.c.iter().enumerate() {
                rem[i + j] = self.sub(rem[i + j], self.mul(q, bj));
            }
            quot[i] = q;
        }
        rem.truncate(db);
        (ModPoly::new(quot), ModPoly::new(rem))
    }

    pub fn rem(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`.
    pub fn ext_gcd(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (ModPoly::one(), ModPoly::zero());
        let (mut t0, mut t1) = (ModPoly::zero(), ModPoly::one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        assert_eq!(r0.deg(), 0, "ext_gcd inputs must be coprime");
        let inv = self.inv(r0.c[0]);
        (self.scale_poly(&s0, inv), self.scale_poly(&t0, inv))
    }

    pub fn derivative(&self, a: &ModPoly) -> ModPoly {
        ModPoly::new(
            a.c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &x)| self.mul(x, (i as u64) % self.p))
                .collect(),
        )
    }

    /// `base^e mod modulus`.
    pub fn pow_mod(&self, base: &ModPoly, e: &BigUint, modulus: &ModPoly) -> ModPoly {
        let mut result = ModPoly::one();
        let b = self.rem(base, modulus);
        for bit in (0..e.bits()).rev() {
            result = self.rem(&self.mul_poly(&result, &result), modulus);
            if e.bit(bit) {
                result = self.rem(&self.mul_poly(&result, &b), modulus);
            }
        }
        result
    }

    pub fn is_square_free(&self, f: &ModPoly) -> bool {
        let d = self.derivative(f);
        if d.is_zero() {
            return false;
        }
        self.gcd(f, &d).deg() == 0
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    pub fn distinct_degree(&self, f: &ModPoly) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let mut h = ModPoly::x();
        let p = BigUint::from(self.p);
        let mut i = 0;
        while rest.deg() >= 2 * (i + 1) {
            i += 1;
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&self.sub_poly(&h, &ModPoly::x()), &rest);
            if g.deg() > 0 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, i));
            }
        }
        if rest.deg() > 0 {
            let d = rest.deg();
            out.push((self.monic(&rest), d));
        }
        out
    }

    /// Splits a product of distinct monic irreducibles of degree `d` (odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
        let n = f.deg();
        if n == d {
            return vec![self.monic(f)];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
        loop {
            let a = ModPoly::new((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.deg() == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let candidate = if g.deg() > 0 && g.deg() < n {
                g
            } else {
                let b = self.pow_mod(&a, &exp, f);
                self.gcd(&self.sub_poly(&b, &ModPoly::one()), f)
            };
            if candidate.deg() > 0 && candidate.deg() < n {
                let other = self.monic(&self.div_rem(f, &candidate).0);
                let mut out = self.equal_degree(&candidate, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    /// Complete factorization of a monic square-free polynomial into monic irreducibles.
    #[cfg(test)]
    pub fn factor<R: Rng>(&self, f: &ModPoly, rng: &mut R) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out
    }

    /// Lifts residues to integers in `[0, p)`.
    pub fn lift(&self, a: &ModPoly) -> IntPoly {
        IntPoly::new(a.c.iter().map(|&x| BigInt::from(x)).collect())
    }
}

/// Small odd primes, used to pick a good modulus for factorization.
pub(crate) fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

pub(crate) fn lifted_to_int(x: &BigInt, modulus: &BigInt) -> BigInt {
    let r = x.mod_floor(modulus);
    let half: BigInt = modulus >> 1;
    if r > half {
        r - modulus
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_mod_seven() {
        let fp = PrimeField { p: 7 };
        // x^4 - 1 = (x-1)(x+1)(x^2+1) mod 7; x^2+1 is irreducible mod 7.
        let f = ModPoly::new(vec![6, 0, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = fp.factor(&f, &mut rng);
        fs.sort_by_key(|g| (g.deg(), g.c.clone()));
        assert_eq!(
            fs,
            vec![
                ModPoly::new(vec![1, 1]),
                ModPoly::new(vec![6, 1]),
                ModPoly::new(vec![1, 0, 1])
            ]
        );
    }

    #[test]
    fn ext_gcd_identity() {
        let fp = PrimeField { p: 11 };
        let a = ModPoly::new(vec![1, 1]);
        let b = ModPoly::new(vec![3, 0, 1]);
        let (s, t) = fp.ext_gcd(&a, &b);
        let lhs = fp.add_poly(&fp.mul_poly(&s, &a), &fp.mul_poly(&t, &b));
        assert!(lhs.is_one());
    }
}

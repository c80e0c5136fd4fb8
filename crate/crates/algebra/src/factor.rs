//! Factorization of integer polynomials over the rationals.
//!
//! Square-free decomposition, then Zassenhaus: factor modulo a small
//! prime, Hensel-lift to a power exceeding the Mignotte coefficient bound,
//! and recombine lifted factors by exact trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::modular::{lifted_to_int, odd_primes, ModPoly, PrimeField};
use crate::poly::{square_free_decomposition, IntPoly};

/// Complete factorization `content * prod f_i^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient,
    /// sorted by degree then coefficients.
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factors a nonzero integer polynomial into irreducibles over the rationals.
pub fn factor(p: &IntPoly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut content = p.content();
    if p.leading().is_negative() {
        content = -content;
    }
    let mut factors = Vec::new();
    for (sf, mult) in square_free_decomposition(p) {
        for g in factor_square_free(&sf) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Factorization { content, factors }
}

/// Irreducible factors of a square-free primitive polynomial.
pub fn factor_square_free(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    // Pull out the factor x first; it keeps the monic transform small.
    if f.coeff(0).is_zero() {
        let rest = f.div_exact(&IntPoly::x()).expect("x divides f");
        let mut out = vec![IntPoly::x()];
        out.extend(factor_square_free(&rest));
        return out;
    }
    let lc = f.leading();
    if lc.is_one() {
        return zassenhaus_monic(&f);
    }
    // F(y) = lc^(n-1) f(y / lc) is monic; factors map back through y = lc*x.
    let mut monic = vec![BigInt::zero(); n + 1];
    monic[n] = BigInt::one();
    let mut pow = BigInt::one();
    for i in (0..n).rev() {
        monic[i] = f.coeff(i) * &pow;
        pow *= &lc;
    }
    let big_f = IntPoly::new(monic);
    zassenhaus_monic(&big_f)
        .into_iter()
        .map(|g| {
            let scaled: Vec<BigInt> = g
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * num_traits::pow(lc.clone(), i))
                .collect();
            IntPoly::new(scaled).primitive()
        })
        .collect()
}

fn mignotte_bound(f: &IntPoly) -> BigInt {
    // Any factor of f has coefficients bounded by 2^deg(f) * ||f||_2.
    let norm = f.norm2_squared().sqrt() + BigInt::one();
    norm << f.deg()
}

/// Squarefree factorization modulo a prime: factors with multiplicities.
type ModFactors = Vec<(ModPoly, usize)>;

fn choose_prime(f: &IntPoly) -> (PrimeField, ModFactors) {
    let mut best: Option<(PrimeField, ModFactors, usize)> = None;
    let mut tried = 0;
    for p in odd_primes() {
        let fp = PrimeField { p };
        let fm = fp.reduce(f);
        if fm.deg() != f.deg() || !fp.is_square_free(&fm) {
            continue;
        }
        let ddf = fp.distinct_degree(&fm);
        let count: usize = ddf.iter().map(|(g, d)| g.deg() / d).sum();
        if best.as_ref().is_none_or(|(_, _, c)| count < *c) {
            best = Some((fp, ddf, count));
        }
        tried += 1;
        if count == 1 || tried >= 6 {
            break;
        }
    }
    let (fp, ddf, _) = best.expect("some prime keeps f square-free");
    (fp, ddf)
}

/// Zassenhaus factorization of a monic square-free integer polynomial.
fn zassenhaus_monic(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let (fp, ddf) = choose_prime(f);
    let count: usize = ddf.iter().map(|(g, d)| g.deg() / d).sum();
    if count == 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d1ce);
    let mut modular = Vec::new();
    for (g, d) in ddf {
        modular.extend(fp.equal_degree(&g, d, &mut rng));
    }

    let bound = mignotte_bound(f) * 2 + 1;
    let p = BigInt::from(fp.p);
    let mut k = 1u32;
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift_all(f, &modular, fp, k);
    recombine(f, lifted, &modulus)
}

fn reduce_coeffs(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mod_poly_from_int(fp: PrimeField, f: &IntPoly) -> ModPoly {
    fp.reduce(f)
}

/// Lifts `f = g*h (mod p)` to `f = G*H (mod p^k)` with monic `G`, `H`.
fn hensel_pair(
    f: &IntPoly,
    g: &ModPoly,
    h: &ModPoly,
    fp: PrimeField,
    k: u32,
) -> (IntPoly, IntPoly) {
    let (s, t) = fp.ext_gcd(g, h);
    let p = BigInt::from(fp.p);
    let mut big_g = fp.lift(g);
    let mut big_h = fp.lift(h);
    let mut m = p.clone();
    for _ in 1..k {
        let diff = f.sub(&big_g.mul(&big_h));
        let e = IntPoly::new(diff.coeffs().iter().map(|c| c / &m).collect());
        let e_p = mod_poly_from_int(fp, &e);
        let (q, r) = fp.div_rem(&fp.mul_poly(&t, &e_p), g);
        let dg = r;
        let dh = fp.add_poly(&fp.mul_poly(&s, &e_p), &fp.mul_poly(&q, h));
        big_g = big_g.add(&fp.lift(&dg).scale(&m));
        big_h = big_h.add(&fp.lift(&dh).scale(&m));
        m *= &p;
        big_g = reduce_coeffs(&big_g, &m);
        big_h = reduce_coeffs(&big_h, &m);
    }
    (big_g, big_h)
}

fn hensel_lift_all(f: &IntPoly, factors: &[ModPoly], fp: PrimeField, k: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let m = BigInt::from(fp.p).pow(k);
        return vec![reduce_coeffs(f, &m)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[ModPoly]| {
        fs.iter()
            .fold(ModPoly::one(), |acc, g| fp.mul_poly(&acc, g))
    };
    let g = prod(&factors[..mid]);
    let h = prod(&factors[mid..]);
    let (big_g, big_h) = hensel_pair(f, &g, &h, fp, k);
    let mut out = hensel_lift_all(&big_g, &factors[..mid], fp, k);
    out.extend(hensel_lift_all(&big_h, &factors[mid..], fp, k));
    out
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| lifted_to_int(c, m)).collect())
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in Subsets::new(lifted.len(), size) {
            let mut g = IntPoly::one();
            for &i in &subset {
                g = reduce_coeffs(&g.mul(&lifted[i]), modulus);
            }
            let g = symmetric(&g, modulus);
            // Cheap necessary test on constant terms before full division.
            let c0 = g.coeff(0);
            if !c0.is_zero() && !rest.coeff(0).is_multiple_of(&c0) {
                continue;
            }
            if let Some(q) = rest.div_exact(&g) {
                out.push(g);
                rest = q;
                let mut keep = Vec::with_capacity(lifted.len() - size);
                for (i, h) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(h);
                    }
                }
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    out
}

/// Lexicographic k-subsets of `0..n`.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Whether `f` (nonconstant) is irreducible over the rationals.
pub fn is_irreducible(f: &IntPoly) -> bool {
    let fac = factor(f);
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn subsets_enumerate_binomial() {
        assert_eq!(Subsets::new(5, 2).count(), 10);
        assert_eq!(Subsets::new(4, 0).count(), 1);
    }

    #[test]
    fn linear_factors() {
        // (x-4)(x-2)x(x+2)(x+4) = x^5 - 20x^3 + 64x
        let f = p(&[0, 64, 0, -20, 0, 1]);
        let fac = factor(&f);
        assert_eq!(fac.factors.len(), 5);
        assert!(fac.factors.iter().all(|(g, e)| g.deg() == 1 && *e == 1));
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn swinnerton_dyer_like_is_irreducible() {
        // x^4 - 10x^2 + 1, minimal polynomial of √2 + √3: reducible mod every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn non_monic_factorization() {
        // (2x - 1)(3x^2 - 2)
        let f = p(&[-1, 2]).mul(&p(&[-2, 0, 3]));
        let fac = factor(&f);
        assert_eq!(fac.factors, vec![(p(&[-1, 2]), 1), (p(&[-2, 0, 3]), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn repeated_and_content() {
        // -6 (x^2 - 2)^2 (x + 1)
        let f = p(&[-2, 0, 1])
            .mul(&p(&[-2, 0, 1]))
            .mul(&p(&[1, 1]))
            .scale(&BigInt::from(-6));
        let fac = factor(&f);
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(fac.factors, vec![(p(&[1, 1]), 1), (p(&[-2, 0, 1]), 2)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn cyclotomic_products() {
        // x^12 - 1 splits into six cyclotomic factors.
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = p(&c);
        let fac = factor(&f);
        assert_eq!(fac.factors.len(), 6);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn heptagon_cubic() {
        // Minimal polynomial of 2cos(2π/7).
        assert!(is_irreducible(&p(&[-1, -2, 1, 1])));
    }
}

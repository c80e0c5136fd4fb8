//! Eigenvalues, cosine sequences and multiplicities of an intersection array.
//!
//! All quantities live in one real number field `K` generated by the
//! eigenvalues, so every later identity is a comparison of exact elements
//! of `K`.

use drg_algebra::{real_roots, AlgebraicReal, FieldElem, IntPoly, NumberField};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::array::IntersectionArray;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("characteristic polynomial has {found} distinct real roots, expected {expected}")]
    RootCount { expected: usize, found: usize },
    #[error("cosine sum for eigenvalue {index} vanishes; multiplicity undefined")]
    DegenerateMultiplicity { index: usize },
}

/// Spectrum in the natural (descending) ordering `θ_0 > θ_1 > … > θ_d`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    field: NumberField,
    char_poly: IntPoly,
    theta: Vec<FieldElem>,
    algebraic: Vec<AlgebraicReal>,
    multiplicities: Vec<FieldElem>,
    /// `cosines[i][u] = σ_u` for eigenvalue `θ_i`.
    cosines: Vec<Vec<FieldElem>>,
}

/// `det(xI − L)` for the tridiagonal intersection matrix `L` whose row `i`
/// is `(c_i, a_i, b_i)`, by the continuant recurrence.
pub fn characteristic_polynomial(arr: &IntersectionArray) -> IntPoly {
    let x = IntPoly::x();
    let lin = |a: i64| x.sub(&IntPoly::constant(BigInt::from(a)));
    let mut prev = IntPoly::one();
    let mut cur = lin(arr.a(0));
    for i in 1..=arr.diameter() {
        let bc = BigInt::from(arr.b(i - 1)) * BigInt::from(arr.c(i));
        let next = lin(arr.a(i)).mul(&cur).sub(&prev.scale(&bc));
        prev = cur;
        cur = next;
    }
    cur
}

/// Cosine sequence of `θ` from `σ_0 = 1`, `σ_1 = θ/k` and
/// `c_i σ_{i−1} + a_i σ_i + b_i σ_{i+1} = θ σ_i`.
pub fn cosine_sequence(arr: &IntersectionArray, theta: &FieldElem) -> Vec<FieldElem> {
    let field = theta.field();
    let d = arr.diameter();
    let k = BigRational::from_integer(arr.valency().into());
    let mut sigma = vec![field.one(), theta.div_rational(&k)];
    for i in 1..d {
        let ai = field.integer(arr.a(i));
        let ci = field.integer(arr.c(i));
        let bi = BigRational::from_integer(arr.b(i).into());
        let next = ((theta - &ai) * sigma[i].clone() - &ci * &sigma[i - 1]).div_rational(&bi);
        sigma.push(next);
    }
    sigma
}

impl Spectrum {
    pub fn new(arr: &IntersectionArray) -> Result<Self, SpectrumError> {
        let d = arr.diameter();
        let char_poly = characteristic_polynomial(arr);
        let mut roots = real_roots(&char_poly);
        if roots.len() != d + 1 {
            return Err(SpectrumError::RootCount {
                expected: d + 1,
                found: roots.len(),
            });
        }
        roots.reverse();
        let (field, theta) = NumberField::generated_by(&roots);
        let n = arr.vertex_count();
        let mut cosines = Vec::with_capacity(d + 1);
        let mut multiplicities = Vec::with_capacity(d + 1);
        for (index, t) in theta.iter().enumerate() {
            let sigma = cosine_sequence(arr, t);
            let weight = sigma
                .iter()
                .enumerate()
                .fold(field.zero(), |acc, (u, s)| acc + (s * s).scale(arr.k_i(u)));
            let inv = weight
                .inv()
                .ok_or(SpectrumError::DegenerateMultiplicity { index })?;
            multiplicities.push(inv.scale(n));
            cosines.push(sigma);
        }
        Ok(Spectrum {
            field,
            char_poly,
            theta,
            algebraic: roots,
            multiplicities,
            cosines,
        })
    }

    pub fn diameter(&self) -> usize {
        self.theta.len() - 1
    }

    /// The field `K` containing every eigenvalue.
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn characteristic_polynomial(&self) -> &IntPoly {
        &self.char_poly
    }

    pub fn theta(&self, i: usize) -> &FieldElem {
        &self.theta[i]
    }

    pub fn eigenvalues(&self) -> &[FieldElem] {
        &self.theta
    }

    /// Eigenvalues as standalone algebraic numbers (minimal polynomial plus
    /// isolating interval).
    pub fn eigenvalues_algebraic(&self) -> &[AlgebraicReal] {
        &self.algebraic
    }

    pub fn multiplicity(&self, i: usize) -> &FieldElem {
        &self.multiplicities[i]
    }

    pub fn multiplicities(&self) -> &[FieldElem] {
        &self.multiplicities
    }

    /// `σ_u` of the cosine sequence for `θ_i`.
    pub fn cosine(&self, i: usize, u: usize) -> &FieldElem {
        &self.cosines[i][u]
    }

    pub fn cosine_sequence(&self, i: usize) -> &[FieldElem] {
        &self.cosines[i]
    }

    /// Index of the eigenvalue equal to `value`, if any.
    pub fn index_of(&self, value: &FieldElem) -> Option<usize> {
        self.theta.iter().position(|t| t == value)
    }

    /// `Σ_i m_i θ_i^s`.
    pub fn moment(&self, s: u32) -> FieldElem {
        self.theta
            .iter()
            .zip(&self.multiplicities)
            .fold(self.field.zero(), |acc, (t, m)| acc + m * &t.pow(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn hamming_spectrum() {
        let arr = parse_array("4,3,2,1;1,2,3,4").unwrap();
        let s = Spectrum::new(&arr).unwrap();
        let th: Vec<_> = s
            .eigenvalues()
            .iter()
            .map(|t| t.as_rational().unwrap())
            .collect();
        assert_eq!(th, [4, 2, 0, -2, -4].map(|x| q(x, 1)));
        let m: Vec<_> = s
            .multiplicities()
            .iter()
            .map(|t| t.as_rational().unwrap())
            .collect();
        assert_eq!(m, [1, 4, 6, 4, 1].map(|x| q(x, 1)));
        let sigma: Vec<_> = s
            .cosine_sequence(1)
            .iter()
            .map(|t| t.as_rational().unwrap())
            .collect();
        assert_eq!(sigma, vec![q(1, 1), q(1, 2), q(0, 1), q(-1, 2), q(-1, 1)]);
        assert_eq!(s.moment(2).as_rational(), Some(q(64, 1)));
    }

    #[test]
    fn hadamard_spectrum_has_surds() {
        let arr = parse_array("8,7,4,1;1,4,7,8").unwrap();
        let s = Spectrum::new(&arr).unwrap();
        assert_eq!(s.field().degree(), 2);
        let t1 = s.theta(1);
        assert!(!t1.is_rational());
        assert_eq!((t1 * t1).as_rational(), Some(q(8, 1)));
        assert_eq!(s.theta(3), &-t1);
        assert_eq!(s.theta(2).as_rational(), Some(q(0, 1)));
    }

    #[test]
    fn pentagon_multiplicities() {
        let arr = parse_array("2,1;1,1").unwrap();
        let s = Spectrum::new(&arr).unwrap();
        assert_eq!(s.multiplicity(1).as_rational(), Some(q(2, 1)));
        assert_eq!(s.multiplicity(2).as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn selfdual_spectrum() {
        let arr = parse_array("10,5,4,2;1,2,2,10").unwrap();
        let s = Spectrum::new(&arr).unwrap();
        let m: Vec<_> = s
            .multiplicities()
            .iter()
            .map(|t| t.as_rational().unwrap())
            .collect();
        assert_eq!(m, [1, 10, 25, 50, 10].map(|x| q(x, 1)));
        let sum = s.theta(1) + s.theta(4);
        assert_eq!(sum.as_rational(), Some(q(4, 1)));
    }
}

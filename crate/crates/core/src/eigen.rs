//! First and second eigenmatrices `P`, `Q` with `PQ = nI`.

use drg_algebra::{FieldElem, NumberField};
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EigenError {
    #[error("first eigenmatrix is singular")]
    Singular,
    #[error("P·Q differs from n·I at ({0}, {1})")]
    ProductMismatch(usize, usize),
}

/// A square matrix over a number field, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> FieldElem) -> Self {
        let entries = (0..size * size).map(|x| f(x / size, x % size)).collect();
        Matrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.size + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let field = self.entries[0].field().clone();
        Matrix::from_fn(self.size, |r, c| {
            (0..self.size).fold(field.zero(), |acc, t| {
                acc + self.get(r, t) * other.get(t, c)
            })
        })
    }

    /// Inverse by Gauss–Jordan elimination, `None` when singular.
    pub fn inverse(&self, field: &NumberField) -> Option<Matrix> {
        let n = self.size;
        let mut a: Vec<Vec<FieldElem>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<FieldElem>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for c in 0..n {
                a[col][c] = &a[col][c] * &p;
                inv[col][c] = &inv[col][c] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    inv[r][c] = &inv[r][c] - &(&f * &inv[col][c]);
                }
            }
        }
        Some(Matrix::from_fn(n, |r, c| inv[r][c].clone()))
    }
}

/// `P[i][u] = k_u σ_{i,u}` (rows: eigenvalues, columns: relations) and
/// `Q = n P⁻¹` (rows: relations, columns: idempotents).
#[derive(Debug, Clone)]
pub struct Eigenmatrices {
    pub p: Matrix,
    pub q: Matrix,
}

impl Eigenmatrices {
    pub fn new(arr: &IntersectionArray, spec: &Spectrum) -> Result<Self, EigenError> {
        let d = arr.diameter();
        let field = spec.field();
        let p = Matrix::from_fn(d + 1, |i, u| spec.cosine(i, u).scale(arr.k_i(u)));
        let q = p.inverse(field).ok_or(EigenError::Singular)?;
        let n = arr.vertex_count();
        let q = Matrix::from_fn(d + 1, |r, c| q.get(r, c).scale(n));
        let em = Eigenmatrices { p, q };
        em.check_product(arr)?;
        Ok(em)
    }

    /// Exact verification of `PQ = nI`.
    pub fn check_product(&self, arr: &IntersectionArray) -> Result<(), EigenError> {
        let prod = self.p.mul(&self.q);
        let n = arr.vertex_count();
        for r in 0..prod.size() {
            for c in 0..prod.size() {
                let e = prod.get(r, c);
                let ok = if r == c {
                    e.as_rational().as_ref() == Some(n)
                } else {
                    e.is_zero()
                };
                if !ok {
                    return Err(EigenError::ProductMismatch(r, c));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    #[test]
    fn hamming_is_formally_self_dual() {
        let arr = parse_array("4,3,2,1;1,2,3,4").unwrap();
        let spec = Spectrum::new(&arr).unwrap();
        let em = Eigenmatrices::new(&arr, &spec).unwrap();
        assert_eq!(em.p, em.q);
        let row0: Vec<_> = (0..5)
            .map(|u| em.p.get(0, u).as_rational().unwrap())
            .collect();
        let ks: Vec<_> = arr.valencies().to_vec();
        assert_eq!(row0, ks);
        for i in 0..5 {
            assert!(em.p.get(i, 0).is_one());
            assert_eq!(em.q.get(0, i), spec.multiplicity(i));
        }
    }

    #[test]
    fn pentagon_inverse_in_quadratic_field() {
        let arr = parse_array("2,1;1,1").unwrap();
        let spec = Spectrum::new(&arr).unwrap();
        let em = Eigenmatrices::new(&arr, &spec).unwrap();
        assert!(!em.p.get(1, 1).is_rational());
        em.check_product(&arr).unwrap();
    }
}

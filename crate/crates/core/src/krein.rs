//! Krein parameters `q^h_{ij}`, defined by `E_i ∘ E_j = n⁻¹ Σ_h q^h_{ij} E_h`.

use std::cmp::Ordering;
use std::sync::Arc;

use drg_algebra::FieldElem;
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::eigen::Eigenmatrices;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KreinError {
    #[error("cosine-sum and dual-eigenmatrix routes disagree at q^{0}_{{{1}{2}}}")]
    RouteMismatch(usize, usize, usize),
    #[error("ordering is not a permutation of 0..=d fixing 0")]
    BadOrdering,
}

/// The Krein tensor under an idempotent ordering.
///
/// Values are stored once in the natural labelling; `ordering[i]` is the
/// natural index of the idempotent labelled `i`, so reorderings are free.
#[derive(Debug, Clone)]
pub struct KreinTensor {
    d: usize,
    natural: Arc<Vec<FieldElem>>,
    ordering: Vec<usize>,
}

fn idx(d: usize, h: usize, i: usize, j: usize) -> usize {
    let s = d + 1;
    (h * s + i) * s + j
}

/// `q^h_{ij} = (m_i m_j / n) Σ_u k_u σ_{i,u} σ_{j,u} σ_{h,u}` in natural labels.
fn cosine_route(arr: &IntersectionArray, spec: &Spectrum) -> Vec<FieldElem> {
    let d = arr.diameter();
    let s = d + 1;
    let field = spec.field();
    let n = arr.vertex_count();
    let mut out = vec![field.zero(); s * s * s];
    for i in 0..s {
        for j in i..s {
            let weight: Vec<FieldElem> = (0..s)
                .map(|u| (spec.cosine(i, u) * spec.cosine(j, u)).scale(arr.k_i(u)))
                .collect();
            let scale = (spec.multiplicity(i) * spec.multiplicity(j)).div_rational(n);
            for h in 0..s {
                let sum = (0..s).fold(field.zero(), |acc, u| acc + &weight[u] * spec.cosine(h, u));
                let v = &scale * &sum;
                out[idx(d, h, j, i)] = v.clone();
                out[idx(d, h, i, j)] = v;
            }
        }
    }
    out
}

/// `q^h_{ij} = n⁻¹ Σ_u Q_{ui} Q_{uj} P_{hu}` with `Q` from exact inversion.
fn dual_route(arr: &IntersectionArray, spec: &Spectrum, em: &Eigenmatrices) -> Vec<FieldElem> {
    let d = arr.diameter();
    let s = d + 1;
    let field = spec.field();
    let n = arr.vertex_count();
    let mut out = vec![field.zero(); s * s * s];
    for i in 0..s {
        for j in i..s {
            let weight: Vec<FieldElem> = (0..s).map(|u| em.q.get(u, i) * em.q.get(u, j)).collect();
            for h in 0..s {
                let sum = (0..s).fold(field.zero(), |acc, u| acc + &weight[u] * em.p.get(h, u));
                let v = sum.div_rational(n);
                out[idx(d, h, j, i)] = v.clone();
                out[idx(d, h, i, j)] = v;
            }
        }
    }
    out
}

impl KreinTensor {
    /// Natural-ordering tensor by the cosine-sum formula, cross-checked
    /// entrywise against the dual-eigenmatrix route.
    pub fn new(
        arr: &IntersectionArray,
        spec: &Spectrum,
        em: &Eigenmatrices,
    ) -> Result<Self, KreinError> {
        let d = arr.diameter();
        let a = cosine_route(arr, spec);
        let b = dual_route(arr, spec, em);
        for h in 0..=d {
            for i in 0..=d {
                for j in 0..=d {
                    if a[idx(d, h, i, j)] != b[idx(d, h, i, j)] {
                        return Err(KreinError::RouteMismatch(h, i, j));
                    }
                }
            }
        }
        Ok(KreinTensor {
            d,
            natural: Arc::new(a),
            ordering: (0..=d).collect(),
        })
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    /// The same tensor relabelled so that label `i` is natural index
    /// `ordering[i]`.
    pub fn reordered(&self, ordering: &[usize]) -> Result<Self, KreinError> {
        let mut seen = vec![false; self.d + 1];
        if ordering.len() != self.d + 1 || ordering[0] != 0 {
            return Err(KreinError::BadOrdering);
        }
        for &o in ordering {
            if o > self.d || std::mem::replace(&mut seen[o], true) {
                return Err(KreinError::BadOrdering);
            }
        }
        Ok(KreinTensor {
            d: self.d,
            natural: Arc::clone(&self.natural),
            ordering: ordering.iter().map(|&o| self.ordering[o]).collect(),
        })
    }

    /// `q^h_{ij}` under this tensor's ordering.
    pub fn get(&self, h: usize, i: usize, j: usize) -> &FieldElem {
        let o = &self.ordering;
        &self.natural[idx(self.d, o[h], o[i], o[j])]
    }

    pub fn is_zero_at(&self, h: usize, i: usize, j: usize) -> bool {
        self.get(h, i, j).is_zero()
    }

    /// First `(h, i, j)` with `q^h_{ij} < 0`, if any.
    pub fn first_negative(&self) -> Option<(usize, usize, usize)> {
        let s = self.d + 1;
        for h in 0..s {
            for i in 0..s {
                for j in i..s {
                    if self.get(h, i, j).sign() == Ordering::Less {
                        return Some((h, i, j));
                    }
                }
            }
        }
        None
    }

    /// Exact check of `q^0_{ij} = δ_{ij} m_i` and `Σ_j q^h_{ij} = m_i`.
    pub fn check_invariants(&self, spec: &Spectrum) -> Result<(), String> {
        let s = self.d + 1;
        let m = |i: usize| spec.multiplicity(self.ordering[i]);
        for i in 0..s {
            for j in 0..s {
                let ok = if i == j {
                    self.get(0, i, j) == m(i)
                } else {
                    self.get(0, i, j).is_zero()
                };
                if !ok {
                    return Err(format!("q^0_{{{i}{j}}} has the wrong value"));
                }
            }
            for h in 0..s {
                let sum = (0..s).fold(spec.field().zero(), |acc, j| acc + self.get(h, i, j));
                if &sum != m(i) {
                    return Err(format!("sum_j q^{h}_{{{i}j}} != m_{i}"));
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
    use crate::ptensor::PTensor;

    fn build(text: &str) -> (IntersectionArray, Spectrum, KreinTensor) {
        let arr = parse_array(text).unwrap();
        let spec = Spectrum::new(&arr).unwrap();
        let em = Eigenmatrices::new(&arr, &spec).unwrap();
        let kt = KreinTensor::new(&arr, &spec, &em).unwrap();
        (arr, spec, kt)
    }

    #[test]
    fn hamming_krein_equals_intersection_numbers() {
        let (arr, spec, kt) = build("4,3,2,1;1,2,3,4");
        let p = PTensor::new(&arr);
        for h in 0..5 {
            for i in 0..5 {
                for j in 0..5 {
                    assert_eq!(kt.get(h, i, j).as_rational().as_ref(), Some(p.get(h, i, j)));
                }
            }
        }
        kt.check_invariants(&spec).unwrap();
        assert!(kt.first_negative().is_none());
    }

    #[test]
    fn pentagon_is_formally_self_dual() {
        let (arr, spec, kt) = build("2,1;1,1");
        let p = PTensor::new(&arr);
        for h in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(kt.get(h, i, j).as_rational().as_ref(), Some(p.get(h, i, j)));
                }
            }
        }
        assert_eq!(kt.get(0, 1, 1), spec.multiplicity(1));
    }

    #[test]
    fn heawood_krein_is_irrational_and_nonnegative() {
        let (_, spec, kt) = build("3,2,2;1,1,3");
        assert!(!kt.get(1, 1, 1).is_rational());
        assert!(kt.get(1, 1, 1).is_positive());
        assert!(kt.first_negative().is_none());
        kt.check_invariants(&spec).unwrap();
    }

    #[test]
    fn reordering_permutes_labels() {
        let (_, spec, kt) = build("4,3,2,1;1,2,3,4");
        let r = kt.reordered(&[0, 3, 2, 1, 4]).unwrap();
        assert_eq!(r.get(2, 1, 1), kt.get(2, 3, 3));
        r.check_invariants(&spec).unwrap();
        assert!(kt.reordered(&[1, 0, 2, 3, 4]).is_err());
        assert!(kt.reordered(&[0, 1, 1, 3, 4]).is_err());
    }
}

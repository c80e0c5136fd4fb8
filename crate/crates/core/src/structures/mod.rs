//! P- and Q-polynomial structures, found by exhaustive search over all
//! orderings that fix index 0.

mod classify;
mod recurrence;
mod suzuki;

pub use classify::{
    imprimitivity, schur_closed_subsets, schur_idempotent_pairs, schur_trichotomy, tightness,
    tightness_crosscheck, ClassificationReport, DualFlags, SchurPair, Tightness, TightnessFailure,
};
pub use recurrence::{recurrence_fit, RecurrenceFit};
pub use suzuki::{suzuki_pattern, suzuki_types, SuzukiType};

use drg_algebra::FieldElem;
use num_rational::BigRational;

use crate::krein::KreinTensor;
use crate::ptensor::PTensor;
use crate::scheme::Scheme;

/// Heap's algorithm over the permutations of `items`.
fn for_each_permutation(items: &mut [usize], mut f: impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every ordering `π = (0, π_1, …, π_d)` under which the structure
/// constants have the tridiagonal pattern `x^{i+1}_{1i} ≠ 0` for `i < d`
/// and `x^h_{1i} = 0` for `h > i + 1`. `nonzero(h, i, j)` reports whether
/// `x^h_{ij} ≠ 0` in the natural labelling.
/// All `d!` orderings are tested; results are sorted lexicographically.
pub fn polynomial_orderings(
    d: usize,
    nonzero: impl Fn(usize, usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (1..=d).collect();
    let mut found = Vec::new();
    let mut ord = vec![0usize; d + 1];
    for_each_permutation(&mut rest, |perm| {
        ord[1..].copy_from_slice(perm);
        let e = ord[1];
        let ok = (0..=d).all(|i| {
            (0..=d).all(|h| {
                let nz = nonzero(ord[h], e, ord[i]);
                if h == i + 1 {
                    nz
                } else if h > i + 1 {
                    !nz
                } else {
                    true
                }
            })
        });
        if ok {
            found.push(ord.clone());
        }
    });
    found.sort();
    found
}

/// A Q-polynomial ordering of the primitive idempotents with its dual
/// intersection numbers.
#[derive(Debug, Clone)]
pub struct QStructure {
    /// `ordering[i]` is the natural index of the idempotent labelled `E_i`.
    pub ordering: Vec<usize>,
    pub krein: KreinTensor,
    pub a_star: Vec<FieldElem>,
    pub b_star: Vec<FieldElem>,
    pub c_star: Vec<FieldElem>,
    pub k_star: Vec<FieldElem>,
    pub recurrence: Option<RecurrenceFit>,
}

impl QStructure {
    fn new(scheme: &Scheme, ordering: Vec<usize>) -> Self {
        let d = scheme.diameter();
        let krein = scheme
            .krein_parameters(&ordering)
            .expect("enumerated orderings are permutations fixing 0");
        let zero = scheme.spectrum.field().zero();
        let a_star = (0..=d).map(|i| krein.get(i, 1, i).clone()).collect();
        let b_star = (0..=d)
            .map(|i| {
                if i < d {
                    krein.get(i, 1, i + 1).clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        let c_star = (0..=d)
            .map(|i| {
                if i > 0 {
                    krein.get(i, 1, i - 1).clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        let k_star = (0..=d).map(|i| krein.get(0, i, i).clone()).collect();
        let mut qs = QStructure {
            ordering,
            krein,
            a_star,
            b_star,
            c_star,
            k_star,
            recurrence: None,
        };
        if d >= 3 {
            qs.recurrence = Some(recurrence_fit(&qs, &scheme.spectrum));
        }
        qs
    }

    pub fn diameter(&self) -> usize {
        self.ordering.len() - 1
    }

    /// Natural index of the primary idempotent `E_1`.
    pub fn primary(&self) -> usize {
        self.ordering[1]
    }

    /// Checks `m_{E_1} = k*_1` and `a*_i + b*_i + c*_i = k*_1`.
    pub fn check_invariants(&self, scheme: &Scheme) -> Result<(), String> {
        let k1 = &self.k_star[1];
        if k1 != scheme.spectrum.multiplicity(self.primary()) {
            return Err("k*_1 differs from the primary multiplicity".into());
        }
        for i in 0..=self.diameter() {
            if &(&(&self.a_star[i] + &self.b_star[i]) + &self.c_star[i]) != k1 {
                return Err(format!("a*_{i} + b*_{i} + c*_{i} != k*_1"));
            }
        }
        Ok(())
    }
}

/// A P-polynomial ordering of the distance relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PStructure {
    pub ordering: Vec<usize>,
    pub a: Vec<BigRational>,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

/// All Q-polynomial structures of the scheme.
pub fn q_structures(scheme: &Scheme) -> Vec<QStructure> {
    let d = scheme.diameter();
    let kt = &scheme.krein;
    polynomial_orderings(d, |h, i, j| !kt.is_zero_at(h, i, j))
        .into_iter()
        .map(|ord| QStructure::new(scheme, ord))
        .collect()
}

/// All P-polynomial structures: relation orderings forming a path scheme.
pub fn p_structures(ptensor: &PTensor) -> Vec<PStructure> {
    let d = ptensor.diameter();
    polynomial_orderings(d, |h, i, j| !ptensor.is_zero_at(h, i, j))
        .into_iter()
        .map(|o| {
            let zero = BigRational::from_integer(0.into());
            let e = o[1];
            PStructure {
                a: (0..=d)
                    .map(|i| ptensor.get(o[i], e, o[i]).clone())
                    .collect(),
                b: (0..=d)
                    .map(|i| {
                        if i < d {
                            ptensor.get(o[i], e, o[i + 1]).clone()
                        } else {
                            zero.clone()
                        }
                    })
                    .collect(),
                c: (0..=d)
                    .map(|i| {
                        if i > 0 {
                            ptensor.get(o[i], e, o[i - 1]).clone()
                        } else {
                            zero.clone()
                        }
                    })
                    .collect(),
                ordering: o,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn scheme(text: &str) -> Scheme {
        Scheme::new(&parse_array(text).unwrap()).unwrap()
    }

    #[test]
    fn permutation_count() {
        let mut items = vec![1, 2, 3, 4];
        let mut seen = std::collections::BTreeSet::new();
        for_each_permutation(&mut items, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn hamming_four_cube_has_two_structures() {
        let s = scheme("4,3,2,1;1,2,3,4");
        let qs = q_structures(&s);
        let ords: Vec<_> = qs.iter().map(|q| q.ordering.clone()).collect();
        assert_eq!(ords, vec![vec![0, 1, 2, 3, 4], vec![0, 3, 2, 1, 4]]);
        for q in &qs {
            q.check_invariants(&s).unwrap();
        }
        let ps = p_structures(&s.ptensor);
        assert!(ps.iter().any(|p| p.ordering == vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn johnson_has_one_structure() {
        let s = scheme("16,9,4,1;1,4,9,16");
        assert_eq!(q_structures(&s).len(), 1);
    }

    #[test]
    fn heptagon_has_three_structures() {
        let s = scheme("2,1,1;1,1,1");
        assert_eq!(q_structures(&s).len(), 3);
        assert_eq!(p_structures(&s.ptensor).len(), 3);
    }

    #[test]
    fn pentagon_has_two_p_structures() {
        let s = scheme("2,1;1,1");
        assert_eq!(p_structures(&s.ptensor).len(), 2);
    }

    #[test]
    fn selfdual_has_two_of_each() {
        let s = scheme("10,5,4,2;1,2,2,10");
        let qs = q_structures(&s);
        assert_eq!(qs.len(), 2);
        assert_eq!(qs[1].ordering, vec![0, 4, 2, 3, 1]);
        assert_eq!(p_structures(&s.ptensor).len(), 2);
    }
}

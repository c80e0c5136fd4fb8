//! Intersection numbers `p^h_{ij}` of the Bose–Mesner algebra, obtained by
//! expanding `A_i A_j = Σ_h p^h_{ij} A_h` with the three-term recurrence
//! `A_1 A_j = b_{j−1} A_{j−1} + a_j A_j + c_{j+1} A_{j+1}`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::array::IntersectionArray;

/// The full `(d+1)³` tensor of intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTensor {
    d: usize,
    values: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl PTensor {
    /// Expands every product `A_i A_j` in the distance basis.
    pub fn new(arr: &IntersectionArray) -> Self {
        let d = arr.diameter();
        let size = d + 1;
        // apply_a1(x): coefficients of A_1 · Σ x_h A_h.
        let apply_a1 = |x: &[BigRational]| -> Vec<BigRational> {
            (0..size)
                .map(|h| {
                    let mut acc = &x[h] * rat(arr.a(h));
                    if h + 1 < size {
                        acc += &x[h + 1] * rat(arr.b(h));
                    }
                    if h > 0 {
                        acc += &x[h - 1] * rat(arr.c(h));
                    }
                    acc
                })
                .collect()
        };
        let unit = |j: usize| -> Vec<BigRational> {
            (0..size)
                .map(|h| if h == j { rat(1) } else { BigRational::zero() })
                .collect()
        };
        // products[i][j] = coefficients of A_i A_j, built row by row in i.
        let mut products: Vec<Vec<Vec<BigRational>>> = Vec::with_capacity(size);
        products.push((0..size).map(unit).collect());
        if d >= 1 {
            products.push((0..size).map(|j| apply_a1(&unit(j))).collect());
        }
        for i in 1..d {
            let ci1 = rat(arr.c(i + 1));
            let ai = rat(arr.a(i));
            let bi1 = rat(arr.b(i - 1));
            let row: Vec<Vec<BigRational>> = (0..size)
                .map(|j| {
                    let a1x = apply_a1(&products[i][j]);
                    (0..size)
                        .map(|h| {
                            (&a1x[h] - &ai * &products[i][j][h] - &bi1 * &products[i - 1][j][h])
                                / &ci1
                        })
                        .collect()
                })
                .collect();
            products.push(row);
        }
        let values = (0..size)
            .flat_map(|h| {
                let products = &products;
                products
                    .iter()
                    .flat_map(move |row| row.iter().map(move |p| p[h].clone()))
            })
            .collect();
        PTensor { d, values }
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    /// `p^h_{ij}`.
    pub fn get(&self, h: usize, i: usize, j: usize) -> &BigRational {
        let s = self.d + 1;
        &self.values[(h * s + i) * s + j]
    }

    pub fn is_zero_at(&self, h: usize, i: usize, j: usize) -> bool {
        self.get(h, i, j).is_zero()
    }

    /// First `(h, i, j)` whose entry is negative, if any.
    pub fn first_negative(&self) -> Option<(usize, usize, usize)> {
        self.indices()
            .find(|&(h, i, j)| self.get(h, i, j).is_negative())
    }

    /// First `(h, i, j)` whose entry is not an integer, if any.
    pub fn first_non_integral(&self) -> Option<(usize, usize, usize)> {
        self.indices()
            .find(|&(h, i, j)| !self.get(h, i, j).is_integer())
    }

    fn indices(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let s = self.d + 1;
        (0..s).flat_map(move |h| (0..s).flat_map(move |i| (0..s).map(move |j| (h, i, j))))
    }

    /// Verifies symmetry, row sums `Σ_j p^h_{ij} = k_i`, the valency
    /// identity `k_h p^h_{ij} = k_i p^i_{hj}` and the tridiagonal shape of
    /// `p^h_{1j}`. Returns a description of the first violation.
    pub fn check_invariants(&self, arr: &IntersectionArray) -> Result<(), String> {
        let s = self.d + 1;
        for (h, i, j) in self.indices() {
            if self.get(h, i, j) != self.get(h, j, i) {
                return Err(format!("p^{h}_{{{i}{j}}} != p^{h}_{{{j}{i}}}"));
            }
            if arr.k_i(h) * self.get(h, i, j) != arr.k_i(i) * self.get(i, h, j) {
                return Err(format!("k_{h} p^{h}_{{{i}{j}}} != k_{i} p^{i}_{{{h}{j}}}"));
            }
        }
        for h in 0..s {
            for i in 0..s {
                let sum = (0..s).fold(BigRational::zero(), |acc, j| acc + self.get(h, i, j));
                if &sum != arr.k_i(i) {
                    return Err(format!("sum_j p^{h}_{{{i}j}} = {sum} != k_{i}"));
                }
            }
            for j in 0..s {
                if h.abs_diff(j) > 1 && !self.is_zero_at(h, 1, j) {
                    return Err(format!("p^{h}_{{1{j}}} nonzero with |h-j| > 1"));
                }
            }
        }
        Ok(())
    }

    /// Closed walks of length `s` from a vertex, `w_0(s)`, computed from the
    /// intersection numbers (the `A_0` coefficient of `A_1^s`).
    pub fn closed_walks(&self, s: u32) -> BigRational {
        let size = self.d + 1;
        let mut x: Vec<BigRational> = (0..size)
            .map(|h| if h == 0 { rat(1) } else { BigRational::zero() })
            .collect();
        for _ in 0..s {
            x = (0..size)
                .map(|h| {
                    (0..size).fold(BigRational::zero(), |acc, u| {
                        if x[u].is_zero() {
                            acc
                        } else {
                            acc + &x[u] * self.get(h, 1, u)
                        }
                    })
                })
                .collect();
        }
        x[0].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    #[test]
    fn hamming_entries() {
        let arr = parse_array("4,3,2,1;1,2,3,4").unwrap();
        let p = PTensor::new(&arr);
        assert_eq!(p.get(2, 1, 1), &rat(2));
        assert_eq!(p.get(1, 1, 1), &rat(0));
        assert_eq!(p.get(0, 2, 2), &rat(6));
        p.check_invariants(&arr).unwrap();
        assert_eq!(p.closed_walks(2), rat(4));
        assert_eq!(p.closed_walks(3), rat(0));
    }

    #[test]
    fn pentagon_entries() {
        let arr = parse_array("2,1;1,1").unwrap();
        let p = PTensor::new(&arr);
        // On 0-1-2-3-4-0: Γ_2(0) ∩ Γ_2(2) = {2,3} ∩ {4,0} = ∅ and
        // Γ_2(0) ∩ Γ_2(1) = {2,3} ∩ {3,4} = {3}.
        assert_eq!(p.get(2, 2, 2), &rat(0));
        assert_eq!(p.get(1, 2, 2), &rat(1));
        p.check_invariants(&arr).unwrap();
        assert!(p.first_negative().is_none());
    }

    #[test]
    fn selfdual_entries_are_integral() {
        let arr = parse_array("10,5,4,2;1,2,2,10").unwrap();
        let p = PTensor::new(&arr);
        p.check_invariants(&arr).unwrap();
        assert!(p.first_negative().is_none());
        assert!(p.first_non_integral().is_none());
    }
}

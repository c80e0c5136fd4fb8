//! Intersection arrays of named families.

use std::fmt;

use thiserror::Error;

use crate::array::{ArrayError, IntersectionArray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    Parameters {
        family: &'static str,
        reason: String,
    },
    #[error("parameters overflow 64-bit intersection numbers")]
    Overflow,
    #[error(transparent)]
    Array(#[from] ArrayError),
}

/// A named family member with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Hamming cube `H(d, 2)`.
    Hamming { d: u32 },
    /// Halved `n`-cube `½H(n, 2)`, diameter `⌊n/2⌋`.
    HalvedCube { n: u32 },
    /// Folded `n`-cube, diameter `⌊n/2⌋`.
    FoldedCube { n: u32 },
    /// Dual polar graph `²A_{2d−1}(q)`.
    DualPolar2A { d: u32, q: u64 },
    /// Hadamard graph of order `2γ`: `{2γ, 2γ−1, γ, 1; 1, γ, 2γ−1, 2γ}`.
    Hadamard { gamma: u64 },
    /// `{μ(2μ+1), (μ−1)(2μ+1), μ², μ; 1, μ, μ(μ−1), μ(2μ+1)}`.
    SelfDual { mu: u64 },
    /// Taylor array `{k, k−a_1−1, 1; 1, k−a_1−1, k}`.
    Taylor { k: u64, a1: u64 },
    /// The `n`-gon.
    Polygon { n: u32 },
    /// Johnson graph `J(n, e)`, diameter `min(e, n−e)`.
    Johnson { n: u32, e: u32 },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Hamming { .. } => "hamming",
            Self::HalvedCube { .. } => "halved_cube",
            Self::FoldedCube { .. } => "folded_cube",
            Self::DualPolar2A { .. } => "dual_polar_2A",
            Self::Hadamard { .. } => "hadamard",
            Self::SelfDual { .. } => "selfdual",
            Self::Taylor { .. } => "taylor",
            Self::Polygon { .. } => "polygon",
            Self::Johnson { .. } => "johnson",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Hamming { d } => write!(f, "H({d},2)"),
            Self::HalvedCube { n } => write!(f, "halved {n}-cube"),
            Self::FoldedCube { n } => write!(f, "folded {n}-cube"),
            Self::DualPolar2A { d, q } => write!(f, "2A_{}({q})", 2 * d - 1),
            Self::Hadamard { gamma } => write!(f, "Hadamard graph, gamma = {gamma}"),
            Self::SelfDual { mu } => write!(f, "self-dual array, mu = {mu}"),
            Self::Taylor { k, a1 } => write!(f, "Taylor array, k = {k}, a1 = {a1}"),
            Self::Polygon { n } => write!(f, "C_{n}"),
            Self::Johnson { n, e } => write!(f, "J({n},{e})"),
        }
    }
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Parameters {
        family,
        reason: reason.into(),
    }
}

fn to_i64(x: u128) -> Result<i64, FamilyError> {
    i64::try_from(x).map_err(|_| FamilyError::Overflow)
}

/// `q` is a prime power at least 2.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).unwrap_or(q);
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn sequences(spec: &FamilySpec) -> Result<(Vec<i64>, Vec<i64>), FamilyError> {
    let tag = spec.tag();
    Ok(match *spec {
        FamilySpec::Hamming { d } => {
            if d < 1 {
                return Err(bad(tag, "d must be at least 1"));
            }
            let d = i64::from(d);
            ((0..d).map(|i| d - i).collect(), (1..=d).collect())
        }
        FamilySpec::HalvedCube { n } => {
            if n < 2 {
                return Err(bad(tag, "n must be at least 2"));
            }
            let n = i64::from(n);
            let d = n / 2;
            (
                (0..d).map(|i| (n - 2 * i) * (n - 2 * i - 1) / 2).collect(),
                (1..=d).map(|i| i * (2 * i - 1)).collect(),
            )
        }
        FamilySpec::FoldedCube { n } => {
            if n < 3 {
                return Err(bad(tag, "n must be at least 3"));
            }
            let n = i64::from(n);
            let d = n / 2;
            let c = (1..=d)
                .map(|i| if i == d && n % 2 == 0 { 2 * d } else { i })
                .collect();
            ((0..d).map(|i| n - i).collect(), c)
        }
        FamilySpec::DualPolar2A { d, q } => {
            if d < 1 {
                return Err(bad(tag, "d must be at least 1"));
            }
            if !is_prime_power(q) {
                return Err(bad(tag, format!("q = {q} is not a prime power")));
            }
            let q2 = u128::from(q) * u128::from(q);
            let pow = |e: u32| -> Result<u128, FamilyError> {
                u128::from(q).checked_pow(e).ok_or(FamilyError::Overflow)
            };
            let gauss = |i: u32| -> Result<u128, FamilyError> { Ok((pow(2 * i)? - 1) / (q2 - 1)) };
            let b = (0..d)
                .map(|i| {
                    to_i64(
                        pow(2 * i + 1)?
                            .checked_mul(gauss(d - i)?)
                            .ok_or(FamilyError::Overflow)?,
                    )
                })
                .collect::<Result<_, _>>()?;
            let c = (1..=d)
                .map(|i| to_i64(gauss(i)?))
                .collect::<Result<_, _>>()?;
            (b, c)
        }
        FamilySpec::Hadamard { gamma } => {
            if gamma < 1 {
                return Err(bad(tag, "gamma must be at least 1"));
            }
            let g = to_i64(gamma.into())?;
            (vec![2 * g, 2 * g - 1, g, 1], vec![1, g, 2 * g - 1, 2 * g])
        }
        FamilySpec::SelfDual { mu } => {
            if mu < 2 {
                return Err(bad(tag, "mu must be at least 2 (mu = 1 gives b_1 = 0)"));
            }
            let m = to_i64(mu.into())?;
            (
                vec![m * (2 * m + 1), (m - 1) * (2 * m + 1), m * m, m],
                vec![1, m, m * (m - 1), m * (2 * m + 1)],
            )
        }
        FamilySpec::Taylor { k, a1 } => {
            if k < 2 || a1 + 2 > k {
                return Err(bad(tag, "need k >= 2 and a1 <= k - 2"));
            }
            let k = to_i64(k.into())?;
            let m = k - to_i64(a1.into())? - 1;
            (vec![k, m, 1], vec![1, m, k])
        }
        FamilySpec::Polygon { n } => {
            if n < 3 {
                return Err(bad(tag, "n must be at least 3"));
            }
            let d = (n / 2) as usize;
            let mut b = vec![1; d];
            b[0] = 2;
            let mut c = vec![1; d];
            if n % 2 == 0 {
                c[d - 1] = 2;
            }
            (b, c)
        }
        FamilySpec::Johnson { n, e } => {
            let d = e.min(n.saturating_sub(e));
            if d < 1 {
                return Err(bad(tag, "need 1 <= e <= n - 1"));
            }
            let (n, e) = (i64::from(n), i64::from(e));
            let d = i64::from(d);
            (
                (0..d).map(|i| (e - i) * (n - e - i)).collect(),
                (1..=d).map(|i| i * i).collect(),
            )
        }
    })
}

/// The intersection array of a family member, validated.
pub fn family_array(spec: &FamilySpec) -> Result<IntersectionArray, FamilyError> {
    let (b, c) = sequences(spec)?;
    Ok(IntersectionArray::new(b, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn text(spec: FamilySpec) -> String {
        family_array(&spec).unwrap().to_string()
    }

    #[test]
    fn named_arrays() {
        assert_eq!(text(FamilySpec::Hadamard { gamma: 4 }), "8,7,4,1;1,4,7,8");
        assert_eq!(text(FamilySpec::Hamming { d: 4 }), "4,3,2,1;1,2,3,4");
        let half5 = family_array(&FamilySpec::HalvedCube { n: 5 }).unwrap();
        assert_eq!(half5.to_string(), "10,3;1,6");
        assert_eq!(half5.vertex_count().to_integer().to_u64(), Some(16));
        assert_eq!(text(FamilySpec::FoldedCube { n: 9 }), "9,8,7,6;1,2,3,4");
        assert_eq!(text(FamilySpec::FoldedCube { n: 6 }), "6,5,4;1,2,6");
        assert_eq!(
            text(FamilySpec::DualPolar2A { d: 4, q: 2 }),
            "170,168,160,128;1,5,21,85"
        );
        assert_eq!(
            text(FamilySpec::DualPolar2A { d: 4, q: 3 }),
            "2460,2457,2430,2187;1,10,91,820"
        );
        assert_eq!(text(FamilySpec::SelfDual { mu: 2 }), "10,5,4,2;1,2,2,10");
        assert_eq!(text(FamilySpec::SelfDual { mu: 3 }), "21,14,9,3;1,3,6,21");
        assert_eq!(text(FamilySpec::Taylor { k: 5, a1: 0 }), "5,4,1;1,4,5");
        assert_eq!(text(FamilySpec::Polygon { n: 7 }), "2,1,1;1,1,1");
        assert_eq!(text(FamilySpec::Polygon { n: 8 }), "2,1,1,1;1,1,1,2");
        assert_eq!(
            text(FamilySpec::Johnson { n: 8, e: 4 }),
            "16,9,4,1;1,4,9,16"
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(family_array(&FamilySpec::SelfDual { mu: 1 }).is_err());
        assert!(family_array(&FamilySpec::DualPolar2A { d: 4, q: 6 }).is_err());
        assert!(family_array(&FamilySpec::Polygon { n: 2 }).is_err());
        assert!(family_array(&FamilySpec::Hadamard { gamma: 0 }).is_err());
        assert!(is_prime_power(9) && is_prime_power(2) && !is_prime_power(12));
    }
}

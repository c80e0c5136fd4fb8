//! Membership in the list of twice Q-polynomial graphs of diameter at
//! least four and valency at least three.

use std::fmt;

use num_integer::Roots;

use crate::array::IntersectionArray;
use crate::families::{family_array, is_prime_power, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem3Case {
    /// (i) `H(d, 2)`, `d` even.
    Cube { d: u32 },
    /// (ii) `½H(2d+1, 2)`.
    HalvedCube { n: u32 },
    /// (iii) folded `(2d+1)`-cube.
    FoldedCube { n: u32 },
    /// (iv) `²A_{2d−1}(q)`, `q` a prime power.
    DualPolar { d: u32, q: u64 },
    /// (v) Hadamard graph of order `2γ`, `γ = 1` or even.
    Hadamard { gamma: u64 },
}

impl Theorem3Case {
    pub fn numeral(&self) -> &'static str {
        match self {
            Self::Cube { .. } => "i",
            Self::HalvedCube { .. } => "ii",
            Self::FoldedCube { .. } => "iii",
            Self::DualPolar { .. } => "iv",
            Self::Hadamard { .. } => "v",
        }
    }

    pub fn family(&self) -> FamilySpec {
        match *self {
            Self::Cube { d } => FamilySpec::Hamming { d },
            Self::HalvedCube { n } => FamilySpec::HalvedCube { n },
            Self::FoldedCube { n } => FamilySpec::FoldedCube { n },
            Self::DualPolar { d, q } => FamilySpec::DualPolar2A { d, q },
            Self::Hadamard { gamma } => FamilySpec::Hadamard { gamma },
        }
    }
}

impl fmt::Display for Theorem3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case ({}): {}", self.numeral(), self.family())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Theorem3Precondition {
    #[error("diameter {0} is below 4")]
    Diameter(usize),
    #[error("valency {0} is below 3")]
    Valency(i64),
}

/// Every listed family the array belongs to; empty means not in the list.
pub fn classify_theorem3(
    arr: &IntersectionArray,
) -> Result<Vec<Theorem3Case>, Theorem3Precondition> {
    let d = arr.diameter();
    if d < 4 {
        return Err(Theorem3Precondition::Diameter(d));
    }
    if arr.valency() < 3 {
        return Err(Theorem3Precondition::Valency(arr.valency()));
    }
    let du = d as u32;
    let c2 = arr.c(2);
    let mut candidates = vec![
        Theorem3Case::HalvedCube { n: 2 * du + 1 },
        Theorem3Case::FoldedCube { n: 2 * du + 1 },
    ];
    if d.is_multiple_of(2) {
        candidates.insert(0, Theorem3Case::Cube { d: du });
    }
    let q = u64::try_from(c2 - 1).ok().map(|x| (x, x.sqrt()));
    if let Some((x, q)) = q {
        if q * q == x && is_prime_power(q) {
            candidates.push(Theorem3Case::DualPolar { d: du, q });
        }
    }
    if d == 4 {
        if let Ok(gamma) = u64::try_from(c2) {
            if gamma == 1 || gamma % 2 == 0 {
                candidates.push(Theorem3Case::Hadamard { gamma });
            }
        }
    }
    Ok(candidates
        .into_iter()
        .filter(|c| family_array(&c.family()).is_ok_and(|a| &a == arr))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn classify(text: &str) -> Vec<Theorem3Case> {
        classify_theorem3(&parse_array(text).unwrap()).unwrap()
    }

    #[test]
    fn cube_is_also_hadamard() {
        assert_eq!(
            classify("4,3,2,1;1,2,3,4"),
            vec![
                Theorem3Case::Cube { d: 4 },
                Theorem3Case::Hadamard { gamma: 2 }
            ]
        );
    }

    #[test]
    fn members() {
        assert_eq!(
            classify("8,7,4,1;1,4,7,8"),
            vec![Theorem3Case::Hadamard { gamma: 4 }]
        );
        assert_eq!(
            classify("36,21,10,3;1,6,15,28"),
            vec![Theorem3Case::HalvedCube { n: 9 }]
        );
        assert_eq!(
            classify("9,8,7,6;1,2,3,4"),
            vec![Theorem3Case::FoldedCube { n: 9 }]
        );
        assert_eq!(
            classify("170,168,160,128;1,5,21,85"),
            vec![Theorem3Case::DualPolar { d: 4, q: 2 }]
        );
    }

    #[test]
    fn non_members() {
        assert!(classify("16,9,4,1;1,4,9,16").is_empty());
        assert!(classify("5,4,3,2,1;1,2,3,4,5").is_empty());
        assert!(classify("6,5,3,1;1,3,5,6").is_empty());
        assert_eq!(
            classify_theorem3(&parse_array("2,1,1,1;1,1,1,2").unwrap()),
            Err(Theorem3Precondition::Valency(2))
        );
    }
}

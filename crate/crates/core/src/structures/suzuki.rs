//! Suzuki's list of the orderings a second Q-polynomial structure can take,
//! instantiated at a concrete diameter.
//!
//! The zigzag patterns are written as a "front" run read left to right and
//! a "back" run read right to left; at a given `d` the split point between
//! them is not determined by the pattern, so every split producing a
//! permutation of `0..=d` is accepted.

use std::fmt;

use super::QStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuzukiType {
    I,
    II,
    III,
    IV,
    /// Only at `d = 5`; this case is known not to occur.
    V,
}

impl SuzukiType {
    pub const ALL: [SuzukiType; 5] = [Self::I, Self::II, Self::III, Self::IV, Self::V];

    pub fn eliminated(self) -> bool {
        self == SuzukiType::V
    }
}

impl fmt::Display for SuzukiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::V => "V",
        };
        f.write_str(s)
    }
}

fn front(ty: SuzukiType, d: usize, i: usize) -> Option<usize> {
    let odd = i % 2 == 1;
    match ty {
        SuzukiType::I => Some(2 * i),
        SuzukiType::II if odd => d.checked_sub((i - 1) / 2),
        SuzukiType::II => Some(i / 2),
        SuzukiType::III if odd => d.checked_sub(i - 1),
        SuzukiType::III => Some(i),
        SuzukiType::IV if odd => d.checked_sub(i),
        SuzukiType::IV => Some(i),
        SuzukiType::V => None,
    }
}

/// Label at position `d − t` of the back run.
fn back(ty: SuzukiType, d: usize, t: usize) -> Option<usize> {
    let odd = t % 2 == 1;
    match ty {
        SuzukiType::I => Some(2 * t + 1),
        SuzukiType::II => None,
        SuzukiType::III if odd => d.checked_sub(t),
        SuzukiType::III => Some(t + 1),
        SuzukiType::IV if odd => Some(t),
        SuzukiType::IV => d.checked_sub(t),
        SuzukiType::V => None,
    }
}

fn is_permutation(seq: &[usize]) -> bool {
    let mut seen = vec![false; seq.len()];
    seq.iter()
        .all(|&x| x < seq.len() && !std::mem::replace(&mut seen[x], true))
}

/// All distinct permutations the pattern of `ty` yields at diameter `d`.
pub fn suzuki_pattern(ty: SuzukiType, d: usize) -> Vec<Vec<usize>> {
    if ty == SuzukiType::V {
        return if d == 5 {
            vec![vec![0, 5, 3, 2, 4, 1]]
        } else {
            Vec::new()
        };
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for split in 0..=d {
        let seq: Option<Vec<usize>> = (0..=d)
            .map(|pos| {
                if pos <= split {
                    front(ty, d, pos)
                } else {
                    back(ty, d, d - pos)
                }
            })
            .collect();
        if let Some(seq) = seq {
            if is_permutation(&seq) && !out.contains(&seq) {
                out.push(seq);
            }
        }
    }
    out
}

/// Every type whose instantiation at `d` equals `s2` read relative to `s1`
/// (position `i` holds the `s1`-label of `s2`'s `i`-th idempotent).
pub fn suzuki_types(s1: &QStructure, s2: &QStructure) -> Vec<SuzukiType> {
    let d = s1.diameter();
    let relative: Vec<usize> = s2
        .ordering
        .iter()
        .map(|e| {
            s1.ordering
                .iter()
                .position(|x| x == e)
                .expect("same idempotents")
        })
        .collect();
    SuzukiType::ALL
        .into_iter()
        .filter(|&ty| suzuki_pattern(ty, d).contains(&relative))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_four_instances() {
        assert_eq!(suzuki_pattern(SuzukiType::I, 4), vec![vec![0, 2, 4, 3, 1]]);
        assert_eq!(suzuki_pattern(SuzukiType::II, 4), vec![vec![0, 4, 1, 3, 2]]);
        assert_eq!(
            suzuki_pattern(SuzukiType::III, 4),
            vec![vec![0, 4, 2, 3, 1]]
        );
        assert_eq!(suzuki_pattern(SuzukiType::IV, 4), vec![vec![0, 3, 2, 1, 4]]);
        assert!(suzuki_pattern(SuzukiType::V, 4).is_empty());
    }

    #[test]
    fn diameter_five_instances() {
        assert_eq!(
            suzuki_pattern(SuzukiType::V, 5),
            vec![vec![0, 5, 3, 2, 4, 1]]
        );
        assert_eq!(
            suzuki_pattern(SuzukiType::I, 5),
            vec![vec![0, 2, 4, 5, 3, 1]]
        );
        assert_eq!(
            suzuki_pattern(SuzukiType::II, 5),
            vec![vec![0, 5, 1, 4, 2, 3]]
        );
        for ty in SuzukiType::ALL {
            for p in suzuki_pattern(ty, 5) {
                assert!(is_permutation(&p));
            }
        }
    }

    #[test]
    fn larger_diameters_follow_the_zigzag() {
        assert_eq!(
            suzuki_pattern(SuzukiType::I, 6),
            vec![vec![0, 2, 4, 6, 5, 3, 1]]
        );
        assert_eq!(
            suzuki_pattern(SuzukiType::III, 7),
            vec![vec![0, 7, 2, 5, 4, 3, 6, 1]]
        );
    }
}

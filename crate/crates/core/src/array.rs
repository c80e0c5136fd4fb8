//! Intersection arrays `{b_0, …, b_{d−1}; c_1, …, c_d}` and their derived
//! parameters `a_i`, `k_i`, `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Violation of an intersection-array invariant, reported at the first failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("diameter must be at least 1")]
    EmptyDiameter,
    #[error("b has {b} entries but c has {c}; both must equal the diameter")]
    LengthMismatch { b: usize, c: usize },
    #[error("{name}_{index} = {value} must be a positive integer")]
    NonPositive {
        name: &'static str,
        index: usize,
        value: i64,
    },
    #[error("c_1 = {0} but must equal 1")]
    C1NotOne(i64),
    #[error("a_{index} = k - b_{index} - c_{index} = {value} is negative")]
    NegativeA { index: usize, value: i64 },
    #[error("k_{index} = {value} is not an integer")]
    NonIntegralValency { index: usize, value: BigRational },
}

/// Failure to read the textual grammar `b_0,…,b_{d−1};c_1,…,c_d`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected exactly one ';' separating b and c, found {0}")]
    Separator(usize),
    #[error("invalid integer {token:?} in {part} sequence")]
    Integer { part: &'static str, token: String },
    #[error(transparent)]
    Invalid(#[from] ArrayError),
}

/// An intersection array together with its derived parameters.
///
/// Construction via [`IntersectionArray::from_raw`] only checks shape and
/// positivity, so infeasible arrays can still flow through the report
/// pipeline; [`IntersectionArray::validate`] checks the remaining
/// invariants and [`parse_array`] applies both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
    a: Vec<i64>,
    k: Vec<BigRational>,
    n: BigRational,
}

impl IntersectionArray {
    pub fn from_raw(b: Vec<i64>, c: Vec<i64>) -> Result<Self, ArrayError> {
        if b.len() != c.len() {
            return Err(ArrayError::LengthMismatch {
                b: b.len(),
                c: c.len(),
            });
        }
        if b.is_empty() {
            return Err(ArrayError::EmptyDiameter);
        }
        for (i, &x) in b.iter().enumerate() {
            if x <= 0 {
                return Err(ArrayError::NonPositive {
                    name: "b",
                    index: i,
                    value: x,
                });
            }
        }
        for (i, &x) in c.iter().enumerate() {
            if x <= 0 {
                return Err(ArrayError::NonPositive {
                    name: "c",
                    index: i + 1,
                    value: x,
                });
            }
        }
        let d = b.len();
        let kk = b[0];
        let a = (0..=d)
            .map(|i| {
                let bi = if i < d { b[i] } else { 0 };
                let ci = if i > 0 { c[i - 1] } else { 0 };
                kk - bi - ci
            })
            .collect();
        let mut k = vec![BigRational::one()];
        for i in 0..d {
            let next = &k[i] * BigRational::new(BigInt::from(b[i]), BigInt::from(c[i]));
            k.push(next);
        }
        let n = k.iter().fold(BigRational::zero(), |acc, x| acc + x);
        Ok(IntersectionArray { b, c, a, k, n })
    }

    /// Checks `c_1 = 1`, `a_i ≥ 0` and integrality of every `k_i`.
    pub fn validate(&self) -> Result<(), ArrayError> {
        if self.c[0] != 1 {
            return Err(ArrayError::C1NotOne(self.c[0]));
        }
        for (i, &ai) in self.a.iter().enumerate() {
            if ai < 0 {
                return Err(ArrayError::NegativeA {
                    index: i,
                    value: ai,
                });
            }
        }
        for (i, ki) in self.k.iter().enumerate() {
            if !ki.is_integer() {
                return Err(ArrayError::NonIntegralValency {
                    index: i,
                    value: ki.clone(),
                });
            }
        }
        Ok(())
    }

    /// Validated construction from the two sequences.
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self, ArrayError> {
        let arr = Self::from_raw(b, c)?;
        arr.validate()?;
        Ok(arr)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// Valency `k = b_0`.
    pub fn valency(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 ≤ i ≤ d`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 ≤ i ≤ d`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> i64 {
        self.a[i]
    }

    pub fn bs(&self) -> &[i64] {
        &self.b
    }

    pub fn cs(&self) -> &[i64] {
        &self.c
    }

    pub fn a_values(&self) -> &[i64] {
        &self.a
    }

    /// `k_i = |Γ_i(x)|`, as a rational (an integer for valid arrays).
    pub fn k_i(&self, i: usize) -> &BigRational {
        &self.k[i]
    }

    pub fn valencies(&self) -> &[BigRational] {
        &self.k
    }

    /// Number of vertices `n = Σ k_i`.
    pub fn vertex_count(&self) -> &BigRational {
        &self.n
    }

    /// Vertex count as an integer when it is one and fits a `usize`.
    pub fn vertex_count_usize(&self) -> Option<usize> {
        use num_traits::ToPrimitive;
        self.n
            .is_integer()
            .then(|| self.n.to_integer().to_usize())
            .flatten()
    }

    pub fn is_bipartite(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// `b_i = c_{d−i}` for every `i ≠ ⌊d/2⌋`.
    pub fn is_antipodal(&self) -> bool {
        let d = self.diameter();
        (0..d)
            .filter(|&i| i != d / 2)
            .all(|i| self.b(i) == self.c(d - i))
    }

    pub fn has_negative_a(&self) -> bool {
        self.a.iter().any(|x| x.is_negative())
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.b), join(&self.c))
    }
}

fn parse_sequence(part: &'static str, s: &str) -> Result<Vec<i64>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let t = tok.trim();
            t.parse::<i64>().map_err(|_| ParseError::Integer {
                part,
                token: t.to_string(),
            })
        })
        .collect()
}

/// Parses and validates `b_0,…,b_{d−1};c_1,…,c_d`.
pub fn parse_array(text: &str) -> Result<IntersectionArray, ParseError> {
    let arr = parse_array_raw(text)?;
    arr.validate()?;
    Ok(arr)
}

/// Parses the grammar and checks shape only, leaving feasibility to reports.
pub fn parse_array_raw(text: &str) -> Result<IntersectionArray, ParseError> {
    let text = text.trim().trim_start_matches('{').trim_end_matches('}');
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 2 {
        return Err(ParseError::Separator(parts.len().saturating_sub(1)));
    }
    let b = parse_sequence("b", parts[0])?;
    let c = parse_sequence("c", parts[1])?;
    Ok(IntersectionArray::from_raw(b, c)?)
}

impl FromStr for IntersectionArray {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_array(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn hypercube_parameters() {
        let arr = parse_array("4,3,2,1;1,2,3,4").unwrap();
        assert_eq!(arr.diameter(), 4);
        assert_eq!(arr.a_values(), &[0, 0, 0, 0, 0]);
        let ks: Vec<BigRational> = [1, 4, 6, 4, 1].iter().map(|&x| int(x)).collect();
        assert_eq!(arr.valencies(), ks.as_slice());
        assert_eq!(arr.vertex_count(), &int(16));
        assert!(arr.is_bipartite() && arr.is_antipodal());
        assert_eq!(arr.to_string(), "4,3,2,1;1,2,3,4");
    }

    #[test]
    fn hadamard_gamma_four() {
        let arr = parse_array("8,7,4,1;1,4,7,8").unwrap();
        assert_eq!(arr.vertex_count(), &int(32));
        assert!(arr.is_bipartite());
    }

    #[test]
    fn seven_vertex_array() {
        let arr = parse_array("3,2;1,2").unwrap();
        assert_eq!(arr.a_values(), &[0, 0, 1]);
        assert_eq!(arr.k_i(2), &int(3));
        assert_eq!(arr.vertex_count(), &int(7));
    }

    #[test]
    fn invariant_failures() {
        assert_eq!(
            parse_array("3,2;1,4").unwrap_err(),
            ParseError::Invalid(ArrayError::NegativeA {
                index: 2,
                value: -1
            })
        );
        assert_eq!(
            parse_array("3,2,1;2,2,3").unwrap_err(),
            ParseError::Invalid(ArrayError::C1NotOne(2))
        );
        assert!(matches!(
            parse_array("3,2;1,4,5"),
            Err(ParseError::Invalid(ArrayError::LengthMismatch { .. }))
        ));
        assert!(matches!(
            parse_array("5,2;1,3"),
            Err(ParseError::Invalid(ArrayError::NonIntegralValency {
                index: 2,
                ..
            }))
        ));
        assert!(matches!(
            parse_array("4,x;1,2"),
            Err(ParseError::Integer { .. })
        ));
        assert!(matches!(
            parse_array("4,3,1,2"),
            Err(ParseError::Separator(0))
        ));
        assert!(parse_array_raw("3,2,1;1,2,4").is_ok());
    }
}

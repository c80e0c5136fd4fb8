//! Serialized form of exact real algebraic values.

use drg_core::algebra::{AlgebraError, AlgebraicReal, BigInt, BigRational, FieldElem, IntPoly};
use serde::{Deserialize, Serialize};

/// Places after the decimal point in advisory renderings.
pub const DECIMAL_DIGITS: usize = 20;

/// Bits of isolating-interval refinement before serialization.
const INTERVAL_BITS: u64 = 64;

/// An exact real algebraic number: its primitive minimal polynomial
/// (integer coefficients in ascending powers, as decimal strings) and an
/// isolating interval with rational endpoints. `decimal` is advisory and
/// carries exactly [`DECIMAL_DIGITS`] places; the other fields are
/// authoritative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub minimal_polynomial: Vec<String>,
    pub interval: [String; 2],
    pub decimal: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ExactValueError {
    #[error("malformed number {0:?}")]
    Number(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ExactValue {
    pub fn from_algebraic(a: &AlgebraicReal) -> Self {
        let decimal = a.to_decimal(DECIMAL_DIGITS);
        match a.as_rational() {
            Some(q) => {
                let poly = [-q.numer().clone(), q.denom().clone()];
                ExactValue {
                    minimal_polynomial: poly.iter().map(BigInt::to_string).collect(),
                    interval: [q.to_string(), q.to_string()],
                    decimal,
                }
            }
            None => {
                let r = a.refined(INTERVAL_BITS);
                ExactValue {
                    minimal_polynomial: r
                        .minimal_polynomial()
                        .coeffs()
                        .iter()
                        .map(BigInt::to_string)
                        .collect(),
                    interval: [r.lo().to_string(), r.hi().to_string()],
                    decimal,
                }
            }
        }
    }

    pub fn from_elem(e: &FieldElem) -> Self {
        Self::from_algebraic(&e.to_algebraic())
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_algebraic(&AlgebraicReal::from_rational(q.clone()))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_algebraic(&AlgebraicReal::from_integer(n))
    }

    /// Reconstructs the value from its exact fields, validating that the
    /// polynomial is irreducible and the interval isolates one root.
    pub fn to_algebraic(&self) -> Result<AlgebraicReal, ExactValueError> {
        let coeffs = self
            .minimal_polynomial
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|_| ExactValueError::Number(c.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let bound = |s: &String| {
            s.parse::<BigRational>()
                .map_err(|_| ExactValueError::Number(s.clone()))
        };
        Ok(AlgebraicReal::new(
            IntPoly::new(coeffs),
            bound(&self.interval[0])?,
            bound(&self.interval[1])?,
        )?)
    }

    pub fn is_rational(&self) -> bool {
        self.minimal_polynomial.len() == 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use drg_core::algebra::real_roots;

    #[test]
    fn rational_round_trip() {
        let v = ExactValue::from_rational(&BigRational::new((-3).into(), 2.into()));
        assert_eq!(v.minimal_polynomial, vec!["3", "2"]);
        assert_eq!(v.interval, ["-3/2".to_string(), "-3/2".to_string()]);
        assert_eq!(v.decimal, "-1.50000000000000000000");
        assert_eq!(
            v.to_algebraic().unwrap().as_rational(),
            Some(BigRational::new((-3).into(), 2.into()))
        );
    }

    #[test]
    fn irrational_round_trip() {
        let sqrt2 = real_roots(&IntPoly::from_i64s(&[-2, 0, 1])).pop().unwrap();
        let v = ExactValue::from_algebraic(&sqrt2);
        assert_eq!(v.minimal_polynomial, vec!["-2", "0", "1"]);
        assert!(v.decimal.starts_with("1.41421356237309504880"));
        assert_eq!(v.to_algebraic().unwrap(), sqrt2);
        assert!(!v.is_rational());
    }
}

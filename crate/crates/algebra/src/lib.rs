//! Exact arithmetic for spectral computations: integer and rational
//! polynomials, factorization over the rationals, real algebraic numbers,
//! real number fields, and certified zero tests for expressions.

mod algebraic;
mod error;
mod expr;
mod factor;
mod field;
mod interval;
mod modular;
mod poly;
mod roots;

pub use algebraic::{real_roots, AlgebraicReal};
pub use error::AlgebraError;
pub use expr::{expr_is_zero, expr_is_zero_via, Expr, ZeroRoute};
pub use factor::{factor, factor_square_free, is_irreducible, Factorization};
pub use field::{FieldElem, NumberField};
pub use interval::Interval;
pub use poly::{
    interpolate, is_square_free, resultant, square_free_decomposition, square_free_part, IntPoly,
    RatPoly,
};
pub use roots::{root_bound, SturmChain};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

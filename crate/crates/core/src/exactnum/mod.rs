//! Exact arithmetic substrate: arbitrary-precision rationals, integer and
//! rational polynomials, certified interval arithmetic, and real/complex
//! algebraic numbers represented by an irreducible defining polynomial
//! together with an isolating rectangle.

pub mod algnum;
pub mod algpoly;
pub mod factor;
pub mod intpoly;
pub mod interval;
pub mod isolate;
pub mod linalg;
pub mod primefield;
pub mod qpoly;
pub mod rat;
pub mod transcend;

pub use algnum::{alg_arith, is_unit_modulus, poly_roots, root_of_unity_order, weil_height,
                 AlgNum, ArithOp};
pub use algpoly::AlgPolyExpr;
pub use intpoly::IntPoly;
pub use interval::{ComplexBox, RatInterval};
pub use linalg::RatMat;
pub use qpoly::QPoly;
pub use rat::{parse_rational, rational_to_string};

pub use num_rational::BigRational;

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("operation undefined for zero")]
    ZeroArgument,
    #[error("expected a real algebraic number")]
    NotReal,
    #[error("expected a nonnegative real algebraic number")]
    NotNonnegative,
    #[error("invalid rational literal: {0}")]
    BadRational(String),
}

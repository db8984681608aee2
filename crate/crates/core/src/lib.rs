//! Exact analysis of orbits of rational linear dynamical systems under
//! weight functions: mean payoff, total and discounted accumulated weight,
//! stochastic averages, orbit boundedness with torus-integral mean-payoff
//! representation, and energy constraints in dimension at most 3.
//!
//! All decision procedures work over exact rationals and certified algebraic
//! numbers; numeric output is always a rigorous enclosure.

pub mod analysis;
pub mod energy;
pub mod exactnum;
pub mod lrs;
pub mod stochastic;
pub mod torus;
pub mod weights;

pub use exactnum::{AlgNum, BigRational, ComplexBox, IntPoly, RatInterval};
pub use lrs::{ExpPolyForm, Lrs};
pub use weights::PolyWeight;

//! Exact arithmetic: `ℤ[t]`, `ℚ(t)`, bipartition-labelled matrices over
//! `ℚ(t)` and the symmetric `L·D·Lᵗ` decomposition.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{ldl_decompose, LdlFactors, PolyMatrix};
pub use poly::IntPoly;
pub use ratfunc::RationalFunction;

//! Exact arithmetic: rationals, Q(ζ₂₄), polynomials, 2×2 matrices, dual
//! numbers and Smith normal form.

mod cyclotomic;
mod dual;
mod matrix;
mod poly;
mod rational;
mod ring;
mod snf;

use core::fmt;

use alloc::string::String;

pub use cyclotomic::{cyc_constant, Constant, Cyclotomic, DEGREE as CYCLOTOMIC_DEGREE};
pub use dual::Dual;
pub use matrix::{dual_matrix_pow, Matrix2};
pub use poly::Polynomial;
pub use rational::Rational;
pub use ring::{Field, Ring};
pub use snf::{smith_diagonal, snf, AbelianGroup, IntegerMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    DivisionByZero,
    UnknownConstant(String),
    Parse(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DivisionByZero => f.write_str("division by zero"),
            AlgebraError::UnknownConstant(s) => write!(f, "unknown constant {:?}", s),
            AlgebraError::Parse(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for AlgebraError {}

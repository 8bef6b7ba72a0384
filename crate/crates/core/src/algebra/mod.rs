//! Coefficient rings, finite fields and sparse polynomials.

pub mod det;
pub mod eval;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod text;
pub mod types;
pub mod var;

pub use det::{det, det_filtered};
pub use eval::Evaluator;
pub use field::{make_field, Fe, FieldDesc, FieldEmbedding};
pub use monomial::{trim_multidegree, Monomial, Multidegree};
pub use poly::{FieldPoly, Gf2Poly, IntPoly, Poly};
pub use ring::{Gf2, Integers, Ring, RingTag};
pub use text::{parse_gf2_poly, parse_int_poly};
pub use types::{type_of, TypeMatrix};
pub use var::{CoordKind, Var, VariableId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unsupported field degree {0}; expected 1..=16")]
    UnsupportedDegree(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient of {monomial} is not divisible by {divisor}")]
    NotDivisible { divisor: String, monomial: String },
    #[error("variable {0} has no type: z coordinates are not counted")]
    ZVariable(String),
    #[error("variable {var} lies outside dimension with nu = {nu}")]
    OutOfRange { var: String, nu: u32 },
}

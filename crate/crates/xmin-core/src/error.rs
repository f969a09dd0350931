use thiserror::Error;

use crate::torus::Character;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XminError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial variable lists differ")]
    VariableMismatch,
    #[error("Laurent polynomial evaluated at zero in variable `{0}`")]
    LaurentAtZero(String),
    #[error("evaluation point has {got} values, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("basis mismatch: {0:?} vs {1:?}")]
    BasisMismatch(crate::octonion::BasisTag, crate::octonion::BasisTag),
    #[error("argument is not in the imaginary octonions")]
    NotImaginary,
    #[error("expected rank 3, found rank {0}")]
    RankDeficient(usize),
    #[error("zero trivector")]
    ZeroTrivector,
    #[error("not in chart U_{0}")]
    NotInChart(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("determinant is {0}, not 1")]
    NotSl2(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("one-parameter subgroup ({c},{d}) is not regular: character {} pairs to zero", list_chars(.characters))]
    Irregular { c: i32, d: i32, characters: Vec<Character> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fixture {file} line {line}: {msg}")]
    Fixture { file: String, line: usize, msg: String },
}

fn list_chars(chars: &[Character]) -> String {
    chars.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

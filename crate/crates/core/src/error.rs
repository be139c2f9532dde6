use thiserror::Error;

use crate::f2_poly::Vars;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: expected {expected}, found {found}")]
    VarMismatch { expected: Vars, found: Vars },

    #[error("variable x{index} is not among {vars}")]
    VariableOutOfRange { index: usize, vars: Vars },

    #[error("monomial has {found} exponents but the ambient ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },

    #[error("complete symmetric polynomial of degree {degree} needs at least one variable")]
    EmptyVariableSet { degree: u32 },

    #[error("power series with zero constant term is not invertible")]
    NotInvertible,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },

    #[error("relation {index} is not homogeneous")]
    RelationNotHomogeneous { index: usize },

    #[error(
        "degree-{degree} slice needs {bits} bits ({rows} rows x {cols} columns), \
         over the budget of {budget} bits"
    )]
    BudgetExceeded {
        degree: u32,
        rows: u64,
        cols: u64,
        bits: u64,
        budget: u64,
    },

    #[error("character rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("character rank must be between 1 and 64, got {0}")]
    InvalidRank(usize),

    #[error("representation has a trivial summand; its Euler class is zero")]
    TrivialSummand,

    #[error("require 1 <= ell < n (got n={n}, ell={ell})")]
    InvalidFlagSpec { n: u32, ell: u32 },

    #[error("line {line}: cannot parse `{token}`: {reason}")]
    Parse {
        line: usize,
        token: String,
        reason: String,
    },

    #[error("normal-form engines disagree: groebner gives `{groebner}`, oracle gives `{oracle}`")]
    EngineDisagreement { groebner: String, oracle: String },
}

impl Error {
    pub(crate) fn parse(line: usize, token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            token: token.into(),
            reason: reason.into(),
        }
    }
}

//! Exact parameter arithmetic for the hexagon (girth 6) and octagon
//! (girth 8) recursive constructions: closed forms, planning and
//! certificates.

mod certificate;
mod formulas;
mod plan;
mod power;
mod theorem;

use num_bigint::BigUint;
use thiserror::Error;

use crate::error::{Classify, ErrorKind};

pub use certificate::{
    certificate, certificate_with_budget, reverify, Certificate, Check, Method, Status,
    DEFAULT_DIGIT_BUDGET,
};
pub use formulas::{
    check_hexagon_assumptions, check_octagon_assumptions, edge_bound_hexagon, edge_bound_octagon,
    edge_exponent_hexagon, edge_exponent_octagon, epsilon, hexagon_params, octagon_params,
    q_exponent, q_exponent_recursive, q_prime_exponent, q_prime_exponent_recursive,
    q_prime_sequence, q_sequence, HexagonParams, OctagonParams,
};
pub use plan::{
    check_sandwich_hexagon, check_sandwich_octagon, plan_parameters_hexagon,
    plan_parameters_octagon, Plan, Seed,
};
pub use power::{PowerExpr, DENOMINATOR_LCM};
pub use theorem::{theorem_bound, theorem_constant_c, theorem_constant_d, TheoremBound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlannerError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parameter assumption violated: {0}")]
    Assumption(String),
    #[error("{0}")]
    Invalid(String),
    #[error("N is below the seed value N* = {n_star}")]
    BelowSeed { n_star: BigUint },
    #[error("check {check} needs about {digits} digits, over the budget of {budget}")]
    DigitBudget {
        check: String,
        digits: u64,
        budget: u64,
    },
    #[error("certificate line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Mismatch(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Classify for PlannerError {
    fn kind(&self) -> ErrorKind {
        match self {
            PlannerError::DigitBudget { .. } => ErrorKind::Resource,
            PlannerError::Parse { .. } => ErrorKind::Parse,
            PlannerError::Internal(_) | PlannerError::Mismatch(_) => ErrorKind::Verification,
            _ => ErrorKind::Precondition,
        }
    }
}

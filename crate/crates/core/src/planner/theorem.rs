//! Asymptotic edge-count exponents at a concrete `N`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::formulas::{edge_bound_hexagon, edge_bound_octagon};
use super::plan::{plan_parameters_hexagon, plan_parameters_octagon};
use super::power::PowerExpr;
use super::PlannerError;
use crate::geometry::is_prime;

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremBound {
    pub girth: u32,
    /// Base of the construction: `p` for girth 6, always 2 for girth 8.
    pub p: u64,
    /// `e` in `|E| >= N^e`. May be negative at small `N`.
    pub exponent: f64,
    /// `c(p)` or `d` in `N^(11/8 - c/sqrt(log2 N))`, `N^(11/9 - d/sqrt(log2 N))`.
    pub constant: f64,
    /// Edge bound of the planned construction with `r = 2`, or `None` below
    /// the seed vertex count.
    pub lower_bound: Option<PowerExpr>,
}

/// `log2(x)` from the bit length and the leading 64 bits.
pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}

pub fn theorem_constant_c(p: u64) -> f64 {
    11.0 / 8.0 * 33.0 * (p as f64).log2().sqrt()
}

pub fn theorem_constant_d() -> f64 {
    11.0 / 9.0 * 13.0 * 10f64.sqrt()
}

pub fn theorem_bound(girth: u32, p: u64, n_target: &BigUint) -> Result<TheoremBound, PlannerError> {
    if *n_target < BigUint::from(2u32) {
        return Err(PlannerError::Invalid("N must be >= 2".into()));
    }
    let log2_n = log2_big(n_target);
    let below_seed = |e: PlannerError| match e {
        PlannerError::BelowSeed { .. } => Ok(None),
        e => Err(e),
    };
    match girth {
        6 => {
            if !is_prime(p) {
                return Err(PlannerError::NotPrime(p));
            }
            let log_p_n = log2_n / (p as f64).log2();
            let exponent = 11.0 / 8.0 * (1.0 - 33.0 / log_p_n.sqrt());
            let lower_bound = match plan_parameters_hexagon(p, 2, n_target) {
                Ok(plan) => Some(edge_bound_hexagon(p, plan.m, plan.n)?),
                Err(e) => below_seed(e)?,
            };
            Ok(TheoremBound {
                girth,
                p,
                exponent,
                constant: theorem_constant_c(p),
                lower_bound,
            })
        }
        8 => {
            let exponent = 11.0 / 9.0 * (1.0 - 13.0 * (10.0 / log2_n).sqrt());
            let lower_bound = match plan_parameters_octagon(2, n_target) {
                Ok(plan) => Some(edge_bound_octagon(plan.m, plan.n)?),
                Err(e) => below_seed(e)?,
            };
            Ok(TheoremBound {
                girth,
                p: 2,
                exponent,
                constant: theorem_constant_d(),
                lower_bound,
            })
        }
        g => Err(PlannerError::Invalid(format!(
            "theorem bounds exist for girth 6 and 8, not {g}"
        ))),
    }
}

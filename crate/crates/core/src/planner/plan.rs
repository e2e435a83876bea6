//! Choosing `(m, n)` for a target vertex count `N`.
//!
//! Hexagon levels tile the `m` axis: level `n` covers
//! `9^(n-1) <= m <= 9^(n+1)` and `Q_{9^(n+1)+1, n} = Q_{9^n, n+1}`, so the
//! first `n` whose range reaches past `N` is the answer and `m` follows by
//! binary search. Octagon levels overlap (`m` is odd, the jump goes to
//! `10^n - 1`), and the smallest admissible `n` is taken.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::formulas::{
    hexagon_v, octagon_v, pow_at_least, q_exponent_recursive, q_prime_exponent_recursive,
};
use super::{PlannerError, DEFAULT_DIGIT_BUDGET};
use crate::geometry::is_prime;

/// Base case of the planning induction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub m_star: u64,
    pub n_star: u64,
    /// `N*`, the vertex count at `(m*, n*)`.
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub m: u64,
    pub n: u64,
    pub seed: Seed,
}

const MAX_LEVEL: u64 = 18;

fn check_n_size(n_target: &BigUint) -> Result<(), PlannerError> {
    let digits = (n_target.bits() as f64 * std::f64::consts::LOG10_2) as u64 + 1;
    if digits > DEFAULT_DIGIT_BUDGET {
        return Err(PlannerError::DigitBudget {
            check: "N".into(),
            digits,
            budget: DEFAULT_DIGIT_BUDGET,
        });
    }
    Ok(())
}

/// `poly(p^e) <= N` where `poly` has degree `degree` and positive
/// coefficients. Rejects cheaply when `p^(degree e)` alone already has more
/// bits than `N`.
fn poly_at_most(
    poly: fn(&BigUint) -> BigUint,
    degree: u64,
    p: u64,
    e: &BigInt,
    n_target: &BigUint,
) -> bool {
    let low_bits = BigInt::from(64 - p.leading_zeros() as u64 - 1);
    if e * BigInt::from(degree) * low_bits >= BigInt::from(n_target.bits()) {
        return false;
    }
    let e = e.to_u32().expect("exponent bounded by bit length of N");
    poly(&BigUint::from(p).pow(e)) <= *n_target
}

fn hex_le(p: u64, m: u64, n: u64, n_target: &BigUint) -> bool {
    poly_at_most(hexagon_v, 9, p, &q_exponent_recursive(m, n), n_target)
}

fn oct_le(m: u64, n: u64, n_target: &BigUint) -> bool {
    poly_at_most(octagon_v, 10, 2, &q_prime_exponent_recursive(m, n), n_target)
}

fn exact_v(poly: fn(&BigUint) -> BigUint, p: u64, e: BigInt) -> BigUint {
    let e = e.to_u32().expect("exponent fits in u32");
    poly(&BigUint::from(p).pow(e))
}

/// Largest `x` in `[lo, hi]` with `ok(x)`, given `ok(lo)` and monotonicity.
/// `step` keeps parity for the octagon's odd `m`.
fn last_true(lo: u64, hi: u64, step: u64, ok: impl Fn(u64) -> bool) -> u64 {
    // search on the index k where x = lo + step * k
    let (mut a, mut b) = (0u64, (hi - lo) / step);
    while a < b {
        let mid = a + (b - a + 1) / 2;
        if ok(lo + step * mid) {
            a = mid;
        } else {
            b = mid - 1;
        }
    }
    lo + step * a
}

pub fn hexagon_seed(p: u64, r: u64) -> Result<Seed, PlannerError> {
    if !is_prime(p) {
        return Err(PlannerError::NotPrime(p));
    }
    if r < 2 {
        return Err(PlannerError::Assumption(format!("r = {r} must be >= 2")));
    }
    let m_star = (2u64..)
        .find(|&m| pow_at_least(p, m - 1, 5) && pow_at_least(p, m, r - 1))
        .expect("p^m grows without bound");
    let n_star = (1u64..)
        .find(|&n| 9u128.pow(n as u32) > m_star as u128)
        .expect("9^n grows without bound");
    let value = exact_v(hexagon_v, p, q_exponent_recursive(m_star, n_star));
    Ok(Seed {
        m_star,
        n_star,
        value,
    })
}

pub fn octagon_seed(r: u64) -> Result<Seed, PlannerError> {
    if r < 2 {
        return Err(PlannerError::Assumption(format!("r = {r} must be >= 2")));
    }
    let m_star = (5u64..)
        .step_by(2)
        .find(|&m| pow_at_least(2, m, r - 1))
        .expect("2^m grows without bound");
    let n_star = (1u64..)
        .find(|&n| 10u128.pow(n as u32) > m_star as u128)
        .expect("10^n grows without bound");
    let value = exact_v(octagon_v, 2, q_prime_exponent_recursive(m_star, n_star));
    Ok(Seed {
        m_star,
        n_star,
        value,
    })
}

/// `(m, n)` with `v(Q_{p,m,n}) <= N < v(Q_{p,m+1,n})`.
pub fn plan_parameters_hexagon(p: u64, r: u64, n_target: &BigUint) -> Result<Plan, PlannerError> {
    check_n_size(n_target)?;
    let seed = hexagon_seed(p, r)?;
    if *n_target < seed.value {
        return Err(PlannerError::BelowSeed {
            n_star: seed.value,
        });
    }
    for n in seed.n_star..=MAX_LEVEL {
        let hi = 9u64.pow(n as u32 + 1);
        if hex_le(p, hi + 1, n, n_target) {
            continue;
        }
        let lo = if n == seed.n_star {
            seed.m_star
        } else {
            9u64.pow(n as u32 - 1)
        };
        let m = last_true(lo, hi, 1, |m| hex_le(p, m, n, n_target));
        return Ok(Plan { m, n, seed });
    }
    Err(PlannerError::Internal("no hexagon level found".into()))
}

/// `(m, n)`, `m` odd, with `v'(Q'_{2,m,n}) <= N < v'(Q'_{2,m+2,n})`.
pub fn plan_parameters_octagon(r: u64, n_target: &BigUint) -> Result<Plan, PlannerError> {
    check_n_size(n_target)?;
    let seed = octagon_seed(r)?;
    if *n_target < seed.value {
        return Err(PlannerError::BelowSeed {
            n_star: seed.value,
        });
    }
    for n in seed.n_star..=MAX_LEVEL {
        let hi = 10u64.pow(n as u32 + 1) - 1;
        if oct_le(hi + 2, n, n_target) {
            continue;
        }
        let lo = if n == seed.n_star {
            seed.m_star
        } else {
            10u64.pow(n as u32 - 1) - 1
        };
        let m = last_true(lo, hi, 2, |m| oct_le(m, n, n_target));
        return Ok(Plan { m, n, seed });
    }
    Err(PlannerError::Internal("no octagon level found".into()))
}

/// Both sides of the hexagon sandwich by full expansion.
pub fn check_sandwich_hexagon(p: u64, m: u64, n: u64, n_target: &BigUint) -> bool {
    let low = exact_v(hexagon_v, p, q_exponent_recursive(m, n));
    let high = exact_v(hexagon_v, p, q_exponent_recursive(m + 1, n));
    low <= *n_target && *n_target < high
}

/// Both sides of the octagon sandwich by full expansion.
pub fn check_sandwich_octagon(m: u64, n: u64, n_target: &BigUint) -> bool {
    let low = exact_v(octagon_v, 2, q_prime_exponent_recursive(m, n));
    let high = exact_v(octagon_v, 2, q_prime_exponent_recursive(m + 2, n));
    m % 2 == 1 && low <= *n_target && *n_target < high
}

//! Closed forms of the hexagon and octagon constructions.
//!
//! Hexagon family (prime `p`, `m >= 2`, `p^(m-1) >= 5`):
//!
//! ```text
//! v(q) = (1+q)(1+q^4+q^8)        b(q) = (1+q^3)(1+q^4+q^8)
//! Q_1 = p^m,  Q_n = p Q_{n-1}^9  =  p^(9^(n-1)(m+1/8) - 1/8)
//! |E_n| >= p^((11/8)(9^n(m+1/8) - (n+m+1/8)))
//! ```
//!
//! Octagon family (`q = 2^m`, `m` odd, `m >= 5`):
//!
//! ```text
//! v'(q) = (1+q)(1+q^3+q^6+q^9)   b'(q) = (1+q^2)(1+q^3+q^6+q^9)
//! Q'_1 = 2^m, Q'_n = 2 Q'_{n-1}^10 = 2^(10^(n-1)(m+1/9) - 1/9)
//! |E_n| >= 2^((11/9)(10^n(m+1/9) - (n+m+1/9)))
//! ```

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

use super::power::PowerExpr;
use super::PlannerError;
use crate::geometry::is_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonParams {
    q: BigUint,
}

impl HexagonParams {
    pub fn q(&self) -> &BigUint {
        &self.q
    }

    /// `(1+q)(1+q^4+q^8)`: points of a hexagon of order `(q^3, q)`.
    pub fn v(&self) -> BigUint {
        hexagon_v(&self.q)
    }

    /// `(1+q^3)(1+q^4+q^8)`: lines of a hexagon of order `(q^3, q)`.
    pub fn b(&self) -> BigUint {
        hexagon_b(&self.q)
    }
}

pub(crate) fn hexagon_v(q: &BigUint) -> BigUint {
    let q4 = q.pow(4u32);
    let q8 = &q4 * &q4;
    (BigUint::one() + q) * (BigUint::one() + &q4 + q8)
}

pub(crate) fn hexagon_b(q: &BigUint) -> BigUint {
    let q4 = q.pow(4u32);
    let q8 = &q4 * &q4;
    (BigUint::one() + q.pow(3u32)) * (BigUint::one() + &q4 + q8)
}

pub(crate) fn octagon_v(q: &BigUint) -> BigUint {
    let q3 = q.pow(3u32);
    let q6 = &q3 * &q3;
    let q9 = &q6 * &q3;
    (BigUint::one() + q) * (BigUint::one() + q3 + q6 + q9)
}

pub(crate) fn octagon_b(q: &BigUint) -> BigUint {
    let q3 = q.pow(3u32);
    let q6 = &q3 * &q3;
    let q9 = &q6 * &q3;
    (BigUint::one() + q.pow(2u32)) * (BigUint::one() + q3 + q6 + q9)
}

pub fn hexagon_params(q: &BigUint) -> Result<HexagonParams, PlannerError> {
    if *q < BigUint::from(2u32) {
        return Err(PlannerError::Invalid(format!("hexagon order q = {q} must be >= 2")));
    }
    Ok(HexagonParams { q: q.clone() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonParams {
    q: BigUint,
    m: u64,
}

impl OctagonParams {
    pub fn q(&self) -> &BigUint {
        &self.q
    }

    /// `q = 2^m`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `(1+q)(1+q^3+q^6+q^9)`.
    pub fn v(&self) -> BigUint {
        octagon_v(&self.q)
    }

    /// `(1+q^2)(1+q^3+q^6+q^9)`.
    pub fn b(&self) -> BigUint {
        octagon_b(&self.q)
    }
}

/// Requires `q` to be an odd power of 2.
pub fn octagon_params(q: &BigUint) -> Result<OctagonParams, PlannerError> {
    let bits = q.bits();
    let power_of_two = bits > 0 && q.trailing_zeros() == Some(bits - 1);
    let m = bits.saturating_sub(1);
    if !power_of_two || m % 2 == 0 {
        return Err(PlannerError::Invalid(format!(
            "octagon order q = {q} must be an odd power of 2"
        )));
    }
    Ok(OctagonParams { q: q.clone(), m })
}

/// `p` prime, `m >= 2`, `p^(m-1) >= 5`.
pub fn check_hexagon_assumptions(p: u64, m: u64) -> Result<(), PlannerError> {
    if !is_prime(p) {
        return Err(PlannerError::NotPrime(p));
    }
    if m < 2 {
        return Err(PlannerError::Assumption(format!("m = {m} must be >= 2")));
    }
    if !pow_at_least(p, m - 1, 5) {
        return Err(PlannerError::Assumption(format!(
            "p^(m-1) = {p}^{} must be >= 5",
            m - 1
        )));
    }
    Ok(())
}

/// `m` odd and `m >= 5`.
pub fn check_octagon_assumptions(m: u64) -> Result<(), PlannerError> {
    if m % 2 == 0 {
        return Err(PlannerError::Assumption(format!("m = {m} must be odd")));
    }
    if m < 5 {
        return Err(PlannerError::Assumption(format!("m = {m} must be >= 5")));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<(), PlannerError> {
    if n == 0 {
        return Err(PlannerError::Assumption("n must be >= 1".into()));
    }
    Ok(())
}

/// `p^e >= bound` without overflow.
pub(crate) fn pow_at_least(p: u64, e: u64, bound: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..e {
        if acc >= bound {
            return true;
        }
        acc = acc.saturating_mul(p);
    }
    acc >= bound
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn big_pow(base: u64, e: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(e))
}

/// Closed-form exponent `9^(n-1)(m+1/8) - 1/8` of `Q_{p,m,n}`.
pub fn q_exponent(m: u64, n: u64) -> BigRational {
    big_pow(9, n - 1) * (int(m) + rat(1, 8)) - rat(1, 8)
}

/// Exponent of `Q_n` by the recursion `e_1 = m`, `e_n = 9 e_{n-1} + 1`.
pub fn q_exponent_recursive(m: u64, n: u64) -> BigInt {
    (1..n).fold(BigInt::from(m), |e, _| e * 9 + 1)
}

/// Closed-form exponent `10^(n-1)(m+1/9) - 1/9` of `Q'_{2,m,n}`.
pub fn q_prime_exponent(m: u64, n: u64) -> BigRational {
    big_pow(10, n - 1) * (int(m) + rat(1, 9)) - rat(1, 9)
}

/// `e_1 = m`, `e_n = 10 e_{n-1} + 1`.
pub fn q_prime_exponent_recursive(m: u64, n: u64) -> BigInt {
    (1..n).fold(BigInt::from(m), |e, _| e * 10 + 1)
}

fn closed_equals_recursive(
    closed: &BigRational,
    recursive: BigInt,
    what: &str,
) -> Result<(), PlannerError> {
    if *closed != BigRational::from_integer(recursive.clone()) {
        return Err(PlannerError::Internal(format!(
            "{what}: closed form {closed} != recursion {recursive}"
        )));
    }
    Ok(())
}

/// `Q_{p,m,n}` as an exact power of `p`, cross-checked against the recursion.
pub fn q_sequence(p: u64, m: u64, n: u64) -> Result<PowerExpr, PlannerError> {
    check_hexagon_assumptions(p, m)?;
    check_n(n)?;
    let e = q_exponent(m, n);
    closed_equals_recursive(&e, q_exponent_recursive(m, n), "Q_n")?;
    PowerExpr::new(p.into(), e)
}

/// `Q'_{2,m,n}`, cross-checked against the recursion; always an odd power of 2.
pub fn q_prime_sequence(m: u64, n: u64) -> Result<PowerExpr, PlannerError> {
    check_octagon_assumptions(m)?;
    check_n(n)?;
    let e = q_prime_exponent(m, n);
    closed_equals_recursive(&e, q_prime_exponent_recursive(m, n), "Q'_n")?;
    PowerExpr::new(2u32.into(), e)
}

/// `(11/8)(9^n(m+1/8) - (n+m+1/8))`.
pub fn edge_exponent_hexagon(m: u64, n: u64) -> BigRational {
    rat(11, 8) * (big_pow(9, n) * (int(m) + rat(1, 8)) - (int(n) + int(m) + rat(1, 8)))
}

/// `(11/9)(10^n(m+1/9) - (n+m+1/9))`.
pub fn edge_exponent_octagon(m: u64, n: u64) -> BigRational {
    rat(11, 9) * (big_pow(10, n) * (int(m) + rat(1, 9)) - (int(n) + int(m) + rat(1, 9)))
}

/// Lower bound on the edge count of the girth-6 construction.
pub fn edge_bound_hexagon(p: u64, m: u64, n: u64) -> Result<PowerExpr, PlannerError> {
    check_hexagon_assumptions(p, m)?;
    check_n(n)?;
    PowerExpr::new(p.into(), edge_exponent_hexagon(m, n))
}

/// Lower bound on the edge count of the girth-8 construction.
pub fn edge_bound_octagon(m: u64, n: u64) -> Result<PowerExpr, PlannerError> {
    check_octagon_assumptions(m)?;
    check_n(n)?;
    PowerExpr::new(2u32.into(), edge_exponent_octagon(m, n))
}

/// `ε(m, n) = (n+m+1/8) / (9^n (m+1/8))`, reduced.
pub fn epsilon(m: u64, n: u64) -> Result<BigRational, PlannerError> {
    if m == 0 || n == 0 {
        return Err(PlannerError::Assumption("epsilon needs m, n >= 1".into()));
    }
    Ok((int(n) + int(m) + rat(1, 8)) / (big_pow(9, n) * (int(m) + rat(1, 8))))
}

//! `base^exponent` with an exact rational exponent.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PlannerError;

/// Every exponent denominator must divide this.
pub const DENOMINATOR_LCM: u32 = 72;

/// Exact value `base^exponent`, exponent a rational whose reduced
/// denominator divides 72.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerExpr {
    base: BigUint,
    exponent: BigRational,
}

impl PowerExpr {
    pub fn new(base: BigUint, exponent: BigRational) -> Result<Self, PlannerError> {
        if base.is_zero() {
            return Err(PlannerError::Invalid("power base must be positive".into()));
        }
        let lcm = BigInt::from(DENOMINATOR_LCM);
        if !(&lcm % exponent.denom()).is_zero() {
            return Err(PlannerError::Invalid(format!(
                "exponent {exponent} has denominator not dividing {DENOMINATOR_LCM}"
            )));
        }
        Ok(PowerExpr { base, exponent })
    }

    pub fn integer(base: u64, exponent: BigInt) -> Self {
        PowerExpr {
            base: BigUint::from(base),
            exponent: BigRational::from_integer(exponent),
        }
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn exponent(&self) -> &BigRational {
        &self.exponent
    }

    /// The exponent as an integer, when it is one.
    pub fn integer_exponent(&self) -> Option<&BigInt> {
        self.exponent.is_integer().then(|| self.exponent.numer())
    }

    /// Approximate decimal digit count of the value.
    pub fn approx_digits(&self) -> f64 {
        approx_digits(&self.base, &self.exponent)
    }

    /// Expands to a big integer; only for nonnegative integer exponents.
    pub fn expand(&self) -> Option<BigUint> {
        let e = self.integer_exponent()?;
        if e.is_negative() {
            return None;
        }
        Some(self.base.pow(e.to_u32()?))
    }

    /// Exact comparison with an integer, without rounding.
    ///
    /// With exponent `a/b` (`b > 0`), compares `base^a` against `x^b`.
    pub fn cmp_integer(&self, x: &BigUint) -> Ordering {
        let a = self.exponent.numer();
        let b = self
            .exponent
            .denom()
            .to_u32()
            .expect("denominator divides 72");
        let rhs = x.pow(b);
        let mag = a.magnitude().to_u32().expect("exponent fits in u32");
        if a.is_negative() {
            // base^-|a| vs rhs  <=>  1 vs rhs * base^|a|
            BigUint::one().cmp(&(rhs * self.base.pow(mag)))
        } else {
            self.base.pow(mag).cmp(&rhs)
        }
    }
}

pub(crate) fn approx_digits(base: &BigUint, exponent: &BigRational) -> f64 {
    let e = exponent.to_f64().unwrap_or(f64::INFINITY);
    // log10(base) from its leading 53 bits
    let shift = base.bits().saturating_sub(53);
    let top = (base >> shift).to_f64().unwrap_or(1.0);
    let log10 = top.log10() + shift as f64 * std::f64::consts::LOG10_2;
    (e * log10).max(0.0) + 1.0
}

impl fmt::Display for PowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_integer() {
            write!(f, "{}^{}", self.base, self.exponent.numer())
        } else {
            write!(f, "{}^{}/{}", self.base, self.exponent.numer(), self.exponent.denom())
        }
    }
}

impl std::str::FromStr for PowerExpr {
    type Err = PlannerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PlannerError::Invalid(format!("malformed power expression {s:?}"));
        let (base, exp) = s.split_once('^').ok_or_else(bad)?;
        let base: BigUint = base.parse().map_err(|_| bad())?;
        let exponent = match exp.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.parse().map_err(|_| bad())?;
                let b: BigInt = b.parse().map_err(|_| bad())?;
                if b <= BigInt::zero() {
                    return Err(bad());
                }
                let r = BigRational::new(a.clone(), b.clone());
                // require the reduced form
                if r.denom() != &b || r.numer() != &a || b.is_one() {
                    return Err(bad());
                }
                r
            }
            None => BigRational::from_integer(exp.parse().map_err(|_| bad())?),
        };
        PowerExpr::new(base, exponent)
    }
}

//! Machine-checked parameter certificates.
//!
//! Serialized form, one record per line:
//!
//! ```text
//! cert 1
//! params girth 6 p 5 m 2 n 2 r 3
//! check p-prime PASS bignum p is prime
//! ...
//! value Q_2 5^19
//! status VALID
//! ```
//!
//! A certificate re-verifies by regenerating it from its `params` line and
//! comparing bytes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::formulas::{
    edge_exponent_hexagon, edge_exponent_octagon, epsilon, hexagon_b, hexagon_v, octagon_b,
    octagon_v, pow_at_least, q_exponent, q_exponent_recursive, q_prime_exponent,
    q_prime_exponent_recursive,
};
use super::power::PowerExpr;
use super::PlannerError;
use crate::geometry::is_prime;

/// Largest expansion, in decimal digits, a certificate may perform.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bignum,
    ExponentExact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bignum => "bignum",
            Method::ExponentExact => "exponent-exact",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub statement: String,
    pub method: Method,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Valid,
    Invalid,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Valid => "VALID",
            Status::Invalid => "INVALID",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub girth: u32,
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub checks: Vec<Check>,
    /// Derived quantities in emission order.
    pub values: Vec<(String, String)>,
}

impl Certificate {
    pub fn status(&self) -> Status {
        if self.checks.iter().all(|c| c.pass) {
            Status::Valid
        } else {
            Status::Invalid
        }
    }

    pub fn is_valid(&self) -> bool {
        self.status() == Status::Valid
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn value(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("cert 1\n");
        out += &format!(
            "params girth {} p {} m {} n {} r {}\n",
            self.girth, self.p, self.m, self.n, self.r
        );
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            out += &format!("check {} {} {} {}\n", c.name, verdict, c.method, c.statement);
        }
        for (k, v) in &self.values {
            out += &format!("value {k} {v}\n");
        }
        out += &format!("status {}\n", self.status());
        out
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

pub fn certificate(p: u64, m: u64, n: u64, r: u64, girth: u32) -> Result<Certificate, PlannerError> {
    certificate_with_budget(p, m, n, r, girth, DEFAULT_DIGIT_BUDGET)
}

/// Builds a certificate. Parameter assumptions that fail give an INVALID
/// certificate; zero parameters, an unknown girth or an expansion over
/// `budget` digits are errors. For girth 8 the base is always 2 and `p` is
/// ignored.
pub fn certificate_with_budget(
    p: u64,
    m: u64,
    n: u64,
    r: u64,
    girth: u32,
    budget: u64,
) -> Result<Certificate, PlannerError> {
    if m == 0 || n == 0 || r == 0 {
        return Err(PlannerError::Assumption(
            "m, n and r must be positive".into(),
        ));
    }
    let family = match girth {
        6 => Family::hexagon(p),
        8 => Family::octagon(),
        g => {
            return Err(PlannerError::Invalid(format!(
                "certificates exist for girth 6 and 8, not {g}"
            )))
        }
    };
    Builder::new(family, m, n, r, budget).run()
}

/// Parses the `params` line of `text`, regenerates, and compares bytes.
pub fn reverify(text: &str) -> Result<Certificate, PlannerError> {
    let mut lines = text.lines();
    let bad = |line: usize, message: &str| PlannerError::Parse {
        line,
        message: message.into(),
    };
    if lines.next() != Some("cert 1") {
        return Err(bad(1, "expected header `cert 1`"));
    }
    let params = lines.next().ok_or_else(|| bad(2, "missing params line"))?;
    let tokens: Vec<&str> = params.split(' ').collect();
    let keys = ["params", "girth", "p", "m", "n", "r"];
    if tokens.len() != 11
        || tokens[0] != keys[0]
        || (1..6).any(|i| tokens[2 * i - 1] != keys[i])
    {
        return Err(bad(2, "expected `params girth G p P m M n N r R`"));
    }
    let num = |i: usize| -> Result<u64, PlannerError> {
        let t = tokens[2 * i];
        match t.parse::<u64>() {
            Ok(x) if x.to_string() == t => Ok(x),
            _ => Err(bad(2, &format!("bad number {t:?}"))),
        }
    };
    let girth = u32::try_from(num(1)?).map_err(|_| bad(2, "girth out of range"))?;
    let cert = certificate(num(2)?, num(3)?, num(4)?, num(5)?, girth)?;
    let regenerated = cert.serialize();
    if regenerated != text {
        let line = regenerated
            .lines()
            .zip(text.lines())
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| regenerated.lines().count().min(text.lines().count()))
            + 1;
        return Err(PlannerError::Mismatch(format!(
            "certificate differs from regeneration at line {line}"
        )));
    }
    Ok(cert)
}

/// The parts that differ between the two constructions.
struct Family {
    girth: u32,
    p: u64,
    v: fn(&BigUint) -> BigUint,
    b: fn(&BigUint) -> BigUint,
    /// Copies of the previous stage placed in each edge.
    copies: u64,
    /// Power taken in the vertex bound; the edge bound uses `8 * root`.
    root: u32,
    closed: fn(u64, u64) -> BigRational,
    recursive: fn(u64, u64) -> BigInt,
    edge_exponent: fn(u64, u64) -> BigRational,
}

impl Family {
    fn hexagon(p: u64) -> Self {
        Family {
            girth: 6,
            p,
            v: hexagon_v,
            b: hexagon_b,
            copies: p.saturating_sub(1),
            root: 8,
            closed: q_exponent,
            recursive: q_exponent_recursive,
            edge_exponent: edge_exponent_hexagon,
        }
    }

    fn octagon() -> Self {
        Family {
            girth: 8,
            p: 2,
            v: octagon_v,
            b: octagon_b,
            copies: 1,
            root: 9,
            closed: q_prime_exponent,
            recursive: q_prime_exponent_recursive,
            edge_exponent: edge_exponent_octagon,
        }
    }

    /// Exponent `E` in `v(Q_i)^root < p^E`: `9^i(8m+1)` or `10^i(9m+1)`.
    fn vertex_bound_exponent(&self, m: u64, i: u64) -> BigInt {
        let root = BigInt::from(self.root);
        (&root + 1u32).pow(i as u32) * (root * m + 1u32)
    }

    fn edge_power(&self) -> u32 {
        8 * self.root
    }
}

struct Builder {
    f: Family,
    m: u64,
    n: u64,
    r: u64,
    budget: u64,
    checks: Vec<Check>,
    values: Vec<(String, String)>,
}

impl Builder {
    fn new(f: Family, m: u64, n: u64, r: u64, budget: u64) -> Self {
        Builder {
            f,
            m,
            n,
            r,
            budget,
            checks: Vec::new(),
            values: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, method: Method, statement: &str, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            statement: statement.into(),
            method,
            pass,
        });
    }

    fn value(&mut self, name: impl Into<String>, value: impl ToString) {
        self.values.push((name.into(), value.to_string()));
    }

    fn finish(self) -> Certificate {
        Certificate {
            girth: self.f.girth,
            p: self.f.p,
            m: self.m,
            n: self.n,
            r: self.r,
            checks: self.checks,
            values: self.values,
        }
    }

    fn assumptions(&mut self) -> bool {
        let (p, m) = (self.f.p, self.m);
        if self.f.girth == 6 {
            let prime = is_prime(p);
            self.check("p-prime", Method::Bignum, "p is prime", prime);
            let pm1 = m >= 2 && pow_at_least(p, m - 1, 5);
            self.check("p-power-m-1", Method::Bignum, "m >= 2 and p^(m-1) >= 5", pm1);
            prime && pm1
        } else {
            let odd = m % 2 == 1;
            self.check("m-odd", Method::Bignum, "m is odd", odd);
            self.check("m-at-least-5", Method::Bignum, "m >= 5", m >= 5);
            odd && m >= 5
        }
    }

    /// Digit estimates for every expansion, in emission order.
    fn estimates(&self) -> Vec<(String, f64)> {
        let lp = (self.f.p as f64).log10();
        let e: Vec<f64> = (1..=self.n)
            .map(|i| (self.f.recursive)(self.m, i).to_f64().unwrap_or(f64::INFINITY))
            .collect();
        // v and b have degree at most 11 in q
        let deg = 12.0;
        let mut out = vec![("split-factor".to_string(), self.m as f64 * lp + 1.0)];
        for i in 2..=self.n as usize {
            out.push((format!("substitution-fits-{i}"), e[i - 1].max(deg * e[i - 2]) * lp + 2.0));
        }
        for i in 1..=self.n {
            let rhs = self
                .f
                .vertex_bound_exponent(self.m, i)
                .to_f64()
                .unwrap_or(f64::INFINITY);
            out.push((format!("vertex-bound-{i}"), rhs * lp + 2.0));
        }
        let edges: f64 = e.iter().map(|x| deg * x * lp + lp + 1.0).sum();
        out.push(("edge-count".into(), self.f.edge_power() as f64 * edges));
        out
    }

    fn run(mut self) -> Result<Certificate, PlannerError> {
        let assumptions_hold = self.assumptions();
        let r_fits = self.r >= 2 && pow_at_least(self.f.p, self.m, self.r - 1);
        self.check("r-range", Method::Bignum, "2 <= r <= 1+p^m", r_fits);
        if !assumptions_hold {
            return Ok(self.finish());
        }
        for (check, digits) in self.estimates() {
            if !(digits <= self.budget as f64) {
                return Err(PlannerError::DigitBudget {
                    check,
                    digits: if digits.is_finite() { digits as u64 } else { u64::MAX },
                    budget: self.budget,
                });
            }
        }

        let (p, m, n) = (self.f.p, self.m, self.n);
        let pb = BigUint::from(p);
        let pow_p = |e: &BigInt| pb.pow(e.to_u32().expect("within digit budget"));

        let mut exps = Vec::new();
        for i in 1..=n {
            let closed = (self.f.closed)(m, i);
            let rec = (self.f.recursive)(m, i);
            let ok = closed == BigRational::from_integer(rec.clone());
            self.check(
                format!("closed-form-{i}"),
                Method::ExponentExact,
                "closed-form exponent of Q_i equals the recursion",
                ok,
            );
            exps.push(rec);
        }
        let qs: Vec<BigUint> = exps.iter().map(pow_p).collect();
        let vs: Vec<BigUint> = qs.iter().map(|q| (self.f.v)(q)).collect();
        let bs: Vec<BigUint> = qs.iter().map(|q| (self.f.b)(q)).collect();

        let copies = BigUint::from(self.f.copies);
        let fits = if self.f.girth == 6 {
            "Q_i >= (p-1) v(Q_(i-1))"
        } else {
            "Q_i >= v(Q_(i-1))"
        };
        for i in 1..n as usize {
            let ok = qs[i] >= &copies * &vs[i - 1];
            self.check(format!("substitution-fits-{}", i + 1), Method::Bignum, fits, ok);
        }

        let bound = format!("v(Q_i)^{} < p^{}", self.f.root, vertex_bound_text(self.f.girth));
        for i in 1..=n as usize {
            let lhs = vs[i - 1].pow(self.f.root);
            let rhs = pow_p(&self.f.vertex_bound_exponent(m, i as u64));
            self.check(format!("vertex-bound-{i}"), Method::Bignum, &bound, lhs < rhs);
        }

        let mut edges = bs[0].clone();
        for b in &bs[1..] {
            edges = &copies * edges * b;
        }
        let edge_exp = (self.f.edge_exponent)(m, n);
        let k = self.f.edge_power();
        let scaled = &edge_exp * BigRational::from_integer(k.into());
        if !scaled.is_integer() {
            return Err(PlannerError::Internal(format!(
                "{k} * {edge_exp} is not an integer"
            )));
        }
        let ok = edges.pow(k) >= pow_p(scaled.numer());
        self.check(
            "edge-count",
            Method::Bignum,
            &format!("|E_n|^{k} >= p^({k} * edge exponent)"),
            ok,
        );

        let p_m = pb.pow(m as u32);
        let split = (BigUint::one() + &p_m) / self.r;
        self.check(
            "split-factor",
            Method::Bignum,
            "floor((1+p^m)/r) >= 1",
            !split.is_zero(),
        );

        for i in 0..n as usize {
            let q = PowerExpr::integer(p, exps[i].clone());
            self.value(format!("Q_{}", i + 1), q);
            self.value(format!("v(Q_{})", i + 1), &vs[i]);
            self.value(format!("b(Q_{})", i + 1), &bs[i]);
        }
        self.value("V_n", &vs[n as usize - 1]);
        self.value("E_n", &edges);
        self.value("E_n-bound", PowerExpr::new(pb.clone(), edge_exp)?);
        if self.f.girth == 6 {
            self.value("epsilon", epsilon(m, n)?);
        }
        self.value("split-factor", &split);
        self.value("final-edges", &split * &edges);
        Ok(self.finish())
    }
}

fn vertex_bound_text(girth: u32) -> &'static str {
    if girth == 6 {
        "(9^i (8m+1))"
    } else {
        "(10^i (9m+1))"
    }
}

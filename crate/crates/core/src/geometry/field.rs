//! Arithmetic in `F_p` for small primes, and projective point bookkeeping.

use super::GeometryError;

/// The prime field `F_p`, elements in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, GeometryError> {
        if !is_prime(p as u64) {
            return Err(GeometryError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p as u64 - 2)
    }

    /// `Σ a_i b_i`.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// The points of `PG(d-1, p)`: nonzero vectors of `F_p^d` whose first
/// nonzero coordinate is 1, indexed in lexicographic order.
pub struct ProjectiveSpace {
    pub field: PrimeField,
    pub dim: usize,
    pub points: Vec<Vec<u32>>,
    /// Base-`p` code of a normalized vector -> point index.
    index: Vec<u32>,
}

impl ProjectiveSpace {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        let p = field.order() as usize;
        let size = p.pow(dim as u32);
        let mut index = vec![u32::MAX; size];
        let mut points = Vec::new();
        for code in 0..size {
            let v = decode(code, p, dim);
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                index[code] = points.len() as u32;
                points.push(v);
            }
        }
        ProjectiveSpace {
            field,
            dim,
            points,
            index,
        }
    }

    pub fn normalize(&self, v: &[u32]) -> Option<Vec<u32>> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = self.field.inv(lead);
        Some(v.iter().map(|&x| self.field.mul(x, inv)).collect())
    }

    /// Index of the point spanned by the nonzero vector `v`.
    pub fn point_index(&self, v: &[u32]) -> Option<u32> {
        let n = self.normalize(v)?;
        let p = self.field.order() as usize;
        let code = n.iter().fold(0usize, |acc, &x| acc * p + x as usize);
        let idx = self.index[code];
        (idx != u32::MAX).then_some(idx)
    }

    /// Sorted indices of the `p + 1` points on the line through points `a`, `b`.
    pub fn line_through(&self, a: usize, b: usize) -> Vec<u32> {
        let f = self.field;
        let pa = &self.points[a];
        let pb = &self.points[b];
        let mut pts = vec![a as u32];
        for t in 0..f.order() {
            let v: Vec<u32> = pb
                .iter()
                .zip(pa)
                .map(|(&y, &x)| f.add(y, f.mul(t, x)))
                .collect();
            pts.push(self.point_index(&v).expect("b + t a is nonzero"));
        }
        pts.sort_unstable();
        pts
    }
}

fn decode(mut code: usize, p: usize, dim: usize) -> Vec<u32> {
    let mut v = vec![0u32; dim];
    for slot in v.iter_mut().rev() {
        *slot = (code % p) as u32;
        code /= p;
    }
    v
}

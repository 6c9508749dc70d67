//! Exact arithmetic and element classification in Z_n.
//!
//! Every residue is stored as its least non-negative representative and all
//! operations reduce eagerly, so equality of values is syntactic equality.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Classification of the modulus by its prime factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RingShape {
    /// n = p^l with l >= 1.
    PrimePower { p: u64, l: u32 },
    /// n = p1 * p2 squarefree with p1 < p2.
    TwoPrimes { p1: u64, p2: u64 },
    /// Any other composite shape.
    General,
}

impl RingShape {
    pub fn name(&self) -> &'static str {
        match self {
            RingShape::PrimePower { .. } => "prime power",
            RingShape::TwoPrimes { .. } => "product of two distinct primes",
            RingShape::General => "general",
        }
    }
}

/// The ring Z_n together with the factorization of n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RingSpec {
    n: u64,
    factors: Vec<(u64, u32)>,
    shape: RingShape,
}

/// Factor n by trial division and classify the ring shape.
pub fn factorize(n: u64) -> Result<RingSpec> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    let shape = match factors.as_slice() {
        [(p, l)] => RingShape::PrimePower { p: *p, l: *l },
        [(p1, 1), (p2, 1)] => RingShape::TwoPrimes { p1: *p1, p2: *p2 },
        _ => RingShape::General,
    };
    Ok(RingSpec { n, factors, shape })
}

fn gcd64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Extended gcd on i128: returns (g, s, t) with s*a + t*b = g, g >= 0.
pub(crate) fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let r = a.extended_gcd(&b);
    (r.gcd, r.x, r.y)
}

impl RingSpec {
    pub fn new(n: u64) -> Result<Self> {
        factorize(n)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn shape(&self) -> RingShape {
        self.shape
    }

    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.n as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.n
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.n - b % self.n) % self.n
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.n - a % self.n) % self.n
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    pub fn is_unit(&self, a: u64) -> bool {
        gcd64(a % self.n, self.n) == 1
    }

    pub fn is_zero_divisor(&self, a: u64) -> bool {
        let a = a % self.n;
        a != 0 && !self.is_unit(a)
    }

    /// Euler totient, from the stored factorization.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e) - p.pow(e - 1))
            .product()
    }

    /// All units of Z_n in ascending order.
    pub fn units(&self) -> Vec<u64> {
        (1..self.n).filter(|&a| self.is_unit(a)).collect()
    }

    /// All zero divisors (nonzero non-units) in ascending order.
    pub fn zero_divisors(&self) -> Vec<u64> {
        (1..self.n).filter(|&a| self.is_zero_divisor(a)).collect()
    }

    /// Inverse of a unit.
    pub fn invert(&self, u: u64) -> Result<u64> {
        let u = u % self.n;
        let (g, s, _) = egcd(u as i128, self.n as i128);
        if g != 1 {
            return Err(Error::NotInvertible {
                value: u,
                modulus: self.n,
            });
        }
        Ok(self.reduce(s))
    }

    /// Least positive generator of the annihilator ideal {x : x*a = 0},
    /// reduced mod n. Units map to 0 (the zero ideal), 0 maps to 1.
    pub fn annihilator_generator(&self, a: u64) -> u64 {
        let g = gcd64(a % self.n, self.n);
        (self.n / g) % self.n
    }

    /// A unit u with u*a = gcd(a, n) mod n. Used to normalize pivots to the
    /// canonical divisor generating the same ideal.
    pub fn associate_unit(&self, a: u64) -> u64 {
        let a = a % self.n;
        if a == 0 {
            return 1;
        }
        let d = gcd64(a, self.n);
        let ap = a / d;
        let m = self.n / d;
        // gcd(a/d, n/d) = 1, else gcd(a, n) would exceed d.
        let u0 = if m == 1 {
            0
        } else {
            let (_, s, _) = egcd(ap as i128, m as i128);
            s.rem_euclid(m as i128) as u64
        };
        let mut u = u0 % self.n;
        loop {
            if self.is_unit(u) {
                debug_assert_eq!(self.mul(u, a), d % self.n);
                return u;
            }
            u = (u + m) % self.n;
        }
    }

    /// Decompose a zero divisor of Z_{p^l} as d = p^r * u with u a unit,
    /// 1 <= r < l, taking u = d / p^r over the integers.
    pub fn zero_divisor_decomposition(&self, d: u64) -> Option<(u32, u64)> {
        let RingShape::PrimePower { p, .. } = self.shape else {
            return None;
        };
        let d = d % self.n;
        if !self.is_zero_divisor(d) {
            return None;
        }
        let mut r = 0u32;
        let mut u = d;
        while u % p == 0 {
            u /= p;
            r += 1;
        }
        Some((r, u))
    }

    /// For n = p1*p2, the lexicographically smallest (l1, l2) with
    /// l1*p1^2 - l2*p2^2 = 1 mod n.
    pub fn split_coefficients(&self) -> Result<(u64, u64)> {
        let RingShape::TwoPrimes { p1, p2 } = self.shape else {
            return Err(Error::ShapeMismatch {
                expected: "product of two distinct primes",
                n: self.n,
            });
        };
        let c1 = self.mul(p1 % self.n, p1 % self.n);
        let c2 = self.mul(p2 % self.n, p2 % self.n);
        for l1 in 0..self.n {
            // solve l2 * c2 = l1*c1 - 1 (mod n), smallest solution
            let rhs = self.sub(self.mul(l1, c1), 1);
            let g = gcd64(c2, self.n);
            if rhs % g != 0 {
                continue;
            }
            let m = self.n / g;
            let l2 = if m == 1 {
                0
            } else {
                let (_, s, _) = egcd((c2 / g) as i128, m as i128);
                let inv = s.rem_euclid(m as i128) as u64;
                ((rhs / g) % m * inv) % m
            };
            debug_assert_eq!(self.sub(self.mul(l1, c1), self.mul(l2, c2)), 1);
            return Ok((l1, l2));
        }
        unreachable!("p1^2 generates the ideal <p1>, so a solution always exists");
    }
}

//! Discrete valuations: p-adic on rationals, order of vanishing in a parameter.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, Integer, MultiPoly, Rational};

/// A valuation value: a finite integer or `+∞` (the valuation of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Which discrete valuation ring we are working over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValuationContext {
    /// `Z` localized at a prime `p`.
    Prime(u64),
    /// `Q[t]` localized at `(t)`, for the named variable.
    Param(String),
}

impl ValuationContext {
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        if is_prime_u64(p) {
            Ok(ValuationContext::Prime(p))
        } else {
            Err(ExactError::NotPrime(BigInt::from(p)))
        }
    }

    pub fn param(var: impl Into<String>) -> Self {
        ValuationContext::Param(var.into())
    }

    /// Residue characteristic: `p` for the prime kind, `0` for the parameter kind.
    pub fn residue_characteristic(&self) -> u64 {
        match self {
            ValuationContext::Prime(p) => *p,
            ValuationContext::Param(_) => 0,
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn ord_integer(n: &Integer, p: &Integer) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Valuation of a rational number. For the parameter kind a nonzero constant has
/// order 0.
pub fn ord_rational(x: &Rational, ctx: &ValuationContext) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    match ctx {
        ValuationContext::Prime(p) => {
            let p = BigInt::from(*p);
            Valuation::Finite(ord_integer(x.numer(), &p) - ord_integer(x.denom(), &p))
        }
        ValuationContext::Param(_) => Valuation::Finite(0),
    }
}

/// Valuation of a polynomial. Parameter kind: lowest power of the parameter that
/// occurs. Prime kind: the Gauss valuation (minimum over coefficients).
pub fn ord_poly(x: &MultiPoly, ctx: &ValuationContext) -> Result<Valuation, ExactError> {
    match ctx {
        ValuationContext::Param(t) => {
            let i = x.var_index(t)?;
            Ok(x.terms()
                .map(|(m, _)| Valuation::Finite(i64::from(m.exponents()[i])))
                .min()
                .unwrap_or(Valuation::Infinite))
        }
        ValuationContext::Prime(_) => Ok(x.terms().map(|(_, c)| ord_rational(c, ctx)).min().unwrap_or(Valuation::Infinite)),
    }
}

/// `p^k` as a rational.
pub(crate) fn prime_power(p: u64, k: u32) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(p), k as usize))
}

/// `x mod p` for a `p`-integral rational.
pub(crate) fn reduce_mod_p(x: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = x.numer().mod_floor(&pb).to_u64()?;
    let den = den.to_u64()?;
    let inv = super::linalg::Fp::new(den, p).inv_checked()?.value();
    Some(((num as u128 * inv as u128) % p as u128) as u64)
}

//! Degrees of dual varieties from Chern classes, computed in `Z[h]/(h^(m+1))`.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("routes disagree: {routes:?}")]
    AssertionFailure { routes: Vec<i64> },
}

/// An element of `Z[h]/(h^(m+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<BigInt>, m: usize) -> Self {
        coeffs.resize(m + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(m: usize) -> Self {
        Self::new(vec![BigInt::one()], m)
    }

    /// `1 + a h`.
    pub fn linear(a: i64, m: usize) -> Self {
        Self::new(vec![BigInt::one(), BigInt::from(a)], m)
    }

    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.m()), |acc, _| &acc * self)
    }

    /// Inverse of a series with constant term 1, by the truncated geometric
    /// expansion `1 / (1 + x) = 1 - x + x^2 - ...`.
    pub fn inverse(&self) -> Option<Self> {
        if !self.coeffs[0].is_one() {
            return None;
        }
        let m = self.m();
        let mut x = self.clone();
        x.coeffs[0] = BigInt::zero();
        let mut term = Self::one(m);
        let mut acc = Self::one(m);
        for k in 1..=m {
            term = &term * &x;
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            for (a, t) in acc.coeffs.iter_mut().zip(&term.coeffs) {
                *a += &sign * t;
            }
        }
        Some(acc)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.m().min(rhs.m());
        let mut out = vec![BigInt::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(m + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(m + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

/// `deg(phi) deg(dual)` for `P^n` embedded by `O(d)`:
/// `(-1)^n` times the `h^n` coefficient of `(1 + h)^(n+1) / (1 + d h)^2`.
pub fn dual_degree_veronese(n: usize, d: i64) -> Result<BigInt, ChernError> {
    if n < 1 || d < 2 {
        return Err(ChernError::Precondition("need n >= 1 and d >= 2".into()));
    }
    let tangent = TruncatedSeries::linear(1, n).pow(n as u32 + 1);
    let hyperplane = TruncatedSeries::linear(d, n).pow(2).inverse().expect("constant term 1");
    let c = (&tangent * &hyperplane).coeff(n).clone();
    Ok(if n % 2 == 0 { c } else { -c })
}

/// `c2 + 4 g_H - 4 + deg X` for a smooth surface.
pub fn class_formula_surface(c2: i64, g_h: i64, deg_x: i64) -> i64 {
    c2 + 4 * g_h - 4 + deg_x
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTriple {
    pub chi_surface: i64,
    pub chi_curve: i64,
    pub chi_points: i64,
    pub class_formula: i64,
    pub chern_integral: i64,
}

/// The three routes to the degree of the dual of `P^2` under `O(d)`.
pub fn euler_triple_check(n: usize, d: i64) -> Result<EulerTriple, ChernError> {
    if n != 2 {
        return Err(ChernError::Precondition("only the plane is wired in".into()));
    }
    let integral = dual_degree_veronese(2, d)?.to_i64().expect("small");
    let g_h = (d - 1) * (d - 2) / 2;
    let (chi_surface, chi_curve, chi_points) = (3, 2 - 2 * g_h, d * d);
    let euler = chi_surface - 2 * chi_curve + chi_points;
    let class = class_formula_surface(chi_surface, g_h, d * d);
    if euler != class || class != integral {
        return Err(ChernError::AssertionFailure { routes: vec![euler, class, integral] });
    }
    Ok(EulerTriple { chi_surface, chi_curve, chi_points, class_formula: class, chern_integral: integral })
}

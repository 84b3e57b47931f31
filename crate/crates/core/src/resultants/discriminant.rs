use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{determinant_rational, Deadline, MultiPoly, Rational};

use super::{macaulay_resultant_with, sylvester_resultant, HomogeneousForm, ResultantError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResultantMethod {
    Sylvester,
    Macaulay,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantResult {
    /// A polynomial in the coefficient variables (constant for numeric forms).
    pub value: MultiPoly,
    pub method: ResultantMethod,
    pub normalization_exponent: i64,
}

impl DiscriminantResult {
    pub fn value_rational(&self) -> Option<Rational> {
        self.value.constant_value()
    }
}

/// `((-1)^(n+1) - (d-1)^(n+1)) / d`, an exact integer.
pub fn normalization_exponent(n: usize, d: u32) -> i64 {
    let sign: i64 = if (n + 1) % 2 == 0 { 1 } else { -1 };
    let num = sign - (i64::from(d) - 1).pow(n as u32 + 1);
    debug_assert_eq!(num % i64::from(d), 0);
    num / i64::from(d)
}

/// `(n+1)(d-1)^n`.
pub fn discriminant_degree(n: usize, d: u32) -> u64 {
    (n as u64 + 1) * (u64::from(d) - 1).pow(n as u32)
}

/// Global sign fixed per `(n, d)`: binary quadratics give `b^2 - 4ac`, plane
/// cubics in Weierstrass shape give a negative multiple of `4a^3 + 27b^2`.
fn sign_convention(n: usize, d: u32) -> i64 {
    match (n, d) {
        (1, 2) => -1,
        (2, 3) => -1,
        _ => 1,
    }
}

pub fn discriminant(form: &HomogeneousForm) -> Result<DiscriminantResult, ResultantError> {
    discriminant_with(form, Deadline::none())
}

pub fn discriminant_with(form: &HomogeneousForm, deadline: Deadline) -> Result<DiscriminantResult, ResultantError> {
    let d = form.degree();
    if d < 2 {
        return Err(ResultantError::Precondition("discriminant needs degree at least 2".into()));
    }
    let n = form.n();
    let vars = form.form_vars();
    let coef_vars = form.coefficient_vars();
    let partials: Vec<MultiPoly> = vars.iter().map(|v| form.poly().derivative(v)).collect::<Result<_, _>>()?;
    let (res, method) = if n == 1 {
        let one = Rational::one();
        let dehom: Vec<MultiPoly> =
            partials.iter().map(|p| p.substitute_values(&[(vars[1].as_str(), one.clone())])).collect::<Result<_, _>>()?;
        let r = sylvester_resultant(&dehom[0], &dehom[1], &vars[0], Some((d - 1, d - 1)))?;
        (r.with_vars(&coef_vars)?, ResultantMethod::Sylvester)
    } else {
        let degrees = vec![d - 1; n + 1];
        (macaulay_resultant_with(&partials, vars, &degrees, deadline)?, ResultantMethod::Macaulay)
    };
    let e = normalization_exponent(n, d);
    let dpow = num_traits::pow(Rational::from_integer(d.into()), e.unsigned_abs() as usize);
    let factor = if e >= 0 { dpow } else { dpow.recip() };
    let factor = factor * Rational::from_integer(sign_convention(n, d).into());
    Ok(DiscriminantResult { value: res.scale(&factor), method, normalization_exponent: e })
}

/// Recovers `D` with `disc(lambda F) = lambda^D disc(F)`.
pub fn scaling_probe(form: &HomogeneousForm, lambda: &Rational) -> Result<u64, ResultantError> {
    if lambda.is_zero() || lambda.abs().is_one() {
        return Err(ResultantError::Precondition("lambda must avoid 0 and +-1".into()));
    }
    let base = discriminant(form)?.value;
    if base.is_zero() {
        return Err(ResultantError::ZeroDiscriminant);
    }
    let scaled = discriminant(&form.scaled(lambda))?.value;
    let ratio = scaled
        .exact_div(&base)
        .ok()
        .and_then(|q| q.constant_value())
        .ok_or_else(|| ResultantError::AssertionFailure { lhs: scaled.to_string(), rhs: format!("c * ({base})") })?;
    let growing = lambda.abs() > Rational::one();
    let mut pow = Rational::one();
    let mut k = 0u64;
    loop {
        if pow == ratio {
            return Ok(k);
        }
        let overshoot = if growing { pow.abs() > ratio.abs() } else { pow.abs() < ratio.abs() };
        if overshoot {
            return Err(ResultantError::AssertionFailure { lhs: ratio.to_string(), rhs: format!("a power of {lambda}") });
        }
        pow *= lambda;
        k += 1;
    }
}

/// Checks `disc(F o A) = det(A)^(d (d-1)^n) disc(F)` and returns the exponent.
pub fn gl_transform_check(form: &HomogeneousForm, a: &[Vec<Rational>]) -> Result<u64, ResultantError> {
    let vars = form.form_vars();
    let size = vars.len();
    if a.len() != size || a.iter().any(|r| r.len() != size) {
        return Err(ResultantError::Precondition(format!("matrix must be {size}x{size}")));
    }
    let det = determinant_rational(a, Deadline::none())?;
    if det.is_zero() {
        return Err(ResultantError::Precondition("matrix is singular".into()));
    }
    let base = discriminant(form)?.value;
    if base.is_zero() {
        return Err(ResultantError::ZeroDiscriminant);
    }
    let p = form.poly();
    let mut assignment = BTreeMap::new();
    for (i, v) in vars.iter().enumerate() {
        let mut image = MultiPoly::zero(p.vars());
        for (j, w) in vars.iter().enumerate() {
            image = &image + &MultiPoly::var(p.vars(), w)?.scale(&a[i][j]);
        }
        assignment.insert(v.clone(), image);
    }
    let moved = HomogeneousForm::new(p.substitute(&assignment)?, vars, form.degree())?;
    let lhs = discriminant(&moved)?.value;
    let k = u64::from(form.degree()) * (u64::from(form.degree()) - 1).pow(form.n() as u32);
    let rhs = base.scale(&num_traits::pow(det, k as usize));
    if lhs == rhs {
        Ok(k)
    } else {
        Err(ResultantError::AssertionFailure { lhs: lhs.to_string(), rhs: rhs.to_string() })
    }
}

//! Resultants and discriminants of homogeneous forms.

mod discriminant;
mod macaulay;
mod sylvester;

pub use discriminant::{
    discriminant, discriminant_degree, discriminant_with, gl_transform_check, normalization_exponent, scaling_probe,
    DiscriminantResult, ResultantMethod,
};
pub use macaulay::{macaulay_resultant, macaulay_resultant_with};
pub use sylvester::sylvester_resultant;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::{ExactError, Monomial, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultantError {
    #[error("polynomial is not homogeneous of degree {expected} in {vars:?}")]
    NotHomogeneous { expected: u32, vars: Vec<String> },
    #[error("declared degree {declared} is below the actual degree {actual}")]
    DegreeMismatch { declared: u32, actual: u32 },
    #[error("perturbed Macaulay quotient failed after {attempts} attempts")]
    PerturbationFailure { attempts: usize },
    #[error("discriminant vanishes")]
    ZeroDiscriminant,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("identity failed: {lhs} != {rhs}")]
    AssertionFailure { lhs: String, rhs: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A form of degree `d` in the variables `form_vars` (n + 1 of them). Any other
/// variable of `poly` is treated as a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    poly: MultiPoly,
    form_vars: Vec<String>,
    d: u32,
}

impl HomogeneousForm {
    pub fn new<S: AsRef<str>>(poly: MultiPoly, form_vars: &[S], d: u32) -> Result<Self, ResultantError> {
        let form_vars: Vec<String> = form_vars.iter().map(|s| s.as_ref().to_string()).collect();
        if form_vars.len() < 2 {
            return Err(ResultantError::Precondition("a form needs at least two variables".into()));
        }
        if d == 0 {
            return Err(ResultantError::Precondition("degree must be at least 1".into()));
        }
        let idx: Vec<usize> = form_vars.iter().map(|v| poly.var_index(v)).collect::<Result<_, _>>()?;
        for (m, _) in poly.terms() {
            let deg: u32 = idx.iter().map(|&i| m.exponents()[i]).sum();
            if deg != d {
                return Err(ResultantError::NotHomogeneous { expected: d, vars: form_vars });
            }
        }
        Ok(HomogeneousForm { poly, form_vars, d })
    }

    /// Infers the degree from the polynomial, which must be nonzero.
    pub fn infer<S: AsRef<str>>(poly: MultiPoly, form_vars: &[S]) -> Result<Self, ResultantError> {
        let idx: Vec<usize> = form_vars.iter().map(|v| poly.var_index(v.as_ref())).collect::<Result<_, _>>()?;
        let d = poly
            .terms()
            .next()
            .map(|(m, _)| idx.iter().map(|&i| m.exponents()[i]).sum())
            .ok_or_else(|| ResultantError::Precondition("zero polynomial has no degree".into()))?;
        Self::new(poly, form_vars, d)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn form_vars(&self) -> &[String] {
        &self.form_vars
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Projective dimension `n`.
    pub fn n(&self) -> usize {
        self.form_vars.len() - 1
    }

    /// Variables of the polynomial that are not form variables.
    pub fn coefficient_vars(&self) -> Vec<String> {
        self.poly.vars().iter().filter(|v| !self.form_vars.contains(v)).cloned().collect()
    }

    pub fn scaled(&self, lambda: &crate::exact::Rational) -> Self {
        HomogeneousForm { poly: self.poly.scale(lambda), form_vars: self.form_vars.clone(), d: self.d }
    }
}

/// Coefficients of a form with respect to its form variables, each a polynomial
/// over `coef_vars`.
pub(crate) fn split_coefficients(
    poly: &MultiPoly,
    form_vars: &[String],
    coef_vars: &[String],
) -> Result<BTreeMap<Monomial, MultiPoly>, ExactError> {
    let fidx: Vec<usize> = form_vars.iter().map(|v| poly.var_index(v)).collect::<Result<_, _>>()?;
    let cidx: Vec<usize> = coef_vars.iter().map(|v| poly.var_index(v)).collect::<Result<_, _>>()?;
    let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
    for (m, c) in poly.terms() {
        let e = m.exponents();
        for (i, &x) in e.iter().enumerate() {
            if x > 0 && !fidx.contains(&i) && !cidx.contains(&i) {
                return Err(ExactError::UnknownVariable(poly.vars()[i].clone()));
            }
        }
        let fm = Monomial::new(fidx.iter().map(|&i| e[i]).collect());
        let cm = Monomial::new(cidx.iter().map(|&i| e[i]).collect());
        let term = MultiPoly::from_terms(coef_vars, [(cm, c.clone())]);
        let slot = out.entry(fm).or_insert_with(|| MultiPoly::zero(coef_vars));
        *slot = &*slot + &term;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

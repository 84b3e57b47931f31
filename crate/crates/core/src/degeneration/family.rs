use num_traits::Zero;
use rayon::prelude::*;

use crate::exact::{
    interpolation_abscissae, lagrange_interpolate, ord_poly, ord_rational, Deadline, MultiPoly, Rational, Valuation,
    ValuationContext,
};
use crate::resultants::{discriminant_degree, discriminant_with, HomogeneousForm};

use super::DegenerationError;

/// A family of forms over a discrete valuation ring: either coefficients in
/// `Q[t]` (localized at `t`) or `p`-integral rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DVRFamily {
    form: HomogeneousForm,
    ctx: ValuationContext,
}

impl DVRFamily {
    pub fn new(form: HomogeneousForm, ctx: ValuationContext) -> Result<Self, DegenerationError> {
        if form.degree() < 2 {
            return Err(DegenerationError::Precondition("family degree must be at least 2".into()));
        }
        let coef = form.coefficient_vars();
        let form = match &ctx {
            ValuationContext::Param(t) => {
                if form.form_vars().contains(t) {
                    return Err(DegenerationError::Precondition(format!("parameter `{t}` is also a form variable")));
                }
                if let Some(v) = coef.iter().find(|v| *v != t) {
                    return Err(DegenerationError::Precondition(format!("unexpected coefficient variable `{v}`")));
                }
                let mut vars = form.form_vars().to_vec();
                vars.push(t.clone());
                HomogeneousForm::new(form.poly().with_vars(&vars)?, form.form_vars(), form.degree())?
            }
            ValuationContext::Prime(p) => {
                if let Some(v) = coef.first() {
                    return Err(DegenerationError::Precondition(format!("prime-kind families take numeric coefficients, found `{v}`")));
                }
                if ord_poly(form.poly(), &ctx)? < Valuation::Finite(0) {
                    return Err(DegenerationError::Precondition(format!("coefficients are not {p}-integral")));
                }
                form
            }
        };
        Ok(DVRFamily { form, ctx })
    }

    /// Parameter-kind family; `poly` is over the form variables and `t`.
    pub fn parameter<S: AsRef<str>>(poly: MultiPoly, form_vars: &[S], t: &str) -> Result<Self, DegenerationError> {
        let form = HomogeneousForm::infer(poly, form_vars)?;
        Self::new(form, ValuationContext::param(t))
    }

    pub fn form(&self) -> &HomogeneousForm {
        &self.form
    }

    pub fn ctx(&self) -> &ValuationContext {
        &self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }

    fn param(&self) -> Option<&str> {
        match &self.ctx {
            ValuationContext::Param(t) => Some(t),
            ValuationContext::Prime(_) => None,
        }
    }

    /// Largest power of the parameter among the coefficients (0 for prime kind).
    pub fn max_param_degree(&self) -> u32 {
        self.param().and_then(|t| self.form.poly().degree_in(t).ok().flatten()).unwrap_or(0)
    }

    /// The member at `t = value`, as a form over the form variables only.
    pub fn fiber_at(&self, value: &Rational) -> Result<HomogeneousForm, DegenerationError> {
        let t = self.param().ok_or_else(|| DegenerationError::Precondition("prime-kind family has no parameter".into()))?;
        let p = self.form.poly().substitute_values(&[(t, value.clone())])?.with_vars(self.form.form_vars())?;
        Ok(HomogeneousForm::new(p, self.form.form_vars(), self.form.degree())?)
    }

    pub fn special_fiber(&self) -> Result<HomogeneousForm, DegenerationError> {
        self.fiber_at(&Rational::zero())
    }

    /// The family with `t` replaced by `t^k`.
    pub fn substitute_power(&self, k: u32) -> Result<DVRFamily, DegenerationError> {
        let t = self.param().ok_or_else(|| DegenerationError::Precondition("prime-kind family has no parameter".into()))?;
        if k == 0 {
            return Err(DegenerationError::Precondition("exponent must be positive".into()));
        }
        let p = self.form.poly();
        let mut assignment = std::collections::BTreeMap::new();
        assignment.insert(t.to_string(), MultiPoly::var(p.vars(), t)?.pow(k));
        let form = HomogeneousForm::new(p.substitute(&assignment)?, self.form.form_vars(), self.form.degree())?;
        Ok(DVRFamily { form, ctx: self.ctx.clone() })
    }
}

/// The discriminant of a family together with its valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDiscriminant {
    /// A polynomial in `t` (parameter kind) or a constant (prime kind).
    pub delta: MultiPoly,
    pub ord: i64,
}

/// Degree bound in `t` for the discriminant of the family.
pub fn interpolation_bound(family: &DVRFamily) -> usize {
    let f = family.form();
    (discriminant_degree(f.n(), f.degree()) * u64::from(family.max_param_degree())) as usize
}

pub fn family_discriminant(family: &DVRFamily, deadline: Deadline) -> Result<FamilyDiscriminant, DegenerationError> {
    let delta = match family.ctx() {
        ValuationContext::Param(t) => {
            let bound = interpolation_bound(family);
            // one sample beyond the bound is held out to cross-check the interpolant
            let xs = interpolation_abscissae(bound + 2);
            let samples: Vec<(Rational, Rational)> = xs
                .into_par_iter()
                .map(|x| {
                    let fiber = family.fiber_at(&x)?;
                    let y = discriminant_with(&fiber, deadline)?.value.constant_value().unwrap_or_default();
                    Ok((x, y))
                })
                .collect::<Result<_, DegenerationError>>()?;
            lagrange_interpolate(&samples, bound, t)?
        }
        ValuationContext::Prime(_) => discriminant_with(family.form(), deadline)?.value,
    };
    if delta.is_zero() {
        return Err(DegenerationError::IdenticallySingular);
    }
    let ord = match family.ctx() {
        ValuationContext::Param(_) => ord_poly(&delta, family.ctx())?,
        ValuationContext::Prime(_) => ord_rational(&delta.constant_value().unwrap_or_default(), family.ctx()),
    };
    Ok(FamilyDiscriminant { delta, ord: ord.finite().expect("nonzero discriminant") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::parse::parse_poly;

    const V: [&str; 4] = ["x", "y", "z", "t"];

    fn fam(s: &str) -> DVRFamily {
        DVRFamily::parameter(parse_poly(s, &V).unwrap(), &["x", "y", "z"], "t").unwrap()
    }

    #[test]
    fn nodal_family_discriminant() {
        let d = family_discriminant(&fam("y^2*z - x^3 - x^2*z - t*z^3"), Deadline::none()).unwrap();
        assert_eq!(d.delta, parse_poly("-64*t - 432*t^2", &["t"]).unwrap());
        assert_eq!(d.ord, 1);
    }

    #[test]
    fn cuspidal_family_discriminant() {
        let d = family_discriminant(&fam("y^2*z - x^3 - t^2*z^3"), Deadline::none()).unwrap();
        assert_eq!(d.delta, parse_poly("-432*t^4", &["t"]).unwrap());
        assert_eq!(d.ord, 4);
    }

    #[test]
    fn constant_family_has_order_zero() {
        let f = fam("x^3 + y^3 + z^3");
        assert_eq!(interpolation_bound(&f), 0);
        let d = family_discriminant(&f, Deadline::none()).unwrap();
        assert_eq!(d.ord, 0);
        assert!(d.delta.is_constant());
    }

    #[test]
    fn identically_singular() {
        let e = family_discriminant(&fam("x^2*z + t*y^2*z"), Deadline::none()).unwrap_err();
        assert_eq!(e, DegenerationError::IdenticallySingular);
    }

    #[test]
    fn interpolant_matches_fresh_fiber() {
        let f = fam("y^2*z - x^3 - 2*t*x*z^2 + (t^2 - 1)*z^3");
        let d = family_discriminant(&f, Deadline::none()).unwrap();
        let star = ratio(7, 3);
        let direct = discriminant_with(&f.fiber_at(&star).unwrap(), Deadline::none()).unwrap().value;
        assert_eq!(d.delta.evaluate(&[star]), direct.constant_value().unwrap());
    }

    #[test]
    fn prime_kind() {
        let p = parse_poly("y^2*z - x^3 - 5*z^3", &["x", "y", "z"]).unwrap();
        let form = HomogeneousForm::infer(p, &["x", "y", "z"]).unwrap();
        let f = DVRFamily::new(form.clone(), ValuationContext::prime(5).unwrap()).unwrap();
        let d = family_discriminant(&f, Deadline::none()).unwrap();
        assert_eq!(d.delta.constant_value().unwrap(), rat(-16 * 27 * 25));
        assert_eq!(d.ord, 2);
        let q = parse_poly("y^2*z - x^3 - 1/5*z^3", &["x", "y", "z"]).unwrap();
        let form = HomogeneousForm::infer(q, &["x", "y", "z"]).unwrap();
        assert!(DVRFamily::new(form, ValuationContext::prime(5).unwrap()).is_err());
    }

    #[test]
    fn power_substitution() {
        let f = fam("y^2*z - x^3 - x^2*z - t*z^3").substitute_power(3).unwrap();
        assert_eq!(f.max_param_degree(), 3);
        assert_eq!(family_discriminant(&f, Deadline::none()).unwrap().ord, 3);
    }
}

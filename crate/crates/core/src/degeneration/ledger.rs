use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{Deadline, MultiPoly, Rational, ValuationContext};
use crate::singularity::{
    chart_polynomial, euler_char_plane_curve, fiber_singular_points, local_milnor, rational_zeros, Chart, SingularPoint,
    SingularityError,
};

use super::{family_discriminant, DVRFamily, DegenerationError};

/// Both sides of `ord Δ = Σμ(total space) + χ(special) − χ(generic) + Sw`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaLedger {
    pub ord_delta: i64,
    pub total_space_milnor: Vec<SingularPoint>,
    pub fiber_milnor: Vec<SingularPoint>,
    pub chi_special: i64,
    pub chi_generic: i64,
    pub swan_assumed: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl FormulaLedger {
    pub fn total_milnor(&self) -> u64 {
        self.total_space_milnor.iter().map(|p| p.milnor).sum()
    }

    pub fn fiber_milnor_sum(&self) -> u64 {
        self.fiber_milnor.iter().map(|p| p.milnor).sum()
    }
}

fn require_plane_param(family: &DVRFamily) -> Result<&str, DegenerationError> {
    let ValuationContext::Param(t) = family.ctx() else {
        return Err(DegenerationError::Precondition("needs a parameter-kind family".into()));
    };
    if family.form().n() != 2 {
        return Err(DegenerationError::Precondition("needs a family of plane curves".into()));
    }
    Ok(t)
}

/// Singular points of the total space lying on the special fiber, with the
/// Milnor number of the three-variable chart polynomial at each.
pub fn total_space_singularities(family: &DVRFamily, deadline: Deadline) -> Result<Vec<SingularPoint>, DegenerationError> {
    let t = require_plane_param(family)?;
    let form = family.form();
    let fv = form.form_vars().to_vec();
    let mut out = Vec::new();
    for chart in Chart::ALL {
        let g = chart_polynomial(form, chart)?;
        let vars = g.vars().to_vec();
        let mut gens = vec![g.clone()];
        for v in &vars {
            gens.push(g.derivative(v)?);
        }
        gens.push(MultiPoly::var(&vars, t)?);
        for &i in chart.excluded() {
            gens.push(MultiPoly::var(&vars, &fv[i])?);
        }
        let zeros = match rational_zeros(&gens, deadline) {
            Err(SingularityError::NotZeroDimensional) => return Err(DegenerationError::NotIsolatedTotalSpace),
            other => other?,
        };
        let mut explained = 0u64;
        let mut found = Vec::new();
        for pt in zeros.points {
            explained += crate::singularity::local_colength(&gens, &pt, crate::singularity::milnor_cap(&g), deadline)?;
            let milnor = match local_milnor(&g, &pt) {
                Err(SingularityError::NotIsolated { .. }) => return Err(DegenerationError::NotIsolatedTotalSpace),
                other => other?,
            };
            let mut projective = vec![Rational::zero(); 3];
            projective[chart.unit_index()] = Rational::one();
            for (k, &i) in chart.affine_indices().iter().enumerate() {
                projective[i] = pt[k].clone();
            }
            found.push(SingularPoint { chart: chart.label(&fv), coordinates: pt, projective, milnor });
        }
        if zeros.colength > explained {
            return Err(DegenerationError::NonRationalSingularity);
        }
        found.sort_by(|a, b| a.coordinates.cmp(&b.coordinates));
        out.extend(found);
    }
    Ok(out)
}

/// Evaluates both sides of the conductor-discriminant identity for a family of
/// plane curves over `Q[t]` localized at `t`.
pub fn verify_formula(family: &DVRFamily, deadline: Deadline) -> Result<FormulaLedger, DegenerationError> {
    require_plane_param(family)?;
    let special = family.special_fiber()?;
    if special.poly().is_zero() {
        return Err(DegenerationError::Precondition("special fiber vanishes identically".into()));
    }
    let fiber = match fiber_singular_points(&special, deadline) {
        Err(SingularityError::NonReduced) => return Err(DegenerationError::NonReducedSpecialFiber),
        other => other?,
    };
    if !fiber.all_rational() {
        return Err(DegenerationError::NonRationalSingularity);
    }
    let disc = family_discriminant(family, deadline)?;
    let total = total_space_singularities(family, deadline)?;
    let d = family.degree();
    let chi_special = euler_char_plane_curve(d, &fiber.points).value;
    let chi_generic = euler_char_plane_curve(d, &[]).value;
    let swan_assumed = 0;
    let total_mu: i64 = total.iter().map(|p| p.milnor as i64).sum();
    let lhs = disc.ord;
    let rhs = total_mu + chi_special - chi_generic + swan_assumed;
    Ok(FormulaLedger {
        ord_delta: disc.ord,
        total_space_milnor: total,
        fiber_milnor: fiber.points,
        chi_special,
        chi_generic,
        swan_assumed,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

/// For a family with smooth total space, checks `ord Δ = Σμ(special fiber)`.
pub fn deligne_pencil_check(family: &DVRFamily, deadline: Deadline) -> Result<bool, DegenerationError> {
    let ledger = verify_formula(family, deadline)?;
    if !ledger.total_space_milnor.is_empty() {
        return Err(DegenerationError::Precondition("total space is singular".into()));
    }
    let mu = ledger.fiber_milnor_sum() as i64;
    if ledger.ord_delta != mu || ledger.chi_special - ledger.chi_generic != mu {
        return Err(DegenerationError::AssertionFailure(Box::new(ledger)));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::parse::parse_poly;

    fn fam(s: &str) -> DVRFamily {
        DVRFamily::parameter(parse_poly(s, &["x", "y", "z", "t"]).unwrap(), &["x", "y", "z"], "t").unwrap()
    }

    fn mus(points: &[SingularPoint]) -> Vec<u64> {
        points.iter().map(|p| p.milnor).collect()
    }

    #[test]
    fn total_space_examples() {
        let none = Deadline::none();
        assert!(total_space_singularities(&fam("y^2*z - x^3 - x^2*z - t*z^3"), none).unwrap().is_empty());
        let s = total_space_singularities(&fam("y^2*z - x^3 - t^2*z^3"), none).unwrap();
        assert_eq!(mus(&s), vec![2]);
        assert_eq!(s[0].coordinates, vec![rat(0), rat(0), rat(0)]);
        assert_eq!(mus(&total_space_singularities(&fam("y^2*z - x^3 - t^3*z^3"), none).unwrap()), vec![4]);
    }

    #[test]
    fn nodal_ledger() {
        let l = verify_formula(&fam("y^2*z - x^3 - x^2*z - t*z^3"), Deadline::none()).unwrap();
        assert_eq!((l.ord_delta, l.total_milnor(), l.chi_special, l.chi_generic, l.rhs), (1, 0, 1, 0, 1));
        assert!(l.pass);
    }

    #[test]
    fn cuspidal_ledger() {
        let l = verify_formula(&fam("y^2*z - x^3 - t^2*z^3"), Deadline::none()).unwrap();
        assert_eq!((l.ord_delta, l.total_milnor(), l.chi_special, l.chi_generic, l.rhs), (4, 2, 2, 0, 4));
        assert!(l.pass);
    }

    #[test]
    fn constant_ledger() {
        let l = verify_formula(&fam("x^3 + y^3 + z^3"), Deadline::none()).unwrap();
        assert_eq!((l.ord_delta, l.rhs), (0, 0));
        assert!(l.pass);
    }

    #[test]
    fn pencil_checks() {
        let none = Deadline::none();
        assert!(deligne_pencil_check(&fam("y^2*z - x^3 - x^2*z - t*z^3"), none).unwrap());
        assert!(deligne_pencil_check(&fam("y^2*z - x^3 - t*z^3"), none).unwrap());
        assert!(deligne_pencil_check(&fam("x^3 + y^3 + z^3 + t*x*y*z"), none).unwrap());
        assert!(matches!(deligne_pencil_check(&fam("y^2*z - x^3 - t^2*z^3"), none), Err(DegenerationError::Precondition(_))));
    }

    #[test]
    fn rejected_special_fibers() {
        let none = Deadline::none();
        assert_eq!(verify_formula(&fam("x^2*z + t*y^3"), none), Err(DegenerationError::NonReducedSpecialFiber));
        assert_eq!(
            verify_formula(&fam("(x^2 + y^2 - 2*z^2)*y + t*x^3"), none),
            Err(DegenerationError::NonRationalSingularity)
        );
    }
}

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{Deadline, MultiPoly, Rational};
use crate::resultants::HomogeneousForm;

use super::{local_colength, local_milnor, milnor_cap, rational_zeros, SingularPoint, SingularityError};

/// The three standard affine charts of the plane, scanned in this order. Each
/// chart only reports points not already covered by an earlier one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chart {
    /// third coordinate 1
    Third,
    /// second coordinate 1, third 0
    Second,
    /// first coordinate 1, the others 0
    First,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::Third, Chart::Second, Chart::First];

    /// Index of the coordinate set to 1.
    pub fn unit_index(self) -> usize {
        match self {
            Chart::Third => 2,
            Chart::Second => 1,
            Chart::First => 0,
        }
    }

    /// Indices of the affine coordinates, in order.
    pub fn affine_indices(self) -> [usize; 2] {
        match self {
            Chart::Third => [0, 1],
            Chart::Second => [0, 2],
            Chart::First => [1, 2],
        }
    }

    /// Affine coordinates forced to vanish so that charts do not overlap.
    pub fn excluded(self) -> &'static [usize] {
        match self {
            Chart::Third => &[],
            Chart::Second => &[2],
            Chart::First => &[1, 2],
        }
    }

    pub fn label(self, vars: &[String]) -> String {
        format!("{}=1", vars[self.unit_index()])
    }
}

/// Dehomogenization of a plane form in the given chart, over the two affine
/// variables (plus any further variables of the form, kept in order).
pub fn chart_polynomial(form: &HomogeneousForm, chart: Chart) -> Result<MultiPoly, SingularityError> {
    let fv = form.form_vars();
    if fv.len() != 3 {
        return Err(SingularityError::Precondition("expected a form in three variables".into()));
    }
    let unit = &fv[chart.unit_index()];
    let g = form.poly().substitute_values(&[(unit.as_str(), Rational::one())])?;
    let keep: Vec<String> = form.poly().vars().iter().filter(|v| *v != unit).cloned().collect();
    let mut ordered: Vec<String> = chart.affine_indices().iter().map(|&i| fv[i].clone()).collect();
    ordered.extend(keep.into_iter().filter(|v| !fv.contains(v)));
    Ok(g.with_vars(&ordered)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSingularities {
    pub points: Vec<SingularPoint>,
    /// Colength of the singular scheme left unexplained by the rational points;
    /// positive exactly when there are singular points outside `Q`.
    pub non_rational_residue: u64,
}

impl FiberSingularities {
    pub fn all_rational(&self) -> bool {
        self.non_rational_residue == 0
    }

    pub fn total_milnor(&self) -> u64 {
        self.points.iter().map(|p| p.milnor).sum()
    }
}

/// Singular points of a plane curve with rational coefficients.
pub fn fiber_singular_points(form: &HomogeneousForm, deadline: Deadline) -> Result<FiberSingularities, SingularityError> {
    if form.n() != 2 {
        return Err(SingularityError::Precondition("expected a plane curve".into()));
    }
    if !form.coefficient_vars().is_empty() {
        return Err(SingularityError::Precondition("coefficients must be rational numbers".into()));
    }
    if form.poly().is_zero() {
        return Err(SingularityError::Precondition("zero form".into()));
    }
    let fv = form.form_vars().to_vec();
    let mut points = Vec::new();
    let mut residue = 0u64;
    for chart in Chart::ALL {
        let g = chart_polynomial(form, chart)?;
        let avars = g.vars().to_vec();
        let mut gens = vec![g.clone()];
        for v in &avars {
            gens.push(g.derivative(v)?);
        }
        for &i in chart.excluded() {
            gens.push(MultiPoly::var(&avars, &fv[i])?);
        }
        let zeros = match rational_zeros(&gens, deadline) {
            Err(SingularityError::NotZeroDimensional) => return Err(SingularityError::NonReduced),
            other => other?,
        };
        let cap = milnor_cap(&g);
        let mut explained = 0u64;
        let mut found = Vec::new();
        for pt in zeros.points {
            explained += local_colength(&gens, &pt, cap, deadline)?;
            let milnor = local_milnor(&g, &pt)?;
            let mut projective = vec![Rational::zero(); 3];
            projective[chart.unit_index()] = Rational::one();
            for (k, &i) in chart.affine_indices().iter().enumerate() {
                projective[i] = pt[k].clone();
            }
            found.push(SingularPoint { chart: chart.label(&fv), coordinates: pt, projective, milnor });
        }
        found.sort_by(|a, b| a.coordinates.cmp(&b.coordinates));
        points.extend(found);
        residue += zeros.colength - explained;
    }
    Ok(FiberSingularities { points, non_rational_residue: residue })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::parse::parse_poly;

    fn curve(s: &str) -> HomogeneousForm {
        HomogeneousForm::infer(parse_poly(s, &["x", "y", "z"]).unwrap(), &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn nodal_cubic() {
        let s = fiber_singular_points(&curve("y^2*z - x^3 - x^2*z"), Deadline::none()).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(s.points[0].projective, vec![rat(0), rat(0), rat(1)]);
        assert_eq!(s.points[0].milnor, 1);
        assert!(s.all_rational());
    }

    #[test]
    fn fermat_is_smooth() {
        let s = fiber_singular_points(&curve("x^3 + y^3 + z^3"), Deadline::none()).unwrap();
        assert!(s.points.is_empty());
        assert!(s.all_rational());
    }

    #[test]
    fn cuspidal_cubic_flex_at_infinity_is_smooth() {
        let s = fiber_singular_points(&curve("z*y^2 - x^3"), Deadline::none()).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(s.points[0].chart, "z=1");
        assert_eq!(s.points[0].milnor, 2);
        // (0:1:0) lies on the curve but is not singular
        let g = chart_polynomial(&curve("z*y^2 - x^3"), Chart::Second).unwrap();
        assert!(local_milnor(&g, &[rat(0), rat(0)]).is_err());
    }

    #[test]
    fn points_at_infinity() {
        // triangle xyz: three nodes, two of them at infinity
        let s = fiber_singular_points(&curve("x*y*z"), Deadline::none()).unwrap();
        let proj: Vec<_> = s.points.iter().map(|p| p.projective.clone()).collect();
        assert_eq!(proj, vec![vec![rat(0), rat(0), rat(1)], vec![rat(0), rat(1), rat(0)], vec![rat(1), rat(0), rat(0)]]);
        assert_eq!(s.total_milnor(), 3);
    }

    #[test]
    fn irrational_nodes_are_flagged() {
        let s = fiber_singular_points(&curve("(x^2 + y^2 - 2*z^2)*(x - y)"), Deadline::none()).unwrap();
        // the line meets the circle at (1:1:1) and (-1:-1:1)
        assert_eq!(s.points.len(), 2);
        assert!(s.all_rational());
        let s = fiber_singular_points(&curve("(x^2 + y^2 - 2*z^2)*y"), Deadline::none()).unwrap();
        // here it meets it at (+-sqrt 2 : 0 : 1)
        assert!(s.points.is_empty());
        assert_eq!(s.non_rational_residue, 2);
    }

    #[test]
    fn non_reduced_rejected() {
        assert_eq!(fiber_singular_points(&curve("x^2*z"), Deadline::none()), Err(SingularityError::NonReduced));
        assert_eq!(fiber_singular_points(&curve("y^2*x"), Deadline::none()), Err(SingularityError::NonReduced));
    }
}

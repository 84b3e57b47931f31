//! Milnor numbers, Jacobian colengths and singular points of plane curves.

mod colength;
mod fiber;
mod solve;

pub use colength::{local_colength, local_milnor, local_tjurina, milnor_cap};
pub use fiber::{chart_polynomial, fiber_singular_points, Chart, FiberSingularities};
pub use solve::{rational_zeros, RationalZeros};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{groebner_basis, rational_serde, Deadline, ExactError, MonomialOrder, MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("not a singular point: {0}")]
    NotSingular(String),
    #[error("colength did not stabilize below truncation degree {cap}")]
    NotIsolated { cap: u32 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("curve is not reduced (positive-dimensional singular locus)")]
    NonReduced,
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A singular point, in affine chart coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// Chart label such as `"z=1"`.
    pub chart: String,
    #[serde(with = "rational_serde::vec")]
    pub coordinates: Vec<Rational>,
    /// Homogeneous coordinates scaled so the chart variable is 1.
    #[serde(with = "rational_serde::vec")]
    pub projective: Vec<Rational>,
    pub milnor: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCharacteristic {
    pub value: i64,
}

/// `3d - d^2 + sum of Milnor numbers`, for a reduced plane curve of degree `d`
/// whose singular points are all listed.
pub fn euler_char_plane_curve(d: u32, points: &[SingularPoint]) -> EulerCharacteristic {
    let d = i64::from(d);
    let mu: i64 = points.iter().map(|p| p.milnor as i64).sum();
    EulerCharacteristic { value: 3 * d - d * d + mu }
}

/// `dim Q[x]/(df/dx_1, ..., df/dx_m)`, which counts every critical point of `f`,
/// including those off the hypersurface `f = 0`.
pub fn global_jacobian_colength(f: &MultiPoly, deadline: Deadline) -> Result<u64, SingularityError> {
    let partials: Vec<MultiPoly> = f.vars().iter().map(|v| f.derivative(v)).collect::<Result<_, _>>()?;
    let gb = groebner_basis(&partials, MonomialOrder::DegRevLex, deadline)?;
    gb.standard_monomial_count().map(|c| c as u64).ok_or(SingularityError::NotZeroDimensional)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn global_colengths() {
        let v = ["x", "y"];
        let f = |s: &str| parse_poly(s, &v).unwrap();
        assert_eq!(global_jacobian_colength(&f("y^2 - x^3"), Deadline::none()).unwrap(), 2);
        assert_eq!(global_jacobian_colength(&f("x^2 + y^2"), Deadline::none()).unwrap(), 1);
        assert!(matches!(
            global_jacobian_colength(&f("x^2"), Deadline::none()),
            Err(SingularityError::NotZeroDimensional)
        ));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_plane_curve(3, &[]).value, 0);
        assert_eq!(euler_char_plane_curve(4, &[]).value, -4);
        let node = SingularPoint { chart: "z=1".into(), coordinates: vec![], projective: vec![], milnor: 1 };
        assert_eq!(euler_char_plane_curve(3, &[node]).value, 1);
    }
}

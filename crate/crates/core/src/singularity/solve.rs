use crate::exact::{groebner_basis, rational_roots, Deadline, MonomialOrder, MultiPoly, Rational, UniPoly};

use super::SingularityError;

/// Rational points of a zero-dimensional ideal, with the ideal's total colength
/// (counted over the algebraic closure, with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalZeros {
    pub points: Vec<Vec<Rational>>,
    pub colength: u64,
}

pub fn rational_zeros(gens: &[MultiPoly], deadline: Deadline) -> Result<RationalZeros, SingularityError> {
    let Some(first) = gens.first() else {
        return Err(SingularityError::Precondition("no generators".into()));
    };
    let vars = first.vars().to_vec();
    let gb = groebner_basis(gens, MonomialOrder::Lex, deadline)?;
    let colength = gb.standard_monomial_count().ok_or(SingularityError::NotZeroDimensional)? as u64;
    let mut points = solve(gb.polys(), &vars, deadline)?;
    points.sort();
    points.dedup();
    Ok(RationalZeros { points, colength })
}

/// Back substitution through a lex basis, last variable first.
fn solve(polys: Vec<MultiPoly>, vars: &[String], deadline: Deadline) -> Result<Vec<Vec<Rational>>, SingularityError> {
    let polys: Vec<MultiPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if vars.is_empty() {
        return Ok(if polys.is_empty() { vec![Vec::new()] } else { Vec::new() });
    }
    if polys.is_empty() {
        return Err(SingularityError::NotZeroDimensional);
    }
    let gb = groebner_basis(&polys, MonomialOrder::Lex, deadline)?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let last = vars.len() - 1;
    let basis = gb.polys();
    let uni = basis
        .iter()
        .find(|p| p.terms().all(|(m, _)| m.exponents()[..last].iter().all(|&e| e == 0)))
        .ok_or(SingularityError::NotZeroDimensional)?;
    let roots = rational_roots(&UniPoly::from_multipoly(uni, &vars[last])?);
    let mut out = Vec::new();
    for r in roots {
        let rest: Vec<MultiPoly> = basis
            .iter()
            .map(|p| p.substitute_values(&[(vars[last].as_str(), r.clone())])?.with_vars(&vars[..last]))
            .collect::<Result<_, _>>()?;
        for mut pt in solve(rest, &vars[..last], deadline)? {
            pt.push(r.clone());
            out.push(pt);
        }
    }
    Ok(out)
}

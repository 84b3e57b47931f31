use std::collections::BTreeMap;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::exact::{
    bareiss_determinant, determinant_rational, monomials_of_degree, Deadline, ExactError, Monomial, MultiPoly, Rational,
};

use super::{split_coefficients, ResultantError};

const EPS: &str = "__eps";
const RETRIES: usize = 3;

/// Macaulay resultant of `n + 1` forms in `n + 1` variables.
pub fn macaulay_resultant<S: AsRef<str>>(
    forms: &[MultiPoly],
    form_vars: &[S],
    degrees: &[u32],
) -> Result<MultiPoly, ResultantError> {
    macaulay_resultant_with(forms, form_vars, degrees, Deadline::none())
}

/// As [`macaulay_resultant`], with a deadline. The result lives over the
/// variables of the inputs that are not form variables.
pub fn macaulay_resultant_with<S: AsRef<str>>(
    forms: &[MultiPoly],
    form_vars: &[S],
    degrees: &[u32],
    deadline: Deadline,
) -> Result<MultiPoly, ResultantError> {
    let form_vars: Vec<String> = form_vars.iter().map(|s| s.as_ref().to_string()).collect();
    let k = form_vars.len();
    if forms.len() != k || degrees.len() != k {
        return Err(ResultantError::Precondition(format!(
            "need {k} forms and degrees, got {} and {}",
            forms.len(),
            degrees.len()
        )));
    }
    if degrees.iter().any(|&d| d == 0) {
        return Err(ResultantError::Precondition("forms must have positive degree".into()));
    }
    let all_vars = forms[0].vars().to_vec();
    for f in forms {
        if f.vars() != all_vars.as_slice() {
            return Err(ExactError::VariableMismatch { left: all_vars.clone(), right: f.vars().to_vec() }.into());
        }
    }
    let coef_vars: Vec<String> = all_vars.iter().filter(|v| !form_vars.contains(v)).cloned().collect();
    let mut split = Vec::with_capacity(k);
    for (f, &d) in forms.iter().zip(degrees) {
        let s = split_coefficients(f, &form_vars, &coef_vars)?;
        if s.keys().any(|m| m.degree() != d) {
            return Err(ResultantError::NotHomogeneous { expected: d, vars: form_vars.clone() });
        }
        split.push(s);
    }
    let layout = Layout::new(k, degrees);

    if coef_vars.is_empty() {
        let numeric: Vec<BTreeMap<Monomial, Rational>> = split
            .iter()
            .map(|s| s.iter().map(|(m, c)| (m.clone(), c.constant_value().unwrap_or_default())).collect())
            .collect();
        let (big, minor) = layout.matrices(&numeric, &Rational::zero());
        let dm = determinant_rational(&minor, deadline)?;
        if !Zero::is_zero(&dm) {
            let d = determinant_rational(&big, deadline)?;
            return Ok(MultiPoly::constant(&coef_vars, d / dm));
        }
    } else {
        let zero = MultiPoly::zero(&coef_vars);
        let one = MultiPoly::one(&coef_vars);
        let (big, minor) = layout.matrices(&split, &zero);
        let dm = bareiss_determinant(&minor, &one, deadline)?;
        if !dm.is_zero() {
            let d = bareiss_determinant(&big, &one, deadline)?;
            return Ok(d.exact_div(&dm)?);
        }
    }

    // Both sides may vanish: perturb f_i -> f_i + eps * g_i and take the
    // lowest-order quotient in eps.
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for attempt in 0..=RETRIES {
        let weights: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j || attempt == 0 {
                            Rational::from_integer(1.into())
                        } else {
                            Rational::from_integer(rng.gen_range(-7i64..=7).into())
                        }
                    })
                    .collect()
            })
            .collect();
        if let Some(r) = perturbed_quotient(&layout, &split, &coef_vars, degrees, &weights, deadline)? {
            return Ok(r);
        }
    }
    Err(ResultantError::PerturbationFailure { attempts: RETRIES + 1 })
}

fn perturbed_quotient(
    layout: &Layout,
    split: &[BTreeMap<Monomial, MultiPoly>],
    coef_vars: &[String],
    degrees: &[u32],
    weights: &[Vec<Rational>],
    deadline: Deadline,
) -> Result<Option<MultiPoly>, ResultantError> {
    let k = split.len();
    let mut ext_vars = coef_vars.to_vec();
    ext_vars.push(EPS.to_string());
    let eps = MultiPoly::var(&ext_vars, EPS)?;
    let mut forms = Vec::with_capacity(k);
    for (i, s) in split.iter().enumerate() {
        let mut f: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in s {
            f.insert(m.clone(), c.with_vars(&ext_vars)?);
        }
        for j in 0..k {
            let m = Monomial::var_power(k, j, degrees[i]);
            let add = eps.scale(&weights[i][j]);
            let slot = f.entry(m).or_insert_with(|| MultiPoly::zero(&ext_vars));
            *slot = &*slot + &add;
        }
        forms.push(f);
    }
    let zero = MultiPoly::zero(&ext_vars);
    let one = MultiPoly::one(&ext_vars);
    let (big, minor) = layout.matrices(&forms, &zero);
    let dm = bareiss_determinant(&minor, &one, deadline)?;
    if dm.is_zero() {
        return Ok(None);
    }
    let d = bareiss_determinant(&big, &one, deadline)?;
    let dm_coeffs = dm.coefficients_in(EPS)?;
    let low = dm_coeffs.iter().position(|c| !c.is_zero()).expect("nonzero minor");
    let d_coeffs = d.coefficients_in(EPS)?;
    let num = d_coeffs.get(low).cloned().unwrap_or_else(|| zero.clone());
    match num.exact_div(&dm_coeffs[low]) {
        Ok(q) => Ok(Some(q.with_vars(coef_vars)?)),
        Err(ExactError::NotDivisible) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Row/column bookkeeping of the Macaulay matrix in critical degree.
struct Layout {
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    /// (form, shift) producing each row
    rows: Vec<(usize, Monomial)>,
    /// positions of the non-reduced monomials
    extraneous: Vec<usize>,
}

impl Layout {
    fn new(k: usize, degrees: &[u32]) -> Self {
        let top: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
        let monomials = monomials_of_degree(k, top);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::with_capacity(monomials.len());
        let mut extraneous = Vec::new();
        for (pos, m) in monomials.iter().enumerate() {
            let e = m.exponents();
            let i = (0..k).find(|&i| e[i] >= degrees[i]).expect("critical degree forces a divisor");
            let mut shift = e.to_vec();
            shift[i] -= degrees[i];
            rows.push((i, Monomial::new(shift)));
            if (0..k).filter(|&j| e[j] >= degrees[j]).count() >= 2 {
                extraneous.push(pos);
            }
        }
        Layout { monomials, index, rows, extraneous }
    }

    fn matrices<E: Clone>(&self, forms: &[BTreeMap<Monomial, E>], zero: &E) -> (Vec<Vec<E>>, Vec<Vec<E>>) {
        let n = self.monomials.len();
        let mut big = Vec::with_capacity(n);
        for (i, shift) in &self.rows {
            let mut row = vec![zero.clone(); n];
            for (m, c) in &forms[*i] {
                row[self.index[&m.mul(shift)]] = c.clone();
            }
            big.push(row);
        }
        let minor = self
            .extraneous
            .iter()
            .map(|&r| self.extraneous.iter().map(|&c| big[r][c].clone()).collect())
            .collect();
        (big, minor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn lin(c: [i64; 3]) -> MultiPoly {
        let v = ["x", "y", "z"];
        MultiPoly::from_terms(&v, (0..3).map(|i| (Monomial::var_power(3, i, 1), rat(c[i]))))
    }

    #[test]
    fn linear_forms_give_the_determinant() {
        let r = macaulay_resultant(&[lin([2, 1, 0]), lin([0, 3, 1]), lin([1, 0, 4])], &["x", "y", "z"], &[1, 1, 1]).unwrap();
        // 2*(12-0) - 1*(0-1) + 0 = 25
        assert_eq!(r.constant_value(), Some(rat(25)));
    }

    #[test]
    fn pure_powers_normalize_to_one() {
        let v = ["x", "y", "z"];
        let forms: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::from_terms(&v, [(Monomial::var_power(3, i, (i + 2) as u32), rat(1))])).collect();
        let r = macaulay_resultant(&forms, &v, &[2, 3, 4]).unwrap();
        assert_eq!(r.constant_value(), Some(rat(1)));
    }

    #[test]
    fn common_zero_gives_zero() {
        let v = ["x", "y", "z"];
        let mono = |e: [u32; 3]| MultiPoly::from_terms(&v, [(Monomial::new(e.to_vec()), rat(1))]);
        let r = macaulay_resultant(&[mono([0, 1, 1]), mono([1, 0, 1]), mono([1, 1, 0])], &v, &[2, 2, 2]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let v = ["x", "y"];
        let f = MultiPoly::from_terms(&v, [(Monomial::new(vec![2, 0]), rat(1)), (Monomial::new(vec![1, 0]), rat(1))]);
        let g = MultiPoly::from_terms(&v, [(Monomial::new(vec![0, 1]), rat(1))]);
        assert!(matches!(macaulay_resultant(&[f, g], &v, &[2, 1]), Err(ResultantError::NotHomogeneous { .. })));
    }
}

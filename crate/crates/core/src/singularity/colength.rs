use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::exact::{monomials_below, Deadline, Monomial, MultiPoly, Rational};

use super::SingularityError;

/// Moves `point` to the origin.
fn translate(f: &MultiPoly, point: &[Rational]) -> Result<MultiPoly, SingularityError> {
    let mut assignment = BTreeMap::new();
    for (v, p) in f.vars().iter().zip(point) {
        if !p.is_zero() {
            let shifted = &MultiPoly::var(f.vars(), v)? + &MultiPoly::constant(f.vars(), p.clone());
            assignment.insert(v.clone(), shifted);
        }
    }
    Ok(f.substitute(&assignment)?)
}

/// Rank of a set of sparse rows, by elimination on the lowest column.
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    fn insert(&mut self, mut row: BTreeMap<usize, Rational>) {
        loop {
            let Some((&c, v)) = row.iter().next() else { return };
            let Some(p) = self.pivots.get(&c) else {
                let inv = v.recip();
                for x in row.values_mut() {
                    *x *= &inv;
                }
                self.pivots.insert(c, row);
                return;
            };
            let factor = v.clone();
            for (k, pv) in p {
                let e = row.entry(*k).or_insert_with(Rational::zero);
                *e -= &factor * pv;
                if e.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `dim k[x]/(gens + m^n)` at the origin, for already translated generators.
fn truncated_colength(gens: &[MultiPoly], n: u32) -> usize {
    let nvars = gens[0].nvars();
    let cols = monomials_below(nvars, n);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new();
    for g in gens {
        let Some(ord) = g.order() else { continue };
        if ord >= n {
            continue;
        }
        for beta in monomials_below(nvars, n - ord) {
            let row: BTreeMap<usize, Rational> = g
                .terms()
                .filter_map(|(m, c)| {
                    let prod = m.mul(&beta);
                    (prod.degree() < n).then(|| (index[&prod], c.clone()))
                })
                .collect();
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    cols.len() - ech.rank()
}

/// Colength of the ideal generated by `gens` in the local ring at `point`,
/// found as the stable value of `dim k[x]/(gens + m^N)`.
pub fn local_colength(gens: &[MultiPoly], point: &[Rational], cap: u32, deadline: Deadline) -> Result<u64, SingularityError> {
    if gens.is_empty() {
        return Err(SingularityError::Precondition("no generators".into()));
    }
    let nvars = gens[0].nvars();
    if point.len() != nvars {
        return Err(SingularityError::Precondition(format!("point has {} coordinates, expected {nvars}", point.len())));
    }
    let moved: Vec<MultiPoly> = gens.iter().map(|g| translate(g, point)).collect::<Result<_, _>>()?;
    let mut prev = truncated_colength(&moved, 1);
    for n in 2..=cap.max(2) {
        deadline.check()?;
        let q = truncated_colength(&moved, n);
        if q == prev {
            return Ok(q as u64);
        }
        prev = q;
    }
    Err(SingularityError::NotIsolated { cap })
}

/// `(d - 1)^m + 3` for a polynomial of total degree `d` in `m` variables.
pub fn milnor_cap(f: &MultiPoly) -> u32 {
    let d = f.total_degree().unwrap_or(0).max(2);
    (d - 1).saturating_pow(f.nvars() as u32).saturating_add(3)
}

fn check_singular(f: &MultiPoly, point: &[Rational]) -> Result<Vec<MultiPoly>, SingularityError> {
    if point.len() != f.nvars() {
        return Err(SingularityError::Precondition(format!("point has {} coordinates, expected {}", point.len(), f.nvars())));
    }
    let value = f.evaluate(point);
    if !value.is_zero() {
        return Err(SingularityError::NotSingular(format!("f = {value} at the point")));
    }
    let partials: Vec<MultiPoly> = f.vars().iter().map(|v| f.derivative(v)).collect::<Result<_, _>>()?;
    for (v, p) in f.vars().iter().zip(&partials) {
        let value = p.evaluate(point);
        if !value.is_zero() {
            return Err(SingularityError::NotSingular(format!("df/d{v} = {value} at the point")));
        }
    }
    Ok(partials)
}

/// Milnor number: colength of the Jacobian ideal at a singular point.
pub fn local_milnor(f: &MultiPoly, point: &[Rational]) -> Result<u64, SingularityError> {
    let partials = check_singular(f, point)?;
    local_colength(&partials, point, milnor_cap(f), Deadline::none())
}

/// Tjurina number: colength of `(f, df)` at a singular point.
pub fn local_tjurina(f: &MultiPoly, point: &[Rational]) -> Result<u64, SingularityError> {
    let mut gens = vec![f.clone()];
    gens.extend(check_singular(f, point)?);
    local_colength(&gens, point, milnor_cap(f), Deadline::none())
}

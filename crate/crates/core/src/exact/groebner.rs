//! Buchberger's algorithm over the rationals.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Deadline, ExactError, Monomial, MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic with the first variable largest.
    Lex,
    /// Graded reverse lexicographic.
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Sparse polynomial with terms sorted by decreasing monomial.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &MultiPoly, order: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        let inv = lc.recip();
        for (_, c) in t.iter_mut() {
            *c *= &inv;
        }
    }
}

/// `a - c * m * b`, merging sorted term lists.
fn sub_scaled(a: &Terms, c: &Rational, m: &Monomial, b: &Terms, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bm = m.mul(&b[j].0);
        if i == a.len() {
            out.push((bm, -(c * &b[j].1)));
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` modulo monic `basis`.
fn normal_form(f: &Terms, basis: &[Terms], order: MonomialOrder, deadline: Deadline) -> Result<Terms, ExactError> {
    let mut rem: Terms = Vec::new();
    let mut p = f.clone();
    let mut steps = 0usize;
    while let Some((lm, lc)) = p.first().cloned() {
        steps += 1;
        if steps % 256 == 0 {
            deadline.check()?;
        }
        match basis.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let q = g[0].0.quotient_of(&lm).expect("divisibility checked");
                p = sub_scaled(&p, &lc, &q, g, order);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    Ok(rem)
}

fn s_polynomial(f: &Terms, g: &Terms, order: MonomialOrder) -> Terms {
    let l = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&l).unwrap();
    let mg = g[0].0.quotient_of(&l).unwrap();
    let zero: Terms = Vec::new();
    let a = sub_scaled(&zero, &-Rational::one(), &mf, f, order);
    sub_scaled(&a, &Rational::one(), &mg, g, order)
}

/// A reduced Gröbner basis: monic, sorted by decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: Arc<[String]>,
    polys: Vec<Terms>,
}

pub fn groebner_basis(gens: &[MultiPoly], order: MonomialOrder, deadline: Deadline) -> Result<GroebnerBasis, ExactError> {
    let vars: Arc<[String]> = match gens.first() {
        Some(g) => g.vars_arc().clone(),
        None => Arc::from(Vec::<String>::new()),
    };
    for g in gens {
        if g.vars() != &vars[..] {
            return Err(ExactError::VariableMismatch { left: vars.to_vec(), right: g.vars().to_vec() });
        }
    }
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        let mut t = to_terms(g, order);
        if !t.is_empty() {
            make_monic(&mut t);
            basis.push(t);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        deadline.check()?;
        // normal strategy: smallest lcm first
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
                let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
                order.cmp(&la, &lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = normal_form(&s, &basis, order, deadline)?;
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pairs.push((k, n));
        }
    }
    // minimalize then interreduce
    let mut minimal: Vec<Terms> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = &g[0].0;
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h[0].0.divides(lm) && (h[0].0 != *lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
        let head = minimal[k][0].clone();
        let tail: Terms = minimal[k][1..].to_vec();
        let mut r = normal_form(&tail, &others, order, deadline)?;
        r.insert(0, head);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(GroebnerBasis { order, vars, polys: reduced })
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.polys.iter().map(|t| MultiPoly::from_terms(&self.vars, t.iter().cloned())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|t| t[0].0.clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|t| t[0].0.is_one())
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        (0..self.vars.len()).all(|i| self.polys.iter().any(|t| t[0].0.pure_power_var() == Some(i)))
    }

    /// `dim_Q Q[x]/I` when finite.
    pub fn standard_monomial_count(&self) -> Option<usize> {
        if self.is_unit() {
            return Some(0);
        }
        if !self.is_zero_dimensional() {
            return None;
        }
        let lms = self.leading_monomials();
        let n = self.vars.len();
        let caps: Vec<u32> = (0..n)
            .map(|i| lms.iter().filter(|m| m.pure_power_var() == Some(i)).map(|m| m.exponents()[i]).min().unwrap())
            .collect();
        let mut count = 0usize;
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial::new(e.clone());
            if !lms.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Some(count);
                }
                e[k] += 1;
                if e[k] < caps[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly, ExactError> {
        if f.vars() != &self.vars[..] {
            return Err(ExactError::VariableMismatch { left: self.vars.to_vec(), right: f.vars().to_vec() });
        }
        let r = normal_form(&to_terms(f, self.order), &self.polys, self.order, Deadline::none())?;
        Ok(MultiPoly::from_terms(&self.vars, r))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool, ExactError> {
        Ok(self.reduce(f)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn vars() -> [&'static str; 2] {
        ["x", "y"]
    }

    fn p(terms: &[(i64, u32, u32)]) -> MultiPoly {
        MultiPoly::from_terms(&vars(), terms.iter().map(|&(c, a, b)| (Monomial::new(vec![a, b]), rat(c))))
    }

    #[test]
    fn orders() {
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![0, 3, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        let c = Monomial::new(vec![1, 1, 1]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&c, &a), Ordering::Greater);
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 - 1, x - y  =>  lex basis {x - y, y^2 - 1/2}
        let gb = groebner_basis(&[p(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]), p(&[(1, 1, 0), (-1, 0, 1)])], MonomialOrder::Lex, Deadline::none())
            .unwrap();
        let polys: Vec<String> = gb.polys().iter().map(|q| q.to_string()).collect();
        assert_eq!(polys, vec!["x - y", "y^2 - 1/2"]);
        assert!(gb.is_zero_dimensional());
        assert_eq!(gb.standard_monomial_count(), Some(2));
    }

    #[test]
    fn cusp_jacobian() {
        // (3x^2, 2y): colength 2
        let gb = groebner_basis(&[p(&[(3, 2, 0)]), p(&[(2, 0, 1)])], MonomialOrder::DegRevLex, Deadline::none()).unwrap();
        assert_eq!(gb.standard_monomial_count(), Some(2));
    }

    #[test]
    fn not_zero_dimensional() {
        let gb = groebner_basis(&[p(&[(1, 1, 1)])], MonomialOrder::DegRevLex, Deadline::none()).unwrap();
        assert!(!gb.is_zero_dimensional());
        assert_eq!(gb.standard_monomial_count(), None);
    }

    #[test]
    fn unit_ideal() {
        let gb = groebner_basis(&[p(&[(1, 1, 0), (-1, 0, 0)]), p(&[(1, 1, 0)])], MonomialOrder::Lex, Deadline::none()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.standard_monomial_count(), Some(0));
    }

    #[test]
    fn membership_of_generators_and_combinations() {
        let f = p(&[(1, 3, 0), (-2, 1, 1), (1, 0, 0)]);
        let g = p(&[(1, 2, 1), (-2, 0, 2), (1, 1, 0)]);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let gb = groebner_basis(&[f.clone(), g.clone()], order, Deadline::none()).unwrap();
            assert!(gb.contains(&f).unwrap());
            assert!(gb.contains(&g).unwrap());
            let combo = &(&f * &p(&[(1, 0, 1), (3, 1, 0)])) - &(&g * &p(&[(2, 1, 1)]));
            assert!(gb.contains(&combo).unwrap());
            assert!(!gb.contains(&p(&[(1, 0, 0)])).unwrap());
        }
        // Mora's classic example: dimension 0 quotient of size 4
        let f = p(&[(1, 2, 0), (1, 1, 1), (-1, 0, 0)]);
        let g = p(&[(1, 0, 2), (1, 1, 1), (-1, 0, 0)]);
        let gl = groebner_basis(&[f.clone(), g.clone()], MonomialOrder::Lex, Deadline::none()).unwrap();
        let gd = groebner_basis(&[f, g], MonomialOrder::DegRevLex, Deadline::none()).unwrap();
        assert_eq!(gl.standard_monomial_count(), gd.standard_monomial_count());
    }
}

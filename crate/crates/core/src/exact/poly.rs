//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Exponent vector, one slot per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e` in an ambient space of `nvars` variables.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// All exponent vectors of `nvars` variables with total degree exactly `degree`,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// All monomials of total degree strictly below `bound`.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

/// A polynomial in a fixed, ordered list of named variables.
///
/// Terms are kept in a map from exponent vector to nonzero coefficient, so two
/// polynomials over the same variable list are equal exactly when their maps are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::zero_in(Self::var_list(vars))
    }

    pub(crate) fn zero_in(vars: Arc<[String]>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        Self::constant_in(Self::var_list(vars), c)
    }

    pub(crate) fn constant_in(vars: Arc<[String]>, c: Rational) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self, ExactError> {
        let list = Self::var_list(vars);
        let i = list
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))?;
        let n = list.len();
        let mut p = Self::zero_in(list);
        p.terms.insert(Monomial::var_power(n, i, 1), Rational::one());
        Ok(p)
    }

    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Self
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        Self::from_terms_in(Self::var_list(vars), terms)
    }

    pub(crate) fn from_terms_in<I>(vars: Arc<[String]>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero_in(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), p.vars.len(), "monomial length must match the variable count");
            p.add_term(m, c);
        }
        p
    }

    fn var_list<S: AsRef<str>>(vars: &[S]) -> Arc<[String]> {
        vars.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub(crate) fn vars_arc(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, ExactError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u32>, ExactError> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).max())
    }

    /// Smallest total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &MultiPoly) -> Result<(), ExactError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(ExactError::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, ExactError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, ExactError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, ExactError> {
        self.check_same_vars(other)?;
        let mut out = Self::zero_in(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no remainder.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly, ExactError> {
        self.check_same_vars(divisor)?;
        let (lead_m, lead_c) = divisor.terms.iter().next_back().ok_or(ExactError::DivisionByZero)?;
        if divisor.terms.len() == 1 {
            let mut out = Self::zero_in(self.vars.clone());
            for (m, c) in &self.terms {
                let q = lead_m.quotient_of(m).ok_or(ExactError::NotDivisible)?;
                out.terms.insert(q, c / lead_c);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero_in(self.vars.clone());
        // Lex-leading terms multiply, so an exact quotient is found term by term.
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let qm = lead_m.quotient_of(m).ok_or(ExactError::NotDivisible)?;
            let qc = c / lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::constant_in(self.vars.clone(), Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derivative(&self, var: &str) -> Result<MultiPoly, ExactError> {
        let i = self.var_index(var)?;
        Ok(self.derivative_at(i))
    }

    pub(crate) fn derivative_at(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[i] -= 1;
            out.terms.insert(nm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Simultaneous substitution `var -> replacement`. Replacements must live over
    /// the same variable list as `self`; unlisted variables are kept.
    pub fn substitute(&self, assignment: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly, ExactError> {
        let mut slots: Vec<Option<&MultiPoly>> = vec![None; self.nvars()];
        for (name, rep) in assignment {
            let i = self.var_index(name)?;
            self.check_same_vars(rep)?;
            slots[i] = Some(rep);
        }
        let mut power_cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.nvars()];
        let mut out = Self::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut factor = Self::constant_in(self.vars.clone(), c.clone());
            for (i, rep) in slots.iter().enumerate() {
                let Some(rep) = rep else { continue };
                let e = m.0[i] as usize;
                kept.0[i] = 0;
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                if cache.is_empty() {
                    cache.push(Self::constant_in(self.vars.clone(), Rational::one()));
                }
                while cache.len() <= e {
                    let next = &cache[cache.len() - 1] * *rep;
                    cache.push(next);
                }
                factor = &factor * &cache[e];
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&kept), fc);
            }
        }
        Ok(out)
    }

    /// Substitute rational values for some variables. The variable list is unchanged.
    pub fn substitute_values(&self, values: &[(&str, Rational)]) -> Result<MultiPoly, ExactError> {
        let mut slots: Vec<Option<&Rational>> = vec![None; self.nvars()];
        for (name, v) in values {
            slots[self.var_index(name)?] = Some(v);
        }
        let mut out = Self::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let mut nc = c.clone();
            for (i, v) in slots.iter().enumerate() {
                if let Some(v) = v {
                    let e = nm.0[i];
                    if e > 0 {
                        nc *= num_traits::pow((*v).clone(), e as usize);
                        nm.0[i] = 0;
                    }
                }
            }
            out.add_term(nm, nc);
        }
        Ok(out)
    }

    /// Evaluate at a full point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.0.iter().zip(point) {
                if *e > 0 {
                    t *= num_traits::pow(v.clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-express the polynomial over another variable list. Every variable that
    /// actually occurs must appear in `new_vars`.
    pub fn with_vars<S: AsRef<str>>(&self, new_vars: &[S]) -> Result<MultiPoly, ExactError> {
        let list = Self::var_list(new_vars);
        let mut map = Vec::with_capacity(self.nvars());
        for name in self.vars.iter() {
            map.push(list.iter().position(|v| v == name));
        }
        let n = list.len();
        let mut out = Self::zero_in(list);
        for (m, c) in &self.terms {
            let mut nm = vec![0; n];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => nm[j] = e,
                    None => return Err(ExactError::UnknownVariable(self.vars[i].clone())),
                }
            }
            out.terms.insert(Monomial(nm), c.clone());
        }
        Ok(out)
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<MultiPoly>, ExactError> {
        let i = self.var_index(var)?;
        let deg = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
        let mut out = vec![Self::zero_in(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let e = nm.0[i] as usize;
            nm.0[i] = 0;
            out[e].terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Gcd of the integer coefficients; `None` unless all coefficients are integers.
    pub fn integer_content(&self) -> Option<Integer> {
        if !self.is_integral() {
            return None;
        }
        Some(self.terms.values().fold(Integer::zero(), |g, c| g.gcd(c.numer())))
    }

    /// Multiply by the least common denominator of the coefficients.
    pub fn clear_denominators(&self) -> (MultiPoly, Integer) {
        let l = self.terms.values().fold(Integer::one(), |l, c| l.lcm(c.denom()));
        (self.scale(&Rational::from_integer(l.clone())), l)
    }

    pub fn leading_lex(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial addition over different variable lists")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial subtraction over different variable lists")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial multiplication over different variable lists")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (MultiPoly, MultiPoly) {
        let v = ["x", "y"];
        (MultiPoly::var(&v, "x").unwrap(), MultiPoly::var(&v, "y").unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let p = &(&x + &y) * &(&x - &y);
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let (x, y) = xy();
        let f = &(&x * &y) + &x.scale(&ratio(3, 2));
        let zero = MultiPoly::zero(&["x", "y"]);
        assert_eq!(&f + &zero, f);
        assert!((&f - &f).is_zero());
        assert_eq!(zero.total_degree(), None);
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &(&x * &x) - &(&y * &y);
        let b = &x - &y;
        assert_eq!(a.exact_div(&b).unwrap(), &x + &y);
        let c = &(&x * &x) + &y;
        assert_eq!(c.exact_div(&b), Err(ExactError::NotDivisible));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = MultiPoly::var(&["x"], "x").unwrap();
        let b = MultiPoly::var(&["y"], "y").unwrap();
        assert!(matches!(a.checked_add(&b), Err(ExactError::VariableMismatch { .. })));
    }

    #[test]
    fn derivatives() {
        let (x, y) = xy();
        let f = &x.pow(3) + &(&x * &y);
        let fx = f.derivative("x").unwrap();
        assert_eq!(fx, &x.pow(2).scale(&rat(3)) + &y);
        assert!(x.pow(3).derivative("y").unwrap().is_zero());
        assert!(matches!(f.derivative("z"), Err(ExactError::UnknownVariable(_))));
    }

    #[test]
    fn symbolic_derivative_of_binary_quadratic() {
        let v = ["X", "Y", "a", "b", "c"];
        let g = |n| MultiPoly::var(&v, n).unwrap();
        let f = &(&(&g("a") * &g("X").pow(2)) + &(&(&g("b") * &g("X")) * &g("Y"))) + &(&g("c") * &g("Y").pow(2));
        let fx = f.derivative("X").unwrap();
        // term-by-term: d/dX aX^2 = 2aX, d/dX bXY = bY, d/dX cY^2 = 0
        let expect = &(&g("a") * &g("X")).scale(&rat(2)) + &(&g("b") * &g("Y"));
        assert_eq!(fx, expect);
    }

    #[test]
    fn substitution() {
        let (x, y) = xy();
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), &x + &y);
        let s = x.pow(2).substitute(&a).unwrap();
        assert_eq!(s, &(&x.pow(2) + &(&x * &y).scale(&rat(2))) + &y.pow(2));

        let v = ["a", "b", "c"];
        let g = |n| MultiPoly::var(&v, n).unwrap();
        let d = &g("b").pow(2) - &(&g("a") * &g("c")).scale(&rat(4));
        let val = d.substitute_values(&[("a", rat(1)), ("b", rat(1)), ("c", rat(1))]).unwrap();
        assert_eq!(val.constant_value(), Some(rat(-3)));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(3, 7).len(), 36);
        assert_eq!(monomials_below(2, 3).len(), 6);
    }

    #[test]
    fn reembedding() {
        let x = MultiPoly::var(&["x", "t"], "x").unwrap();
        let y = x.with_vars(&["t", "y", "x"]).unwrap();
        assert_eq!(y.to_string(), "x");
        let t = MultiPoly::var(&["x", "t"], "t").unwrap();
        assert!(t.with_vars(&["x"]).is_err());
    }
}

//! Dense univariate polynomials and rational root extraction.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::{Field, Fp};
use super::valuation::is_prime_u64;
use super::{ExactError, Monomial, MultiPoly, Rational};

/// Dense coefficient vector over a field, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F>(Vec<F>);

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.0.last()
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let mut it = self.0.iter().rev();
        let mut acc = it.next()?.clone();
        for c in it {
            acc = acc.mul(x).add(c);
        }
        Some(acc)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c.mul(&c.from_i64_like(k as i64))).collect())
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial").clone();
        let dinv = dl.inv();
        let dd = d.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![dl.zero_like(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&dinv);
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv();
                UniPoly(self.0.iter().map(|c| c.mul(&inv)).collect())
            }
        }
    }

    /// Number of times `(x - root)` divides the polynomial. Zero polynomial: `usize::MAX`.
    pub fn root_multiplicity(&self, root: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            // synthetic division by (x - root)
            let n = p.0.len();
            if n == 0 {
                return k;
            }
            let mut q = vec![root.zero_like(); n - 1];
            let mut acc = root.zero_like();
            for i in (0..n).rev() {
                acc = acc.mul(root).add(&p.0[i]);
                if i > 0 {
                    q[i - 1] = acc.clone();
                }
            }
            if !acc.is_zero() {
                return k;
            }
            k += 1;
            p = UniPoly::new(q);
        }
    }
}

impl UniPoly<Rational> {
    /// Dense view of a polynomial in which only `var` occurs.
    pub fn from_multipoly(p: &MultiPoly, var: &str) -> Result<Self, ExactError> {
        let i = p.var_index(var)?;
        let deg = p.degree_in(var)?.unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (m, v) in p.terms() {
            if m.exponents().iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return Err(ExactError::UnknownVariable(format!("polynomial is not univariate in `{var}`")));
            }
            c[m.exponents()[i] as usize] = v.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn to_multipoly(&self, var: &str) -> MultiPoly {
        MultiPoly::from_terms(
            &[var],
            self.0.iter().enumerate().map(|(k, c)| (Monomial::new(vec![k as u32]), c.clone())),
        )
    }

    /// Squarefree part.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }
}

fn integer_coefficients(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = p.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.0.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Find `u/v` with `u = a v (mod m)`, `|u| <= n`, `0 < v <= d`.
fn rational_reconstruction(a: &BigInt, m: &BigInt, n: &BigInt, d: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1.abs() > n {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || &s1.abs() > d {
        return None;
    }
    Some(Rational::new(r1, s1))
}

/// All rational roots of a nonzero polynomial, sorted ascending, without
/// multiplicity. Roots are found modulo a prime of good reduction, lifted
/// p-adically by Newton iteration and recovered by rational reconstruction, so
/// the result is complete.
pub fn rational_roots(p: &UniPoly<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    let mut coeffs = p.0.clone();
    let zeros = coeffs.iter().take_while(|c| Zero::is_zero(*c)).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..zeros);
    }
    let core = UniPoly::new(coeffs).squarefree();
    if core.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let ints = integer_coefficients(&core);
    let lead = ints.last().unwrap().clone();
    let tail = ints[0].clone();
    let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();

    let mut q: u64 = 3;
    let q = loop {
        if is_prime_u64(q) && !(&lead % q).is_zero() {
            let modp: Vec<Fp> = ints.iter().map(|c| Fp::new(c.mod_floor(&BigInt::from(q)).to_u64().unwrap(), q)).collect();
            let pm = UniPoly::new(modp);
            if pm.gcd(&pm.derivative()).degree() == Some(0) {
                break q;
            }
        }
        q += 2;
    };
    let qb = BigInt::from(q);
    let bound = (&lead.abs()).max(&tail.abs()).clone();
    let target = BigInt::from(2) * &bound * &bound + 1;

    for r in 0..q {
        let rb = BigInt::from(r);
        if !eval_mod(&ints, &rb, &qb).is_zero() {
            continue;
        }
        let mut x = rb;
        let mut m = qb.clone();
        while m < target {
            m = &m * &m;
            let fx = eval_mod(&ints, &x, &m);
            let dfx = eval_mod(&deriv, &x, &m);
            let inv = inverse_mod(&dfx, &m).expect("simple root modulo a good prime");
            x = (&x - fx * inv).mod_floor(&m);
        }
        if let Some(cand) = rational_reconstruction(&x, &m, &tail.abs(), &lead.abs()) {
            if core.eval(&cand).is_some_and(|v| Zero::is_zero(&v)) {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

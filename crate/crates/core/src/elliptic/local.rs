//! The two kinds of local rings Tate's algorithm runs over. Elements are
//! polynomials: constants for `Z_(p)`, polynomials in `t` for `Q[t]_(t)`.

use crate::exact::valuation::{prime_power, reduce_mod_p};
use crate::exact::{rat, Field, Fp, Monomial, MultiPoly, Rational, UniPoly, Valuation};

pub(crate) trait LocalRing {
    type Res: Field;

    fn vars(&self) -> &[String];
    fn ord(&self, x: &MultiPoly) -> Valuation;
    /// Image in the residue field of an integral element.
    fn residue(&self, x: &MultiPoly) -> Self::Res;
    fn lift(&self, r: &Self::Res) -> MultiPoly;
    fn pi_pow(&self, k: u32) -> MultiPoly;
    fn residue_one(&self) -> Self::Res;

    fn residue_char(&self) -> u64 {
        self.residue_one().characteristic()
    }

    fn constant(&self, n: i64) -> MultiPoly {
        MultiPoly::constant(self.vars(), rat(n))
    }

    /// `x / pi^k`, exact.
    fn div_pi(&self, x: &MultiPoly, k: u32) -> MultiPoly {
        x.exact_div(&self.pi_pow(k)).expect("divisible by the uniformizer power")
    }

    /// Residue of `x / pi^k`, which is 0 when `ord x > k`.
    fn residue_at(&self, x: &MultiPoly, k: u32) -> Self::Res {
        if self.ord(x) > Valuation::Finite(i64::from(k)) {
            return self.residue_one().zero_like();
        }
        self.residue(&self.div_pi(x, k))
    }

    fn divisible(&self, x: &MultiPoly, k: u32) -> bool {
        self.ord(x) >= Valuation::Finite(i64::from(k))
    }
}

pub(crate) struct PadicRing {
    pub p: u64,
    vars: Vec<String>,
}

impl PadicRing {
    pub fn new(p: u64) -> Self {
        PadicRing { p, vars: Vec::new() }
    }
}

impl LocalRing for PadicRing {
    type Res = Fp;

    fn vars(&self) -> &[String] {
        &self.vars
    }

    fn ord(&self, x: &MultiPoly) -> Valuation {
        let c = x.constant_value().unwrap_or_default();
        crate::exact::ord_rational(&c, &crate::exact::ValuationContext::Prime(self.p))
    }

    fn residue(&self, x: &MultiPoly) -> Fp {
        let c = x.constant_value().unwrap_or_default();
        Fp::new(reduce_mod_p(&c, self.p).expect("p-integral"), self.p)
    }

    fn lift(&self, r: &Fp) -> MultiPoly {
        self.constant(r.value() as i64)
    }

    fn pi_pow(&self, k: u32) -> MultiPoly {
        MultiPoly::constant(&self.vars, prime_power(self.p, k))
    }

    fn residue_one(&self) -> Fp {
        Fp::new(1, self.p)
    }

    fn div_pi(&self, x: &MultiPoly, k: u32) -> MultiPoly {
        x.scale(&prime_power(self.p, k).recip())
    }
}

pub(crate) struct ParamRing {
    vars: Vec<String>,
}

impl ParamRing {
    pub fn new(t: &str) -> Self {
        ParamRing { vars: vec![t.to_string()] }
    }
}

impl LocalRing for ParamRing {
    type Res = Rational;

    fn vars(&self) -> &[String] {
        &self.vars
    }

    fn ord(&self, x: &MultiPoly) -> Valuation {
        x.terms().map(|(m, _)| Valuation::Finite(i64::from(m.degree()))).min().unwrap_or(Valuation::Infinite)
    }

    fn residue(&self, x: &MultiPoly) -> Rational {
        x.coeff(&Monomial::one(1))
    }

    fn lift(&self, r: &Rational) -> MultiPoly {
        MultiPoly::constant(&self.vars, r.clone())
    }

    fn pi_pow(&self, k: u32) -> MultiPoly {
        MultiPoly::var(&self.vars, &self.vars[0]).expect("declared").pow(k)
    }

    fn residue_one(&self) -> Rational {
        rat(1)
    }
}

/// Double root of `a X^2 + b X + c` over a prime or rational residue field,
/// with `a != 0`; `None` when the roots are distinct.
pub(crate) fn quadratic_double_root<F: Field>(a: &F, b: &F, c: &F) -> Option<F> {
    if a.characteristic() == 2 {
        // over F_2 square roots are the identity
        return b.is_zero().then(|| c.mul(&a.inv()));
    }
    let disc = b.mul(b).sub(&a.mul(c).mul(&a.from_i64_like(4)));
    disc.is_zero().then(|| b.neg().mul(&a.mul(&a.from_i64_like(2)).inv()))
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum CubicRoots<F> {
    Distinct,
    Double(F),
    Triple(F),
}

/// Root structure of the monic cubic `T^3 + b T^2 + c T + d`.
pub(crate) fn monic_cubic_roots<F: Field>(b: &F, c: &F, d: &F) -> CubicRoots<F> {
    let ch = b.characteristic();
    // over F_3 cube roots are the identity
    let alpha = if ch == 3 { d.neg() } else { b.neg().mul(&b.from_i64_like(3).inv()) };
    let three = b.from_i64_like(3);
    let is_triple = b.add(&three.mul(&alpha)).is_zero()
        && c.sub(&three.mul(&alpha).mul(&alpha)).is_zero()
        && d.add(&alpha.mul(&alpha).mul(&alpha)).is_zero();
    if is_triple {
        return CubicRoots::Triple(alpha);
    }
    let p = UniPoly::new(vec![d.clone(), c.clone(), b.clone(), b.one_like()]);
    let g = p.gcd(&p.derivative());
    match g.degree() {
        Some(1) => {
            let co = g.coeffs();
            CubicRoots::Double(co[0].neg().mul(&co[1].inv()))
        }
        _ => CubicRoots::Distinct,
    }
}

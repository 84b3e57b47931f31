use crate::exact::{Field, MultiPoly, Valuation};

use super::local::{monic_cubic_roots, quadratic_double_root, CubicRoots, LocalRing};
use super::{EllipticError, Kodaira, WeierstrassEq};

/// Outcome of the Tate loop: the reduction type and the minimal model reached.
pub(crate) struct TateOutcome {
    pub kodaira: Kodaira,
    pub ord_delta: u32,
    pub model: WeierstrassEq,
}

struct Run<'a, R: LocalRing> {
    ring: &'a R,
    e: WeierstrassEq,
}

impl<R: LocalRing> Run<'_, R> {
    fn zero(&self) -> MultiPoly {
        self.ring.constant(0)
    }

    fn shift(&mut self, r: MultiPoly, s: MultiPoly, t: MultiPoly) -> Result<(), EllipticError> {
        self.e = self.e.transform(&self.ring.constant(1), &r, &s, &t)?;
        Ok(())
    }

    fn res(&self, x: &MultiPoly, k: u32) -> R::Res {
        self.ring.residue_at(x, k)
    }

    fn check(&self, conditions: &[(&MultiPoly, u32)], step: &str) -> Result<(), EllipticError> {
        if conditions.iter().all(|(x, k)| self.ring.divisible(x, *k)) {
            Ok(())
        } else {
            Err(EllipticError::Internal(format!("divisibility lost after {step}")))
        }
    }

    fn ord_delta(&self) -> u32 {
        match self.ring.ord(&self.e.quantities().delta) {
            Valuation::Finite(v) => v as u32,
            Valuation::Infinite => unreachable!("nonzero discriminant"),
        }
    }

    /// A singular point of the reduced curve, as residues.
    fn singular_point(&self) -> Result<(R::Res, R::Res), EllipticError> {
        let one = self.ring.residue_one();
        let e = &self.e;
        let [a1, a2, a3, a4, a6] = e.coefficients().map(|c| self.res(c, 0));
        let p = self.ring.residue_char();
        if p == 2 || p == 3 {
            for x in 0..p as i64 {
                for y in 0..p as i64 {
                    let (x, y) = (one.from_i64_like(x), one.from_i64_like(y));
                    let f = y.mul(&y).add(&a1.mul(&x).mul(&y)).add(&a3.mul(&y)).sub(&x.mul(&x).mul(&x))
                        .sub(&a2.mul(&x).mul(&x)).sub(&a4.mul(&x)).sub(&a6);
                    let fx = a1.mul(&y).sub(&one.from_i64_like(3).mul(&x).mul(&x)).sub(&one.from_i64_like(2).mul(&a2).mul(&x)).sub(&a4);
                    let fy = one.from_i64_like(2).mul(&y).add(&a1.mul(&x)).add(&a3);
                    if f.is_zero() && fx.is_zero() && fy.is_zero() {
                        return Ok((x, y));
                    }
                }
            }
            return Err(EllipticError::Internal("reduction has no singular point".into()));
        }
        let q = e.quantities();
        let [b2, b4, b6, c4] = [&q.b2, &q.b4, &q.b6, &q.c4].map(|c| self.res(c, 0));
        let two = one.from_i64_like(2);
        let x0 = if c4.is_zero() {
            b2.neg().mul(&one.from_i64_like(12).inv())
        } else {
            // double root of 4x^3 + b2 x^2 + 2 b4 x + b6, monic after dividing by 4
            let quarter = one.from_i64_like(4).inv();
            match monic_cubic_roots(&b2.mul(&quarter), &two.mul(&b4).mul(&quarter), &b6.mul(&quarter)) {
                CubicRoots::Double(r) | CubicRoots::Triple(r) => r,
                CubicRoots::Distinct => return Err(EllipticError::Internal("reduction is smooth".into())),
            }
        };
        let y0 = a1.mul(&x0).add(&a3).neg().mul(&two.inv());
        Ok((x0, y0))
    }

    fn run(mut self) -> Result<TateOutcome, EllipticError> {
        let ring = self.ring;
        loop {
            let n = self.ord_delta();
            if n == 0 {
                return Ok(self.done(Kodaira::I0));
            }
            let (x0, y0) = self.singular_point()?;
            self.shift(ring.lift(&x0), self.zero(), ring.lift(&y0))?;
            let e = &self.e;
            self.check(&[(&e.a3, 1), (&e.a4, 1), (&e.a6, 1)], "moving the singular point")?;
            let q = e.quantities();
            if !ring.divisible(&q.b2, 1) {
                return Ok(self.done(Kodaira::In(n)));
            }
            if !ring.divisible(&e.a6, 2) {
                return Ok(self.done(Kodaira::II));
            }
            if !ring.divisible(&q.b8, 3) {
                return Ok(self.done(Kodaira::III));
            }
            if !ring.divisible(&q.b6, 3) {
                return Ok(self.done(Kodaira::IV));
            }
            // arrange pi | a1, a2; pi^2 | a3, a4; pi^3 | a6
            let (s, t) = match ring.residue_char() {
                2 => (ring.lift(&self.res(&e.a2, 0)), &ring.pi_pow(1) * &ring.lift(&self.res(&e.a6, 2))),
                3 => (e.a1.clone(), e.a3.clone()),
                _ => {
                    let half = ring.constant(2);
                    (-e.a1.exact_div(&half)?, -e.a3.exact_div(&half)?)
                }
            };
            self.shift(self.zero(), s, t)?;
            let e = &self.e;
            self.check(&[(&e.a1, 1), (&e.a2, 1), (&e.a3, 2), (&e.a4, 2), (&e.a6, 3)], "the I0* normalization")?;
            let (b, c, d) = (self.res(&e.a2, 1), self.res(&e.a4, 2), self.res(&e.a6, 3));
            match monic_cubic_roots(&b, &c, &d) {
                CubicRoots::Distinct => return Ok(self.done(Kodaira::I0Star)),
                CubicRoots::Double(alpha) => {
                    self.shift(&ring.pi_pow(1) * &ring.lift(&alpha), self.zero(), self.zero())?;
                    let k = self.star_subprocedure()?;
                    return Ok(self.done(Kodaira::InStar(k)));
                }
                CubicRoots::Triple(alpha) => {
                    self.shift(&ring.pi_pow(1) * &ring.lift(&alpha), self.zero(), self.zero())?;
                }
            }
            let e = &self.e;
            self.check(&[(&e.a2, 2), (&e.a4, 3), (&e.a6, 4)], "moving the triple root")?;
            let one = ring.residue_one();
            let (b, c) = (self.res(&e.a3, 2), self.res(&e.a6, 4).neg());
            match quadratic_double_root(&one, &b, &c) {
                None => return Ok(self.done(Kodaira::IVStar)),
                Some(beta) => self.shift(self.zero(), self.zero(), &ring.pi_pow(2) * &ring.lift(&beta))?,
            }
            let e = &self.e;
            self.check(&[(&e.a3, 3), (&e.a6, 5)], "the IV* step")?;
            if !ring.divisible(&e.a4, 4) {
                return Ok(self.done(Kodaira::IIIStar));
            }
            if !ring.divisible(&e.a6, 6) {
                return Ok(self.done(Kodaira::IIStar));
            }
            // not minimal: divide a_i by pi^i
            self.e = self.e.transform(&ring.pi_pow(1), &self.zero(), &self.zero(), &self.zero())?;
        }
    }

    /// Determines `n` for type `I_n*`, once the cubic has a double root at 0.
    fn star_subprocedure(&mut self) -> Result<u32, EllipticError> {
        let ring = self.ring;
        let one = ring.residue_one();
        let mut n = 1u32;
        loop {
            let e = &self.e;
            if n % 2 == 1 {
                let k = (n + 3) / 2;
                self.check(&[(&e.a3, k), (&e.a6, 2 * k)], "the I_n* y-step")?;
                match quadratic_double_root(&one, &self.res(&e.a3, k), &self.res(&e.a6, 2 * k).neg()) {
                    None => return Ok(n),
                    Some(beta) => self.shift(self.zero(), self.zero(), &ring.pi_pow(k) * &ring.lift(&beta))?,
                }
            } else {
                let k = (n + 2) / 2;
                self.check(&[(&e.a4, k + 1), (&e.a6, 2 * k + 1)], "the I_n* x-step")?;
                let a = self.res(&e.a2, 1);
                match quadratic_double_root(&a, &self.res(&e.a4, k + 1), &self.res(&e.a6, 2 * k + 1)) {
                    None => return Ok(n),
                    Some(beta) => self.shift(&ring.pi_pow(k) * &ring.lift(&beta), self.zero(), self.zero())?,
                }
            }
            n += 1;
        }
    }

    fn done(self, kodaira: Kodaira) -> TateOutcome {
        let ord_delta = self.ord_delta();
        TateOutcome { kodaira, ord_delta, model: self.e }
    }
}

pub(crate) fn run_tate<R: LocalRing>(ring: &R, e: &WeierstrassEq) -> Result<TateOutcome, EllipticError> {
    Run { ring, e: e.clone() }.run()
}

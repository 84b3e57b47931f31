use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{rat, MultiPoly, Rational};
use crate::parse::parse_poly;

use super::EllipticError;

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`. The coefficients share one
/// variable list: empty for numeric curves, `[t]` over a function field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassEq {
    pub a1: MultiPoly,
    pub a2: MultiPoly,
    pub a3: MultiPoly,
    pub a4: MultiPoly,
    pub a6: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardQuantities {
    pub b2: MultiPoly,
    pub b4: MultiPoly,
    pub b6: MultiPoly,
    pub b8: MultiPoly,
    pub c4: MultiPoly,
    pub c6: MultiPoly,
    pub delta: MultiPoly,
}

impl StandardQuantities {
    /// `c4^3 / delta` for a numeric curve with nonzero discriminant.
    pub fn j(&self) -> Option<Rational> {
        let c4 = self.c4.constant_value()?;
        let d = self.delta.constant_value()?;
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(&c4 * &c4 * &c4 / d)
    }
}

impl WeierstrassEq {
    pub fn new(a: [MultiPoly; 5]) -> Result<Self, EllipticError> {
        let vars = a[0].vars().to_vec();
        if a.iter().any(|c| c.vars() != vars.as_slice()) {
            return Err(EllipticError::Precondition("coefficients use different variables".into()));
        }
        let [a1, a2, a3, a4, a6] = a;
        Ok(WeierstrassEq { a1, a2, a3, a4, a6 })
    }

    pub fn from_rationals(a: [Rational; 5]) -> Self {
        let none: [&str; 0] = [];
        let [a1, a2, a3, a4, a6] = a.map(|c| MultiPoly::constant(&none, c));
        WeierstrassEq { a1, a2, a3, a4, a6 }
    }

    pub fn from_ints(a: [i64; 5]) -> Self {
        Self::from_rationals(a.map(rat))
    }

    /// Parses five coefficient expressions over the given variables.
    pub fn parse<S: AsRef<str>>(coeffs: &[S], vars: &[&str]) -> Result<Self, EllipticError> {
        if coeffs.len() != 5 {
            return Err(EllipticError::Precondition(format!("expected 5 coefficients, got {}", coeffs.len())));
        }
        let polys: Vec<MultiPoly> = coeffs
            .iter()
            .map(|c| parse_poly(c.as_ref(), vars).map_err(|e| EllipticError::Precondition(e.to_string())))
            .collect::<Result<_, _>>()?;
        let a: [MultiPoly; 5] = polys.try_into().expect("five");
        Self::new(a)
    }

    pub fn vars(&self) -> &[String] {
        self.a1.vars()
    }

    pub fn coefficients(&self) -> [&MultiPoly; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn quantities(&self) -> StandardQuantities {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let c = |n: i64| MultiPoly::constant(a1.vars(), rat(n));
        let b2 = &(a1 * a1) + &(&c(4) * a2);
        let b4 = &(&c(2) * a4) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(&c(4) * a6);
        let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&(&c(4) * a2) * a6)) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3)) - &(a4 * a4);
        let c4 = &(&b2 * &b2) - &(&c(24) * &b4);
        let c6 = &(&(&c(-1) * &(&b2 * &(&b2 * &b2))) + &(&(&c(36) * &b2) * &b4)) - &(&c(216) * &b6);
        let delta = &(&(&(&c(-1) * &(&(&b2 * &b2) * &b8)) - &(&c(8) * &(&b4 * &(&b4 * &b4)))) - &(&c(27) * &(&b6 * &b6)))
            + &(&(&(&c(9) * &b2) * &b4) * &b6);
        StandardQuantities { b2, b4, b6, b8, c4, c6, delta }
    }

    /// The model in the coordinates `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t`.
    pub fn transform(&self, u: &MultiPoly, r: &MultiPoly, s: &MultiPoly, t: &MultiPoly) -> Result<Self, EllipticError> {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let c = |n: i64| MultiPoly::constant(a1.vars(), rat(n));
        let n1 = a1 + &(&c(2) * s);
        let n2 = &(&(a2 - &(s * a1)) + &(&c(3) * r)) - &(s * s);
        let n3 = &(a3 + &(r * a1)) + &(&c(2) * t);
        let n4 = &(&(&(&(a4 - &(s * a3)) + &(&(&c(2) * r) * a2)) - &(&(t + &(r * s)) * a1)) + &(&(&c(3) * r) * r))
            - &(&(&c(2) * s) * t);
        let n6 = &(&(&(&(&(a6 + &(r * a4)) + &(&(r * r) * a2)) + &(&(r * r) * r)) - &(t * a3)) - &(t * t)) - &(&(r * t) * a1);
        let div = |p: MultiPoly, k: u32| p.exact_div(&u.pow(k)).map_err(EllipticError::from);
        Ok(WeierstrassEq { a1: div(n1, 1)?, a2: div(n2, 2)?, a3: div(n3, 3)?, a4: div(n4, 4)?, a6: div(n6, 6)? })
    }
}

/// Standard quantities of a curve.
pub fn standard_quantities(e: &WeierstrassEq) -> StandardQuantities {
    e.quantities()
}

#[derive(Serialize, Deserialize)]
struct Wire {
    a1: String,
    a2: String,
    a3: String,
    a4: String,
    a6: String,
    #[serde(default)]
    vars: Vec<String>,
}

impl Serialize for WeierstrassEq {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        Wire {
            a1: self.a1.to_string(),
            a2: self.a2.to_string(),
            a3: self.a3.to_string(),
            a4: self.a4.to_string(),
            a6: self.a6.to_string(),
            vars: self.vars().to_vec(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for WeierstrassEq {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(de)?;
        let vars: Vec<&str> = w.vars.iter().map(String::as_str).collect();
        WeierstrassEq::parse(&[w.a1, w.a2, w.a3, w.a4, w.a6], &vars).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_form_discriminant() {
        let q = WeierstrassEq::parse(&["0", "0", "0", "a", "b"], &["a", "b"]).unwrap().quantities();
        assert_eq!(q.delta, parse_poly("-16*(4*a^3 + 27*b^2)", &["a", "b"]).unwrap());
    }

    #[test]
    fn numeric_examples() {
        let q = WeierstrassEq::from_ints([0, 0, 0, -1, 0]).quantities();
        assert_eq!(q.delta.constant_value(), Some(rat(64)));
        assert_eq!(q.j(), Some(rat(1728)));
        let q = WeierstrassEq::from_ints([0, 0, 0, 0, 0]).quantities();
        assert!(q.delta.is_zero());
        assert_eq!(q.j(), None);
        // 11a1: y^2 + y = x^3 - x^2 - 10x - 20
        let q = WeierstrassEq::from_ints([0, -1, 1, -10, -20]).quantities();
        assert_eq!(q.delta.constant_value(), Some(rat(-161051)));
    }

    #[test]
    fn discriminant_scales_under_transform() {
        let e = WeierstrassEq::from_ints([1, -1, 1, -10, -20]);
        let c = |n: i64| MultiPoly::constant(e.vars(), rat(n));
        let moved = e.transform(&c(1), &c(3), &c(-2), &c(5)).unwrap();
        assert_eq!(moved.quantities().delta, e.quantities().delta);
        let scaled = WeierstrassEq::from_ints([2, 4, 8, 16, 64]).transform(&c(2), &c(0), &c(0), &c(0)).unwrap();
        assert_eq!(scaled, WeierstrassEq::from_ints([1, 1, 1, 1, 1]));
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<WeierstrassEq>(&json).unwrap(), e);
    }
}

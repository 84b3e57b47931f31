//! Weierstrass equations, Tate's algorithm, Kodaira types and Ogg's formula.

mod corpus;
mod local;
mod tate;
mod weierstrass;

pub use corpus::{builtin_curves, load_curves, CurveEntry, ExpectedReduction, CURVES_JSON};
pub use weierstrass::{standard_quantities, StandardQuantities, WeierstrassEq};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{ord_poly, ExactError, Valuation, ValuationContext};

use local::{PadicRing, ParamRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("model is not integral for the valuation")]
    NonIntegralModel,
    #[error("discriminant is zero: the generic fiber is singular")]
    SingularGenericFiber,
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("Ogg's formula fails: ord = {ord}, m = {m}, f = {f}")]
    AssertionFailure { ord: u32, m: u32, f: u32 },
    #[error("internal error in Tate's algorithm: {0}")]
    Internal(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    /// Number of components of the special fiber of the Néron model.
    pub fn components(self) -> u32 {
        match self {
            Kodaira::I0 => 1,
            Kodaira::In(n) => n,
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::InStar(n) => n + 5,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    pub fn is_additive(self) -> bool {
        !matches!(self, Kodaira::I0 | Kodaira::In(_))
    }

    /// Tame part of the conductor exponent: 0, 1 or 2.
    pub fn tame_conductor(self) -> u32 {
        match self {
            Kodaira::I0 => 0,
            Kodaira::In(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::In(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::InStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for Kodaira {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let fixed = match s {
            "I0" => Some(Kodaira::I0),
            "II" => Some(Kodaira::II),
            "III" => Some(Kodaira::III),
            "IV" => Some(Kodaira::IV),
            "I0*" => Some(Kodaira::I0Star),
            "IV*" => Some(Kodaira::IVStar),
            "III*" => Some(Kodaira::IIIStar),
            "II*" => Some(Kodaira::IIStar),
            _ => None,
        };
        if let Some(k) = fixed {
            return Ok(k);
        }
        let bad = || format!("unknown Kodaira symbol `{s}`");
        let rest = s.strip_prefix('I').ok_or_else(bad)?;
        match rest.strip_suffix('*') {
            Some(n) => n.parse().ok().filter(|&n| n > 0).map(Kodaira::InStar).ok_or_else(bad),
            None => rest.parse().ok().filter(|&n| n > 0).map(Kodaira::In).ok_or_else(bad),
        }
    }
}

impl Serialize for Kodaira {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Kodaira {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionData {
    pub kodaira: Kodaira,
    pub m: u32,
    pub f: u32,
    pub ord_delta_min: u32,
    pub swan: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateResult {
    pub reduction: ReductionData,
    pub minimal_model: WeierstrassEq,
}

fn check_input(e: &WeierstrassEq, ctx: &ValuationContext) -> Result<(), EllipticError> {
    match ctx {
        ValuationContext::Param(t) => {
            if let Some(v) = e.vars().iter().find(|v| *v != t) {
                return Err(EllipticError::Precondition(format!("unexpected variable `{v}`")));
            }
        }
        ValuationContext::Prime(_) => {
            if !e.vars().is_empty() {
                return Err(EllipticError::Precondition("prime-kind curves take numeric coefficients".into()));
            }
        }
    }
    for c in e.coefficients() {
        if ord_poly(c, ctx)? < Valuation::Finite(0) {
            return Err(EllipticError::NonIntegralModel);
        }
    }
    if e.quantities().delta.is_zero() {
        return Err(EllipticError::SingularGenericFiber);
    }
    Ok(())
}

/// Runs Tate's algorithm. Over `Q[t]_(t)` and at primes `p >= 5` the conductor
/// exponent is the tame value; at 2 and 3 it is taken from Ogg's formula and the
/// excess over the tame value is reported as the Swan part.
pub fn tate_algorithm(e: &WeierstrassEq, ctx: &ValuationContext) -> Result<TateResult, EllipticError> {
    check_input(e, ctx)?;
    let out = match ctx {
        ValuationContext::Prime(p) => tate::run_tate(&PadicRing::new(*p), e)?,
        ValuationContext::Param(t) => {
            let vars = [t.as_str()];
            let lifted = WeierstrassEq::new(e.coefficients().map(|c| c.with_vars(&vars).expect("checked")))?;
            tate::run_tate(&ParamRing::new(t), &lifted)?
        }
    };
    let m = out.kodaira.components();
    let tame = out.kodaira.tame_conductor();
    let wild_possible = matches!(ctx, ValuationContext::Prime(2 | 3)) && out.kodaira.is_additive();
    let f = if wild_possible { (out.ord_delta + 1).saturating_sub(m) } else { tame };
    let reduction = ReductionData { kodaira: out.kodaira, m, f, ord_delta_min: out.ord_delta, swan: f - tame.min(f) };
    Ok(TateResult { reduction, minimal_model: out.model })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OggReport {
    pub ord: u32,
    pub m: u32,
    pub f: u32,
    pub pass: bool,
}

/// Compares `ord Δ_min` with `m - 1 + f` where `f` is known independently.
pub fn ogg_check(e: &WeierstrassEq, ctx: &ValuationContext) -> Result<OggReport, EllipticError> {
    if matches!(ctx, ValuationContext::Prime(2 | 3)) {
        return Err(EllipticError::Precondition("f is defined through Ogg's formula at 2 and 3".into()));
    }
    let r = tate_algorithm(e, ctx)?.reduction;
    Ok(OggReport { ord: r.ord_delta_min, m: r.m, f: r.f, pass: r.ord_delta_min + 1 == r.m + r.f })
}

/// Like [`ogg_check`], but a failing identity is an error.
pub fn assert_ogg(e: &WeierstrassEq, ctx: &ValuationContext) -> Result<OggReport, EllipticError> {
    let r = ogg_check(e, ctx)?;
    if r.pass {
        Ok(r)
    } else {
        Err(EllipticError::AssertionFailure { ord: r.ord, m: r.m, f: r.f })
    }
}

/// The Swan part of the conductor exponent; reported, not independently derived.
pub fn swan_report(e: &WeierstrassEq, ctx: &ValuationContext) -> Result<u32, EllipticError> {
    Ok(tate_algorithm(e, ctx)?.reduction.swan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn param(a: [&str; 5]) -> WeierstrassEq {
        WeierstrassEq::parse(&a, &["t"]).unwrap()
    }

    fn tc() -> ValuationContext {
        ValuationContext::param("t")
    }

    fn red(e: &WeierstrassEq, ctx: &ValuationContext) -> (String, u32, u32, u32) {
        let r = tate_algorithm(e, ctx).unwrap().reduction;
        (r.kodaira.to_string(), r.ord_delta_min, r.m, r.f)
    }

    #[test]
    fn kodaira_symbols_round_trip() {
        for k in [Kodaira::I0, Kodaira::In(4), Kodaira::II, Kodaira::InStar(2), Kodaira::IIStar, Kodaira::I0Star] {
            assert_eq!(k.to_string().parse::<Kodaira>().unwrap(), k);
        }
        assert!("I*".parse::<Kodaira>().is_err());
        assert!("V".parse::<Kodaira>().is_err());
    }

    #[test]
    fn additive_types_over_function_field() {
        let cases = [
            (["0", "0", "0", "0", "t"], ("II", 2, 1, 2)),
            (["0", "0", "0", "t", "0"], ("III", 3, 2, 2)),
            (["0", "0", "0", "0", "t^2"], ("IV", 4, 3, 2)),
            (["0", "0", "0", "-t^2", "0"], ("I0*", 6, 5, 2)),
            (["0", "t", "0", "0", "t^4"], ("I1*", 7, 6, 2)),
            (["0", "0", "0", "0", "t^4"], ("IV*", 8, 7, 2)),
            (["0", "0", "0", "t^3", "0"], ("III*", 9, 8, 2)),
            (["0", "0", "0", "0", "t^5"], ("II*", 10, 9, 2)),
        ];
        for (a, (k, ord, m, f)) in cases {
            assert_eq!(red(&param(a), &tc()), (k.to_string(), ord, m, f), "{a:?}");
        }
    }

    #[test]
    fn multiplicative_and_good() {
        for n in 1..=5 {
            let a6 = format!("t^{n}");
            let e = WeierstrassEq::parse(&["0", "1", "0", "0", a6.as_str()], &["t"]).unwrap();
            assert_eq!(red(&e, &tc()), (format!("I{n}"), n, n, 1));
        }
        assert_eq!(red(&param(["0", "0", "0", "-1", "0"]), &tc()), ("I0".to_string(), 0, 1, 0));
    }

    #[test]
    fn non_minimal_models_are_reduced() {
        let r = tate_algorithm(&param(["0", "0", "0", "0", "t^7"]), &tc()).unwrap();
        assert_eq!((r.reduction.kodaira, r.reduction.ord_delta_min), (Kodaira::II, 2));
        assert_eq!(r.minimal_model, param(["0", "0", "0", "0", "t"]));
        assert_eq!(red(&param(["0", "0", "0", "0", "t^6 + t^7"]), &tc()).0, "I0");
    }

    #[test]
    fn prime_examples() {
        let c5 = ValuationContext::prime(5).unwrap();
        assert_eq!(red(&WeierstrassEq::from_ints([0, 0, 0, 0, 5]), &c5), ("II".to_string(), 2, 1, 2));
        // 11a1 has split multiplicative reduction I5 at 11
        let c11 = ValuationContext::prime(11).unwrap();
        assert_eq!(red(&WeierstrassEq::from_ints([0, -1, 1, -10, -20]), &c11), ("I5".to_string(), 5, 5, 1));
        assert_eq!(red(&WeierstrassEq::from_ints([0, -1, 1, -10, -20]), &c5), ("I0".to_string(), 0, 1, 0));
    }

    #[test]
    fn wild_primes_are_reported() {
        let c2 = ValuationContext::prime(2).unwrap();
        let c3 = ValuationContext::prime(3).unwrap();
        // conductor 32: ord 6, f = 5
        let r = tate_algorithm(&WeierstrassEq::from_ints([0, 0, 0, -1, 0]), &c2).unwrap().reduction;
        assert_eq!((r.kodaira, r.m, r.f, r.swan), (Kodaira::III, 2, 5, 3));
        // conductor 36 = 2^2 3^2
        let e = WeierstrassEq::from_ints([0, 0, 0, 0, 1]);
        let r2 = tate_algorithm(&e, &c2).unwrap().reduction;
        assert_eq!((r2.kodaira, r2.f, r2.swan), (Kodaira::IV, 2, 0));
        let r3 = tate_algorithm(&e, &c3).unwrap().reduction;
        assert_eq!((r3.kodaira, r3.f, r3.swan), (Kodaira::III, 2, 0));
        assert!(ogg_check(&e, &c3).is_err());
        assert_eq!(swan_report(&WeierstrassEq::from_ints([0, 0, 0, 0, 5]), &ValuationContext::prime(5).unwrap()).unwrap(), 0);
    }

    #[test]
    fn input_errors() {
        let c5 = ValuationContext::prime(5).unwrap();
        let e = WeierstrassEq::from_rationals([rat(0), rat(0), rat(0), crate::exact::ratio(1, 5), rat(1)]);
        assert_eq!(tate_algorithm(&e, &c5).unwrap_err(), EllipticError::NonIntegralModel);
        let e = WeierstrassEq::from_ints([0, 0, 0, 0, 0]);
        assert_eq!(tate_algorithm(&e, &c5).unwrap_err(), EllipticError::SingularGenericFiber);
    }

    #[test]
    fn ogg_passes() {
        let r = assert_ogg(&param(["0", "0", "0", "0", "t^2"]), &tc()).unwrap();
        assert_eq!(r, OggReport { ord: 4, m: 3, f: 2, pass: true });
    }
}

use serde::{Deserialize, Serialize};

use crate::exact::ValuationContext;

use super::{EllipticError, Kodaira, ReductionData, WeierstrassEq};

pub const CURVES_JSON: &str = include_str!("../../data/curves.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedReduction {
    #[serde(rename = "type")]
    pub kodaira: Kodaira,
    pub m: u32,
    pub f: u32,
    pub ord: u32,
}

impl ExpectedReduction {
    pub fn matches(&self, r: &ReductionData) -> bool {
        self.kodaira == r.kodaira && self.m == r.m && self.f == r.f && self.ord == r.ord_delta_min
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub name: String,
    pub a1: String,
    pub a2: String,
    pub a3: String,
    pub a4: String,
    pub a6: String,
    pub ctx: ValuationContext,
    pub expected: ExpectedReduction,
}

impl CurveEntry {
    pub fn curve(&self) -> Result<WeierstrassEq, EllipticError> {
        let vars: Vec<&str> = match &self.ctx {
            ValuationContext::Param(t) => vec![t.as_str()],
            ValuationContext::Prime(_) => Vec::new(),
        };
        WeierstrassEq::parse(&[&self.a1, &self.a2, &self.a3, &self.a4, &self.a6], &vars)
    }
}

pub fn load_curves(json: &str) -> Result<Vec<CurveEntry>, EllipticError> {
    serde_json::from_str(json).map_err(|e| EllipticError::Precondition(format!("curve corpus: {e}")))
}

pub fn builtin_curves() -> Vec<CurveEntry> {
    load_curves(CURVES_JSON).expect("bundled corpus parses")
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{Monomial, MultiPoly};
use crate::parse::parse_poly;

use super::{DVRFamily, DegenerationError, FormulaLedger};

pub const FAMILIES_JSON: &str = include_str!("../../data/families.json");

fn default_vars() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn default_param() -> String {
    "t".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedLedger {
    pub ord_delta: i64,
    pub total_milnor: u64,
    pub chi_special: i64,
    pub chi_generic: i64,
    pub rhs: i64,
}

impl ExpectedLedger {
    pub fn matches(&self, l: &FormulaLedger) -> bool {
        self.ord_delta == l.ord_delta
            && self.total_milnor == l.total_milnor()
            && self.chi_special == l.chi_special
            && self.chi_generic == l.chi_generic
            && self.rhs == l.rhs
    }
}

/// One family: coefficients of `x^i y^j z^k` as polynomials in the parameter,
/// keyed by `"i,j,k"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub d: u32,
    #[serde(default = "default_vars")]
    pub vars: Vec<String>,
    #[serde(default = "default_param")]
    pub param: String,
    pub terms: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_ledger: Option<ExpectedLedger>,
}

impl CorpusEntry {
    pub fn polynomial(&self) -> Result<MultiPoly, DegenerationError> {
        let err = |m: String| DegenerationError::Corpus(format!("{}: {m}", self.name));
        if self.vars.len() != 3 {
            return Err(err("expected three form variables".into()));
        }
        let mut all = self.vars.clone();
        all.push(self.param.clone());
        let mut f = MultiPoly::zero(&all);
        for (key, coeff) in &self.terms {
            let exps: Vec<u32> = key
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(format!("bad exponent key `{key}`")))?;
            if exps.len() != 3 || exps.iter().sum::<u32>() != self.d {
                return Err(err(format!("key `{key}` is not an exponent triple of degree {}", self.d)));
            }
            let c = parse_poly(coeff, std::slice::from_ref(&self.param)).map_err(|e| err(format!("term `{key}`: {e}")))?;
            let mono = MultiPoly::from_terms(&all, [(Monomial::new(vec![exps[0], exps[1], exps[2], 0]), crate::exact::rat(1))]);
            f = &f + &(&mono * &c.with_vars(&all)?);
        }
        Ok(f)
    }

    pub fn family(&self) -> Result<DVRFamily, DegenerationError> {
        let form = crate::resultants::HomogeneousForm::new(self.polynomial()?, &self.vars, self.d)?;
        DVRFamily::new(form, crate::exact::ValuationContext::param(self.param.clone()))
    }
}

pub fn load_corpus(json: &str) -> Result<Vec<CorpusEntry>, DegenerationError> {
    serde_json::from_str(json).map_err(|e| DegenerationError::Corpus(e.to_string()))
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    load_corpus(FAMILIES_JSON).expect("bundled corpus parses")
}

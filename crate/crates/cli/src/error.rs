use std::fmt;

use disc_core::chern::ChernError;
use disc_core::degeneration::DegenerationError;
use disc_core::elliptic::EllipticError;
use disc_core::exact::ExactError;
use disc_core::parse::ParseError;
use disc_core::resultants::ResultantError;
use disc_core::singularity::SingularityError;
use serde_json::{json, Value};

/// Exit code 1: the mathematics ran and an identity came out false.
/// Exit code 2: the input was rejected or the run could not finish.
#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub code: i32,
    pub detail: Option<Value>,
}

impl CliError {
    pub fn input(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), code: 2, detail: None }
    }

    pub fn failure(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), code: 1, detail: None }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut e = json!({ "kind": self.kind, "message": self.message, "exit_code": self.code });
        if let Some(d) = &self.detail {
            e["detail"] = d.clone();
        }
        json!({ "error": e })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::input("parse_error", e.to_string())
            .with_detail(json!({ "line": e.line, "column": e.column, "expected": e.expected }))
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::Cancelled => CliError::input("deadline_exceeded", e.to_string()),
            _ => CliError::input("invalid_input", e.to_string()),
        }
    }
}

impl From<ResultantError> for CliError {
    fn from(e: ResultantError) -> Self {
        match e {
            ResultantError::Exact(x) => x.into(),
            ResultantError::AssertionFailure { .. } => CliError::failure("assertion_failure", e.to_string()),
            ResultantError::PerturbationFailure { .. } => CliError::failure("perturbation_failure", e.to_string()),
            ResultantError::ZeroDiscriminant => CliError::input("zero_discriminant", e.to_string()),
            _ => CliError::input("invalid_input", e.to_string()),
        }
    }
}

impl From<SingularityError> for CliError {
    fn from(e: SingularityError) -> Self {
        let kind = match &e {
            SingularityError::Exact(x) => return x.clone().into(),
            SingularityError::NotSingular(_) => "not_singular",
            SingularityError::NotIsolated { .. } => "not_isolated",
            SingularityError::NotZeroDimensional => "not_zero_dimensional",
            SingularityError::NonReduced => "non_reduced",
            SingularityError::Precondition(_) => "invalid_input",
        };
        CliError::input(kind, e.to_string())
    }
}

impl From<DegenerationError> for CliError {
    fn from(e: DegenerationError) -> Self {
        let kind = match e {
            DegenerationError::Resultant(x) => return x.into(),
            DegenerationError::Singularity(x) => return x.into(),
            DegenerationError::Exact(x) => return x.into(),
            DegenerationError::AssertionFailure(ledger) => {
                let detail = serde_json::to_value(&*ledger).unwrap_or(Value::Null);
                return CliError::failure("assertion_failure", "ledger identity failed").with_detail(detail);
            }
            DegenerationError::IdenticallySingular => "identically_singular",
            DegenerationError::NotIsolatedTotalSpace => "not_isolated_total_space",
            DegenerationError::NonRationalSingularity => "non_rational_singularity",
            DegenerationError::NonReducedSpecialFiber => "non_reduced_special_fiber",
            DegenerationError::Precondition(_) => "invalid_input",
            DegenerationError::Corpus(_) => "invalid_family",
        };
        CliError::input(kind, e.to_string())
    }
}

impl From<EllipticError> for CliError {
    fn from(e: EllipticError) -> Self {
        match e {
            EllipticError::Exact(x) => x.into(),
            EllipticError::AssertionFailure { .. } => CliError::failure("assertion_failure", e.to_string()),
            EllipticError::Internal(_) => CliError::failure("internal_error", e.to_string()),
            EllipticError::NonIntegralModel => CliError::input("non_integral_model", e.to_string()),
            EllipticError::SingularGenericFiber => CliError::input("singular_generic_fiber", e.to_string()),
            EllipticError::Precondition(_) => CliError::input("invalid_input", e.to_string()),
        }
    }
}

impl From<ChernError> for CliError {
    fn from(e: ChernError) -> Self {
        match e {
            ChernError::AssertionFailure { .. } => CliError::failure("assertion_failure", e.to_string()),
            ChernError::Precondition(_) => CliError::input("invalid_input", e.to_string()),
        }
    }
}

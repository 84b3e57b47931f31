mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use disc_core::chern::dual_degree_veronese;
use disc_core::degeneration::{family_discriminant, load_corpus, verify_formula, CorpusEntry, DVRFamily, FormulaLedger};
use disc_core::elliptic::{ogg_check, tate_algorithm, WeierstrassEq};
use disc_core::exact::{Deadline, ValuationContext};
use disc_core::parse::{parse_poly, parse_rational};
use disc_core::resultants::{discriminant_degree, discriminant_with, HomogeneousForm};
use disc_core::singularity::{fiber_singular_points, local_milnor};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use error::CliError;

const DEADLINE_ENV: &str = "DISC_DEADLINE_SECS";

#[derive(Parser)]
#[command(name = "disc", version, about = "Discriminants, Milnor numbers and reduction types, exactly")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant of a homogeneous form.
    Disc {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Names of symbolic coefficients appearing in the form.
        #[arg(long, value_delimiter = ',')]
        coeffs: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Degree, when it cannot be read off (for example the zero form).
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Discriminant of a family over a discrete valuation ring, with its order.
    DiscOrd {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Milnor number of an isolated singular point.
    Milnor {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Singular points of a plane curve.
    SingularPoints {
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Conductor-discriminant ledger of a family of plane curves.
    VerifyCdf {
        /// A family entry, or a list of them, in the corpus JSON format.
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        family: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long, default_value = "t")]
        param: String,
    },
    /// Kodaira type, component count and conductor exponent.
    Tate(CurveArgs),
    /// Checks ord of the minimal discriminant against m - 1 + f.
    VerifyOgg(CurveArgs),
    /// Degree of the dual of P^n under O(d), from Chern classes.
    DualDegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: i64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CtxArgs {
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    param: Option<String>,
}

impl CtxArgs {
    fn context(&self) -> Result<ValuationContext, CliError> {
        match (&self.prime, &self.param) {
            (Some(p), None) => Ok(ValuationContext::prime(*p)?),
            (None, Some(t)) => Ok(ValuationContext::param(t.clone())),
            _ => Err(CliError::input("usage", "give exactly one of --prime and --param")),
        }
    }
}

#[derive(Args)]
struct CurveArgs {
    /// Weierstrass coefficients `a1,a2,a3,a4,a6`.
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
    #[command(flatten)]
    ctx: CtxArgs,
}

impl CurveArgs {
    fn parse(&self) -> Result<(WeierstrassEq, ValuationContext), CliError> {
        let ctx = self.ctx.context()?;
        let parts: Vec<&str> = self.curve.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(CliError::input("usage", format!("--curve needs 5 coefficients, got {}", parts.len())));
        }
        let vars: Vec<&str> = match &ctx {
            ValuationContext::Param(t) => vec![t.as_str()],
            ValuationContext::Prime(_) => Vec::new(),
        };
        for (name, s) in ["a1", "a2", "a3", "a4", "a6"].iter().zip(&parts) {
            parse_poly(s, &vars).map_err(|e| CliError::from(e).with_detail(json!({ "coefficient": name })))?;
        }
        Ok((WeierstrassEq::parse(&parts, &vars)?, ctx))
    }
}

/// A successful run prints `value`; `failure` turns it into exit code 1.
struct Outcome {
    value: Value,
    failure: Option<CliError>,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, failure: None }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_form(vars: &[String], extra: &[String], poly: &str, degree: Option<u32>) -> Result<HomogeneousForm, CliError> {
    let all: Vec<String> = vars.iter().chain(extra).cloned().collect();
    let p = parse_poly(poly, &all)?;
    Ok(match degree {
        Some(d) => HomogeneousForm::new(p, vars, d)?,
        None => HomogeneousForm::infer(p, vars)?,
    })
}

fn ledger_outcome(ledgers: Vec<(String, FormulaLedger)>, single: bool) -> Outcome {
    let failed: Vec<&str> = ledgers.iter().filter(|(_, l)| !l.pass).map(|(n, _)| n.as_str()).collect();
    let failure = (!failed.is_empty())
        .then(|| CliError::failure("assertion_failure", format!("ledger identity fails for {}", failed.join(", "))));
    let value = if single {
        to_value(&ledgers[0].1)
    } else {
        Value::Array(ledgers.iter().map(|(n, l)| json!({ "name": n, "ledger": to_value(l) })).collect())
    };
    Outcome { value, failure }
}

fn run(cmd: Command, deadline: Deadline) -> Result<Outcome, CliError> {
    match cmd {
        Command::Disc { vars, coeffs, poly, degree } => {
            let form = parse_form(&vars, &coeffs, &poly, degree)?;
            let r = discriminant_with(&form, deadline)?;
            Ok(json!({
                "discriminant": r.value.to_string(),
                "n": form.n(),
                "d": form.degree(),
                "degree_law": discriminant_degree(form.n(), form.degree()),
                "method": to_value(&r.method),
            })
            .into())
        }
        Command::DiscOrd { ctx, vars, poly } => {
            let ctx = ctx.context()?;
            let extra: Vec<String> = match &ctx {
                ValuationContext::Param(t) => vec![t.clone()],
                ValuationContext::Prime(_) => Vec::new(),
            };
            let family = DVRFamily::new(parse_form(&vars, &extra, &poly, None)?, ctx)?;
            let r = family_discriminant(&family, deadline)?;
            Ok(json!({ "ord": r.ord, "delta": r.delta.to_string() }).into())
        }
        Command::Milnor { vars, poly, point } => {
            let f = parse_poly(&poly, &vars)?;
            let pt = point.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
            if pt.len() != vars.len() {
                return Err(CliError::input("usage", format!("point has {} coordinates for {} variables", pt.len(), vars.len())));
            }
            Ok(json!({ "milnor": local_milnor(&f, &pt)? }).into())
        }
        Command::SingularPoints { vars, poly } => {
            let form = parse_form(&vars, &[], &poly, None)?;
            let s = fiber_singular_points(&form, deadline)?;
            if s.non_rational_residue > 0 {
                return Err(CliError::input("non_rational_singularity", "some singular points are not defined over Q")
                    .with_detail(json!({ "rational_points": to_value(&s.points), "non_rational_residue": s.non_rational_residue })));
            }
            let mut points = s.points;
            points.sort_by(|a, b| (&a.chart, &a.coordinates).cmp(&(&b.chart, &b.coordinates)));
            Ok(to_value(&points).into())
        }
        Command::VerifyCdf { family, poly, vars, param } => {
            let (entries, single) = match (family, poly) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::input("io_error", format!("{}: {e}", path.display())))?;
                    let json: Value = serde_json::from_str(&text).map_err(|e| CliError::input("invalid_family", e.to_string()))?;
                    let single = json.is_object();
                    let list = if single { format!("[{text}]") } else { text };
                    (load_corpus(&list)?, single)
                }
                (None, Some(p)) => {
                    let all: Vec<String> = vars.iter().chain([&param]).cloned().collect();
                    let f = DVRFamily::parameter(parse_poly(&p, &all)?, &vars, &param)?;
                    let ledger = verify_formula(&f, deadline)?;
                    return Ok(ledger_outcome(vec![("poly".into(), ledger)], true));
                }
                (None, None) => return Err(CliError::input("usage", "give --family or --poly")),
            };
            let ledgers = entries
                .iter()
                .map(|e: &CorpusEntry| Ok((e.name.clone(), verify_formula(&e.family()?, deadline)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(ledger_outcome(ledgers, single))
        }
        Command::Tate(c) => {
            let (e, ctx) = c.parse()?;
            Ok(to_value(&tate_algorithm(&e, &ctx)?.reduction).into())
        }
        Command::VerifyOgg(c) => {
            let (e, ctx) = c.parse()?;
            let r = ogg_check(&e, &ctx)?;
            let failure = (!r.pass).then(|| CliError::failure("assertion_failure", "ord differs from m - 1 + f"));
            Ok(Outcome { value: to_value(&r), failure })
        }
        Command::DualDegree { n, d } => {
            let v = dual_degree_veronese(n, d)?;
            Ok(v.to_i64().map(Value::from).unwrap_or_else(|| Value::String(v.to_string())).into())
        }
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail(&CliError::input("usage", e.to_string().trim_end()));
        }
    };
    match run(cli.command, Deadline::from_env(DEADLINE_ENV)) {
        Ok(out) => {
            println!("{}", output::render(&out.value, cli.pretty));
            match out.failure {
                Some(e) => fail(&e),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => fail(&e),
    }
}

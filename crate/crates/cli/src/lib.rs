//! Command-line front end for `darboux-core`.
//!
//! Exit codes: 0 success, 1 unparsable input, 2 violated mathematical
//! precondition (or a certificate that fails verification), 3 internal error.

pub mod certificate;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use darboux_core::darboux::{cofactor_of, is_common_darboux, solve_fixed_cofactor, DarbouxError};
use darboux_core::expr::{format_poly, parse_poly};
use darboux_core::pair::{analyze, verify_outcome, PairError, PairOutcome};
use darboux_core::{delta, DerivError, Derivation, Poly};
use serde_json::json;

use certificate::Certificate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<PairError> for CliError {
    fn from(e: PairError) -> Self {
        match e {
            PairError::Internal(m) => CliError::Internal(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<DerivError> for CliError {
    fn from(e: DerivError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<DarbouxError> for CliError {
    fn from(e: DarbouxError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "darboux",
    version,
    about = "Common Darboux polynomials of commuting planar derivations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// First derivation as "P,Q" for P*d/dx + Q*d/dy
    #[arg(long, allow_hyphen_values = true)]
    pub d1: String,
    /// Second derivation as "P,Q"
    #[arg(long, allow_hyphen_values = true)]
    pub d2: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SingleArgs {
    /// Derivation as "P,Q" for P*d/dx + Q*d/dy
    #[arg(long, allow_hyphen_values = true)]
    pub d: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a common Darboux polynomial or a Jacobian-pair certificate
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
        /// Replace a common Darboux polynomial by its square-free part
        #[arg(long)]
        squarefree: bool,
    },
    /// Lie bracket [d1, d2]
    Bracket(PairArgs),
    /// Divergence dP/dx + dQ/dy
    Div(SingleArgs),
    /// Determinant P1*Q2 - Q1*P2
    Delta(PairArgs),
    /// Split d = mu * d0 with d0 reduced
    Reduce(SingleArgs),
    /// Cofactor lambda with d(f) = lambda * f
    Cofactor {
        #[command(flatten)]
        d: SingleArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Basis of nonconstant F with deg F <= n and d(F) = lambda * F
    Solve {
        #[command(flatten)]
        d: SingleArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// u with d = D_u, for divergence-free d
    Potential(SingleArgs),
    /// Check a certificate produced by `analyze --json`
    Verify {
        certificate: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

pub fn parse_poly_arg(src: &str) -> Result<Poly, CliError> {
    parse_poly(src).map_err(|e| CliError::Parse(format!("{src:?}: {e}")))
}

/// Parses `"P,Q"`.
pub fn parse_derivation(src: &str) -> Result<Derivation, CliError> {
    let mut parts = src.split(',');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(p), Some(q), None) => Ok(Derivation::new(parse_poly_arg(p)?, parse_poly_arg(q)?)),
        _ => Err(CliError::Parse(format!(
            "derivation must be two comma-separated polynomials \"P,Q\", got {src:?}"
        ))),
    }
}

fn derivation_text(d: &Derivation) -> String {
    format!("{},{}", format_poly(&d.p), format_poly(&d.q))
}

fn render(json: bool, value: serde_json::Value, text: String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        text
    }
}

/// Runs a parsed command and returns its standard output.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { pair, squarefree } => cmd_analyze(&pair, squarefree),
        Command::Bracket(a) => {
            let (d1, d2) = (parse_derivation(&a.d1)?, parse_derivation(&a.d2)?);
            let b = d1.bracket(&d2);
            Ok(render(
                a.json,
                json!({"p": format_poly(&b.p), "q": format_poly(&b.q)}),
                derivation_text(&b),
            ))
        }
        Command::Div(a) => {
            let d = parse_derivation(&a.d)?;
            let v = format_poly(&d.divergence());
            Ok(render(a.json, json!({ "divergence": v }), v))
        }
        Command::Delta(a) => {
            let v = format_poly(&delta(&parse_derivation(&a.d1)?, &parse_derivation(&a.d2)?));
            Ok(render(a.json, json!({ "delta": v }), v))
        }
        Command::Reduce(a) => {
            let (d0, mu) = parse_derivation(&a.d)?.reduce()?;
            Ok(render(
                a.json,
                json!({"d0": {"p": format_poly(&d0.p), "q": format_poly(&d0.q)}, "mu": format_poly(&mu)}),
                format!("d0: {}\nmu: {}", derivation_text(&d0), format_poly(&mu)),
            ))
        }
        Command::Cofactor { d, f } => {
            let der = parse_derivation(&d.d)?;
            let lambda = format_poly(&cofactor_of(&der, &parse_poly_arg(&f)?)?);
            Ok(render(d.json, json!({ "cofactor": lambda }), lambda))
        }
        Command::Solve {
            d,
            lambda,
            max_degree,
        } => {
            let der = parse_derivation(&d.d)?;
            let lambda = parse_poly_arg(&lambda)?;
            if max_degree == 0 {
                return Err(CliError::Domain("--max-degree must be at least 1".into()));
            }
            let basis: Vec<String> = solve_fixed_cofactor(&der, &lambda, max_degree)
                .iter()
                .map(format_poly)
                .collect();
            Ok(render(d.json, json!({ "basis": basis }), basis.join("\n")))
        }
        Command::Potential(a) => {
            let u = format_poly(&parse_derivation(&a.d)?.potential()?);
            Ok(render(a.json, json!({ "potential": u }), u))
        }
        Command::Verify { certificate, json } => cmd_verify(&certificate, json),
    }
}

pub fn cmd_analyze(args: &PairArgs, squarefree: bool) -> Result<String, CliError> {
    let d1 = parse_derivation(&args.d1)?;
    let d2 = parse_derivation(&args.d2)?;
    let mut outcome = analyze(&d1, &d2)?;
    if squarefree {
        if let PairOutcome::CommonDarboux { f, branch, .. } = &outcome {
            let f = f
                .squarefree_part()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let (lambda1, lambda2) = is_common_darboux(&d1, &d2, &f).map_err(|e| {
                CliError::Internal(format!("square-free part lost Darboux property: {e}"))
            })?;
            outcome = PairOutcome::CommonDarboux {
                f,
                lambda1,
                lambda2,
                branch: *branch,
            };
        }
    }
    if !verify_outcome(&d1, &d2, &outcome) {
        return Err(CliError::Internal(format!(
            "certificate failed verification: {outcome:?}"
        )));
    }
    let cert = Certificate::new(&d1, &d2, &outcome, true);
    if args.json {
        return Ok(serde_json::to_string_pretty(&cert).expect("serializable"));
    }
    let mut lines = vec![format!("kind: {}", cert.kind)];
    if let Some(cd) = &cert.common_darboux {
        lines.push(format!("branch: {}", cd.branch));
        lines.push(format!("f: {}", cd.f));
        lines.push(format!("lambda1: {}", cd.lambda1));
        lines.push(format!("lambda2: {}", cd.lambda2));
    }
    if let Some(jp) = &cert.jacobian_pair {
        lines.push(format!("u1: {}", jp.u1));
        lines.push(format!("u2: {}", jp.u2));
        lines.push(format!("c: {}", jp.c));
    }
    lines.push("verified: true".into());
    Ok(lines.join("\n"))
}

pub fn cmd_verify(path: &std::path::Path, json: bool) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("reading {}: {e}", path.display())))?;
    let cert: Certificate = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("invalid certificate JSON: {e}")))?;
    let (d1, d2, outcome) = cert.decode()?;
    if verify_outcome(&d1, &d2, &outcome) {
        Ok(render(json, json!({ "valid": true }), "valid".into()))
    } else {
        Err(CliError::Domain(
            "invalid: certificate does not verify".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivation_syntax() {
        assert_eq!(
            parse_derivation("x, -y").unwrap(),
            Derivation::new(Poly::x(), -Poly::y())
        );
        assert!(matches!(parse_derivation("x"), Err(CliError::Parse(_))));
        assert!(matches!(parse_derivation("x,y,1"), Err(CliError::Parse(_))));
        assert!(matches!(parse_derivation("x,(y"), Err(CliError::Parse(_))));
    }

    #[test]
    fn error_mapping() {
        assert_eq!(CliError::from(PairError::NotCommuting).exit_code(), 2);
        assert_eq!(
            CliError::from(PairError::Internal("x".into())).exit_code(),
            3
        );
        assert_eq!(CliError::Parse(String::new()).exit_code(), 1);
    }

    #[test]
    fn squarefree_post_processing() {
        // d1 = x^2 E, d2 = y^2 E: f/g = x^2/y^2, so the raw certificate is x^2
        let e = Derivation::euler();
        let args = PairArgs {
            d1: derivation_text(&e.mul_poly(&Poly::x().pow(2))),
            d2: derivation_text(&e.mul_poly(&Poly::y().pow(2))),
            json: false,
        };
        let raw = cmd_analyze(&args, false).unwrap();
        assert!(raw.contains("f: x^2"), "{raw}");
        let sf = cmd_analyze(&args, true).unwrap();
        assert!(sf.contains("f: x\n"), "{sf}");
        assert!(sf.contains("lambda1: x^2\n"), "{sf}");
    }
}

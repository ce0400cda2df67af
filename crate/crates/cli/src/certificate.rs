//! JSON certificate emitted by `analyze` and consumed by `verify`.

use darboux_core::expr::{format_poly, format_rat, parse_poly};
use darboux_core::pair::{Branch, PairOutcome};
use darboux_core::{Derivation, Poly, Rat};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub d1: DerivationJson,
    pub d2: DerivationJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonDarbouxJson {
    pub f: String,
    pub lambda1: String,
    pub lambda2: String,
    pub branch: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianPairJson {
    pub u1: String,
    pub u2: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub inputs: Inputs,
    pub common_darboux: Option<CommonDarbouxJson>,
    pub jacobian_pair: Option<JacobianPairJson>,
    pub verified: bool,
}

pub const COMMON_DARBOUX: &str = "common_darboux";
pub const JACOBIAN_PAIR: &str = "jacobian_pair";

impl DerivationJson {
    pub fn from_derivation(d: &Derivation) -> Self {
        DerivationJson {
            p: format_poly(&d.p),
            q: format_poly(&d.q),
        }
    }

    pub fn to_derivation(&self) -> Result<Derivation, CliError> {
        Ok(Derivation::new(
            parse_field(&self.p)?,
            parse_field(&self.q)?,
        ))
    }
}

fn parse_field(src: &str) -> Result<Poly, CliError> {
    parse_poly(src).map_err(|e| CliError::Parse(format!("in certificate field {src:?}: {e}")))
}

fn parse_branch(s: &str) -> Result<Branch, CliError> {
    match s {
        "delta_nonconstant" => Ok(Branch::DeltaNonconstant),
        "degenerate_kernel" => Ok(Branch::DegenerateKernel),
        other => Err(CliError::Parse(format!("unknown branch {other:?}"))),
    }
}

impl Certificate {
    pub fn new(d1: &Derivation, d2: &Derivation, outcome: &PairOutcome, verified: bool) -> Self {
        let inputs = Inputs {
            d1: DerivationJson::from_derivation(d1),
            d2: DerivationJson::from_derivation(d2),
        };
        match outcome {
            PairOutcome::CommonDarboux {
                f,
                lambda1,
                lambda2,
                branch,
            } => Certificate {
                kind: COMMON_DARBOUX.into(),
                inputs,
                common_darboux: Some(CommonDarbouxJson {
                    f: format_poly(f),
                    lambda1: format_poly(lambda1),
                    lambda2: format_poly(lambda2),
                    branch: branch.as_str().into(),
                }),
                jacobian_pair: None,
                verified,
            },
            PairOutcome::JacobianPair { u1, u2, c } => Certificate {
                kind: JACOBIAN_PAIR.into(),
                inputs,
                common_darboux: None,
                jacobian_pair: Some(JacobianPairJson {
                    u1: format_poly(u1),
                    u2: format_poly(u2),
                    c: format_rat(c),
                }),
                verified,
            },
        }
    }

    /// Rebuilds the derivations and the claimed outcome.
    pub fn decode(&self) -> Result<(Derivation, Derivation, PairOutcome), CliError> {
        let d1 = self.inputs.d1.to_derivation()?;
        let d2 = self.inputs.d2.to_derivation()?;
        let outcome = match (
            self.kind.as_str(),
            &self.common_darboux,
            &self.jacobian_pair,
        ) {
            (COMMON_DARBOUX, Some(cd), None) => PairOutcome::CommonDarboux {
                f: parse_field(&cd.f)?,
                lambda1: parse_field(&cd.lambda1)?,
                lambda2: parse_field(&cd.lambda2)?,
                branch: parse_branch(&cd.branch)?,
            },
            (JACOBIAN_PAIR, None, Some(jp)) => {
                let c = parse_field(&jp.c)?;
                let c: Rat = c.as_constant().ok_or_else(|| {
                    CliError::Parse(format!("c must be a rational constant, got {:?}", jp.c))
                })?;
                PairOutcome::JacobianPair {
                    u1: parse_field(&jp.u1)?,
                    u2: parse_field(&jp.u2)?,
                    c,
                }
            }
            (kind, _, _) => {
                return Err(CliError::Parse(format!(
                    "certificate kind {kind:?} does not match its populated section"
                )))
            }
        };
        Ok((d1, d2, outcome))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use darboux_core::pair::{analyze, verify_outcome};

    #[test]
    fn schema_shape() {
        let out = analyze(&Derivation::dx(), &Derivation::dy()).unwrap();
        let cert = Certificate::new(&Derivation::dx(), &Derivation::dy(), &out, true);
        let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["kind"], "jacobian_pair");
        assert_eq!(v["inputs"]["d1"]["p"], "1");
        assert_eq!(v["inputs"]["d1"]["q"], "0");
        assert!(v["common_darboux"].is_null());
        assert_eq!(v["jacobian_pair"]["u1"], "-y");
        assert_eq!(v["jacobian_pair"]["u2"], "x");
        assert_eq!(v["jacobian_pair"]["c"], "1");
        assert_eq!(v["verified"], true);
    }

    #[test]
    fn decode_round_trip() {
        let d1 = Derivation::euler();
        let d2 = Derivation::new(Poly::x(), -Poly::y());
        let out = analyze(&d1, &d2).unwrap();
        let cert = Certificate::new(&d1, &d2, &out, true);
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        let (e1, e2, o) = back.decode().unwrap();
        assert_eq!((&e1, &e2, &o), (&d1, &d2, &out));
        assert!(verify_outcome(&e1, &e2, &o));
    }

    #[test]
    fn mismatched_kind_is_rejected() {
        let out = analyze(&Derivation::dx(), &Derivation::dy()).unwrap();
        let mut cert = Certificate::new(&Derivation::dx(), &Derivation::dy(), &out, true);
        cert.kind = COMMON_DARBOUX.into();
        assert!(matches!(cert.decode(), Err(CliError::Parse(_))));
    }
}

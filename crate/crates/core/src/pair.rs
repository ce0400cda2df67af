//! Commuting pairs of derivations.
//!
//! For commuting `d1`, `d2` that are linearly independent over `Q`, with
//! `delta = P1 Q2 - Q1 P2`:
//!
//! * `delta` nonconstant: `d_i(delta) = delta * div(d_i)`, so `delta` itself is
//!   a common Darboux polynomial.
//! * `delta` a nonzero constant: both derivations are divergence-free, hence
//!   Jacobian derivations of their potentials, and `det J(u1, u2) = delta`.
//! * `delta = 0`: `d1 = f d0`, `d2 = g d0` with `d0` reduced and `d0(f/g) = 0`.
//!   Writing `f/g = p/q` in lowest terms, `d0(p) = mu p` and `d0(q) = mu q`
//!   for a common `mu`, so `p` (or `q`) is a common Darboux polynomial.

use num_traits::Zero;
use thiserror::Error;

use crate::darboux::{cofactor_of, DarbouxError, DarbouxWitness};
use crate::deriv::{delta, jacobian_det, DerivError, Derivation};
use crate::poly::{Poly, Rat, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("derivations do not commute")]
    NotCommuting,
    #[error("derivations are linearly dependent over Q")]
    LinearlyDependentOverK,
    #[error("derivations are not dependent over Q[x, y] (delta = {0})")]
    NotDependent(Poly),
    #[error("the zero derivation is not allowed")]
    ZeroDerivation,
    #[error("witness does not certify the derivation")]
    InvalidWitness,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// `d1 = f * d0`, `d2 = g * d0` with `d0` reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependentDecomposition {
    pub d0: Derivation,
    pub f: Poly,
    pub g: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The determinant of the pair is the certificate.
    DeltaNonconstant,
    /// The pair is dependent over `Q[x, y]`; the certificate comes from the
    /// kernel element `f/g` of the common reduced derivation.
    DegenerateKernel,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::DeltaNonconstant => "delta_nonconstant",
            Branch::DegenerateKernel => "degenerate_kernel",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    CommonDarboux {
        f: Poly,
        lambda1: Poly,
        lambda2: Poly,
        branch: Branch,
    },
    JacobianPair {
        u1: Poly,
        u2: Poly,
        c: Rat,
    },
}

impl From<DerivError> for PairError {
    fn from(e: DerivError) -> Self {
        match e {
            DerivError::ZeroDerivation => PairError::ZeroDerivation,
            other => PairError::Internal(other.to_string()),
        }
    }
}

pub fn decompose_dependent(
    d1: &Derivation,
    d2: &Derivation,
) -> Result<DependentDecomposition, PairError> {
    if d1.is_zero() || d2.is_zero() {
        return Err(PairError::ZeroDerivation);
    }
    let det = delta(d1, d2);
    if !det.is_zero() {
        return Err(PairError::NotDependent(det));
    }
    let (d0, f) = d1.reduce()?;
    // d2 is a polynomial multiple of d0; read the multiplier off a nonzero
    // component and confirm it on the other one.
    let g = if !d0.p.is_zero() {
        d2.p.divide_exact(&d0.p)
    } else {
        d2.q.divide_exact(&d0.q)
    }
    .map_err(|e| PairError::Internal(format!("d2 is not a multiple of d0: {e}")))?;
    if &g * &d0.p != d2.p || &g * &d0.q != d2.q {
        return Err(PairError::Internal("d2 is not a multiple of d0".into()));
    }
    Ok(DependentDecomposition { d0, f, g })
}

fn check_preconditions(d1: &Derivation, d2: &Derivation) -> Result<(), PairError> {
    if d1.is_zero() || d2.is_zero() {
        return Err(PairError::ZeroDerivation);
    }
    if !d1.commutes_with(d2) {
        return Err(PairError::NotCommuting);
    }
    if !d1.k_linearly_independent(d2) {
        return Err(PairError::LinearlyDependentOverK);
    }
    Ok(())
}

/// Decides whether a commuting, `Q`-independent pair has a common Darboux
/// polynomial, returning a certificate for whichever alternative holds.
///
/// When `delta` is nonconstant the common Darboux branch is taken even if
/// the pair could also be described some other way.
pub fn analyze(d1: &Derivation, d2: &Derivation) -> Result<PairOutcome, PairError> {
    check_preconditions(d1, d2)?;
    let det = delta(d1, d2);

    let outcome = if det.is_zero() {
        degenerate_kernel(d1, d2)?
    } else if let Some(c) = det.as_constant() {
        let u1 = d1.potential()?;
        let u2 = d2.potential()?;
        PairOutcome::JacobianPair { u1, u2, c }
    } else {
        PairOutcome::CommonDarboux {
            lambda1: d1.divergence(),
            lambda2: d2.divergence(),
            f: det,
            branch: Branch::DeltaNonconstant,
        }
    };

    if !verify_outcome(d1, d2, &outcome) {
        return Err(PairError::Internal(format!(
            "certificate failed verification: {outcome:?}"
        )));
    }
    Ok(outcome)
}

fn degenerate_kernel(d1: &Derivation, d2: &Derivation) -> Result<PairOutcome, PairError> {
    let dec = decompose_dependent(d1, d2)?;
    let ratio = RatFunc::new(dec.f, dec.g)
        .map_err(|e| PairError::Internal(format!("building f/g: {e}")))?;
    // Q-independence makes f/g nonconstant, so one side is nonconstant.
    let f = if !ratio.num().is_constant() {
        ratio.num().clone()
    } else if !ratio.den().is_constant() {
        ratio.den().clone()
    } else {
        return Err(PairError::LinearlyDependentOverK);
    };
    let cof = |d: &Derivation| {
        cofactor_of(d, &f).map_err(|e| PairError::Internal(format!("kernel numerator: {e}")))
    };
    Ok(PairOutcome::CommonDarboux {
        lambda1: cof(d1)?,
        lambda2: cof(d2)?,
        f,
        branch: Branch::DegenerateKernel,
    })
}

/// Checks a certificate using only polynomial arithmetic and derivation
/// application.
pub fn verify_outcome(d1: &Derivation, d2: &Derivation, outcome: &PairOutcome) -> bool {
    match outcome {
        PairOutcome::CommonDarboux {
            f,
            lambda1,
            lambda2,
            ..
        } => !f.is_constant() && d1.apply(f) == lambda1 * f && d2.apply(f) == lambda2 * f,
        PairOutcome::JacobianPair { u1, u2, c } => {
            !c.is_zero()
                && Derivation::jacobian(u1) == *d1
                && Derivation::jacobian(u2) == *d2
                && jacobian_det(u1, u2) == Poly::constant(c.clone())
        }
    }
}

/// Transfers the existence of a Darboux polynomial from `d` to a derivation
/// `d1` commuting with it.
///
/// If the pair shares a Darboux polynomial that one is returned. Otherwise
/// the pair is a Jacobian pair `(D_u, D_u1)` and `u1` is a first integral of
/// `d1`, returned with cofactor 0. `d` having a Darboux polynomial does not
/// rule this out: `d/dx` has `y`, and commutes with `y^2 d/dx + d/dy`.
pub fn propagate(
    d: &Derivation,
    w: &DarbouxWitness,
    d1: &Derivation,
) -> Result<DarbouxWitness, PairError> {
    if d.is_zero() || d1.is_zero() {
        return Err(PairError::ZeroDerivation);
    }
    if !w.certifies(d) {
        return Err(PairError::InvalidWitness);
    }
    if !d.commutes_with(d1) {
        return Err(PairError::NotCommuting);
    }
    if !d.k_linearly_independent(d1) {
        // d1 = a * d for a constant a, so w.f carries over with cofactor a * lambda.
        return DarbouxWitness::for_derivation(d1, w.f.clone()).map_err(|e: DarbouxError| {
            PairError::Internal(format!("dependent derivation lost witness: {e}"))
        });
    }
    match analyze(d, d1)? {
        PairOutcome::CommonDarboux { f, lambda2, .. } => Ok(DarbouxWitness {
            f,
            cofactor: lambda2,
        }),
        PairOutcome::JacobianPair { u2, .. } => Ok(DarbouxWitness {
            f: u2,
            cofactor: Poly::zero(),
        }),
    }
}

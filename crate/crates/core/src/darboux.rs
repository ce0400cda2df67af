//! Darboux polynomials: `F` nonconstant with `D(F) = lambda * F`.
//!
//! With both `F` and `lambda` unknown the condition is bilinear, so the
//! solver here fixes the cofactor and solves the remaining linear system
//! over a bounded-degree monomial basis.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::deriv::Derivation;
use crate::linalg::RatMatrix;
use crate::poly::{Monomial, Poly, PolyError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DarbouxError {
    #[error("Darboux polynomials must be nonconstant")]
    ConstantInput,
    #[error("polynomial does not divide its image under the derivation")]
    NotDarboux,
    #[error("polynomial is not a Darboux polynomial of both derivations")]
    NotCommon,
}

/// A certified pair `(f, cofactor)` with `D(f) = cofactor * f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DarbouxWitness {
    pub f: Poly,
    pub cofactor: Poly,
}

impl DarbouxWitness {
    /// Computes the cofactor of `f` for `d`.
    pub fn for_derivation(d: &Derivation, f: Poly) -> Result<Self, DarbouxError> {
        let cofactor = cofactor_of(d, &f)?;
        Ok(DarbouxWitness { f, cofactor })
    }

    pub fn certifies(&self, d: &Derivation) -> bool {
        !self.f.is_constant() && d.apply(&self.f) == &self.cofactor * &self.f
    }
}

/// The `lambda` with `d(f) = lambda * f`.
pub fn cofactor_of(d: &Derivation, f: &Poly) -> Result<Poly, DarbouxError> {
    if f.is_constant() {
        return Err(DarbouxError::ConstantInput);
    }
    match d.apply(f).divide_exact(f) {
        Ok(lambda) => Ok(lambda),
        Err(PolyError::NotDivisible) => Err(DarbouxError::NotDarboux),
        Err(e) => unreachable!("nonconstant divisor: {e}"),
    }
}

/// Both cofactors when `f` is Darboux for `d1` and `d2`.
pub fn is_common_darboux(
    d1: &Derivation,
    d2: &Derivation,
    f: &Poly,
) -> Result<(Poly, Poly), DarbouxError> {
    let l1 = cofactor_of(d1, f).map_err(not_common)?;
    let l2 = cofactor_of(d2, f).map_err(not_common)?;
    Ok((l1, l2))
}

fn not_common(e: DarbouxError) -> DarbouxError {
    match e {
        DarbouxError::NotDarboux => DarbouxError::NotCommon,
        other => other,
    }
}

/// Basis of `{ F : deg F <= max_degree, d(F) = lambda * F }` modulo constants.
///
/// The basis is in reduced echelon form with respect to the graded-lex
/// monomial order: every element is monic, has a distinct leading monomial,
/// and no element contains another's leading monomial. Elements are returned
/// in increasing order of leading monomial. Constant solutions (present
/// exactly when `lambda = 0`) are projected out.
pub fn solve_fixed_cofactor(d: &Derivation, lambda: &Poly, max_degree: u32) -> Vec<Poly> {
    // Columns run from the largest monomial down, so row reduction pivots on
    // leading monomials.
    let mut basis = Monomial::up_to_degree(max_degree);
    basis.reverse();

    let images: Vec<Poly> = basis
        .iter()
        .map(|&m| {
            let mono = Poly::monomial(Rat::from_integer(1.into()), m.x, m.y);
            d.apply(&mono) - lambda * &mono
        })
        .collect();
    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (m, _) in img.terms() {
            let n = row_index.len();
            row_index.entry(*m).or_insert(n);
        }
    }
    let mut system = RatMatrix::zeros(row_index.len(), basis.len());
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            system.set(row_index[m], col, c.clone());
        }
    }

    let kernel = system.nullspace();
    if kernel.is_empty() {
        return Vec::new();
    }
    let echelon = RatMatrix::from_rows(kernel).row_reduced();
    let constant_col = basis.len() - 1;
    let mut out: Vec<Poly> = echelon
        .iter()
        .filter(|row| row[..constant_col].iter().any(|c| !c.is_zero()))
        .map(|row| Poly::from_terms(row.iter().zip(&basis).map(|(c, m)| (c.clone(), m.x, m.y))))
        .collect();
    out.reverse();
    out
}

/// Polynomial first integrals of degree at most `max_degree`, modulo constants.
pub fn first_integrals(d: &Derivation, max_degree: u32) -> Vec<Poly> {
    solve_fixed_cofactor(d, &Poly::zero(), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn x() -> Poly {
        Poly::x()
    }
    fn y() -> Poly {
        Poly::y()
    }
    fn c(n: i64) -> Poly {
        Poly::int(n)
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(
            cofactor_of(&Derivation::euler(), &(x() * y())).unwrap(),
            c(2)
        );
        assert_eq!(
            cofactor_of(&Derivation::dx(), &x()),
            Err(DarbouxError::NotDarboux)
        );
        let u = x().pow(2) * y() + y();
        assert!(cofactor_of(&Derivation::jacobian(&u), &u)
            .unwrap()
            .is_zero());
        assert_eq!(
            cofactor_of(&Derivation::dx(), &c(4)),
            Err(DarbouxError::ConstantInput)
        );
    }

    #[test]
    fn cofactor_degree_bound() {
        let d = Derivation::new(x().pow(3) * y(), y().pow(2));
        let f = x() * y();
        let l = cofactor_of(&d, &f).unwrap();
        assert!(l.total_degree().unwrap() < d.degree().unwrap());
    }

    #[test]
    fn solver_examples() {
        let e = Derivation::euler();
        assert_eq!(solve_fixed_cofactor(&e, &c(1), 1), vec![y(), x()]);
        assert!(solve_fixed_cofactor(&e, &Poly::zero(), 3).is_empty());
        let ydx = Derivation::new(y(), Poly::zero());
        assert_eq!(
            solve_fixed_cofactor(&ydx, &Poly::zero(), 2),
            vec![y(), y().pow(2)]
        );
    }

    #[test]
    fn first_integral_examples() {
        assert_eq!(first_integrals(&Derivation::dx(), 2), vec![y(), y().pow(2)]);
        let hyper = Derivation::new(x(), -y());
        assert_eq!(first_integrals(&hyper, 2), vec![x() * y()]);
        assert!(first_integrals(&Derivation::euler(), 2).is_empty());
    }

    #[test]
    fn solver_keeps_constant_terms_of_nonconstant_solutions() {
        // d/dx kernel up to degree 1 is {1, y}; modulo constants that is {y}
        assert_eq!(first_integrals(&Derivation::dx(), 1), vec![y()]);
        // D = x dx: x - 1 is not a first integral, but for lambda = 1 the
        // eigenspace of degree <= 1 is spanned by x alone
        let xdx = Derivation::new(x(), Poly::zero());
        assert_eq!(solve_fixed_cofactor(&xdx, &c(1), 1), vec![x()]);
        // D = (x + 1) dx has eigenvector x + 1 for lambda = 1
        let shifted = Derivation::new(x() + c(1), Poly::zero());
        assert_eq!(solve_fixed_cofactor(&shifted, &c(1), 1), vec![x() + c(1)]);
    }

    #[test]
    fn common_darboux_examples() {
        let e = Derivation::euler();
        let h = Derivation::new(x(), -y());
        assert_eq!(
            is_common_darboux(&e, &h, &(x() * y())).unwrap(),
            (c(2), Poly::zero())
        );
        assert_eq!(
            is_common_darboux(&Derivation::dx(), &Derivation::dy(), &x()),
            Err(DarbouxError::NotCommon)
        );
        let f = x() + y();
        let l = cofactor_of(&e, &f).unwrap();
        assert_eq!(is_common_darboux(&e, &e, &f).unwrap(), (l.clone(), l));
    }

    #[test]
    fn witness_checks() {
        let w = DarbouxWitness::for_derivation(&Derivation::euler(), x()).unwrap();
        assert_eq!(w.cofactor, c(1));
        assert!(w.certifies(&Derivation::euler()));
        assert!(!w.certifies(&Derivation::dx()));
        let scaled = Derivation::euler().scale(&rat_int(3));
        assert!(!w.certifies(&scaled));
    }
}

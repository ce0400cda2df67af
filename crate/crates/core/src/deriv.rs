//! Derivations `P d/dx + Q d/dy` of `Q[x, y]`.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::poly::{primitive_unit, Monomial, Poly, Rat, RatFunc, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivError {
    #[error("the zero derivation is not allowed here")]
    ZeroDerivation,
    #[error("derivation is not divergence-free (divergence {0})")]
    NotDivergenceFree(Poly),
}

/// The derivation `p * d/dx + q * d/dy`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Derivation {
    pub p: Poly,
    pub q: Poly,
}

impl Derivation {
    pub fn new(p: Poly, q: Poly) -> Self {
        Derivation { p, q }
    }

    pub fn zero() -> Self {
        Derivation::default()
    }

    /// `d/dx`
    pub fn dx() -> Self {
        Derivation::new(Poly::one(), Poly::zero())
    }

    /// `d/dy`
    pub fn dy() -> Self {
        Derivation::new(Poly::zero(), Poly::one())
    }

    /// The Euler derivation `x d/dx + y d/dy`.
    pub fn euler() -> Self {
        Derivation::new(Poly::x(), Poly::y())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        match (self.p.total_degree(), self.q.total_degree()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn scale(&self, c: &Rat) -> Derivation {
        Derivation::new(self.p.scale(c), self.q.scale(c))
    }

    /// `f * self`, as a module element.
    pub fn mul_poly(&self, f: &Poly) -> Derivation {
        Derivation::new(f * &self.p, f * &self.q)
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation::new(&self.p + &other.p, &self.q + &other.q)
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation::new(&self.p - &other.p, &self.q - &other.q)
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        &self.p * &f.partial(Var::X) + &self.q * &f.partial(Var::Y)
    }

    /// Quotient rule on a reduced fraction.
    pub fn apply_ratfunc(&self, r: &RatFunc) -> RatFunc {
        let (f, g) = (r.num(), r.den());
        let num = &self.apply(f) * g - f * &self.apply(g);
        RatFunc::new(num, g * g).expect("denominator of a RatFunc is nonzero")
    }

    pub fn bracket(&self, other: &Derivation) -> Derivation {
        Derivation::new(
            self.apply(&other.p) - other.apply(&self.p),
            self.apply(&other.q) - other.apply(&self.q),
        )
    }

    pub fn commutes_with(&self, other: &Derivation) -> bool {
        self.bracket(other).is_zero()
    }

    pub fn divergence(&self) -> Poly {
        self.p.partial(Var::X) + self.q.partial(Var::Y)
    }

    /// Splits off `mu = gcd(p, q)` so that `self = mu * d0` with `d0` reduced.
    ///
    /// The scalar freedom is fixed by making the coefficient vector of `d0`
    /// (the terms of `p`, then the terms of `q`, each from the leading term
    /// down) integer-primitive with a positive first entry.
    pub fn reduce(&self) -> Result<(Derivation, Poly), DerivError> {
        let g = self
            .p
            .gcd(&self.q)
            .map_err(|_| DerivError::ZeroDerivation)?;
        let div = |c: &Poly| c.divide_exact(&g).expect("gcd divides both components");
        let d0 = Derivation::new(div(&self.p), div(&self.q));
        let unit = d0.unit();
        let d0 = d0.scale(&unit.recip());
        Ok((d0, g.scale(&unit)))
    }

    /// The scalar `u` with `self = u * primitive`, in the sense of [`Derivation::reduce`].
    fn unit(&self) -> Rat {
        let leading_first = self
            .p
            .terms()
            .rev()
            .chain(self.q.terms().rev())
            .map(|(_, c)| c);
        primitive_unit(leading_first).unwrap_or_else(Rat::one)
    }

    pub fn is_reduced(&self) -> bool {
        matches!(self.p.gcd(&self.q), Ok(g) if g.is_constant())
    }

    fn coefficient_vector(&self, keys: &[(u8, Monomial)]) -> Vec<Rat> {
        keys.iter()
            .map(|&(which, m)| {
                if which == 0 {
                    self.p.coeff(m)
                } else {
                    self.q.coeff(m)
                }
            })
            .collect()
    }

    /// True iff no nontrivial `a * self + b * other` with constants `a, b` vanishes.
    pub fn k_linearly_independent(&self, other: &Derivation) -> bool {
        let mut keys: Vec<(u8, Monomial)> = Vec::new();
        for d in [self, other] {
            keys.extend(d.p.terms().map(|(m, _)| (0u8, *m)));
            keys.extend(d.q.terms().map(|(m, _)| (1u8, *m)));
        }
        keys.sort();
        keys.dedup();
        if keys.is_empty() {
            return false;
        }
        let m = RatMatrix::from_rows(vec![
            self.coefficient_vector(&keys),
            other.coefficient_vector(&keys),
        ]);
        m.rank() == 2
    }

    /// The Jacobian derivation `f -> det J(u, f)`, i.e. `-u_y d/dx + u_x d/dy`.
    pub fn jacobian(u: &Poly) -> Derivation {
        Derivation::new(-u.partial(Var::Y), u.partial(Var::X))
    }

    /// The `u` with `u(0, 0) = 0` and `Derivation::jacobian(u) == self`.
    ///
    /// `u = int_0^x q(t, y) dt - int_0^y p(0, t) dt`.
    pub fn potential(&self) -> Result<Poly, DerivError> {
        let div = self.divergence();
        if !div.is_zero() {
            return Err(DerivError::NotDivergenceFree(div));
        }
        let along_x = self.q.integrate(Var::X);
        let p_on_axis = self.p.compose(&Poly::zero(), &Poly::y());
        Ok(along_x - p_on_axis.integrate(Var::Y))
    }
}

/// `P1 * Q2 - Q1 * P2`.
pub fn delta(d1: &Derivation, d2: &Derivation) -> Poly {
    &d1.p * &d2.q - &d1.q * &d2.p
}

/// `u_x v_y - u_y v_x`.
pub fn jacobian_det(u: &Poly, v: &Poly) -> Poly {
    u.partial(Var::X) * v.partial(Var::Y) - u.partial(Var::Y) * v.partial(Var::X)
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*dx + ({})*dy", self.p, self.q)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
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
    fn apply_examples() {
        assert_eq!(Derivation::euler().apply(&(x() * y())), c(2) * x() * y());
        assert!(Derivation::new(x().pow(3), y() + c(1))
            .apply(&c(5))
            .is_zero());
        assert_eq!(Derivation::dx().apply(&(x().pow(2) + y())), c(2) * x());
    }

    #[test]
    fn apply_ratfunc_examples() {
        let r = RatFunc::new(x(), y()).unwrap();
        assert!(Derivation::euler().apply_ratfunc(&r).is_zero());
        let f = x().pow(2) * y() + c(3);
        let d = Derivation::new(y(), x());
        let image = d.apply_ratfunc(&RatFunc::from_poly(f.clone()));
        assert_eq!(image, RatFunc::from_poly(d.apply(&f)));
        let inv = RatFunc::new(Poly::one(), x()).unwrap();
        let img = Derivation::dx().apply_ratfunc(&inv);
        assert_eq!(img.num(), &c(-1));
        assert_eq!(img.den(), &x().pow(2));
    }

    #[test]
    fn bracket_examples() {
        assert!(Derivation::dx().bracket(&Derivation::dy()).is_zero());
        let d = Derivation::new(x() * y(), y().pow(2) - x());
        assert!(d.bracket(&d).is_zero());
        let xdx = Derivation::new(x(), Poly::zero());
        assert_eq!(Derivation::dx().bracket(&xdx), Derivation::dx());
    }

    #[test]
    fn divergence_examples() {
        assert!(Derivation::dx().divergence().is_zero());
        assert_eq!(Derivation::euler().divergence(), c(2));
        assert!(Derivation::jacobian(&(x().pow(3) * y()))
            .divergence()
            .is_zero());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&Derivation::dx(), &Derivation::dy()), c(1));
        let d = Derivation::new(x() + y(), x());
        assert!(delta(&d, &d).is_zero());
        let d2 = Derivation::new(x(), -y());
        assert_eq!(delta(&Derivation::euler(), &d2), c(-2) * x() * y());
    }

    #[test]
    fn reduce_examples() {
        let d = Derivation::new(x().pow(2), x() * y());
        assert_eq!(d.reduce().unwrap(), (Derivation::euler(), x()));
        assert_eq!(Derivation::dx().reduce().unwrap(), (Derivation::dx(), c(1)));
        let d = Derivation::new(c(3) * x(), c(3) * y());
        assert_eq!(d.reduce().unwrap(), (Derivation::euler(), c(3)));
        assert_eq!(Derivation::zero().reduce(), Err(DerivError::ZeroDerivation));
    }

    #[test]
    fn reduce_moves_sign_into_mu() {
        let d = Derivation::new(-x().pow(2), c(2) * x());
        let (d0, mu) = d.reduce().unwrap();
        assert_eq!(d0, Derivation::new(x(), c(-2)));
        assert_eq!(mu, -x());
        // p = 0: normalization is decided by q
        let d = Derivation::new(Poly::zero(), c(-4) * y());
        let (d0, mu) = d.reduce().unwrap();
        assert_eq!(d0, Derivation::dy());
        assert_eq!(mu, c(-4) * y());
    }

    #[test]
    fn independence_examples() {
        assert!(Derivation::dx().k_linearly_independent(&Derivation::dy()));
        assert!(!Derivation::dx().k_linearly_independent(&Derivation::dx().scale(&rat_int(2))));
        let a = Derivation::new(x(), Poly::zero());
        let b = Derivation::new(x(), c(1));
        assert!(a.k_linearly_independent(&b));
        assert!(!Derivation::zero().k_linearly_independent(&Derivation::dx()));
    }

    #[test]
    fn jacobian_derivation_examples() {
        assert_eq!(Derivation::jacobian(&x()), Derivation::dy());
        assert_eq!(Derivation::jacobian(&-y()), Derivation::dx());
        assert_eq!(
            Derivation::jacobian(&(x() * y())),
            Derivation::new(-x(), y())
        );
    }

    #[test]
    fn jacobian_det_examples() {
        assert_eq!(jacobian_det(&-y(), &x()), c(1));
        let u = x().pow(2) * y() - y();
        assert!(jacobian_det(&u, &u).is_zero());
        assert_eq!(jacobian_det(&x(), &(y().pow(3) + x())), c(3) * y().pow(2));
    }

    #[test]
    fn potential_examples() {
        assert_eq!(Derivation::dx().potential().unwrap(), -y());
        assert_eq!(Derivation::dy().potential().unwrap(), x());
        assert_eq!(Derivation::new(-x(), y()).potential().unwrap(), x() * y());
        assert!(matches!(
            Derivation::euler().potential(),
            Err(DerivError::NotDivergenceFree(_))
        ));
    }
}

//! Sparse bivariate polynomials over the rationals.
//!
//! A [`Poly`] is a map from exponent pairs to nonzero [`Rat`] coefficients.
//! Terms are kept in graded-lexicographic order (total degree first, then
//! the exponent of `x`), so iteration, printing and "leading term" are all
//! deterministic.

mod gcd;
mod ratfunc;
mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use ratfunc::RatFunc;

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair `x^x * y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn exponent(&self, var: Var) -> u32 {
        match var {
            Var::X => self.x,
            Var::Y => self.y,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.x >= other.x && self.y >= other.y {
            Some(Monomial::new(self.x - other.x, self.y - other.y))
        } else {
            None
        }
    }

    /// All monomials of total degree at most `max_degree`, ascending.
    pub fn up_to_degree(max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            for x in 0..=d {
                out.push(Monomial::new(x, d - x));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(rat_int(c))
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Poly::monomial(Rat::one(), 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Poly::x(),
            Var::Y => Poly::y(),
        }
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(i, j), c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from `(coefficient, x-exponent, y-exponent)` triples,
    /// merging repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rat, u32, u32)>,
    {
        let mut p = Poly::zero();
        for (c, i, j) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coeff(Monomial::ONE))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree())
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rat, m: Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(&m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: Var) -> Poly {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let dm = match var {
                Var::X => Monomial::new(m.x - 1, m.y),
                Var::Y => Monomial::new(m.x, m.y - 1),
            };
            out.insert(dm, c * rat_int(e as i64));
        }
        Poly { terms: out }
    }

    /// Antiderivative in `var` with no terms free of `var`.
    pub fn integrate(&self, var: Var) -> Poly {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var) + 1;
            let im = match var {
                Var::X => Monomial::new(m.x + 1, m.y),
                Var::Y => Monomial::new(m.x, m.y + 1),
            };
            out.insert(im, c / rat_int(e as i64));
        }
        Poly { terms: out }
    }

    pub fn evaluate(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            acc += c
                * num_traits::pow(x.clone(), m.x as usize)
                * num_traits::pow(y.clone(), m.y as usize);
        }
        acc
    }

    /// Substitutes polynomials for both variables.
    pub fn compose(&self, x: &Poly, y: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            acc = &acc + &(&x.pow(m.x) * &y.pow(m.y)).scale(c);
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division by leading terms; because the leading
    /// monomial of a product is the product of leading monomials, a stuck
    /// leading term proves the division is not exact.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let (lm, lc) = match divisor.terms.iter().next_back() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(PolyError::ZeroDivisor),
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            let qm = rm.checked_div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = rc / &lc;
            rem = &rem - &divisor.mul_monomial(&qc, qm);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divide_exact(self).is_ok()
    }

    /// Splits `self` into `unit * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    ///
    /// Returns `None` for the zero polynomial.
    pub fn unit_normal(&self) -> Option<(Rat, Poly)> {
        let unit = primitive_unit(self.terms.values().rev())?;
        let inv = unit.recip();
        Some((unit, self.scale(&inv)))
    }

    /// Integer-primitive form with positive leading coefficient; zero stays zero.
    pub fn normalized(&self) -> Poly {
        self.unit_normal().map(|(_, p)| p).unwrap_or_default()
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        gcd::gcd(self, other)
    }

    /// `a / gcd(a, a_x, a_y)`, normalized.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let g = self
            .gcd(&self.partial(Var::X))?
            .gcd(&self.partial(Var::Y))?;
        Ok(self.divide_exact(&g)?.normalized())
    }
}

/// The scalar `u` such that dividing the sequence by `u` leaves coprime
/// integers whose first nonzero entry is positive. `None` if all entries vanish.
pub fn primitive_unit<'a, I>(coeffs: I) -> Option<Rat>
where
    I: IntoIterator<Item = &'a Rat>,
{
    let coeffs: Vec<&Rat> = coeffs.into_iter().filter(|c| !c.is_zero()).collect();
    let first = coeffs.first()?;
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num_gcd = coeffs
        .iter()
        .map(|c| (*c * &den).to_integer())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    let unit = Rat::new(num_gcd, den);
    Some(if first.is_negative() { -unit } else { unit })
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", crate::expr::format_poly(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_poly(self))
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

//! Random polynomials and commuting pairs of derivations.
//!
//! Every pair produced here commutes by construction; callers should still
//! check `bracket == 0` before relying on it.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::deriv::Derivation;
use crate::poly::{Monomial, Poly, Rat};

/// Small nonzero rational in `[-bound, bound]` with denominator at most `den`.
pub fn small_rat<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> Rat {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            return Rat::new(n.into(), rng.gen_range(1..=den).into());
        }
    }
}

/// Random polynomial of total degree at most `max_degree` with at most
/// `max_terms` terms. May be zero when `max_terms` is 0.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, max_terms: usize) -> Poly {
    let monomials = Monomial::up_to_degree(max_degree);
    let n = rng.gen_range(0..=max_terms.min(monomials.len()));
    Poly::from_terms(
        monomials
            .choose_multiple(rng, n)
            .map(|m| (small_rat(rng, 5, 3), m.x, m.y)),
    )
}

pub fn random_nonzero_poly<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: u32,
    max_terms: usize,
) -> Poly {
    loop {
        let p = random_poly(rng, max_degree, max_terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_nonconstant_poly<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: u32,
    max_terms: usize,
) -> Poly {
    loop {
        let p = random_poly(rng, max_degree.max(1), max_terms.max(1));
        if !p.is_constant() {
            return p;
        }
    }
}

pub fn random_derivation<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: u32,
    max_terms: usize,
) -> Derivation {
    loop {
        let d = Derivation::new(
            random_poly(rng, max_degree, max_terms),
            random_poly(rng, max_degree, max_terms),
        );
        if !d.is_zero() {
            return d;
        }
    }
}

/// Univariate polynomial `sum c_k t^k` evaluated at `t`.
fn poly_in<R: Rng + ?Sized>(rng: &mut R, t: &Poly, degree: u32) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=degree {
        if k == 0 || rng.gen_bool(0.7) {
            acc = acc + t.pow(k).scale(&small_rat(rng, 4, 2));
        }
    }
    acc
}

/// A pair `(f d0, g d0)` with `d0(f/g) = 0`, hence commuting and dependent
/// over `Q[x, y]`.
///
/// `d0` is either a Jacobian derivation `D_h` (then `f = a(h) s`,
/// `g = b(h) s`) or a scalar multiple of the Euler derivation (then `f`, `g`
/// share a cofactor `s` times homogeneous parts of equal degree).
pub fn scaled_pair<R: Rng + ?Sized>(rng: &mut R) -> (Derivation, Derivation) {
    loop {
        let s = if rng.gen_bool(0.5) {
            Poly::one()
        } else {
            random_nonzero_poly(rng, 1, 2)
        };
        let (d0, f, g) = if rng.gen_bool(0.5) {
            let h = random_nonconstant_poly(rng, 2, 3);
            let d0 = Derivation::jacobian(&h);
            let (da, db) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            let a = poly_in(rng, &h, da);
            let b = poly_in(rng, &h, db);
            (d0, &a * &s, &b * &s)
        } else {
            let k = rng.gen_range(0..=2);
            let d0 = Derivation::euler().scale(&small_rat(rng, 3, 2));
            (d0, &homogeneous(rng, k) * &s, &homogeneous(rng, k) * &s)
        };
        if d0.is_zero() || f.is_zero() || g.is_zero() {
            continue;
        }
        return (d0.mul_poly(&f), d0.mul_poly(&g));
    }
}

fn homogeneous<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> Poly {
    loop {
        let mut terms = Vec::new();
        for i in 0..=degree {
            if rng.gen_bool(0.6) {
                terms.push((small_rat(rng, 4, 2), i, degree - i));
            }
        }
        let p = Poly::from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Potentials `(u1, u2)` of a polynomial map with constant nonzero Jacobian.
///
/// Built from the triangular maps `u1 = a x + p(y)`, `u2 = b y + q(u1)`
/// (Jacobian `a b`), optionally precomposed with an invertible linear
/// substitution.
pub fn unit_jacobian_map<R: Rng + ?Sized>(
    rng: &mut R,
    p_degree: u32,
    q_degree: u32,
) -> (Poly, Poly) {
    let (x, y) = if rng.gen_bool(0.5) {
        (Poly::x(), Poly::y())
    } else {
        let t = small_rat(rng, 3, 1);
        (&Poly::x() + &Poly::y().scale(&t), Poly::y())
    };
    let a = small_rat(rng, 3, 2);
    let b = small_rat(rng, 3, 2);
    let p = poly_in(rng, &y, p_degree);
    let u1 = &x.scale(&a) + &p;
    let q = poly_in(rng, &u1, q_degree);
    let u2 = &y.scale(&b) + &q;
    // Drop constant terms so the potentials vanish at the origin.
    let strip = |u: Poly| &u - &Poly::constant(u.coeff(Monomial::ONE));
    (strip(u1), strip(u2))
}

/// `(D_u1, D_u2)` for a unit-Jacobian map: commuting, `delta` a nonzero constant.
pub fn jacobian_pair<R: Rng + ?Sized>(rng: &mut R) -> (Derivation, Derivation) {
    let (dp, dq) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let (u1, u2) = unit_jacobian_map(rng, dp, dq);
    (Derivation::jacobian(&u1), Derivation::jacobian(&u2))
}

/// `(D_u1, a(u1) D_u2 + b(u1) D_u1)`: commuting with `delta = c a(u1)`,
/// nonconstant whenever `a` is.
pub fn twisted_jacobian_pair<R: Rng + ?Sized>(rng: &mut R) -> (Derivation, Derivation) {
    let (u1, u2) = unit_jacobian_map(rng, 1, 1);
    let x1 = Derivation::jacobian(&u1);
    let x2 = Derivation::jacobian(&u2);
    let (da, db) = (rng.gen_range(0..=2), rng.gen_range(0..=1));
    let a = poly_in(rng, &u1, da);
    let b = poly_in(rng, &u1, db);
    (x1.clone(), x2.mul_poly(&a).add(&x1.mul_poly(&b)))
}

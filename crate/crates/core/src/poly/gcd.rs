//! Bivariate gcd over `Q`.
//!
//! The inputs are viewed as polynomials in `y` with coefficients in `Q[x]`.
//! Contents are split off with univariate gcds and the primitive parts are
//! run through a primitive pseudo-remainder sequence.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::univariate::UniPoly;
use super::{Poly, PolyError, Rat};

/// `coeffs[j]` is the `Q[x]` coefficient of `y^j`; no trailing zeros.
type YPoly = Vec<UniPoly>;

fn to_ypoly(p: &Poly) -> YPoly {
    let mut rows: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let row = rows.entry(m.y).or_default();
        let i = m.x as usize;
        if row.len() <= i {
            row.resize(i + 1, Rat::zero());
        }
        row[i] = c.clone();
    }
    let len = rows.keys().next_back().map_or(0, |&j| j as usize + 1);
    let mut out = vec![UniPoly::default(); len];
    for (j, row) in rows {
        out[j as usize] = UniPoly::new(row);
    }
    out
}

fn from_ypoly(p: &[UniPoly]) -> Poly {
    Poly::from_terms(p.iter().enumerate().flat_map(|(j, u)| {
        u.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (c.clone(), i as u32, j as u32))
    }))
}

fn trim(p: &mut YPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[UniPoly]) -> UniPoly {
    p.iter().fold(UniPoly::default(), |acc, c| acc.gcd(c))
}

/// Divides out the `Q[x]` content and scales to a monic leading coefficient.
fn primitive_part(p: &[UniPoly]) -> YPoly {
    let cont = content(p);
    let mut out: YPoly = p
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&cont);
            debug_assert!(r.is_zero());
            q
        })
        .collect();
    trim(&mut out);
    if let Some(lc) = out.last().and_then(|c| c.lead()).cloned() {
        let inv = lc.recip();
        out = out.iter().map(|c| c.scale(&inv)).collect();
    }
    out
}

/// Pseudo-remainder of `a` by `b` in `y`; `b` nonzero.
fn pseudo_rem(a: &[UniPoly], b: &[UniPoly]) -> YPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: YPoly = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: YPoly = r.iter().map(|c| c.mul(lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[shift + k] = next[shift + k].sub(&bc.mul(&lr));
        }
        trim(&mut next);
        r = next;
    }
    r
}

pub(super) fn gcd(a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(PolyError::BothZero),
        (true, false) => return Ok(b.normalized()),
        (false, true) => return Ok(a.normalized()),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one());
    }
    let (ya, yb) = (to_ypoly(a), to_ypoly(b));
    let cont = content(&ya).gcd(&content(&yb));
    let (mut f, mut g) = (primitive_part(&ya), primitive_part(&yb));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.len() <= 1 {
            // A primitive polynomial free of y is a unit.
            g = vec![UniPoly::one()];
            break;
        }
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        f = g;
        g = primitive_part(&r);
    }
    let g: YPoly = g.iter().map(|c| c.mul(&cont)).collect();
    Ok(from_ypoly(&g).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn coprime_variables() {
        assert_eq!(x().gcd(&y()).unwrap(), Poly::one());
    }

    #[test]
    fn shared_linear_factor() {
        let s = x() + y();
        let a = x() * &s;
        let b = y() * &s;
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, s);
        let ca = a.divide_exact(&g).unwrap();
        let cb = b.divide_exact(&g).unwrap();
        assert!(ca.gcd(&cb).unwrap().is_constant());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let f = Poly::from_terms([
            (crate::poly::rat(-3, 2), 2, 0),
            (crate::poly::rat(3, 1), 0, 1),
        ]);
        assert_eq!(
            f.gcd(&Poly::zero()).unwrap(),
            c(1) * x().pow(2) - c(2) * y()
        );
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(PolyError::BothZero));
    }

    #[test]
    fn content_in_x_is_kept() {
        // common factor (x + 1) lives entirely in the Q[x] content
        let a = (x() + c(1)) * (y() + x());
        let b = (x() + c(1)) * (y() - x());
        assert_eq!(a.gcd(&b).unwrap(), x() + c(1));
    }

    #[test]
    fn higher_degree_common_factor() {
        let g = x().pow(2) * y() - y().pow(3) + c(2) * x() + c(1);
        let a = &g * &(x() * y() + c(3));
        let b = &g * &(y().pow(2) - x() + c(5));
        assert_eq!(a.gcd(&b).unwrap(), g.normalized());
    }
}

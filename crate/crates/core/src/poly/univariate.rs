//! Dense univariate polynomials over `Rat`, used as coefficients when a
//! bivariate polynomial is viewed as a polynomial in `y` over `Q[x]`.

use num_traits::{One, Zero};

use super::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct UniPoly {
    /// `coeffs[i]` multiplies `x^i`; no trailing zeros.
    pub coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division over the field `Q`. `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor
            .degree()
            .expect("division by zero univariate polynomial");
        let lc = divisor.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let q = rem[top].clone() / &lc;
            let shift = top - dd;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * c;
            }
            quot[shift] = q;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::default(),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x - 1)(x + 2) and (x - 1)(x - 3)
        let a = up(&[-2, 1, 1]);
        let b = up(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        assert_eq!(a.gcd(&UniPoly::default()), a.monic());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = up(&[5, 0, 3, 2]);
        let b = up(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b).sub(&r.scale(&rat_int(-1)));
        assert_eq!(back, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}

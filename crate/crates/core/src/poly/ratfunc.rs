use std::fmt;

use super::{Poly, PolyError};

/// A rational function `num / den` in lowest terms.
///
/// The denominator is integer-primitive with a positive leading coefficient;
/// any scalar is carried by the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.divide_exact(&g)?;
        let den = den.divide_exact(&g)?;
        let (unit, den) = den.unit_normal().expect("nonzero denominator");
        Ok(RatFunc {
            num: num.scale(&unit.recip()),
            den,
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn reduces_to_lowest_terms() {
        let x = Poly::x();
        let y = Poly::y();
        let r = RatFunc::new(&x * &(&x + &y), (&y * &(&x + &y)).scale(&rat(-2, 1))).unwrap();
        assert_eq!(r.num(), &x.scale(&rat(-1, 2)));
        assert_eq!(r.den(), &y);
        assert!(!r.is_constant());
        assert_eq!(
            RatFunc::new(x.clone(), Poly::zero()),
            Err(PolyError::ZeroDivisor)
        );
        let z = RatFunc::new(Poly::zero(), y).unwrap();
        assert_eq!(z.den(), &Poly::one());
    }
}

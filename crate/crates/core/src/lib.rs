//! Exact differential algebra on `Q[x, y]`.
//!
//! The centerpiece is [`pair::analyze`]: given two commuting derivations that
//! are linearly independent over `Q`, it either exhibits a common Darboux
//! polynomial or shows that both are Jacobian derivations `D_u1`, `D_u2` with
//! `det J(u1, u2)` a nonzero constant. Either answer comes with a certificate
//! that [`pair::verify_outcome`] checks from scratch.

pub mod darboux;
pub mod deriv;
pub mod expr;
pub mod generators;
pub mod linalg;
pub mod pair;
pub mod poly;

pub use deriv::{delta, jacobian_det, DerivError, Derivation};
pub use expr::{format_poly, parse_poly, ParseError};
pub use poly::{Monomial, Poly, PolyError, Rat, RatFunc, Var};

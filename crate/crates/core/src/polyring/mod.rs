//! Exact coefficient fields and sparse polynomials over `k[x,y,z]` and its
//! dehomogenized subrings.

mod field;
mod gcd;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub(crate) use field::is_prime;
pub use field::{Field, FieldElement, DEFAULT_PRIME};
pub use gcd::{gcd_all, multivariate_gcd};
pub use monomial::{monomials_of_degree, Monomial, Vars, NVARS, VAR_NAMES};
pub use order::{grevlex_cmp, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{PolyRing, Polynomial};

//! Exact positive-characteristic invariants for graded quotients of
//! polynomial rings over prime fields.
//!
//! The crate is organized around a small Groebner engine:
//!
//! * [`field`], [`monomial`], [`poly`] — arithmetic in `F_p[x_1..x_n]`;
//! * [`groebner`] — Buchberger with the standard pair criteria, normal forms;
//! * [`ideal`] — ideals with cached bases, membership, colon, intersection,
//!   radical membership;
//! * [`hilbert`] — staircase combinatorics: Hilbert numerators, colengths,
//!   socle degrees, standard monomials;
//! * [`quotient`] — graded quotient contexts `R = S/I` and dimension data;
//! * [`calculus`] — ideal powers, Frobenius bracket powers, minimal
//!   generators;
//! * [`finv`] — nu sequences, certified F-threshold intervals, Fedder's
//!   criterion, splitting ideals, F-pure threshold estimates;
//! * [`mult`] — Hilbert-Kunz colength sequences, F-signature estimates,
//!   a-invariants, and the relation verifier;
//! * [`dense`] — a slow degree-by-degree linear-algebra reference used to
//!   cross-check the Groebner paths.

pub mod calculus;
pub mod dense;
pub mod error;
pub mod field;
pub mod finv;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod mult;
pub mod poly;
pub mod quotient;

pub use error::{Error, Result};
pub use field::{fp_inv, FieldSpec};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Homogeneity, Polynomial};
pub use quotient::{Limits, QuotientContext};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational from an integer pair.
pub fn ratio(num: i64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `p^e` as a big integer.
pub fn pow_big(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

/// Renders a rational as `numerator/denominator`, the exact wire format used
/// by reports.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

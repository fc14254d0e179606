//! Exact arithmetic for q-Bernstein polynomials, q-Euler numbers and
//! q-Stirling numbers, together with the fermionic p-adic sums that serve as
//! an independent oracle for every moment identity.
//!
//! All identities in the Bernstein layer are checked in the variable
//! `u = [x]_q`, where `[1 - x]_{1/q} = 1 - u` turns every statement into an
//! exact polynomial identity with rational coefficients.

pub mod bernstein;
pub mod error;
pub mod euler;
pub mod integrals;
pub mod numeric;
pub mod qcore;
pub mod stirling;
pub mod upoly;

pub use error::{Error, Result};
pub use numeric::{Rational, Valuation};
pub use upoly::UPoly;

//! Exact computer algebra for the simplest sextic family of Thue equations
//!
//! ```text
//! F_m(X,Y) = X^6 - 2mX^5Y - 5(m+3)X^4Y^2 - 20X^3Y^3 + 5mX^2Y^4 + 2(m+3)XY^5 + Y^6
//! ```
//!
//! The crate is split the same way the computation is:
//!
//! * [`exactmath`]: big rationals, dense univariate polynomials, Sylvester
//!   resultants and Bezout cofactors, factorization over the rationals and a
//!   deterministic grid-based identity checker.
//! * [`family`]: the binary form `F_m`, the polynomials `f^C6_s` / `f^C3_s`,
//!   the C6 orbit on lattice points, trivial solutions and Galois groups.
//! * [`resolvent`]: multi-resolvent parameters, decomposition types, the
//!   intersection classifier, the isomorphism test and the coincidence scans.
//! * [`thue`]: divisor enumeration, exhaustive box solving, the `N`-formula
//!   correspondence and the Bezout certificate `h p + f q = 27(m^2+3m+9)`.
//! * [`suite`]: the bundled identity suite; [`report`] holds its pass/fail
//!   records and [`golden`] the embedded reference data.
//!
//! Everything is exact; there is no floating point anywhere on a decision path.

pub mod error;
pub mod exactmath;
pub mod family;
pub mod golden;
pub mod report;
pub mod resolvent;
pub mod suite;
pub mod thue;

pub use error::{Error, Result};
pub use exactmath::{Int, Rat, UniPoly};

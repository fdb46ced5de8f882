//! Exact Fibonacci and Lucas numbers along residue classes `dn + h`, the
//! rational generating functions of those sections, and the coefficients of
//! their powers (convolutions) through signed Chebyshev polynomials of the
//! second kind.
//!
//! Every closed form ships with an independent route through truncated power
//! series, and [`verify`] runs the sweeps that compare them.

pub mod chebyshev;
pub mod dsection;
mod error;
pub mod golden;
pub mod poly;
pub mod seqcore;
pub mod series;
pub mod verify;

pub use chebyshev::{
    binomial, cheb_u, gegen_u_explicit, monic_signed_u, signed_u_explicit, ChebParams, Sign,
};
pub use dsection::{
    conv_by_route, conv_coeff, conv_oracle, conv_rational, conv_terms, h0_shortcut, section_gf,
    section_terms, Kind, Route, SectionGF, SectionParams,
};
pub use error::{Error, Result};
pub use golden::{golden_pow, GoldenInt};
pub use num_bigint::BigInt;
pub use poly::{poly_derivative, poly_eval, IntPolynomial};
pub use seqcore::{binet_fib_lucas, fib, lucas};
pub use series::{expand_rational, expand_rational_over, series_mul, series_pow, Ring, TruncatedSeries};

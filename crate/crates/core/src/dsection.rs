//! Fibonacci and Lucas numbers along the residue class `dn + h`.
//!
//! For step `d ≥ 1` and any offset `h`,
//!
//! ```text
//! Σ F_{dn+h} z^n = (F_h + (−1)^h F_{d−h} z) / (1 − L_d z + (−1)^d z²)
//! Σ L_{dn+h} z^n = (L_h − (−1)^h L_{d−h} z) / (1 − L_d z + (−1)^d z²)
//! ```
//!
//! The `(s+1)`-th power of that generating function has coefficients
//!
//! ```text
//! Σ_{j=0}^{s+1} C(s+1, j) c0^{s+1−j} c1^j V_{n−j}^{(s)}(L_d; ε),   ε = (−1)^{d−1}
//! ```
//!
//! where `c0 + c1 z` is the numerator and `V` the monic signed family from
//! [`crate::chebyshev`]. Each closed form here has an independent route
//! through [`crate::series`] for cross-checking.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chebyshev::{binomial, monic_signed_u, monic_signed_u_values, Sign};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::seqcore::{fib, lucas};
use crate::series::{expand_rational, series_pow, TruncatedSeries};

/// Which sequence is being sectioned.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    #[default]
    Fibonacci,
    Lucas,
}

impl Kind {
    pub fn term(self, n: i64) -> BigInt {
        match self {
            Kind::Fibonacci => fib(n),
            Kind::Lucas => lucas(n),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Fibonacci => "fibonacci",
            Kind::Lucas => "lucas",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which computation produces convolution coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Binomial-weighted sum of `V_{n−j}^{(s)}(L_d; ε)`.
    Closed,
    /// `(s+1)`-th Cauchy power of the directly computed terms.
    Oracle,
    /// Recurrence expansion of `num^{s+1} / den^{s+1}`.
    Rational,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Closed, Route::Oracle, Route::Rational];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Oracle => "oracle",
            Route::Rational => "rational",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Route, String> {
        match s {
            "closed" => Ok(Route::Closed),
            "oracle" => Ok(Route::Oracle),
            "rational" => Ok(Route::Rational),
            other => Err(format!("unknown route `{other}`")),
        }
    }
}

/// Step `d ≥ 1`, offset `h ∈ ℤ`, convolution order `s` and sequence kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SectionParams {
    d: i64,
    pub h: i64,
    pub s: usize,
    pub kind: Kind,
}

fn check_step(d: i64) -> Result<()> {
    if d < 1 {
        Err(Error::InvalidStep(d))
    } else {
        Ok(())
    }
}

impl SectionParams {
    pub fn new(d: i64, h: i64, s: usize) -> Result<Self> {
        check_step(d)?;
        Ok(SectionParams {
            d,
            h,
            s,
            kind: Kind::Fibonacci,
        })
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `ε = (−1)^{d−1}`, always derived from the step.
    pub fn eps(&self) -> Sign {
        Sign::parity((self.d - 1) as u64)
    }

    pub fn gf(&self) -> SectionGF {
        SectionGF::build(self.d, self.h, self.kind)
    }
}

/// `(−1)^k` for any integer `k`.
fn parity_sign(k: i64) -> BigInt {
    Sign::parity(k.unsigned_abs()).to_bigint()
}

/// Rational generating function `num(z) / den(z)` of a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionGF {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
    pub kind: Kind,
}

impl SectionGF {
    fn build(d: i64, h: i64, kind: Kind) -> SectionGF {
        let (c0, c1) = numerator_pair(d, h, kind);
        let den = IntPolynomial::new(vec![BigInt::from(1), -lucas(d), parity_sign(d)]);
        SectionGF {
            num: IntPolynomial::new(vec![c0, c1]),
            den,
            kind,
        }
    }

    /// First `n` coefficients of the rational function.
    pub fn expand(&self, n: usize) -> TruncatedSeries<BigInt> {
        expand_rational(&self.num, &self.den, 1, n).expect("denominator has unit constant term")
    }
}

/// `(c0, c1)` with numerator `c0 + c1·z`.
fn numerator_pair(d: i64, h: i64, kind: Kind) -> (BigInt, BigInt) {
    match kind {
        Kind::Fibonacci => (fib(h), parity_sign(h) * fib(d - h)),
        Kind::Lucas => (lucas(h), -parity_sign(h) * lucas(d - h)),
    }
}

/// Generating function of `⟨F_{dn+h}⟩` or `⟨L_{dn+h}⟩`.
pub fn section_gf(d: i64, h: i64, kind: Kind) -> Result<SectionGF> {
    check_step(d)?;
    Ok(SectionGF::build(d, h, kind))
}

/// `[X_{dn+h}]` for `n = 0..count`, straight from [`fib`] / [`lucas`].
pub fn section_terms(p: &SectionParams, count: usize) -> Vec<BigInt> {
    (0..count as i64)
        .map(|n| p.kind.term(n * p.d + p.h))
        .collect()
}

/// Weights `C(s+1, j) c0^{s+1−j} c1^j` for `j = 0..=s+1`; `0^0 = 1`.
fn numerator_power_weights(p: &SectionParams) -> Vec<BigInt> {
    let (c0, c1) = numerator_pair(p.d, p.h, p.kind);
    let e = p.s as u32 + 1;
    (0..=e)
        .map(|j| binomial(e as u64, j as u64) * c0.pow(e - j) * c1.pow(j))
        .collect()
}

fn combine(weights: &[BigInt], values: &[BigInt], n: usize) -> BigInt {
    weights
        .iter()
        .enumerate()
        .take(n + 1)
        .filter(|(_, w)| !w.is_zero())
        .map(|(j, w)| w * &values[n - j])
        .sum()
}

/// Coefficient of `z^n` in the `(s+1)`-th power of the section's generating
/// function, by the closed Chebyshev form.
pub fn conv_coeff(p: &SectionParams, n: usize) -> BigInt {
    let weights = numerator_power_weights(p);
    let l_d = lucas(p.d);
    let eps = p.eps();
    weights
        .iter()
        .enumerate()
        .take(n + 1)
        .filter(|(_, w)| !w.is_zero())
        .map(|(j, w)| w * monic_signed_u(n - j, p.s, eps).eval(&l_d))
        .sum()
}

/// `[conv_coeff(p, n)]` for `n = 0..count`, sharing the `V` evaluations.
pub fn conv_terms(p: &SectionParams, count: usize) -> Vec<BigInt> {
    let weights = numerator_power_weights(p);
    let values = monic_signed_u_values(count, p.s, p.eps(), &lucas(p.d));
    (0..count).map(|n| combine(&weights, &values, n)).collect()
}

/// The definitional route: Cauchy power of [`section_terms`].
pub fn conv_oracle(p: &SectionParams, count: usize) -> Vec<BigInt> {
    let terms = TruncatedSeries::new(section_terms(p, count));
    series_pow(&terms, p.s as u32 + 1).into_coeffs()
}

/// Expansion of `num^{s+1} / den^{s+1}` by the series recurrence.
pub fn conv_rational(p: &SectionParams, count: usize) -> Vec<BigInt> {
    let gf = p.gf();
    let e = p.s as u32 + 1;
    expand_rational(&gf.num.pow(e), &gf.den, e, count)
        .expect("denominator has unit constant term")
        .into_coeffs()
}

pub fn conv_by_route(p: &SectionParams, route: Route, count: usize) -> Vec<BigInt> {
    match route {
        Route::Closed => conv_terms(p, count),
        Route::Oracle => conv_oracle(p, count),
        Route::Rational => conv_rational(p, count),
    }
}

/// The `h = 0` collapse `F_d^{s+1} · V_{n−(s+1)}^{(s)}(L_d; ε)`.
///
/// With `F_0 = 0` only the `j = s+1` term of the general sum survives, so
/// the numerator is `(F_d z)^{s+1}` and the coefficients start at `n = s+1`.
pub fn h0_shortcut(d: i64, s: usize, n: usize) -> Result<BigInt> {
    let p = SectionParams::new(d, 0, s)?;
    let Some(m) = n.checked_sub(s + 1) else {
        return Ok(BigInt::zero());
    };
    let v = monic_signed_u(m, s, p.eps()).eval(&lucas(d));
    Ok(fib(d).pow(s as u32 + 1) * v)
}

//! Invariant sweeps comparing every closed form against its independent
//! route. Tuples are evaluated in parallel; reports are ordered by tuple.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::chebyshev::{signed_u_explicit, Sign};
use crate::dsection::{
    conv_coeff, conv_oracle, conv_rational, conv_terms, h0_shortcut, section_gf, section_terms,
    Kind, SectionParams,
};
use crate::poly::IntPolynomial;
use crate::seqcore::{binet_fib_lucas, fib, lucas};
use crate::series::expand_rational_over;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Rational generating function against direct section terms.
    Prop,
    /// Closed convolution coefficients against the Cauchy-power and
    /// rational-expansion routes.
    Theorem,
    /// Explicit signed Chebyshev sums against the polynomial-coefficient
    /// series expansion.
    Chebyshev,
    /// Derivative ladder `∂Ū_n^{(s)} = 2(s+1) Ū_{n−1}^{(s+1)}`.
    Ladder,
    /// `h = 0` shortcut against the general closed form.
    H0,
    /// Golden-ring powers against fast doubling.
    Binet,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Prop,
        Suite::Theorem,
        Suite::Chebyshev,
        Suite::Ladder,
        Suite::H0,
        Suite::Binet,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Prop => "prop",
            Suite::Theorem => "theorem",
            Suite::Chebyshev => "chebyshev",
            Suite::Ladder => "ladder",
            Suite::H0 => "h0",
            Suite::Binet => "binet",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Sweep bounds. `None` selects the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_d: Option<i64>,
    pub max_s: Option<usize>,
    pub max_n: Option<usize>,
}

/// Resolved bounds for one suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub max_d: i64,
    pub max_s: usize,
    pub max_n: usize,
}

impl SweepBounds {
    pub fn resolve(&self, suite: Suite) -> Resolved {
        // (max_d, max_s, max_n); for prop/theorem max_n is the term count
        let (d, s, n) = match suite {
            Suite::Prop => (12, 0, 64),
            Suite::Theorem => (8, 4, 40),
            Suite::Chebyshev => (0, 5, 50),
            Suite::Ladder => (0, 4, 40),
            Suite::H0 => (10, 4, 40),
            Suite::Binet => (0, 0, 2000),
        };
        Resolved {
            max_d: self.max_d.unwrap_or(d),
            max_s: self.max_s.unwrap_or(s),
            max_n: self.max_n.unwrap_or(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

impl Check {
    fn new(label: String, passed: bool) -> Check {
        Check { label, passed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub bounds: Resolved,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.total() - self.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

pub fn run_suite(suite: Suite, bounds: SweepBounds) -> Report {
    let b = bounds.resolve(suite);
    let checks = match suite {
        Suite::Prop => prop(b),
        Suite::Theorem => theorem(b),
        Suite::Chebyshev => chebyshev(b),
        Suite::Ladder => ladder(b),
        Suite::H0 => h0(b),
        Suite::Binet => binet(b),
    };
    Report {
        suite,
        bounds: b,
        checks,
    }
}

const SIGNS: [Sign; 2] = [Sign::Minus, Sign::Plus];

fn prop(b: Resolved) -> Vec<Check> {
    let tuples: Vec<(Kind, i64, i64)> = [Kind::Fibonacci, Kind::Lucas]
        .into_iter()
        .flat_map(|kind| {
            (1..=b.max_d).flat_map(move |d| (-3..=d + 3).map(move |h| (kind, d, h)))
        })
        .collect();
    tuples
        .into_par_iter()
        .map(|(kind, d, h)| {
            let gf = section_gf(d, h, kind).expect("d >= 1");
            let p = SectionParams::new(d, h, 0).expect("d >= 1").with_kind(kind);
            let ok = gf.expand(b.max_n).into_coeffs() == section_terms(&p, b.max_n);
            Check::new(format!("{kind} d={d} h={h}"), ok)
        })
        .collect()
}

fn theorem(b: Resolved) -> Vec<Check> {
    let tuples: Vec<(i64, i64, usize)> = (1..=b.max_d)
        .flat_map(|d| (0..d).flat_map(move |h| (0..=b.max_s).map(move |s| (d, h, s))))
        .collect();
    tuples
        .into_par_iter()
        .map(|(d, h, s)| {
            let p = SectionParams::new(d, h, s).expect("d >= 1");
            let closed = conv_terms(&p, b.max_n);
            let ok = closed == conv_oracle(&p, b.max_n) && closed == conv_rational(&p, b.max_n);
            Check::new(format!("d={d} h={h} s={s}"), ok)
        })
        .collect()
}

/// `Ū_n^{(s)}` read off `(1 − 2tx − εt²)^{−(s+1)}` with `x` kept formal.
pub fn signed_u_series(s: usize, eps: Sign, count: usize) -> Vec<IntPolynomial> {
    let q = [
        IntPolynomial::constant(1),
        IntPolynomial::monomial(-2, 1),
        IntPolynomial::constant(-eps.value()),
    ];
    expand_rational_over(&[IntPolynomial::constant(1)], &q, s as u32 + 1, count)
        .expect("unit constant term")
        .into_coeffs()
}

fn chebyshev(b: Resolved) -> Vec<Check> {
    let tuples: Vec<(usize, Sign)> = (0..=b.max_s)
        .flat_map(|s| SIGNS.into_iter().map(move |e| (s, e)))
        .collect();
    let mut checks: Vec<((usize, Sign), Vec<Check>)> = tuples
        .into_par_iter()
        .map(|(s, eps)| {
            let series = signed_u_series(s, eps, b.max_n + 1);
            let checks = series
                .iter()
                .enumerate()
                .map(|(n, poly)| {
                    let ok = *poly == signed_u_explicit(n, s, eps);
                    Check::new(format!("n={n} s={s} eps={eps}"), ok)
                })
                .collect();
            ((s, eps), checks)
        })
        .collect();
    checks.sort_by_key(|(k, _)| *k);
    checks.into_iter().flat_map(|(_, c)| c).collect()
}

fn ladder(b: Resolved) -> Vec<Check> {
    let tuples: Vec<(usize, usize, Sign)> = (0..=b.max_s)
        .flat_map(|s| SIGNS.into_iter().flat_map(move |e| (1..=b.max_n).map(move |n| (n, s, e))))
        .collect();
    tuples
        .into_par_iter()
        .map(|(n, s, eps)| {
            let lhs = signed_u_explicit(n, s, eps).derivative();
            let rhs = signed_u_explicit(n - 1, s + 1, eps).scale(&BigInt::from(2 * (s + 1)));
            Check::new(format!("n={n} s={s} eps={eps}"), lhs == rhs)
        })
        .collect()
}

fn h0(b: Resolved) -> Vec<Check> {
    let tuples: Vec<(i64, usize)> = (1..=b.max_d)
        .flat_map(|d| (0..=b.max_s).map(move |s| (d, s)))
        .collect();
    tuples
        .into_par_iter()
        .map(|(d, s)| {
            let p = SectionParams::new(d, 0, s).expect("d >= 1");
            let ok = (0..=b.max_n)
                .all(|n| h0_shortcut(d, s, n).expect("d >= 1") == conv_coeff(&p, n));
            Check::new(format!("d={d} s={s}"), ok)
        })
        .collect()
}

fn binet(b: Resolved) -> Vec<Check> {
    (0..=b.max_n as i64)
        .into_par_iter()
        .map(|n| {
            let ok = binet_fib_lucas(n) == (fib(n), lucas(n));
            Check::new(format!("n={n}"), ok)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let bounds = SweepBounds {
            max_d: Some(3),
            max_s: Some(2),
            max_n: Some(12),
        };
        for suite in Suite::ALL {
            let r = run_suite(suite, bounds);
            assert!(r.total() > 0, "{suite}");
            assert!(r.ok(), "{suite}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.as_str().parse::<Suite>(), Ok(suite));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn deterministic_order() {
        let bounds = SweepBounds {
            max_d: Some(4),
            max_s: Some(2),
            max_n: Some(10),
        };
        assert_eq!(
            run_suite(Suite::Chebyshev, bounds),
            run_suite(Suite::Chebyshev, bounds)
        );
        assert_eq!(run_suite(Suite::Theorem, bounds), run_suite(Suite::Theorem, bounds));
    }
}

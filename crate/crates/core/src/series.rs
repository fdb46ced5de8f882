//! Truncated formal power series over an exact coefficient ring.
//!
//! A series carries its own truncation order `N`: coefficients at index
//! `N` and beyond are unknown, never zero. Binary operations truncate to the
//! shorter operand.

use std::ops::{AddAssign, Index, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Exact commutative ring usable as a series coefficient.
pub trait Ring:
    Clone + PartialEq + Zero + One + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Ring for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Ring for IntPolynomial {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// A polynomial viewed as a series of order `n`: padded with zeros or cut.
    pub fn from_poly(coeffs: &[R], n: usize) -> Self {
        let mut v: Vec<R> = coeffs.iter().take(n).cloned().collect();
        v.resize(n, R::zero());
        TruncatedSeries { coeffs: v }
    }

    /// The multiplicative unit `1 + 0z + …` of order `n`.
    pub fn one(n: usize) -> Self {
        let mut v = vec![R::zero(); n];
        if let Some(c) = v.first_mut() {
            *c = R::one();
        }
        TruncatedSeries { coeffs: v }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&mut self, n: usize) {
        self.coeffs.truncate(n);
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        series_mul(self, rhs)
    }

    pub fn pow(&self, m: u32) -> Self {
        series_pow(self, m)
    }
}

impl<R> Index<usize> for TruncatedSeries<R> {
    type Output = R;
    fn index(&self, i: usize) -> &R {
        &self.coeffs[i]
    }
}

impl From<Vec<i64>> for TruncatedSeries<BigInt> {
    fn from(v: Vec<i64>) -> Self {
        TruncatedSeries::new(v.into_iter().map(BigInt::from).collect())
    }
}

/// Cauchy product truncated to the shorter order.
pub fn series_mul<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    let n = a.order().min(b.order());
    let mut out = vec![R::zero(); n];
    for (i, x) in a.coeffs.iter().take(n).enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().take(n - i).enumerate() {
            out[i + j] += &x.mul_ref(y);
        }
    }
    TruncatedSeries { coeffs: out }
}

/// `a^m` by binary exponentiation over [`series_mul`].
pub fn series_pow<R: Ring>(a: &TruncatedSeries<R>, mut m: u32) -> TruncatedSeries<R> {
    let mut acc = TruncatedSeries::one(a.order());
    let mut base = a.clone();
    while m > 0 {
        if m & 1 == 1 {
            acc = series_mul(&acc, &base);
        }
        m >>= 1;
        if m > 0 {
            base = series_mul(&base, &base);
        }
    }
    acc
}

fn poly_mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &x.mul_ref(y);
        }
    }
    out
}

/// First `n` coefficients of `P / Q^m` over any [`Ring`].
///
/// `Q^m` is expanded exactly, then `c_k = P_k − Σ_{i≥1} (Q^m)_i c_{k−i}`.
/// Requires `Q(0) = 1`.
pub fn expand_rational_over<R: Ring>(
    p: &[R],
    q: &[R],
    m: u32,
    n: usize,
) -> Result<TruncatedSeries<R>> {
    if !q.first().is_some_and(One::is_one) {
        return Err(Error::NonUnitConstant);
    }
    let mut qm = vec![R::one()];
    for _ in 0..m {
        qm = poly_mul(&qm, q);
    }

    let mut c: Vec<R> = Vec::with_capacity(n);
    for k in 0..n {
        let mut ck = p.get(k).cloned().unwrap_or_else(R::zero);
        for (i, qi) in qm.iter().enumerate().take(k + 1).skip(1) {
            if !qi.is_zero() {
                ck -= &qi.mul_ref(&c[k - i]);
            }
        }
        c.push(ck);
    }
    Ok(TruncatedSeries { coeffs: c })
}

/// First `n` coefficients of `P / Q^m` for integer polynomials `P`, `Q`.
pub fn expand_rational(
    p: &IntPolynomial,
    q: &IntPolynomial,
    m: u32,
    n: usize,
) -> Result<TruncatedSeries<BigInt>> {
    expand_rational_over(p.coeffs(), q.coeffs(), m, n)
}

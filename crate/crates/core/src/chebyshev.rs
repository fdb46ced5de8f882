//! Chebyshev polynomials of the second kind and their higher-order, signed
//! and monic-argument relatives.
//!
//! * `U_n(x)`: coefficients of `1/(1 − 2tx + t²)`.
//! * `U_n^{(s)}(x)`: coefficients of `1/(1 − 2tx + t²)^{s+1}`.
//! * `Ū_n^{(s)}(x; ε)`: coefficients of `1/(1 − 2tx − εt²)^{s+1}`.
//! * `V_n^{(s)}(y; ε)`: coefficients of `1/(1 − ty − εt²)^{s+1}`, i.e. `Ū`
//!   under `2x = y`. Integer-valued at integer `y`, which is how the
//!   convolution formulas evaluate it at `y = L_d`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A sign `ε ∈ {−1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    /// `(−1)^k` as a sign.
    pub fn parity(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `ε^k`.
    pub fn pow(self, k: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k),
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.value())
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Sign> {
        match v {
            -1 => Ok(Sign::Minus),
            1 => Ok(Sign::Plus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-1",
            Sign::Plus => "+1",
        })
    }
}

/// Degree index, order and sign selecting one member of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChebParams {
    pub n: usize,
    pub s: usize,
    pub eps: Sign,
}

impl ChebParams {
    pub fn new(n: usize, s: usize, eps: Sign) -> Self {
        ChebParams { n, s, eps }
    }

    pub fn signed(&self) -> IntPolynomial {
        signed_u_explicit(self.n, self.s, self.eps)
    }

    pub fn monic(&self) -> IntPolynomial {
        monic_signed_u(self.n, self.s, self.eps)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Multiplicative formula; every partial product `C(n, i)` is an integer,
/// so each running division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `U_n(x)` by the three-term recursion `U_n = 2x·U_{n−1} − U_{n−2}`.
pub fn cheb_u(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::one();
    if n == 0 {
        return prev;
    }
    let two_x = IntPolynomial::monomial(2, 1);
    let mut cur = two_x.clone();
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Shared explicit sum for both argument scalings.
///
/// Index `n = 2m + p` with `p ∈ {0,1}`; the coefficient of the power
/// `2k + p` is `ε^{m−k} C(m+k+s+p, 2k+s+p) C(2k+s+p, s)`, times `2^{2k+p}`
/// when `doubled` (the `x` variable) and unscaled for the `y = 2x` variable.
fn explicit_family(n: usize, s: usize, eps: Sign, doubled: bool) -> IntPolynomial {
    let (m, p) = ((n / 2) as u64, (n % 2) as u64);
    let s = s as u64;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=m {
        let power = 2 * k + p;
        let mut c = binomial(m + k + s + p, power + s) * binomial(power + s, s);
        if doubled {
            c <<= power as usize;
        }
        if eps.pow(m - k) == Sign::Minus {
            c = -c;
        }
        coeffs[power as usize] = c;
    }
    IntPolynomial::new(coeffs)
}

/// `U_n^{(s)}(x)` assembled from its explicit binomial sums.
pub fn gegen_u_explicit(n: usize, s: usize) -> IntPolynomial {
    explicit_family(n, s, Sign::Minus, true)
}

/// `Ū_n^{(s)}(x; ε)`, coefficients of `1/(1 − 2tx − εt²)^{s+1}`.
///
/// `ε = −1` recovers [`gegen_u_explicit`].
pub fn signed_u_explicit(n: usize, s: usize, eps: Sign) -> IntPolynomial {
    explicit_family(n, s, eps, true)
}

/// `V_n^{(s)}(y; ε)`, coefficients of `1/(1 − ty − εt²)^{s+1}`.
pub fn monic_signed_u(n: usize, s: usize, eps: Sign) -> IntPolynomial {
    explicit_family(n, s, eps, false)
}

/// `V_n^{(s)}(y; ε)` for a possibly negative index; zero when `n < 0`.
pub fn monic_signed_u_at(n: i64, s: usize, eps: Sign) -> IntPolynomial {
    usize::try_from(n)
        .map(|n| monic_signed_u(n, s, eps))
        .unwrap_or_else(|_| IntPolynomial::zero())
}

/// Values `V_0^{(s)}(y; ε), …, V_{len−1}^{(s)}(y; ε)` at a fixed integer `y`.
pub fn monic_signed_u_values(len: usize, s: usize, eps: Sign, y: &BigInt) -> Vec<BigInt> {
    (0..len)
        .map(|n| monic_signed_u(n, s, eps).eval(y))
        .collect()
}

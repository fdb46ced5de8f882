//! Fibonacci and Lucas numbers at arbitrary integer indices.
//!
//! Values come from fast doubling on the pair `(F_k, F_{k+1})`. Negative
//! indices follow `F_{-n} = (-1)^{n+1} F_n` and `L_{-n} = (-1)^n L_n`.
//! [`binet_fib_lucas`] recomputes both sequences from powers of the golden
//! ratio in ℤ[φ] and serves as an independent route.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::golden::{golden_pow, GoldenInt};

/// `(F_k, F_{k+1})` by fast doubling.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    if k == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (f, g) = fib_pair(k >> 1);
    // F_{2m} = F_m (2F_{m+1} − F_m), F_{2m+1} = F_m² + F_{m+1}²
    let even = &f * ((&g << 1u32) - &f);
    let odd = &f * &f + &g * &g;
    if k & 1 == 0 {
        (even, odd)
    } else {
        let next = &even + &odd;
        (odd, next)
    }
}

/// The Fibonacci number `F_n` for any integer `n`.
pub fn fib(n: i64) -> BigInt {
    let (f, _) = fib_pair(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// The Lucas number `L_n` for any integer `n`, via `L_n = 2F_{n+1} − F_n`.
pub fn lucas(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (f, g) = fib_pair(m);
    let l: BigInt = (g << 1u32) - f;
    if n < 0 && m % 2 == 1 {
        -l
    } else {
        l
    }
}

/// `(F_n, L_n)` read off the exact powers `α^n` and `β^n` in ℤ[φ].
///
/// `α^n − β^n = F_n·√5` and `√5 = 2φ − 1`, so the difference has the form
/// `(−F_n, 2F_n)`; the sum `α^n + β^n` is the rational integer `L_n`.
/// Negative indices delegate to [`fib`] and [`lucas`].
pub fn binet_fib_lucas(n: i64) -> (BigInt, BigInt) {
    if n < 0 {
        return (fib(n), lucas(n));
    }
    let k = n as u64;
    let alpha_n = golden_pow(&GoldenInt::alpha(), k);
    let beta_n = golden_pow(&GoldenInt::beta(), k);

    let diff = &alpha_n - &beta_n;
    let f = &diff.b >> 1u32;
    debug_assert_eq!(diff.a, -&f, "α^n − β^n must be an integer multiple of √5");

    let sum = &alpha_n + &beta_n;
    let l = sum
        .as_integer()
        .cloned()
        .expect("α^n + β^n is fixed by conjugation");
    (f, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iterate(n: usize, a0: i64, a1: i64) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(a0), BigInt::from(a1)];
        while v.len() <= n {
            let next = &v[v.len() - 1] + &v[v.len() - 2];
            v.push(next);
        }
        v.truncate(n + 1);
        v
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib(0), BigInt::from(0));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-2), BigInt::from(-1));
        assert_eq!(fib(-1), BigInt::from(1));
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(3), BigInt::from(4));
        assert_eq!(lucas(-3), BigInt::from(-4));
        assert_eq!(lucas(-2), BigInt::from(3));
    }

    #[test]
    fn matches_iterated_recursion() {
        let f = iterate(300, 0, 1);
        let l = iterate(300, 2, 1);
        for n in 0..=300 {
            assert_eq!(fib(n as i64), f[n], "F_{n}");
            assert_eq!(lucas(n as i64), l[n], "L_{n}");
        }
    }

    #[test]
    fn backward_recursion() {
        // F_{n} = F_{n+2} − F_{n+1} run from (F_1, F_0)
        let (mut hi, mut lo) = (BigInt::from(1), BigInt::from(0));
        let (mut lhi, mut llo) = (BigInt::from(1), BigInt::from(2));
        for n in (-200i64..0).rev() {
            let f = &hi - &lo;
            let l = &lhi - &llo;
            assert_eq!(fib(n), f, "F_{n}");
            assert_eq!(lucas(n), l, "L_{n}");
            hi = lo;
            lo = f;
            lhi = llo;
            llo = l;
        }
    }

    #[test]
    fn binet_examples() {
        assert_eq!(binet_fib_lucas(1), (BigInt::from(1), BigInt::from(1)));
        assert_eq!(binet_fib_lucas(7), (BigInt::from(13), BigInt::from(29)));
        assert_eq!(binet_fib_lucas(0), (BigInt::from(0), BigInt::from(2)));
        assert_eq!(binet_fib_lucas(-5), (fib(-5), lucas(-5)));
    }
}

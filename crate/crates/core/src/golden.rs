//! Exact arithmetic in the ring of golden integers `a + b·φ`, with `φ² = φ + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element `a + b·φ` of ℤ[φ].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt {
            a: a.into(),
            b: b.into(),
        }
    }

    /// φ = (1 + √5) / 2, the larger root of `x² − x − 1`.
    pub fn alpha() -> Self {
        GoldenInt::new(0, 1)
    }

    /// 1 − φ = (1 − √5) / 2, the conjugate root.
    pub fn beta() -> Self {
        GoldenInt::new(1, -1)
    }

    /// Galois conjugate, sending `φ` to `1 − φ`.
    pub fn conjugate(&self) -> Self {
        GoldenInt {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `(a + bφ)(a + b(1 − φ)) = a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Rational part, if the element lies in ℤ.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenInt::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// `g^k` under golden-ring multiplication.
pub fn golden_pow(g: &GoldenInt, k: u64) -> GoldenInt {
    g.pow(k)
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;

    // (a+bφ)(c+dφ) = ac + (ad+bc)φ + bdφ² and φ² = φ + 1
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &rhs.b;
        GoldenInt {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        &self * &rhs
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        &self + &rhs
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        &self - &rhs
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        GoldenInt::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        GoldenInt::new(1, 0)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}φ", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(golden_pow(&GoldenInt::alpha(), 2), GoldenInt::new(1, 1));
    }

    #[test]
    fn zeroth_power_is_unit() {
        assert_eq!(golden_pow(&GoldenInt::alpha(), 0), GoldenInt::new(1, 0));
        assert_eq!(golden_pow(&GoldenInt::new(7, -3), 0), GoldenInt::one());
    }

    #[test]
    fn beta_cubed() {
        // β² = (1,−1)(1,−1) = (2,−1); β³ = (2,−1)(1,−1) = (3,−2), i.e. 2 − √5
        let b2 = &GoldenInt::beta() * &GoldenInt::beta();
        assert_eq!(b2, GoldenInt::new(2, -1));
        let b3 = &b2 * &GoldenInt::beta();
        assert_eq!(b3, GoldenInt::new(3, -2));
        assert_eq!(golden_pow(&GoldenInt::beta(), 3), GoldenInt::new(3, -2));
    }

    #[test]
    fn roots_sum_and_product() {
        let (a, b) = (GoldenInt::alpha(), GoldenInt::beta());
        assert_eq!(&a + &b, GoldenInt::one());
        assert_eq!(&a * &b, GoldenInt::new(-1, 0));
        assert_eq!(a.conjugate(), b);
        assert_eq!(a.norm(), BigInt::from(-1));
    }
}

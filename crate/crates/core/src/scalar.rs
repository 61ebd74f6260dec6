//! The ground field: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Scalar::from_integer(acc)
}

pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Scalar) -> BigInt {
    x.ceil().to_integer()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

/// Small random rational `n/m` with `|n| ≤ 5`, `1 ≤ m ≤ 4`; test and
/// property-check plumbing.
pub fn random_small<R: rand::Rng + ?Sized>(rng: &mut R) -> Scalar {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Small random integer in `-5..=5`.
pub fn random_int<R: rand::Rng + ?Sized>(rng: &mut R) -> Scalar {
    int(rng.gen_range(-5..=5))
}

//! Small exact-arithmetic helpers shared by the counting modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)` as a big integer; zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_u(n: i64, k: i64) -> BigUint {
    binom(n, k).to_biguint().expect("binomials are nonnegative")
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `base^e` for any integer exponent, as an exact rational.
pub fn rational_pow(base: u64, e: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(base), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Exact integer value of a rational, if it has one.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binom(36, 2), BigInt::from(630));
        assert_eq!(binom(5, 7), BigInt::zero());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(1024, 2), BigInt::from(523776));
    }

    #[test]
    fn negative_powers_are_fractions() {
        assert_eq!(rational_pow(2, -3), BigRational::new(1.into(), 8.into()));
        assert_eq!(rational_pow(3, 2), BigRational::from_integer(9.into()));
    }
}

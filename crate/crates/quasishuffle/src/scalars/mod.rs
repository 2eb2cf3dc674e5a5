//! Exact arithmetic foundation: arbitrary-precision rationals, cyclotomic
//! numbers, dense rational matrices, truncated power series, and small
//! number-theoretic helpers.
//!
//! Everything here is exact; no floating point.

pub mod cyclo;
pub mod matrix;
pub mod series;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Scalar type used everywhere: arbitrary-precision rationals, always stored
/// in lowest terms with positive denominator (guaranteed by `num-rational`).
pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact nonnegative integer power of a rational.
pub fn rat_pow(base: &Rat, exp: u64) -> Rat {
    let mut result = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The Möbius function μ(n).
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut m = n;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0; // squarefull
            }
            prime_count += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    if prime_count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Is the rational zero?
pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

/// Render a rational the way the CLI prints coefficients: `a` or `a/b`.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// A crude complexity measure used by the matrix pivot search.
pub(crate) fn rat_bits(r: &Rat) -> u64 {
    (r.numer().abs().bits() + r.denom().bits()) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn powers_and_binomials() {
        assert_eq!(rat_pow(&rat(3, 2), 3), rat(27, 8));
        assert_eq!(rat_pow(&rat(5, 1), 0), rat_int(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}

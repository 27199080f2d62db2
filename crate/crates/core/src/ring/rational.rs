//! Exact rational scalars and the integer helpers the rest of the crate
//! leans on (factorials, binomials, double factorials, integer powers).
//!
//! `Rat` is a [`num_rational::BigRational`]: always stored in lowest terms
//! with a positive denominator, so structural equality is mathematical
//! equality and nothing in the crate ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Rational from an arbitrary-precision integer.
pub fn rat_big(v: BigInt) -> Rat {
    Rat::from_integer(v)
}

/// n!
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
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

/// Odd double factorial (2k-1)!! with the empty-product convention
/// (-1)!! = 1 for k = 0.
pub fn double_factorial_odd(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= BigInt::from(2 * i - 1);
    }
    acc
}

/// base^exp for a nonnegative machine exponent.
pub fn int_pow(base: &BigInt, exp: usize) -> BigInt {
    base.pow(exp as u32)
}

/// Tree-counting power base^exp where exp may be -1 only when base = 1
/// (the j = 0 case of counts like j^(j-1) and (n+1)^(n-1)).
pub fn cayley_power(base: usize, exp: i64) -> BigInt {
    if exp < 0 {
        assert!(
            base == 1 && exp == -1,
            "negative exponent {exp} only defined for base 1"
        );
        return BigInt::one();
    }
    int_pow(&BigInt::from(base), exp as usize)
}

/// True when the rational is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// The value as an i64 when it is an integer in range, for JSON emitters
/// that must fall back to decimal strings past 64 bits.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if !is_integer(r) {
        return None;
    }
    r.numer().to_i64()
}

/// True when the rational is an integer >= 0.
pub fn is_nonnegative_integer(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}

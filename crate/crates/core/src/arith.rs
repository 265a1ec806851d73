//! Small exact-arithmetic helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Floor of `a / b` for `b > 0`, rounding toward negative infinity.
pub fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    Integer::div_floor(&a, &b)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Least common multiple of a list of positive integers; 1 for the empty list.
pub fn lcm_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(1, lcm)
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e`, or `None` on overflow.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// Converts an integral rational into an `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

pub fn is_zero(x: &Rational) -> bool {
    x.is_zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `base^exp mod m` for `m < 2^32`.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

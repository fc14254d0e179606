//! Rational arithmetic, p-adic valuations and integer combinatorics.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator, so equality is structural.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// p-adic valuation of a rational; `Infinite` only for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (quot, rem) = m.div_rem(p);
        if !rem.is_zero() {
            return v;
        }
        m = quot;
        v += 1;
    }
}

/// `v_p(numerator) - v_p(denominator)` for an odd prime `p`.
pub fn padic_valuation(r: &Rational, p: u64) -> Result<Valuation> {
    check_odd_prime(p)?;
    if r.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(r.numer(), &p) - int_valuation(r.denom(), &p),
    ))
}

/// Exact `r^k` for any integer `k`.
pub fn int_pow(r: &Rational, k: i64) -> Result<Rational> {
    if k < 0 && r.is_zero() {
        return Err(Error::ZeroToNegativePower(k));
    }
    Ok(pow(r, k))
}

/// `int_pow` for callers that have already excluded `0^negative`.
pub(crate) fn pow(r: &Rational, k: i64) -> Rational {
    let mut e = k.unsigned_abs();
    let mut base = if k < 0 { r.recip() } else { r.clone() };
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` as a rational, for mixing into exact sums.
pub fn binomial_q(n: u64, k: i64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k)))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Canonical `a/b` text; integers print without a denominator.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses the `a/b` literal. A leading `-` (or U+2212) is allowed and `/b`
/// may be omitted.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidLiteral(s.to_string());
    let t = s.trim();
    let (neg, body) = if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, t)
    };
    let digits = |d: &str| -> Result<BigInt> {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        d.parse::<BigInt>().map_err(|_| bad())
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (digits(a)?, digits(b)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Parses either an `a/b` literal or a finite decimal such as `-0.125`,
/// converting the decimal exactly.
pub fn parse_exact(s: &str) -> Result<Rational> {
    let t = s.trim();
    if !t.contains('.') {
        return parse_rational(t);
    }
    let bad = || Error::InvalidLiteral(s.to_string());
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (whole, frac) = body.split_once('.').ok_or_else(bad)?;
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mantissa: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(mantissa, scale);
    Ok(if neg { -r } else { r })
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

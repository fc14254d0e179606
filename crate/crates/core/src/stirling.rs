//! q-Stirling numbers of the second kind and the expansion of `[x]_q^n`
//! in generalized q-binomials.

use num_traits::{One, Zero};

use crate::error::{pole, Result};
use crate::numeric::{binomial, pow, sign, Rational};
use crate::qcore::{gaussian_binomial, q_factorial, q_number_int, qbinom_upoly};
use crate::upoly::UPoly;

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || *q == -Rational::one() {
        return Err(pole(q, "the q-Stirling numbers"));
    }
    Ok(())
}

fn triangular(k: u64) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// `s_q(n,k) = q^{-C(k,2)} / [k]_q! * sum_j (-1)^j q^{C(j,2)} C_q(k,j) [k-j]_q^n`
/// with `0^0 = 1`. Reduces to the classical numbers at `q = 1`.
pub fn q_stirling2(n: u64, k: u64, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    let sum: Rational = (0..=k)
        .map(|j| {
            Ok(sign(j)
                * pow(q, triangular(j))
                * gaussian_binomial(k, j as i64, q)
                * pow(&q_number_int((k - j) as i64, q)?, n as i64))
        })
        .sum::<Result<Rational>>()?;
    Ok(sum * pow(q, -triangular(k)) / q_factorial(k, q))
}

/// `sum_k q^{C(k,2)} binom(x,k)_q [k]_q! s_q(n,k)` as a polynomial in
/// `u = [x]_q`; equals `u^n`.
pub fn qstirling_expansion_upoly(n: u64, q: &Rational) -> Result<UPoly> {
    check_q(q)?;
    (0..=n)
        .map(|k| {
            let scale = pow(q, triangular(k)) * q_factorial(k, q) * q_stirling2(n, k, q)?;
            Ok::<_, crate::Error>(qbinom_upoly(k, q)?.scale(&scale))
        })
        .sum::<Result<UPoly>>()
}

/// Classical `k! s(m,k)`, the coefficient that links operator moments to
/// Stirling numbers.
pub fn surjections(m: u64, k: u64) -> Rational {
    Rational::from_integer((crate::numeric::factorial(k) * crate::qcore::stirling2(m, k)).into())
}

/// `sum_k C(n,k) u^k k! s(m,k)`, which equals `n^m` times the operator
/// applied to `t^m`.
pub fn operator_moment_upoly(m: u64, n: u64) -> UPoly {
    UPoly::new(
        (0..=n)
            .map(|k| Rational::from_integer(binomial(n, k as i64).into()) * surjections(m, k))
            .collect(),
    )
}

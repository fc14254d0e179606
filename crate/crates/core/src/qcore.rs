//! q-numbers, q-factorials, Gaussian binomials, the generalized q-binomial
//! in `u = [x]_q`, forward differences and classical Stirling numbers.
//!
//! Functions with a removable singularity at `q = 1` return the classical
//! limit there (`[x]_1 = x`, `[k]_1! = k!`, ...).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{pole, Error, Result};
use crate::numeric::{binomial, factorial, pow, Rational};
use crate::upoly::UPoly;

/// Where q lives: an exact rational for the identity paths or a positive real
/// for the floating-point evaluators.
#[derive(Debug, Clone, PartialEq)]
pub enum QContext {
    Exact(Rational),
    Float(f64),
}

impl QContext {
    pub fn exact(q: Rational) -> Self {
        QContext::Exact(q)
    }

    pub fn float(q: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::Domain(format!("real q must be positive, got {q}")));
        }
        Ok(QContext::Float(q))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            QContext::Exact(q) => Some(q),
            QContext::Float(_) => None,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            QContext::Exact(q) => crate::numeric::to_f64(q),
            QContext::Float(q) => *q,
        }
    }

    /// `q = 1`, where only limit values are available.
    pub fn is_classical(&self) -> bool {
        match self {
            QContext::Exact(q) => q.is_one(),
            QContext::Float(q) => *q == 1.0,
        }
    }
}

/// `[x]_q = (1 - q^x) / (1 - q)` for integer `x`; `x` itself at `q = 1`.
pub fn q_number_int(x: i64, q: &Rational) -> Result<Rational> {
    if q.is_one() {
        return Ok(Rational::from_integer(BigInt::from(x)));
    }
    if x < 0 && q.is_zero() {
        return Err(pole(q, "[x]_q with negative x"));
    }
    let one = Rational::one();
    Ok((&one - pow(q, x)) / (&one - q))
}

/// Real-valued `[x]_q`. Uses `expm1`/`ln_1p` so that q close to 1 stays
/// accurate; `q = 1` gives `x`.
pub fn q_number_real(x: f64, q: f64) -> Result<f64> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::Domain(format!("[x]_q needs q > 0, got {q}")));
    }
    if q == 1.0 {
        return Ok(x);
    }
    let ln_q = (q - 1.0).ln_1p();
    Ok(-(x * ln_q).exp_m1() / (1.0 - q))
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`
pub fn q_factorial(k: u64, q: &Rational) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| {
        acc * q_number_int(i, q).expect("positive q-numbers have no pole")
    })
}

/// Integer coefficients (ascending powers of q) of the Gaussian binomial
/// `C_q(k, j)`, obtained by exact polynomial division of
/// `prod (1 - q^{k-i})` by `prod (1 - q^{i+1})`.
pub fn gaussian_binomial_coeffs(k: u64, j: i64) -> Vec<BigInt> {
    if j < 0 || j as u64 > k {
        return Vec::new();
    }
    let j = j as u64;
    let mut p = vec![BigInt::one()];
    for i in 0..j {
        p = mul_one_minus_power(&p, (k - i) as usize);
        p = div_one_minus_power(&p, (i + 1) as usize);
    }
    p
}

fn mul_one_minus_power(p: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + m];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + m] -= c;
    }
    out
}

// p = (1 - q^m) s  =>  s_i = p_i + s_{i-m}
fn div_one_minus_power(p: &[BigInt], m: usize) -> Vec<BigInt> {
    let len = p.len() - m;
    let mut s: Vec<BigInt> = Vec::with_capacity(len);
    for i in 0..len {
        let carry = if i >= m { s[i - m].clone() } else { BigInt::zero() };
        s.push(&p[i] + carry);
    }
    debug_assert!((len..p.len()).all(|i| {
        let carry = if i >= m { s[i - m].clone() } else { BigInt::zero() };
        (&p[i] + carry).is_zero()
    }));
    s
}

/// Gaussian binomial `[k]_q! / ([j]_q! [k-j]_q!)`, zero for `j` outside
/// `0..=k`. Evaluated from its polynomial form, so every rational q is valid.
pub fn gaussian_binomial(k: u64, j: i64, q: &Rational) -> Rational {
    gaussian_binomial_coeffs(k, j)
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * q + Rational::from_integer(c.clone()))
}

/// The generalized q-binomial `prod_{i<k} [x-i]_q / [k]_q!` written as a
/// polynomial in `u = [x]_q`, using `[x-i]_q = (u - [i]_q) / q^i`.
pub fn qbinom_upoly(k: u64, q: &Rational) -> Result<UPoly> {
    if q.is_zero() {
        return Err(pole(q, "the generalized q-binomial"));
    }
    let fact = q_factorial(k, q);
    if fact.is_zero() {
        return Err(pole(q, "the generalized q-binomial"));
    }
    let mut acc = UPoly::one();
    for i in 0..k as i64 {
        let shift = q_number_int(i, q)?;
        let factor = UPoly::new(vec![-shift, Rational::one()]).scale(&pow(q, -i));
        acc = &acc * &factor;
    }
    Ok(acc.scale(&fact.recip()))
}

/// `Delta^k f(0)` for `k = 0..n` from the samples `f(0), ..., f(n)`, by
/// iterated differencing.
pub fn forward_differences(samples: &[Rational]) -> Result<Vec<Rational>> {
    if samples.is_empty() {
        return Err(Error::Empty("forward_differences"));
    }
    let mut row = samples.to_vec();
    let mut out = Vec::with_capacity(samples.len());
    while let Some(first) = row.first() {
        out.push(first.clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(out)
}

/// Same values as [`forward_differences`], each computed independently as
/// `sum_k C(n,k) (-1)^{n-k} f(k)`.
pub fn forward_differences_alternating(samples: &[Rational]) -> Result<Vec<Rational>> {
    if samples.is_empty() {
        return Err(Error::Empty("forward_differences"));
    }
    Ok((0..samples.len() as u64)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let c = crate::numeric::binomial_q(n, k as i64) * &samples[k as usize];
                    if (n - k) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect())
}

/// Stirling numbers of the second kind as `Delta^k 0^m / k!`, with `0^0 = 1`.
pub fn stirling2(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let exp = m as u32;
    let total: BigInt = (0..=k)
        .map(|j| {
            let term = BigInt::from(binomial(k, j as i64)) * BigInt::from(j).pow(exp);
            if (k - j).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum();
    let quotient = total / BigInt::from(factorial(k));
    debug_assert!(!quotient.is_negative());
    quotient.to_biguint().unwrap_or_default()
}

pub fn stirling2_u64(m: u64, k: u64) -> u64 {
    stirling2(m, k).to_u64().expect("stirling number fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn samples() -> Vec<Rational> {
        vec![rat(1, 2), rat(2, 3), rat(5, 4)]
    }

    #[test]
    fn q_number_examples() {
        let h = rat(1, 2);
        assert_eq!(q_number_int(0, &h).unwrap(), int(0));
        assert_eq!(q_number_int(3, &h).unwrap(), rat(7, 4));
        assert_eq!(q_number_int(-1, &h).unwrap(), int(-2));
        assert_eq!(q_number_int(5, &int(1)).unwrap(), int(5));
        assert_eq!(q_number_int(-3, &int(1)).unwrap(), int(-3));
        assert_eq!(q_number_int(3, &int(0)).unwrap(), int(1));
        assert!(q_number_int(-1, &int(0)).is_err());
    }

    #[test]
    fn q_number_addition_rule() {
        for q in samples() {
            for a in -10i64..=10 {
                for b in -10i64..=10 {
                    let lhs = q_number_int(a + b, &q).unwrap();
                    let rhs = q_number_int(a, &q).unwrap() + pow(&q, a) * q_number_int(b, &q).unwrap();
                    assert_eq!(lhs, rhs, "a={a} b={b} q={q}");
                }
            }
        }
    }

    #[test]
    fn q_number_real_examples() {
        assert!((q_number_real(0.5, 0.5).unwrap() - 0.585_786_437_6).abs() < 1e-9);
        for q in [0.2, 0.9, 1.7, 3.0] {
            assert!((q_number_real(1.0, q).unwrap() - 1.0).abs() < 1e-14);
        }
        let q = 1.0 - 1e-9;
        for x in [0.0, 0.3, 0.75, 1.0] {
            assert!((q_number_real(x, q).unwrap() - x).abs() < 1e-6);
        }
        assert!(q_number_real(0.5, 0.0).is_err());
        assert!(q_number_real(0.5, -2.0).is_err());
    }

    #[test]
    fn q_number_real_complement() {
        for &q in &[0.3, 0.7, 1.5] {
            for i in 0..=10 {
                let x = i as f64 / 10.0;
                let lhs = q_number_real(1.0 - x, 1.0 / q).unwrap();
                let rhs = 1.0 - q_number_real(x, q).unwrap();
                assert!((lhs - rhs).abs() <= 1e-12, "x={x} q={q}");
            }
        }
    }

    #[test]
    fn q_number_exact_complement() {
        for q in samples() {
            for x in -4i64..=4 {
                let lhs = q_number_int(1 - x, &q.recip()).unwrap();
                assert_eq!(lhs, int(1) - q_number_int(x, &q).unwrap());
            }
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0, &rat(3, 7)), int(1));
        assert_eq!(q_factorial(3, &rat(1, 2)), rat(21, 8));
        assert_eq!(q_factorial(4, &int(1)), int(24));
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(2, 1, &rat(1, 2)), rat(3, 2));
        assert_eq!(gaussian_binomial(7, 0, &rat(1, 2)), int(1));
        assert_eq!(gaussian_binomial(4, 2, &int(2)), int(35));
        assert_eq!(gaussian_binomial(4, 5, &int(2)), int(0));
        assert_eq!(gaussian_binomial(4, -1, &int(2)), int(0));
        // q = 1 recovers the ordinary binomial
        assert_eq!(gaussian_binomial(6, 3, &int(1)), int(20));
        let coeffs: Vec<i64> = gaussian_binomial_coeffs(4, 2)
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(coeffs, vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn gaussian_binomial_matches_factorial_quotient() {
        for q in samples() {
            for k in 0..=8u64 {
                for j in 0..=k {
                    let quotient = q_factorial(k, &q) / (q_factorial(j, &q) * q_factorial(k - j, &q));
                    assert_eq!(gaussian_binomial(k, j as i64, &q), quotient);
                }
            }
        }
    }

    #[test]
    fn q_pascal_rule() {
        for q in samples().into_iter().chain([int(-1), int(1)]) {
            for k in 1..=12u64 {
                for j in 0..=k as i64 {
                    let lhs = gaussian_binomial(k, j, &q);
                    let rhs = gaussian_binomial(k - 1, j - 1, &q) + pow(&q, j) * gaussian_binomial(k - 1, j, &q);
                    assert_eq!(lhs, rhs, "k={k} j={j} q={q}");
                }
            }
        }
    }

    #[test]
    fn qbinom_upoly_examples() {
        let h = rat(1, 2);
        assert_eq!(qbinom_upoly(0, &h).unwrap(), UPoly::one());
        assert_eq!(qbinom_upoly(1, &h).unwrap(), UPoly::u());
        assert_eq!(
            qbinom_upoly(2, &h).unwrap(),
            UPoly::new(vec![int(0), rat(-4, 3), rat(4, 3)])
        );
        assert!(qbinom_upoly(2, &int(0)).is_err());
        assert!(qbinom_upoly(2, &int(-1)).is_err());
    }

    #[test]
    fn qbinom_upoly_agrees_at_integer_points() {
        // evaluate at u = [x]_q and compare with the defining product
        for q in samples().into_iter().chain([int(1)]) {
            for k in 0..=5u64 {
                let poly = qbinom_upoly(k, &q).unwrap();
                for x in -3i64..=6 {
                    let u = q_number_int(x, &q).unwrap();
                    let direct = (0..k as i64)
                        .map(|i| q_number_int(x - i, &q).unwrap())
                        .fold(Rational::one(), |a, b| a * b)
                        / q_factorial(k, &q);
                    assert_eq!(poly.eval(&u), direct, "k={k} x={x} q={q}");
                }
            }
        }
    }

    #[test]
    fn forward_difference_examples() {
        let sq = [int(0), int(1), int(4)];
        assert_eq!(forward_differences(&sq).unwrap(), vec![int(0), int(1), int(2)]);
        let c = rat(3, 7);
        assert_eq!(
            forward_differences(&[c.clone(), c.clone(), c.clone()]).unwrap(),
            vec![c, int(0), int(0)]
        );
        let cube = [int(0), int(1), int(8), int(27)];
        assert_eq!(forward_differences(&cube).unwrap(), vec![int(0), int(1), int(6), int(6)]);
        assert_eq!(forward_differences_alternating(&cube).unwrap(), vec![int(0), int(1), int(6), int(6)]);
        assert_eq!(forward_differences(&[]), Err(Error::Empty("forward_differences")));
    }

    #[test]
    fn stirling_examples() {
        for n in 0..=10 {
            assert_eq!(stirling2_u64(n, n), 1);
        }
        assert_eq!(stirling2_u64(3, 2), 3);
        assert_eq!(stirling2_u64(4, 2), 7);
        assert_eq!(stirling2_u64(2, 5), 0);
        assert_eq!(stirling2_u64(4, 0), 0);
    }

    #[test]
    fn stirling_recurrence() {
        for m in 1..=12u64 {
            for k in 1..=m {
                assert_eq!(
                    stirling2(m, k),
                    BigUint::from(k) * stirling2(m - 1, k) + stirling2(m - 1, k - 1),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn context_constructors() {
        assert!(QContext::float(0.0).is_err());
        assert!(QContext::float(f64::NAN).is_err());
        assert!(QContext::exact(int(1)).is_classical());
        assert_eq!(QContext::float(0.5).unwrap().as_f64(), 0.5);
        assert!(QContext::float(0.5).unwrap().as_exact().is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn difference_routes_agree(vals in prop::collection::vec((-50i64..50, 1i64..20), 1..10)) {
                let samples: Vec<Rational> = vals.iter().map(|&(a, b)| rat(a, b)).collect();
                prop_assert_eq!(
                    forward_differences(&samples).unwrap(),
                    forward_differences_alternating(&samples).unwrap()
                );
            }
        }
    }
}

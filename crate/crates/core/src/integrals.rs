//! Fermionic integrals of q-Bernstein polynomials and of their products.
//!
//! The direct route expands the integrand in `u = [x]_q` and replaces each
//! `u^l` by `E_{l,q}`. The reflected route writes the integrand in
//! `v = 1 - u = [1-x]_{1/q}` and uses `int v^m = 2 + E_{m,1/q}` for `m >= 1`.
//! The `*_printed` evaluators reproduce the misprinted reflected forms,
//! which carry `q` where `1/q` belongs.

use num_traits::{One, Zero};

use crate::bernstein::{basis_upoly, BernsteinIndex};
use crate::error::{pole, Error, Result};
use crate::euler::{euler_table, fermionic_sum_poly, EulerTable};
use crate::numeric::{binomial_q, pow, sign, Rational};
use crate::upoly::UPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralMethod {
    Direct,
    Reflected,
}

impl IntegralMethod {
    pub fn name(self) -> &'static str {
        match self {
            IntegralMethod::Direct => "direct",
            IntegralMethod::Reflected => "reflected",
        }
    }
}

/// Integral of `prod_i B_{k,n_i}^{m_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralInstance {
    pub k: u64,
    /// `(n_i, m_i)` pairs, `m_i >= 1`.
    pub degrees: Vec<(u64, u32)>,
    pub q: Rational,
}

impl IntegralInstance {
    pub fn new(k: u64, degrees: Vec<(u64, u32)>, q: Rational) -> Result<Self> {
        if degrees.iter().any(|&(_, m)| m == 0) {
            return Err(Error::Domain("powers m_i must be at least 1".into()));
        }
        Ok(IntegralInstance { k, degrees, q })
    }

    /// `M = sum m_i`
    pub fn total_power(&self) -> u64 {
        self.degrees.iter().map(|&(_, m)| m as u64).sum()
    }

    /// `sum m_i n_i`, the degree of the integrand.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&(n, m)| n * m as u64).sum()
    }

    /// `prod C(n_i, k)^{m_i}`
    pub fn prefactor(&self) -> Rational {
        self.degrees
            .iter()
            .map(|&(n, m)| pow(&binomial_q(n, self.k as i64), m as i64))
            .fold(Rational::one(), |a, b| a * b)
    }

    /// The integrand as a polynomial in `u`, by brute-force multiplication.
    pub fn integrand(&self) -> UPoly {
        self.degrees
            .iter()
            .map(|&(n, m)| basis_upoly(BernsteinIndex::new(self.k, n)).pow(m))
            .fold(UPoly::one(), |a, b| &a * &b)
    }
}

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || q.is_one() || *q == -Rational::one() {
        return Err(pole(q, "the reflected fermionic integral"));
    }
    Ok(())
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// `sum_j C(low, j) (-1)^j E_{j+offset,q}`: the integral of
/// `u^offset (1-u)^low`.
fn direct_sum(table: &EulerTable, offset: u64, low: u64) -> Rational {
    (0..=low)
        .map(|j| sign(j) * binomial_q(low, j as i64) * table.get((j + offset) as usize))
        .sum()
}

/// `sum_j C(a, j) (-1)^{a-j} (2 + E_{total-j})`: the integral of
/// `u^a (1-u)^{total-a}` through `v = 1 - u`. With `table` at `1/q` this is
/// the true value; at `q` it is the misprinted one.
fn reflected_sum(table: &EulerTable, a: u64, total: u64) -> Rational {
    (0..=a)
        .map(|j| sign(a - j) * binomial_q(a, j as i64) * (two() + table.get((total - j) as usize)))
        .sum()
}

/// `int B_{k,n}(x,q) dmu_{-1}(x) = C(n,k) sum_l C(n-k,l) (-1)^l E_{k+l,q}`;
/// zero for `n < k`.
pub fn integral_basis(k: u64, n: u64, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    if k > n {
        return Ok(Rational::zero());
    }
    let table = euler_table(q, n as usize)?;
    Ok(binomial_q(n, k as i64) * direct_sum(&table, k, n - k))
}

fn require_positive_gap(total: u64, a: u64) -> Result<()> {
    if total <= a {
        return Err(Error::Domain(format!(
            "reflected form needs total degree {total} > {a}"
        )));
    }
    Ok(())
}

/// Same integral through the reflected parameter: `2 + E_{n,1/q}` for
/// `k = 0`, otherwise `C(n,k) sum_j C(k,j) (-1)^{k+j} E_{n-j,1/q}`.
pub fn integral_basis_reflected(k: u64, n: u64, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    require_positive_gap(n, k)?;
    let table = euler_table(&q.recip(), n as usize)?;
    Ok(binomial_q(n, k as i64) * reflected_sum(&table, k, n))
}

/// The misprinted reflected form, with `E_{n-j,q}` in place of `E_{n-j,1/q}`.
pub fn integral_basis_reflected_printed(k: u64, n: u64, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    require_positive_gap(n, k)?;
    let table = euler_table(q, n as usize)?;
    Ok(binomial_q(n, k as i64) * reflected_sum(&table, k, n))
}

/// `int prod_i B_{k,n_i}` with `s = ns.len()` and `N = sum n_i`.
///
/// Direct: `prod C(n_i,k) sum_j C(N-sk, j) (-1)^j E_{j+sk,q}`.
/// Reflected (needs `N > sk`): `prod C(n_i,k) sum_j C(sk,j) (-1)^{sk-j}
/// (2 + E_{N-j,1/q})`, which is `2 + E_{N,1/q}` when `k = 0`.
pub fn integral_product(k: u64, ns: &[u64], q: &Rational, method: IntegralMethod) -> Result<Rational> {
    if ns.is_empty() {
        return Err(Error::Empty("integral_product"));
    }
    let instance = IntegralInstance::new(k, ns.iter().map(|&n| (n, 1)).collect(), q.clone())?;
    integral_power_product(&instance, method)
}

/// The misprinted reflected product form (parameter `q` instead of `1/q`).
pub fn integral_product_printed(k: u64, ns: &[u64], q: &Rational) -> Result<Rational> {
    check_q(q)?;
    if ns.is_empty() {
        return Err(Error::Empty("integral_product"));
    }
    let total: u64 = ns.iter().sum();
    let a = k * ns.len() as u64;
    require_positive_gap(total, a)?;
    let prefactor = ns
        .iter()
        .map(|&n| binomial_q(n, k as i64))
        .fold(Rational::one(), |x, y| x * y);
    let table = euler_table(q, total as usize)?;
    Ok(prefactor * reflected_sum(&table, a, total))
}

/// `int prod_i B_{k,n_i}^{m_i}` with `M = sum m_i`.
pub fn integral_power_product(instance: &IntegralInstance, method: IntegralMethod) -> Result<Rational> {
    let q = &instance.q;
    check_q(q)?;
    if instance.degrees.is_empty() {
        return Err(Error::Empty("integral_power_product"));
    }
    let total = instance.total_degree();
    let a = instance.k * instance.total_power();
    if instance.degrees.iter().any(|&(n, _)| n < instance.k) {
        return match method {
            IntegralMethod::Direct => Ok(Rational::zero()),
            IntegralMethod::Reflected => {
                require_positive_gap(total, a)?;
                Ok(Rational::zero())
            }
        };
    }
    let prefactor = instance.prefactor();
    match method {
        IntegralMethod::Direct => {
            let table = euler_table(q, total as usize)?;
            Ok(prefactor * direct_sum(&table, a, total - a))
        }
        IntegralMethod::Reflected => {
            require_positive_gap(total, a)?;
            let table = euler_table(&q.recip(), total as usize)?;
            Ok(prefactor * reflected_sum(&table, a, total))
        }
    }
}

/// Integrates the brute-force integrand expansion term by term. Independent
/// of both closed forms above.
pub fn integral_by_expansion(instance: &IntegralInstance) -> Result<Rational> {
    check_q(&instance.q)?;
    let integrand = instance.integrand();
    let table = euler_table(&instance.q, integrand.degree().unwrap_or(0))?;
    table.integrate(&integrand)
}

/// Truncated fermionic sum of `B_{k,n}` evaluated at `u = [x]_q`.
pub fn integral_basis_oracle(k: u64, n: u64, q: &Rational, p: u64, level: u32) -> Result<Rational> {
    fermionic_sum_poly(&basis_upoly(BernsteinIndex::new(k, n)), q, p, level)
}

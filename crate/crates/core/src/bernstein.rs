//! The q-Bernstein basis `B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_{1/q}^{n-k}`.
//!
//! Since `[1-x]_{1/q} = 1 - [x]_q`, every basis element is the polynomial
//! `C(n,k) u^k (1-u)^{n-k}` in `u = [x]_q`. The exact routines work in `u`
//! directly; the `_real` routines take `(x, q)` and go through
//! [`q_number_real`].

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial_q, pow, sign, Rational};
use crate::qcore::{forward_differences, q_number_real};
use crate::upoly::UPoly;

/// Index `(k, n)` of `B_{k,n}`. `k > n` is allowed and denotes the zero
/// polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BernsteinIndex {
    pub k: u64,
    pub n: u64,
}

impl BernsteinIndex {
    pub fn new(k: u64, n: u64) -> Self {
        BernsteinIndex { k, n }
    }

    pub fn is_zero(&self) -> bool {
        self.k > self.n
    }
}

/// `C(n,k) u^k (1-u)^{n-k}`, or zero when `n < k`.
pub fn basis_eval_exact(idx: BernsteinIndex, u: &Rational) -> Rational {
    if idx.is_zero() {
        return Rational::zero();
    }
    let BernsteinIndex { k, n } = idx;
    binomial_q(n, k as i64) * pow(u, k as i64) * pow(&(Rational::one() - u), (n - k) as i64)
}

fn basis_at_u(k: i64, n: i64, u: f64) -> f64 {
    if k < 0 || n < 0 || k > n {
        return 0.0;
    }
    let c = crate::numeric::to_f64(&binomial_q(n as u64, k));
    c * u.powi(k as i32) * (1.0 - u).powi((n - k) as i32)
}

/// Floating-point `B_{k,n}(x, q)`; `q = 1` is the classical basis.
pub fn basis_eval_real(idx: BernsteinIndex, x: f64, q: f64) -> Result<f64> {
    let u = q_number_real(x, q)?;
    Ok(basis_at_u(idx.k as i64, idx.n as i64, u))
}

/// Monomial expansion: the coefficient of `u^l` is
/// `(-1)^{l-k} C(n,l) C(l,k)` for `k <= l <= n`.
pub fn basis_upoly(idx: BernsteinIndex) -> UPoly {
    if idx.is_zero() {
        return UPoly::zero();
    }
    let BernsteinIndex { k, n } = idx;
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for l in k..=n {
        coeffs[l as usize] = sign(l - k) * binomial_q(n, l as i64) * binomial_q(l, k as i64);
    }
    UPoly::new(coeffs)
}

/// The misprinted expansion with `C(l,k) C(n,k)` in place of
/// `C(n,l) C(l,k)`. Kept only so that its failure can be demonstrated.
pub fn basis_upoly_printed(idx: BernsteinIndex) -> UPoly {
    if idx.is_zero() {
        return UPoly::zero();
    }
    let BernsteinIndex { k, n } = idx;
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for l in k..=n {
        coeffs[l as usize] = sign(l - k) * binomial_q(l, k as i64) * binomial_q(n, k as i64);
    }
    UPoly::new(coeffs)
}

/// Brute-force expansion of `C(n,k) u^k (1-u)^{n-k}` by polynomial
/// multiplication. Independent of the closed coefficient formula.
pub fn basis_upoly_expanded(idx: BernsteinIndex) -> UPoly {
    if idx.is_zero() {
        return UPoly::zero();
    }
    let BernsteinIndex { k, n } = idx;
    (&UPoly::u().pow(k as u32) * &UPoly::one_minus_u().pow((n - k) as u32))
        .scale(&binomial_q(n, k as i64))
}

/// Evaluates `sum_k coeffs[k] B_{k,n}(u)` with `n = coeffs.len() - 1` by
/// repeated convex combination.
pub fn decasteljau_eval(coeffs: &[Rational], u: &Rational) -> Result<Rational> {
    if coeffs.is_empty() {
        return Err(Error::Empty("decasteljau_eval"));
    }
    let one_minus = Rational::one() - u;
    let mut row = coeffs.to_vec();
    while row.len() > 1 {
        row = row
            .windows(2)
            .map(|w| &one_minus * &w[0] + u * &w[1])
            .collect();
    }
    Ok(row.pop().expect("nonempty"))
}

pub fn decasteljau_eval_f64(coeffs: &[f64], u: f64) -> Result<f64> {
    if coeffs.is_empty() {
        return Err(Error::Empty("decasteljau_eval"));
    }
    let mut row = coeffs.to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|w| (1.0 - u) * w[0] + u * w[1]).collect();
    }
    Ok(row[0])
}

/// `d/dx B_{k,n}(x, q) = n (B_{k-1,n-1} - B_{k,n-1}) q^x ln(q) / (q - 1)`,
/// with `B_{-1,m} = 0`. The chain factor is 1 at `q = 1`.
pub fn basis_derivative(idx: BernsteinIndex, x: f64, q: f64) -> Result<f64> {
    let u = q_number_real(x, q)?;
    let (k, n) = (idx.k as i64, idx.n as i64);
    if n == 0 {
        return Ok(0.0);
    }
    let chain = if q == 1.0 {
        1.0
    } else {
        (q - 1.0).ln_1p() / (q - 1.0) * q.powf(x)
    };
    Ok(n as f64 * (basis_at_u(k - 1, n - 1, u) - basis_at_u(k, n - 1, u)) * chain)
}

/// `B_{k,n} = (n+1-k)/(n+1) B_{k,n+1} + (k+1)/(n+1) B_{k+1,n+1}`
pub fn degree_elevate(idx: BernsteinIndex) -> [(Rational, BernsteinIndex); 2] {
    let BernsteinIndex { k, n } = idx;
    let denom = Rational::from_integer((n + 1).into());
    let left = Rational::from_integer((n as i64 + 1 - k as i64).into()) / &denom;
    let right = Rational::from_integer((k + 1).into()) / &denom;
    [
        (left, BernsteinIndex::new(k, n + 1)),
        (right, BernsteinIndex::new(k + 1, n + 1)),
    ]
}

/// Coefficients `c_k = C(k,j) / C(n,j)` (zero for `k < j`) with
/// `sum_k c_k B_{k,n} = u^j`.
pub fn monomial_in_basis(j: u64, n: u64) -> Result<Vec<Rational>> {
    if j > n {
        return Err(Error::Domain(format!(
            "u^{j} is not in the span of degree-{n} basis"
        )));
    }
    let denom = binomial_q(n, j as i64);
    Ok((0..=n).map(|k| binomial_q(k, j as i64) / &denom).collect())
}

/// `sum_k c_k B_{k,n}` as a polynomial in `u`.
pub fn combination_upoly(coeffs: &[Rational]) -> UPoly {
    let n = coeffs.len().saturating_sub(1) as u64;
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| basis_upoly(BernsteinIndex::new(k as u64, n)).scale(c))
        .sum()
}

/// Three algebraically different evaluations of the Bernstein operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorMethod {
    /// `sum_k f(k/n) B_{k,n}(u)`
    Direct,
    /// `sum_m C(n,m) u^m sum_k C(m,k) (-1)^{m-k} f(k/n)`
    Kim,
    /// `sum_k C(n,k) u^k Delta^k f(0)`
    Difference,
}

impl OperatorMethod {
    pub const ALL: [OperatorMethod; 3] = [
        OperatorMethod::Direct,
        OperatorMethod::Kim,
        OperatorMethod::Difference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorMethod::Direct => "direct",
            OperatorMethod::Kim => "kim",
            OperatorMethod::Difference => "difference",
        }
    }
}

/// Applies the order-`n` operator to the samples `f(0/n), ..., f(n/n)` at
/// `u = [x]_q`.
pub fn operator_apply(
    n: u64,
    samples: &[Rational],
    u: &Rational,
    method: OperatorMethod,
) -> Result<Rational> {
    if samples.len() as u64 != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n as usize + 1,
            got: samples.len(),
        });
    }
    let value = match method {
        OperatorMethod::Direct => samples
            .iter()
            .enumerate()
            .map(|(k, f)| f * basis_eval_exact(BernsteinIndex::new(k as u64, n), u))
            .sum(),
        OperatorMethod::Kim => (0..=n)
            .map(|m| {
                let inner: Rational = (0..=m)
                    .map(|k| sign(m - k) * binomial_q(m, k as i64) * &samples[k as usize])
                    .sum();
                binomial_q(n, m as i64) * pow(u, m as i64) * inner
            })
            .sum(),
        OperatorMethod::Difference => forward_differences(samples)?
            .iter()
            .enumerate()
            .map(|(k, d)| binomial_q(n, k as i64) * pow(u, k as i64) * d)
            .sum(),
    };
    Ok(value)
}

/// Float operator value `sum_k f_k B_{k,n}(x, q)`.
pub fn operator_apply_real(samples: &[f64], x: f64, q: f64) -> Result<f64> {
    decasteljau_eval_f64(samples, q_number_real(x, q)?)
}

/// Samples `(k/n)^m` for `k = 0..=n`, with `0^0 = 1`.
pub fn monomial_samples(m: u32, n: u64) -> Vec<Rational> {
    (0..=n)
        .map(|k| pow(&Rational::new(k.into(), n.max(1).into()), m as i64))
        .collect()
}

/// Coefficients of `t^m / m!`, `m = 0..=order`, in the generating series
/// `(t u)^k e^{(1-u) t} / k!`, computed by truncated series multiplication.
/// Coefficient `m` equals `B_{k,m}(u)`.
pub fn generating_coeffs(k: u64, u: &Rational, order: u64) -> Vec<Rational> {
    let len = order as usize + 1;
    // ordinary coefficients of t^i
    let mut left = vec![Rational::zero(); len];
    if (k as usize) < len {
        left[k as usize] = pow(u, k as i64) / factorial_q(k);
    }
    let one_minus = Rational::one() - u;
    let mut right = Vec::with_capacity(len);
    let mut term = Rational::one();
    for j in 0..len {
        if j > 0 {
            term = term * &one_minus / Rational::from_integer((j as u64).into());
        }
        right.push(term.clone());
    }
    (0..len)
        .map(|m| {
            let c: Rational = (0..=m).map(|i| &left[i] * &right[m - i]).sum();
            c * factorial_q(m as u64)
        })
        .collect()
}

fn factorial_q(n: u64) -> Rational {
    Rational::from_integer(crate::numeric::factorial(n).into())
}

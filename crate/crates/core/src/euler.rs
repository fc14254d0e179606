//! q-Euler numbers and polynomials.
//!
//! `E_{n,q}` are the fermionic moments of `[x]_q`. They are generated by the
//! umbral recurrence `(q E + 1)^n + E_n = 0`, cross-checked by the closed sum
//! `2 (1-q)^{-n} sum_l C(n,l) (-1)^l / (1 + q^l)` and, p-adically, by the
//! truncated alternating sums `sum_{x < p^N} (-1)^x [x]_q^n`.

use num_traits::{One, Zero};

use crate::error::{pole, Error, Result};
use crate::numeric::{binomial_q, check_odd_prime, padic_valuation, pow, sign, Rational, Valuation};
use crate::qcore::q_number_int;
use crate::upoly::UPoly;

/// `E_{0,q}, ..., E_{N,q}` for one rational q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    q: Rational,
    values: Vec<Rational>,
}

impl EulerTable {
    /// Runs the recurrence `E_n = -(sum_{l<n} C(n,l) q^l E_l) / (1 + q^n)`.
    /// `q = 1` yields the classical Euler numbers.
    pub fn new(q: Rational, nmax: usize) -> Result<Self> {
        let table = EulerTable {
            q,
            values: vec![Rational::one()],
        };
        table.extend(nmax)
    }

    /// A table holding at least `E_0..=E_nmax`, reusing the computed prefix.
    pub fn extend(&self, nmax: usize) -> Result<Self> {
        let mut values = self.values.clone();
        let q = &self.q;
        for n in values.len()..=nmax {
            let denom = Rational::one() + pow(q, n as i64);
            if denom.is_zero() {
                return Err(pole(q, "the q-Euler recurrence"));
            }
            let acc: Rational = values
                .iter()
                .enumerate()
                .map(|(l, e)| binomial_q(n as u64, l as i64) * pow(q, l as i64) * e)
                .sum();
            values.push(-acc / denom);
        }
        Ok(EulerTable {
            q: self.q.clone(),
            values,
        })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn nmax(&self) -> usize {
        self.values.len() - 1
    }

    /// `E_{n,q}`; panics past the table end.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    /// `E_{n,q}(x) = sum_l C(n,l) q^{l x} E_{l,q} [x]_q^{n-l}` for integer x.
    pub fn poly(&self, n: usize, x: i64) -> Result<Rational> {
        if n > self.nmax() {
            return self.extend(n)?.poly(n, x);
        }
        if x < 0 && self.q.is_zero() {
            return Err(pole(&self.q, "E_{n,q}(x) with negative x"));
        }
        let qx = pow(&self.q, x);
        let ux = q_number_int(x, &self.q)?;
        Ok((0..=n)
            .map(|l| {
                binomial_q(n as u64, l as i64)
                    * pow(&qx, l as i64)
                    * &self.values[l]
                    * pow(&ux, (n - l) as i64)
            })
            .sum())
    }

    /// Fermionic integral of a polynomial in `u = [x]_q`:
    /// `sum_l c_l E_{l,q}`.
    pub fn integrate(&self, poly: &UPoly) -> Result<Rational> {
        let table = match poly.degree() {
            Some(d) if d > self.nmax() => std::borrow::Cow::Owned(self.extend(d)?),
            _ => std::borrow::Cow::Borrowed(self),
        };
        Ok(poly
            .coeffs()
            .iter()
            .zip(table.values())
            .map(|(c, e)| c * e)
            .sum())
    }
}

fn check_generic_q(q: &Rational, context: &'static str) -> Result<()> {
    if q.is_one() || *q == -Rational::one() {
        return Err(pole(q, context));
    }
    Ok(())
}

pub fn euler_table(q: &Rational, nmax: usize) -> Result<EulerTable> {
    EulerTable::new(q.clone(), nmax)
}

/// Closed-sum evaluation of `E_{n,q}`; independent of the recurrence.
pub fn euler_closed(n: usize, q: &Rational) -> Result<Rational> {
    check_generic_q(q, "the closed q-Euler sum")?;
    let sum: Rational = (0..=n)
        .map(|l| sign(l as u64) * binomial_q(n as u64, l as i64) / (Rational::one() + pow(q, l as i64)))
        .sum();
    Ok(sum * Rational::from_integer(2.into()) / pow(&(Rational::one() - q), n as i64))
}

/// `E_{n,q}(x)` for integer x.
pub fn euler_poly(n: usize, x: i64, q: &Rational) -> Result<Rational> {
    check_generic_q(q, "the q-Euler polynomial")?;
    euler_table(q, n)?.poly(n, x)
}

/// Closed form `2 (1-q)^{-n} sum_l C(n,l) (-1)^l q^{l x} / (1 + q^l)`.
pub fn euler_poly_closed(n: usize, x: i64, q: &Rational) -> Result<Rational> {
    check_generic_q(q, "the q-Euler polynomial")?;
    if x < 0 && q.is_zero() {
        return Err(pole(q, "E_{n,q}(x) with negative x"));
    }
    let qx = pow(q, x);
    let sum: Rational = (0..=n)
        .map(|l| {
            sign(l as u64) * binomial_q(n as u64, l as i64) * pow(&qx, l as i64)
                / (Rational::one() + pow(q, l as i64))
        })
        .sum();
    Ok(sum * Rational::from_integer(2.into()) / pow(&(Rational::one() - q), n as i64))
}

/// Float `E_{n,q}(x)` for real `x` and `q > 0`, `q != 1`.
pub fn euler_poly_real(n: usize, x: f64, q: f64) -> Result<f64> {
    if !(q.is_finite() && q > 0.0) || q == 1.0 {
        return Err(Error::Domain(format!("real q-Euler polynomial needs q > 0, q != 1, got {q}")));
    }
    let binom = |n: usize, l: usize| crate::numeric::to_f64(&binomial_q(n as u64, l as i64));
    let mut table = vec![1.0f64];
    for m in 1..=n {
        let acc: f64 = (0..m).map(|l| binom(m, l) * q.powi(l as i32) * table[l]).sum();
        table.push(-acc / (1.0 + q.powi(m as i32)));
    }
    let qx = q.powf(x);
    let ux = crate::qcore::q_number_real(x, q)?;
    Ok((0..=n)
        .map(|l| binom(n, l) * qx.powi(l as i32) * table[l] * ux.powi((n - l) as i32))
        .sum())
}

/// `E_{m,q}(shift) + (-1)^{shift-1} E_{m,q}`.
pub fn shift_moment(shift: u64, m: usize, q: &Rational) -> Result<Rational> {
    check_generic_q(q, "the shifted fermionic moment")?;
    if shift == 0 {
        return Err(Error::Domain("shift must be positive".into()));
    }
    let table = euler_table(q, m)?;
    Ok(table.poly(m, shift as i64)? + sign(shift - 1) * table.get(m))
}

/// `2 sum_{l<shift} (-1)^{shift-l-1} [l]_q^m`, the value `shift_moment`
/// must reproduce.
pub fn shift_moment_rhs(shift: u64, m: usize, q: &Rational) -> Result<Rational> {
    let sum: Rational = (0..shift)
        .map(|l| Ok(sign(shift - l - 1) * pow(&q_number_int(l as i64, q)?, m as i64)))
        .sum::<Result<Rational>>()?;
    Ok(sum * Rational::from_integer(2.into()))
}

/// `(E_{n,1/q}(1-x), (-1)^n q^n E_{n,q}(x))`; the components agree.
pub fn reflection_check(n: usize, x: i64, q: &Rational) -> Result<(Rational, Rational)> {
    check_generic_q(q, "the reflection formula")?;
    if q.is_zero() {
        return Err(pole(q, "the reflection formula"));
    }
    let lhs = euler_poly(n, 1 - x, &q.recip())?;
    let rhs = sign(n as u64) * pow(q, n as i64) * euler_poly(n, x, q)?;
    Ok((lhs, rhs))
}

fn check_reflectable(q: &Rational, context: &'static str) -> Result<()> {
    check_generic_q(q, context)?;
    if q.is_zero() {
        return Err(pole(q, context));
    }
    Ok(())
}

/// `sum_l C(n,l) (-1)^l E_{l,q}`, the fermionic moment of `(1 - [x]_q)^n`.
pub fn complement_moment(n: usize, q: &Rational) -> Result<Rational> {
    check_reflectable(q, "the complement moment")?;
    let table = euler_table(q, n)?;
    Ok((0..=n)
        .map(|l| sign(l as u64) * binomial_q(n as u64, l as i64) * table.get(l))
        .sum())
}

/// Value of the complement moment through the reflected parameter:
/// `2 + E_{n,1/q}` for `n >= 1`, and `1` for `n = 0`.
pub fn complement_moment_reflected(n: usize, q: &Rational) -> Result<Rational> {
    check_reflectable(q, "the complement moment")?;
    if n == 0 {
        return Ok(Rational::one());
    }
    Ok(Rational::from_integer(2.into()) + euler_table(&q.recip(), n)?.get(n))
}

/// The misprinted right-hand side `2 + E_{n,q}`; fails already at
/// `n = 1, q = 1/2`.
pub fn complement_moment_printed(n: usize, q: &Rational) -> Result<Rational> {
    check_reflectable(q, "the complement moment")?;
    Ok(Rational::from_integer(2.into()) + euler_table(q, n)?.get(n))
}

/// Checks that `q` is in the convergence region `|1 - q|_p < 1`.
pub fn check_fermionic_domain(q: &Rational, p: u64, level: u32) -> Result<()> {
    check_odd_prime(p)?;
    if level == 0 {
        return Err(Error::Domain("fermionic sum level must be at least 1".into()));
    }
    let near_one = padic_valuation(&(q - Rational::one()), p)? >= Valuation::Finite(1);
    let integral = padic_valuation(q, p)? >= Valuation::Finite(0);
    if !(near_one && integral) {
        return Err(Error::Domain(format!(
            "fermionic sum needs |1 - q|_{p} < 1, got q = {q}"
        )));
    }
    Ok(())
}

/// `sum_{x=0}^{p^N - 1} (-1)^x f([x]_q)` for a polynomial `f` in `u`.
pub fn fermionic_sum_poly(poly: &UPoly, q: &Rational, p: u64, level: u32) -> Result<Rational> {
    check_fermionic_domain(q, p, level)?;
    let count = p
        .checked_pow(level)
        .ok_or_else(|| Error::Domain(format!("p^N overflows for p = {p}, N = {level}")))?;
    let mut u = Rational::zero();
    let mut total = Rational::zero();
    for x in 0..count {
        let term = poly.eval(&u);
        if x % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        // [x+1]_q = 1 + q [x]_q
        u = Rational::one() + q * &u;
    }
    Ok(total)
}

/// Truncated fermionic sum `S_N = sum_{x < p^N} (-1)^x [x]_q^n`, whose
/// p-adic distance to `E_{n,q}` shrinks as `N` grows.
pub fn fermionic_sum(n: usize, q: &Rational, p: u64, level: u32) -> Result<Rational> {
    fermionic_sum_poly(&UPoly::monomial(Rational::one(), n), q, p, level)
}

/// One level of the p-adic convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleLevel {
    pub level: u32,
    pub sum: Rational,
    pub valuation: Valuation,
}

/// `S_N` and `v_p(S_N - E_{n,q})` for `N = 1..=levels`.
pub fn fermionic_convergence(n: usize, q: &Rational, p: u64, levels: u32) -> Result<Vec<OracleLevel>> {
    check_fermionic_domain(q, p, levels.max(1))?;
    let target = euler_table(q, n)?.get(n).clone();
    (1..=levels)
        .map(|level| {
            let sum = fermionic_sum(n, q, p, level)?;
            let valuation = padic_valuation(&(&sum - &target), p)?;
            Ok(OracleLevel { level, sum, valuation })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn sample_qs() -> Vec<Rational> {
        vec![rat(1, 2), rat(2, 3), rat(3, 5), rat(5, 4), int(3)]
    }

    #[test]
    fn table_examples() {
        let t = euler_table(&rat(1, 2), 4).unwrap();
        assert_eq!(t.get(0), &int(1));
        assert_eq!(t.get(1), &rat(-2, 3));
        assert_eq!(t.get(2), &rat(-4, 15));
        assert_eq!(t.get(4), &rat(464, 765));
        let t2 = euler_table(&int(2), 4).unwrap();
        assert_eq!(t2.get(4), &rat(-29, 765));
    }

    #[test]
    fn classical_euler_numbers() {
        // (E + 1)^n + E_n = 0 gives 1, -1/2, 0, 1/4, 0, -1/2
        let t = euler_table(&int(1), 5).unwrap();
        assert_eq!(
            t.values(),
            &[int(1), rat(-1, 2), int(0), rat(1, 4), int(0), rat(-1, 2)]
        );
    }

    #[test]
    fn table_rejects_minus_one() {
        assert!(euler_table(&int(-1), 0).is_ok());
        assert!(matches!(euler_table(&int(-1), 1), Err(Error::Pole { .. })));
    }

    #[test]
    fn extension_keeps_prefix() {
        let short = euler_table(&rat(2, 3), 3).unwrap();
        let long = short.extend(8).unwrap();
        assert_eq!(&long.values()[..4], short.values());
        assert_eq!(long, euler_table(&rat(2, 3), 8).unwrap());
        assert_eq!(short.nmax(), 3);
    }

    #[test]
    fn recurrence_invariant_holds() {
        for q in sample_qs() {
            let t = euler_table(&q, 12).unwrap();
            for n in 1..=12usize {
                let s: Rational = (0..=n)
                    .map(|l| binomial_q(n as u64, l as i64) * pow(&q, l as i64) * t.get(l))
                    .sum();
                assert!((s + t.get(n)).is_zero());
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(euler_closed(0, &rat(3, 7)).unwrap(), int(1));
        assert_eq!(euler_closed(1, &rat(1, 2)).unwrap(), rat(-2, 3));
        assert_eq!(euler_closed(2, &int(2)).unwrap(), rat(1, 15));
        assert!(euler_closed(2, &int(1)).is_err());
        assert!(euler_closed(2, &int(-1)).is_err());
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for q in sample_qs() {
            let t = euler_table(&q, 20).unwrap();
            for n in 0..=20 {
                assert_eq!(&euler_closed(n, &q).unwrap(), t.get(n), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let h = rat(1, 2);
        let t = euler_table(&h, 10).unwrap();
        for n in 0..=10 {
            assert_eq!(&euler_poly(n, 0, &h).unwrap(), t.get(n));
        }
        assert_eq!(euler_poly(1, 1, &h).unwrap(), rat(2, 3));
        assert_eq!(euler_poly(1, 2, &h).unwrap(), rat(4, 3));
    }

    #[test]
    fn polynomial_forms_agree() {
        for q in sample_qs() {
            for n in 0..=8 {
                for x in -3..=4 {
                    assert_eq!(euler_poly(n, x, &q).unwrap(), euler_poly_closed(n, x, &q).unwrap());
                }
            }
        }
    }

    #[test]
    fn real_polynomial_tracks_exact() {
        for (q, qf) in [(rat(1, 2), 0.5), (int(3), 3.0)] {
            for n in 0..=6 {
                for x in 0..=3 {
                    let exact = crate::numeric::to_f64(&euler_poly(n, x, &q).unwrap());
                    let float = euler_poly_real(n, x as f64, qf).unwrap();
                    assert!((exact - float).abs() <= 1e-9 * exact.abs().max(1.0));
                }
            }
        }
        assert!(euler_poly_real(2, 0.5, 1.0).is_err());
    }

    #[test]
    fn shift_moment_examples() {
        let h = rat(1, 2);
        assert_eq!(shift_moment(1, 1, &h).unwrap(), int(0));
        assert_eq!(shift_moment(1, 0, &rat(3, 5)).unwrap(), int(2));
        assert_eq!(shift_moment(2, 1, &h).unwrap(), int(2));
    }

    #[test]
    fn shift_moment_contract() {
        for q in sample_qs() {
            for shift in 1..=4 {
                for m in 0..=8 {
                    assert_eq!(shift_moment(shift, m, &q).unwrap(), shift_moment_rhs(shift, m, &q).unwrap());
                }
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let h = rat(1, 2);
        assert_eq!(reflection_check(1, 0, &h).unwrap(), (rat(1, 3), rat(1, 3)));
        assert_eq!(reflection_check(1, 1, &h).unwrap(), (rat(-1, 3), rat(-1, 3)));
        assert_eq!(reflection_check(0, 5, &int(3)).unwrap(), (int(1), int(1)));
        assert!(reflection_check(2, 0, &int(0)).is_err());
    }

    #[test]
    fn reflection_holds() {
        for q in sample_qs() {
            for n in 0..=10 {
                for x in -2..=3 {
                    let (a, b) = reflection_check(n, x, &q).unwrap();
                    assert_eq!(a, b, "n={n} x={x} q={q}");
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        let h = rat(1, 2);
        assert_eq!(complement_moment(1, &h).unwrap(), rat(5, 3));
        assert_eq!(complement_moment_reflected(1, &h).unwrap(), rat(5, 3));
        assert_eq!(complement_moment(2, &h).unwrap(), rat(31, 15));
        assert_eq!(complement_moment(0, &rat(2, 3)).unwrap(), int(1));
        assert_eq!(complement_moment_reflected(0, &rat(2, 3)).unwrap(), int(1));
    }

    #[test]
    fn complement_reflected_contract() {
        for q in sample_qs() {
            for n in 1..=12 {
                assert_eq!(complement_moment(n, &q).unwrap(), complement_moment_reflected(n, &q).unwrap());
            }
        }
    }

    #[test]
    fn complement_printed_contract_fails() {
        let h = rat(1, 2);
        assert_eq!(complement_moment_printed(1, &h).unwrap(), rat(4, 3));
        assert_ne!(complement_moment(1, &h).unwrap(), complement_moment_printed(1, &h).unwrap());
    }

    #[test]
    fn fermionic_sum_anchors() {
        let q = int(4);
        let s1 = fermionic_sum(1, &q, 3, 1).unwrap();
        assert_eq!(s1, int(4));
        assert_eq!(padic_valuation(&(s1 - rat(-1, 5)), 3).unwrap(), Valuation::Finite(1));
        let s2 = fermionic_sum(1, &q, 3, 2).unwrap();
        assert_eq!(s2, int(17476));
        assert_eq!(padic_valuation(&(s2 + rat(1, 5)), 3).unwrap(), Valuation::Finite(2));
        for level in 1..=3 {
            assert_eq!(fermionic_sum(0, &rat(7, 4), 3, level).unwrap(), int(1));
        }
    }

    #[test]
    fn geometric_closed_form() {
        // for odd p^N, S_N = (1 - (1 - (-q)^{p^N}) / (1 + q)) / (1 - q) when n = 1
        let q = int(4);
        for level in 1..=3u32 {
            let count = 3i64.pow(level);
            let one = int(1);
            let expected = (&one - (&one - pow(&-q.clone(), count)) / (&one + &q)) / (&one - &q);
            assert_eq!(fermionic_sum(1, &q, 3, level).unwrap(), expected);
        }
    }

    #[test]
    fn fermionic_domain_errors() {
        assert!(fermionic_sum(1, &int(2), 3, 1).is_err());
        assert!(fermionic_sum(1, &int(4), 2, 1).is_err());
        assert!(fermionic_sum(1, &int(4), 3, 0).is_err());
        assert!(fermionic_sum(1, &rat(4, 3), 3, 1).is_err());
    }

    #[test]
    fn convergence_is_monotone() {
        let exact = fermionic_convergence(0, &int(4), 3, 5).unwrap();
        assert!(exact.iter().all(|l| l.valuation == Valuation::Infinite));
        for n in 1..=4 {
            let levels = fermionic_convergence(n, &int(4), 3, 5).unwrap();
            let vals: Vec<Valuation> = levels.iter().map(|l| l.valuation).collect();
            for (i, v) in vals.iter().enumerate() {
                assert!(*v >= Valuation::Finite(i as i64 + 1), "n={n} {vals:?}");
            }
            assert!(vals.windows(2).all(|w| w[0] < w[1]), "n={n} {vals:?}");
        }
    }

    #[test]
    fn integrate_polynomial() {
        let t = euler_table(&rat(1, 2), 2).unwrap();
        let p = &UPoly::u() * &UPoly::one_minus_u();
        assert_eq!(t.integrate(&p).unwrap(), rat(-2, 3) - rat(-4, 15));
        // grows the table on demand
        assert_eq!(t.integrate(&UPoly::monomial(int(1), 4)).unwrap(), rat(464, 765));
    }
}

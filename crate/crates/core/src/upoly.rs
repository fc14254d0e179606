//! Dense univariate polynomials in `u = [x]_q` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::numeric::{format_rational, Rational};

/// Dense polynomial; `coeffs[i]` multiplies `u^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and derived equality
/// is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    /// `c * u^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UPoly::new(coeffs)
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        UPoly::monomial(Rational::one(), 1)
    }

    /// `1 - u`
    pub fn one_minus_u() -> Self {
        UPoly::new(vec![Rational::one(), -Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * u + c)
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + crate::numeric::to_f64(c))
    }

    /// `p(g(u))`
    pub fn compose(&self, g: &UPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| &(&acc * g) + &UPoly::constant(c.clone()))
    }

    /// The substitution `u -> 1 - u`.
    pub fn reflect(&self) -> Self {
        self.compose(&UPoly::one_minus_u())
    }
}

impl fmt::Display for UPoly {
    /// Coefficient list, lowest power first: `[0, 2, -2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str("]")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for UPoly {
            type Output = UPoly;
            fn $method(self, rhs: UPoly) -> UPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for UPoly {
    fn sum<I: Iterator<Item = UPoly>>(iter: I) -> UPoly {
        iter.fold(UPoly::zero(), |acc, p| &acc + &p)
    }
}

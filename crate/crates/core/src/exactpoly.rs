//! Exact rational-coefficient polynomials in a single variable `μ`.
//!
//! These are used as the exact reference for every one-dimensional integral
//! whose integrand is a polynomial on each integration panel. Coefficients are
//! arbitrary-precision rationals so that Legendre polynomials of any degree
//! can be represented without overflow.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer-valued rational `v`.
pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Polynomial `Σ coeffs[k] μ^k` with exact rational coefficients.
///
/// The highest stored coefficient is never zero; the zero polynomial has an
/// empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// `c μ^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `μ`.
    pub fn mu() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// Takes ascending-power coefficients and strips trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from small integer fractions `(num, den)`.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `μ^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `c·p(μ)`, or `c·μ·p(μ)` when `by_mu` is set.
    pub fn scale_shift(&self, c: &Rational, by_mu: bool) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + usize::from(by_mu));
        if by_mu {
            coeffs.push(Rational::zero());
        }
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * integer(k as i64))
                .collect(),
        )
    }

    /// `m`-th derivative.
    pub fn nth_derivative(&self, m: usize) -> Self {
        (0..m).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(-μ)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        )
    }

    /// Exact value at a rational point (Horner).
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// Floating-point value at `x`, Horner on rounded coefficients.
    ///
    /// Only well conditioned for moderate degree; high-degree Legendre values
    /// should come from the three-term recurrence instead.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * x + to_f64(a))
    }

    /// Exact `∫_lower^upper p(μ) dμ`, term by term.
    pub fn integrate(&self, lower: &Rational, upper: &Rational) -> Rational {
        let mut sum = Rational::zero();
        let mut up = upper.clone();
        let mut lo = lower.clone();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                sum += a * (&up - &lo) / integer(k as i64 + 1);
            }
            up *= upper;
            lo *= lower;
        }
        sum
    }
}

/// `p + q`.
pub fn poly_add(p: &RationalPolynomial, q: &RationalPolynomial) -> RationalPolynomial {
    p + q
}

/// `c·p`, or `c·μ·p` when `by_mu` is set.
pub fn poly_scale_shift(p: &RationalPolynomial, c: &Rational, by_mu: bool) -> RationalPolynomial {
    p.scale_shift(c, by_mu)
}

/// Exact `∫_lower^upper p(μ) dμ`.
pub fn integrate_monomial_basis(p: &RationalPolynomial, lower: &Rational, upper: &Rational) -> Rational {
    p.integrate(lower, upper)
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self + &rhs
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Sub for RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self - &rhs
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})μ")?,
                _ => write!(f, "({a})μ^{k}")?,
            }
        }
        Ok(())
    }
}

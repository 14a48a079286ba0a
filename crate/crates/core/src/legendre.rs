//! Legendre polynomials `P_n` and associated Legendre functions `P_n^m`.
//!
//! Exact tables are built from the three-term recurrence
//! `(n+1) P_{n+1} = (2n+1) μ P_n − n P_{n−1}` on rational coefficients.
//! Floating-point values always come from recurrences evaluated at the point,
//! never from expanded monomial coefficients.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactpoly::{Rational, RationalPolynomial};
use crate::{Error, Result};

/// Sign convention for `P_n^m`, `m ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PhaseConvention {
    /// `P_n^m = (1−μ²)^{m/2} d^m P_n / dμ^m`.
    #[default]
    Plain,
    /// Plain times `(−1)^m`.
    CondonShortley,
}

impl PhaseConvention {
    /// Factor relative to [`PhaseConvention::Plain`] at order `m`.
    pub fn sign(self, m: usize) -> f64 {
        match self {
            PhaseConvention::CondonShortley if m % 2 == 1 => -1.0,
            _ => 1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PhaseConvention::Plain => "plain",
            PhaseConvention::CondonShortley => "cs",
        }
    }
}

/// Exact `P_0 .. P_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreTable {
    polys: Vec<RationalPolynomial>,
}

impl LegendreTable {
    pub fn build(max_degree: usize) -> Result<Self> {
        if max_degree < 1 {
            return Err(Error::TableTooSmall(max_degree));
        }
        let mut polys = Vec::with_capacity(max_degree + 1);
        polys.push(RationalPolynomial::one());
        polys.push(RationalPolynomial::mu());
        for n in 1..max_degree {
            let next = &polys[n].scale_shift(&Rational::new(BigInt::from(2 * n + 1), BigInt::from(n + 1)), true)
                - &polys[n - 1].scale_shift(&Rational::new(BigInt::from(n), BigInt::from(n + 1)), false);
            polys.push(next);
        }
        Ok(Self { polys })
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    /// `P_n`.
    ///
    /// Panics if `n` exceeds the table size.
    pub fn get(&self, n: usize) -> &RationalPolynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    /// Exact `d^m P_n / dμ^m`; `P_n^m` is this times `(1−μ²)^{m/2}`.
    pub fn derivative(&self, n: usize, m: usize) -> RationalPolynomial {
        self.polys[n].nth_derivative(m)
    }

    /// `[P_n^m]²` as a polynomial: `(1−μ²)^m (P_n^{(m)})²`.
    pub fn assoc_squared(&self, n: usize, m: usize) -> RationalPolynomial {
        let d = self.derivative(n, m);
        let one_minus_mu2 = RationalPolynomial::from_ratios(&[(1, 1), (0, 1), (-1, 1)]);
        (0..m).fold(&d * &d, |acc, _| &acc * &one_minus_mu2)
    }

    /// `P_n^m(μ)` through the exact derivative polynomial.
    ///
    /// Horner on monomial coefficients loses accuracy past degree ~25; this is
    /// a cross-check for [`eval_assoc`], not a replacement.
    pub fn eval_assoc_via_derivative(&self, n: usize, m: usize, mu: f64, convention: PhaseConvention) -> Result<f64> {
        check_domain(n, m, mu)?;
        let s = libm::sqrt((1.0 - mu * mu).max(0.0));
        Ok(convention.sign(m) * libm::pow(s, m as f64) * self.derivative(n, m).eval_f64(mu))
    }
}

fn check_domain(n: usize, m: usize, mu: f64) -> Result<()> {
    if m > n || !(-1.0..=1.0).contains(&mu) {
        return Err(Error::AssocDomain { n, m, mu });
    }
    Ok(())
}

/// `P_n(x)` by upward recurrence.
pub fn legendre_p(n: usize, x: f64) -> f64 {
    legendre_p_and_derivative(n, x).0
}

/// `(P_n(x), P_n'(x))`.
pub fn legendre_p_and_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut cur = x;
    for k in 1..n {
        let next = ((2 * k + 1) as f64 * x * cur - k as f64 * prev) / (k + 1) as f64;
        prev = cur;
        cur = next;
    }
    let nf = n as f64;
    let deriv = if (1.0 - x * x).abs() < f64::EPSILON {
        let end = nf * (nf + 1.0) / 2.0;
        if x > 0.0 || n % 2 == 1 {
            end
        } else {
            -end
        }
    } else {
        nf * (prev - x * cur) / (1.0 - x * x)
    };
    (cur, deriv)
}

/// `P_m^m(x) .. P_{n_max}^m(x)` written into `out[m..=n_max]`; entries below
/// `m` are zeroed. `out` must have length `n_max + 1`.
pub fn assoc_column(m: usize, x: f64, convention: PhaseConvention, out: &mut [f64]) {
    let n_max = out.len().saturating_sub(1);
    out.iter_mut().for_each(|v| *v = 0.0);
    if m > n_max {
        return;
    }
    let s = libm::sqrt((1.0 - x * x).max(0.0));
    // (2m−1)!! s^m
    let mut pmm = 1.0;
    for k in 0..m {
        pmm *= (2 * k + 1) as f64 * s;
    }
    out[m] = convention.sign(m) * pmm;
    if m == n_max {
        return;
    }
    out[m + 1] = x * (2 * m + 1) as f64 * out[m];
    for n in (m + 1)..n_max {
        out[n + 1] = ((2 * n + 1) as f64 * x * out[n] - (n + m) as f64 * out[n - 1]) / (n - m + 1) as f64;
    }
}

/// `P_n^m(μ)` under the given phase convention.
pub fn eval_assoc(n: usize, m: usize, mu: f64, convention: PhaseConvention) -> Result<f64> {
    check_domain(n, m, mu)?;
    let mut col = alloc::vec![0.0; n + 1];
    assoc_column(m, mu, convention, &mut col);
    Ok(col[n])
}

/// `(n−m)! / (n+m)!` in floating point.
pub fn factorial_ratio(n: usize, m: usize) -> f64 {
    ((n - m + 1)..=(n + m)).fold(1.0, |acc, k| acc / k as f64)
}

/// Exact `∫₋₁¹ [P_n^m]² dμ = 2 (n+m)! / ((2n+1)(n−m)!)`.
///
/// Panics if `m > n`.
pub fn assoc_norm(n: usize, m: usize) -> Rational {
    assert!(m <= n, "assoc_norm needs m <= n");
    let falling: BigInt = ((n - m + 1)..=(n + m)).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    Rational::new(BigInt::from(2) * falling, BigInt::from(2 * n + 1))
}

/// Floating-point [`assoc_norm`].
pub fn assoc_norm_f64(n: usize, m: usize) -> f64 {
    2.0 / ((2 * n + 1) as f64 * factorial_ratio(n, m))
}

/// One associated Legendre function with a fixed degree, order and phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssociatedLegendre {
    degree: usize,
    order: usize,
    convention: PhaseConvention,
}

impl AssociatedLegendre {
    pub fn new(degree: usize, order: usize, convention: PhaseConvention) -> Result<Self> {
        check_domain(degree, order, 0.0)?;
        Ok(Self { degree, order, convention })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn convention(&self) -> PhaseConvention {
        self.convention
    }

    pub fn evaluate(&self, mu: f64) -> Result<f64> {
        eval_assoc(self.degree, self.order, mu, self.convention)
    }

    /// Exact squared norm over `[−1, 1]`.
    pub fn norm(&self) -> Rational {
        assoc_norm(self.degree, self.order)
    }
}

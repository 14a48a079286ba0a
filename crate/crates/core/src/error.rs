use core::fmt;

use crate::loads::{FrequencyLimit, Mode};

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A Legendre table needs at least degree 1.
    TableTooSmall(usize),
    /// `P_n^m` requested outside `0 ≤ m ≤ n`, `|μ| ≤ 1`.
    AssocDomain { n: usize, m: usize, mu: f64 },
    /// A load was evaluated off the unit sphere.
    OffSphere { r: f64 },
    /// Invalid quadrature rule size or panel layout.
    InvalidRule(usize),
    InvalidPanels,
    /// Newton iteration for a Gauss node did not settle.
    NewtonDiverged { order: usize, root: usize },
    /// The integrand produced a NaN or infinity.
    NonFinite { abscissa: f64 },
    /// Truncation order below the azimuthal order of the load.
    TruncationTooSmall { n_max: usize, m: usize },
    /// Added mass series was fed Dirichlet coefficients.
    NotNeumann,
    /// The last retained series term is too large relative to the sum.
    NonConvergence { n_max: usize, last: f64, sum: f64 },
    /// The requested case has no closed form.
    NoClosedForm { mode: Mode, limit: FrequencyLimit },
    /// Density and radius must be positive.
    NonPositiveScale,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TableTooSmall(n) => write!(f, "Legendre table needs max degree >= 1, got {n}"),
            Error::AssocDomain { n, m, mu } => {
                write!(f, "associated Legendre P_{n}^{m}({mu}) outside 0 <= m <= n, |mu| <= 1")
            }
            Error::OffSphere { r } => write!(f, "load evaluated at r = {r}, expected the unit sphere"),
            Error::InvalidRule(k) => write!(f, "quadrature rule order must be >= 1, got {k}"),
            Error::InvalidPanels => f.write_str("panel breakpoints must increase strictly from -1 to 1"),
            Error::NewtonDiverged { order, root } => {
                write!(f, "Newton iteration for root {root} of P_{order} did not converge")
            }
            Error::NonFinite { abscissa } => write!(f, "integrand is not finite at mu = {abscissa}"),
            Error::TruncationTooSmall { n_max, m } => {
                write!(f, "truncation order {n_max} is below the azimuthal order {m}")
            }
            Error::NotNeumann => f.write_str("added mass needs Neumann coefficients"),
            Error::NonConvergence { n_max, last, sum } => write!(
                f,
                "series not converged at N = {n_max}: last term {last:e} exceeds 10% of the sum {sum:e}"
            ),
            Error::NoClosedForm { mode, limit } => {
                write!(f, "no closed form for {} at the {} frequency limit", mode.as_str(), limit.as_str())
            }
            Error::NonPositiveScale => f.write_str("density and radius must be positive"),
        }
    }
}

impl core::error::Error for Error {}

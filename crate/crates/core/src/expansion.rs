//! Projection of boundary loads onto associated Legendre harmonics, and the
//! exterior Neumann solution built from the projection.
//!
//! For a load `f(μ)·cos(mθ)` the surface integrals reduce over `θ` to
//! one-dimensional integrals in `μ`. Both the `m = 0` and `m ≥ 1` cases give
//!
//! ```text
//! c_n = (2n+1)/2 · (n−m)!/(n+m)! · ∫₋₁¹ f(μ) P_n^m(μ) dμ
//! ```
//!
//! so that `f(μ) = Σ c_n P_n^m(μ)`. The decaying exterior solution with
//! `ψ_{,r}(1) = h` is `ψ = Σ Y_n P_n^m(cos φ) cos(mθ) r^{−(n+1)}` with
//! `Y_n = −c_n / (n+1)`.

use alloc::vec::Vec;

use crate::legendre::{assoc_column, factorial_ratio, PhaseConvention};
use crate::loads::{Azimuth, LoadSpec, SpherePoint};
use crate::quadrature::{gauss_rule, PanelizedDomain, QuadratureRule};
use crate::{Error, Result};

pub const DEFAULT_N_MAX: usize = 60;
pub const DEFAULT_RULE_ORDER: usize = 32;
pub const DEFAULT_PANEL_LEVELS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    /// `c_n`: the load itself as a boundary value.
    Dirichlet,
    /// `Y_n`: the load as the radial derivative at `r = 1`.
    Neumann,
}

impl ProblemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Dirichlet => "dirichlet",
            ProblemKind::Neumann => "neumann",
        }
    }
}

/// Truncation and quadrature controls for a projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionSettings {
    pub n_max: usize,
    /// Minimum Gauss points per panel.
    pub rule_order: usize,
    pub panel_levels: usize,
    pub convention: PhaseConvention,
}

impl Default for ProjectionSettings {
    fn default() -> Self {
        Self {
            n_max: DEFAULT_N_MAX,
            rule_order: DEFAULT_RULE_ORDER,
            panel_levels: DEFAULT_PANEL_LEVELS,
            convention: PhaseConvention::Plain,
        }
    }
}

impl ProjectionSettings {
    pub fn with_n_max(self, n_max: usize) -> Self {
        Self { n_max, ..self }
    }

    pub fn with_convention(self, convention: PhaseConvention) -> Self {
        Self { convention, ..self }
    }

    /// Gauss points actually used per panel.
    ///
    /// The catalogued integrands are polynomials of degree at most `N + 2`
    /// on each side of `μ = 0`, so `N/2 + 2` points make every panel exact;
    /// the configured order is a floor.
    pub fn effective_rule_order(&self) -> usize {
        self.rule_order.max(self.n_max / 2 + 2)
    }

    pub fn domain(&self) -> PanelizedDomain {
        PanelizedDomain::graded(self.panel_levels)
    }
}

/// Expansion coefficients of one azimuthal order, indexed by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoefficients {
    kind: ProblemKind,
    order: usize,
    azimuth: Azimuth,
    convention: PhaseConvention,
    values: Vec<f64>,
    rule_order: usize,
    panel_levels: usize,
}

impl HarmonicCoefficients {
    /// Wraps raw values; entries below `order` are forced to zero.
    pub fn from_values(
        kind: ProblemKind,
        order: usize,
        azimuth: Azimuth,
        convention: PhaseConvention,
        mut values: Vec<f64>,
    ) -> Self {
        values.iter_mut().take(order).for_each(|v| *v = 0.0);
        Self { kind, order, azimuth, convention, values, rule_order: 0, panel_levels: 0 }
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn azimuth(&self) -> Azimuth {
        self.azimuth
    }

    pub fn convention(&self) -> PhaseConvention {
        self.convention
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, n: usize) -> f64 {
        self.values.get(n).copied().unwrap_or(0.0)
    }

    /// Truncation degree `N`.
    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Gauss points per panel used to compute the coefficients (0 if the
    /// values were supplied directly).
    pub fn rule_order(&self) -> usize {
        self.rule_order
    }

    pub fn panel_levels(&self) -> usize {
        self.panel_levels
    }

    /// Neumann coefficients `Y_n = −c_n/(n+1)`; identity on Neumann input.
    pub fn to_neumann(&self) -> Self {
        match self.kind {
            ProblemKind::Neumann => self.clone(),
            ProblemKind::Dirichlet => Self {
                kind: ProblemKind::Neumann,
                values: self.values.iter().enumerate().map(|(n, c)| -c / (n + 1) as f64).collect(),
                ..self.clone()
            },
        }
    }

    /// Meridional profile the coefficients represent at `r = 1`: the boundary
    /// value `Σ c_n P_n^m` for Dirichlet, the flux `−Σ (n+1) Y_n P_n^m` for
    /// Neumann.
    pub fn boundary_profile(&self, mu: f64) -> f64 {
        let mut col = alloc::vec![0.0; self.values.len()];
        assoc_column(self.order, mu, self.convention, &mut col);
        self.values
            .iter()
            .zip(&col)
            .enumerate()
            .map(|(n, (c, p))| match self.kind {
                ProblemKind::Dirichlet => c * p,
                ProblemKind::Neumann => -((n + 1) as f64) * c * p,
            })
            .sum()
    }
}

fn project(load: &LoadSpec, settings: &ProjectionSettings) -> Result<HarmonicCoefficients> {
    let m = load.order();
    let n_max = settings.n_max;
    if n_max < m {
        return Err(Error::TruncationTooSmall { n_max, m });
    }
    let rule_order = settings.effective_rule_order();
    let rule: QuadratureRule = gauss_rule(rule_order)?;
    let domain = settings.domain();

    let mut integrals = alloc::vec![0.0; n_max + 1];
    let mut col = alloc::vec![0.0; n_max + 1];
    for (x, w) in domain.points(&rule) {
        let f = load.profile(x);
        if !f.is_finite() {
            return Err(Error::NonFinite { abscissa: x });
        }
        assoc_column(m, x, settings.convention, &mut col);
        let wf = w * f;
        for (acc, p) in integrals.iter_mut().zip(&col) {
            *acc += wf * p;
        }
    }
    let values = integrals
        .iter()
        .enumerate()
        .map(|(n, i)| if n < m { 0.0 } else { (2 * n + 1) as f64 / 2.0 * factorial_ratio(n, m) * i })
        .collect();
    Ok(HarmonicCoefficients {
        kind: ProblemKind::Dirichlet,
        order: m,
        azimuth: load.azimuth(),
        convention: settings.convention,
        values,
        rule_order,
        panel_levels: settings.panel_levels,
    })
}

/// Coefficients `c_n` with `f = Σ c_n P_n^m` on the unit sphere.
pub fn project_dirichlet(load: &LoadSpec, settings: &ProjectionSettings) -> Result<HarmonicCoefficients> {
    project(load, settings)
}

/// Coefficients `Y_n` of the exterior solution whose radial derivative at
/// `r = 1` is the load.
pub fn project_neumann(load: &LoadSpec, settings: &ProjectionSettings) -> Result<HarmonicCoefficients> {
    Ok(project(load, settings)?.to_neumann())
}

/// `ψ(r, φ, θ) = Σ Y_n P_n^m(cos φ) cos(mθ) r^{−(n+1)}` for `r ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExteriorSolution {
    coeffs: HarmonicCoefficients,
}

impl ExteriorSolution {
    pub fn new(coeffs: HarmonicCoefficients) -> Result<Self> {
        if coeffs.kind != ProblemKind::Neumann {
            return Err(Error::NotNeumann);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &HarmonicCoefficients {
        &self.coeffs
    }

    fn radial_sum(&self, p: &SpherePoint, derivative: bool) -> f64 {
        let c = &self.coeffs;
        let mut col = alloc::vec![0.0; c.values.len()];
        assoc_column(c.order, p.mu(), c.convention, &mut col);
        let inv_r = 1.0 / p.r;
        let mut rpow = inv_r;
        let mut sum = 0.0;
        for (n, (y, pn)) in c.values.iter().zip(&col).enumerate() {
            let term = y * pn * rpow;
            sum += if derivative { -((n + 1) as f64) * term * inv_r } else { term };
            rpow *= inv_r;
        }
        sum * c.azimuth.factor(c.order, p.azimuth)
    }

    pub fn evaluate(&self, p: &SpherePoint) -> f64 {
        self.radial_sum(p, false)
    }

    /// `∂ψ/∂r`.
    pub fn radial_derivative(&self, p: &SpherePoint) -> f64 {
        self.radial_sum(p, true)
    }

    /// Meridional profile of `ψ_{,r}` at `r = 1`.
    pub fn boundary_flux(&self, mu: f64) -> f64 {
        self.coeffs.boundary_profile(mu)
    }
}

/// `max_φ |ψ_{,r}(1, φ) − f(cos φ)|` over `samples` midpoint polar angles.
pub fn boundary_residual(sol: &ExteriorSolution, load: &LoadSpec, samples: usize) -> f64 {
    let samples = samples.max(1);
    (0..samples)
        .map(|i| {
            let polar = core::f64::consts::PI * (i as f64 + 0.5) / samples as f64;
            let mu = libm::cos(polar);
            (sol.boundary_flux(mu) - load.profile(mu)).abs()
        })
        .fold(0.0, f64::max)
}

/// `(∫₋₁¹ (ψ_{,r}(1) − f)² dμ)^{1/2}` on the settings' composite rule.
pub fn boundary_residual_l2(sol: &ExteriorSolution, load: &LoadSpec, settings: &ProjectionSettings) -> Result<f64> {
    let rule = gauss_rule(settings.effective_rule_order().max(sol.coeffs.n_max() + 2))?;
    let sq = crate::quadrature::integrate(
        |mu| {
            let d = sol.boundary_flux(mu) - load.profile(mu);
            d * d
        },
        &settings.domain(),
        &rule,
    )?;
    Ok(libm::sqrt(sq))
}

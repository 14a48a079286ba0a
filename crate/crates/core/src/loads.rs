//! Boundary loads on the mirrored unit sphere.
//!
//! A load is `h(φ, θ) = f(cos φ) · cos(mθ)` (or `sin(mθ)` for the sway twin of
//! surge). The low-frequency limit extends the physical hemisphere load
//! symmetrically across `z = 0` (an even profile); the high-frequency limit
//! extends it skew-symmetrically (an odd profile).

use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Heave,
    Surge,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Heave => "heave",
            Mode::Surge => "surge",
        }
    }

    /// Azimuthal order of the mode shape.
    pub fn azimuthal_order(self) -> usize {
        match self {
            Mode::Heave => 0,
            Mode::Surge => 1,
        }
    }

    /// Conventional seakeeping index: 1 for surge, 3 for heave.
    pub fn index(self) -> usize {
        match self {
            Mode::Heave => 3,
            Mode::Surge => 1,
        }
    }
}

/// `Ka → 0` or `Ka → ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrequencyLimit {
    Low,
    High,
}

impl FrequencyLimit {
    pub fn as_str(self) -> &'static str {
        match self {
            FrequencyLimit::Low => "low",
            FrequencyLimit::High => "high",
        }
    }

    /// Parity of the extended profile in `μ`.
    pub fn parity(self) -> Parity {
        match self {
            FrequencyLimit::Low => Parity::Even,
            FrequencyLimit::High => Parity::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Azimuth {
    #[default]
    Cos,
    Sin,
}

impl Azimuth {
    pub fn factor(self, m: usize, theta: f64) -> f64 {
        match self {
            Azimuth::Cos => libm::cos(m as f64 * theta),
            Azimuth::Sin => libm::sin(m as f64 * theta),
        }
    }
}

/// `sign(x)` with `sign(0) = 0`.
pub fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

pub type Profile = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A boundary load `f(μ)·cos(mθ)` or `f(μ)·sin(mθ)`.
#[derive(Clone)]
pub struct LoadSpec {
    label: String,
    order: usize,
    azimuth: Azimuth,
    profile: Profile,
    kink_at_zero: bool,
    parity: Option<Parity>,
    case: Option<(Mode, FrequencyLimit)>,
}

impl LoadSpec {
    /// An arbitrary load; `parity` is only a declaration used for selection
    /// checks and is not verified.
    pub fn custom(
        label: impl Into<String>,
        order: usize,
        profile: impl Fn(f64) -> f64 + Send + Sync + 'static,
        kink_at_zero: bool,
        parity: Option<Parity>,
    ) -> Self {
        Self {
            label: label.into(),
            order,
            azimuth: Azimuth::Cos,
            profile: Arc::new(profile),
            kink_at_zero,
            parity,
            case: None,
        }
    }

    /// Same profile with `sin(mθ)` in place of `cos(mθ)`: sway instead of surge.
    pub fn sway_twin(&self) -> Self {
        let mut twin = self.clone();
        twin.azimuth = Azimuth::Sin;
        twin.label.push_str("-sin");
        twin
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn azimuth(&self) -> Azimuth {
        self.azimuth
    }

    pub fn kink_at_zero(&self) -> bool {
        self.kink_at_zero
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn mode(&self) -> Option<Mode> {
        self.case.map(|c| c.0)
    }

    pub fn limit(&self) -> Option<FrequencyLimit> {
        self.case.map(|c| c.1)
    }

    /// Meridional profile `f(μ)`.
    pub fn profile(&self, mu: f64) -> f64 {
        (self.profile)(mu)
    }
}

impl fmt::Debug for LoadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoadSpec")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("azimuth", &self.azimuth)
            .field("kink_at_zero", &self.kink_at_zero)
            .field("parity", &self.parity)
            .field("case", &self.case)
            .finish_non_exhaustive()
    }
}

fn surge_profile(mu: f64) -> f64 {
    libm::sqrt((1.0 - mu * mu).max(0.0))
}

/// One of the four extended loads:
///
/// | case        | `f(μ)`              | `m` |
/// |-------------|---------------------|-----|
/// | heave, low  | `|μ|`               | 0   |
/// | heave, high | `μ`                 | 0   |
/// | surge, low  | `√(1−μ²)`           | 1   |
/// | surge, high | `sign(μ)·√(1−μ²)`   | 1   |
///
/// The surge profile carries the `sin φ` factor of the physical normal
/// `n_x = sin φ cos θ`.
pub fn canonical_load(mode: Mode, limit: FrequencyLimit) -> LoadSpec {
    let (label, profile, kink): (&str, Profile, bool) = match (mode, limit) {
        (Mode::Heave, FrequencyLimit::Low) => ("heave-lf", Arc::new(f64::abs), true),
        (Mode::Heave, FrequencyLimit::High) => ("heave-hf", Arc::new(|mu| mu), false),
        (Mode::Surge, FrequencyLimit::Low) => ("surge-lf", Arc::new(surge_profile), false),
        (Mode::Surge, FrequencyLimit::High) => ("surge-hf", Arc::new(|mu| sign(mu) * surge_profile(mu)), true),
    };
    LoadSpec {
        label: label.into(),
        order: mode.azimuthal_order(),
        azimuth: Azimuth::Cos,
        profile,
        kink_at_zero: kink,
        parity: Some(limit.parity()),
        case: Some((mode, limit)),
    }
}

/// Point `(r, φ, θ)` with `z = r cos φ`, `x = r sin φ cos θ`, `y = r sin φ sin θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    pub r: f64,
    /// Polar angle from `+z`, in `[0, π]`.
    pub polar: f64,
    /// Azimuth from `+x`, in `[0, 2π)`.
    pub azimuth: f64,
}

impl SpherePoint {
    pub fn new(r: f64, polar: f64, azimuth: f64) -> Self {
        Self { r, polar, azimuth }
    }

    pub fn on_unit_sphere(polar: f64, azimuth: f64) -> Self {
        Self::new(1.0, polar, azimuth)
    }

    pub fn from_cartesian(x: f64, y: f64, z: f64) -> Self {
        let r = libm::sqrt(x * x + y * y + z * z);
        let polar = if r == 0.0 { 0.0 } else { libm::acos((z / r).clamp(-1.0, 1.0)) };
        let mut azimuth = libm::atan2(y, x);
        if azimuth < 0.0 {
            azimuth += 2.0 * core::f64::consts::PI;
        }
        Self { r, polar, azimuth }
    }

    /// `(x, y, z)`.
    pub fn cartesian(&self) -> (f64, f64, f64) {
        let s = libm::sin(self.polar);
        (
            self.r * s * libm::cos(self.azimuth),
            self.r * s * libm::sin(self.azimuth),
            self.r * libm::cos(self.polar),
        )
    }

    /// `μ = cos φ`.
    pub fn mu(&self) -> f64 {
        libm::cos(self.polar)
    }
}

/// `h(φ, θ) = f(cos φ)·cos(mθ)` (or `sin`) at a point of the unit sphere.
pub fn evaluate_load(spec: &LoadSpec, p: &SpherePoint) -> Result<f64> {
    if (p.r - 1.0).abs() > 1e-12 {
        return Err(Error::OffSphere { r: p.r });
    }
    Ok(spec.profile(p.mu()) * spec.azimuth.factor(spec.order, p.azimuth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    const CASES: [(Mode, FrequencyLimit); 4] = [
        (Mode::Heave, FrequencyLimit::Low),
        (Mode::Heave, FrequencyLimit::High),
        (Mode::Surge, FrequencyLimit::Low),
        (Mode::Surge, FrequencyLimit::High),
    ];

    #[test]
    fn catalog() {
        let hh = canonical_load(Mode::Heave, FrequencyLimit::High);
        assert_eq!((hh.order(), hh.label()), (0, "heave-hf"));
        assert_eq!(hh.profile(0.3), 0.3);

        let hl = canonical_load(Mode::Heave, FrequencyLimit::Low);
        assert_eq!((hl.order(), hl.label()), (0, "heave-lf"));
        assert_eq!(hl.profile(-0.3), 0.3);

        let sh = canonical_load(Mode::Surge, FrequencyLimit::High);
        assert_eq!((sh.order(), sh.label()), (1, "surge-hf"));
        assert!((sh.profile(-0.6) + 0.8).abs() < 1e-15);
        assert!((sh.profile(0.6) - 0.8).abs() < 1e-15);

        for (mode, limit) in CASES {
            let l = canonical_load(mode, limit);
            assert_eq!(l.order(), mode.azimuthal_order());
            assert_eq!(l.mode(), Some(mode));
            assert_eq!(l.limit(), Some(limit));
            assert_eq!(l.parity(), Some(limit.parity()));
        }
    }

    #[test]
    fn evaluate_examples() {
        let hh = canonical_load(Mode::Heave, FrequencyLimit::High);
        assert_eq!(evaluate_load(&hh, &SpherePoint::on_unit_sphere(0.0, 0.0)).unwrap(), 1.0);

        let sl = canonical_load(Mode::Surge, FrequencyLimit::Low);
        let v = evaluate_load(&sl, &SpherePoint::on_unit_sphere(PI / 2.0, 0.0)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);

        let hl = canonical_load(Mode::Heave, FrequencyLimit::Low);
        let v = evaluate_load(&hl, &SpherePoint::on_unit_sphere(2.0 * PI / 3.0, 1.0)).unwrap();
        assert!((v - 0.5).abs() < 1e-15);

        assert!(matches!(
            evaluate_load(&hl, &SpherePoint::new(1.5, 0.0, 0.0)),
            Err(Error::OffSphere { .. })
        ));
    }

    #[test]
    fn lower_hemisphere_matches_physical_normal() {
        // On the wetted side (z < 0) the extended loads equal the outward
        // normal components of the hemisphere surface, up to a global sign.
        for i in 1..50 {
            let polar = PI / 2.0 + (i as f64) * (PI / 2.0) / 50.0;
            let theta = 0.37 * i as f64;
            let p = SpherePoint::on_unit_sphere(polar, theta);
            let (nx, _, nz) = p.cartesian();
            for limit in [FrequencyLimit::Low, FrequencyLimit::High] {
                let heave = evaluate_load(&canonical_load(Mode::Heave, limit), &p).unwrap();
                assert!((heave.abs() - nz.abs()).abs() < 1e-14);
                let surge = evaluate_load(&canonical_load(Mode::Surge, limit), &p).unwrap();
                assert!((surge.abs() - nx.abs()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn sway_twin_uses_sine() {
        let sl = canonical_load(Mode::Surge, FrequencyLimit::Low).sway_twin();
        assert_eq!(sl.azimuth(), Azimuth::Sin);
        let v = evaluate_load(&sl, &SpherePoint::on_unit_sphere(PI / 2.0, PI / 2.0)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cartesian_round_trip() {
        let p = SpherePoint::new(2.0, 1.1, 4.0);
        let (x, y, z) = p.cartesian();
        let q = SpherePoint::from_cartesian(x, y, z);
        assert!((q.r - 2.0).abs() < 1e-14);
        assert!((q.polar - 1.1).abs() < 1e-14);
        assert!((q.azimuth - 4.0).abs() < 1e-14);
        assert_eq!(sign(0.0), 0.0);
    }
}

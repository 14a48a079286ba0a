//! Added-mass coefficients of a floating hemisphere in heave and surge at the
//! zero- and infinite-frequency limits.
//!
//! Both limits turn the free-surface condition into a parity constraint, so the
//! hemisphere problem becomes an exterior Neumann problem on the full mirrored
//! sphere. The boundary load is expanded in associated Legendre functions and
//! the added mass follows from the squared expansion coefficients.
//!
//! The crate is `no_std` (it needs `alloc`). IO, file formats and the command
//! line live in the `hemisphere` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod addedmass;
mod error;
pub mod exactpoly;
pub mod expansion;
pub mod legendre;
pub mod loads;
pub mod quadrature;

pub use addedmass::{
    added_mass, compare_literature, dimensionalize, exact_sphere_case, series_added_mass, AddedMassResult,
    LiteratureComparison, LiteratureEntry, LiteratureSource, LITERATURE,
};
pub use error::Error;
pub use exactpoly::{Rational, RationalPolynomial};
pub use expansion::{
    boundary_residual, project_dirichlet, project_neumann, ExteriorSolution, HarmonicCoefficients, ProblemKind,
    ProjectionSettings,
};
pub use legendre::{assoc_norm, eval_assoc, AssociatedLegendre, LegendreTable, PhaseConvention};
pub use loads::{canonical_load, evaluate_load, Azimuth, FrequencyLimit, LoadSpec, Mode, SpherePoint};
pub use quadrature::{gauss_rule, integrate, PanelizedDomain, QuadratureRule};

pub type Result<T, E = Error> = core::result::Result<T, E>;

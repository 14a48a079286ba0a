//! Serialized shapes of every command's output.
//!
//! Column order and JSON field order are fixed here; golden tests depend on
//! them.

use serde::{Deserialize, Serialize};

use hemisphere_core::addedmass::{literature_value, panel_method_value, LiteratureSource};
use hemisphere_core::{AddedMassResult, FrequencyLimit, HarmonicCoefficients, Mode};

use crate::format::{round, sig};

pub const COEFFS_HEADER: [&str; 7] = ["n", "m", "kind", "value", "convention", "N", "rule_order"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: usize,
    pub m: usize,
    pub kind: String,
    pub value: f64,
    pub convention: String,
    #[serde(rename = "N")]
    pub n_max: usize,
    pub rule_order: usize,
}

impl CoefficientRow {
    pub fn rows(coeffs: &HarmonicCoefficients) -> Vec<Self> {
        coeffs
            .values()
            .iter()
            .enumerate()
            .map(|(n, v)| CoefficientRow {
                n,
                m: coeffs.order(),
                kind: coeffs.kind().as_str().into(),
                value: round(*v),
                convention: coeffs.convention().as_str().into(),
                n_max: coeffs.n_max(),
                rule_order: coeffs.rule_order(),
            })
            .collect()
    }

    pub fn csv_fields(&self) -> [String; 7] {
        [
            self.n.to_string(),
            self.m.to_string(),
            self.kind.clone(),
            sig(self.value),
            self.convention.clone(),
            self.n_max.to_string(),
            self.rule_order.to_string(),
        ]
    }
}

pub const ADDED_MASS_HEADER: [&str; 12] = [
    "mode",
    "limit",
    "extended_value",
    "physical_value",
    "a_prime",
    "paper_normalized_value",
    "n_max",
    "tail_estimate",
    "convention",
    "a_prime_extrapolated",
    "dimensional_value",
    "damping",
];

/// JSON record of one added-mass computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AddedMassRecord {
    pub mode: String,
    pub limit: String,
    pub extended_value: f64,
    pub physical_value: f64,
    pub a_prime: f64,
    pub paper_normalized_value: Option<f64>,
    pub n_max: usize,
    pub tail_estimate: f64,
    pub convention: String,
    pub notes: Vec<String>,
    pub a_prime_extrapolated: f64,
    pub dimensional_value: f64,
    pub rho: f64,
    pub radius: f64,
    pub damping: f64,
    pub closed_form: bool,
    /// Series value of `A'` when the closed form is reported.
    pub series_a_prime: Option<f64>,
    pub rule_order: usize,
    pub panel_levels: usize,
    pub partials: Vec<f64>,
}

impl AddedMassRecord {
    pub fn new(result: &AddedMassResult, dimensional_value: f64, rho: f64, radius: f64) -> Self {
        let (mode, limit) = result.case().map_or(("custom", "none"), |(m, l)| (m.as_str(), l.as_str()));
        AddedMassRecord {
            mode: mode.into(),
            limit: limit.into(),
            extended_value: round(result.extended_value()),
            physical_value: round(result.physical_value()),
            a_prime: round(result.a_prime()),
            paper_normalized_value: result.paper_normalized_value(),
            n_max: result.n_max(),
            tail_estimate: round(result.tail_estimate()),
            convention: result.convention().as_str().into(),
            notes: result.notes().into_iter().map(String::from).collect(),
            a_prime_extrapolated: round(result.a_prime_extrapolated()),
            dimensional_value: round(dimensional_value),
            rho: round(rho),
            radius: round(radius),
            damping: result.damping(),
            closed_form: result.is_closed_form(),
            series_a_prime: None,
            rule_order: result.rule_order(),
            panel_levels: result.panel_levels(),
            partials: result.partials().iter().map(|p| round(*p)).collect(),
        }
    }

    pub fn with_series_check(mut self, a_prime: Option<f64>) -> Self {
        self.series_a_prime = a_prime.map(round);
        self
    }

    pub fn csv_fields(&self) -> [String; 12] {
        [
            self.mode.clone(),
            self.limit.clone(),
            sig(self.extended_value),
            sig(self.physical_value),
            sig(self.a_prime),
            self.paper_normalized_value.map(sig).unwrap_or_default(),
            self.n_max.to_string(),
            sig(self.tail_estimate),
            self.convention.clone(),
            sig(self.a_prime_extrapolated),
            sig(self.dimensional_value),
            sig(self.damping),
        ]
    }
}

pub const CONVERGENCE_HEADER: [&str; 4] = ["n_max", "a_prime", "tail_estimate", "a_prime_extrapolated"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n_max: usize,
    pub a_prime: f64,
    pub tail_estimate: f64,
    pub a_prime_extrapolated: f64,
}

impl ConvergenceRow {
    pub fn new(result: &AddedMassResult) -> Self {
        ConvergenceRow {
            n_max: result.n_max(),
            a_prime: round(result.a_prime()),
            tail_estimate: round(result.tail_estimate()),
            a_prime_extrapolated: round(result.a_prime_extrapolated()),
        }
    }

    pub fn csv_fields(&self) -> [String; 4] {
        [
            self.n_max.to_string(),
            sig(self.a_prime),
            sig(self.tail_estimate),
            sig(self.a_prime_extrapolated),
        ]
    }
}

pub const REPORT_HEADER: [&str; 11] = [
    "coefficient",
    "limit",
    "computed",
    "paper",
    "hulme",
    "panel_method",
    "panel_source",
    "delta_paper",
    "delta_hulme",
    "delta_panel",
    "ratio_paper",
];

/// One row of the four-case literature table. Published values are kept as
/// printed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub coefficient: String,
    pub limit: String,
    pub computed: f64,
    pub paper: String,
    pub hulme: String,
    pub panel_method: String,
    pub panel_source: String,
    pub delta_paper: f64,
    pub delta_hulme: f64,
    pub delta_panel: f64,
    pub ratio_paper: f64,
}

impl ReportRow {
    pub fn new(mode: Mode, limit: FrequencyLimit, computed: f64) -> Self {
        let paper = literature_value(LiteratureSource::Paper, mode, limit).expect("paper value");
        let hulme = literature_value(LiteratureSource::Hulme, mode, limit).expect("hulme value");
        let panel = panel_method_value(mode, limit).expect("panel value");
        let limit_label = match limit {
            FrequencyLimit::Low => "Ka->0",
            FrequencyLimit::High => "Ka->inf",
        };
        ReportRow {
            coefficient: format!("A'_{0}{0}", mode.index()),
            limit: limit_label.into(),
            computed: round(computed),
            paper: paper.text.into(),
            hulme: hulme.text.into(),
            panel_method: panel.text.into(),
            panel_source: panel.source.as_str().into(),
            delta_paper: round(computed - paper.value),
            delta_hulme: round(computed - hulme.value),
            delta_panel: round(computed - panel.value),
            ratio_paper: round(computed / paper.value),
        }
    }

    pub fn csv_fields(&self) -> [String; 11] {
        [
            self.coefficient.clone(),
            self.limit.clone(),
            sig(self.computed),
            self.paper.clone(),
            self.hulme.clone(),
            self.panel_method.clone(),
            self.panel_source.clone(),
            sig(self.delta_paper),
            sig(self.delta_hulme),
            sig(self.delta_panel),
            sig(self.ratio_paper),
        ]
    }
}

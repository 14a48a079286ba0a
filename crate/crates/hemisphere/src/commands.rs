use std::io;

use hemisphere_core::expansion::project_dirichlet;
use hemisphere_core::{
    added_mass, canonical_load, dimensionalize, exact_sphere_case, AddedMassResult, FrequencyLimit, Mode,
};
use serde::Serialize;

use crate::config::{CommandKind, OutputFormat, RunConfig};
use crate::records::{
    AddedMassRecord, CoefficientRow, ConvergenceRow, ReportRow, ADDED_MASS_HEADER, COEFFS_HEADER,
    CONVERGENCE_HEADER, REPORT_HEADER,
};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(#[from] hemisphere_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl RunError {
    /// 2 for bad arguments, 3 for numerical failures, 1 for IO.
    pub fn exit_code(&self) -> i32 {
        use hemisphere_core::Error as E;
        match self {
            RunError::Usage(_) => 2,
            RunError::Numerical(E::TruncationTooSmall { .. } | E::NonPositiveScale | E::InvalidRule(_)) => 2,
            RunError::Numerical(_) => 3,
            RunError::Io(_) | RunError::Csv(_) | RunError::Json(_) => 1,
        }
    }
}

/// Runs one command and returns its serialized output.
pub fn run(cfg: &RunConfig) -> Result<String, RunError> {
    match cfg.command {
        CommandKind::Coeffs => cmd_coeffs(cfg),
        CommandKind::AddedMass => cmd_added_mass(cfg),
        CommandKind::Convergence => cmd_convergence(cfg),
        CommandKind::Report => cmd_report(cfg),
    }
}

fn has_closed_form(mode: Mode, limit: FrequencyLimit) -> bool {
    matches!((mode, limit), (Mode::Heave, FrequencyLimit::High) | (Mode::Surge, FrequencyLimit::Low))
}

pub fn cmd_coeffs(cfg: &RunConfig) -> Result<String, RunError> {
    let dirichlet = project_dirichlet(&canonical_load(cfg.mode, cfg.limit), &cfg.settings())?;
    let neumann = dirichlet.to_neumann();
    let rows: Vec<CoefficientRow> = CoefficientRow::rows(&dirichlet)
        .into_iter()
        .chain(CoefficientRow::rows(&neumann))
        .collect();
    match cfg.format {
        OutputFormat::Csv => csv_table(&COEFFS_HEADER, rows.iter().map(CoefficientRow::csv_fields)),
        OutputFormat::Json => json(&rows),
    }
}

/// Record for `added-mass`; the two sphere-in-uniform-flow cases use the
/// closed form and carry the series value as a cross-check.
pub fn added_mass_record(cfg: &RunConfig) -> Result<AddedMassRecord, RunError> {
    let settings = cfg.settings();
    let (result, series_check) = if has_closed_form(cfg.mode, cfg.limit) {
        let exact = exact_sphere_case(cfg.mode, cfg.limit)?;
        let series = added_mass(cfg.mode, cfg.limit, &settings).ok().map(|r| r.a_prime());
        (exact, series)
    } else {
        (added_mass(cfg.mode, cfg.limit, &settings)?, None)
    };
    let dimensional = dimensionalize(&result, cfg.rho, cfg.radius)?;
    Ok(AddedMassRecord::new(&result, dimensional, cfg.rho, cfg.radius).with_series_check(series_check))
}

pub fn cmd_added_mass(cfg: &RunConfig) -> Result<String, RunError> {
    let record = added_mass_record(cfg)?;
    match cfg.format {
        OutputFormat::Csv => csv_table(&ADDED_MASS_HEADER, std::iter::once(record.csv_fields())),
        OutputFormat::Json => json(&record),
    }
}

/// `8, 16, 32, …` up to `n_max`, closed with `n_max` itself.
pub fn doubling_schedule(n_max: usize) -> Vec<usize> {
    let mut schedule: Vec<usize> = std::iter::successors(Some(8usize), |n| Some(n * 2))
        .take_while(|&n| n <= n_max)
        .collect();
    if schedule.last() != Some(&n_max) {
        schedule.push(n_max);
    }
    schedule
}

pub fn convergence_results(cfg: &RunConfig) -> Result<Vec<AddedMassResult>, RunError> {
    doubling_schedule(cfg.n_max)
        .into_iter()
        .map(|n| Ok(added_mass(cfg.mode, cfg.limit, &cfg.settings().with_n_max(n))?))
        .collect()
}

pub fn cmd_convergence(cfg: &RunConfig) -> Result<String, RunError> {
    let rows: Vec<ConvergenceRow> = convergence_results(cfg)?.iter().map(ConvergenceRow::new).collect();
    match cfg.format {
        OutputFormat::Csv => csv_table(&CONVERGENCE_HEADER, rows.iter().map(ConvergenceRow::csv_fields)),
        OutputFormat::Json => json(&rows),
    }
}

pub const REPORT_CASES: [(Mode, FrequencyLimit); 4] = [
    (Mode::Surge, FrequencyLimit::Low),
    (Mode::Surge, FrequencyLimit::High),
    (Mode::Heave, FrequencyLimit::Low),
    (Mode::Heave, FrequencyLimit::High),
];

pub fn report_rows(cfg: &RunConfig) -> Result<Vec<ReportRow>, RunError> {
    REPORT_CASES
        .iter()
        .map(|&(mode, limit)| {
            let computed = if has_closed_form(mode, limit) {
                exact_sphere_case(mode, limit)?.a_prime()
            } else {
                added_mass(mode, limit, &cfg.settings())?.a_prime_extrapolated()
            };
            Ok(ReportRow::new(mode, limit, computed))
        })
        .collect()
}

pub fn cmd_report(cfg: &RunConfig) -> Result<String, RunError> {
    let rows = report_rows(cfg)?;
    match cfg.format {
        OutputFormat::Csv => csv_table(&REPORT_HEADER, rows.iter().map(ReportRow::csv_fields)),
        OutputFormat::Json => json(&rows),
    }
}

fn csv_table<const K: usize>(
    header: &[&str; K],
    rows: impl Iterator<Item = [String; K]>,
) -> Result<String, RunError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| RunError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, RunError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule() {
        assert_eq!(doubling_schedule(64), vec![8, 16, 32, 64]);
        assert_eq!(doubling_schedule(100), vec![8, 16, 32, 64, 100]);
        assert_eq!(doubling_schedule(5), vec![5]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(RunError::Usage("x".into()).exit_code(), 2);
        let e = hemisphere_core::Error::NonConvergence { n_max: 1, last: 1.0, sum: 1.0 };
        assert_eq!(RunError::from(e).exit_code(), 3);
        assert_eq!(RunError::from(hemisphere_core::Error::NonPositiveScale).exit_code(), 2);
    }
}

//! Comparison tables, convergence rates and file output.

mod config;
mod output;
mod rates;
mod sweep;

pub use config::{GridSpec, OutputSpec, RunConfig, Tolerances};
pub use output::{
    format_significant, read_csv, write_csv, write_json, write_plot_csv, write_sweep_json,
    CSV_DIGITS,
};
pub use rates::{rate_m, rate_n};
pub use sweep::{
    classify_reproduction, compare_sweep, compare_sweep_detailed, plot_series, CaseReport,
    ComparisonRow, PlotSeries, Reproduction, SweepReport,
};

/// Definition of B used by this crate, printed in every run header.
pub const B_DEFINITION: &str =
    "B = (4 m^2 / (hbar^4 a))^(1/3) * b, with b the Coulomb coefficient of V(r) = a r - b/r";

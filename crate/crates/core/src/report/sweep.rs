use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::DimensionlessCase;
use crate::numerov::{self, Grid};
use crate::phase_integral::{chi0_diagnostic, quantize_with, QuantizationResult, QuantizeOptions};
use crate::scalar::{lit, to_f64, Real};

use super::RunConfig;

/// One line of the Numerov / phase-integral comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    #[serde(rename = "B")]
    pub b: f64,
    pub l: u32,
    pub s: u32,
    pub j: u32,
    #[serde(rename = "A_N")]
    pub a_n: Option<f64>,
    #[serde(rename = "A_PhI")]
    pub a_phi: Option<f64>,
    #[serde(rename = "delta_A")]
    pub delta_a: Option<f64>,
    pub residual: Option<f64>,
    #[serde(rename = "C_abs")]
    pub c_abs: Option<f64>,
}

impl ComparisonRow {
    fn key(&self) -> (f64, u32, u32, u32) {
        (self.b, self.l, self.s, self.j)
    }

    pub fn is_complete(&self) -> bool {
        self.a_n.is_some() && self.a_phi.is_some()
    }
}

/// Everything computed for one (B, l, s, j).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseReport {
    pub row: ComparisonRow,
    pub numerov_grid: Grid<f64>,
    pub phase_integral: Option<QuantizationResult<f64>>,
    /// max |χ₀| on nine interior points of [x₁, x₂].
    pub chi0_max: Option<f64>,
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub cases: Vec<CaseReport>,
}

impl SweepReport {
    pub fn rows(&self) -> Vec<ComparisonRow> {
        self.cases.iter().map(|c| c.row.clone()).collect()
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.errors.is_empty()).count()
    }
}

/// Rows only, sorted by (B, l, s, j).
pub fn compare_sweep<T: Real>(config: &RunConfig) -> Result<Vec<ComparisonRow>> {
    Ok(compare_sweep_detailed::<T>(config)?.rows())
}

/// Runs every (B, l, s, j) of the config. Numerov levels are shared across
/// s and j for each (B, l); per-case failures are recorded, not raised.
pub fn compare_sweep_detailed<T: Real>(config: &RunConfig) -> Result<SweepReport> {
    config.validate()?;
    let g = config.grid;
    let grid = Grid::<T>::new(lit(g.z_min), lit(g.z_max), g.n)?;
    let grid64 = Grid::<f64>::new(g.z_min, g.z_max, g.n)?;
    let levels = config.s.iter().copied().max().unwrap_or(0) as usize + 1;
    let opts = QuantizeOptions {
        scan_points: config.tolerances.scan_points,
        bisection_width: config.tolerances.bisection_width,
        residual_tolerance: config.tolerances.residual,
        x2_limit: config.tolerances.x2_limit,
        ..QuantizeOptions::default()
    };

    let mut pairs: Vec<(f64, u32)> = Vec::new();
    for &b in &config.b {
        for &l in &config.l {
            pairs.push((b, l));
        }
    }
    pairs.sort_by(|a, b| a.partial_cmp(b).expect("finite B"));
    pairs.dedup();

    let spectra: Vec<std::result::Result<Vec<f64>, String>> = pairs
        .par_iter()
        .map(|&(b, l)| {
            let case = DimensionlessCase::<T>::new(lit(b), l, 0, 0).map_err(|e| e.to_string())?;
            numerov::solve(&case, &grid, levels)
                .map(|s| s.eigenvalues.into_iter().map(to_f64).collect())
                .map_err(|e| e.to_string())
        })
        .collect();

    let mut tasks = Vec::new();
    for (idx, &(b, l)) in pairs.iter().enumerate() {
        let mut s_values = config.s.clone();
        s_values.sort_unstable();
        s_values.dedup();
        let mut orders = config.orders.clone();
        orders.sort_unstable();
        orders.dedup();
        for &s in &s_values {
            for &j in &orders {
                tasks.push((idx, b, l, s, j));
            }
        }
    }

    let mut cases: Vec<CaseReport> = tasks
        .par_iter()
        .map(|&(idx, b, l, s, j)| {
            let mut errors = Vec::new();
            let a_n = match &spectra[idx] {
                Ok(v) => Some(v[s as usize]),
                Err(e) => {
                    errors.push(format!("numerov: {e}"));
                    None
                }
            };
            let phase = DimensionlessCase::<T>::new(lit(b), l, s, j)
                .and_then(|case| quantize_with(&case, &opts).map(|q| (case, q)));
            let (quant, chi) = match phase {
                Ok((case, q)) => {
                    let chi = chi_between_turning_points(&case, &q);
                    (Some(q), chi)
                }
                Err(e) => {
                    errors.push(format!("phase integral: {e}"));
                    (None, None)
                }
            };
            let q64 = quant.as_ref().map(result_to_f64);
            let a_phi = q64.as_ref().map(|q| q.a);
            let row = ComparisonRow {
                b,
                l,
                s,
                j,
                a_n,
                a_phi,
                delta_a: a_n.zip(a_phi).map(|(x, y)| (x - y).abs()),
                residual: q64.as_ref().map(|q| q.residual),
                c_abs: q64.as_ref().map(|q| q.c_abs),
            };
            CaseReport {
                row,
                numerov_grid: grid64,
                phase_integral: q64,
                chi0_max: chi,
                errors,
            }
        })
        .collect();
    cases.sort_by(|a, b| a.row.key().partial_cmp(&b.row.key()).expect("finite keys"));
    Ok(SweepReport { cases })
}

fn chi_between_turning_points<T: Real>(
    case: &DimensionlessCase<T>,
    q: &QuantizationResult<T>,
) -> Option<f64> {
    let tp = q.turning_points;
    let samples: Vec<T> = (1..10)
        .map(|k| tp.x1 + (tp.x2 - tp.x1) * lit::<T>(k as f64 / 10.0))
        .collect();
    chi0_diagnostic(q.a, case, &samples).ok().map(to_f64)
}

fn result_to_f64<T: Real>(q: &QuantizationResult<T>) -> QuantizationResult<f64> {
    let c = |x: T| to_f64(x);
    let tp = q.turning_points;
    QuantizationResult {
        case: DimensionlessCase {
            b: c(q.case.b),
            l: q.case.l,
            s: q.case.s,
            j: q.case.j,
        },
        x2: c(q.x2),
        a: c(q.a),
        u0: num_complex::Complex::new(c(q.u0.re), c(q.u0.im)),
        residual: c(q.residual),
        c_abs: c(q.c_abs),
        l1: c(q.l1),
        l3: c(q.l3),
        turning_points: crate::phase_integral::TurningPoints {
            x0: c(tp.x0),
            x1: c(tp.x1),
            x2: c(tp.x2),
            s: c(tp.s),
            t: c(tp.t),
            d2: c(tp.d2),
            k2: c(tp.k2),
            alpha2: c(tp.alpha2),
        },
        monotone: q.monotone,
    }
}

/// |ΔA| against s for one (B, l, j).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotSeries {
    #[serde(rename = "B")]
    pub b: f64,
    pub l: u32,
    pub j: u32,
    pub points: Vec<(u32, f64)>,
}

/// Groups complete rows into (s, |ΔA|) series per (B, l, j).
pub fn plot_series(rows: &[ComparisonRow]) -> Vec<PlotSeries> {
    let mut sorted: Vec<&ComparisonRow> = rows.iter().filter(|r| r.delta_a.is_some()).collect();
    sorted.sort_by(|a, b| {
        (a.b, a.l, a.j, a.s)
            .partial_cmp(&(b.b, b.l, b.j, b.s))
            .expect("finite keys")
    });
    let mut out: Vec<PlotSeries> = Vec::new();
    for r in sorted {
        let point = (r.s, r.delta_a.expect("filtered"));
        match out.last_mut() {
            Some(p) if p.b == r.b && p.l == r.l && p.j == r.j => p.points.push(point),
            _ => out.push(PlotSeries {
                b: r.b,
                l: r.l,
                j: r.j,
                points: vec![point],
            }),
        }
    }
    out
}

/// Whether a published phase-integral value is recovered, and at which order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reproduction {
    /// Matches with L⁽¹⁾ + L⁽³⁾.
    ThirdOrder,
    /// Matches with L⁽¹⁾ alone but not with L⁽¹⁾ + L⁽³⁾.
    FirstOrderOnly,
    NotReproduced,
}

pub fn classify_reproduction(reference: f64, first: f64, third: f64, tol: f64) -> Reproduction {
    if (third - reference).abs() <= tol {
        Reproduction::ThirdOrder
    } else if (first - reference).abs() <= tol {
        Reproduction::FirstOrderOnly
    } else {
        Reproduction::NotReproduced
    }
}

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::Order;

/// Numerov box and mesh.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub z_min: f64,
    pub z_max: f64,
    pub n: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            z_min: 1e-4,
            z_max: 50.0,
            n: 5000,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSpec {
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Target |Σ L − (s + ½)π|.
    pub residual: f64,
    /// Relative bracket width handed from bisection to Brent.
    pub bisection_width: f64,
    pub scan_points: usize,
    pub x2_limit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            residual: 1e-10,
            bisection_width: 1e-6,
            scan_points: 96,
            x2_limit: 1e6,
        }
    }
}

/// Sweep description, normally read from TOML:
///
/// ```toml
/// b = [0.0, 2.0]
/// l = [0, 1, 2]
/// s = [0]
/// orders = [0, 1]
///
/// [grid]
/// z_min = 1e-4
/// z_max = 50.0
/// n = 5000
///
/// [output]
/// csv = "levels.csv"
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub b: Vec<f64>,
    pub l: Vec<u32>,
    pub s: Vec<u32>,
    pub orders: Vec<u32>,
    pub grid: GridSpec,
    pub output: OutputSpec,
    pub tolerances: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            b: vec![0.0, 2.0, 5.0, 10.0],
            l: vec![0, 1, 2],
            s: vec![0],
            orders: vec![0, 1],
            grid: GridSpec::default(),
            output: OutputSpec::default(),
            tolerances: Tolerances::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.b.is_empty() || self.l.is_empty() || self.s.is_empty() || self.orders.is_empty() {
            return fail("b, l, s and orders must all be non-empty".into());
        }
        if let Some(b) = self.b.iter().find(|b| !(b.is_finite() && **b >= 0.0)) {
            return fail(format!("B = {b} must be finite and >= 0"));
        }
        for &j in &self.orders {
            Order::try_from(j).map_err(|e| Error::Config(e.to_string()))?;
        }
        let g = &self.grid;
        if !(g.z_min > 0.0 && g.z_max > g.z_min && g.z_max.is_finite()) {
            return fail(format!("grid box [{}, {}] is invalid", g.z_min, g.z_max));
        }
        if g.n < 8 {
            return fail(format!("grid n = {} is below 8", g.n));
        }
        let max_s = *self.s.iter().max().unwrap_or(&0) as usize;
        if max_s + 1 > g.n - 1 {
            return fail(format!(
                "s = {max_s} needs more than {} grid unknowns",
                g.n - 1
            ));
        }
        let t = &self.tolerances;
        if !(t.residual > 0.0 && t.bisection_width > 0.0 && t.x2_limit > 0.0) || t.scan_points < 8 {
            return fail("tolerances must be positive and scan_points >= 8".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_round_trip_and_defaults() {
        let cfg = RunConfig::from_toml_str(
            "b = [2.0]\nl = [0, 2]\n[grid]\nz_min = 1e-5\nz_max = 20.0\nn = 512\n",
        )
        .unwrap();
        assert_eq!(cfg.s, vec![0]);
        assert_eq!(cfg.grid.n, 512);
        let again = RunConfig::from_toml_str(&cfg.to_toml_string().unwrap()).unwrap();
        assert_eq!(again, cfg);
    }

    #[test]
    fn rejects_invalid() {
        assert!(RunConfig::from_toml_str("orders = [2]").is_err());
        assert!(RunConfig::from_toml_str("b = [-1.0]").is_err());
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
        assert!(RunConfig::from_toml_str("[grid]\nz_min = 0.0\nz_max = 1.0\nn = 100").is_err());
    }
}

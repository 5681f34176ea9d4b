use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::ZenoLine;
use crate::error::{Error, Result};
use crate::scatter::PotentialSpec;
use crate::specfun::QuadratureSettings;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CommandKind {
    Zeno,
    Compressibility,
    Critical,
    Isotherm,
    Jamming,
    Partition,
    Threshold,
    Ensemble,
    Reference,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Zeno => "zeno",
            CommandKind::Compressibility => "compressibility",
            CommandKind::Critical => "critical",
            CommandKind::Isotherm => "isotherm",
            CommandKind::Jamming => "jamming",
            CommandKind::Partition => "partition",
            CommandKind::Threshold => "threshold",
            CommandKind::Ensemble => "ensemble",
            CommandKind::Reference => "reference",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Grid written `lo:hi:step`; `hi` is included when the step lands on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.lo + i as f64 * self.step).collect()
    }

    pub fn validate(&self, field: &str) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.step.is_finite()) {
            return Err(Error::config(field, "grid bounds must be finite"));
        }
        if self.step == 0.0 || (self.hi - self.lo) * self.step < 0.0 {
            return Err(Error::config(field, format!("step {} does not move {} toward {}", self.step, self.lo, self.hi)));
        }
        if ((self.hi - self.lo) / self.step) > 1e7 {
            return Err(Error::config(field, "grid has more than 10^7 points"));
        }
        Ok(())
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.step)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected lo:hi:step, got '{s}'"));
        }
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}"));
        let g = GridSpec {
            lo: num(parts[0])?,
            hi: num(parts[1])?,
            step: num(parts[2])?,
        };
        g.validate("grid").map_err(|e| e.to_string())?;
        Ok(g)
    }
}

impl Serialize for GridSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GridSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub format: Format,
    /// Also write a gnuplot script next to a CSV file.
    pub plot: bool,
}

/// Everything a run depends on. Loaded from JSON, then overridden by flags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<CommandKind>,
    pub potential: PotentialSpec,
    pub quadrature: QuadratureSettings,
    pub b: f64,
    pub b_grid: GridSpec,
    pub x_grid: GridSpec,
    pub p_grid: GridSpec,
    pub mu_grid: GridSpec,
    /// Volumes for the equation-of-state table, log-spaced: `lo:hi:points`.
    pub v_grid: GridSpec,
    pub gamma0: f64,
    pub imperfect: bool,
    pub zeno: ZenoLine,
    pub n: Vec<u64>,
    pub k: Option<u64>,
    pub table: bool,
    pub levels: Vec<f64>,
    pub particles: Vec<u64>,
    pub energy: f64,
    pub boltzmann: bool,
    pub gamma: f64,
    pub kappa: Vec<f64>,
    pub reference_table: String,
    pub output: OutputConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: None,
            potential: PotentialSpec::reduced_lj(),
            quadrature: QuadratureSettings::default(),
            b: crate::scatter::DEFAULT_B,
            b_grid: GridSpec { lo: 5.0, hi: 100.0, step: 5.0 },
            x_grid: GridSpec { lo: 0.02, hi: 0.98, step: 0.02 },
            p_grid: GridSpec { lo: 0.05, hi: 1.0, step: 0.05 },
            mu_grid: GridSpec { lo: 0.0, hi: -2.0, step: -0.1 },
            v_grid: GridSpec { lo: 1.2, hi: 5000.0, step: 200.0 },
            gamma0: crate::diagram::GAMMA0,
            imperfect: false,
            zeno: ZenoLine::default(),
            n: vec![100],
            k: None,
            table: false,
            levels: vec![1.0, 2.0, 3.0, 4.0],
            particles: vec![4, 6, 8],
            energy: 2.0,
            boltzmann: false,
            gamma: 1.0,
            kappa: vec![-5.0, -10.0, -20.0],
            reference_table: "rotation-angles".into(),
            output: OutputConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::config(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("config", format!("{}: {e}", path.display())))?;
        RunConfig::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.command.is_none() {
            return Err(Error::config("command", "no command given"));
        }
        self.potential.validate()?;
        self.quadrature.validate()?;
        self.zeno.validate()?;
        for (name, g) in [
            ("b_grid", &self.b_grid),
            ("x_grid", &self.x_grid),
            ("p_grid", &self.p_grid),
            ("mu_grid", &self.mu_grid),
        ] {
            g.validate(name)?;
        }
        let v = &self.v_grid;
        if !(v.lo > 0.0 && v.hi > v.lo && v.step >= 2.0 && v.step.fract() == 0.0) {
            return Err(Error::config("v_grid", "expected lo:hi:points with 0 < lo < hi and at least 2 points"));
        }
        if !(self.b > 0.0 && self.b.is_finite()) {
            return Err(Error::config("b", format!("{} must be positive", self.b)));
        }
        if self.n.is_empty() {
            return Err(Error::config("n", "at least one size is required"));
        }
        if self.particles.is_empty() {
            return Err(Error::config("particles", "at least one particle number is required"));
        }
        Ok(())
    }

    pub fn v_points(&self) -> Vec<f64> {
        let n = self.v_grid.step as usize;
        let (lo, hi) = (self.v_grid.lo, self.v_grid.hi);
        (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
    }

    /// Canonical JSON of the resolved configuration, without the output path.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        c.output.path = None;
        serde_json::to_string(&c).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: GridSpec = "5:100:5".parse().unwrap();
        assert_eq!(g.points().len(), 20);
        assert_eq!(*g.points().last().unwrap(), 100.0);
        let d: GridSpec = "0:-2:-0.1".parse().unwrap();
        assert_eq!(d.points().len(), 21);
        assert!("1:0:1".parse::<GridSpec>().is_err());
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("1:2:0".parse::<GridSpec>().is_err());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let c = RunConfig::default();
        let back = RunConfig::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(c, back);
        let e = RunConfig::from_json("{\n  \"bogus\": 1\n}").unwrap_err();
        match e {
            Error::Config { field, .. } => assert!(field.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
        let p = RunConfig::from_json(r#"{"command": "zeno", "potential": {"family": "morse", "depth": 1.0, "a": 3.0, "r_e": 1.1}}"#).unwrap();
        assert_eq!(p.potential.family(), "morse");
        assert!(RunConfig::from_json(r#"{"b_grid": "1:0:1"}"#).is_err());
    }
}

//! Bundled reference data: rotation angles of the isotherm picture, the
//! substance table for T_cr/4 and the critical and triple-point landmarks.

use serde::Serialize;

/// ρ_cr/ρ_B taken for the reduced Zeno line.
pub const CRITICAL_RHO_RATIO: f64 = 0.273;
/// T_cr/T_B taken for the reduced Zeno line.
pub const CRITICAL_T_RATIO: f64 = 0.39;
/// T_cr/T_B quoted alongside the substance table.
pub const QUOTED_T_RATIO: f64 = 2.79;
pub const GAMMA0: f64 = 0.2;
pub const Z_CRITICAL: f64 = 0.29;
pub const FOCAL_Z: f64 = 0.17;
pub const TRIPLE_Z: f64 = 0.3e-3;
/// T_triple/T_cr.
pub const TRIPLE_T_RATIO: f64 = 0.55;
/// Liquid density at the triple point, g/cm³.
pub const TRIPLE_RHO: f64 = 0.7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RotationAngle {
    /// Lower edge of the reduced volume band.
    pub v: f64,
    /// Angle in radians.
    pub alpha: f64,
    /// Whether the row covers every V at or above `v`.
    pub open_above: bool,
}

pub const ROTATION_ANGLES: [RotationAngle; 4] = [
    RotationAngle { v: 0.3, alpha: 0.049, open_above: true },
    RotationAngle { v: 0.25, alpha: 0.052, open_above: false },
    RotationAngle { v: 0.20, alpha: 0.058, open_above: false },
    RotationAngle { v: 0.17, alpha: 0.066, open_above: false },
];

pub const ROTATION_SOURCE: &str = "rotation angles of the isotherms about the Zeno-line point, by reduced volume";

/// Angle for a tabulated volume; V ≥ 0.3 maps onto the first row.
pub fn rotation_angle(v: f64) -> Option<f64> {
    ROTATION_ANGLES
        .iter()
        .find(|r| if r.open_above { v >= r.v - 1e-12 } else { (v - r.v).abs() < 1e-9 })
        .map(|r| r.alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Substance {
    pub name: &'static str,
    pub formula: &'static str,
    /// Well depth ε in kelvin.
    pub epsilon_k: f64,
    /// Experimental T_cr/4 in kelvin.
    pub t_cr_quarter: f64,
    /// Estimate from the model, in kelvin.
    pub estimate: f64,
}

pub const SUBSTANCES: [Substance; 6] = [
    Substance { name: "neon", formula: "Ne", epsilon_k: 36.3, t_cr_quarter: 11.0, estimate: 10.5 },
    Substance { name: "argon", formula: "Ar", epsilon_k: 119.3, t_cr_quarter: 37.0, estimate: 35.0 },
    Substance { name: "krypton", formula: "Kr", epsilon_k: 171.0, t_cr_quarter: 52.0, estimate: 50.0 },
    Substance { name: "nitrogen", formula: "N2", epsilon_k: 95.9, t_cr_quarter: 31.0, estimate: 28.0 },
    Substance { name: "methane", formula: "CH4", epsilon_k: 148.2, t_cr_quarter: 47.0, estimate: 43.0 },
    Substance { name: "ethane", formula: "C2H6", epsilon_k: 243.0, t_cr_quarter: 76.0, estimate: 70.0 },
];

pub const SUBSTANCE_SOURCE: &str = "Lennard-Jones well depths with experimental and estimated T_cr/4";

/// Case-insensitive lookup by name or formula.
pub fn substance(key: &str) -> Option<&'static Substance> {
    let k = key.trim();
    SUBSTANCES
        .iter()
        .find(|s| s.name.eq_ignore_ascii_case(k) || s.formula.eq_ignore_ascii_case(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Landmark {
    pub key: &'static str,
    pub value: f64,
    pub source: &'static str,
}

pub const LANDMARKS: [Landmark; 9] = [
    Landmark { key: "rho_cr_over_rho_B", value: CRITICAL_RHO_RATIO, source: "critical density over the Zeno-line intercept" },
    Landmark { key: "T_cr_over_T_B", value: CRITICAL_T_RATIO, source: "critical temperature over the Boyle temperature" },
    Landmark { key: "T_B_over_T_cr_quoted", value: QUOTED_T_RATIO, source: "temperature ratio quoted with the substance table" },
    Landmark { key: "gamma0", value: GAMMA0, source: "fractal index of the critical isotherm" },
    Landmark { key: "Z_cr", value: Z_CRITICAL, source: "experimental critical compressibility" },
    Landmark { key: "Z_focal", value: FOCAL_Z, source: "focal point of the liquid rays" },
    Landmark { key: "Z_triple", value: TRIPLE_Z, source: "compressibility at the triple point" },
    Landmark { key: "T_triple_over_T_cr", value: TRIPLE_T_RATIO, source: "triple-point temperature" },
    Landmark { key: "rho_triple_g_cm3", value: TRIPLE_RHO, source: "liquid density at the triple point" },
];

#[derive(Debug, Clone, Serialize)]
pub struct ReferenceTables {
    pub rotation_angles: &'static [RotationAngle],
    pub rotation_source: &'static str,
    pub substances: &'static [Substance],
    pub substance_source: &'static str,
    pub landmarks: &'static [Landmark],
}

pub fn reference_tables() -> ReferenceTables {
    ReferenceTables {
        rotation_angles: &ROTATION_ANGLES,
        rotation_source: ROTATION_SOURCE,
        substances: &SUBSTANCES,
        substance_source: SUBSTANCE_SOURCE,
        landmarks: &LANDMARKS,
    }
}

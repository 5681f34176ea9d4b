use serde::{Deserialize, Serialize};

use super::{invert_polylog, reference, FractalEos, ZenoLine};
use crate::curve::PhaseCurve;
use crate::error::{Error, Result};
use crate::specfun::riemann_zeta;

pub const LIQUID_RAY_TEMPERATURES: [f64; 3] = [0.55, 0.7, 0.85];

/// One T = const ray of the liquid picture, Z = c/ρ between Z = 0.17 and the Zeno line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiquidRay {
    pub t: f64,
    /// x = ρ; columns Z, P.
    pub curve: PhaseCurve,
    /// Li_{γ+1}(e^κ) held along the ray, from its Zeno-line endpoint.
    pub li_constant: f64,
    pub kappa: f64,
    /// The endpoint value exceeded ζ(γ+1) and was capped there.
    pub capped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiquidSummary {
    /// c = Z_cr ρ_cr.
    pub c: f64,
    pub z_cr: f64,
    pub rho_cr: f64,
    pub rays: Vec<LiquidRay>,
    pub focal_z: f64,
    pub triple_z: f64,
    pub triple_t_ratio: f64,
    pub triple_rho_g_cm3: f64,
}

impl LiquidSummary {
    /// Scale 1/log₂N of the μ shift between rays for a system of N particles.
    pub fn mu_shift_scale(n: f64) -> f64 {
        1.0 / n.log2()
    }
}

/// Liquid rays at T/T_cr ∈ {0.55, 0.7, 0.85} in critical-reduced units, with the
/// model Z_cr = ζ(γ+2)/ζ(γ+1) at ρ_cr = 1.
pub fn liquid_summary(eos: &FractalEos, zeno: &ZenoLine) -> Result<LiquidSummary> {
    const OP: &str = "liquid_summary";
    zeno.validate()?;
    let g = eos.gamma;
    let zeta1 = riemann_zeta(g + 1.0)?;
    let z_cr = riemann_zeta(g + 2.0)? / zeta1;
    let rho_cr = 1.0;
    let c = z_cr * rho_cr;
    let rho_focal = c / reference::FOCAL_Z;
    let mut rays = Vec::new();
    for &t in &LIQUID_RAY_TEMPERATURES {
        let rho_end = zeno.rho_b * (1.0 - t / zeno.t_b);
        if !(rho_end > rho_focal) {
            return Err(Error::domain(
                OP,
                format!("Zeno line at T = {t} (ρ = {rho_end:.4}) does not reach the focal density {rho_focal:.4}"),
            ));
        }
        let mut curve = PhaseCurve::new("liquid_ray", "rho", &["Z", "P"]);
        curve.meta("T", t);
        let n = 25;
        for i in 0..n {
            let rho = rho_focal + (rho_end - rho_focal) * i as f64 / (n - 1) as f64;
            let z = c / rho;
            curve.push(rho, vec![z, z * rho * t]);
        }
        // φ T^{γ+1} Li = 1 at the endpoint with φ = V = 1/ρ
        let raw = rho_end / t.powf(g + 1.0);
        let capped = raw >= zeta1;
        let li_constant = raw.min(zeta1);
        let kappa = invert_polylog(g + 1.0, li_constant, None)?;
        rays.push(LiquidRay {
            t,
            curve,
            li_constant,
            kappa,
            capped,
        });
    }
    Ok(LiquidSummary {
        c,
        z_cr,
        rho_cr,
        rays,
        focal_z: reference::FOCAL_Z,
        triple_z: reference::TRIPLE_Z,
        triple_t_ratio: reference::TRIPLE_T_RATIO,
        triple_rho_g_cm3: reference::TRIPLE_RHO,
    })
}

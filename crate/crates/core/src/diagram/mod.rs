//! Zeno line, Bachinskii parabola, the fractal Bose-Einstein equation of
//! state and the isotherms built on it.

mod eos;
mod isotherm;
mod jamming;
mod liquid;
pub mod reference;

pub use eos::{solve_phi, FractalEos, PhiSettings};
pub use isotherm::{ideal_isotherm, imperfect_isotherm, IsothermPoint};
pub use jamming::{jamming_extension, JammingCurves, JammingSettings};
pub use liquid::{liquid_summary, LiquidRay, LiquidSummary};

use serde::{Deserialize, Serialize};

use crate::curve::PhaseCurve;
use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::specfun::{polylog_exp, riemann_zeta};

pub const GAMMA0: f64 = reference::GAMMA0;

/// ρ = ρ_B(1 − T/T_B).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZenoLine {
    pub rho_b: f64,
    pub t_b: f64,
}

impl Default for ZenoLine {
    fn default() -> Self {
        ZenoLine { rho_b: 1.0, t_b: 1.0 }
    }
}

impl ZenoLine {
    pub fn new(rho_b: f64, t_b: f64) -> Result<Self> {
        let line = ZenoLine { rho_b, t_b };
        line.validate()?;
        Ok(line)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rho_b > 0.0 && self.rho_b.is_finite()) {
            return Err(Error::config("zeno.rho_b", format!("{} must be positive", self.rho_b)));
        }
        if !(self.t_b > 0.0 && self.t_b.is_finite()) {
            return Err(Error::config("zeno.t_b", format!("{} must be positive", self.t_b)));
        }
        Ok(())
    }

    /// Zeno line in units of the critical density and temperature, from the
    /// reference ratios ρ_cr/ρ_B = 0.273 and T_cr/T_B = 0.39.
    pub fn critical_reduced_reference() -> Self {
        ZenoLine {
            rho_b: 1.0 / reference::CRITICAL_RHO_RATIO,
            t_b: 1.0 / reference::CRITICAL_T_RATIO,
        }
    }

    /// T(V) along the line with ρ = 1/V.
    pub fn temperature_at_volume(&self, v: f64) -> f64 {
        self.t_b * (1.0 - 1.0 / (self.rho_b * v))
    }
}

pub fn zeno_density(line: &ZenoLine, t: f64) -> Result<f64> {
    line.validate()?;
    if !(t >= 0.0 && t < line.t_b) {
        return Err(Error::domain("zeno_density", format!("T = {t} must lie in [0, T_B = {})", line.t_b)));
    }
    Ok(line.rho_b * (1.0 - t / line.t_b))
}

/// Points (T, ρ, P = Tρ, Z = P/(ρT)) along the line for T in (0, T_B).
pub fn zeno_curve(line: &ZenoLine, t_grid: &[f64]) -> Result<PhaseCurve> {
    let mut c = PhaseCurve::new("zeno_line", "T", &["rho", "P", "Z"]);
    c.meta("rho_B", line.rho_b);
    c.meta("T_B", line.t_b);
    for &t in t_grid {
        match zeno_density(line, t) {
            Ok(rho) if t > 0.0 => {
                let p = t * rho;
                c.push(t, vec![rho, p, p / (rho * t)]);
            }
            Ok(_) => c.fail(t, "Z undefined at T = 0"),
            Err(e) => c.fail(t, e.to_string()),
        }
    }
    Ok(c)
}

/// Both roots of P = cρ(1 − cρ/(4b)), smaller first.
pub fn bachinskii_density(b: f64, c: f64, p: f64) -> Result<(f64, f64)> {
    if !(b > 0.0) || !(c > 0.0) {
        return Err(Error::domain("bachinskii_density", format!("b = {b} and c = {c} must be positive")));
    }
    if !(p >= 0.0) {
        return Err(Error::domain("bachinskii_density", format!("P = {p} must be non-negative")));
    }
    if p > b {
        return Err(Error::Complexity {
            op: "bachinskii_density",
            detail: format!("P = {p} exceeds the caustic value b = {b}"),
        });
    }
    let s = (1.0 - p / b).sqrt();
    let large = 2.0 * b / c * (1.0 + s);
    // small root from the product of the roots, free of cancellation
    let small = 4.0 * b * p / (c * c) / large;
    Ok((small, large))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalGamma {
    pub target_z: f64,
    /// Root of ζ(d+1)/ζ(d) = target.
    pub d: f64,
    /// γ = d − 1.
    pub gamma: f64,
    /// ζ(γ₀+2)/ζ(γ₀+1) at the reference γ₀ = 0.2.
    pub ratio_at_gamma0: f64,
    /// Factor Vφ′/φ at V_cr that would bring γ₀ = 0.2 to the target.
    pub geometric_factor_at_gamma0: f64,
}

pub fn zeta_ratio(d: f64) -> Result<f64> {
    Ok(riemann_zeta(d + 1.0)? / riemann_zeta(d)?)
}

pub fn critical_gamma(target_z: f64) -> Result<CriticalGamma> {
    if !(target_z > 0.0 && target_z < 1.0) {
        return Err(Error::domain("critical_gamma", format!("target Z = {target_z} must lie in (0, 1)")));
    }
    let (lo, hi) = (1.0 + 1e-9, 6.0);
    let top = zeta_ratio(hi)?;
    if target_z > top {
        return Err(Error::domain(
            "critical_gamma",
            format!("target Z = {target_z} above the attainable ratio {top:.6} on (1, 6]"),
        ));
    }
    let d = bisect("critical_gamma", |d| Ok(zeta_ratio(d)? - target_z), lo, hi, 1e-14)?;
    let r0 = zeta_ratio(GAMMA0 + 1.0)?;
    Ok(CriticalGamma {
        target_z,
        d,
        gamma: d - 1.0,
        ratio_at_gamma0: r0,
        geometric_factor_at_gamma0: target_z / r0,
    })
}

// Li_s(e^κ) = target for κ ≤ 0, Newton safeguarded by a bracket.
pub(crate) fn invert_polylog(s: f64, target: f64, guess: Option<f64>) -> Result<f64> {
    const OP: &str = "invert_polylog";
    if !(target > 0.0) {
        return Err(Error::domain(OP, format!("target {target} must be positive")));
    }
    let top = if s > 1.0 { riemann_zeta(s)? } else { f64::INFINITY };
    if target >= top {
        if target > top * (1.0 + 1e-12) {
            return Err(Error::domain(OP, format!("target {target} above Li_{s}(1) = {top}")));
        }
        return Ok(0.0);
    }
    let f = |k: f64| polylog_exp(s, k).map(|v| v - target);
    // Li_s(e^κ) > e^κ for κ < 0, so ln target bounds the root from below
    let mut lo = target.ln().min(-1e-300) - 1.0;
    while f(lo)? > 0.0 {
        lo = 2.0 * lo - 1.0;
    }
    let mut hi = 0.0;
    let start = match guess {
        Some(g) => g,
        // Li_s(e^κ) ≈ ζ(s) + Γ(1−s)(−κ)^{s−1} near κ = 0 for 1 < s < 2
        None if s > 1.0 && s < 2.0 && target > 0.5 * top => {
            -((top - target) * (s - 1.0) / crate::specfun::gamma_fn(2.0 - s)?).powf(1.0 / (s - 1.0))
        }
        None => target.ln().min(-0.5),
    };
    let mut k = start.clamp(lo, -1e-14);
    for _ in 0..100 {
        let v = f(k)?;
        if v == 0.0 {
            return Ok(k);
        }
        if v < 0.0 {
            lo = k;
        } else {
            hi = k;
        }
        let slope = polylog_exp(s - 1.0, k)?;
        let mut next = k - v / slope;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - k).abs() <= 1e-15 * k.abs().max(1e-3) || hi - lo <= 1e-16 * lo.abs().max(1e-3) {
            return Ok(next);
        }
        k = next;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeno_line() {
        let l = ZenoLine::new(2.0, 3.0).unwrap();
        assert_eq!(zeno_density(&l, 0.0).unwrap(), 2.0);
        assert_eq!(zeno_density(&l, 1.5).unwrap(), 1.0);
        assert!(zeno_density(&l, 3.0).is_err());
        let c = zeno_curve(&l, &[0.0, 0.5, 1.0, 2.9]).unwrap();
        assert_eq!(c.len(), 3);
        for z in c.column("Z").unwrap() {
            assert!((z - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn bachinskii() {
        let (b, c) = (2.0, 3.0);
        assert_eq!(bachinskii_density(b, c, 0.0).unwrap(), (0.0, 4.0 * b / c));
        let (x, y) = bachinskii_density(b, c, b).unwrap();
        assert!((x - 2.0 * b / c).abs() < 1e-15 && (y - 2.0 * b / c).abs() < 1e-15);
        let (x, y) = bachinskii_density(b, c, 1.0).unwrap();
        // quadratic formula on (c²/4b)ρ² − cρ + P = 0
        let (qa, qb, qc) = (c * c / (4.0 * b), -c, 1.0);
        let disc = (qb * qb - 4.0 * qa * qc).sqrt();
        assert!((x - (-qb - disc) / (2.0 * qa)).abs() < 1e-14);
        assert!((y - (-qb + disc) / (2.0 * qa)).abs() < 1e-14);
        assert!(matches!(bachinskii_density(b, c, 2.5), Err(Error::Complexity { .. })));
    }

    #[test]
    fn gamma_from_ratio() {
        let g = critical_gamma(0.29).unwrap();
        assert!(g.d > 1.2 && g.d < 1.3);
        assert!((zeta_ratio(g.d).unwrap() - 0.29).abs() < 1e-12);
        assert!((g.ratio_at_gamma0 - 0.2666).abs() < 1e-4);
        let mut prev = 0.0;
        for i in 1..=50 {
            let r = zeta_ratio(1.0 + 0.1 * i as f64).unwrap();
            assert!(r > prev);
            prev = r;
        }
        assert!(critical_gamma(0.995).is_err());
        assert!(critical_gamma(1.5).is_err());
    }

    #[test]
    fn polylog_inverse() {
        for (s, k) in [(1.2, -0.3), (1.2, -1e-4), (2.2, -5.0), (1.5, -40.0)] {
            let t = polylog_exp(s, k).unwrap();
            let back = invert_polylog(s, t, None).unwrap();
            assert!((polylog_exp(s, back).unwrap() / t - 1.0).abs() < 1e-12, "s = {s}, κ = {k}: {back}");
        }
        assert_eq!(invert_polylog(1.2, riemann_zeta(1.2).unwrap(), None).unwrap(), 0.0);
        assert!(invert_polylog(1.2, 10.0, None).is_err());
    }
}

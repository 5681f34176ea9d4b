use serde::{Deserialize, Serialize};

use super::isotherm::VolumeMap;
use super::{FractalEos, ZenoLine};
use crate::curve::PhaseCurve;
use crate::error::{Error, Result};
use crate::specfun::{polylog_exp, riemann_zeta};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JammingSettings {
    /// Step in the polylog order for ∂/∂γ.
    pub order_step: f64,
    /// Agreement required between successive RK4 refinements of an interval.
    pub tol: f64,
    pub max_halvings: u32,
    pub stitch_samples: usize,
    pub linear_samples: usize,
}

impl Default for JammingSettings {
    fn default() -> Self {
        JammingSettings {
            order_step: 1e-4,
            tol: 1e-9,
            max_halvings: 12,
            stitch_samples: 40,
            linear_samples: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JammingCurves {
    /// γ(μ) and its image on the isotherm; x = μ, columns γ, P, Z, V.
    pub traced: PhaseCurve,
    /// Straight segment from the breakpoint to the Zeno-line point at T_r = 1; x = P.
    pub stitched: PhaseCurve,
    /// Variant with dγ/dV = 1 at κ = 0; x = V, columns γ, P, Z.
    pub linear_variant: PhaseCurve,
    pub breakpoint: (f64, f64),
    pub zeno_point: (f64, f64),
    /// γ reached 0 on the traced curve.
    pub traced_full_jamming: bool,
    pub linear_full_jamming: bool,
}

// Li_{s}(e^μ) ratio Li_{g+2}/Li_{g+1} at order g
fn z_id(g: f64, mu: f64) -> Result<f64> {
    Ok(polylog_exp(g + 2.0, mu)? / polylog_exp(g + 1.0, mu)?)
}

// dγ/dμ = −T Z_γ ∂ ln Z_{γ+1}/∂γ at T = 1, κ = μ
fn slope(g: f64, mu: f64, h: f64) -> Result<f64> {
    let z_gamma = if mu == 0.0 && g <= 1.0 {
        0.0
    } else {
        polylog_exp(g + 1.0, mu)? / polylog_exp(g, mu)?
    };
    if z_gamma == 0.0 {
        return Ok(0.0);
    }
    let d = (z_id(g + h, mu)?.ln() - z_id(g - h, mu)?.ln()) / (2.0 * h);
    Ok(-z_gamma * d)
}

// in t = √(−μ), where γ(t) is smoother than γ(μ) near μ = 0
fn slope_t(g: f64, t: f64, h: f64) -> Result<f64> {
    Ok(-2.0 * t * slope(g, -t * t, h)?)
}

fn rk4(g: f64, t: f64, dt: f64, h: f64) -> Result<f64> {
    let k1 = slope_t(g, t, h)?;
    let k2 = slope_t(g + 0.5 * dt * k1, t + 0.5 * dt, h)?;
    let k3 = slope_t(g + 0.5 * dt * k2, t + 0.5 * dt, h)?;
    let k4 = slope_t(g + dt * k3, t + dt, h)?;
    Ok(g + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))
}

fn advance(g: f64, mu0: f64, mu1: f64, s: &JammingSettings) -> Result<f64> {
    let (t0, t1) = ((-mu0).sqrt(), (-mu1).sqrt());
    let run = |n: u32| -> Result<f64> {
        let dt = (t1 - t0) / n as f64;
        let mut y = g;
        for i in 0..n {
            y = rk4(y, t0 + i as f64 * dt, dt, s.order_step)?;
        }
        Ok(y)
    };
    let mut prev = run(1)?;
    let mut n = 1;
    for _ in 0..s.max_halvings {
        n *= 2;
        let next = run(n)?;
        if (next - prev).abs() <= s.tol * next.abs().max(1e-3) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Accuracy {
        op: "jamming_extension",
        best: prev,
        est_error: (prev - run(n / 2)?).abs(),
    })
}

/// Integrates γ(μ) from γ(0) = γ₀ over a decreasing μ grid, maps it onto the
/// T_r = 1 isotherm through the equation of state, stitches the breakpoint to the
/// Zeno-line point by a straight segment and adds the linear-γ variant.
pub fn jamming_extension(mu_grid: &[f64], eos: &FractalEos, zeno_critical: &ZenoLine) -> Result<JammingCurves> {
    jamming_extension_with(mu_grid, eos, zeno_critical, &JammingSettings::default())
}

pub fn jamming_extension_with(
    mu_grid: &[f64],
    eos: &FractalEos,
    zeno_critical: &ZenoLine,
    settings: &JammingSettings,
) -> Result<JammingCurves> {
    const OP: &str = "jamming_extension";
    zeno_critical.validate()?;
    if mu_grid.first() != Some(&0.0) {
        return Err(Error::domain(OP, "μ grid must start at 0"));
    }
    if mu_grid.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::domain(OP, "μ grid must be strictly decreasing"));
    }
    if !(zeno_critical.t_b > 1.0) {
        return Err(Error::domain(OP, "T_r = 1 must lie below the reduced Boyle temperature"));
    }
    let g0 = eos.gamma;
    let zeta0 = riemann_zeta(g0 + 2.0)?;
    let map = VolumeMap::new(eos)?;

    let mut traced = PhaseCurve::new("jamming_traced", "mu", &["gamma", "P", "Z", "V"]);
    traced.meta("gamma0", g0);
    let mut g = g0;
    let mut full = false;
    for (i, &mu) in mu_grid.iter().enumerate() {
        if i > 0 {
            match advance(g, mu_grid[i - 1], mu, settings) {
                Ok(next) => g = next,
                Err(e) => {
                    traced.fail(mu, e.to_string());
                    break;
                }
            }
        }
        if g <= 0.0 {
            traced.fail(mu, "γ reached 0 (full jamming)");
            full = true;
            break;
        }
        let point = (|| -> Result<(f64, f64, f64)> {
            let v = map.invert(zeta0 / polylog_exp(g + 1.0, mu)?)?;
            let (_, ratio) = map.eval(v)?;
            let p = ratio * polylog_exp(g + 2.0, mu)? / zeta0;
            Ok((v, p, p * v))
        })();
        match point {
            Ok((v, p, z)) => traced.push(mu, vec![g, p, z, v]),
            Err(e) => traced.fail(mu, e.to_string()),
        }
    }
    traced.meta("full_jamming", full);

    let z_bp = map.v_cr;
    let breakpoint = (1.0, z_bp);
    let rho_r = zeno_critical.rho_b * (1.0 - 1.0 / zeno_critical.t_b);
    let zeno_point = (rho_r / z_bp, 1.0);
    let mut stitched = PhaseCurve::new("jamming_stitch", "P", &["Z"]);
    stitched.meta("heuristic", true);
    let n = settings.stitch_samples.max(2);
    for i in 0..n {
        let t = i as f64 / (n - 1) as f64;
        let p = breakpoint.0 + t * (zeno_point.0 - breakpoint.0);
        let z = breakpoint.1 + t * (zeno_point.1 - breakpoint.1);
        stitched.push(p, vec![z]);
    }

    let mut linear = PhaseCurve::new("jamming_linear", "V", &["gamma", "P", "Z"]);
    let m = settings.linear_samples.max(2);
    for i in 0..m {
        let v = z_bp - g0 * i as f64 / (m - 1) as f64;
        let gv = (g0 - (z_bp - v)).max(0.0);
        let p = riemann_zeta(gv + 2.0)? / zeta0;
        linear.push(v, vec![gv, p, p * v]);
    }
    linear.meta("full_jamming", true);

    Ok(JammingCurves {
        traced,
        stitched,
        linear_variant: linear,
        breakpoint,
        zeno_point,
        traced_full_jamming: full,
        linear_full_jamming: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::GAMMA0;

    #[test]
    fn traced_gamma_is_monotone() {
        let id = FractalEos::identity(GAMMA0, &[0.01, 1e4]).unwrap();
        let mu: Vec<f64> = (0..=20).map(|i| -0.05 * i as f64).collect();
        let c = jamming_extension(&mu, &id, &ZenoLine::critical_reduced_reference()).unwrap();
        let g = c.traced.column("gamma").unwrap();
        assert_eq!(g[0], GAMMA0);
        assert_eq!(g.len(), mu.len());
        // non-increasing in μ; the grid runs toward smaller μ
        for w in g.windows(2) {
            assert!(w[1] >= w[0] - 1e-12);
        }
        let z = c.traced.column("Z").unwrap();
        assert!((z[0] - 0.2666).abs() < 1e-3);
        assert!((c.zeno_point.0 - 8.38).abs() < 0.01);
        let last = c.linear_variant.points.last().unwrap();
        assert!(last.values[0].abs() < 1e-12);
    }

    #[test]
    fn slope_matches_direct_difference() {
        // exact derivative of ln(Li_{g+2}/Li_{g+1}) via finite differences with a larger step
        let (g, mu) = (0.35, -0.4);
        let s = slope(g, mu, 1e-4).unwrap();
        let h = 1e-3;
        let d = ((z_id(g + h, mu).unwrap() / z_id(g - h, mu).unwrap()).ln()) / (2.0 * h);
        let zg = polylog_exp(g + 1.0, mu).unwrap() / polylog_exp(g, mu).unwrap();
        assert!((s + zg * d).abs() < 1e-5 * s.abs());
        assert_eq!(slope(0.2, 0.0, 1e-4).unwrap(), 0.0);
    }

    #[test]
    fn rejects_bad_grid() {
        let id = FractalEos::identity(GAMMA0, &[0.01, 1e4]).unwrap();
        let z = ZenoLine::critical_reduced_reference();
        assert!(jamming_extension(&[-0.1, -0.2], &id, &z).is_err());
        assert!(jamming_extension(&[0.0, 0.1], &id, &z).is_err());
    }
}

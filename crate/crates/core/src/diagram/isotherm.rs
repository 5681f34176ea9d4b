use serde::{Deserialize, Serialize};

use super::FractalEos;
use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::specfun::{polylog_exp, riemann_zeta};

/// A point on the T_r = 1 isotherm in critical-reduced units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsothermPoint {
    pub p_r: f64,
    pub z: f64,
    /// Activity e^κ.
    pub a: f64,
    pub t_r: f64,
    /// Relative residual of the volume equation.
    pub residual_volume: f64,
    /// Relative residual of the pressure equation.
    pub residual_pressure: f64,
    pub iterations: usize,
}

impl IsothermPoint {
    pub fn volume(&self) -> f64 {
        self.z * self.t_r / self.p_r
    }

    pub fn kappa(&self) -> f64 {
        self.a.ln()
    }
}

fn check_p(op: &'static str, p: f64) -> Result<()> {
    if !(p > 0.0) {
        return Err(Error::domain(op, format!("P_r = {p} must be positive")));
    }
    if p > 1.0 {
        return Err(Error::domain(op, format!("P_r = {p} > 1 needs activity above 1")));
    }
    Ok(())
}

// κ with Li_s(e^κ)/ζ(s) = q, q in (0, 1]
fn activity_kappa(op: &'static str, s: f64, zeta: f64, q: f64) -> Result<f64> {
    if q >= 1.0 {
        return Ok(0.0);
    }
    // e^κ ≤ Li_s(e^κ) ≤ ζ(s) e^κ
    let lo = q.ln() - 1e-12;
    let hi = (q * zeta).ln().min(0.0);
    if hi <= lo {
        return Ok(hi);
    }
    let target = q * zeta;
    bisect(op, |k| Ok(polylog_exp(s, k.min(0.0))? / target - 1.0), lo, hi, 1e-15)
}

/// Ideal T_r = 1 isotherm: Li_{γ0+2}(a)/ζ(γ0+2) = P, Z = P ζ(γ0+2)/Li_{γ0+1}(a).
pub fn ideal_isotherm(p_grid: &[f64], gamma0: f64) -> Result<Vec<IsothermPoint>> {
    const OP: &str = "ideal_isotherm";
    if !(gamma0 > 0.0) {
        return Err(Error::domain(OP, format!("γ0 = {gamma0} must be positive")));
    }
    let (s1, s2) = (gamma0 + 1.0, gamma0 + 2.0);
    let z2 = riemann_zeta(s2)?;
    p_grid
        .iter()
        .map(|&p| {
            check_p(OP, p)?;
            let k = activity_kappa(OP, s2, z2, p)?;
            let li1 = polylog_exp(s1, k)?;
            let li2 = polylog_exp(s2, k)?;
            let z = p * z2 / li1;
            let v = z / p;
            Ok(IsothermPoint {
                p_r: p,
                z,
                a: k.exp(),
                t_r: 1.0,
                residual_volume: v * li1 / z2 - 1.0,
                residual_pressure: li2 / (z2 * p) - 1.0,
                iterations: 0,
            })
        })
        .collect()
}

/// Maps the reduced isotherm volume onto a fractal equation of state, so that
/// V_cr of the table lands on the ideal critical volume ζ(γ0+2)/ζ(γ0+1).
#[derive(Debug, Clone, Copy)]
pub(crate) struct VolumeMap<'a> {
    eos: &'a FractalEos,
    pub v_cr: f64,
    phi_cr: f64,
    dphi_cr: f64,
}

impl<'a> VolumeMap<'a> {
    pub fn new(eos: &'a FractalEos) -> Result<Self> {
        let g = eos.gamma;
        let v_cr = riemann_zeta(g + 2.0)? / riemann_zeta(g + 1.0)?;
        let (phi_cr, dphi_cr) = eos.eval(eos.v_cr)?;
        Ok(VolumeMap {
            eos,
            v_cr,
            phi_cr,
            dphi_cr,
        })
    }

    fn to_eos(&self, v: f64) -> f64 {
        v * self.eos.v_cr / self.v_cr
    }

    /// (f(v), φ′(V)/φ′(V_cr)), with f(v_cr) = v_cr and f ≡ v for φ(V) = V.
    pub fn eval(&self, v: f64) -> Result<(f64, f64)> {
        if self.eos.identity {
            return Ok((v, 1.0));
        }
        let (p, d) = self.eos.eval(self.to_eos(v))?;
        Ok((self.v_cr * p / self.phi_cr, d / self.dphi_cr))
    }

    pub fn invert(&self, y: f64) -> Result<f64> {
        if self.eos.identity {
            return Ok(y);
        }
        let big = self.eos.invert_phi(y * self.phi_cr / self.v_cr)?;
        Ok(big * self.v_cr / self.eos.v_cr)
    }
}

/// Imperfect T_r = 1 isotherm on a fractal equation of state: solves
/// f(V) Li_{γ+1}(a) = ζ(γ+2) and Li_{γ+2}(a)/ζ(γ+2) = P φ′(V_cr)/φ′(V) with V = Z/P.
/// Fixed-point iteration from the ideal solution first; when that cycles, the
/// volume equation is bracketed on [V_cr, ∞) with a(V) from the pressure equation.
pub fn imperfect_isotherm(p_grid: &[f64], eos: &FractalEos) -> Result<Vec<IsothermPoint>> {
    const OP: &str = "imperfect_isotherm";
    let g = eos.gamma;
    let (s1, s2) = (g + 1.0, g + 2.0);
    let z2 = riemann_zeta(s2)?;
    let map = VolumeMap::new(eos)?;
    let start = ideal_isotherm(p_grid, g)?;
    let kappa_at = |p: f64, v: f64| -> Result<f64> {
        let (_, ratio) = map.eval(v)?;
        activity_kappa(OP, s2, z2, (p / ratio).min(1.0))
    };
    let mut out = Vec::with_capacity(p_grid.len());
    for (&p, ideal) in p_grid.iter().zip(start) {
        let mut v = ideal.volume();
        let mut k = ideal.kappa();
        let mut trace = Vec::new();
        let mut converged = false;
        let mut iterations = 0;
        for it in 1..=60 {
            iterations = it;
            k = kappa_at(p, v)?;
            let next = map.invert(z2 / polylog_exp(s1, k)?)?;
            let step = (next - v).abs() / v;
            trace.push(next);
            v = next;
            if step < 1e-14 {
                converged = true;
                break;
            }
            if !v.is_finite() {
                break;
            }
        }
        if !converged {
            let residual = |v: f64| -> Result<f64> {
                let (f, _) = map.eval(v)?;
                Ok(f * polylog_exp(s1, kappa_at(p, v)?)? / z2 - 1.0)
            };
            let lo = map.v_cr;
            let mut hi = ideal.volume().max(2.0 * lo);
            let mut grow = 0;
            while residual(hi)? < 0.0 {
                hi *= 2.0;
                grow += 1;
                if grow > 60 {
                    let tail: Vec<String> = trace.iter().rev().take(6).map(|x| format!("{x:.6e}")).collect();
                    return Err(Error::Solver {
                        op: OP,
                        detail: format!("no solution at P = {p}; fixed-point trace of V: {}", tail.join(", ")),
                    });
                }
            }
            v = bisect(OP, residual, lo, hi, 1e-15 * hi)?;
            k = kappa_at(p, v)?;
        }
        let (f, ratio) = map.eval(v)?;
        let li1 = polylog_exp(s1, k)?;
        let li2 = polylog_exp(s2, k)?;
        out.push(IsothermPoint {
            p_r: p,
            z: p * v,
            a: k.exp(),
            t_r: 1.0,
            residual_volume: f * li1 / z2 - 1.0,
            residual_pressure: li2 * ratio / (z2 * p) - 1.0,
            iterations,
        });
    }
    Ok(out)
}

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use super::{invert_polylog, ZenoLine};
use crate::error::{Error, Result};
use crate::specfun::{polylog_exp, riemann_zeta};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiSettings {
    /// Local relative error per step.
    pub rel_tol: f64,
    /// Largest accepted constraint residual on the returned table.
    pub residual_tol: f64,
    pub max_steps: usize,
}

impl Default for PhiSettings {
    fn default() -> Self {
        PhiSettings {
            rel_tol: 1e-11,
            residual_tol: 1e-6,
            max_steps: 200_000,
        }
    }
}

/// Volume deformation φ_γ(V) sampled on [V_cr, V_max], ascending in V.
/// The first sample is V_cr, where κ reaches 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractalEos {
    pub gamma: f64,
    pub zeno: ZenoLine,
    pub v: Vec<f64>,
    pub phi: Vec<f64>,
    pub dphi: Vec<f64>,
    pub kappa: Vec<f64>,
    /// (Vφ′/φ)·Li_{γ+2}(e^κ)/Li_{γ+1}(e^κ) − 1 at each sample.
    pub residual: Vec<f64>,
    pub v_cr: f64,
    /// Grid points below V_cr, not sampled.
    pub dropped: Vec<f64>,
    pub kappa_range: (f64, f64),
    /// φ(V) = V exactly, with no Zeno-line construction behind it.
    pub identity: bool,
}

impl FractalEos {
    /// φ(V) = V on the given grid; V_cr is the first grid point.
    pub fn identity(gamma: f64, v_grid: &[f64]) -> Result<Self> {
        check_grid(v_grid, 0.0)?;
        let n = v_grid.len();
        Ok(FractalEos {
            gamma,
            zeno: ZenoLine::default(),
            v: v_grid.to_vec(),
            phi: v_grid.to_vec(),
            dphi: vec![1.0; n],
            kappa: vec![0.0; n],
            residual: vec![0.0; n],
            v_cr: v_grid[0],
            dropped: Vec::new(),
            kappa_range: (0.0, 0.0),
            identity: true,
        })
    }

    pub fn phi_cr(&self) -> f64 {
        self.phi[0]
    }

    pub fn dphi_cr(&self) -> f64 {
        self.dphi[0]
    }

    /// Vφ′/φ at V_cr.
    pub fn geometric_factor_cr(&self) -> f64 {
        self.v_cr * self.dphi_cr() / self.phi_cr()
    }

    pub fn v_max(&self) -> f64 {
        *self.v.last().expect("non-empty table")
    }

    fn locate(&self, v: f64) -> Result<Option<usize>> {
        if v < self.v[0] * (1.0 - 1e-14) {
            return Err(Error::domain(
                "FractalEos",
                format!("V = {v} below the sampled range starting at V_cr = {}", self.v_cr),
            ));
        }
        if v >= self.v_max() {
            return Ok(None);
        }
        let i = self.v.partition_point(|&x| x <= v).max(1);
        Ok(Some(i - 1))
    }

    /// (φ, φ′) at V by cubic Hermite interpolation; linear beyond V_max.
    pub fn eval(&self, v: f64) -> Result<(f64, f64)> {
        if self.identity {
            if v < self.v[0] * (1.0 - 1e-14) {
                return Err(Error::domain("FractalEos", format!("V = {v} below V_cr = {}", self.v_cr)));
            }
            return Ok((v, 1.0));
        }
        let Some(i) = self.locate(v)? else {
            let n = self.v.len() - 1;
            return Ok((self.phi[n] + (v - self.v[n]) * self.dphi[n], self.dphi[n]));
        };
        let (x0, x1) = (self.v[i], self.v[i + 1]);
        let h = x1 - x0;
        let t = ((v - x0) / h).clamp(0.0, 1.0);
        let (p0, p1, m0, m1) = (self.phi[i], self.phi[i + 1], self.dphi[i] * h, self.dphi[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        let phi = (2.0 * t3 - 3.0 * t2 + 1.0) * p0 + (t3 - 2.0 * t2 + t) * m0 + (-2.0 * t3 + 3.0 * t2) * p1 + (t3 - t2) * m1;
        let dphi = ((6.0 * t2 - 6.0 * t) * p0 + (3.0 * t2 - 4.0 * t + 1.0) * m0 + (-6.0 * t2 + 6.0 * t) * p1 + (3.0 * t2 - 2.0 * t) * m1) / h;
        Ok((phi, dphi))
    }

    /// V with φ(V) = target.
    pub fn invert_phi(&self, target: f64) -> Result<f64> {
        if self.identity {
            return Ok(target);
        }
        if target < self.phi[0] {
            return Err(Error::domain(
                "FractalEos",
                format!("φ = {target} below φ(V_cr) = {}", self.phi[0]),
            ));
        }
        let n = self.v.len() - 1;
        if target >= self.phi[n] {
            return Ok(self.v[n] + (target - self.phi[n]) / self.dphi[n]);
        }
        let i = self.phi.partition_point(|&p| p <= target).max(1) - 1;
        let (mut lo, mut hi) = (self.v[i], self.v[i + 1]);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid)?.0 < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

fn check_grid(v_grid: &[f64], floor: f64) -> Result<()> {
    if v_grid.len() < 2 || v_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::domain("solve_phi", "V grid must have at least two increasing points"));
    }
    if !(v_grid[0] > floor) || !v_grid.last().unwrap().is_finite() {
        return Err(Error::domain(
            "solve_phi",
            format!("V grid must lie above {floor}, got V = {}", v_grid[0]),
        ));
    }
    Ok(())
}

struct System {
    gamma: f64,
    zeno: ZenoLine,
    zeta1: f64,
    guess: Cell<Option<f64>>,
}

impl System {
    fn kappa(&self, l: f64) -> Result<f64> {
        let k = invert_polylog(self.gamma + 1.0, l.min(self.zeta1), self.guess.get())?;
        self.guess.set(Some(k));
        Ok(k)
    }

    // d/d(ln V) of (φ, L), with L = Li_{γ+1}(e^κ)
    fn rhs(&self, u: f64, y: [f64; 2]) -> Result<[f64; 2]> {
        let v = u.exp();
        let t = self.zeno.temperature_at_volume(v);
        let k = self.kappa(y[1])?;
        let li2 = polylog_exp(self.gamma + 2.0, k)?;
        let dphi = 1.0 / (t.powf(self.gamma + 1.0) * li2);
        let dl = -y[1] * y[1] / li2 - (self.gamma + 1.0) * y[1] / (self.zeno.rho_b * v - 1.0);
        Ok([dphi, dl])
    }

    fn rk4(&self, u: f64, y: [f64; 2], h: f64) -> Result<[f64; 2]> {
        let add = |a: [f64; 2], b: [f64; 2], s: f64| [a[0] + s * b[0], a[1] + s * b[1]];
        let k1 = self.rhs(u, y)?;
        let k2 = self.rhs(u + 0.5 * h, add(y, k1, 0.5 * h))?;
        let k3 = self.rhs(u + 0.5 * h, add(y, k2, 0.5 * h))?;
        let k4 = self.rhs(u + h, add(y, k3, h))?;
        Ok([
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ])
    }

    // one step of size h by step doubling; returns the extrapolated state and the error estimate
    fn doubled(&self, u: f64, y: [f64; 2], h: f64) -> Result<([f64; 2], f64)> {
        let full = self.rk4(u, y, h)?;
        let mid = self.rk4(u, y, 0.5 * h)?;
        let half = self.rk4(u + 0.5 * h, mid, 0.5 * h)?;
        let err = (0..2)
            .map(|i| (half[i] - full[i]).abs() / half[i].abs().max(1e-300))
            .fold(0.0, f64::max)
            / 15.0;
        let out = [half[0] + (half[0] - full[0]) / 15.0, half[1] + (half[1] - full[1]) / 15.0];
        Ok((out, err))
    }

    fn sample(&self, v: f64, y: [f64; 2]) -> Result<(f64, f64, f64)> {
        let t = self.zeno.temperature_at_volume(v);
        let k = self.kappa(y[1])?;
        let li1 = polylog_exp(self.gamma + 1.0, k)?;
        let li2 = polylog_exp(self.gamma + 2.0, k)?;
        let dphi = 1.0 / (v * t.powf(self.gamma + 1.0) * li2);
        let residual = (v * dphi / y[0]) * li2 / li1 - 1.0;
        Ok((k, dphi, residual))
    }
}

/// Integrates φ inward from φ(V_max) = V_max along the Zeno line, with
/// dφ/dV = 1/(V T^{γ+1} Li_{γ+2}(e^κ)) and κ fixed by φ T^{γ+1} Li_{γ+1}(e^κ) = 1,
/// down to V_cr where κ = 0.
pub fn solve_phi(gamma: f64, v_grid: &[f64], zeno: &ZenoLine) -> Result<FractalEos> {
    solve_phi_with(gamma, v_grid, zeno, &PhiSettings::default())
}

pub fn solve_phi_with(gamma: f64, v_grid: &[f64], zeno: &ZenoLine, settings: &PhiSettings) -> Result<FractalEos> {
    const OP: &str = "solve_phi";
    zeno.validate()?;
    if !(gamma > 0.0) {
        return Err(Error::domain(OP, format!("γ = {gamma} must be positive for a finite V_cr")));
    }
    check_grid(v_grid, 1.0 / zeno.rho_b)?;
    let zeta1 = riemann_zeta(gamma + 1.0)?;
    let sys = System {
        gamma,
        zeno: *zeno,
        zeta1,
        guess: Cell::new(None),
    };
    let v_max = *v_grid.last().unwrap();
    let t_max = zeno.temperature_at_volume(v_max);
    let l_max = 1.0 / (v_max * t_max.powf(gamma + 1.0));
    if l_max >= zeta1 {
        return Err(Error::domain(
            OP,
            format!("V_max = {v_max} is already condensed; extend the grid to larger V"),
        ));
    }
    let mut u = v_max.ln();
    let mut y = [v_max, l_max];
    let mut samples: Vec<(f64, [f64; 2])> = vec![(v_max, y)];
    let mut h = -1e-3;
    let mut steps = 0usize;
    let mut targets = v_grid[..v_grid.len() - 1].iter().rev().copied().peekable();
    let v_cr;
    let u_floor = (1.0 / zeno.rho_b).ln();
    loop {
        steps += 1;
        if steps > settings.max_steps {
            return Err(Error::Integration {
                op: OP,
                at: u.exp(),
                detail: format!("step budget {} exhausted", settings.max_steps),
            });
        }
        let target_u = targets.peek().map(|v| v.ln());
        let mut step = h;
        let mut hits_target = false;
        if let Some(tu) = target_u {
            if u + step <= tu {
                step = tu - u;
                hits_target = true;
            }
        }
        if u + step <= u_floor {
            step = 0.5 * (u_floor - u);
        }
        let (next, err) = sys.doubled(u, y, step)?;
        if err > settings.rel_tol {
            h = step * (0.9 * (settings.rel_tol / err).powf(0.2)).max(0.1);
            if h.abs() < 1e-14 {
                return Err(Error::Integration {
                    op: OP,
                    at: u.exp(),
                    detail: "step size underflow".into(),
                });
            }
            continue;
        }
        if next[1] >= zeta1 {
            // κ reaches 0 inside this step: shrink the step onto the crossing
            let (mut lo, mut hi) = (0.0, 1.0);
            let mut at = y;
            for _ in 0..80 {
                let th = 0.5 * (lo + hi);
                let (trial, _) = sys.doubled(u, y, th * step)?;
                if trial[1] >= zeta1 {
                    hi = th;
                } else {
                    lo = th;
                    at = trial;
                }
                if (zeta1 - trial[1]).abs() <= 1e-13 * zeta1 {
                    at = trial;
                    lo = th;
                    break;
                }
            }
            u += lo * step;
            v_cr = u.exp();
            samples.push((v_cr, [at[0], zeta1]));
            break;
        }
        u += step;
        y = next;
        if hits_target {
            let v = targets.next().unwrap();
            samples.push((v, y));
        }
        h = step * (0.9 * (settings.rel_tol / err.max(1e-300)).powf(0.2)).min(2.0);
    }
    let dropped: Vec<f64> = targets.collect();
    samples.reverse();
    let n = samples.len();
    let (mut vs, mut phi, mut dphi, mut kappa, mut residual) = (
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
    );
    for (v, y) in samples {
        sys.guess.set(None);
        let (k, d, r) = sys.sample(v, y)?;
        if r.abs() > settings.residual_tol {
            return Err(Error::Integration {
                op: OP,
                at: v,
                detail: format!("constraint residual {r:e}"),
            });
        }
        vs.push(v);
        phi.push(y[0]);
        dphi.push(d);
        kappa.push(k);
        residual.push(r);
    }
    let kmin = kappa.iter().copied().fold(f64::INFINITY, f64::min);
    let kmax = kappa.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(FractalEos {
        gamma,
        zeno: *zeno,
        v: vs,
        phi,
        dphi,
        kappa,
        residual,
        v_cr,
        dropped,
        kappa_range: (kmin, kmax),
        identity: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
    }

    #[test]
    fn solves_reference_case() {
        let grid = log_grid(1.5, 2000.0, 60);
        let eos = solve_phi(0.2, &grid, &ZenoLine::default()).unwrap();
        assert!((eos.phi.last().unwrap() / eos.v_max() - 1.0).abs() < 1e-12);
        assert!(eos.v_cr > 1.0 && eos.v_cr < eos.v[1]);
        assert_eq!(eos.kappa[0], 0.0);
        for w in eos.phi.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(eos.dphi.iter().all(|&d| d > 0.0));
        assert!(eos.residual.iter().all(|r| r.abs() < 1e-6));
        // κ = 0: Vφ′/φ = ζ(γ+1)/ζ(γ+2)
        let expect = riemann_zeta(1.2).unwrap() / riemann_zeta(2.2).unwrap();
        assert!((eos.geometric_factor_cr() / expect - 1.0).abs() < 1e-6);
        assert_eq!(eos.dropped.len() + eos.v.len() - 1, grid.len());
    }

    #[test]
    fn derivative_matches_table() {
        // dense table: central differences of the integrated φ against the stored φ′
        let grid = log_grid(3.0, 500.0, 400);
        let eos = solve_phi(0.2, &grid, &ZenoLine::default()).unwrap();
        for i in 2..eos.v.len() - 1 {
            let (a, b) = (eos.v[i - 1], eos.v[i + 1]);
            let fd = (eos.phi[i + 1] - eos.phi[i - 1]) / (b - a);
            let r = (fd / eos.dphi[i] - 1.0).abs();
            assert!(r < 2e-4, "V = {}: {r}", eos.v[i]);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let z = ZenoLine::default();
        assert!(solve_phi(0.2, &[0.5, 10.0], &z).is_err());
        assert!(solve_phi(0.0, &[2.0, 10.0], &z).is_err());
        assert!(solve_phi(0.2, &[10.0, 2.0], &z).is_err());
    }

    #[test]
    fn interpolation() {
        let grid = log_grid(1.5, 1000.0, 80);
        let eos = solve_phi(0.2, &grid, &ZenoLine::default()).unwrap();
        for i in 0..eos.v.len() {
            let (p, d) = eos.eval(eos.v[i]).unwrap();
            assert!((p / eos.phi[i] - 1.0).abs() < 1e-12);
            assert!((d / eos.dphi[i] - 1.0).abs() < 1e-9);
            assert!((eos.invert_phi(eos.phi[i]).unwrap() / eos.v[i] - 1.0).abs() < 1e-10);
        }
        assert!(eos.eval(eos.v_cr * 0.9).is_err());
        let id = FractalEos::identity(0.2, &[0.1, 100.0]).unwrap();
        assert_eq!(id.eval(3.7).unwrap(), (3.7, 1.0));
    }
}

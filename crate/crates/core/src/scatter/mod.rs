//! Effective two-body scattering energy E(r) = (−αr⁴ + r²U(r))/(B² − r²),
//! its stationary points, the Zeno-line analog and compressibility curves.

mod potential;

pub use potential::PotentialSpec;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::PhaseCurve;
use crate::error::{Error, Result};
use crate::roots::bisect;

pub const DEFAULT_B: f64 = 100.0;
/// Impact parameter quoted for the M-tame/M-wild transition. Not reproduced
/// by [`zeno_condition_root`]; kept as a landmark.
pub const LANDMARK_B: f64 = 2.271;
pub const LANDMARK_Z: f64 = 0.444;
pub const CRITICAL_T_RATIO: f64 = 0.39;
pub const QUOTED_T_RATIO: f64 = 2.79;

const SCAN_POINTS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatterProblem {
    pub potential: PotentialSpec,
    pub b: f64,
    pub alpha: f64,
}

impl ScatterProblem {
    pub fn new(potential: PotentialSpec, b: f64, alpha: f64) -> Result<Self> {
        potential.validate()?;
        if !(b > 1.0) || !b.is_finite() {
            return Err(Error::domain("scatter", format!("B = {b} must exceed 1")));
        }
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::domain("scatter", format!("α = {alpha} must be ≥ 0")));
        }
        Ok(ScatterProblem { potential, b, alpha })
    }
}

fn check_b(op: &'static str, b: f64) -> Result<()> {
    if !(b > 1.0) || !b.is_finite() {
        return Err(Error::domain(op, format!("B = {b} must exceed 1")));
    }
    Ok(())
}

pub fn effective_energy(problem: &ScatterProblem, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("effective_energy", format!("r = {r} must be positive")));
    }
    let d = problem.b * problem.b - r * r;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "effective_energy",
            at: r,
        });
    }
    let u = problem.potential.u(r);
    Ok((-problem.alpha * r.powi(4) + r * r * u) / d)
}

// numerator of E′ over (B² − r²)²
fn stationarity(pot: &PotentialSpec, b: f64, alpha: f64, r: f64) -> f64 {
    let (u, du, _) = pot.eval(r);
    let b2 = b * b;
    2.0 * b2 * r * u + 2.0 * alpha * r.powi(3) * (r * r - 2.0 * b2) + r * r * (b2 - r * r) * du
}

fn stationarity_slope(pot: &PotentialSpec, b: f64, alpha: f64, r: f64) -> f64 {
    let (u, du, d2u) = pot.eval(r);
    let b2 = b * b;
    2.0 * b2 * u
        + 2.0 * b2 * r * du
        + alpha * (10.0 * r.powi(4) - 12.0 * b2 * r * r)
        + (2.0 * r * b2 - 4.0 * r.powi(3)) * du
        + r * r * (b2 - r * r) * d2u
}

pub fn energy_derivative(problem: &ScatterProblem, r: f64) -> Result<f64> {
    let d = problem.b * problem.b - r * r;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "energy_derivative",
            at: r,
        });
    }
    Ok(stationarity(&problem.potential, problem.b, problem.alpha, r) / (d * d))
}

pub fn energy_second_derivative(problem: &ScatterProblem, r: f64) -> Result<f64> {
    let d = problem.b * problem.b - r * r;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "energy_second_derivative",
            at: r,
        });
    }
    let p = stationarity(&problem.potential, problem.b, problem.alpha, r);
    let dp = stationarity_slope(&problem.potential, problem.b, problem.alpha, r);
    Ok((dp * d + 4.0 * r * p) / (d * d * d))
}

/// α making r a stationary point of E.
pub fn alpha_from_first_derivative(potential: &PotentialSpec, b: f64, r: f64) -> Result<f64> {
    let (u, du, _) = potential.eval(r);
    let b2 = b * b;
    let den = 2.0 * r * r * (r * r - 2.0 * b2);
    if den == 0.0 {
        return Err(Error::Singular {
            op: "alpha_from_first_derivative",
            detail: format!("r² = 2B² at r = {r}"),
        });
    }
    Ok((-2.0 * b2 * u - b2 * r * du + r.powi(3) * du) / den)
}

/// α making r an inflection of E′ at a stationary point (E″ = 0 there).
pub fn alpha_from_second_derivative(potential: &PotentialSpec, b: f64, r: f64) -> Result<f64> {
    let (u, du, d2u) = potential.eval(r);
    let b2 = b * b;
    let den = 2.0 * r * r * (5.0 * r * r - 6.0 * b2);
    if den == 0.0 {
        return Err(Error::Singular {
            op: "alpha_from_second_derivative",
            detail: format!("5r² = 6B² at r = {r}"),
        });
    }
    Ok(-(2.0 * b2 * u + 4.0 * r * (b2 - r * r) * du + r * r * (b2 - r * r) * d2u) / den)
}

/// Residual −8B²U + (r³ + 2B²r)U′ + (2B²r² − r⁴)U″ and the size of its largest term.
pub fn zeno_residual(potential: &PotentialSpec, b: f64, r: f64) -> (f64, f64) {
    let (u, du, d2u) = potential.eval(r);
    let b2 = b * b;
    let t = [
        -8.0 * b2 * u,
        (r.powi(3) + 2.0 * b2 * r) * du,
        (2.0 * b2 * r * r - r.powi(4)) * d2u,
    ];
    (t[0] + t[1] + t[2], t.iter().fold(0.0f64, |m, x| m.max(x.abs())))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZenoRoot {
    pub b: f64,
    pub r: f64,
    pub alpha_first: f64,
    pub alpha_second: f64,
    pub energy: f64,
    /// |residual| over its dominant term.
    pub relative_residual: f64,
    /// Number of sign changes found in the bracket; the smallest root is returned.
    pub multiplicity: usize,
}

fn log_scan(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

pub fn default_bracket(potential: &PotentialSpec, b: f64) -> (f64, f64) {
    (potential.r_floor(), b * (1.0 - 1e-6))
}

pub fn zeno_condition_root(potential: &PotentialSpec, b: f64, bracket: (f64, f64)) -> Result<ZenoRoot> {
    check_b("zeno_condition_root", b)?;
    let (lo, hi) = bracket;
    if !(lo > 0.0 && lo < hi && hi < b) {
        return Err(Error::domain(
            "zeno_condition_root",
            format!("bracket ({lo}, {hi}) must lie inside (0, B = {b})"),
        ));
    }
    let f = |r: f64| zeno_residual(potential, b, r).0;
    let grid = log_scan(lo, hi, SCAN_POINTS);
    let vals: Vec<f64> = grid.iter().map(|&r| f(r)).collect();
    let changes: Vec<usize> = (1..grid.len())
        .filter(|&i| vals[i - 1] != 0.0 && vals[i - 1].signum() != vals[i].signum())
        .collect();
    let Some(&first) = changes.first() else {
        return Err(Error::Bracket {
            op: "zeno_condition_root",
            detail: format!("no sign change of the degeneracy residual on ({lo}, {hi}) for B = {b}"),
        });
    };
    let r = bisect("zeno_condition_root", |r| Ok(f(r)), grid[first - 1], grid[first], 0.0)?;
    let (res, scale) = zeno_residual(potential, b, r);
    let alpha_first = alpha_from_first_derivative(potential, b, r)?;
    let alpha_second = alpha_from_second_derivative(potential, b, r)?;
    let energy = effective_energy(
        &ScatterProblem {
            potential: *potential,
            b,
            alpha: alpha_first,
        },
        r,
    )?;
    Ok(ZenoRoot {
        b,
        r,
        alpha_first,
        alpha_second,
        energy,
        relative_residual: res.abs() / scale,
        multiplicity: changes.len(),
    })
}

pub fn zeno_root(potential: &PotentialSpec, b: f64) -> Result<ZenoRoot> {
    zeno_condition_root(potential, b, default_bracket(potential, b))
}

/// (α*, E*) at the degeneracy point for each B.
pub fn trace_zeno_analog(potential: &PotentialSpec, b_grid: &[f64]) -> Result<PhaseCurve> {
    potential.validate()?;
    if b_grid.is_empty() || b_grid.windows(2).any(|w| !(w[1] > w[0])) || b_grid[0] <= 1.0 {
        return Err(Error::domain("trace_zeno_analog", "B grid must be non-empty, increasing and above 1"));
    }
    let roots: Vec<Result<ZenoRoot>> = b_grid.par_iter().map(|&b| zeno_root(potential, b)).collect();
    let mut curve = PhaseCurve::new("zeno_analog", "B", &["r_star", "alpha", "E"]);
    curve.meta("potential", potential.family());
    for (&b, root) in b_grid.iter().zip(roots) {
        match root {
            Ok(z) => curve.push(b, vec![z.r, z.alpha_first, z.energy]),
            Err(e) => curve.fail(b, e.to_string()),
        }
    }
    Ok(curve)
}

/// The inner well (r_lo, E_min) and the outer barrier (r_hi, E_max) of E.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StationaryPair {
    pub r_lo: f64,
    pub r_hi: f64,
    pub e_min: f64,
    pub e_max: f64,
}

impl StationaryPair {
    /// 1 − E_max/E_min, the depth of the barrier relative to the well.
    pub fn z(&self) -> f64 {
        1.0 - self.e_max / self.e_min
    }

    pub fn z_min(&self) -> f64 {
        self.e_max / self.e_min
    }

    pub fn depth(&self) -> f64 {
        self.e_max - self.e_min
    }
}

pub fn stationary_pair(problem: &ScatterProblem) -> Result<StationaryPair> {
    let root = zeno_root(&problem.potential, problem.b)?;
    stationary_pair_at(problem, &root)
}

fn stationary_pair_at(problem: &ScatterProblem, root: &ZenoRoot) -> Result<StationaryPair> {
    let (pot, b, alpha) = (&problem.potential, problem.b, problem.alpha);
    if alpha >= root.alpha_first {
        return Err(Error::Degenerate {
            op: "stationary_pair",
            detail: format!(
                "α = {alpha} is at or above the degeneracy threshold α* = {} (r* = {}) for B = {b}",
                root.alpha_first, root.r
            ),
        });
    }
    let g = |r: f64| alpha_from_first_derivative(pot, b, r).map(|a| a - alpha);
    let lo_edge = pot.r_floor();
    let hi_edge = b * (1.0 - 1e-9);
    let degenerate = |side: &str| Error::Degenerate {
        op: "stationary_pair",
        detail: format!("no {side} stationary point for α = {alpha}, B = {b}"),
    };
    if g(lo_edge)? >= 0.0 {
        return Err(degenerate("inner"));
    }
    if g(hi_edge)? >= 0.0 {
        return Err(degenerate("outer"));
    }
    let r_lo = bisect("stationary_pair", g, lo_edge, root.r, 0.0)?;
    let r_hi = bisect("stationary_pair", g, root.r, hi_edge, 0.0)?;
    if r_lo == r_hi {
        return Err(degenerate("distinct"));
    }
    let e_min = effective_energy(problem, r_lo)?;
    let e_max = effective_energy(problem, r_hi)?;
    Ok(StationaryPair { r_lo, r_hi, e_min, e_max })
}

/// ρ_B = α*(B)/C₂, the density where the two stationary points merge.
pub fn zeno_intercept(potential: &PotentialSpec, b: f64, c2: f64) -> Result<f64> {
    Ok(zeno_root(potential, b)?.alpha_first / c2)
}

fn pair_curve(
    name: &str,
    x_label: &str,
    potential: &PotentialSpec,
    b: f64,
    xs: &[f64],
    to_alpha: impl Fn(f64) -> f64 + Sync,
) -> Result<PhaseCurve> {
    potential.validate()?;
    check_b("compressibility_curve", b)?;
    if xs.is_empty() {
        return Err(Error::domain("compressibility_curve", "empty density grid"));
    }
    let root = zeno_root(potential, b)?;
    let pairs: Vec<Result<StationaryPair>> = xs
        .par_iter()
        .map(|&x| {
            let problem = ScatterProblem::new(*potential, b, to_alpha(x))?;
            stationary_pair_at(&problem, &root)
        })
        .collect();
    let mut curve = PhaseCurve::new(name, x_label, &["Z", "Z_min", "r_lo", "r_hi", "E_min", "E_max"]);
    curve.meta("potential", potential.family());
    curve.meta("B", b);
    curve.meta("alpha_star", root.alpha_first);
    for (&x, p) in xs.iter().zip(pairs) {
        match p {
            Ok(p) => curve.push(x, vec![p.z(), p.z_min(), p.r_lo, p.r_hi, p.e_min, p.e_max]),
            Err(e) => curve.fail(x, e.to_string()),
        }
    }
    Ok(curve)
}

/// Z(ρ) with α = C₂ρ.
pub fn compressibility_curve(potential: &PotentialSpec, b: f64, rho_grid: &[f64], c2: f64) -> Result<PhaseCurve> {
    if !(c2 > 0.0) {
        return Err(Error::domain("compressibility_curve", format!("C₂ = {c2} must be positive")));
    }
    let mut c = pair_curve("compressibility", "rho", potential, b, rho_grid, |rho| c2 * rho)?;
    c.meta("C2", c2);
    Ok(c)
}

/// Z against x = ρ/ρ_B, where each B uses its own intercept ρ_B.
pub fn compressibility_curve_reduced(potential: &PotentialSpec, b: f64, x_grid: &[f64]) -> Result<PhaseCurve> {
    let a = zeno_root(potential, b)?.alpha_first;
    pair_curve("compressibility_reduced", "rho/rho_B", potential, b, x_grid, move |x| x * a)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalSummary {
    pub b: f64,
    pub z_cr: f64,
    pub rho_cr_over_rho_b: f64,
    pub t_cr_over_t_b: f64,
    /// α* at the Zeno-line intercept.
    pub alpha_star: f64,
    /// Reference values the temperature ratio is compared with.
    pub t_reference: [f64; 2],
    pub provenance: Vec<String>,
}

// Z and dZ/dx at x = ρ/ρ_B; dE_i/dα = −r_i⁴/(B² − r_i²) at each stationary point
fn z_and_slope(problem: &ScatterProblem, root: &ZenoRoot) -> Result<(f64, f64, StationaryPair)> {
    let p = stationary_pair_at(problem, root)?;
    let b2 = problem.b * problem.b;
    let d_min = -p.r_lo.powi(4) / (b2 - p.r_lo * p.r_lo);
    let d_max = -p.r_hi.powi(4) / (b2 - p.r_hi * p.r_hi);
    let dz_dalpha = -(d_max * p.e_min - p.e_max * d_min) / (p.e_min * p.e_min);
    Ok((p.z(), dz_dalpha * root.alpha_first, p))
}

pub fn critical_summary(potential: &PotentialSpec) -> Result<CriticalSummary> {
    critical_summary_at(potential, DEFAULT_B)
}

/// Critical point where the slope of Z(ρ/ρ_B) crosses −1, i.e. where the
/// derivative of Z + ρ/ρ_B along the curve vanishes. T/T_B is the well depth
/// E_max − E_min relative to its value at ρ = 0.
pub fn critical_summary_at(potential: &PotentialSpec, b: f64) -> Result<CriticalSummary> {
    potential.validate()?;
    check_b("critical_summary", b)?;
    let root = zeno_root(potential, b)?;
    let at = |x: f64| -> Result<(f64, f64, StationaryPair)> {
        let problem = ScatterProblem::new(*potential, b, x * root.alpha_first)?;
        z_and_slope(&problem, &root)
    };
    let n = 200;
    let mut prev: Option<(f64, f64)> = None;
    let mut bracket = None;
    for i in 0..n {
        let x = (i as f64 + 0.5) / n as f64;
        let Ok((_, s, _)) = at(x) else { continue };
        let v = s + 1.0;
        if let Some((px, pv)) = prev {
            if pv.signum() != v.signum() {
                bracket = Some((px, x));
                break;
            }
        }
        prev = Some((x, v));
    }
    let Some((lo, hi)) = bracket else {
        return Err(Error::Calibration {
            op: "critical_summary",
            detail: format!("dZ/d(ρ/ρ_B) = −1 not bracketed on (0, 1) for B = {b}"),
        });
    };
    let x_cr = bisect("critical_summary", |x| Ok(at(x)?.1 + 1.0), lo, hi, 1e-13)?;
    let (z_cr, _, pair_cr) = at(x_cr)?;
    let pair_0 = stationary_pair_at(&ScatterProblem::new(*potential, b, 0.0)?, &root)?;
    let t_ratio = pair_cr.depth() / pair_0.depth();
    let provenance = vec![
        format!("B = {b}; degeneracy root r* = {:.10}, α* = {:.10e} gives ρ_B = α*", root.r, root.alpha_first),
        "Z(x) = 1 − E_max/E_min from the stationary pair at α = x·α*".to_string(),
        "dZ/dα from the envelope relation dE/dα = −r⁴/(B² − r²) at each stationary radius".to_string(),
        format!("scan of 200 points for dZ/dx + 1 sign change, bracket ({lo:.4}, {hi:.4}), bisection to x_cr = {x_cr:.10}"),
        format!("Z_cr = Z(x_cr) = {z_cr:.10}"),
        format!(
            "T/T_B = (E_max − E_min)(x)/(E_max − E_min)(0): {:.6e}/{:.6e} = {t_ratio:.6}",
            pair_cr.depth(),
            pair_0.depth()
        ),
        format!(
            "temperature ratio compared with {CRITICAL_T_RATIO} and {QUOTED_T_RATIO} (1/{QUOTED_T_RATIO} = {:.4}); no gate",
            1.0 / QUOTED_T_RATIO
        ),
    ];
    Ok(CriticalSummary {
        b,
        z_cr,
        rho_cr_over_rho_b: x_cr,
        t_cr_over_t_b: t_ratio,
        alpha_star: root.alpha_first,
        t_reference: [CRITICAL_T_RATIO, QUOTED_T_RATIO],
        provenance,
    })
}

/// Hyperbola Z = p + q/x through the computed point where Z = 0.444 and the
/// critical point, sampled between them. Heuristic.
pub fn hyperbola_stitch(reduced: &PhaseCurve, summary: &CriticalSummary, samples: usize) -> Result<PhaseCurve> {
    let z = reduced
        .column("Z")
        .ok_or_else(|| Error::domain("hyperbola_stitch", "curve has no Z column"))?;
    let xs = reduced.xs();
    let i = (1..z.len())
        .find(|&i| (z[i - 1] - LANDMARK_Z).signum() != (z[i] - LANDMARK_Z).signum())
        .ok_or_else(|| Error::domain("hyperbola_stitch", format!("curve never crosses Z = {LANDMARK_Z}")))?;
    let t = (LANDMARK_Z - z[i - 1]) / (z[i] - z[i - 1]);
    let xa = xs[i - 1] + t * (xs[i] - xs[i - 1]);
    let (xb, zb) = (summary.rho_cr_over_rho_b, summary.z_cr);
    if (xa - xb).abs() < 1e-12 {
        return Err(Error::Degenerate {
            op: "hyperbola_stitch",
            detail: "landmarks coincide".into(),
        });
    }
    let q = (LANDMARK_Z - zb) / (1.0 / xa - 1.0 / xb);
    let p = zb - q / xb;
    let mut curve = PhaseCurve::new("hyperbola_stitch", "rho/rho_B", &["Z"]);
    curve.meta("heuristic", "true");
    curve.meta("p", p);
    curve.meta("q", q);
    let n = samples.max(2);
    for k in 0..n {
        let x = xa + (xb - xa) * k as f64 / (n - 1) as f64;
        curve.push(x, vec![p + q / x]);
    }
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lj() -> PotentialSpec {
        PotentialSpec::reduced_lj()
    }

    fn prob(b: f64, alpha: f64) -> ScatterProblem {
        ScatterProblem::new(lj(), b, alpha).unwrap()
    }

    #[test]
    fn energy_examples() {
        let p = prob(10.0, 0.3);
        assert!((effective_energy(&p, 1.0).unwrap() + 0.3 / 99.0).abs() < 1e-16);
        let rm = 2f64.powf(1.0 / 6.0);
        let e = effective_energy(&prob(100.0, 0.0), rm).unwrap();
        assert!((e - rm * rm * -1.0 / (1e4 - rm * rm)).abs() < 1e-18);
        // direct evaluation at r = 3
        let u3 = 4.0 * (3f64.powi(-12) - 3f64.powi(-6));
        let expect = (-1e-6 * 81.0 + 9.0 * u3) / (1e4 - 9.0);
        assert!((effective_energy(&prob(100.0, 1e-6), 3.0).unwrap() - expect).abs() < 1e-18);
        assert!(matches!(effective_energy(&prob(2.0, 0.1), 2.0), Err(Error::Pole { .. })));
    }

    #[test]
    fn derivative_matches_difference() {
        let p = prob(10.0, 0.05);
        for r in [0.9, 1.2, 2.0, 4.5, 8.0] {
            let h = 1e-5 * r;
            let fd = (effective_energy(&p, r + h).unwrap() - effective_energy(&p, r - h).unwrap()) / (2.0 * h);
            let an = energy_derivative(&p, r).unwrap();
            assert!((fd - an).abs() < 1e-6 * an.abs().max(1e-8), "r = {r}: {fd} vs {an}");
            let fd2 = (energy_derivative(&p, r + h).unwrap() - energy_derivative(&p, r - h).unwrap()) / (2.0 * h);
            let an2 = energy_second_derivative(&p, r).unwrap();
            assert!((fd2 - an2).abs() < 1e-6 * an2.abs().max(1e-8));
        }
    }

    #[test]
    fn alpha_round_trip() {
        for (b, r) in [(100.0, 1.5), (10.0, 2.0), (5.0, 1.1)] {
            let a = alpha_from_first_derivative(&lj(), b, r).unwrap();
            let p = ScatterProblem {
                potential: lj(),
                b,
                alpha: a,
            };
            let d1 = energy_derivative(&p, r).unwrap();
            let d2 = energy_second_derivative(&p, r).unwrap();
            assert!(d1.abs() < 1e-9 * d2.abs() * r + 1e-300, "B = {b}");
        }
        // B = 10, r = 2 by hand
        let (u, du) = (4.0 * (2f64.powi(-12) - 2f64.powi(-6)), 4.0 * (-12.0 * 2f64.powi(-13) + 6.0 * 2f64.powi(-7)));
        let expect = (-200.0 * u - 200.0 * du + 8.0 * du) / (8.0 * (4.0 - 200.0));
        assert!((alpha_from_first_derivative(&lj(), 10.0, 2.0).unwrap() - expect).abs() < 1e-16);
    }

    #[test]
    fn zeno_roots() {
        for (b, r, a) in [(5.0, 1.28108, 0.216930), (10.0, 1.27941, 0.234049), (100.0, 1.278885, 0.2395225)] {
            let z = zeno_root(&lj(), b).unwrap();
            assert!((z.r - r).abs() < 2e-5, "B = {b}: r* = {}", z.r);
            assert!((z.alpha_first - a).abs() < 2e-6, "B = {b}: α* = {}", z.alpha_first);
            assert!(((z.alpha_first - z.alpha_second) / z.alpha_first).abs() < 1e-8);
            assert!(z.relative_residual < 1e-10);
            assert_eq!(z.multiplicity, 1);
            let p = ScatterProblem {
                potential: lj(),
                b,
                alpha: z.alpha_first,
            };
            let h = 1e-3;
            let e0 = effective_energy(&p, z.r).unwrap();
            let d3 = (effective_energy(&p, z.r + h).unwrap() - e0).abs();
            let d3b = (effective_energy(&p, z.r + 2.0 * h).unwrap() - e0).abs();
            // cubic: doubling h multiplies the change by about 8
            assert!((d3b / d3 - 8.0).abs() < 0.1);
        }
        assert!(matches!(
            zeno_condition_root(&lj(), 100.0, (3.0, 50.0)),
            Err(Error::Bracket { .. })
        ));
    }

    #[test]
    fn pairs() {
        let p = prob(100.0, 1e-7);
        let s = stationary_pair(&p).unwrap();
        assert!(s.r_lo < 1.3 && s.r_hi > 1.3 && s.e_min <= s.e_max);
        for r in [s.r_lo, s.r_hi] {
            assert!(energy_derivative(&p, r).unwrap().abs() < 1e-9);
        }
        assert!((s.z() + s.z_min() - 1.0).abs() < 1e-15);
        let a = zeno_root(&lj(), 100.0).unwrap().alpha_first;
        assert!(matches!(stationary_pair(&prob(100.0, a)), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn trace() {
        let c = trace_zeno_analog(&lj(), &[5.0, 10.0, 20.0, 50.0, 100.0]).unwrap();
        assert_eq!(c.len(), 5);
        let alpha = c.column("alpha").unwrap();
        assert!(alpha.windows(2).all(|w| w[1] > w[0]));
        let a = trace_zeno_analog(&lj(), &[5.0, 10.0]).unwrap();
        let b = trace_zeno_analog(&lj(), &[5.0, 10.0]).unwrap();
        assert_eq!(a, b);
        assert!(trace_zeno_analog(&lj(), &[10.0, 5.0]).is_err());
    }

    #[test]
    fn critical() {
        let s = critical_summary(&lj()).unwrap();
        assert!((s.rho_cr_over_rho_b - 0.2735).abs() < 5e-4, "{s:?}");
        assert!((s.z_cr - 0.2998).abs() < 5e-4);
        assert!(s.t_cr_over_t_b > 0.0 && s.t_cr_over_t_b < 1.0);
    }

    #[test]
    fn other_families_have_roots() {
        let fams = [
            PotentialSpec::GeneralizedLj {
                epsilon: 1.0,
                sigma: 1.0,
                n: 14.0,
                m: 7.0,
            },
            PotentialSpec::Morse {
                depth: 1.0,
                a: 3.0,
                r_e: 1.12,
            },
        ];
        for f in fams {
            let z = zeno_root(&f, 20.0).unwrap();
            assert!(((z.alpha_first - z.alpha_second) / z.alpha_first).abs() < 1e-8, "{f:?}");
        }
    }
}

//! Adaptive double-exponential quadrature for integrals over (a, ∞).
//!
//! The finite part [a, A] and the tail (A, ∞) are both split into panels,
//! each integrated with a nested tanh-sinh ladder. The tail is mapped to
//! (0, 1] by ξ = a + L/u with L = A − a, which copes with algebraic as well as
//! exponential decay. Endpoint distances are computed directly so that
//! integrable singularities at the left end are sampled without cancellation.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSettings {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 60,
        }
    }
}

impl QuadratureSettings {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let s = QuadratureSettings {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::config("abs_tol", "must be a positive number"));
        }
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::config("rel_tol", "must be a positive number"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::config("max_subdivisions", "must be at least 1"));
        }
        Ok(())
    }

    /// Tighter copy used when an integral feeds an identity such as the
    /// polylogarithm, where the caller needs more digits than the default.
    pub(crate) fn tightened(&self, factor: f64) -> Self {
        QuadratureSettings {
            abs_tol: (self.abs_tol * factor).max(1e-300),
            rel_tol: (self.rel_tol * factor).max(4.0 * f64::EPSILON),
            max_subdivisions: self.max_subdivisions.max(60),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoseIntegralResult {
    pub value: f64,
    /// Error bound: level-difference estimate plus truncation and rounding terms.
    pub est_error: f64,
    pub evaluations: u64,
}

impl BoseIntegralResult {
    pub(crate) fn scaled(self, factor: f64) -> Self {
        BoseIntegralResult {
            value: self.value * factor,
            est_error: self.est_error * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

const T_MAX: f64 = 6.0;
const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 7;

#[derive(Debug, Clone, Copy)]
enum Space {
    Finite,
    Tail,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    space: Space,
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

struct Ladder {
    value: f64,
    err: f64,
    evals: u64,
}

/// Node of the tanh-sinh rule at parameter t on [lo, hi]: (x, weight).
/// Returns None when the node collapses onto an endpoint.
#[inline]
fn node(lo: f64, hi: f64, t: f64) -> Option<(f64, f64)> {
    let len = hi - lo;
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u.abs()).exp();
    // distance from the nearer endpoint, len / (1 + e^{2|u|})
    let d = len * e / (1.0 + e);
    if d <= 0.0 {
        return None;
    }
    let x = if t < 0.0 { lo + d } else { hi - d };
    if x <= lo || x >= hi {
        return None;
    }
    let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    let w = 0.5 * len * FRAC_PI_2 * t.cosh() * sech2;
    Some((x, w))
}

fn ladder<G: Fn(f64) -> f64>(g: &G, lo: f64, hi: f64, settings: &QuadratureSettings) -> Result<Ladder> {
    let mut evals = 0u64;
    let mut sum = 0.0;
    let mut l1 = 0.0;
    let mut edge = 0.0f64;
    let mut eval = |t: f64, sum: &mut f64, l1: &mut f64| -> Result<()> {
        if let Some((x, w)) = node(lo, hi, t) {
            let fx = g(x);
            evals += 1;
            if !fx.is_finite() {
                return Err(Error::domain(
                    "improper_quad",
                    format!("integrand is not finite at x = {x:e}"),
                ));
            }
            *sum += w * fx;
            *l1 += (w * fx).abs();
            if t.abs() >= T_MAX - 1e-12 {
                edge = edge.max((w * fx).abs());
            }
        }
        Ok(())
    };

    let n0 = T_MAX as i64;
    for k in -n0..=n0 {
        eval(k as f64, &mut sum, &mut l1)?;
    }
    let mut prev = sum;
    let mut h = 1.0;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let count = (T_MAX / h) as i64;
        let mut k = 1 - count;
        while k <= count {
            eval(k as f64 * h, &mut sum, &mut l1)?;
            k += 2;
        }
        let cur = sum * h;
        err = (cur - prev * 2.0 * h).abs();
        prev = sum;
        if level >= MIN_LEVEL {
            let tol = settings.abs_tol.max(settings.rel_tol * cur.abs());
            if err <= 0.1 * tol {
                break;
            }
        }
    }
    let value = sum * h;
    let rounding = 8.0 * f64::EPSILON * l1 * h;
    Ok(Ladder {
        value,
        err: err + edge + rounding,
        evals,
    })
}

fn panel_integrand<'a, F: Fn(f64) -> f64>(f: &'a F, space: Space, a: f64, len: f64) -> impl Fn(f64) -> f64 + 'a {
    move |x: f64| match space {
        Space::Finite => f(x),
        Space::Tail => {
            // ξ = a + len/u, dξ = len/u² du
            let s = len / x;
            let xi = a + s;
            if !xi.is_finite() {
                return 0.0;
            }
            let fx = f(xi);
            if fx == 0.0 {
                return 0.0;
            }
            let v = (fx * s) * (s / len);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        }
    }
}

fn integrate_panel<F: Fn(f64) -> f64>(
    f: &F,
    space: Space,
    a: f64,
    len: f64,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
    evals: &mut u64,
) -> Result<Panel> {
    let g = panel_integrand(f, space, a, len);
    let r = ladder(&g, lo, hi, settings)?;
    *evals += r.evals;
    Ok(Panel {
        space,
        lo,
        hi,
        value: r.value,
        err: r.err,
    })
}

fn drive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    len: f64,
    mut panels: Vec<Panel>,
    mut evals: u64,
    settings: &QuadratureSettings,
) -> Result<BoseIntegralResult> {
    let mut splits = 0usize;
    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let tol = settings.abs_tol.max(settings.rel_tol * value.abs());
        if err <= tol {
            return Ok(BoseIntegralResult {
                value,
                est_error: err,
                evaluations: evals,
            });
        }
        if splits >= settings.max_subdivisions {
            return Err(Error::Accuracy {
                op: "improper_quad",
                best: value,
                est_error: err,
            });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0usize, -1.0f64), |acc, (i, p)| if p.err > acc.1 { (i, p.err) } else { acc });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        if !(mid > p.lo && mid < p.hi) {
            return Err(Error::Accuracy {
                op: "improper_quad",
                best: value,
                est_error: err,
            });
        }
        panels.push(integrate_panel(f, p.space, a, len, p.lo, mid, settings, &mut evals)?);
        panels.push(integrate_panel(f, p.space, a, len, mid, p.hi, settings, &mut evals)?);
        splits += 1;
    }
}

/// ∫_a^∞ f(ξ) dξ.
pub fn improper_quad<F: Fn(f64) -> f64>(f: F, a: f64, settings: &QuadratureSettings) -> Result<BoseIntegralResult> {
    settings.validate()?;
    if !a.is_finite() {
        return Err(Error::domain("improper_quad", "lower limit must be finite"));
    }
    let mut len = 1.0;
    loop {
        let v = f(a + len);
        if !v.is_finite() {
            return Err(Error::domain(
                "improper_quad",
                format!("integrand is not finite at x = {:e}", a + len),
            ));
        }
        if v.abs() <= settings.abs_tol || len >= 64.0 {
            break;
        }
        len *= 2.0;
    }
    let mut evals = 0u64;
    let panels = vec![
        integrate_panel(&f, Space::Finite, a, len, a, a + len, settings, &mut evals)?,
        integrate_panel(&f, Space::Tail, a, len, 0.0, 1.0, settings, &mut evals)?,
    ];
    drive(&f, a, len, panels, evals, settings)
}

/// ∫_lo^hi f(x) dx on a finite interval with the same adaptive engine.
pub fn finite_quad<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, settings: &QuadratureSettings) -> Result<BoseIntegralResult> {
    settings.validate()?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::domain("finite_quad", "limits must be finite"));
    }
    if hi == lo {
        return Ok(BoseIntegralResult {
            value: 0.0,
            est_error: 0.0,
            evaluations: 0,
        });
    }
    if hi < lo {
        return finite_quad(f, hi, lo, settings).map(|r| r.scaled(-1.0));
    }
    let mut evals = 0u64;
    let panels = vec![integrate_panel(&f, Space::Finite, lo, 0.0, lo, hi, settings, &mut evals)?];
    drive(&f, lo, 0.0, panels, evals, settings)
}

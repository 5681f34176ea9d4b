//! Exact enumeration of occupation-number states under particle and energy
//! constraints, Gibbs concentration bands and the Boltzmann limit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::fractal_weight;
use crate::roots::bisect;
use crate::specfun::{bose_integral, gamma_fn, QuadratureSettings};

pub const STATE_GUARD: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSpec {
    /// Levels λ₁ ≤ … ≤ λ_s, repeated according to their degeneracy.
    levels: Vec<f64>,
    /// Multiplicity of each distinct input level, when one was applied.
    degeneracy: Option<Vec<u64>>,
}

impl SpectrumSpec {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::config("spectrum.levels", "at least one level is required"));
        }
        if levels.iter().any(|l| !(l.is_finite() && *l >= 0.0)) {
            return Err(Error::config("spectrum.levels", "levels must be finite and non-negative"));
        }
        if levels.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::config("spectrum.levels", "levels must be sorted ascending"));
        }
        Ok(SpectrumSpec { levels, degeneracy: None })
    }

    /// Level i (counted from 1) repeated round(w_d(i)) times, at least once,
    /// with w_d the fractal weight.
    pub fn with_fractal_degeneracy(levels: Vec<f64>, d: f64) -> Result<Self> {
        let base = SpectrumSpec::new(levels)?;
        let mut mult = Vec::with_capacity(base.levels.len());
        let mut expanded = Vec::new();
        for (i, &l) in base.levels.iter().enumerate() {
            let g = fractal_weight(d, i as u64 + 1)?.round().max(1.0) as u64;
            mult.push(g);
            expanded.extend(std::iter::repeat(l).take(g as usize));
        }
        Ok(SpectrumSpec {
            levels: expanded,
            degeneracy: Some(mult),
        })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn degeneracy(&self) -> Option<&[u64]> {
        self.degeneracy.as_deref()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OccupationCensus {
    pub n: u64,
    pub e_max: f64,
    pub states: u64,
    /// Σ over states of N_i, per level.
    pub level_totals: Vec<u64>,
    /// Every state carried Σ N_i = N.
    pub conserved: bool,
}

impl OccupationCensus {
    pub fn mean_occupation(&self) -> Vec<f64> {
        self.level_totals.iter().map(|&t| t as f64 / self.states as f64).collect()
    }
}

// Recursive visit in lexicographic order of (N_s, …, N_1); `visit` sees each state.
fn walk<F: FnMut(&[u64]) -> Result<()>>(
    levels: &[f64],
    n: u64,
    e_max: f64,
    guard: u64,
    visit: &mut F,
) -> Result<u64> {
    let s = levels.len();
    let mut occ = vec![0u64; s];
    let mut count = 0u64;
    let slack = 1e-12 * e_max.abs().max(1.0);
    // fill level `i` downward, with `left` particles and `budget` energy remaining
    fn rec<F: FnMut(&[u64]) -> Result<()>>(
        i: usize,
        left: u64,
        budget: f64,
        levels: &[f64],
        occ: &mut [u64],
        count: &mut u64,
        guard: u64,
        slack: f64,
        visit: &mut F,
    ) -> Result<()> {
        if i == 0 {
            if levels[0] * left as f64 > budget + slack {
                return Ok(());
            }
            occ[0] = left;
            *count += 1;
            if *count > guard {
                return Err(Error::Resource {
                    op: "enumerate_states",
                    detail: format!("more than {guard} states; use sampling for this size"),
                });
            }
            visit(occ)?;
            occ[0] = 0;
            return Ok(());
        }
        // the remaining particles sit at least at λ_0
        for m in 0..=left {
            let spent = levels[i] * m as f64 + levels[0] * (left - m) as f64;
            if spent > budget + slack {
                break;
            }
            occ[i] = m;
            rec(i - 1, left - m, budget - levels[i] * m as f64, levels, occ, count, guard, slack, visit)?;
        }
        occ[i] = 0;
        Ok(())
    }
    rec(s - 1, n, e_max, levels, &mut occ, &mut count, guard, slack, visit)?;
    Ok(count)
}

/// All N_i ≥ 0 with Σ N_i = N and Σ λ_i N_i ≤ E_max, each counted once.
pub fn enumerate_states(spectrum: &SpectrumSpec, n: u64, e_max: f64) -> Result<OccupationCensus> {
    enumerate_states_with(spectrum, n, e_max, STATE_GUARD)
}

pub fn enumerate_states_with(spectrum: &SpectrumSpec, n: u64, e_max: f64, guard: u64) -> Result<OccupationCensus> {
    if !e_max.is_finite() {
        return Err(Error::domain("enumerate_states", "E_max must be finite"));
    }
    let levels = spectrum.levels();
    let mut totals = vec![0u64; levels.len()];
    let mut conserved = true;
    let states = walk(levels, n, e_max, guard, &mut |occ| {
        if occ.iter().sum::<u64>() != n {
            conserved = false;
        }
        for (t, &o) in totals.iter_mut().zip(occ) {
            *t += o;
        }
        Ok(())
    })?;
    Ok(OccupationCensus {
        n,
        e_max,
        states,
        level_totals: totals,
        conserved,
    })
}

/// Calls `visit` on every admissible state, in enumeration order.
pub fn for_each_state<F: FnMut(&[u64])>(spectrum: &SpectrumSpec, n: u64, e_max: f64, mut visit: F) -> Result<u64> {
    walk(spectrum.levels(), n, e_max, STATE_GUARD, &mut |occ| {
        visit(occ);
        Ok(())
    })
}

// Σλe^{−bλ}/Σe^{−bλ}, shifted by λ₁ for stability
fn mean_energy(levels: &[f64], b: f64) -> f64 {
    let l0 = levels[0];
    let (mut num, mut den) = (0.0, 0.0);
    for &l in levels {
        let w = (-b * (l - l0)).exp();
        num += l * w;
        den += w;
    }
    num / den
}

/// b_E solving Σλe^{−bλ}/Σe^{−bλ} = E.
pub fn gibbs_parameter(spectrum: &SpectrumSpec, e: f64) -> Result<f64> {
    const OP: &str = "gibbs_parameter";
    let levels = spectrum.levels();
    let (lo_l, hi_l) = (levels[0], *levels.last().unwrap());
    if !(e > lo_l && e < hi_l) {
        return Err(Error::domain(OP, format!("E = {e} must lie strictly between λ₁ = {lo_l} and λ_s = {hi_l}")));
    }
    let f = |b: f64| Ok(mean_energy(levels, b) - e);
    let mut span = 1.0;
    while f(span)? > 0.0 || f(-span)? < 0.0 {
        span *= 2.0;
        if span > 1e12 {
            return Err(Error::Solver {
                op: OP,
                detail: "no bracket for b_E".into(),
            });
        }
    }
    if f(0.0)? == 0.0 {
        return Ok(0.0);
    }
    let b = bisect(OP, f, -span, span, 0.0)?;
    Ok(b)
}

/// Slow-growth factor ψ(x) = ln ln max(x, e^e).
pub fn default_psi(x: f64) -> f64 {
    x.max(std::f64::consts::E.exp()).ln().ln()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandStat {
    /// Inclusive level range, 0-based.
    pub first: usize,
    pub last: usize,
    pub empirical_mean: f64,
    pub predicted: f64,
    /// Fraction of states whose band total lies outside prediction ± width.
    pub outside_fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationRow {
    pub n: u64,
    pub states: u64,
    pub b: f64,
    pub l0: f64,
    /// B √(L₀ ln L₀) ψ(L₀) with B = N/L₀.
    pub width: f64,
    /// Fraction of states with at least one band outside its window.
    pub outside_fraction: f64,
    pub conserved: bool,
    pub bands: Vec<BandStat>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationReport {
    pub e: f64,
    pub rows: Vec<ConcentrationRow>,
    /// The headline fraction never increases along the N list.
    pub non_increasing: bool,
    /// Discrete analog of the continuum statement, not a verification of it.
    pub label: String,
}

/// Enumerates Σ N_i = N, Σ λ_i N_i ≤ N·E for each N and compares every
/// contiguous level band with the Gibbs prediction N Σ_band e^{−bλ}/L₀.
pub fn concentration_report<P: Fn(f64) -> f64>(
    spectrum: &SpectrumSpec,
    n_list: &[u64],
    e: f64,
    psi: P,
) -> Result<ConcentrationReport> {
    const OP: &str = "concentration_report";
    let b = gibbs_parameter(spectrum, e)?;
    let levels = spectrum.levels();
    let s = levels.len();
    let weights: Vec<f64> = levels.iter().map(|&l| (-b * l).exp()).collect();
    let l0: f64 = weights.iter().sum();
    if !(l0 > 1.0) {
        return Err(Error::domain(OP, format!("L₀ = {l0} must exceed 1 for the band width")));
    }
    let bands: Vec<(usize, usize)> = (0..s).flat_map(|i| (i..s).map(move |j| (i, j))).collect();
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let big_b = n as f64 / l0;
        let width = big_b * (l0 * l0.ln()).sqrt() * psi(l0);
        let predicted: Vec<f64> = bands
            .iter()
            .map(|&(i, j)| big_b * weights[i..=j].iter().sum::<f64>())
            .collect();
        let mut sums = vec![0u64; bands.len()];
        let mut outside = vec![0u64; bands.len()];
        let mut any_outside = 0u64;
        let mut conserved = true;
        let mut prefix = vec![0u64; s + 1];
        let states = walk(levels, n, n as f64 * e, STATE_GUARD, &mut |occ| {
            if occ.iter().sum::<u64>() != n {
                conserved = false;
            }
            for i in 0..s {
                prefix[i + 1] = prefix[i] + occ[i];
            }
            let mut hit = false;
            for (q, &(i, j)) in bands.iter().enumerate() {
                let tot = prefix[j + 1] - prefix[i];
                sums[q] += tot;
                if (tot as f64 - predicted[q]).abs() > width {
                    outside[q] += 1;
                    hit = true;
                }
            }
            if hit {
                any_outside += 1;
            }
            Ok(())
        })?;
        if states == 0 {
            return Err(Error::domain(OP, format!("no admissible state for N = {n}")));
        }
        let band_stats = bands
            .iter()
            .enumerate()
            .map(|(q, &(i, j))| BandStat {
                first: i,
                last: j,
                empirical_mean: sums[q] as f64 / states as f64,
                predicted: predicted[q],
                outside_fraction: outside[q] as f64 / states as f64,
            })
            .collect();
        rows.push(ConcentrationRow {
            n,
            states,
            b,
            l0,
            width,
            outside_fraction: any_outside as f64 / states as f64,
            conserved,
            bands: band_stats,
        });
    }
    let non_increasing = rows.windows(2).all(|w| w[1].outside_fraction <= w[0].outside_fraction);
    Ok(ConcentrationReport {
        e,
        rows,
        non_increasing,
        label: "discrete spectrum analog".into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoltzmannRow {
    pub kappa: f64,
    /// ∫ξ^γ/(e^{ξ−κ}−1) dξ / (Γ(γ+1) e^κ).
    pub ratio: f64,
    pub deficit: f64,
    /// Leading series term e^κ/2^{γ+1}.
    pub predicted_deficit: f64,
}

pub fn boltzmann_limit_check(gamma: f64, kappa_list: &[f64]) -> Result<Vec<BoltzmannRow>> {
    let settings = QuadratureSettings::default();
    let g = gamma_fn(gamma + 1.0)?;
    kappa_list
        .iter()
        .map(|&k| {
            let v = bose_integral(gamma, k, &settings)?.value;
            let ratio = v / (g * k.exp());
            Ok(BoltzmannRow {
                kappa: k,
                ratio,
                deficit: ratio - 1.0,
                predicted_deficit: k.exp() / 2f64.powf(gamma + 1.0),
            })
        })
        .collect()
}

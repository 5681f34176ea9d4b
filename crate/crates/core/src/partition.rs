//! Restricted partitions p_k(n), condensate thresholds and the finite-N
//! global distribution.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{self, finite_n_integral_real, improper_quad, QuadratureSettings};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableLimits {
    pub n_cap: usize,
    pub memory_bytes: u64,
}

impl Default for TableLimits {
    fn default() -> Self {
        TableLimits {
            n_cap: 20_000,
            memory_bytes: 2 << 30,
        }
    }
}

/// Exact counts p_k(n). Rows may be dense (every n up to `n_max`) or sparse
/// (only the rows requested from [`partition_rows`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    pub n_max: usize,
    pub k_max: usize,
    rows: BTreeMap<usize, Vec<BigUint>>,
}

impl PartitionTable {
    pub fn has_row(&self, n: usize) -> bool {
        self.rows.contains_key(&n)
    }

    /// Row n as p_0(n), p_1(n), ..., p_{min(n, k_max)}(n).
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(&n).map(|r| r.as_slice())
    }

    pub fn covers(&self, n: usize, k: usize) -> bool {
        self.has_row(n) && (k <= self.k_max || k > n)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<BigUint> {
        let row = self.rows.get(&n)?;
        if k > n {
            return Some(BigUint::zero());
        }
        row.get(k).cloned()
    }

    /// Σ_k p_k(n), available when the row is complete.
    pub fn total(&self, n: usize) -> Option<BigUint> {
        if self.k_max < n {
            return None;
        }
        self.rows.get(&n).map(|r| r.iter().sum())
    }

    pub fn stored_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}

fn estimate_bytes(n_max: usize, k_max: usize) -> u64 {
    // partition counts need about π√(2n/3)/ln 2 bits
    let mut total = 0u64;
    for n in 0..=n_max {
        let bits = PI * (2.0 * n as f64 / 3.0).sqrt() / std::f64::consts::LN_2;
        let cell = 32 + (bits / 8.0) as u64;
        total += (n.min(k_max) as u64 + 1) * cell;
    }
    total
}

fn check_caps(op: &'static str, n_max: usize, k_max: usize, limits: &TableLimits) -> Result<()> {
    if k_max < 1 || k_max > n_max.max(1) {
        return Err(Error::domain(op, format!("need 1 ≤ k_max ≤ n_max, got k_max = {k_max}, n_max = {n_max}")));
    }
    if n_max > limits.n_cap {
        return Err(Error::Resource {
            op,
            detail: format!("n_max = {n_max} exceeds the cap {}", limits.n_cap),
        });
    }
    Ok(())
}

pub fn build_partition_table(n_max: usize, k_max: usize) -> Result<PartitionTable> {
    build_partition_table_with(n_max, k_max, &TableLimits::default())
}

/// Dense table from p_k(n) = p_k(n−k) + p_{k−1}(n−1).
pub fn build_partition_table_with(n_max: usize, k_max: usize, limits: &TableLimits) -> Result<PartitionTable> {
    check_caps("build_partition_table", n_max, k_max, limits)?;
    let bytes = estimate_bytes(n_max, k_max);
    if bytes > limits.memory_bytes {
        return Err(Error::Resource {
            op: "build_partition_table",
            detail: format!("dense table needs about {bytes} bytes; use sparse rows"),
        });
    }
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigUint::from(1u32)]);
    for n in 1..=n_max {
        let top = n.min(k_max);
        let mut row = Vec::with_capacity(top + 1);
        row.push(BigUint::zero());
        for k in 1..=top {
            let mut v = rows[n - 1].get(k - 1).cloned().unwrap_or_default();
            if let Some(x) = rows[n - k].get(k) {
                v += x;
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(PartitionTable {
        n_max,
        k_max,
        rows: rows.into_iter().enumerate().collect(),
    })
}

/// Selected rows only, by counting partitions with bounded largest part:
/// p_k(n) equals the number of partitions of n − k into parts ≤ k.
pub fn partition_rows(ns: &[usize], k_max: usize) -> Result<PartitionTable> {
    partition_rows_with(ns, k_max, &TableLimits::default())
}

pub fn partition_rows_with(ns: &[usize], k_max: usize, limits: &TableLimits) -> Result<PartitionTable> {
    let n_top = ns.iter().copied().max().unwrap_or(0);
    if ns.is_empty() {
        return Err(Error::domain("partition_rows", "no rows requested"));
    }
    check_caps("partition_rows", n_top, k_max.min(n_top.max(1)), limits)?;
    let k_top = k_max.min(n_top);
    let mut rows: BTreeMap<usize, Vec<BigUint>> = ns
        .iter()
        .map(|&n| {
            let mut r = vec![BigUint::zero(); n.min(k_top) + 1];
            if n == 0 {
                r[0] = BigUint::from(1u32);
            }
            (n, r)
        })
        .collect();
    let mut q = vec![BigUint::zero(); n_top + 1];
    q[0] = BigUint::from(1u32);
    for k in 1..=k_top {
        // only indices ≤ n_top − k are read later
        let reach = n_top - k;
        for m in k..=reach {
            let (lo, hi) = q.split_at_mut(m);
            hi[0] += &lo[m - k];
        }
        for (&n, row) in rows.iter_mut() {
            if k <= n && k < row.len() {
                row[k] = q[n - k].clone();
            }
        }
    }
    Ok(PartitionTable {
        n_max: n_top,
        k_max: k_top.max(1),
        rows,
    })
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map(|v| (v as f64).log2()).unwrap_or(f64::NEG_INFINITY);
    }
    let top = (x >> (bits - 64)).to_u64().unwrap_or(u64::MAX);
    (top as f64).log2() + (bits - 64) as f64
}

/// log₂ p_k(n).
pub fn hartley_entropy(n: usize, k: usize, table: &PartitionTable) -> Result<f64> {
    let c = table
        .get(n, k)
        .ok_or_else(|| Error::domain("hartley_entropy", format!("table does not cover (n = {n}, k = {k})")))?;
    if c.is_zero() {
        return Err(Error::domain("hartley_entropy", format!("p_{k}({n}) = 0")));
    }
    Ok(log2_big(&c))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CondensateThreshold {
    pub n: usize,
    /// Smallest argmax of p_k(n) over k.
    pub k0_exact: usize,
    /// √(6n)/(2π) ln n.
    pub k0_leading: f64,
    /// c⁻¹√n (ln n + α), equal to K ln K with K = √(6n)/π.
    pub k0_two_term: f64,
    /// c⁻¹√n ln(c⁻¹√n) + α√n, with the logarithm split at √n.
    pub k0_two_term_split: f64,
    /// √(n ln n), the scale of the stated accuracy of the asymptotics.
    pub accuracy_scale: f64,
}

/// (leading, two-term, split two-term) asymptotics for k₀ at size n.
pub fn threshold_asymptotics(n: f64) -> (f64, f64, f64) {
    let c = 2.0 * PI / 6f64.sqrt();
    let alpha = -2.0 * (c / 2.0).ln();
    let root = n.sqrt() / c;
    let leading = root * n.ln();
    let two_term = root * (n.ln() + alpha);
    let split = root * root.ln() + alpha * n.sqrt();
    (leading, two_term, split)
}

fn argmax_row(row: &[BigUint], upto: usize) -> usize {
    let mut best = 1;
    for k in 2..=upto.min(row.len() - 1) {
        if row[k] > row[best] {
            best = k;
        }
    }
    best
}

fn complete_row<'a>(op: &'static str, n: usize, table: &'a PartitionTable) -> Result<&'a [BigUint]> {
    let row = table
        .row(n)
        .ok_or_else(|| Error::domain(op, format!("table has no row n = {n}")))?;
    if row.len() < n + 1 {
        return Err(Error::domain(op, format!("row n = {n} stops at k = {}", row.len() - 1)));
    }
    Ok(row)
}

pub fn condensate_threshold(n: usize, table: &PartitionTable) -> Result<CondensateThreshold> {
    if n < 1 {
        return Err(Error::domain("condensate_threshold", "n must be at least 1"));
    }
    let row = complete_row("condensate_threshold", n, table)?;
    let (leading, two_term, split) = threshold_asymptotics(n as f64);
    let nf = n as f64;
    Ok(CondensateThreshold {
        n,
        k0_exact: argmax_row(row, n),
        k0_leading: leading,
        k0_two_term: two_term,
        k0_two_term_split: split,
        accuracy_scale: (nf * nf.ln()).sqrt(),
    })
}

/// The k ≤ k̄ with the most partitions of n: k̄ itself below the threshold, k₀ above it.
pub fn maximize_variants(n: usize, k_bar: usize, table: &PartitionTable) -> Result<usize> {
    if k_bar < 1 || k_bar > n {
        return Err(Error::domain("maximize_variants", format!("need 1 ≤ k̄ ≤ n, got k̄ = {k_bar}, n = {n}")));
    }
    let k0 = condensate_threshold(n, table)?.k0_exact;
    Ok(if k_bar <= k0 { k_bar } else { k0 })
}

/// Γ(d+i) / (Γ(i+1) Γ(d)), the number of ways to place i quanta on a level of dimension d.
pub fn fractal_weight(d: f64, i: u64) -> Result<f64> {
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::domain("fractal_weight", format!("d = {d} must be positive")));
    }
    if i < 2000 {
        let mut w = 1.0;
        for j in 1..=i {
            w *= (d + j as f64 - 1.0) / j as f64;
        }
        return Ok(w);
    }
    let i = i as f64;
    let ln = specfun::ln_gamma_unchecked(d + i) - specfun::ln_gamma_unchecked(i + 1.0) - specfun::ln_gamma_unchecked(d);
    Ok(ln.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlobalDistribution {
    pub b: f64,
    pub kappa: f64,
    pub gamma: f64,
    /// Summand cap N in the finite-N correction.
    pub n_cap: u64,
}

impl GlobalDistribution {
    /// Mean occupation of level ξ.
    pub fn occupation(&self, xi: f64) -> f64 {
        let x = self.b * (xi + self.kappa);
        let n = self.n_cap as f64;
        1.0 / x.exp_m1() - n / (n * x).exp_m1()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveMethod {
    DampedNewton,
    Bisection,
    FreeThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlobalSolution {
    pub dist: GlobalDistribution,
    pub n: u64,
    pub k: f64,
    /// Threshold k₀ from the self-consistency condition (free mode only).
    pub k0: Option<f64>,
    pub count_residual: f64,
    pub moment_residual: f64,
    pub iterations: usize,
    pub method: SolveMethod,
}

fn solver_settings() -> QuadratureSettings {
    QuadratureSettings::new(1e-300, 1e-12, 80).expect("valid settings")
}

// Integrals at b = 1 and shift s = bκ: C(s) = ∫ t^γ F(t+s), M(s) = ∫ t^{γ+1} F(t+s).
fn scaled_moments(gamma: f64, s: f64, cap: f64, q: &QuadratureSettings) -> Result<(f64, f64)> {
    let c = finite_n_integral_real(gamma, 1.0, s, cap, q)?.value;
    let m = finite_n_integral_real(gamma + 1.0, 1.0, s, cap, q)?.value;
    Ok((c, m))
}

fn residuals(gamma: f64, b: f64, kappa: f64, n: f64, k: f64, q: &QuadratureSettings) -> Result<(f64, f64)> {
    let c = finite_n_integral_real(gamma, b, kappa, k, q)?.value;
    let m = finite_n_integral_real(gamma + 1.0, b, kappa, k, q)?.value;
    Ok((c / k - 1.0, m / n - 1.0))
}

/// Free mode κ = 0: b from the first moment without the finite-N term,
/// then k₀ from k₀ = ∫ ξ^γ [·] with N = k₀.
pub fn solve_free_distribution(n: u64, gamma: f64) -> Result<GlobalSolution> {
    if n < 1 {
        return Err(Error::domain("solve_global_distribution", "n must be at least 1"));
    }
    if !(gamma > -1.0) {
        return Err(Error::domain("solve_global_distribution", format!("γ = {gamma} must exceed −1")));
    }
    let q = solver_settings();
    let nf = n as f64;
    let g2 = gamma + 2.0;
    let b = (specfun::gamma_fn(g2)? * specfun::riemann_zeta(g2)? / nf).powf(1.0 / g2);
    let excess = |cap: f64| -> Result<f64> { Ok(finite_n_integral_real(gamma, b, 0.0, cap, &q)?.value - cap) };
    // the upper root of count(N) = N
    let mut lo = 2.0f64;
    while excess(lo)? <= 0.0 {
        lo *= 2.0;
        if lo > 1e15 {
            return Err(Error::Solver {
                op: "solve_global_distribution",
                detail: format!("no threshold for n = {n}, γ = {gamma}: count stays below N"),
            });
        }
    }
    let mut hi = lo * 2.0;
    while excess(hi)? > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e18 {
            return Err(Error::Solver {
                op: "solve_global_distribution",
                detail: "threshold bracket ran away".into(),
            });
        }
    }
    let mut iterations = 0;
    while hi - lo > 1e-12 * hi {
        let mid = 0.5 * (lo + hi);
        if excess(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let k0 = 0.5 * (lo + hi);
    let (rc, rm) = residuals(gamma, b, 0.0, nf, k0, &q)?;
    Ok(GlobalSolution {
        dist: GlobalDistribution {
            b,
            kappa: 0.0,
            gamma,
            n_cap: k0.round() as u64,
        },
        n,
        k: k0,
        k0: Some(k0),
        count_residual: rc,
        moment_residual: rm,
        iterations,
        method: SolveMethod::FreeThreshold,
    })
}

/// (b, κ) with ∫ ξ^γ [·] = k and ∫ ξ^{γ+1} [·] = n for the summand cap N = k.
pub fn solve_global_distribution(n: u64, k: u64, gamma: f64) -> Result<GlobalSolution> {
    if k < 2 || n < k {
        return Err(Error::domain("solve_global_distribution", format!("need 2 ≤ k ≤ n, got n = {n}, k = {k}")));
    }
    if !(gamma > -1.0) {
        return Err(Error::domain("solve_global_distribution", format!("γ = {gamma} must exceed −1")));
    }
    let q = solver_settings();
    let (nf, kf) = (n as f64, k as f64);
    let g2 = gamma + 2.0;
    let seed_b = (specfun::gamma_fn(g2)? * specfun::riemann_zeta(g2)? / nf).powf(1.0 / g2);

    if let Some(sol) = newton(gamma, nf, kf, seed_b, &q)? {
        return Ok(sol);
    }
    bisection(gamma, nf, kf, &q)
}

fn newton(gamma: f64, n: f64, k: f64, seed_b: f64, q: &QuadratureSettings) -> Result<Option<GlobalSolution>> {
    // unknowns y = (ln b, s) with s = bκ ≥ 0
    let eval = |lb: f64, s: f64| -> Result<(f64, f64)> {
        let b = lb.exp();
        residuals(gamma, b, s / b, n, k, q)
    };
    let mut lb = seed_b.ln();
    let mut s = 0.1;
    let mut r = eval(lb, s)?;
    let norm = |r: (f64, f64)| r.0.abs().max(r.1.abs());
    for it in 0..60 {
        if norm(r) < 1e-11 {
            let b = lb.exp();
            return Ok(Some(GlobalSolution {
                dist: GlobalDistribution {
                    b,
                    kappa: s / b,
                    gamma,
                    n_cap: k as u64,
                },
                n: n as u64,
                k,
                k0: None,
                count_residual: r.0,
                moment_residual: r.1,
                iterations: it,
                method: SolveMethod::DampedNewton,
            }));
        }
        let h = 1e-6;
        let rb = eval(lb + h, s)?;
        let hs = 1e-6 * s.max(1e-3);
        let rs = eval(lb, s + hs)?;
        let j = [[(rb.0 - r.0) / h, (rs.0 - r.0) / hs], [(rb.1 - r.1) / h, (rs.1 - r.1) / hs]];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if !det.is_finite() || det.abs() < 1e-300 {
            return Ok(None);
        }
        let dlb = -(j[1][1] * r.0 - j[0][1] * r.1) / det;
        let ds = -(-j[1][0] * r.0 + j[0][0] * r.1) / det;
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let nlb = lb + t * dlb.clamp(-2.0, 2.0);
            let ns = (s + t * ds).max(0.0);
            if let Ok(nr) = eval(nlb, ns) {
                if norm(nr) < norm(r) {
                    lb = nlb;
                    s = ns;
                    r = nr;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !accepted {
            return Ok(None);
        }
    }
    Ok(None)
}

fn bisection(gamma: f64, n: f64, k: f64, q: &QuadratureSettings) -> Result<GlobalSolution> {
    let e = (gamma + 1.0) / (gamma + 2.0);
    // with b eliminated through the moment equation, the count equation is 1-D in s
    let g = |s: f64| -> Result<f64> {
        let (c, m) = scaled_moments(gamma, s, k, q)?;
        Ok(c * (n / m).powf(e) - k)
    };
    let g0 = g(0.0)?;
    if g0 < 0.0 {
        return Err(Error::Solver {
            op: "solve_global_distribution",
            detail: format!(
                "no κ ≥ 0 solution: at κ = 0 the count equation gives {:.6} < k = {k}; k lies above the condensate threshold for n = {n}",
                g0 + k
            ),
        });
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    while g(hi)? > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e4 {
            return Err(Error::Solver {
                op: "solve_global_distribution",
                detail: "κ bracket ran away".into(),
            });
        }
    }
    let mut iterations = 0;
    while hi - lo > 1e-14 * hi.max(1e-3) {
        let mid = 0.5 * (lo + hi);
        if g(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let s = 0.5 * (lo + hi);
    let (_, m) = scaled_moments(gamma, s, k, q)?;
    let b = (m / n).powf(1.0 / (gamma + 2.0));
    let (rc, rm) = residuals(gamma, b, s / b, n, k, q)?;
    Ok(GlobalSolution {
        dist: GlobalDistribution {
            b,
            kappa: s / b,
            gamma,
            n_cap: k as u64,
        },
        n: n as u64,
        k,
        k0: None,
        count_residual: rc,
        moment_residual: rm,
        iterations,
        method: SolveMethod::Bisection,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dimension1Threshold {
    pub n: u64,
    pub w: f64,
    pub n_cr: f64,
}

/// ∫₀^∞ √ξ/(e^ξ − 1) dξ and ∫₀^∞ (1/ξ² − 1/(e^{ξ²} − 1)) dξ.
pub fn dimension1_integrals() -> Result<(f64, f64)> {
    let q = QuadratureSettings::new(1e-14, 1e-13, 80)?;
    let i1 = specfun::bose_integral(0.5, 0.0, &q)?.value;
    let i2 = improper_quad(
        |x: f64| {
            let y = x * x;
            if y < 1e-2 {
                let y2 = y * y;
                0.5 - y / 12.0 + y * y2 / 720.0 - y * y2 * y2 / 30240.0
            } else {
                1.0 / y - 1.0 / y.exp_m1()
            }
        },
        0.0,
        &q,
    )?
    .value;
    Ok((i1, i2))
}

/// N_cr from W² − ... : the larger root x of x² − Wx + W = 0, squared.
pub fn ncr_dimension1(n: u64) -> Result<Dimension1Threshold> {
    if n < 1 {
        return Err(Error::domain("ncr_dimension1", "n must be at least 1"));
    }
    let (i1, i2) = dimension1_integrals()?;
    let w = (2.0 * n as f64).cbrt() * i1.powf(-1.0 / 3.0) * i2;
    if w < 4.0 {
        return Err(Error::Complexity {
            op: "ncr_dimension1",
            detail: format!("W = {w:.6} < 4 for n = {n}; the quadratic has no real root"),
        });
    }
    let n_cr = 0.25 * w * w * (1.0 + (1.0 - 4.0 / w).sqrt()).powi(2);
    Ok(Dimension1Threshold { n, w, n_cr })
}

/// c² in N_cr ≈ c² n^{2/3}.
pub fn ncr_asymptotic_constant() -> Result<f64> {
    let (i1, i2) = dimension1_integrals()?;
    let c = i2 / (0.5 * i1).cbrt();
    Ok(c * c)
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pair potential U(r) with analytic first and second derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PotentialSpec {
    /// 4ε[(σ/r)¹² − (σ/r)⁶]
    LennardJones { epsilon: f64, sigma: f64 },
    /// Mie form C ε[(σ/r)ⁿ − (σ/r)ᵐ], C = n/(n−m) (n/m)^{m/(n−m)}
    GeneralizedLj { epsilon: f64, sigma: f64, n: f64, m: f64 },
    /// D[e^{−2a(r−r_e)} − 2e^{−a(r−r_e)}]
    Morse { depth: f64, a: f64, r_e: f64 },
    /// A e^{−Br} − C/r⁶
    Buckingham { a: f64, b: f64, c: f64 },
}

impl Default for PotentialSpec {
    fn default() -> Self {
        PotentialSpec::reduced_lj()
    }
}

impl PotentialSpec {
    pub fn reduced_lj() -> Self {
        PotentialSpec::LennardJones {
            epsilon: 1.0,
            sigma: 1.0,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            PotentialSpec::LennardJones { .. } => "lennard_jones",
            PotentialSpec::GeneralizedLj { .. } => "generalized_lj",
            PotentialSpec::Morse { .. } => "morse",
            PotentialSpec::Buckingham { .. } => "buckingham",
        }
    }

    pub fn is_reduced_lj(&self) -> bool {
        *self == PotentialSpec::reduced_lj()
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |name: &str, v: f64| -> Result<()> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::config(format!("potential.{name}"), format!("{v} must be positive")))
            }
        };
        match *self {
            PotentialSpec::LennardJones { epsilon, sigma } => {
                pos("epsilon", epsilon)?;
                pos("sigma", sigma)
            }
            PotentialSpec::GeneralizedLj { epsilon, sigma, n, m } => {
                pos("epsilon", epsilon)?;
                pos("sigma", sigma)?;
                pos("m", m)?;
                if !(n > m) {
                    return Err(Error::config("potential.n", format!("n = {n} must exceed m = {m}")));
                }
                Ok(())
            }
            PotentialSpec::Morse { depth, a, r_e } => {
                pos("depth", depth)?;
                pos("a", a)?;
                pos("r_e", r_e)
            }
            PotentialSpec::Buckingham { a, b, c } => {
                pos("a", a)?;
                pos("b", b)?;
                pos("c", c)
            }
        }
    }

    /// (U, U′, U″) at r.
    pub fn eval(&self, r: f64) -> (f64, f64, f64) {
        match *self {
            PotentialSpec::LennardJones { epsilon, sigma } => {
                let s6 = (sigma / r).powi(6);
                let s12 = s6 * s6;
                let e4 = 4.0 * epsilon;
                (
                    e4 * (s12 - s6),
                    e4 * (-12.0 * s12 + 6.0 * s6) / r,
                    e4 * (156.0 * s12 - 42.0 * s6) / (r * r),
                )
            }
            PotentialSpec::GeneralizedLj { epsilon, sigma, n, m } => {
                let c = n / (n - m) * (n / m).powf(m / (n - m)) * epsilon;
                let sn = (sigma / r).powf(n);
                let sm = (sigma / r).powf(m);
                (
                    c * (sn - sm),
                    c * (-n * sn + m * sm) / r,
                    c * (n * (n + 1.0) * sn - m * (m + 1.0) * sm) / (r * r),
                )
            }
            PotentialSpec::Morse { depth, a, r_e } => {
                let e = (-a * (r - r_e)).exp();
                (
                    depth * (e * e - 2.0 * e),
                    depth * 2.0 * a * (e - e * e),
                    depth * a * a * (4.0 * e * e - 2.0 * e),
                )
            }
            PotentialSpec::Buckingham { a, b, c } => {
                let e = a * (-b * r).exp();
                let r6 = r.powi(6);
                (e - c / r6, -b * e + 6.0 * c / (r6 * r), b * b * e - 42.0 * c / (r6 * r * r))
            }
        }
    }

    pub fn u(&self, r: f64) -> f64 {
        self.eval(r).0
    }

    /// Inner radius below which the analysis is not carried out.
    pub fn r_floor(&self) -> f64 {
        match *self {
            PotentialSpec::LennardJones { sigma, .. } | PotentialSpec::GeneralizedLj { sigma, .. } => 0.5 * sigma,
            PotentialSpec::Morse { r_e, a, .. } => (r_e - 2.0 / a).max(0.05 * r_e),
            PotentialSpec::Buckingham { .. } => self.buckingham_barrier(),
        }
    }

    // top of the spurious inner barrier of the Buckingham form
    fn buckingham_barrier(&self) -> f64 {
        let (mut lo, mut hi) = (1e-3, 1e-3);
        while self.eval(hi).1 > 0.0 && hi < 1e3 {
            lo = hi;
            hi *= 1.1;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid).1 > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }
}

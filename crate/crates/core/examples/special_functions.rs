//! Gamma, zeta, polylogarithms and the Bose-Einstein integrals.

use zenoline::specfun::{bose_integral, finite_n_integral, polylog, polylog_exp, riemann_zeta, QuadratureSettings};

fn main() -> zenoline::Result<()> {
    let q = QuadratureSettings::default();
    let b = bose_integral(1.0, 0.0, &q)?;
    println!("∫ξ/(e^ξ−1) = {:.15} (π²/6 = {:.15}), {} evaluations", b.value, std::f64::consts::PI.powi(2) / 6.0, b.evaluations);

    for s in [1.2, 2.2, 3.0] {
        println!("ζ({s}) = {:.15}  Li_{s}(1) = {:.15}", riemann_zeta(s)?, polylog(s, 1.0)?);
    }
    for k in [-1e-6, -0.1, -1.0, -10.0] {
        println!("Li_1.2(e^{k}) = {:.12e}", polylog_exp(1.2, k)?);
    }
    for n in [2, 10, 100] {
        let v = finite_n_integral(0.0, 1.0, 0.0, n, &q)?;
        println!("N = {n:>3}: finite-N integral {:.12}, ln N {:.12}", v.value, (n as f64).ln());
    }
    Ok(())
}

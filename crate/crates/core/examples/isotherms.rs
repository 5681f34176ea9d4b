//! Ideal and imperfect T_r = 1 isotherms.

use zenoline::diagram::{ideal_isotherm, imperfect_isotherm, solve_phi, ZenoLine, GAMMA0};
use zenoline::specfun::riemann_zeta;

fn main() -> zenoline::Result<()> {
    let p: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
    let ideal = ideal_isotherm(&p, GAMMA0)?;
    let v: Vec<f64> = (0..200).map(|i| 1.2 * (5000.0f64 / 1.2).powf(i as f64 / 199.0)).collect();
    let eos = solve_phi(GAMMA0, &v, &ZenoLine::default())?;
    let real = imperfect_isotherm(&p, &eos)?;
    println!("{:>5} {:>10} {:>10} {:>10}", "P_r", "Z ideal", "Z imperf", "a");
    for (a, b) in ideal.iter().zip(&real) {
        println!("{:>5.2} {:>10.6} {:>10.6} {:>10.6}", a.p_r, a.z, b.z, b.a);
    }
    println!("ζ(2.2)/ζ(1.2) = {:.6}", riemann_zeta(2.2)? / riemann_zeta(1.2)?);
    Ok(())
}

//! Zeno line and the Bachinskii parabola with its caustic.

use zenoline::diagram::{bachinskii_density, critical_gamma, zeno_curve, ZenoLine};

fn main() -> zenoline::Result<()> {
    let line = ZenoLine::new(1.0, 1.0)?;
    let c = zeno_curve(&line, &[0.1, 0.4, 0.7])?;
    for p in &c.points {
        println!("T = {:.1}: ρ = {:.2}, Z = {}", p.x, p.values[0], p.values[2]);
    }

    let (b, cc) = (1.0, 2.0);
    for p in [0.0, 0.5, 0.9, 1.0, 1.1] {
        match bachinskii_density(b, cc, p) {
            Ok((lo, hi)) => println!("P = {p}: ρ = {lo:.6}, {hi:.6}"),
            Err(e) => println!("P = {p}: {e}"),
        }
    }

    let g = critical_gamma(0.29)?;
    println!(
        "ζ(d+1)/ζ(d) = 0.29 at d = {:.6}; at γ0 = 0.2 the ratio is {:.4} and needs factor {:.4}",
        g.d, g.ratio_at_gamma0, g.geometric_factor_at_gamma0
    );
    Ok(())
}

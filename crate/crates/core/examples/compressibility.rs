//! Z(ρ) from the stationary values of the effective energy, and the critical point.

use zenoline::scatter::{compressibility_curve_reduced, critical_summary, hyperbola_stitch, PotentialSpec};

fn main() -> zenoline::Result<()> {
    let lj = PotentialSpec::reduced_lj();
    let x: Vec<f64> = (1..50).map(|i| i as f64 / 50.0).collect();
    let c10 = compressibility_curve_reduced(&lj, 10.0, &x)?;
    let c100 = compressibility_curve_reduced(&lj, 100.0, &x)?;
    let (z10, z100) = (c10.column("Z").unwrap(), c100.column("Z").unwrap());
    for i in (0..x.len()).step_by(6) {
        println!("ρ/ρ_B = {:.2}: Z(B=10) = {:.5}  Z(B=100) = {:.5}", x[i], z10[i], z100[i]);
    }
    let gap = z10.iter().zip(&z100).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("max |ΔZ| between B = 10 and 100: {gap:.4}");

    let s = critical_summary(&lj)?;
    println!(
        "critical: Z = {:.4}, ρ/ρ_B = {:.4}, T/T_B = {:.4} (references {} and {})",
        s.z_cr, s.rho_cr_over_rho_b, s.t_cr_over_t_b, s.t_reference[0], s.t_reference[1]
    );
    let h = hyperbola_stitch(&c100, &s, 5)?;
    for p in &h.points {
        println!("stitch ρ/ρ_B = {:.4}: Z = {:.4}", p.x, p.values[0]);
    }
    Ok(())
}

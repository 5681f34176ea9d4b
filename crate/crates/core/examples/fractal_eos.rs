//! Volume deformation φ_γ(V) integrated along the Zeno line.

use zenoline::diagram::{solve_phi, ZenoLine};

fn main() -> zenoline::Result<()> {
    let v: Vec<f64> = (0..40).map(|i| 1.2 * (2000.0f64 / 1.2).powf(i as f64 / 39.0)).collect();
    let eos = solve_phi(0.2, &v, &ZenoLine::default())?;
    println!("V_cr = {:.6}, φ(V_cr) = {:.6}, Vφ′/φ there = {:.6}", eos.v_cr, eos.phi_cr(), eos.geometric_factor_cr());
    println!("{} grid points below V_cr dropped", eos.dropped.len());
    for i in (0..eos.v.len()).step_by(5) {
        println!(
            "V = {:>10.4}  φ = {:>10.4}  φ′ = {:.6}  κ = {:>9.5}  residual {:>9.1e}",
            eos.v[i], eos.phi[i], eos.dphi[i], eos.kappa[i], eos.residual[i]
        );
    }
    let max_res = eos.residual.iter().map(|r| r.abs()).fold(0.0, f64::max);
    println!("largest residual {max_res:.2e}; φ(V_max)/V_max = {}", eos.phi.last().unwrap() / eos.v_max());
    Ok(())
}

//! γ(μ) past the critical point, the stitch to the Zeno line and the linear variant.

use zenoline::diagram::{jamming_extension, liquid_summary, solve_phi, ZenoLine, GAMMA0};

fn main() -> zenoline::Result<()> {
    let v: Vec<f64> = (0..200).map(|i| 1.2 * (5000.0f64 / 1.2).powf(i as f64 / 199.0)).collect();
    let eos = solve_phi(GAMMA0, &v, &ZenoLine::default())?;
    let mu: Vec<f64> = (0..=10).map(|i| -0.2 * i as f64).collect();
    let zeno = ZenoLine::critical_reduced_reference();
    let j = jamming_extension(&mu, &eos, &zeno)?;
    for p in &j.traced.points {
        println!("μ = {:>5.2}: γ = {:.5}, P = {:.5}, Z = {:.5}", p.x, p.values[0], p.values[1], p.values[2]);
    }
    println!("breakpoint {:?} → Zeno point {:?}", j.breakpoint, j.zeno_point);
    let last = j.linear_variant.points.last().unwrap();
    println!("linear variant ends at V = {:.4} with γ = {}", last.x, last.values[0]);

    let l = liquid_summary(&eos, &zeno)?;
    println!("liquid rays with c = {:.4}:", l.c);
    for r in &l.rays {
        println!("  T = {}: {} points, Li = {:.4}, capped {}", r.t, r.curve.len(), r.li_constant, r.capped);
    }
    println!("triple point: Z ≈ {}, T ≈ {} T_cr", l.triple_z, l.triple_t_ratio);
    Ok(())
}

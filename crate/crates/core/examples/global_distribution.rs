//! Finite-N global distribution (b, κ) and the dimension-1 threshold N_cr.

use zenoline::partition::{ncr_dimension1, solve_free_distribution, solve_global_distribution};

fn main() -> zenoline::Result<()> {
    let free = solve_free_distribution(10_000, 0.0)?;
    println!("free, n = 10^4: b = {:.6}, k0 ≈ {:.1}", free.dist.b, free.k0.unwrap_or(f64::NAN));

    let k = (free.k0.unwrap_or(400.0) / 2.0) as u64;
    let s = solve_global_distribution(10_000, k, 0.0)?;
    println!(
        "k = {k}: b = {:.6}, κ = {:.6}, residuals {:.1e} {:.1e}, {:?} in {} steps",
        s.dist.b, s.dist.kappa, s.count_residual, s.moment_residual, s.method, s.iterations
    );
    match solve_global_distribution(10_000, 4 * k, 0.0) {
        Ok(s) => println!("k = {}: κ = {}", 4 * k, s.dist.kappa),
        Err(e) => println!("k = {}: {e}", 4 * k),
    }

    for n in [100, 1000, 100_000] {
        let d = ncr_dimension1(n)?;
        println!("n = {n:>6}: W = {:.4}, N_cr = {:.3}", d.w, d.n_cr);
    }
    Ok(())
}

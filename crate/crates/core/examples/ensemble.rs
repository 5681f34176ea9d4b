//! Exact enumeration against the Gibbs band, and the Boltzmann limit.

use zenoline::ensemble::{boltzmann_limit_check, concentration_report, default_psi, enumerate_states, gibbs_parameter, SpectrumSpec};

fn main() -> zenoline::Result<()> {
    let spec = SpectrumSpec::new(vec![1.0, 2.0, 3.0, 4.0])?;
    let c = enumerate_states(&spec, 6, 12.0)?;
    println!("N = 6, E ≤ 12: {} states, mean occupations {:?}", c.states, c.mean_occupation());
    println!("b_E at E = 2: {:.10}", gibbs_parameter(&spec, 2.0)?);

    let r = concentration_report(&spec, &[4, 6, 8, 10], 2.0, default_psi)?;
    for row in &r.rows {
        println!("N = {:>2}: {:>4} states, outside the band {:.4}", row.n, row.states, row.outside_fraction);
    }
    println!("non-increasing: {}", r.non_increasing);

    for row in boltzmann_limit_check(1.0, &[-2.0, -5.0, -10.0, -20.0])? {
        println!("κ = {:>5}: ratio − 1 = {:.3e} (leading term {:.3e})", row.kappa, row.deficit, row.predicted_deficit);
    }
    Ok(())
}

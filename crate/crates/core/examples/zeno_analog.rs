//! The Zeno-condition root of the effective scattering energy against B.

use zenoline::scatter::{trace_zeno_analog, zeno_root, PotentialSpec};

fn main() -> zenoline::Result<()> {
    let lj = PotentialSpec::reduced_lj();
    let grid: Vec<f64> = (1..=20).map(|i| 5.0 * i as f64).collect();
    let curve = trace_zeno_analog(&lj, &grid)?;
    println!("{:>6} {:>12} {:>12} {:>14}", curve.x_label, "r*", "α", "E");
    for p in &curve.points {
        println!("{:>6} {:>12.8} {:>12.8} {:>14.6e}", p.x, p.values[0], p.values[1], p.values[2]);
    }

    let r = zeno_root(&lj, 100.0)?;
    println!("B = 100: α from U′ {:.12}, from U″ {:.12}", r.alpha_first, r.alpha_second);

    let mie = PotentialSpec::GeneralizedLj { epsilon: 1.0, sigma: 1.0, n: 14.0, m: 7.0 };
    println!("Mie 14-7 at B = 100: r* = {:.8}", zeno_root(&mie, 100.0)?.r);
    Ok(())
}

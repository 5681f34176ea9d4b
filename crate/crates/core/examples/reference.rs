//! Bundled reference tables.

use zenoline::diagram::reference::{reference_tables, rotation_angle, substance};

fn main() {
    let t = reference_tables();
    println!("{}", t.rotation_source);
    for r in t.rotation_angles {
        println!("  V {} {:.2}: α = {}", if r.open_above { "≥" } else { "=" }, r.v, r.alpha);
    }
    println!("{}", t.substance_source);
    for s in t.substances {
        println!("  {:<8} {:<5} ε = {:>6} K  T_cr/4 = {:>4}  estimate {:>5}", s.name, s.formula, s.epsilon_k, s.t_cr_quarter, s.estimate);
    }
    println!("α(0.17) = {:?}, argon ε = {:?}, xenon {:?}", rotation_angle(0.17), substance("ar").map(|s| s.epsilon_k), substance("xenon"));
}

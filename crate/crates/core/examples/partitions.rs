//! Restricted partitions, Hartley entropy and the condensate threshold.

use zenoline::partition::{build_partition_table, condensate_threshold, hartley_entropy, maximize_variants, partition_rows};

fn main() -> zenoline::Result<()> {
    let t = build_partition_table(100, 100)?;
    println!("p(100) = {}", t.total(100).unwrap());
    for k in [1, 5, 10, 18, 30] {
        println!("p_{k}(100) = {:>10}  log2 = {:.4}", t.get(100, k).unwrap(), hartley_entropy(100, k, &t)?);
    }
    println!("best k ≤ 10: {}, best k ≤ 60: {}", maximize_variants(100, 10, &t)?, maximize_variants(100, 60, &t)?);

    let ns = [500, 1000, 2000, 5000];
    let rows = partition_rows(&ns, 5000)?;
    for n in ns {
        let c = condensate_threshold(n, &rows)?;
        println!(
            "n = {n:>5}: k0 = {:>4}, leading {:>7.2}, two-term {:>7.2} (ratio {:.4})",
            c.k0_exact,
            c.k0_leading,
            c.k0_two_term,
            c.k0_two_term / c.k0_exact as f64
        );
    }
    Ok(())
}

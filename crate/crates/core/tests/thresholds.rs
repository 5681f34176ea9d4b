use zenoline::partition::{build_partition_table, condensate_threshold, maximize_variants, partition_rows};

#[test]
fn exact_thresholds() {
    let ns = [500, 1000, 2000, 5000];
    let rows = partition_rows(&ns, 5000).unwrap();
    let k0: Vec<usize> = ns.iter().map(|&n| condensate_threshold(n, &rows).unwrap().k0_exact).collect();
    assert_eq!(k0, vec![52, 81, 126, 223]);
}

#[test]
fn sparse_rows_agree_with_dense_threshold() {
    let dense = build_partition_table(400, 400).unwrap();
    let sparse = partition_rows(&[123, 400], 400).unwrap();
    for n in [123, 400] {
        assert_eq!(
            condensate_threshold(n, &dense).unwrap().k0_exact,
            condensate_threshold(n, &sparse).unwrap().k0_exact
        );
        let k0 = condensate_threshold(n, &dense).unwrap().k0_exact;
        assert_eq!(maximize_variants(n, n, &sparse).unwrap(), k0);
        assert_eq!(maximize_variants(n, k0 - 1, &sparse).unwrap(), k0 - 1);
    }
}

use cornell_core::model::DimensionlessCase;
use cornell_core::numerov::{
    assemble, convergence_table, effective_potential, eigenvalues, eigenvector, select_level,
    solve, solve_with_vectors, sturm_count, Grid, LevelSelection,
};
use cornell_core::{Grid32, Grid64};
use proptest::prelude::*;

fn case(b: f64, l: u32) -> DimensionlessCase<f64> {
    DimensionlessCase::new(b, l, 0, 0).unwrap()
}

fn table_grid(n: usize) -> Grid64 {
    Grid::new(1e-5, 20.0, n).unwrap()
}

fn production_grid() -> Grid64 {
    Grid::new(1e-4, 50.0, 5000).unwrap()
}

#[test]
fn grid_geometry() {
    let g: Grid64 = Grid::new(1.0, 3.0, 8).unwrap();
    assert_eq!(g.interior(), 7);
    assert!((g.delta() - 0.25).abs() < 1e-15);
    assert!((g.node(4) - 2.0).abs() < 1e-15);
    let nodes: Vec<f64> = g.interior_nodes().collect();
    assert_eq!(nodes.len(), 7);
    assert!((nodes[0] - 1.25).abs() < 1e-15 && (nodes[6] - 2.75).abs() < 1e-15);
    assert!(Grid::new(0.0, 1.0, 8).is_err());
    assert!(Grid::new(1.0, 0.5, 8).is_err());
    assert!(Grid::new(0.1, 1.0, 4).is_err());
}

#[test]
fn potential_examples() {
    assert_eq!(effective_potential(&case(0.0, 0), 3.0).unwrap(), 3.0);
    assert_eq!(effective_potential(&case(2.0, 1), 1.0).unwrap(), 1.0);
    assert!(effective_potential(&case(0.0, 0), 0.0).is_err());
}

#[test]
fn pencil_structure() {
    let g = Grid::new(0.5, 4.0, 10).unwrap();
    let sys = assemble(&case(2.0, 1), &g).unwrap();
    let inv_d2 = 1.0 / (g.delta() * g.delta());
    assert_eq!(sys.len(), 9);
    assert!((sys.rhs_diag + 2.0 * sys.rhs_off - 1.0).abs() < 1e-15);
    for i in 0..sys.len() {
        let v = sys.potential[i];
        assert!((sys.lhs_diag[i] - (2.0 * inv_d2 + 10.0 * v / 12.0)).abs() < 1e-12);
        if i + 1 < sys.len() {
            assert!((sys.lhs_upper[i] - (-inv_d2 + sys.potential[i + 1] / 12.0)).abs() < 1e-12);
            assert!((sys.lhs_lower[i] - (-inv_d2 + v / 12.0)).abs() < 1e-12);
        }
    }
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    // Gauss-Jordan with partial pivoting; returns a⁻¹ b.
    let n = a.len();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&i, &j| a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap())
            .unwrap();
        a.swap(c, p);
        b.swap(c, p);
        let d = a[c][c];
        for k in 0..n {
            a[c][k] /= d;
            b[c][k] /= d;
        }
        for r in 0..n {
            if r != c {
                let f = a[r][c];
                for k in 0..n {
                    a[r][k] -= f * a[c][k];
                    b[r][k] -= f * b[c][k];
                }
            }
        }
    }
    b
}

#[test]
fn reduced_operator_is_symmetric() {
    let g = Grid::new(0.2, 6.0, 14).unwrap();
    let sys = assemble(&case(5.0, 2), &g).unwrap();
    let (l, r) = sys.to_dense();
    for (i, row) in r.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(x, r[j][i]);
        }
    }
    let m = solve_dense(r, l);
    let scale = sys.lhs_norm();
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate().take(i) {
            assert!((x - m[j][i]).abs() < 1e-12 * scale, "({i}, {j})");
        }
    }
}

#[test]
fn eigenpair_residuals_and_orthogonality() {
    let g = Grid::new(1e-4, 30.0, 1500).unwrap();
    for (b, l) in [(0.0, 0), (2.0, 2), (10.0, 0)] {
        let c = case(b, l);
        let sys = assemble(&c, &g).unwrap();
        let spec = solve_with_vectors(&c, &g, 6).unwrap();
        let vecs = spec.eigenvectors.as_ref().unwrap();
        for (a, v) in spec.eigenvalues.iter().zip(vecs) {
            assert!(
                sys.residual(*a, v) <= 1e-8 * sys.lhs_norm(),
                "B = {b}, l = {l}, A = {a}"
            );
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        for i in 0..vecs.len() {
            for j in 0..i {
                let dot: f64 = vecs[i].iter().zip(&vecs[j]).map(|(x, y)| x * y).sum();
                assert!(dot.abs() < 1e-8, "B = {b}, l = {l}, ({i}, {j}): {dot}");
            }
        }
    }
}

#[test]
fn eigenvalues_ascending_and_counted() {
    let g = table_grid(256);
    let sys = assemble(&case(2.0, 1), &g).unwrap();
    let vals = eigenvalues(&sys, 10).unwrap();
    assert!(vals.windows(2).all(|w| w[0] < w[1]));
    for (k, &v) in vals.iter().enumerate() {
        assert_eq!(sturm_count(&sys, v - 1e-9 * (1.0 + v.abs())), k);
        assert_eq!(sturm_count(&sys, v + 1e-9 * (1.0 + v.abs())), k + 1);
    }
    assert!(eigenvalues(&sys, sys.len() + 1).is_err());
}

#[test]
fn eigenvector_sign_convention() {
    let c = case(0.0, 0);
    let g = table_grid(128);
    let sys = assemble(&c, &g).unwrap();
    let a = eigenvalues(&sys, 1).unwrap()[0];
    let v = eigenvector(&sys, a).unwrap();
    let peak = v
        .iter()
        .cloned()
        .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
    assert!(peak > 0.0);
    // Ground state has no interior node.
    assert!(v.iter().all(|&x| x >= -1e-10));
}

#[test]
fn published_examples() {
    let a = select_level(&case(0.0, 0), &table_grid(512), LevelSelection::Index(0)).unwrap();
    assert!((a - 2.3381).abs() < 1e-4);
    let a = select_level(
        &case(10.0, 2),
        &table_grid(512),
        LevelSelection::SmallestMagnitude,
    )
    .unwrap();
    assert!((a + 0.94349).abs() < 1e-4);
    let a = solve(&case(2.0, 2), &production_grid(), 1)
        .unwrap()
        .eigenvalues[0];
    assert!((a - 3.43174).abs() < 1e-4);
}

#[test]
fn convergence_table_row() {
    let grids: Vec<Grid64> = [8, 16, 32, 64, 128, 256, 512]
        .iter()
        .map(|&n| table_grid(n))
        .collect();
    let got = convergence_table(&case(0.0, 0), &grids, LevelSelection::Index(0)).unwrap();
    let printed = [2.8858, 2.3509, 2.3380, 2.3381, 2.3381, 2.3381, 2.3381];
    for ((n, a), p) in got.iter().zip(printed) {
        assert!((a - p).abs() < 1e-4, "N = {n}: {a} vs {p}");
    }
    assert!(convergence_table(&case(0.0, 0), &grids[..2], LevelSelection::Index(0)).is_err());
}

#[test]
fn successive_differences_shrink() {
    let grids: Vec<Grid64> = [64, 128, 256, 512, 1024]
        .iter()
        .map(|&n| table_grid(n))
        .collect();
    for (b, l) in [(0.0, 0), (0.0, 2), (2.0, 2), (10.0, 2)] {
        let t = convergence_table(&case(b, l), &grids, LevelSelection::Index(0)).unwrap();
        let diffs: Vec<f64> = t.windows(2).map(|w| (w[1].1 - w[0].1).abs()).collect();
        assert!(
            diffs.windows(2).all(|d| d[1] < d[0]),
            "B = {b}, l = {l}: {diffs:?}"
        );
    }
}

#[test]
fn centrifugal_monotonicity() {
    let g = Grid::new(1e-4, 50.0, 2000).unwrap();
    for b in [0.0, 2.0, 5.0, 10.0] {
        let ground: Vec<f64> = (0..4)
            .map(|l| solve(&case(b, l), &g, 1).unwrap().eigenvalues[0])
            .collect();
        assert!(
            ground.windows(2).all(|w| w[0] < w[1]),
            "B = {b}: {ground:?}"
        );
    }
}

#[test]
fn single_precision_run() {
    let c = DimensionlessCase::<f32>::new(0.0, 0, 0, 0).unwrap();
    let g: Grid32 = Grid::new(1e-5, 20.0, 256).unwrap();
    let a = solve(&c, &g, 1).unwrap().eigenvalues[0];
    assert!((a - 2.338_107).abs() < 5e-3, "{a}");
}

#[test]
fn spectrum_json_mirror() {
    let spec = solve(&case(2.0, 0), &table_grid(64), 2).unwrap();
    let v = serde_json::to_value(&spec).unwrap();
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 2);
    assert!(v["eigenvectors"].is_null());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn residual_contract_holds(b in 0.0f64..10.0, l in 0u32..4, n in 64usize..400) {
        let c = case(b, l);
        let g = Grid::new(1e-4, 25.0, n).unwrap();
        let sys = assemble(&c, &g).unwrap();
        let spec = solve_with_vectors(&c, &g, 3).unwrap();
        for (a, v) in spec.eigenvalues.iter().zip(spec.eigenvectors.as_ref().unwrap()) {
            prop_assert!(sys.residual(*a, v) <= 1e-8 * sys.lhs_norm());
        }
    }

    #[test]
    fn spectrum_within_bounds(b in 0.0f64..10.0, l in 0u32..4) {
        let c = case(b, l);
        let g = table_grid(128);
        let sys = assemble(&c, &g).unwrap();
        let vmin = sys.potential.iter().cloned().fold(f64::INFINITY, f64::min);
        let a = eigenvalues(&sys, 1).unwrap()[0];
        prop_assert!(a >= vmin - 1e-9);
        prop_assert_eq!(sturm_count(&sys, vmin - 1.0), 0);
    }
}

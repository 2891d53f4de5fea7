use cornell_core::report::{
    classify_reproduction, compare_sweep, compare_sweep_detailed, format_significant, plot_series,
    rate_m, rate_n, read_csv, write_csv, write_plot_csv, write_sweep_json, ComparisonRow, GridSpec,
    Reproduction, RunConfig,
};
use cornell_core::Error;
use proptest::prelude::*;

fn small_config(b: Vec<f64>, l: Vec<u32>, s: Vec<u32>) -> RunConfig {
    RunConfig {
        b,
        l,
        s,
        orders: vec![0, 1],
        grid: GridSpec {
            z_min: 1e-4,
            z_max: 50.0,
            n: 5000,
        },
        ..RunConfig::default()
    }
}

#[test]
fn rate_examples() {
    let geo: Vec<f64> = (0..7).map(|k| 1.7 * 4f64.powi(-k)).collect();
    assert!(rate_n(&geo)
        .unwrap()
        .iter()
        .all(|r| (r - 2.0).abs() < 1e-12));

    let half: Vec<f64> = (0..6).map(|k| 2.0 + 0.5f64.powi(k)).collect();
    assert!(rate_m(&half, 2.0)
        .unwrap()
        .iter()
        .all(|r| (r - 1.0).abs() < 1e-12));
    assert!(rate_m(&[3.0, 3.0, 3.0], 1.0)
        .unwrap()
        .iter()
        .all(|&r| r == 0.0));

    assert!(matches!(
        rate_n(&[1.0, 2.0, 2.0, 3.0]),
        Err(Error::DegenerateDifference { index: 2 })
    ));
    assert!(matches!(rate_n(&[1.0, 2.0]), Err(Error::Domain { .. })));
    assert!(matches!(
        rate_m(&[1.0, 2.0], 2.0),
        Err(Error::DegenerateDifference { index: 1 })
    ));
}

#[test]
fn rate_m_against_phase_integral_reference() {
    // Table 1 row (2,2) against the first-order phase-integral value.
    let row: [f64; 7] = [3.0427, 3.4096, 3.4299, 3.4316, 3.4317, 3.4317, 3.43174];
    let m = rate_m(&row, 3.4321960).unwrap();
    assert_eq!(m.len(), 6);
    assert!(m.iter().all(|v| v.is_finite()));
}

#[test]
fn table2_deltas() {
    let rows = compare_sweep::<f64>(&small_config(vec![0.0, 2.0], vec![0, 2], vec![0])).unwrap();
    assert_eq!(rows.len(), 8);
    let get = |b: f64, l: u32, j: u32| {
        rows.iter()
            .find(|r| r.b == b && r.l == l && r.j == j)
            .unwrap()
    };
    let r = get(0.0, 0, 0);
    // For B = l = 0 the level sits z_min above the Airy value.
    assert!((r.a_n.unwrap() - (2.338107410459767 + 1e-4)).abs() < 1e-6);
    assert!((r.delta_a.unwrap() - 0.01155).abs() < 2e-4);
    let r = get(2.0, 2, 0);
    assert!((r.delta_a.unwrap() - 4.6e-4).abs() < 1e-5);
    for r in &rows {
        assert!(r.is_complete());
        assert_eq!(
            r.delta_a.unwrap(),
            (r.a_n.unwrap() - r.a_phi.unwrap()).abs()
        );
        assert!(r.residual.unwrap() <= 1e-10 && r.c_abs.unwrap() <= 1e-8);
    }
}

#[test]
fn sweep_is_sorted_and_deterministic() {
    let cfg = small_config(vec![10.0, 2.0], vec![2, 0], vec![3, 0, 1]);
    let a = compare_sweep::<f64>(&cfg).unwrap();
    let b = compare_sweep::<f64>(&cfg).unwrap();
    assert_eq!(a, b);
    let keys: Vec<_> = a.iter().map(|r| (r.b, r.l, r.s, r.j)).collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert_eq!(keys, sorted);
    assert_eq!(a.len(), 2 * 2 * 3 * 2);
}

#[test]
fn per_case_errors_do_not_abort() {
    let mut cfg = small_config(vec![0.0], vec![0], vec![0, 12]);
    cfg.tolerances.x2_limit = 4.0;
    let rep = compare_sweep_detailed::<f64>(&cfg).unwrap();
    assert_eq!(rep.cases.len(), 4);
    assert_eq!(rep.failures(), 2);
    let failed: Vec<_> = rep.cases.iter().filter(|c| !c.errors.is_empty()).collect();
    assert!(failed
        .iter()
        .all(|c| c.row.s == 12 && c.row.a_n.is_some() && c.row.a_phi.is_none()));
    assert!(rep
        .cases
        .iter()
        .filter(|c| c.row.s == 0)
        .all(|c| c.chi0_max.is_some()));
}

#[test]
fn f32_sweep_runs() {
    let mut cfg = small_config(vec![2.0], vec![1], vec![0]);
    cfg.grid.n = 800;
    cfg.tolerances.residual = 1e-4;
    let rows = compare_sweep::<f32>(&cfg).unwrap();
    assert!(rows.iter().all(|r| r.is_complete()));
    assert!(rows.iter().all(|r| r.delta_a.unwrap() < 0.05));
}

fn sample_rows() -> Vec<ComparisonRow> {
    vec![
        ComparisonRow {
            b: 2.0,
            l: 1,
            s: 0,
            j: 1,
            a_n: Some(2.23810931847),
            a_phi: Some(2.2384158123),
            delta_a: Some(3.064938e-4),
            residual: Some(4.4e-16),
            c_abs: Some(1.2e-15),
        },
        ComparisonRow {
            b: 10.0,
            l: 0,
            s: 12,
            j: 0,
            a_n: Some(-0.3728101),
            a_phi: None,
            delta_a: None,
            residual: None,
            c_abs: None,
        },
    ]
}

#[test]
fn csv_round_trip() {
    let rows = sample_rows();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert!(text.starts_with("B,l,s,j,A_N,A_PhI,delta_A,residual,C_abs\n"));
    assert!(text.contains("10,0,12,0,-0.3728101,,,,"));
    let back = read_csv(buf.as_slice()).unwrap();
    assert_eq!(back, rows);
    let mut again = Vec::new();
    write_csv(&back, &mut again).unwrap();
    assert_eq!(again, buf);
}

#[test]
fn csv_round_trip_of_sweep() {
    let rows = compare_sweep::<f64>(&small_config(vec![5.0], vec![1, 2], vec![0, 2])).unwrap();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    let back = read_csv(buf.as_slice()).unwrap();
    let rel = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(x), Some(y)) => (x - y).abs() <= 1e-11 * x.abs().max(1e-300),
        (None, None) => true,
        _ => false,
    };
    for (r, b) in rows.iter().zip(&back) {
        assert_eq!((r.b, r.l, r.s, r.j), (b.b, b.l, b.s, b.j));
        assert!(rel(r.a_n, b.a_n) && rel(r.a_phi, b.a_phi) && rel(r.delta_a, b.delta_a));
        assert!(rel(r.residual, b.residual) && rel(r.c_abs, b.c_abs));
    }
    let mut again = Vec::new();
    write_csv(&back, &mut again).unwrap();
    assert_eq!(again, buf);
}

#[test]
fn significant_formatting() {
    assert_eq!(format_significant(2.338107410459767, 12), "2.33810741046");
    assert_eq!(format_significant(-0.952484, 12), "-0.952484");
    assert_eq!(format_significant(1.5e-13, 12), "1.5e-13");
    assert_eq!(
        format_significant(123456789012345.0, 12),
        "1.23456789012e14"
    );
    assert_eq!(format_significant(0.0, 12), "0");
    assert_eq!(format_significant(2.0, 4), "2");
}

#[test]
fn plot_series_groups_by_case() {
    let cfg = small_config(vec![2.0], vec![0], vec![2, 0, 1]);
    let rows = compare_sweep::<f64>(&cfg).unwrap();
    let series = plot_series(&rows);
    assert_eq!(series.len(), 2);
    for p in &series {
        assert_eq!(
            p.points.iter().map(|q| q.0).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }
    let mut buf = Vec::new();
    write_plot_csv(&series, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("B,l,j,s,delta_A\n"));
}

#[test]
fn sweep_json_has_diagnostics() {
    let rep = compare_sweep_detailed::<f64>(&small_config(vec![2.0], vec![2], vec![0])).unwrap();
    let mut buf = Vec::new();
    write_sweep_json(&rep, &mut buf).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
    let cases = v.as_array().unwrap();
    assert_eq!(cases.len(), 2);
    let q = &cases[1]["phase_integral"];
    assert!(q["u0"].is_array());
    assert!(q["A"].as_f64().is_some());
    assert!(cases[1]["chi0_max"].as_f64().is_some());
    assert_eq!(cases[1]["row"]["j"], 1);
}

#[test]
fn reproduction_classes() {
    assert_eq!(
        classify_reproduction(2.34966, 2.3496580, 2.3361435, 1e-3),
        Reproduction::FirstOrderOnly
    );
    assert_eq!(
        classify_reproduction(3.4322, 3.4321960, 3.4317531, 1e-3),
        Reproduction::ThirdOrder
    );
    assert_eq!(
        classify_reproduction(1.0, 2.0, 3.0, 1e-3),
        Reproduction::NotReproduced
    );
}

#[test]
fn config_toml() {
    let text = r#"
        b = [2.0, 10.0]
        l = [0, 1, 2]
        s = [0, 1, 2]
        orders = [1]

        [grid]
        z_min = 1e-5
        z_max = 20.0
        n = 512

        [output]
        csv = "out.csv"
    "#;
    let cfg = RunConfig::from_toml_str(text).unwrap();
    assert_eq!(cfg.b, vec![2.0, 10.0]);
    assert_eq!(cfg.grid.n, 512);
    assert_eq!(
        cfg.output.csv.as_deref(),
        Some(std::path::Path::new("out.csv"))
    );
    assert_eq!(cfg.tolerances.residual, 1e-10);
    let again = RunConfig::from_toml_str(&cfg.to_toml_string().unwrap()).unwrap();
    assert_eq!(again, cfg);

    let defaults = RunConfig::from_toml_str("").unwrap();
    assert_eq!(defaults, RunConfig::default());
    assert_eq!(
        defaults.grid,
        GridSpec {
            z_min: 1e-4,
            z_max: 50.0,
            n: 5000
        }
    );
}

#[test]
fn config_rejections() {
    for bad in [
        "orders = [2]",
        "b = [-1.0]",
        "l = []",
        "unknown = 3",
        "[grid]\nz_min = 0.0\nz_max = 1.0\nn = 100",
        "[grid]\nz_min = 1.0\nz_max = 0.5\nn = 100",
        "[grid]\nz_min = 1e-4\nz_max = 50.0\nn = 4",
        "s = [20]\n[grid]\nz_min = 1e-4\nz_max = 50.0\nn = 10",
        "[tolerances]\nresidual = 0.0",
        "b = \"two\"",
    ] {
        assert!(
            matches!(RunConfig::from_toml_str(bad), Err(Error::Config(_))),
            "{bad}"
        );
    }
}

proptest! {
    #[test]
    fn geometric_rates(c in 0.1f64..10.0, q in 1.5f64..10.0, n in 4usize..9) {
        let v: Vec<f64> = (0..n).map(|k| 1.0 + c * q.powi(-(k as i32))).collect();
        for r in rate_n(&v).unwrap() {
            prop_assert!((r - q.log2()).abs() < 1e-6);
        }
        for r in rate_m(&v, 1.0).unwrap() {
            prop_assert!((r - q.log2()).abs() < 1e-6);
        }
    }

    #[test]
    fn csv_round_trip_random(
        b in 0.0f64..20.0, l in 0u32..5, s in 0u32..20, j in 0u32..2,
        a_n in -10.0f64..10.0, a_phi in proptest::option::of(-10.0f64..10.0), res in 0.0f64..1e-9,
    ) {
        let row = ComparisonRow {
            b, l, s, j,
            a_n: Some(a_n),
            a_phi,
            delta_a: a_phi.map(|p| (a_n - p).abs()),
            residual: a_phi.map(|_| res),
            c_abs: None,
        };
        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&row), &mut buf).unwrap();
        let back = read_csv(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), 1);
        let r = &back[0];
        prop_assert!((r.b - b).abs() <= 1e-11 * b.max(1e-300));
        prop_assert!((r.a_n.unwrap() - a_n).abs() <= 1e-11 * a_n.abs());
        prop_assert_eq!(r.a_phi.is_some(), a_phi.is_some());
        prop_assert_eq!(r.c_abs, None);
        let mut again = Vec::new();
        write_csv(&back, &mut again).unwrap();
        prop_assert_eq!(again, buf);
    }
}

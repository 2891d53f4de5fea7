use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cornell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cornell"))
        .args(args)
        .env("RUST_LOG", "info")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_config(dir: &Path, body: &str) -> String {
    let p = dir.join("run.toml");
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn numerov_lowest_levels() {
    let o = cornell(&[
        "numerov", "--b", "0", "--l", "0", "--count", "2", "--grid", "512", "--zmin", "1e-5",
        "--zmax", "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "B,l,level,A");
    assert_eq!(lines.len(), 3);
    let a: f64 = lines[1].split(',').nth(3).unwrap().parse().unwrap();
    assert!((a - 2.3381).abs() < 1e-4);
    let err = stderr(&o);
    assert!(err.contains("B = (4 m^2 / (hbar^4 a))^(1/3) * b"), "{err}");
    assert!(err.contains("N = 512"));
}

#[test]
fn numerov_smallest_magnitude() {
    let o = cornell(&[
        "numerov", "--b", "10", "--l", "2", "--select", "smallest", "--grid", "512", "--zmin",
        "1e-5", "--zmax", "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let a: f64 = out
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(3)
        .unwrap()
        .parse()
        .unwrap();
    assert!((a + 0.94349).abs() < 1e-4);
}

#[test]
fn phase_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("phase.csv");
    let json = dir.path().join("phase.json");
    let o = cornell(&[
        "phase",
        "--b",
        "0,10",
        "--l",
        "2",
        "--order",
        "0",
        "--out",
        csv.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("B,l,s,j,A_PhI,x2,residual,C_abs,u0_re,u0_im\n"));
    assert_eq!(text.lines().count(), 3);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let cases = v.as_array().unwrap();
    assert_eq!(cases.len(), 2);
    let a = cases[1]["A"].as_f64().unwrap();
    assert!((a + 0.952484).abs() < 1e-5, "{a}");
    assert!(cases[0]["c_abs"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn compare_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path();
    let cfg = write_config(
        base,
        &format!(
            "b = [2.0]\nl = [2]\ns = [0, 1]\norders = [0, 1]\n\n[grid]\nz_min = 1e-4\nz_max = 50.0\nn = 2000\n\n[output]\ncsv = \"{0}/rows.csv\"\njson = \"{0}/rows.json\"\nplot = \"{0}/plot.csv\"\n",
            base.display()
        ),
    );
    let o = cornell(&["compare", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = fs::read_to_string(base.join("rows.csv")).unwrap();
    assert!(rows.starts_with("B,l,s,j,A_N,A_PhI,delta_A,residual,C_abs\n"));
    assert_eq!(rows.lines().count(), 5);
    let plot = fs::read_to_string(base.join("plot.csv")).unwrap();
    assert!(plot.starts_with("B,l,j,s,delta_A\n"));
    assert_eq!(plot.lines().count(), 5);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(base.join("rows.json")).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(stderr(&o).contains("N = 2000"));
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "b = [0.0]\nl = [0]\norders = [0, 1]\n");
    let o = cornell(&[
        "compare", "--config", &cfg, "--order", "1", "--grid", "1000", "--b", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("2,0,0,1,"), "{}", lines[1]);
}

#[test]
fn partial_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    let cfg = write_config(
        dir.path(),
        "b = [0.0]\nl = [0]\ns = [0, 12]\norders = [0]\n\n[tolerances]\nx2_limit = 4.0\n",
    );
    let o = cornell(&[
        "compare",
        "--config",
        &cfg,
        "--grid",
        "1000",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(2).unwrap().ends_with(",,,,"), "{text}");
    assert!(stderr(&o).contains("1 case(s) failed"));
}

#[test]
fn config_errors_exit_one() {
    assert_eq!(cornell(&["phase", "--order", "2"]).status.code(), Some(1));
    assert_eq!(cornell(&["numerov", "--zmin", "0"]).status.code(), Some(1));
    assert_eq!(
        cornell(&["compare", "--config", "/nonexistent/run.toml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(cornell(&["compare", "--bogus"]).status.code(), Some(1));
    assert_eq!(cornell(&[]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "b = [1.0]\nmystery = true\n");
    let o = cornell(&["phase", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("mystery"));
}

#[test]
fn help_exits_zero() {
    let o = cornell(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for sub in ["numerov", "phase", "compare", "rates"] {
        assert!(out.contains(sub));
    }
}

#[test]
fn rates_from_values() {
    let o = cornell(&["rates", "--values", "1.25,1.0625,1.015625,1.00390625"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N_k = {2.00, 2.00}"), "{}", stdout(&o));

    let o = cornell(&["rates", "--values", "3,2,1.5,1.25", "--reference", "1"]);
    assert!(
        stdout(&o).contains("M_k = {1.00, 1.00, 1.00}"),
        "{}",
        stdout(&o)
    );

    let o = cornell(&["rates", "--values", "2.8858,2.3509,2.3380,2.3381,2.3381"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("rate undefined"));
}

#[test]
fn rates_from_meshes() {
    let o = cornell(&[
        "rates", "--b", "2", "--l", "2", "--zmin", "1e-5", "--zmax", "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(
        stdout(&o).contains("N_k = {4.17, 3.61, 4.01, 4.01, 4.00}"),
        "{}",
        stdout(&o)
    );
}

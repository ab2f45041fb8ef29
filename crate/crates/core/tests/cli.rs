use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use minsurf::report::Document;

fn minsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minsurf"))
        .args(args)
        .env("MINSURF_THREADS", "2")
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = minsurf(args);
    assert!(
        out.status.success(),
        "{args:?} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn run_table_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let one = path(dir.path(), "one.json");
    ok(&["run", "--surface", "hump", "--steps", "1", "--quad", "16", "--out", s(&one)]);

    let csv = ok(&["table", s(&one)]);
    let lines: Vec<&str> = csv.split("\r\n").filter(|l| !l.is_empty()).collect();
    assert_eq!(lines[0], "i,A_i,p_ij,nu_i/mu_i^2,t_min");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("0,2.4945"), "{}", lines[1]);
    assert!(lines[1].ends_with(','));

    let two = path(dir.path(), "two.json");
    ok(&["run", "--resume", s(&one), "--steps", "1", "--out", s(&two)]);
    let direct = path(dir.path(), "direct.json");
    ok(&["run", "--surface", "hump", "--steps", "2", "--quad", "16", "--out", s(&direct)]);
    assert_eq!(
        std::fs::read_to_string(&two).unwrap(),
        std::fs::read_to_string(&direct).unwrap()
    );

    let text = ok(&["table", s(&two), "--format", "text"]);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().next().unwrap().trim_start().starts_with("i  "));

    let err = minsurf(&["run", "--resume", s(&one), "--steps", "1", "--quad", "24", "--out", s(&two)]);
    assert!(!err.status.success());
    assert!(String::from_utf8_lossy(&err.stderr).contains("--quad"));
    let err = minsurf(&["run", "--resume", s(&one), "--steps", "1", "--h0-mode", "true-h", "--out", s(&two)]);
    assert!(!err.status.success());
}

#[test]
fn bilinear_table_uses_q_column() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "b.json");
    ok(&["run", "--surface", "bilinear", "--steps", "1", "--out", s(&out)]);
    let csv = ok(&["table", s(&out)]);
    assert!(csv.starts_with("i,A_i,q_ij,"));
    assert!(csv.contains("\r\n1,1.27936,0.111835,58.9258,0.483636\r\n"), "{csv}");
}

#[test]
fn mesh_export() {
    let dir = tempfile::tempdir().unwrap();
    let run = path(dir.path(), "hump.json");
    ok(&["run", "--surface", "hump", "--steps", "1", "--quad", "16", "--out", s(&run)]);

    let obj = ok(&["export-mesh", s(&run), "--res", "2"]);
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).collect::<Vec<_>>(), ["f 1 3 4 2"]);
    assert!(obj.lines().next().unwrap().starts_with('#'));

    let grid = ok(&["export-mesh", s(&run), "--res", "3", "--step", "0", "--format", "grid"]);
    let center: Vec<f64> = grid.lines().nth(5).unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
    assert_eq!(&center[..5], &[0.5, 0.5, 0.5, 0.5, 1.0]);
    assert!((center[5] + 16.0).abs() < 1e-12, "H = {}", center[5]);

    let file = path(dir.path(), "mesh.obj");
    ok(&["export-mesh", s(&run), "--res", "5", "--step", "1", "--out", s(&file)]);
    assert_eq!(std::fs::read_to_string(&file).unwrap().lines().filter(|l| l.starts_with("f ")).count(), 16);

    assert!(!minsurf(&["export-mesh", s(&run), "--res", "1"]).status.success());
    assert!(!minsurf(&["export-mesh", s(&run), "--step", "2"]).status.success());
}

#[test]
fn bilinear_mesh_center() {
    let dir = tempfile::tempdir().unwrap();
    let run = path(dir.path(), "b.json");
    ok(&["run", "--surface", "bilinear", "--steps", "1", "--quad", "8", "--out", s(&run)]);
    let obj = ok(&["export-mesh", s(&run), "--res", "3", "--step", "1"]);
    let v: Vec<f64> = obj
        .lines()
        .filter(|l| l.starts_with("v "))
        .nth(4)
        .unwrap()
        .split(' ')
        .skip(1)
        .map(|x| x.parse().unwrap())
        .collect();
    assert!((v[0] - 0.5).abs() < 1e-15);
}

#[test]
fn curve_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "curve.json");
    ok(&["curve", "--out", s(&out)]);
    let csv = ok(&["table", s(&out)]);
    assert!(csv.starts_with("i,l_i,l_ij,t_min\r\n0,1.7329"), "{csv}");
    assert_eq!(csv.matches("\r\n").count(), 10);
    assert!(csv.contains("\r\n1,1.46525,36.5206,0.132653\r\n"));

    assert!(!minsurf(&["curve", "--steps", "9", "--out", s(&out)]).status.success());
    ok(&["curve", "--steps", "9", "--force", "--out", s(&out)]);
    ok(&["curve", "--steps", "1", "--functional", "curvature", "--out", s(&out)]);
    assert!(ok(&["table", s(&out)]).contains(",0.0841837"));
    assert!(!minsurf(&["export-mesh", s(&out)]).status.success());
}

#[test]
fn custom_surface_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = path(dir.path(), "saddle.json");
    std::fs::write(
        &cfg,
        r#"{"name": "saddle", "components": ["u", "v", "0.3*(u-0.5)*(v-0.5)"],
            "domain": [0, 1, 0, 1], "blend": "u*v*(1-u)*(1-v)", "direction": "normal"}"#,
    )
    .unwrap();
    let out = path(dir.path(), "saddle-run.json");
    ok(&[
        "run", "--surface", "custom", "--config", s(&cfg), "--steps", "1", "--quad", "12",
        "--reference-area", "1.0", "--bracket", "-2,2", "--out", s(&out),
    ]);
    let doc = Document::read(&out).unwrap();
    let r = doc.surface().unwrap();
    assert_eq!(r.spec.entry.reference_area, Some(1.0));
    assert_eq!(r.config.settings.bracket.lo, -2.0);
    assert!(r.records[1].area < r.records[0].area);

    assert!(!minsurf(&["run", "--surface", "custom", "--steps", "1", "--out", s(&out)]).status.success());
    assert!(!minsurf(&["run", "--surface", "hump", "--config", s(&cfg), "--out", s(&out)]).status.success());
}

#[test]
fn argument_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "x.json");
    let bad = |args: &[&str]| {
        let o = minsurf(args);
        assert!(!o.status.success(), "{args:?} should fail");
        String::from_utf8_lossy(&o.stderr).into_owned()
    };
    assert!(bad(&["run", "--surface", "torus", "--out", s(&out)]).contains("torus"));
    bad(&["run", "--surface", "hump", "--steps", "0", "--out", s(&out)]);
    bad(&["run", "--surface", "hump", "--quad", "2", "--out", s(&out)]);
    bad(&["run", "--surface", "hump", "--bracket", "1,-1", "--out", s(&out)]);
    bad(&["run", "--surface", "hump", "--param", "b=2", "--out", s(&out)]);
    bad(&["run", "--surface", "hump", "--reference-area", "-1", "--out", s(&out)]);
    assert!(!out.exists());

    std::fs::write(&out, "{}").unwrap();
    assert!(bad(&["table", s(&out)]).contains("malformed"));
}

#[test]
fn tampered_report_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "c.json");
    ok(&["curve", "--steps", "1", "--out", s(&out)]);
    let text = std::fs::read_to_string(&out).unwrap();
    let edited = text.replacen("\"length\": 1.7", "\"length\": 1.6", 1);
    assert_ne!(text, edited);
    std::fs::write(&out, edited).unwrap();
    assert!(String::from_utf8_lossy(&minsurf(&["table", s(&out)]).stderr).contains("hash mismatch"));
}

#[test]
fn list_names_every_surface() {
    let list = ok(&["list"]);
    for name in ["hemiellipsoid", "hump", "bilinear", "custom"] {
        assert!(list.lines().any(|l| l.starts_with(name)), "{list}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.json");
    let b = path(dir.path(), "b.json");
    ok(&["--threads", "1", "run", "--surface", "hemiellipsoid", "--steps", "1", "--quad", "16", "--out", s(&a)]);
    ok(&["--threads", "3", "run", "--surface", "hemiellipsoid", "--steps", "1", "--quad", "16", "--out", s(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

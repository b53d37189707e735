use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_painleve"))
        .args(args)
        .env_remove("PAINLEVE_DATA_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

#[test]
fn unknown_system_is_a_usage_error() {
    let o = run(&["verify", "--system", "NoSuchSystem"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown system"));
    assert!(o.stdout.is_empty());
    assert_eq!(run(&["verify"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--fibration", "x", "--all"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_reports_pass_for_matrix_system() {
    let o = run(&["verify", "--system", "H_I^Mat", "--system", "H_KSs^{3/2+5/4}", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["sections"][0]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["integrability"]["jacobian_rank"], 2);
    assert_eq!(rows[0]["lax_residual_zero"], true);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn nothing_to_verify_is_unsupported() {
    assert_eq!(run(&["verify", "--system", "H_Gar^{4+1}"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "--system", "H_Gar^{4+1}"]).status.code(), Some(3));
}

#[test]
fn classify_echoes_expected_rows() {
    let o = run(&["classify", "--system", "H_Gar^{9/2}", "--fibration", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# painleve classify seed="));
    assert!(text.contains("VII^*") && text.contains("VIII-4"));
    let o = run(&["classify", "--system", "H_I"]);
    assert!(stdout(&o).contains("II* E_8^(1)"));
}

#[test]
fn user_curves_classify_without_comparison() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("curve.json");
    std::fs::write(&good, r#"{"shape":"g2","coefficients":["0","9","0","9*t1","3*t2","-h","g"],"fibration_variable":"h"}"#).unwrap();
    let o = run(&["classify", "--curve", good.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v["sections"][0]["rows"][0];
    assert_eq!(row["stable"], "I");
    assert!(row.get("agreement").is_none());

    let o = run(&["classify", "--curve", good.to_str().unwrap(), "--system", "H_Gar^{9/2}", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sections"][0]["rows"][0]["agreement"], true);

    let cubic = dir.path().join("cubic.json");
    std::fs::write(&cubic, r#"{"shape":"spectral","variables":["x","y"],"equation":"y^3 - x^5 - h","fibration_variable":"h"}"#).unwrap();
    assert_eq!(run(&["classify", "--curve", cubic.to_str().unwrap()]).status.code(), Some(3));
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{").unwrap();
    assert_eq!(run(&["classify", "--curve", broken.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let a = run(&["table", "--set", "genus2", "--jobs", "1", "--format", "json"]);
    let b = run(&["table", "--set", "genus2", "--jobs", "4", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["classify", "--all", "--jobs", "3", "--seed", "7"]);
    let d = run(&["classify", "--all", "--jobs", "1", "--seed", "7"]);
    assert_eq!(c.stdout, d.stdout);
    assert!(stdout(&c).starts_with("# painleve classify seed=7"));
}

#[test]
fn genus2_table_mirrors_row_counts() {
    let o = run(&["table", "--set", "genus2", "--fibration", "h", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("section,seed,system,Hamiltonian,spectral type,N-U type"));
    assert_eq!(lines.count(), 40);
    let md = stdout(&run(&["table", "--set", "genus2", "--format", "markdown"]));
    assert_eq!(md.matches("\n| H_").count(), 80);
    assert_eq!(md.matches("| computed |").count(), 4);
}

#[test]
fn data_directory_override_is_checksummed() {
    let dir = tempfile::tempdir().unwrap();
    let systems = dir.path().join("systems");
    std::fs::create_dir(&systems).unwrap();
    for f in std::fs::read_dir(data_dir().join("systems")).unwrap() {
        let f = f.unwrap().path();
        std::fs::copy(&f, systems.join(f.file_name().unwrap())).unwrap();
    }
    let tables = std::fs::read_to_string(data_dir().join("expected_tables.json")).unwrap();
    std::fs::write(dir.path().join("expected_tables.json"), &tables).unwrap();
    let with_dir = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_painleve")).args(args).env("PAINLEVE_DATA_DIR", dir.path()).output().unwrap()
    };
    assert_eq!(with_dir(&["table"]).status.code(), Some(0));
    std::fs::write(dir.path().join("expected_tables.json"), tables.replacen("II", "IV", 1)).unwrap();
    let o = with_dir(&["table"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("checksum"));
}

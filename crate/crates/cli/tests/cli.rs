use std::path::{Path, PathBuf};
use std::process::Command;

use qcontext::fixtures;
use qcontext::geometry::GeometryFamily;
use qcontext::{polar_space, QuantumConfiguration};
use qcontext_cli::{run, ConfigurationFile, FileFormat, EXIT_CONTEXTUAL, EXIT_INVALID, EXIT_OK};

fn qcontext(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut full = vec!["qcontext"];
    full.extend_from_slice(args);
    let code = run(full, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn generated(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

fn write_config(dir: &Path, name: &str, config: &QuantumConfiguration) -> String {
    let path = dir.join(name);
    let file = ConfigurationFile::from_configuration(config).unwrap();
    std::fs::write(&path, file.render(FileFormat::from_path(&path)).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_writes_one_file_per_member() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, _) = qcontext(&["generate", "-n", "2", "--family", "lines", "-o", d]);
    assert_eq!(code, EXIT_OK);
    let files = generated(dir.path());
    assert_eq!(files.len(), 1);
    let f = ConfigurationFile::read(&files[0]).unwrap();
    assert_eq!((f.points.len(), f.contexts.len()), (15, 15));

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    qcontext(&["generate", "-n", "3", "--family", "hyperbolic", "-o", d]);
    assert_eq!(generated(dir.path()).len(), 36);

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    qcontext(&[
        "generate", "-n", "2", "--family", "elliptic", "-o", d, "--format", "csv",
    ]);
    let files = generated(dir.path());
    assert_eq!(files.len(), 6);
    for path in files {
        let f = ConfigurationFile::read(&path).unwrap();
        assert_eq!((f.points.len(), f.contexts.len()), (5, 0));
    }
}

#[test]
fn generation_is_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let d = dir.path().to_str().unwrap();
        qcontext(&["generate", "-n", "3", "--family", "perpset", "-o", d, "--format", "csv"]);
    }
    let (fa, fb) = (generated(a.path()), generated(b.path()));
    assert_eq!(fa.len(), 63);
    for (x, y) in fa.iter().zip(&fb) {
        assert_eq!(std::fs::read(x).unwrap(), std::fs::read(y).unwrap());
    }
}

#[test]
fn every_family_round_trips() {
    for n in 2..=3 {
        let space = polar_space(n).unwrap();
        for family in GeometryFamily::ALL {
            for g in space.enumerate_family(family) {
                let config = QuantumConfiguration::from_geometry(&space, &g);
                let file = ConfigurationFile::from_configuration(&config).unwrap();
                for format in [FileFormat::Json, FileFormat::Csv] {
                    let text = file.render(format).unwrap();
                    let back = ConfigurationFile::parse(&text, format).unwrap();
                    assert_eq!(back.to_configuration().unwrap(), config, "{} {format}", config.source());
                    assert_eq!(back.render(format).unwrap(), text);
                }
            }
        }
    }
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let square = write_config(dir.path(), "square.json", &fixtures::mermin_square());
    let (code, out) = qcontext(&["check", &square]);
    assert_eq!(code, EXIT_CONTEXTUAL, "{out}");

    let d = dir.path().to_str().unwrap();
    qcontext(&[
        "generate",
        "-n",
        "3",
        "--family",
        "perpset",
        "--base-point",
        "XYZ",
        "-o",
        d,
    ]);
    let (code, out) = qcontext(&["check", dir.path().join("w3-perpset-XYZ.json").to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("valuation"));
    assert_eq!(
        out.lines().filter(|l| l.ends_with("+1") || l.ends_with("-1")).count(),
        31
    );

    // Z and X do not commute.
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"format":"qcontext-configuration","version":1,"n":1,"points":["Z","X","Y"],"contexts":[[0,1,2]]}"#,
    )
    .unwrap();
    assert_eq!(qcontext(&["check", bad.to_str().unwrap()]).0, EXIT_INVALID);
    let garbage = dir.path().join("garbage.csv");
    std::fs::write(&garbage, "format,qcontext-configuration\nbogus,1\n").unwrap();
    assert_eq!(qcontext(&["check", garbage.to_str().unwrap()]).0, EXIT_INVALID);
    assert_eq!(qcontext(&["check", "/nonexistent/file.json"]).0, EXIT_INVALID);
}

#[test]
fn degree_reports() {
    let dir = tempfile::tempdir().unwrap();
    let doily = write_config(dir.path(), "doily.csv", &fixtures::doily());
    let (code, out) = qcontext(&["degree", &doily, "--threads", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("d = 3\n"), "{out}");
    assert!(out.contains("violated contexts (3)"));

    let d = dir.path().to_str().unwrap();
    qcontext(&[
        "generate",
        "-n",
        "3",
        "--family",
        "elliptic",
        "--base-point",
        "IIY",
        "-o",
        d,
    ]);
    let (_, out) = qcontext(&["degree", dir.path().join("w3-elliptic-IIY.json").to_str().unwrap()]);
    assert!(out.contains("d = 9\n") && out.contains("= 0.4000"), "{out}");

    qcontext(&["generate", "-n", "3", "--family", "lines", "-o", d]);
    let (code, out) = qcontext(&[
        "degree",
        dir.path().join("w3-lines.json").to_str().unwrap(),
        "--max-seconds",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("d ≤ ") && out.contains("(unproven)"), "{out}");
}

#[test]
fn tables_for_four_qubits() {
    let (code, out) = qcontext(&["tables", "-n", "4", "--budget", "1", "--threads", "1"]);
    assert_eq!(code, EXIT_OK);
    for needle in ["C, known=1908 (not computed)", "C(136)", "C(120)", "0(255)", "2295"] {
        assert!(out.contains(needle), "missing {needle}:\n{out}");
    }
}

#[test]
fn tables_csv_rows() {
    let (code, out) = qcontext(&["tables", "-n", "2", "--csv", "--threads", "2"]);
    assert_eq!(code, EXIT_OK);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    let headers = r.headers().unwrap().clone();
    assert_eq!(&headers[0], "family");
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 1 + 1 + 10 + 6 + 15);
    let degree = headers.iter().position(|h| h == "degree").unwrap();
    let hyperbolic: Vec<_> = rows.iter().filter(|r| &r[0] == "hyperbolic").collect();
    assert!(hyperbolic.iter().all(|r| &r[degree] == "1"));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        qcontext(&["generate", "-n", "5", "--family", "lines", "-o", d]).0,
        EXIT_INVALID
    );
    assert_eq!(
        qcontext(&[
            "generate",
            "-n",
            "2",
            "--family",
            "elliptic",
            "--base-point",
            "YY",
            "-o",
            d
        ])
        .0,
        EXIT_INVALID
    );
    assert_eq!(
        qcontext(&["generate", "-n", "2", "--family", "cubic", "-o", d]).0,
        EXIT_INVALID
    );
    assert_eq!(qcontext(&["tables", "-n", "1..3"]).0, EXIT_INVALID);
    assert_eq!(qcontext(&["tables", "-n", "5"]).0, EXIT_INVALID);
    assert!(generated(dir.path()).is_empty());
}

#[test]
fn binary_exit_code_and_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let square = write_config(dir.path(), "square.json", &fixtures::mermin_square());
    let status = Command::new(env!("CARGO_BIN_EXE_qcontext"))
        .args(["check", &square])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_CONTEXTUAL));
    let output = Command::new(env!("CARGO_BIN_EXE_qcontext"))
        .args(["degree", &square])
        .env("CONTEXTUALITY_THREADS", "3")
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("d = 1"));
}

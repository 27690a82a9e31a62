use std::path::Path;
use std::process::{Command, Output};

use rmqkit::dataset;
use rmqkit::scan_min;

fn rmqkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmqkit"))
        .args(args)
        .env_remove("RMQKIT_SEED")
        .output()
        .expect("failed to spawn rmqkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &Path, name: &str, n: usize, extra: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let n = n.to_string();
    let mut args = vec!["gen", "--n", &n, "--out", &path];
    args.extend_from_slice(extra);
    let o = rmqkit(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn gen_constant() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "c.txt", 4, &["--dist", "constant"]);
    let values = dataset::load(&path).unwrap();
    assert_eq!(values.len(), 4);
    assert!(values.iter().all(|&v| v == values[0]));
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["text", "bin"] {
        let a = gen(dir.path(), "a", 500, &["--seed", "9", "--format", format]);
        let a = std::fs::read(a).unwrap();
        let b = gen(dir.path(), "b", 500, &["--seed", "9", "--format", format]);
        assert_eq!(a, std::fs::read(b).unwrap());
    }
}

#[test]
fn seed_falls_back_to_environment() {
    let dir = tempfile::tempdir().unwrap();
    let flag = gen(dir.path(), "flag", 50, &["--seed", "77"]);
    let env_path = dir.path().join("env");
    let o = Command::new(env!("CARGO_BIN_EXE_rmqkit"))
        .args(["gen", "--n", "50", "--out"])
        .arg(&env_path)
        .env("RMQKIT_SEED", "77")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(
        std::fs::read(flag).unwrap(),
        std::fs::read(env_path).unwrap()
    );
}

#[test]
fn binary_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(
        dir.path(),
        "v.bin",
        300,
        &["--format", "bin", "--seed", "4"],
    );
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(&bytes[..4], b"RMQ1");
    assert_eq!(bytes.len(), 4 + 8 + 300 * 8);
    let values = dataset::load(&path).unwrap();
    let expect = dataset::generate(
        300,
        dataset::Distribution::Uniform,
        4,
        rmqkit::Universe::default(),
    )
    .unwrap();
    assert_eq!(values, expect);
}

#[test]
fn gen_rejects_empty_and_unwritable() {
    let o = rmqkit(&["gen", "--n", "0", "--out", "/tmp/never-written"]);
    assert!(!o.status.success());
    let o = rmqkit(&["gen", "--n", "3", "--out", "/nonexistent-dir/x.txt"]);
    assert!(!o.status.success());
}

#[test]
fn verify_all_impls_exhaustive() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 256, &["--seed", "1"]);
    let o = rmqkit(&["verify", "--input", &path]);
    assert!(o.status.success());
    let out = stdout(&o);
    for name in ["sqrt", "level", "packed", "general", "sparse"] {
        assert!(
            out.contains(&format!("{name}: ok (32896 queries)")),
            "{out}"
        );
    }
}

#[test]
fn verify_random_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.bin", 1000, &["--format", "bin"]);
    let o = rmqkit(&[
        "verify",
        "--input",
        &path,
        "--mode",
        "random",
        "--queries",
        "5000",
        "--seed",
        "3",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("general: ok (5000 queries)"));
    assert!(out.contains("packed: skipped"));
}

#[test]
fn verify_reports_injected_fault() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 256, &[]);
    let o = rmqkit(&[
        "verify",
        "--input",
        &path,
        "--impls",
        "level,packed",
        "--inject-fault",
        "span-table",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let line = out
        .lines()
        .find(|l| l.starts_with("mismatch: impl=level"))
        .expect("mismatch line");
    let field = |key: &str| -> i64 {
        line.split_whitespace()
            .find_map(|t| t.strip_prefix(key))
            .unwrap()
            .parse()
            .unwrap()
    };
    let values = dataset::load(&path).unwrap();
    let (i, j) = (field("i=") as usize, field("j=") as usize);
    assert_eq!(field("want="), scan_min(&values, i, j).unwrap());
    assert_ne!(field("got="), field("want="));
    assert!(out.contains("packed: ok"));
}

#[test]
fn verify_skips_non_tower_level() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 100, &[]);
    let o = rmqkit(&["verify", "--input", &path, "--impls", "level"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("level: skipped"));
}

#[test]
fn verify_input_errors() {
    let o = rmqkit(&["verify", "--input", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 16, &[]);
    let o = rmqkit(&["verify", "--input", &path, "--impls", "quadtree"]);
    assert!(!o.status.success());
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 65536, &["--format", "bin"]);
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    for out in [&csv_a, &csv_b] {
        let o = Command::new(env!("CARGO_BIN_EXE_rmqkit"))
            .args([
                "bench",
                "--input",
                &path,
                "--queries",
                "20000",
                "--seed",
                "5",
                "--out",
            ])
            .arg(out)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let stderr = String::from_utf8_lossy(&o.stderr).into_owned();
        let sums: Vec<&str> = stderr
            .lines()
            .filter_map(|l| l.split("checksum ").nth(1))
            .collect();
        assert_eq!(sums.len(), 5);
        assert!(sums.windows(2).all(|w| w[0] == w[1]));
    }
    let a = std::fs::read_to_string(&csv_a).unwrap();
    let b = std::fs::read_to_string(&csv_b).unwrap();
    let mut lines = a.lines();
    assert_eq!(
        lines.next(),
        Some("impl,n,build_ms,index_words,queries,total_ns,ns_per_query")
    );
    // identical apart from the timing columns
    let stable = |s: &str| -> Vec<String> {
        s.lines()
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                format!("{},{},{},{}", f[0], f[1], f[3], f[4])
            })
            .collect()
    };
    assert_eq!(stable(&a), stable(&b));
    assert_eq!(a.lines().count(), 6);
}

#[test]
fn query_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 500, &["--seed", "12"]);
    let values = dataset::load(&path).unwrap();

    let o = rmqkit(&["query", "--input", &path, "--i", "7", "--j", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), format!("min={}\npos=7\n", values[7]));

    let o = rmqkit(&[
        "query", "--input", &path, "--i", "0", "--j", "499", "--impl", "sqrt",
    ]);
    assert_eq!(
        stdout(&o),
        format!("min={}\n", values.iter().min().unwrap())
    );

    for (i, j) in [(3, 250), (100, 101), (17, 498)] {
        let (i_s, j_s) = (i.to_string(), j.to_string());
        let o = rmqkit(&["query", "--input", &path, "--i", &i_s, "--j", &j_s]);
        let want = scan_min(&values, i, j).unwrap();
        assert!(stdout(&o).starts_with(&format!("min={want}\n")));
    }

    let o = rmqkit(&["query", "--input", &path, "--i", "9", "--j", "500"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid range"));

    let o = rmqkit(&[
        "query", "--input", &path, "--i", "0", "--j", "1", "--impl", "packed",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn space_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "v.txt", 65536, &["--format", "bin"]);
    let o = rmqkit(&["space", "--input", &path]);
    assert!(o.status.success());
    let out = stdout(&o);
    let words = |name: &str| -> usize {
        out.lines()
            .find(|l| l.starts_with(&format!("{name}: ")) && l.contains("index words"))
            .and_then(|l| l.split_whitespace().nth(1))
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!(words("packed") <= 8 * 65536);
    assert!(words("level") > 4 * words("packed"));
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taftvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("taftvar-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn induced_module_has_one_point() {
    let dir = scratch("induce");
    let f = dir.join("induced_10.json");
    let f = f.to_str().unwrap();
    assert!(bin(&["mod", "induce", "--point", "1:0", "--out", f])
        .status
        .success());
    let o = bin(&["variety", "rank", "--module", f]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1:0"));
    let o = bin(&["variety", "compare", "--module", f]);
    assert!(stdout(&o).contains("agree=true"));
}

#[test]
fn ext_dims_of_k() {
    let dir = scratch("ext");
    let k = dir.join("k.json");
    let k = k.to_str().unwrap();
    assert!(bin(&["mod", "standard", "--name", "k", "--out", k])
        .status
        .success());
    let o = bin(&["ext", "dims", "--source", k, "--target", k, "--upto", "8"]);
    assert_eq!(stdout(&o).lines().next(), Some("1 0 3 0 5 0 7 0 9"));
}

#[test]
fn suite_reports_are_deterministic() {
    let a = bin(&["suite", "tensor", "--trials", "100", "--seed", "7"]);
    let b = bin(&["suite", "tensor", "--trials", "100", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().last(), Some("PASS trials=100"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["suite", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["variety", "rank"]).status.code(), Some(2));
    let dir = scratch("codes");
    let bad = dir.join("bad.json");
    let km = r#"{"p": 17, "family": "d-taft", "n": 2, "dim": 1,
      "generators": {"x": [[0]], "X": [[0]], "g": [[G]], "G": [[16]]}}"#;
    std::fs::write(&bad, km.replace("[[G]]", "[[17]]")).unwrap();
    let o = bin(&["mod", "check", "--module", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::write(&bad, km.replace("[[G]]", "[[3]]")).unwrap();
    let o = bin(&["mod", "check", "--module", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&bad, km.replace("[[G]]", "[[16]]")).unwrap();
    let o = bin(&["mod", "check", "--module", bad.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("top k-=1"));
}

#[test]
fn random_module_round_trip() {
    let dir = scratch("random");
    let f = dir.join("r.json");
    let f = f.to_str().unwrap();
    assert!(
        bin(&["random", "--dim-hint", "1,2", "--seed", "3", "--out", f])
            .status
            .success()
    );
    let o = bin(&["mod", "check", "--module", f]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = bin(&["alg", "build", "--n", "2"]);
    assert!(stdout(&o).contains("dim=16"));
    assert!(stdout(&o).contains("radical_dim=6"));
}

use std::process::{Command, Output};

use macdonald::exact::{Field, SpecMap};
use macdonald::poly::MultiPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdonald"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_p10() {
    let o = run(&[
        "compute", "--family", "P", "--index", "1,0", "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1 + x2\n");
}

#[test]
fn shifted_m01_vanishes_at_spectral_zero() {
    let o = run(&["compute", "--family", "M", "--index", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x2") && text.trim() != "x2", "{text}");
    let o = run(&["eval", "--family", "M", "--index", "0,1", "--at", "t,1"]);
    assert_eq!(stdout(&o), "0\n");
    let o = run(&["eval", "--family", "M", "--index", "0,1", "--at", "t,q"]);
    assert_ne!(stdout(&o), "0\n");
}

#[test]
fn clustered_p2200_at_q_t_minus_3() {
    let o = run(&[
        "eval",
        "--family",
        "P",
        "--index",
        "2,2,0,0",
        "--spec",
        "q=z^3,t=z^-1",
        "--at",
        "x1,x2,y*t,y",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // ∏_{i=1,2} (x_i - y/t)(x_i - t^2 y)
    let map = SpecMap::parse("q=z^3,t=z^-1").unwrap();
    let t = map.t();
    let y = MultiPoly::var(3, 2);
    let mut rhs = MultiPoly::one(3);
    for i in 0..2 {
        let x = MultiPoly::var(3, i);
        rhs = rhs
            .mul(&x.sub(&y.scale(&t.inverse().unwrap())))
            .mul(&x.sub(&y.scale(&t.times(&t))));
    }
    let names = ["x1", "x2", "y"].map(String::from);
    assert_eq!(stdout(&o), format!("{}\n", rhs.to_text_named(&names)));
}

#[test]
fn exit_codes() {
    let o = run(&["compute", "--family", "Q", "--index", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = run(&["compute", "--family", "P", "--index", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--family", "P", "--index", "1,0", "--at", "x1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "compute", "--family", "P", "--index", "1,0", "--spec", "q=z^",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["compute", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    // t = 1/q is a pole of P_{4400}
    let o = run(&[
        "compute",
        "--family",
        "P",
        "--index",
        "4,4,0,0",
        "--spec",
        "q=z,t=z^-1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("denominator"));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify", "--suite", "hecke", "--N", "4", "--seed", "7", "--count", "10",
    ];
    let a = run(&args);
    let b = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["elapsed_ms"], 0);
    }
}

#[test]
fn verify_example_2() {
    let o = run(&[
        "verify",
        "--suite",
        "clustering-sym",
        "--m",
        "3",
        "--k",
        "1",
        "--N",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""map":"q=z,t=w[2]*z^-1"},"status":"pass""#));
    assert!(text.contains(r#""check":"negative control","example":2"#));
}

#[test]
fn verify_small_appendix_and_staircase() {
    let o = run(&[
        "verify",
        "--suite",
        "appendixC",
        "--N",
        "4",
        "--k",
        "2",
        "--m",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "verify",
        "--suite",
        "staircase-fixtures",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("REFUTED"));
}

#[test]
fn specializations_and_expand() {
    let o = run(&["specializations", "--m", "3", "--k", "1", "--N", "2"]);
    assert_eq!(stdout(&o), "locus: 1 + q*t\nq=z,t=w[2]*z^-1\n");
    let o = run(&["expand", "--index", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("P[1,0]: 1\n"), "{}", stdout(&o));
}

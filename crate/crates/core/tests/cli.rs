use std::fs;
use std::process::{Command, Output};

use proptest::prelude::*;
use tempfile::TempDir;

use spine_linial::cli::{parse_graph, render_graph};
use spine_linial::harness::{gen_instance, GenParams, InstanceKind};
use spine_linial::Certificate;

const C5: &str = "n 5\na 0 1\na 1 2\na 2 3\na 3 4\na 4 0\n";

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spine-linial")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn certify_then_verify_in_separate_processes() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c5.txt", C5);
    let cert = dir.path().join("cert.json").to_string_lossy().into_owned();
    let o = bin(&["certify", "-i", &graph, "-k", "1", "-o", &cert]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let parsed = Certificate::from_json(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(parsed.case_tag.as_str(), "long-path");
    assert_eq!((parsed.k_norm, parsed.weight), (1, 1));
    assert_eq!(parsed.spine_source.as_deref(), Some("found"));

    let o = bin(&["verify", "-i", &graph, "-c", &cert]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "ok");
}

#[test]
fn tampered_certificate_fails_verification() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c5.txt", C5);
    let o = bin(&["certify", "-i", &graph, "-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let mut json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    json["weight"] = serde_json::json!(json["weight"].as_u64().unwrap() + 1);
    json["coloring"][0].as_array_mut().unwrap().push(serde_json::json!(1));
    let cert = write(&dir, "bad.json", &json.to_string());
    let o = bin(&["verify", "-i", &graph, "-c", &cert]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation"));
}

#[test]
fn embedded_spine_is_used() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "g.txt", "n 3\na 0 1\nx 0 1\ny 2\n");
    let o = bin(&["certify", "-i", &graph, "-k", "1"]);
    let cert = Certificate::from_json(&stdout(&o)).unwrap();
    assert_eq!(cert.spine_source.as_deref(), Some("given"));
}

#[test]
fn certify_without_spine_exits_2() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "g.txt", "n 4\na 0 1\na 2 3\n");
    assert_eq!(bin(&["certify", "-i", &graph, "-k", "1"]).status.code(), Some(2));
}

#[test]
fn oracle_values_on_c5() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c5.txt", C5);
    for (q, k, want) in [("alpha", "1", "2"), ("pi", "1", "1"), ("pi", "2", "2"), ("chi", "1", "3"), ("lambda", "1", "5")] {
        let o = bin(&["oracle", "-i", &graph, "-k", k, "-q", q]);
        assert_eq!(stdout(&o).trim(), want, "{q} k={k}");
    }
}

#[test]
fn recognize_prints_partition_or_none() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", C5);
    assert_eq!(stdout(&bin(&["recognize", "-i", &c5])), "x 1 2 3 4\ny 0\n");
    let two = write(&dir, "two.txt", "n 4\na 0 1\na 2 3\n");
    assert_eq!(stdout(&bin(&["recognize", "-i", &two])).trim(), "none");
}

#[test]
fn bad_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "loop.txt", "n 2\na 0 0\n");
    let o = bin(&["oracle", "-i", &graph, "-q", "pi"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(bin(&["certify"]).status.code(), Some(2));
}

#[test]
fn gen_then_fuzz() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.txt").to_string_lossy().into_owned();
    let o = bin(&["gen", "--kind", "spine", "--seed", "3", "--max-x", "4", "--max-y", "3", "-o", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(parse_graph(&fs::read_to_string(&out).unwrap()).unwrap().spine.is_some());

    let log = dir.path().join("log.jsonl").to_string_lossy().into_owned();
    let args = ["fuzz", "--kind", "spine", "--count", "20", "--seed", "1", "--max-x", "4", "--max-y", "3", "--log", &log];
    let o = bin(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let first = fs::read_to_string(&log).unwrap();
    assert!(first.lines().next().unwrap().starts_with("{\"header\""));
    bin(&args);
    assert_eq!(first, fs::read_to_string(&log).unwrap());

    let o = bin(&["fuzz", "--kind", "general", "--count", "10", "--seed", "1", "--n", "5", "--check", "linial", "--check", "dual"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_parse_round_trip(seed in any::<u64>(), density in 0.0f64..=1.0, spine in any::<bool>()) {
        let params = if spine {
            GenParams::spine(8, 6, density, seed)
        } else {
            GenParams::order(InstanceKind::General, 0, 12, density, seed)
        };
        let inst = gen_instance(&params).unwrap();
        let text = render_graph(&inst.digraph, inst.spine.as_ref());
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.digraph.arcs(), inst.digraph.arcs());
        prop_assert_eq!(back.spine, inst.spine);
    }
}

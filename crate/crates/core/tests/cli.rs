use std::io::Write;
use std::process::{Command, Output, Stdio};

use gallai::grstar::ExtendedColoring;
use gallai::{triangle_census, Coloring};

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gallai_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Splits search-style output into the JSON object and the trailing `.gec`.
fn json_then_text(s: &str) -> (serde_json::Value, String) {
    let end = s.find("\n}").expect("json object") + 2;
    (serde_json::from_str(&s[..end]).unwrap(), s[end..].trim_start().to_string())
}

#[test]
fn formulas() {
    assert_eq!(stdout(&gallai(&["formula", "goodman-m2", "7"])).trim(), "4");
    assert_eq!(stdout(&gallai(&["formula", "gr-k3", "5"])).trim(), "51");
    assert_eq!(stdout(&gallai(&["formula", "gr-k4e", "4", "4"])).trim(), "290");
    assert_eq!(stdout(&gallai(&["formula", "turan", "30", "5"])).trim(), "360");
    assert_eq!(stdout(&gallai(&["formula", "m3", "12"])).trim(), "2 asymptotic-only");
    assert!(!gallai(&["formula", "gr-k3", "0"]).status.success());
    assert!(!gallai(&["formula", "nope", "1"]).status.success());
}

#[test]
fn construct_round_trips_and_counts() {
    let text = stdout(&gallai(&["construct", "gr-k3", "4"]));
    let c: Coloring = text.parse().unwrap();
    assert_eq!(c.n(), 25);
    let report: serde_json::Value = serde_json::from_str(&stdout(&gallai_stdin(&["count", "-"], &text))).unwrap();
    assert_eq!(report["schema"], "1");
    assert_eq!(report["rainbow"], 0);
    assert_eq!(report["mono"]["1"], 0);
    assert_eq!(report["protectedEdges"], 300);
    assert!(report.get("nimStarEdges").is_none());

    let dir = std::env::temp_dir().join(format!("gallai-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nim.gec");
    let p = path.to_str().unwrap();
    stdout(&gallai(&["construct", "nim-star", "20", "3", "3", "--seed", "4", "-o", p]));
    let again = stdout(&gallai(&["construct", "nim-star", "20", "3", "3", "--seed", "4"]));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), again);
    let report: serde_json::Value = serde_json::from_str(&stdout(&gallai(&["count", p, "--h", "3"]))).unwrap();
    assert!(report["nimStarEdges"]["edges"].as_u64().unwrap() >= 40);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_family_builds() {
    for args in [
        vec!["pentagon"],
        vec!["paley17", "3"],
        vec!["gr-k4e", "2", "1"],
        vec!["multiplicity", "3", "12"],
        vec!["f-lower", "20", "3"],
        vec!["goodman2", "9"],
    ] {
        let mut full = vec!["construct"];
        full.extend(args.iter());
        let c: Coloring = stdout(&gallai(&full)).parse().unwrap();
        assert_eq!(triangle_census(&c).rainbow, 0, "{args:?}");
    }
    assert!(!gallai(&["construct", "nim-star", "10", "3", "3"]).status.success());
}

#[test]
fn partition_output() {
    let pentagon = stdout(&gallai(&["construct", "pentagon"]));
    let blown = stdout(&gallai(&["construct", "gr-k3", "4"]));
    let out = stdout(&gallai_stdin(&["partition", "-"], &pentagon));
    assert!(out.starts_with("parts 5\n1\n2\n"));
    assert!(out.contains("between-colors 1 2\n"));
    let out = stdout(&gallai_stdin(&["partition", "-", "--minimize"], &blown));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("parts 5"));
    assert_eq!(lines.next(), Some("1 2 3 4 5"));
    let reduced: Coloring = out.split("reduced\n").nth(1).unwrap().parse().unwrap();
    assert_eq!(reduced.n(), 5);

    let rainbow = "3 3\n1 2 1\n1 3 2\n2 3 3\n";
    let o = gallai_stdin(&["partition", "-"], rainbow);
    assert!(!o.status.success());
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn grstar_verbs() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/data/figure1.gecx");
    let report: serde_json::Value = serde_json::from_str(&stdout(&gallai(&["grstar-check", fixture]))).unwrap();
    assert_eq!(report["passes"], true);
    assert_eq!(report["n"], 10);

    let clash = "2 2\nSINGLETONS\n1 1\n2 2\n1 2 1\n";
    let report: serde_json::Value = serde_json::from_str(&stdout(&gallai_stdin(&["grstar-check", "-"], clash))).unwrap();
    assert_eq!(report["singletonClash"], serde_json::json!([1, 2]));
    assert_eq!(report["passes"], false);

    let (json, rest) = json_then_text(&stdout(&gallai(&["grstar-search", "5", "3"])));
    assert_eq!(json["exists"], true);
    let w: ExtendedColoring = rest.parse().unwrap();
    assert_eq!(w.n(), 5);
    let (json, rest) = json_then_text(&stdout(&gallai(&["grstar-search", "6", "3"])));
    assert_eq!(json["exists"], false);
    assert!(rest.is_empty());
}

#[test]
fn search_verb() {
    let (json, rest) = json_then_text(&stdout(&gallai(&["search", "min-mono", "6", "2", "--jobs", "2"])));
    assert_eq!(json["schema"], "1");
    assert_eq!(json["objective"], "min-mono-triangles");
    assert_eq!(json["value"], 2);
    assert_eq!(json["exhaustive"], true);
    let w: Coloring = rest.parse().unwrap();
    assert_eq!(triangle_census(&w).mono_total(), 2);

    let (json, _) = json_then_text(&stdout(&gallai(&["search", "avoid", "9", "2", "--targets", "k4e,k3"])));
    assert_eq!(json["value"], 0);
    let (json, _) = json_then_text(&stdout(&gallai(&["search", "avoid", "5", "3", "--gallai"])));
    assert_eq!(json["value"], 1);
    let (json, _) = json_then_text(&stdout(&gallai(&["search", "max-protected", "4", "2"])));
    assert_eq!(json["value"], 6);
    let (json, _) = json_then_text(&stdout(&gallai(&["search", "min-mono", "7", "2", "--budget", "5"])));
    assert_eq!(json["exhaustive"], false);
    assert!(!gallai(&["search", "bogus", "4", "2"]).status.success());
}

#[test]
fn verify_suite_fast() {
    let o = gallai(&["verify-suite", "--level", "fast"]);
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    let report: serde_json::Value =
        serde_json::from_str(&stdout(&gallai(&["verify-suite", "--level", "fast", "--json"]))).unwrap();
    assert_eq!(report["schema"], "1");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

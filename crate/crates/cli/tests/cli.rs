use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use weyl_dixmier::gwa::{from_json, parse};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-dixmier"))
        .args(args)
        .env_remove("WEYL_DIXMIER_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn analyze_hx() {
    let o = run(&["analyze", "H*X"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("class: \u{0394}\u{2082}"), "{text}");
    assert!(text.contains("C(u, A1): K[u]"), "{text}");
    for (k, e) in [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (6, 3)] {
        assert!(text.contains(&format!("I_{k} = u^{e} K[u]")), "{text}");
    }

    let j = json(&run(&["analyze", "H*X", "--format", "json"]));
    assert_eq!(j["class"], "Delta2");
    assert_eq!(j["gl_dim"], "2");
    assert_eq!(j["simple"], false);
    let exps: Vec<u64> = j["ideals"].as_array().unwrap().iter().map(|i| i["exp"].as_u64().unwrap()).collect();
    assert_eq!(exps, vec![1, 1, 2, 2, 3, 3]);
    let back = from_json(&j["element"].to_string()).unwrap();
    assert_eq!(back, parse("H*X").unwrap());
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "H^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "\u{0394}\u{2085}");
    assert_eq!(json(&run(&["classify", "Y", "--format", "json"]))["class"], "Delta1");
    assert_eq!(stdout(&run(&["classify", "H", "--format", "latex"])).trim(), "$\\Delta_3$");
}

#[test]
fn nstructure_and_centralizer() {
    let j = json(&run(&["nstructure", "H*(H-3)*X^2", "--format", "json"]));
    assert_eq!(j["mu_list"], serde_json::json!([0, 3]));
    assert_eq!(j["g"], serde_json::json!([["-1/1", "1/1"], ["1/1"]]));
    let text = stdout(&run(&["centralizer", "H*(H-3)*X^2"]));
    assert!(text.contains("C(u, A1): K[u] + K[u] v^3"), "{text}");
    assert!(text.contains("v^3 = (H^3 - 6*H^2 + 8*H)*X^3"), "{text}");
}

#[test]
fn ideals_table_and_problem5() {
    let o = run(&["ideals", "H^2*X", "--k", "6", "--imax", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    let exps: Vec<u64> = j["ideals"].as_array().unwrap().iter().map(|i| i["exp"].as_u64().unwrap()).collect();
    assert_eq!(exps, vec![1, 2, 2, 3, 4, 4]);
    assert_eq!(j["problem5"]["negative_answer"], true);
    assert_eq!(j["problem5"]["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn eval_and_eigen() {
    let o = run(&["eval", "X*Y"]);
    assert_eq!(stdout(&o).lines().next(), Some("(H - 1)"));
    let j = json(&run(&["eval", "X + Y", "--format", "json"]));
    assert_eq!(j["homogeneous"], false);
    assert_eq!(from_json(&j["element"].to_string()).unwrap(), parse("X + Y").unwrap());
    let text = stdout(&run(&["eigen", "H"]));
    assert!(text.contains("eigenvalues: 1*Z"), "{text}");
    assert!(stdout(&run(&["eigen", "H^2"])).contains("eigenvalues: {0}"));
}

#[test]
fn exit_codes() {
    let o = run(&["classify", "2H"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("syntax error"));

    let o = run(&["analyze", "X + Y"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("not homogeneous"), "{err}");
    assert!(err.contains("grading -1") && err.contains("grading 1"), "{err}");

    assert_eq!(run(&["ideals", "X^2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "7"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "X^-1"]).status.code(), Some(2));
    assert_eq!(run(&["nstructure", "H^2"]).status.code(), Some(2));
}

#[test]
fn inconclusive_verify_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("wd.conf");
    fs::write(&cfg, "max_growth = 0\n").unwrap();
    let o = run(&["verify", "H^2*X", "--k", "0", "--box", "3,4", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("inconclusive"));
}

#[test]
fn verify_hx_saturated() {
    let o = run(&["verify", "H*X", "--k", "4", "--box", "8,12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    let checks = j["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
    for c in checks {
        assert_eq!(c["verdict"], "pass", "{c}");
        assert_eq!(c["saturated"], true, "{c}");
        for key in ["claim", "closed_form", "oracle", "box"] {
            assert!(!c[key].is_null(), "{key} missing in {c}");
        }
    }
}

#[test]
fn config_file_and_suite() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("suite.txt"), "# small suite\nX\nH^2\n").unwrap();
    let cfg = dir.path().join("wd.conf");
    fs::write(&cfg, "box = 2,3\nk = 1\nsuite = suite.txt\nformat = json\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_weyl-dixmier"))
        .arg("verify")
        .env("WEYL_DIXMIER_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = json(&o);
    let elements: Vec<&str> = j["checks"].as_array().unwrap().iter().map(|c| c["element"].as_str().unwrap()).collect();
    assert!(elements.contains(&"X") && elements.contains(&"H^2"), "{elements:?}");
    assert_eq!(j["pass"].as_u64(), Some(elements.len() as u64));

    // flags win over the config file
    let o = run(&["classify", "X", "--config", cfg.to_str().unwrap(), "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "\u{0394}\u{2081}");

    fs::write(&cfg, "colour = red\n").unwrap();
    assert_eq!(run(&["classify", "X", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "H*(H-3)*X^2", "Y", "--k", "2", "--box", "3,4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&run(&["analyze", "Y^2"])), stdout(&run(&["analyze", "Y^2"])));
}

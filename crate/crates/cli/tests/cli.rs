use ene_cli::render::value_expr;
use ene_cli::run;
use ene_cli::syntax::parse;
use ene_cli::value::{evaluate, expand};
use ene::series::SeriesWindow;

fn corpus() -> Vec<&'static str> {
    include_str!("corpus/expressions.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .collect()
}

fn cli(args: &[&str]) -> ene_cli::Output {
    run(std::iter::once("ene-cli").chain(args.iter().copied()))
}

#[test]
fn parse_render_parse_is_idempotent() {
    let exprs = corpus();
    assert_eq!(exprs.len(), 50);
    for src in exprs {
        let e = parse(src).unwrap_or_else(|err| panic!("{src}: {err}"));
        let shown = e.to_string();
        let again = parse(&shown).unwrap_or_else(|err| panic!("{src} → {shown}: {err}"));
        assert_eq!(again, e, "{src} → {shown}");
        assert_eq!(again.to_string(), shown);
    }
}

#[test]
fn rendered_values_evaluate_to_the_same_function() {
    let w = SeriesWindow::order(8);
    for src in corpus() {
        let v = evaluate(&parse(src).unwrap(), w).unwrap_or_else(|e| panic!("{src}: {e}"));
        let Some(e) = value_expr(&v) else { continue };
        let back = evaluate(&parse(&e.to_string()).unwrap(), w).unwrap();
        assert_eq!(expand(&back, w).unwrap(), expand(&v, w).unwrap(), "{src} → {e}");
    }
}

#[test]
fn euler_table_golden() {
    let t = cli(&["euler-table", "7"]);
    assert_eq!(t.status, 0);
    assert_eq!(t.stdout, include_str!("golden/euler_table_7.txt"));
    let j = cli(&["euler-table", "7", "--format", "json"]);
    assert_eq!(j.stdout, include_str!("golden/euler_table_7.json"));
    let parsed: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(parsed["rows"][6]["p"][2], "302");
}

#[test]
fn ene_examples() {
    let o = cli(&["eval", "ene(1 - z/2, 1 - z/3)", "--order", "8"]);
    assert_eq!(o.status, 0);
    assert_eq!(o.stdout, "1 - z/6\nseries: 1 - (1/6)z + O(z^9)\n");
    let o = cli(&["ene", "exp(R(1, 1))", "exp(-Li(2))", "--order", "8"]);
    assert_eq!(o.stdout.lines().next(), Some("1 - z"));
}

#[test]
fn series_output() {
    let o = cli(&["series", "exp(z)", "--order", "4"]);
    assert_eq!(o.stdout, "1 + z + (1/2)z^2 + (1/6)z^3 + (1/24)z^4 + O(z^5)\n");
    let o = cli(&["series", "exp(1/z)", "--order", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["normalized"], true);
    assert!(!v["principal_exponent"].is_null());
}

#[test]
fn exit_codes() {
    let o = cli(&["eval", "1 -"]);
    assert_eq!(o.status, 2);
    assert!(o.stderr.contains("column 4"), "{}", o.stderr);
    assert_eq!(cli(&["eval", "foo(z)"]).status, 2);
    assert_eq!(cli(&["eval", "R(1/2, 1)"]).status, 2);
    assert_eq!(cli(&["verify", "nonsense"]).status, 2);
    assert_eq!(cli(&["verify", "polylog", "--order", "4"]).status, 2);
    assert_eq!(cli(&["frobnicate"]).status, 2);
    assert_eq!(cli(&["--help"]).status, 0);
    assert_eq!(cli(&["verify", "polylog"]).status, 0);
}

#[test]
fn injected_fault_fails_bridge() {
    let o = cli(&["verify", "bridge", "--order", "8", "--inject-fault", "bridge-sign-flip", "--format", "json"]);
    assert_eq!(o.status, 1);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["checks"][0]["counterexample"].is_string());
}

#[test]
fn verify_reports_are_deterministic() {
    let a = cli(&["verify", "euler", "--max-k", "10", "--format", "json"]);
    let b = cli(&["verify", "euler", "--max-k", "10", "--format", "json"]);
    assert_eq!(a.status, 0);
    assert_eq!(a, b);
    let c = cli(&["verify", "limits", "--format", "json"]);
    let d = std::thread::spawn(|| cli(&["verify", "limits", "--format", "json"])).join().unwrap();
    assert_eq!(c, d);
}

#[test]
fn limit_report() {
    let args = ["limit", "--expr", "exp(z)", "--kmax", "64", "--grid", "circle:0,0,1,32", "--format", "json"];
    let o = cli(&args);
    assert_eq!(o.status, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    let decay = v["decay_exponent"].as_f64().unwrap();
    assert!((0.7..1.2).contains(&decay), "{decay}");
    assert_eq!(cli(&args), o);

    // the grid passes through the singularity at 1
    let o = cli(&["limit", "--expr", "exp(1/(1 - z))", "--kmax", "8", "--grid", "circle:0,0,1,16"]);
    assert_eq!(o.status, 2);
    let o = cli(&["limit", "--expr", "exp(Li(2))", "--kmax", "8", "--grid", "circle:0,0,1,16"]);
    assert_eq!(o.status, 2);
}

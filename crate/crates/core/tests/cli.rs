use qmzv::cli::{run, Outcome};
use serde_json::Value;

fn qmzv(args: &str) -> Outcome {
    run(std::iter::once("qmzv").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = qmzv(&format!("{args} --format json"));
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn value_every_method_agrees() {
    for method in ["brute", "product", "stirling", "bell", "det", "closed"] {
        let v = json(&format!("value --n 9 --m 3 --s 1 --method {method}"));
        assert_eq!(v["value"], "14", "{method}");
        assert_eq!(v["method"], method);
    }
    assert_eq!(json("value --n 7 --m 2 --s 2")["value"], "1");
    assert_eq!(json("value --n 5 --m 0 --s 4 --method closed")["value"], "1");
}

#[test]
fn value_text_and_csv() {
    let out = qmzv("value --n 7 --m 2 --s 3");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("17/7"), "{}", out.stdout);
    let out = qmzv("value --n 7 --m 2 --s 3 --format csv --approx");
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("n,m,s,method,value,approx"));
    assert!(lines.next().unwrap().starts_with("7,2,3,product,17/7,2.428"));
}

#[test]
fn exit_codes() {
    assert_eq!(qmzv("value --n 30 --m 10 --s 2 --method brute").code, 2);
    assert_eq!(qmzv("value --n 16 --m 8 --s 1 --method brute --budget 1000").code, 2);
    assert_eq!(qmzv("value --n 16 --m 8 --s 1 --method brute").code, 0);
    assert_eq!(qmzv("value --n 7 --m 2 --s 5 --method closed").code, 3);
    assert_eq!(qmzv("value --n 1 --m 0 --s 1").code, 1);
    assert_eq!(qmzv("frobnicate").code, 1);
    assert_eq!(qmzv("value --n 7").code, 1);
    assert_eq!(qmzv("--help").code, 0);
    let out = qmzv("value --n 7 --m 2 --s 5 --method closed");
    assert!(out.stderr.contains("m = 2, s = 5"), "{}", out.stderr);
}

#[test]
fn zeta_table_row() {
    let v = json("table zeta --n 6 --s 1");
    let row: Vec<&str> = v["rows"][0]["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(row, ["1", "5/2", "10/3", "5/2", "1", "1/6"]);
    let v = json("table zeta --n-max 5 --s 2");
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn stirling_tables() {
    let out = qmzv("table stirling1 --n-max 3 --r 1 --s 1 --q 2 --format csv");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("3,1,3\n3,2,4\n3,3,1"), "{}", out.stdout);
    let out = qmzv("table stirling2 --n-max 4 --r 1 --s 1 --q 1 --format csv");
    // classical Stirling numbers of the second kind
    assert!(out.stdout.contains("4,2,7\n4,3,6"), "{}", out.stdout);
    let out = qmzv("table rstirling --n-max 4 --r 2 --format csv");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(json("table stirling1 --n-max 4 --r 2 --s 2 --q zeta:7")["rows"].is_array());
}

#[test]
fn bernoulli_tables() {
    let v = json("table bernoulli --n-max 4 --kind norlund");
    let vals: Vec<String> =
        v["rows"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap().to_string()).collect();
    assert_eq!(vals, ["1", "-1/2", "5/6", "-9/4", "251/30"]);
    let out = qmzv("table bernoulli --n-max 6 --kind classical --format csv");
    assert!(out.stdout.contains("-1/30"), "{}", out.stdout);
    assert_eq!(qmzv("table bernoulli --n-max 5 --kind degenerate").code, 0);
    assert_eq!(qmzv("table bernoulli --n-max 5 --kind degenerate --n 4").code, 0);
}

#[test]
fn poly_output() {
    let v = json("poly --m 1 --s 2");
    assert_eq!(v["coefficients"], serde_json::json!(["-5/12", "1/2", "-1/12"]));
    assert!(qmzv("poly --m 1 --s 2").stdout.contains("-1/12*n^2 + 1/2*n - 5/12"));
}

#[test]
fn verify_report_shape() {
    let v = json("verify s2 --n-max 6 --m-max 3");
    assert_eq!(v["suite"], "s2");
    assert_eq!(v["cases"], 45);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["elapsed_ms"].is_u64());
    let out = qmzv("verify gtrudi");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("PASS gtrudi"), "{}", out.stdout);
}

#[test]
fn verify_all_small_grid_parallel() {
    let v = json("verify all --n-max 4 --m-max 2 --s-max 2 --jobs 2");
    assert_eq!(v["suite"], "all");
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn deterministic_output() {
    for args in
        ["table zeta --n-max 8 --s 3 --format csv", "verify orthogonality --n-max 5 --format csv", "poly --m 2 --s 2"]
    {
        assert_eq!(qmzv(args).stdout, qmzv(args).stdout, "{args}");
    }
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("qmzv-cli-{}.json", std::process::id()));
    let out = qmzv(&format!("value --n 7 --m 2 --s 2 --format json --out {}", path.display()));
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["value"], "1");
}

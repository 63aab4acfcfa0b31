use factroid::cli::{run, Outcome, SCHEMA};
use factroid::rings::parse::{parse_element, parse_ring};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("factroid").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = cli(args);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout));
    assert_eq!(v["schema"], SCHEMA);
    let invocation: Vec<&str> = v["invocation"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert_eq!(invocation, args);
    (out.code, v)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

const QUARTIC: &str = "(x+y^2)*(y+x^2)";

#[test]
fn greedy_golden() {
    let out = cli(&["greedy", "--rational", "5/6"]);
    assert_eq!(out.code, 0);
    let expected = r#"{
  "invocation": [
    "greedy",
    "--rational",
    "5/6"
  ],
  "result": {
    "denominator": "6",
    "denominators": [
      "2",
      "3"
    ],
    "numerator": "5",
    "terms": 2,
    "verified": true
  },
  "schema": "factroid/1"
}
"#;
    assert_eq!(out.stdout, expected);
}

#[test]
fn closure_golden() {
    let (code, v) = json(&["closure", "--ring", "GF(2)[x,y]", "--gens", "x^2+y^3"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(strings(&r["basis"]), ["1", "y^3 + x^2"]);
    assert_eq!(r["dim"], 2);
    assert_eq!(r["degree_bound"], 3);
    assert_eq!(r["stabilized"], true);

    let (_, v) = json(&["closure", "--ring", "GF(2)[x,y]", "--gens", QUARTIC]);
    assert_eq!(strings(&v["result"]["basis"]), ["1", "y", "x", "y^2", "x^2", "x^2*y^2 + x^3 + y^3 + x*y"]);

    let (_, v) = json(&["closure", "--ring", "Z", "--mulset", "gen:{2;3}", "--gens", "84"]);
    assert_eq!(strings(&v["result"]["basis"]), ["7"]);
}

#[test]
fn text_output() {
    let out = cli(&["closure", "--ring", "GF(2)[x]", "--gens", "x^2", "--output", "text"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("basis: [1, x, x^2]\n"), "{}", out.stdout);
    assert!(out.stdout.contains("  rows:\n    - [1, 0, 0]\n"), "{}", out.stdout);
}

#[test]
fn outputs_are_byte_deterministic() {
    let cases: [&[&str]; 5] = [
        &["closure", "--ring", "GF(3)[x,y]", "--gens", "x*y + 2; y^2 - x"],
        &["wof", "--ring", "GF(2)[x]", "--gens", "1;x^2"],
        &["oracle", "enumerate", "--ring", "GF(2)[x]", "--bound", "3"],
        &["oracle", "fuzz", "--ring", "GF(2)[x,y]", "--bound", "2", "--cases", "10", "--seed", "3"],
        &["classify", "--ring", "Z/12"],
    ];
    for args in cases {
        let (a, b) = (cli(args), cli(args));
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
    }
}

#[test]
fn printed_elements_reparse() {
    let ring = parse_ring("GF(3)[x,y]").unwrap();
    let (_, v) = json(&["closure", "--ring", "GF(3)[x,y]", "--gens", "2*x^2*y - y + 1; x*y^2"]);
    let basis = strings(&v["result"]["basis"]);
    let (_, again) = json(&["closure", "--ring", "GF(3)[x,y]", "--gens", &basis.join(";")]);
    assert_eq!(again["result"]["basis"], v["result"]["basis"]);
    for b in &basis {
        let e = parse_element(&ring, b).unwrap();
        assert_eq!(ring.format(&e), *b);
    }

    let prod = parse_ring("(Z/4)x(GF(3))").unwrap();
    let (_, v) = json(&["oracle", "closure", "--ring", "(Z/4)x(GF(3))", "--gens", "(2|1)"]);
    for s in strings(&v["result"]["elements"]) {
        let e = parse_element(&prod, &s).unwrap();
        assert_eq!(prod.format(&e), s);
    }
}

#[test]
fn egyptian_and_g_membership() {
    let (code, v) = json(&["egyptian", "--ring", "GF(2)[x,y]", "--num", "1 + x*y", "--den", QUARTIC]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["status"], "member");

    let (code, v) = json(&["gmember", "--ring", "GF(2)[x,y]", "--gens", QUARTIC, "--element", "x*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["witness_h"], "y");

    let (code, v) = json(&["egyptian", "--ring", "GF(2)[x]", "--num", "x", "--den", "1", "--max-witness-degree", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["status"], "not_found_up_to");
}

#[test]
fn regularity_and_classification() {
    let (_, v) = json(&["tregular", "--ring", "GF(2)[x,y]", "--gens", QUARTIC, "--close", "--by", "x*y"]);
    assert_eq!(v["result"]["holds"], false);

    let (_, v) = json(&["classify", "--ring", "Z/6"]);
    assert_eq!(v["result"]["predicates"]["unit_additive"], false);
    assert_eq!(strings(&v["result"]["counterexample"]), ["1", "1"]);
    let (_, v) = json(&["classify", "--ring", "Z/8"]);
    assert_eq!(v["result"]["predicates"]["unit_additive"], true);
    assert_eq!(v["result"]["predicates"]["local"], true);

    let (_, v) = json(&["euclid", "--ring", "GF(2)[x]", "--bound", "3"]);
    assert_eq!(v["result"]["count"], 5);

    let (_, v) = json(&["check", "--ring", "GF(2)[x]", "--mulset", "evendeg", "--gens", "1;x^2"]);
    assert_eq!(v["result"]["is_factroid"], true);
    let (_, v) = json(&["check", "--ring", "GF(2)[x]", "--gens", "1;x^2"]);
    assert_eq!(v["result"]["is_factroid"], false);
}

#[test]
fn oracle_compare_agrees() {
    let (code, v) = json(&["oracle", "closure", "--ring", "GF(2)[x,y]", "--gens", "x^2+y", "--compare"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["agree"], true);
    let (_, v) = json(&["oracle", "enumerate", "--ring", "(GF(2))x(GF(2))"]);
    assert_eq!(v["result"]["count"], 5);
}

#[test]
fn exit_codes() {
    let (code, v) = json(&["closure", "--ring", "GF(4)[x]", "--gens", "x"]);
    assert_eq!(code, 1);
    assert!(v["error"]["category"].is_string());

    let (code, v) = json(&["closure", "--ring", "GF(2)[x]", "--mulset", "gen:{0}", "--gens", "x"]);
    assert_eq!(code, 1);
    assert!(v.get("result").is_none());

    let (code, _) = json(&["greedy", "--rational", "100/1", "--distinct"]);
    assert_eq!(code, 2);

    assert_eq!(cli(&["frobnicate"]).code, 1);
    assert_eq!(cli(&["closure", "--gens", "x"]).code, 1);
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
}

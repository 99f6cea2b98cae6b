use std::path::PathBuf;

use assert_cmd::Command;
use jsonschema::JSONSchema;
use serde_json::Value;

fn nullfil() -> Command {
    Command::cargo_bin("nullfil").unwrap()
}

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema_name: &str, instance: &Value) {
    let s = schema(schema_name);
    let msgs: Vec<String> = match s.validate(instance) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{schema_name}: {msgs:?}\n{instance}");
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(cmd: &mut Command) -> Run {
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).unwrap()
}

const ALL_ONES: &str = r#"{"n":4,"degree":0,"psi":["1","1","1","1"]}"#;

#[test]
fn check_reports_first_witness() {
    let r = run(nullfil()
        .args(["check", "--identity", "rota-baxter", "--weight", "0"])
        .write_stdin(ALL_ONES));
    assert_eq!(r.code, 1);
    let v = json(&r.stdout);
    assert_valid("check-report.schema.json", &v);
    assert_eq!(
        r.stdout.trim(),
        r#"{"verdict":"fail","i":1,"j":1,"lhs":{"n":4,"coeffs":["0","1","0","0"]},"rhs":{"n":4,"coeffs":["0","2","0","0"]}}"#
    );
}

#[test]
fn check_text_and_pass() {
    let r = run(nullfil()
        .args(["check", "--identity", "rota-baxter", "--format", "text"])
        .write_stdin(ALL_ONES));
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("fail: rota-baxter(0) at (e1, e1)"), "{}", r.stdout);

    let harmonic = r#"{"n":4,"degree":0,"psi":["1","1/2","1/3","1/4"]}"#;
    let r = run(nullfil()
        .args(["check", "--identity", "rota-baxter"])
        .write_stdin(harmonic));
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim(), r#"{"verdict":"pass"}"#);
    assert_valid("check-report.schema.json", &json(&r.stdout));
}

#[test]
fn check_reads_a_file_and_matrix_form() {
    let dir = std::env::temp_dir().join(format!("nullfil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity.json");
    let op = r#"{"n":3,"matrix":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
    assert_valid("operator.schema.json", &json(op));
    std::fs::write(&path, op).unwrap();
    let r = run(nullfil().args(["check", path.to_str().unwrap(), "--identity", "homomorphism"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = run(nullfil().args(["check", path.to_str().unwrap(), "--identity", "nijenhuis"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = run(nullfil().args(["check", path.to_str().unwrap(), "--identity", "derivation"]));
    assert_eq!(r.code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_malformed_input() {
    let cases = [
        (r#"{"n":4,"degree":0,"psi":["1","1""#, "invalid JSON"),
        (r#"{"n":4,"degree":0,"psi":["1","x","1","1"]}"#, "psi[1]"),
        (r#"{"n":4,"degree":0,"psi":["1","1","1"]}"#, "psi has 3 entries"),
        (r#"{"n":2,"matrix":[["1","0"],["0"]]}"#, "matrix[1]"),
        (r#"{"n":2}"#, "psi"),
        (r#"[1,2]"#, "object"),
    ];
    for (input, needle) in cases {
        let r = run(nullfil().args(["check", "--identity", "reynolds"]).write_stdin(input));
        assert_eq!(r.code, 2, "{input}");
        assert!(r.stderr.contains(needle), "{input}: {}", r.stderr);
    }
    let r = run(nullfil()
        .args(["check", "--identity", "reynolds", "--weight", "1"])
        .write_stdin(ALL_ONES));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("weight"));
    let r = run(nullfil()
        .args(["check", "--identity", "lie"])
        .write_stdin(ALL_ONES));
    assert_eq!(r.code, 2);
    let r = run(nullfil()
        .args(["check", "--identity", "rota-baxter", "--weight", "0.5"])
        .write_stdin(ALL_ONES));
    assert_eq!(r.code, 2);
}

#[test]
fn construct_golden() {
    let desc = r#"{"identity":"rota-baxter","weight":"0","degree":1,"n":6,"case":"a","params":{"psi1":"1"}}"#;
    assert_valid("family-descriptor.schema.json", &json(desc));
    let r = run(nullfil().args(["construct", "--family", desc]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(
        r.stdout.trim(),
        r#"{"n":6,"degree":1,"psi":["1","2/3","1/2","2/5","1/3","0"]}"#
    );
    assert_valid("operator.schema.json", &json(&r.stdout));

    // the output feeds straight back into check
    let r2 = run(nullfil()
        .args(["check", "--identity", "rota-baxter"])
        .write_stdin(r.stdout));
    assert_eq!(r2.code, 0);
}

#[test]
fn construct_from_stdin_and_matrix_families() {
    let desc = r#"{"identity":"derivation","n":3,"params":{"alpha":["0","1","2"]}}"#;
    assert_valid("family-descriptor.schema.json", &json(desc));
    let r = run(nullfil().args(["construct", "--family", "-"]).write_stdin(desc));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_valid("operator.schema.json", &v);
    let r2 = run(nullfil()
        .args(["check", "--identity", "derivation"])
        .write_stdin(r.stdout));
    assert_eq!(r2.code, 0);
}

#[test]
fn construct_rejects_pole_and_bad_fields() {
    let desc = r#"{"identity":"reynolds","degree":0,"n":4,"params":{"t":1,"v":"2"}}"#;
    assert_valid("family-descriptor.schema.json", &json(desc));
    let r = run(nullfil().args(["construct", "--family", desc]));
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("singular parameter at index 2"), "{}", r.stderr);
    assert!(r.stderr.contains("pole"), "{}", r.stderr);

    let r = run(nullfil().args([
        "construct",
        "--family",
        r#"{"identity":"rota-baxter","weight":"1","degree":0,"n":3,"params":{"a":"-1/2"}}"#,
    ]));
    assert_eq!(r.code, 3);

    let r = run(nullfil().args([
        "construct",
        "--family",
        r#"{"identity":"reynolds","n":4,"params":{"t":1,"q":"2"}}"#,
    ]));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("params.q"), "{}", r.stderr);

    let r = run(nullfil().args([
        "construct",
        "--family",
        r#"{"identity":"rota-baxter","degree":0,"n":4,"params":{"t":3,"v":"1"}}"#,
    ]));
    assert_eq!(r.code, 2);
}

#[test]
fn classify_golden() {
    let r = run(nullfil().args(["classify", "--identity", "reynolds", "--degree", "0", "--n", "4"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let expected = concat!(
        r#"{"identity":"reynolds","degree":0,"n":4,"families":["#,
        r#"{"psi":["a","(a)/(2 - a)","(a)/(3 - 2*a)","(a)/(4 - 3*a)"],"free":["a"],"excluded":[["a","2"],["a","3/2"],["a","4/3"]]},"#,
        r#"{"psi":["0","a","0","(a)/(2 - a)"],"free":["a"],"excluded":[["a","2"]]},"#,
        r#"{"psi":["0","0","a","0"],"free":["a"],"excluded":[]},"#,
        r#"{"psi":["0","0","0","a"],"free":["a"],"excluded":[]}]}"#
    );
    assert_eq!(r.stdout.trim(), expected);
    assert_valid("classification.schema.json", &json(&r.stdout));
}

#[test]
fn classify_schema_over_regimes() {
    for (id, w, k, n) in [
        ("rota-baxter", Some("0"), "1", "6"),
        ("rota-baxter", Some("1"), "0", "4"),
        ("nijenhuis", None, "1", "6"),
        ("average", None, "3", "6"),
    ] {
        let mut cmd = nullfil();
        cmd.args(["classify", "--identity", id, "--degree", k, "--n", n]);
        if let Some(w) = w {
            cmd.args(["--weight", w]);
        }
        let r = run(&mut cmd);
        assert_eq!(r.code, 0, "{id} {k} {n}: {}", r.stderr);
        assert_valid("classification.schema.json", &json(&r.stdout));
    }
}

#[test]
fn classify_errors() {
    let r = run(nullfil().args(["classify", "--identity", "reynolds", "--degree", "2", "--n", "7"]));
    assert_eq!(r.code, 4);
    assert!(r.stderr.contains("unclassified regime"));
    let r = run(nullfil().args(["classify", "--identity", "homomorphism", "--degree", "0", "--n", "3"]));
    assert_eq!(r.code, 4);
    let r = run(nullfil().args(["classify", "--identity", "reynolds", "--degree", "0"]));
    assert_eq!(r.code, 2);
    let r = run(nullfil().args(["classify", "--identity", "reynolds", "--degree", "x", "--n", "3"]));
    assert_eq!(r.code, 2);
}

#[test]
fn verify_theorems_small() {
    let r = run(nullfil().args(["verify-theorems", "--n-max", "3", "--format", "json"]));
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r.stdout);
    assert_valid("suite-report.schema.json", &v);
    assert_eq!(v["failed"], 0);

    let r = run(nullfil().args(["verify-theorems", "--n-max", "3"]));
    assert_eq!(r.code, 0);
    let last = r.stdout.lines().last().unwrap();
    assert!(last.ends_with("0 finding, 0 fail"), "{last}");
    assert!(!r.stdout.contains('\u{1b}'));
}

#[test]
fn verify_theorems_rejects_unknown_mutant() {
    let r = run(nullfil().args(["verify-theorems", "--n-max", "2", "--inject-mutant", "nope"]));
    assert_eq!(r.code, 2);
}

#[test]
fn schemas_reject_floats_and_stray_fields() {
    let op = schema("operator.schema.json");
    assert!(!op.is_valid(&json(r#"{"n":2,"degree":0,"psi":[0.5,"1"]}"#)));
    assert!(!op.is_valid(&json(r#"{"n":2,"degree":0,"psi":["1","1"],"extra":1}"#)));
    let cls = schema("classification.schema.json");
    assert!(!cls.is_valid(&json(
        r#"{"identity":"reynolds","degree":0,"n":1,"families":[{"psi":["a"],"free":["a"],"excluded":[["a",2]]}]}"#
    )));
    let report = schema("check-report.schema.json");
    assert!(!report.is_valid(&json(r#"{"verdict":"fail"}"#)));
}

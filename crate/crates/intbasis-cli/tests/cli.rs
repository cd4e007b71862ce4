use intbasis::ring::{FqT, Integers};
use intbasis_cli::decode_report;
use serde_json::Value;
use std::process::Command;

const DEG13: &str = "x^13 + 3*(5)^8*x^11 + 18753*(5)^12*x^10 + 781253*(5)^16*x^9 + 244178131*(5)^20*x^8 + 783631254*(5)^24*x^7 + 14894940628*(5)^28*x^6 + 763967225003*(5)^32*x^5 + 193053764471876*(5)^36*x^4 + 1562575008*(5)^48*x^3 + 488318756*(5)^52*x^2 + 1527929762506*(5)^56*x + 4579209021877*(5)^60";

fn intbasis(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_intbasis")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn degree13_json_report() {
    let (code, out, _) = intbasis(&["integral-basis", "-f", DEG13, "--prime", "2", "--prime", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["index"]["factored"], serde_json::json!([["2", 3], ["5", 372]]));
    let dens = v["denominators"].as_array().unwrap();
    assert_eq!(dens[12]["factored"], serde_json::json!([["2", 1], ["5", 59]]));
    assert_eq!(dens[0]["factored"], serde_json::json!([]));
    let rep = decode_report(&Integers, &out).unwrap();
    assert_eq!(rep.numerators.len(), 13);
}

#[test]
fn function_field_round_trip() {
    let (code, out, _) = intbasis(&["integral-basis", "--ring", "fq[t]", "--q", "3", "-f", "x^2-t^3-t^2", "--format", "json", "--certify"]);
    assert_eq!(code, 0);
    let rep = decode_report(&FqT::new(3), &out).unwrap();
    assert_eq!(rep.denominators[1], FqT::new(3).t());
    assert!(decode_report(&Integers, &out).is_err());
}

#[test]
fn tame_family_power_basis() {
    for q in ["2", "3", "5"] {
        let (code, out, _) = intbasis(&["integral-basis", "--ring", "fq[t]", "--q", q, "-f", "x^(q)+t^2*x+t".replace("(q)", q).as_str(), "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["index"]["D"], serde_json::json!([1]));
    }
}

#[test]
fn om_show_slope() {
    let (code, out, _) = intbasis(&["om-show", "--ring", "fq[t]", "--q", "3", "-f", "x^2+t^4*x+t", "--prime", "t", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["primes"][0]["levels"][0]["slope"], "-1/2");
    assert_eq!(v["ind"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(intbasis(&["integral-basis", "-f", "x^2+*3"]).0, 2);
    assert_eq!(intbasis(&["integral-basis", "-f", "x^4-1"]).0, 2);
    assert_eq!(intbasis(&["integral-basis", "-f", "2*x^2+1"]).0, 2);
    assert_eq!(intbasis(&["integral-basis", "-f", "(x-1)^2"]).0, 2);
    assert_eq!(intbasis(&["p-basis", "-f", "x^2-5", "--prime", "4"]).0, 2);
    assert_eq!(intbasis(&["p-basis", "-f", "x^2-5", "--ideal", "5:0:1"]).0, 2);
    assert_eq!(intbasis(&["integral-basis", "--ring", "fq[t]", "--q", "2147483659", "-f", "x^2+t"]).0, 4);
    assert_eq!(intbasis(&["integral-basis", "--ring", "fq[t]", "--q", "4", "-f", "x^2+t"]).0, 2);
    assert_eq!(intbasis(&["ideal-basis", "-f", "x^2-5", "--ideal", "5:3:1"]).0, 2);
    let big = "618970019642690137449562111";
    let f = format!("x^2-({big})^3");
    assert_eq!(intbasis(&["integral-basis", "-f", &f, "--prime", big]).0, 4);
    assert_eq!(intbasis(&["om-show", "-f", &f, "--prime", big]).0, 4);
    assert_eq!(intbasis(&["bogus"]).0, 2);
}

#[test]
fn ideal_text_and_json() {
    let (code, out, _) = intbasis(&["ideal-basis", "-f", "x^2-5", "--ideal", "5:0:3", "--format", "json", "--certify"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["alpha"], serde_json::json!([["5", 2]]));
    assert_eq!(v["normalized"], serde_json::json!([["5", 0, -1]]));
    let (code, out, _) = intbasis(&["p-basis", "-f", DEG13, "--prime", "5", "--certify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("ind = 372"));
}

#[test]
fn polynomial_from_file() {
    let dir = std::env::temp_dir().join(format!("intbasis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.txt");
    std::fs::write(&path, "x^3 - 12*x + 28\n").unwrap();
    let (code, out, _) = intbasis(&["integral-basis", "-f", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("D = "));
}

use std::process::{Command, Output};

use serde_json::Value;

fn mtheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtheta"))
        .args(args)
        .env_remove("MTHETA_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_default_passes_with_json_report() {
    let o = mtheta(&["verify", "--all", "--depth", "default"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), mtheta::verify::claims().len());
    for r in reports {
        assert_eq!(r["status"], "pass", "{}", r["claim_id"]);
        assert!(r["mismatch"].is_null());
    }
    let ids: Vec<&str> = reports
        .iter()
        .map(|r| r["claim_id"].as_str().unwrap())
        .collect();
    for want in ["R1", "R21", "char:A2", "count:B2", "rho3-almost-even"] {
        assert!(ids.contains(&want), "{want}");
    }
}

#[test]
fn json_reports_round_trip() {
    let o = mtheta(&[
        "verify",
        "--claim",
        "R6",
        "--claim",
        "J13-2dissection",
        "--format",
        "json",
    ]);
    let text = stdout(&o);
    let reports: Vec<mtheta::verify::VerificationReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(
        serde_json::to_string_pretty(&reports).unwrap().trim(),
        text.trim()
    );
}

#[test]
fn predicate_reports_witness() {
    let o = mtheta(&["predicate", "--cond", "A2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("= 7 = 7^1 * 1^2, true"), "{s}");

    let o = mtheta(&["predicate", "--cond", "A2", "--n", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["special"], true);
    assert_eq!(
        (v[0]["p"].as_u64(), v[0]["a"].as_u64(), v[0]["m"].as_u64()),
        (Some(7), Some(0), Some(1))
    );

    let o = mtheta(&[
        "predicate",
        "--cond",
        "A2",
        "--n",
        "0",
        "--to",
        "9",
        "--format",
        "csv",
    ]);
    let special: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| l.split(',').nth(2) == Some("true"))
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    // 15, 39, 55 fail; 63 = 7 * 3^2 passes
    assert_eq!(special, ["1", "3", "4", "6", "8", "9"]);
}

#[test]
fn table1_csv_has_fifteen_rows() {
    let o = mtheta(&["table1", "--limit", "100000", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("sequence,X,odd_count,delta"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 15);
    for (row, (_, printed)) in rows.iter().zip(mtheta::density::TABLE1.iter()) {
        let got = mtheta::density::units(row[3]).unwrap();
        let want = mtheta::density::units(printed).unwrap();
        assert!((got - want).abs() <= 1, "{row:?} vs {printed}");
        assert_eq!(row[1], "100000");
    }
    assert_eq!(rows[0], ["c(mu2;n)", "100000", "50161", "0.50161"]);
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        &["table1", "--limit", "20000", "--format", "csv"][..],
        &[
            "verify",
            "--kind",
            "congruence",
            "--depth",
            "400",
            "--format",
            "csv",
        ][..],
        &[
            "density",
            "mu2",
            "psi6:2n+1",
            "--limit",
            "500",
            "--factor",
            "2",
            "--upto",
            "8000",
            "--format",
            "json",
        ][..],
    ] {
        let runs: Vec<Vec<u8>> = ["1", "2", "4"]
            .iter()
            .map(|t| {
                let mut a = args.to_vec();
                a.extend(["--threads", t]);
                let o = mtheta(&a);
                assert_eq!(o.status.code(), Some(0));
                o.stdout
            })
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
    let seq = mtheta(&[
        "identities",
        "--depth",
        "60",
        "--sequential",
        "--format",
        "csv",
    ])
    .stdout;
    let par = mtheta(&["identities", "--depth", "60", "--format", "csv"]).stdout;
    assert_eq!(seq, par);
    let plain = mtheta(&["identities", "--depth", "60", "--format", "plain"]);
    assert!(stdout(&plain).ends_with("passed, 0 failed\n"));
}

#[test]
fn threads_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mtheta"))
        .args(["counts", "--depth", "300", "--format", "csv"])
        .env("MTHETA_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert_eq!(
        s.lines().next(),
        Some("claim_id,kind,depth,status,mismatch_index,lhs,rhs,millis")
    );
    assert_eq!(s.lines().count(), 8);
    assert!(
        s.lines()
            .skip(1)
            .all(|l| l.contains(",count,300,pass,,,,0.0")),
        "{s}"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["expand", "zeta9"][..],
        &["expand", "A2", "--rep", "nope"][..],
        &["predicate", "--cond", "f3", "--n", "1"][..],
        &["predicate", "--cond", "A2", "--n", "5", "--to", "1"][..],
        &["verify", "--claim", "R7"][..],
        &["verify", "--depth", "deep"][..],
        &["density", "nosuch:2n"][..],
        &["table1", "--limit", "0"][..],
        &["verify", "--all", "--kind", "identity"][..],
    ] {
        let o = mtheta(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn out_file_receives_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    let o = mtheta(&[
        "parity",
        "B2",
        "--terms",
        "30",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n\n0\n4\n12\n24\n");
}

#[test]
fn expand_prints_coefficients() {
    let o = mtheta(&["expand", "B2", "--terms", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,coefficient\n0,1\n1,2\n2,4\n3,6\n4,9\n");
    let hecke = mtheta(&["expand", "A2", "--terms", "40", "--rep", "hecke"]).stdout;
    let eul = mtheta(&["expand", "A2", "--terms", "40"]).stdout;
    assert_eq!(hecke, eul);
}

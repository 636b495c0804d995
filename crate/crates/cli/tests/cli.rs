use std::process::{Command, Output};

fn lrsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn phi_worked_example() {
    let out = lrsym(&[
        "phi", "--n", "4", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5,5,5,1\n");
}

#[test]
fn phi_trace_lists_intermediates() {
    let out = lrsym(&[
        "phi", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0", "--trace",
    ]);
    assert_eq!(
        stdout(&out),
        "nu: 4,2,1,-1\ntau: 1,2,2,3\neta: 1,1,1,-3\nphi: 5,5,5,1\n"
    );

    let out = lrsym(&[
        "phi", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0", "--trace", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tau"], serde_json::json!([1, 2, 2, 3]));
    assert_eq!(v["phi"], "5,5,5,1");
}

#[test]
fn phi_with_zero_shifts_echoes_balanced_omega() {
    let out = lrsym(&[
        "phi", "--a", "0", "--b", "0", "--mu", "2,1,0", "--omega", "-1,2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-1,2,2\n");
}

#[test]
fn lr_coefficient_and_family() {
    let out = lrsym(&[
        "lr", "--n", "4", "--mu", "5,1,1,0", "--nu", "2,1,0,0", "--lambda", "5,3,2,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = lrsym(&["lr", "--mu", "1,0", "--nu", "1,0"]);
    assert_eq!(stdout(&out), "{\"1,1\":\"1\",\"2,0\":\"1\"}\n");

    let out = lrsym(&["lr", "--mu", "1,0", "--nu", "1,0", "--lambda", "3,-1"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: [&[&str]; 5] = [
        &[
            "phi", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,x,2,0",
        ],
        &[
            "phi", "--n", "3", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0",
        ],
        &[
            "phi", "--a", "-1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0",
        ],
        &["verify", "nonsense"],
        &["lr", "--mu", "1,-1", "--nu", "1,0"],
    ];
    for args in cases {
        assert_eq!(lrsym(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(
        lrsym(&["verify", "pieri", "--lo", "3", "--hi", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_main_small_sweep() {
    let out = lrsym(&[
        "verify",
        "main",
        "--n",
        "3",
        "--max-ab",
        "2",
        "--max-mu1",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "main");
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["instances"].as_u64().unwrap() > 0);
    for key in ["params", "elapsed_ms", "seed"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_counterexamples_reports_both_reproductions() {
    let out = lrsym(&["verify", "counterexamples"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["family"].as_array().unwrap().len(), 21);
    assert_eq!(v["details"]["n4_candidates"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_is_deterministic_for_a_seed() {
    let args = [
        "verify",
        "birational",
        "--n",
        "3",
        "--samples",
        "40",
        "--seed",
        "11",
    ];
    let first = lrsym(&args);
    let second = lrsym(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["seed"], 11);

    let csv = lrsym(&["verify", "jt", "--n", "2", "--csv", "--jobs", "1"]);
    assert_eq!(
        stdout(&csv),
        "suite,instances,failures,elapsed_ms,seed\njt,45,0,0,\n"
    );
}

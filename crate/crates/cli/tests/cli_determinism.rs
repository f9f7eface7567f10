//! Acceptance criterion 9: every command with a fixed seed produces
//! byte-identical output across two runs of the real binary.

use std::process::Command;

fn run_cli(args: &[&str]) -> (Vec<u8>, bool) {
    let exe = env!("CARGO_BIN_EXE_polyapprox");
    let out = Command::new(exe)
        .args(args)
        .output()
        .expect("spawn polyapprox");
    (out.stdout, out.status.success())
}

#[test]
fn criterion_9_cli_byte_identical_output() {
    let dir = std::env::temp_dir().join(format!("polyapprox-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let shell = dir.join("shell.json");
    let pair = dir.join("pair.json");

    let gen_cases: Vec<Vec<String>> = vec![
        vec!["gen", "sphere-shell", "--dim", "2", "--n", "100", "--seed", "7"],
        vec!["gen", "rotated-box", "--dim", "3", "--n", "8", "--seed", "5"],
        vec!["gen", "simplex", "--dim", "3", "--n", "4", "--seed", "9"],
        vec!["gen", "random-hull", "--dim", "4", "--n", "50", "--seed", "4"],
        vec![
            "gen",
            "near-touching-pair",
            "--dim",
            "2",
            "--n",
            "16",
            "--seed",
            "3",
            "--margin",
            "2.0",
            "--eps",
            "0.1",
        ],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();

    let mut checks = 0u64;
    let mut violations = Vec::new();
    for case in &gen_cases {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let (a, ok_a) = run_cli(&args);
        let (b, ok_b) = run_cli(&args);
        assert!(ok_a && ok_b, "gen failed: {:?}", case);
        checks += 1;
        if a != b {
            violations.push(format!("{:?}", case));
        }
    }

    // materialize inputs for the downstream commands
    let (shell_bytes, ok) = run_cli(&["gen", "sphere-shell", "--dim", "2", "--n", "150", "--seed", "11"]);
    assert!(ok);
    std::fs::write(&shell, &shell_bytes).unwrap();
    let (pair_bytes, ok) = run_cli(&[
        "gen",
        "near-touching-pair",
        "--dim",
        "2",
        "--n",
        "14",
        "--seed",
        "13",
        "--margin",
        "1.5",
        "--eps",
        "0.1",
    ]);
    assert!(ok);
    std::fs::write(&pair, &pair_bytes).unwrap();

    let shell_s = shell.to_str().unwrap();
    let pair_s = pair.to_str().unwrap();
    let downstream: Vec<Vec<&str>> = vec![
        vec!["build", "--in", shell_s, "--eps", "0.05"],
        vec!["build", "--in", shell_s, "--eps", "0.05", "--buckets"],
        vec!["kernel", "--in", shell_s, "--eps", "0.05"],
        vec!["intersect", "--in", pair_s, "--eps", "0.1"],
        vec![
            "minksum", "--in", shell_s, "--in", shell_s, "--eps", "0.1", "--algo", "dudley",
        ],
        vec![
            "minksum", "--in", shell_s, "--in", shell_s, "--eps", "0.1", "--algo", "bi",
            "--format", "svg",
        ],
        vec!["width", "--in", shell_s, "--eps", "0.1"],
        vec!["bench", "--dim", "2", "--n", "400", "--seed", "3"],
        vec!["selftest", "--quick"],
    ];
    for case in &downstream {
        let (a, ok_a) = run_cli(case);
        let (b, ok_b) = run_cli(case);
        assert!(ok_a && ok_b, "command failed: {:?}", case);
        checks += 1;
        if a != b {
            violations.push(format!("{:?}", case));
        }
    }
    println!(
        "criterion 9 [{}] byte-identical command output - checks: {}, violations: {}",
        if violations.is_empty() { "PASS" } else { "FAIL" },
        checks,
        violations.len()
    );
    let _ = std::fs::remove_dir_all(&dir);
    assert!(violations.is_empty(), "diverging commands: {:?}", violations);
}

//! End-to-end checks of the command-line interface: exit codes, report
//! shapes, and output stability.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_expost")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn check_reports_statistics() {
    let out = run(&["check", fixture("example1_matching_pennies.game.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["rank_joint"], 1);
    assert_eq!(v["completeness_a"], false);

    let out = run(&["check", fixture("convex_independence_4x4.game.json").to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["rank_joint"], 3);
    assert_eq!(v["convex_indep_a"], true);

    let out = run(&["check", fixture("full_rank_2x2.game.json").to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["completeness_a"], true);
    assert_eq!(v["sli_b"], true);
}

#[test]
fn solve_and_enumerate_report_values() {
    let out = run(&["solve", fixture("example1_matching_pennies.game.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["value"].as_f64().unwrap() - 0.5).abs() < 1e-9);

    let out = run(&["enumerate", fixture("convex_independence_4x4.game.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let profiles = v["profiles"].as_array().unwrap();
    // The odd/even split equilibrium appears, flagged BNE but not ex post.
    let odd_even = profiles
        .iter()
        .find(|p| p["pure_a"]["action_of"] == serde_json::json!([1, 0, 1, 0]))
        .expect("split profile enumerated");
    assert_eq!(odd_even["certificate"]["is_bne"]["is_bne"], true);
    assert_eq!(odd_even["certificate"]["is_expost"]["is_expost"], false);
}

#[test]
fn verify_exit_codes_separate_failure_kinds() {
    let game = fixture("example3_downsian.game.json");
    let good = fixture("example3_truthful.strategy.json");
    let out = run(&["verify", game.to_str().unwrap(), good.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["is_bne"]["is_bne"], true);
    assert!((v["value_a"].as_f64().unwrap() - 0.5).abs() < 1e-12);

    // A non-equilibrium claim exits 1.
    let bad = fixture("example1_truthful.strategy.json");
    let out = run(&["verify", fixture("full_rank_2x2.game.json").to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Unreadable input exits 2.
    let out = run(&["verify", "no-such-file.json", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed game file exits 2.
    let dir = tempfile::tempdir().unwrap();
    let bad_game = dir.path().join("bad.game.json");
    std::fs::write(&bad_game, r#"{"types": {"A": 2, "B": 2}}"#).unwrap();
    let out = run(&["check", bad_game.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn election_welfare_reports_z_score() {
    let out = run(&[
        "--seed", "7", "election", "welfare", "--alpha", "1", "--beta", "1",
        "--profile", "antipander", "--rule", "coin", "--n", "50000",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["closed_form"].as_f64().unwrap() + 5.0 / 9.0).abs() < 1e-12);
    assert!(v["z_score"].as_f64().unwrap().abs() < 4.0);

    let out = run(&[
        "election", "welfare", "--alpha", "1", "--beta", "1",
        "--profile", "nonsense", "--n", "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn election_welfare_accepts_per_candidate_strategies() {
    let out = run(&[
        "--seed", "3", "election", "welfare", "--alpha", "1", "--beta", "1",
        "--strategy-a", "mixed-winner:0.2", "--strategy-b", "mixed-loser:0.2",
        "--rule", "always-a", "--n", "5000",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["profile"], "mixed-winner:0.2+mixed-loser:0.2");
    // Winner welfare: -(0.25 Var(s) - 2*0.5*Cov + Var(theta) + b^2) = -0.54.
    assert!((v["mean"].as_f64().unwrap() + 0.54).abs() < 0.03);

    let out = run(&[
        "election", "welfare", "--alpha", "1", "--beta", "1",
        "--strategy-a", "unbiased", "--n", "1000",
    ]);
    assert_eq!(out.status.code(), Some(2), "lone strategy flag must be rejected");
}

#[test]
fn election_deviation_emits_monotone_rows() {
    let out = run(&[
        "--format", "csv", "election", "deviation", "--alpha", "1", "--beta", "1",
        "--s-true", "0", "--grid", "0:3:0.5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s_mimic,win_prob"));
    let probs: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(probs.len(), 7);
    assert!(probs.windows(2).all(|w| w[1] > w[0]), "win_prob not monotone: {probs:?}");
}

#[test]
fn election_decompose_and_indifference() {
    let out = run(&[
        "--seed", "3", "election", "decompose", "--alpha", "1", "--beta", "1",
        "--profile", "benevolent", "--rule", "more-extreme", "--n", "20000",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["l_e"].as_f64().unwrap().abs() < 1e-10);
    assert_eq!(v["closed_form_conditioning"], true);

    let out = run(&[
        "election", "indifference", "--alpha", "1", "--beta", "1", "--n-checks", "2000",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
}

#[test]
fn beta_verify_accepts_fractions() {
    let out = run(&["beta", "verify", "--alpha", "7/2", "--beta", "3/4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["all_identities_hold"], true);
    for r in v["midpoint_residuals"].as_array().unwrap() {
        assert_eq!(r["exactly_zero"], true);
    }
    let out = run(&["beta", "verify", "--alpha", "0", "--beta", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dual_verify_reports_both_cases() {
    let strategy = fixture("dual_truthful.strategy.json");
    let out = run(&[
        "dual", "verify",
        fixture("dual_counterexample_v0.dual.json").to_str().unwrap(),
        strategy.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["is_constant"], false);

    let out = run(&[
        "dual", "verify",
        fixture("dual_counterexample_linear.dual.json").to_str().unwrap(),
        strategy.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["constant"], 1.0);
}

#[test]
fn fixtures_run_clean_and_unknown_names_fail() {
    let out = run(&["fixtures", "--all"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["fixtures"].as_array().unwrap().len(), 8);

    let out = run(&["fixtures", "example2-complete-info-mix"]);
    assert!(out.status.success());

    let out = run(&["fixtures", "not-a-fixture"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_csv_is_stable_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--seed", "11", "election", "sweep", "--alphas", "1", "--betas", "1,2",
        "--profiles", "antipander,delegation", "--rules", "coin", "--n", "4000",
    ];
    let mut outputs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let out = Command::new(bin())
            .args(["--out", path.to_str().unwrap()])
            .args(args)
            .output()
            .unwrap();
        assert!(out.status.success());
        outputs.push(std::fs::read(path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    assert!(text.starts_with("alpha,beta,profile,rule,seed,n,mean,stderr,closed_form,z_score"));
    // 1 alpha x 2 betas x 2 profiles x 1 rule = 4 data rows.
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn bundled_game_files_match_programmatic_fixtures() {
    use expost::fixtures::{convex_independence_game, example1_game, example3_game};
    use expost::io::load_game;
    for (file, expected) in [
        ("example1_matching_pennies.game.json", example1_game()),
        ("convex_independence_4x4.game.json", convex_independence_game()),
        ("example3_downsian.game.json", example3_game()),
    ] {
        let loaded = load_game(&fixture(file)).unwrap();
        assert_eq!(loaded.sum_const(), expected.sum_const(), "{file}");
        assert_eq!(loaded.payoff_matrix_a(), expected.payoff_matrix_a(), "{file}");
        for (lr, er) in loaded.joint().iter().zip(expected.joint()) {
            for (l, e) in lr.iter().zip(er) {
                assert!((l - e).abs() < 1e-12, "{file}");
            }
        }
    }
}

//! Command-line front end: file I/O and machine-readable reports over the
//! library. Exit codes: 0 on success with all claims verified, 1 when a
//! claimed property fails verification, 2 on input errors.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde::Serialize;
use serde_json::json;

use expost::election::beta::ExactBetaModel;
use expost::election::{
    closed_form_welfares, make_strategy, mc_decomposition, mc_welfare, mimic_win_probability,
    verify_antipander_indifference, MonteCarloConfig, NormalModel, PlatformStrategy, StrategyKind,
    TieBreak, VoterRule, VoterRuleKind,
};
use expost::fixtures;
use expost::io::{load_dual, load_game, load_profile};
use expost::dual::verify_surplus_constancy;
use expost::verify::certify;
use expost::{enumerate_pure_bne, solve_minimax_lp, statistics_report, Player};

#[derive(Parser)]
#[command(name = "expost", version, about = "Constant-sum Bayesian game analysis and election simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Verification tolerance for equilibrium properties.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Relative singular-value cutoff for rank decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    rank_tol: f64,
    /// Seed for all Monte Carlo commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where both are supported.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Statistical report: completeness, SLI, convex independence.
    Check { game: PathBuf },
    /// Minimax value and optimal strategies by LP.
    Solve {
        game: PathBuf,
        /// Cap on induced normal-form cells.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
    },
    /// All pure Bayes-Nash equilibria with ex-post flags.
    Enumerate {
        game: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
    },
    /// Equilibrium certificate for a strategy file.
    Verify { game: PathBuf, strategy: PathBuf },
    /// Normal-quadratic election analysis.
    Election {
        #[command(subcommand)]
        cmd: ElectionCmd,
    },
    /// Beta-Bernoulli identities.
    Beta {
        #[command(subcommand)]
        cmd: BetaCmd,
    },
    /// Dual-sphere competition checks.
    Dual {
        #[command(subcommand)]
        cmd: DualCmd,
    },
    /// Run bundled reference scenarios.
    Fixtures {
        /// Fixture name; omit with --all to run everything.
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// List available fixtures and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Candidate B's precision when it differs from --beta.
    #[arg(long)]
    beta_b: Option<f64>,
}

impl ModelArgs {
    fn model(&self) -> Result<NormalModel, CliError> {
        NormalModel::new(self.alpha, self.beta, self.beta_b.unwrap_or(self.beta))
            .map_err(|e| CliError::input(e.to_string()))
    }
}

#[derive(Subcommand)]
enum ElectionCmd {
    /// Monte Carlo voter welfare against the closed form where one exists.
    Welfare {
        #[command(flatten)]
        model: ModelArgs,
        /// Named pair: fullpander, antipander, unbiased, benevolent, or
        /// delegation. Overridden by --strategy-a/--strategy-b.
        #[arg(long, default_value = "antipander")]
        profile: String,
        /// Candidate A's strategy, e.g. unbiased, antipander, benevolent,
        /// fullpander, delegation-loser, mixed-winner:0.2, offset:0.7.
        #[arg(long)]
        strategy_a: Option<String>,
        #[arg(long)]
        strategy_b: Option<String>,
        #[arg(long, default_value = "coin")]
        rule: String,
        #[arg(long, default_value = "coin")]
        tie_break: String,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Scheduling hint; never affects results.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// CSV sweep over parameter and profile grids.
    Sweep {
        #[arg(long, value_delimiter = ',')]
        alphas: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        betas: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        profiles: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "coin")]
        rules: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Win probability of mimicking more extreme signals.
    Deviation {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        s_true: f64,
        /// Mimic grid as lo:hi:step.
        #[arg(long, default_value = "0:3:0.5")]
        grid: String,
    },
    /// Welfare decomposition into variance and estimation losses.
    Decompose {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        profile: String,
        #[arg(long, default_value = "more-extreme")]
        rule: String,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Sampled offset-family indifference identity.
    Indifference {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 10_000)]
        n_checks: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.7, -1.3])]
        offsets: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum BetaCmd {
    /// Check every Beta-Bernoulli identity at the given parameters.
    Verify {
        /// Prior parameter; accepts decimals or fractions like 7/2.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
}

#[derive(Subcommand)]
enum DualCmd {
    /// Verify on-path surplus constancy of a firm profile.
    Verify {
        scenario: PathBuf,
        strategy: PathBuf,
    },
}

struct CliError {
    message: String,
    exit: i32,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit: 2,
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::input(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.exit);
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            file.write_all(text.as_bytes())
                .map_err(|e| CliError::input(e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(cli: &Cli, value: &T) -> Result<(), CliError> {
    emit(cli, &serde_json::to_string_pretty(value)?)
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Check { game } => {
            let game = load_game(game)?;
            let report = statistics_report(&game, cli.rank_tol)?;
            emit_json(cli, &report)?;
            Ok(0)
        }
        Command::Solve { game, cap } => {
            let game = load_game(game)?;
            let solution = solve_minimax_lp(&game, *cap)?;
            emit_json(cli, &solution)?;
            Ok(0)
        }
        Command::Enumerate { game, cap } => {
            let game = load_game(game)?;
            let enumeration = enumerate_pure_bne(&game, cli.tol, *cap)?;
            emit_json(cli, &enumeration)?;
            Ok(0)
        }
        Command::Verify { game, strategy } => {
            let game = load_game(game)?;
            let profile = load_profile(strategy, &game)?;
            let certificate = certify(&game, &profile, cli.tol)?;
            let ok = certificate.is_bne.is_bne;
            emit_json(cli, &certificate)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Election { cmd } => run_election(cli, cmd),
        Command::Beta { cmd } => run_beta(cli, cmd),
        Command::Dual { cmd } => run_dual(cli, cmd),
        Command::Fixtures { name, all, list } => run_fixtures(cli, name.as_deref(), *all, *list),
    }
}

/// Both candidates' strategies plus the closed-form welfare target, if the
/// profile has one.
fn resolve_profile(
    model: &NormalModel,
    name: &str,
) -> Result<(PlatformStrategy, PlatformStrategy, Option<f64>), CliError> {
    let closed = closed_form_welfares(model).ok();
    let mk = |kind| make_strategy(model, kind).map_err(|e| CliError::input(e.to_string()));
    Ok(match name {
        "fullpander" | "full-pander" => (
            mk(StrategyKind::FullPander)?,
            mk(StrategyKind::FullPander)?,
            closed.map(|c| c.full_pander),
        ),
        "antipander" | "anti-pander" => (
            mk(StrategyKind::AntiPander(Player::A))?,
            mk(StrategyKind::AntiPander(Player::B))?,
            closed.map(|c| c.anti_pander),
        ),
        "unbiased" => (
            mk(StrategyKind::Unbiased(Player::A))?,
            mk(StrategyKind::Unbiased(Player::B))?,
            None,
        ),
        "benevolent" => (mk(StrategyKind::Benevolent)?, mk(StrategyKind::Benevolent)?, None),
        "delegation" => (
            mk(StrategyKind::Unbiased(Player::A))?,
            mk(StrategyKind::DelegationLoser)?,
            closed.map(|c| c.delegation),
        ),
        other => {
            return Err(CliError::input(format!(
                "unknown profile {other:?}; expected fullpander, antipander, unbiased, benevolent, or delegation"
            )))
        }
    })
}

/// Single-candidate strategy name, with `:x` carrying a parameter.
fn resolve_strategy(
    model: &NormalModel,
    player: Player,
    name: &str,
) -> Result<PlatformStrategy, CliError> {
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => {
            let v: f64 = p
                .parse()
                .map_err(|_| CliError::input(format!("bad parameter in strategy {name:?}")))?;
            (h, Some(v))
        }
        None => (name, None),
    };
    let kind = match (head, param) {
        ("unbiased", None) => StrategyKind::Unbiased(player),
        ("antipander" | "anti-pander", None) => StrategyKind::AntiPander(player),
        ("benevolent", None) => StrategyKind::Benevolent,
        ("fullpander" | "full-pander", None) => StrategyKind::FullPander,
        ("delegation-loser", None) => StrategyKind::DelegationLoser,
        ("mixed-winner", Some(b)) => StrategyKind::MixedMotivesWinner(b),
        ("mixed-loser", Some(b)) => StrategyKind::MixedMotivesLoser(b),
        ("offset", Some(c)) => StrategyKind::AffineWithOffset(c),
        _ => {
            return Err(CliError::input(format!(
                "unknown strategy {name:?}; see --help for the accepted names"
            )))
        }
    };
    make_strategy(model, kind).map_err(|e| CliError::input(e.to_string()))
}

fn resolve_tie_break(name: &str) -> Result<TieBreak, CliError> {
    Ok(match name {
        "coin" => TieBreak::FairCoin,
        "fixed-a" => TieBreak::FixedA,
        "fixed-b" => TieBreak::FixedB,
        other => return Err(CliError::input(format!("unknown tie break {other:?}"))),
    })
}

fn resolve_rule(
    name: &str,
    tie_break: TieBreak,
    strat_a: &PlatformStrategy,
    strat_b: &PlatformStrategy,
) -> Result<VoterRule, CliError> {
    let kind = match name {
        "coin" => VoterRuleKind::FairCoin,
        "more-extreme" => VoterRuleKind::MoreExtreme,
        "always-a" => VoterRuleKind::AlwaysElect(Player::A),
        "always-b" => VoterRuleKind::AlwaysElect(Player::B),
        "best-response" => {
            if !strat_a.invertible() || !strat_b.invertible() {
                return Err(CliError::input(
                    "best-response rule needs invertible strategies for both candidates",
                ));
            }
            VoterRuleKind::BestResponseGiven {
                conjecture_a: strat_a.clone(),
                conjecture_b: strat_b.clone(),
            }
        }
        other => {
            return Err(CliError::input(format!(
                "unknown rule {other:?}; expected coin, more-extreme, best-response, always-a, or always-b"
            )))
        }
    };
    Ok(VoterRule::new(kind, tie_break))
}

#[derive(Serialize)]
struct WelfareReport {
    alpha: f64,
    beta_a: f64,
    beta_b: f64,
    profile: String,
    rule: String,
    seed: u64,
    n_samples: usize,
    mean: f64,
    std_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_score: Option<f64>,
}

fn welfare_report(
    model: &NormalModel,
    profile: &str,
    rule_name: &str,
    tie_break: TieBreak,
    cfg: &MonteCarloConfig,
) -> Result<WelfareReport, CliError> {
    let (strat_a, strat_b, closed_form) = resolve_profile(model, profile)?;
    let rule = resolve_rule(rule_name, tie_break, &strat_a, &strat_b)?;
    let estimate = mc_welfare(model, &strat_a, &strat_b, &rule, cfg)?;
    Ok(WelfareReport {
        alpha: model.alpha,
        beta_a: model.beta_a,
        beta_b: model.beta_b,
        profile: profile.to_string(),
        rule: rule_name.to_string(),
        seed: cfg.seed,
        n_samples: cfg.n_samples,
        mean: estimate.mean,
        std_error: estimate.std_error,
        closed_form,
        z_score: closed_form.map(|c| (estimate.mean - c) / estimate.std_error),
    })
}

fn run_election(cli: &Cli, cmd: &ElectionCmd) -> Result<i32, CliError> {
    match cmd {
        ElectionCmd::Welfare {
            model,
            profile,
            strategy_a,
            strategy_b,
            rule,
            tie_break,
            n,
            workers,
        } => {
            let model = model.model()?;
            let cfg = MonteCarloConfig::new(cli.seed, *n).with_worker_hint(*workers);
            let tie = resolve_tie_break(tie_break)?;
            let report = match (strategy_a, strategy_b) {
                (None, None) => welfare_report(&model, profile, rule, tie, &cfg)?,
                (Some(a), Some(b)) => {
                    let strat_a = resolve_strategy(&model, Player::A, a)?;
                    let strat_b = resolve_strategy(&model, Player::B, b)?;
                    let voter = resolve_rule(rule, tie, &strat_a, &strat_b)?;
                    let estimate = mc_welfare(&model, &strat_a, &strat_b, &voter, &cfg)?;
                    WelfareReport {
                        alpha: model.alpha,
                        beta_a: model.beta_a,
                        beta_b: model.beta_b,
                        profile: format!("{a}+{b}"),
                        rule: rule.clone(),
                        seed: cfg.seed,
                        n_samples: cfg.n_samples,
                        mean: estimate.mean,
                        std_error: estimate.std_error,
                        closed_form: None,
                        z_score: None,
                    }
                }
                _ => {
                    return Err(CliError::input(
                        "--strategy-a and --strategy-b must be given together",
                    ))
                }
            };
            emit_json(cli, &report)?;
            Ok(0)
        }
        ElectionCmd::Sweep {
            alphas,
            betas,
            profiles,
            rules,
            n,
            workers,
        } => {
            let mut csv = String::from("alpha,beta,profile,rule,seed,n,mean,stderr,closed_form,z_score\n");
            for &alpha in alphas {
                for &beta in betas {
                    let model = NormalModel::symmetric(alpha, beta)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    for profile in profiles {
                        for rule in rules {
                            let cfg =
                                MonteCarloConfig::new(cli.seed, *n).with_worker_hint(*workers);
                            let r =
                                welfare_report(&model, profile, rule, TieBreak::FairCoin, &cfg)?;
                            let closed = r
                                .closed_form
                                .map(|c| c.to_string())
                                .unwrap_or_default();
                            let z = r.z_score.map(|z| z.to_string()).unwrap_or_default();
                            csv.push_str(&format!(
                                "{alpha},{beta},{profile},{rule},{},{},{},{},{closed},{z}\n",
                                r.seed, r.n_samples, r.mean, r.std_error
                            ));
                        }
                    }
                }
            }
            emit(cli, csv.trim_end())?;
            Ok(0)
        }
        ElectionCmd::Deviation {
            model,
            s_true,
            grid,
        } => {
            let model = model.model()?;
            let points = parse_grid(grid)?;
            let rows: Vec<(f64, f64)> = points
                .iter()
                .map(|&m| (m, mimic_win_probability(&model, *s_true, m)))
                .collect();
            match cli.format {
                Format::Csv => {
                    let mut csv = String::from("s_mimic,win_prob\n");
                    for (m, p) in &rows {
                        csv.push_str(&format!("{m},{p}\n"));
                    }
                    emit(cli, csv.trim_end())?;
                }
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|(m, p)| json!({"s_mimic": m, "win_prob": p}))
                        .collect();
                    emit_json(cli, &rows)?;
                }
            }
            Ok(0)
        }
        ElectionCmd::Decompose {
            model,
            profile,
            rule,
            n,
            workers,
        } => {
            let model = model.model()?;
            let (strat_a, strat_b, _) = resolve_profile(&model, profile)?;
            let rule = resolve_rule(rule, TieBreak::FairCoin, &strat_a, &strat_b)?;
            let cfg = MonteCarloConfig::new(cli.seed, *n).with_worker_hint(*workers);
            let decomposition = mc_decomposition(&model, &strat_a, &strat_b, &rule, &cfg)?;
            emit_json(cli, &decomposition)?;
            Ok(0)
        }
        ElectionCmd::Indifference {
            model,
            n_checks,
            offsets,
        } => {
            let model = model.model()?;
            let report = verify_antipander_indifference(&model, offsets, *n_checks, cli.seed)?;
            let passed = report.passed;
            emit_json(cli, &report)?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::input("grid must be lo:hi:step"));
    }
    let lo: f64 = parts[0].parse().map_err(|_| CliError::input("bad grid lo"))?;
    let hi: f64 = parts[1].parse().map_err(|_| CliError::input("bad grid hi"))?;
    let step: f64 = parts[2].parse().map_err(|_| CliError::input("bad grid step"))?;
    if step <= 0.0 || hi < lo {
        return Err(CliError::input("grid must satisfy lo <= hi, step > 0"));
    }
    let mut points = Vec::new();
    let mut k = 0;
    loop {
        let v = lo + k as f64 * step;
        if v > hi + 1e-12 {
            break;
        }
        points.push(v);
        k += 1;
    }
    Ok(points)
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| CliError::input("bad numerator"))?;
        let d: i64 = den.trim().parse().map_err(|_| CliError::input("bad denominator"))?;
        if d == 0 {
            return Err(CliError::input("zero denominator"));
        }
        Ok(BigRational::new(n.into(), d.into()))
    } else {
        let v: f64 = text.trim().parse().map_err(|_| CliError::input("bad number"))?;
        BigRational::from_float(v).ok_or_else(|| CliError::input("non-finite parameter"))
    }
}

fn run_beta(cli: &Cli, cmd: &BetaCmd) -> Result<i32, CliError> {
    let BetaCmd::Verify { alpha, beta } = cmd;
    let model = ExactBetaModel::new(parse_rational(alpha)?, parse_rational(beta)?)
        .map_err(|e| CliError::input(e.to_string()))?;

    let to_f = |r: &BigRational| -> f64 {
        use num::ToPrimitive;
        r.to_f64().unwrap_or(f64::NAN)
    };
    let residuals: Vec<_> = model
        .midpoint_residuals()
        .into_iter()
        .map(|(s_a, s_b, r)| {
            json!({
                "s_a": s_a as u8,
                "s_b": s_b as u8,
                "residual": to_f(&r),
                "exactly_zero": num::Zero::is_zero(&r),
            })
        })
        .collect();
    let (y0, y1) = model.overreaction_strategy();
    let chain_ok = y0 < model.posterior_single(false)
        && model.posterior_single(false) < model.prior_mean()
        && model.prior_mean() < model.posterior_single(true)
        && model.posterior_single(true) < y1;
    let mut shifts = Vec::new();
    let mut all_ok = chain_ok;
    for (s_a, s_b) in [(false, false), (false, true), (true, false), (true, true)] {
        let (pair, avg) = model.posterior_shifts(s_a, s_b);
        let sign_match = num::Signed::is_positive(&pair) == num::Signed::is_positive(&avg);
        let strict = num::Signed::abs(&pair) > num::Signed::abs(&avg);
        if s_a != s_b && !model.equal_params() {
            all_ok &= sign_match && strict;
        }
        shifts.push(json!({
            "s_a": s_a as u8,
            "s_b": s_b as u8,
            "pair_shift": to_f(&pair),
            "avg_shift": to_f(&avg),
            "sign_match": sign_match,
            "pair_shift_strictly_larger": strict,
        }));
    }
    let winner = if model.equal_params() {
        json!({"defined": false, "reason": "alpha = beta leaves the voter indifferent"})
    } else {
        let out = model.unbiased_outcome(true, false).map_err(|e| CliError::input(e.to_string()))?;
        json!({
            "defined": true,
            "winner_when_s_a_1_s_b_0": format!("{:?}", out.winner.unwrap()),
            "winning_signal": if model.beta > model.alpha { 1 } else { 0 },
        })
    };
    for (_, _, r) in model.midpoint_residuals() {
        all_ok &= num::Zero::is_zero(&r);
    }
    let report = json!({
        "alpha": to_f(&model.alpha),
        "beta": to_f(&model.beta),
        "overreaction_strategy": {"y0": to_f(&y0), "y1": to_f(&y1)},
        "midpoint_residuals": residuals,
        "ordering_chain": chain_ok,
        "posterior_shifts": shifts,
        "unbiased_winner": winner,
        "all_identities_hold": all_ok,
    });
    emit_json(cli, &report)?;
    Ok(if all_ok { 0 } else { 1 })
}

fn run_dual(cli: &Cli, cmd: &DualCmd) -> Result<i32, CliError> {
    let DualCmd::Verify { scenario, strategy } = cmd;
    let (game, gov) = load_dual(scenario)?;
    let induced = expost::dual::induce_firm_game(&game, &gov)?;
    let profile = load_profile(strategy, &induced)?;
    let verdict = verify_surplus_constancy(&game, &gov, &profile, cli.tol)?;
    let ok = verdict.is_constant;
    emit_json(cli, &verdict)?;
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    seed: u64,
    fixtures: Vec<fixtures::FixtureReport>,
    all_passed: bool,
    wall_clock_ms: u128,
}

fn run_fixtures(cli: &Cli, name: Option<&str>, all: bool, list: bool) -> Result<i32, CliError> {
    if list {
        let names: Vec<_> = fixtures::registry()
            .iter()
            .map(|f| json!({"name": f.name, "summary": f.summary}))
            .collect();
        emit_json(cli, &names)?;
        return Ok(0);
    }
    let start = Instant::now();
    let reports: Vec<fixtures::FixtureReport> = match name {
        Some(name) if !all => vec![fixtures::run_fixture(name)
            .ok_or_else(|| CliError::input(format!("unknown fixture {name:?}")))?],
        _ => fixtures::registry().iter().map(|f| (f.run)()).collect(),
    };
    let all_passed = reports.iter().all(|r| r.all_passed());
    let report = RunReport {
        command: std::env::args().collect::<Vec<_>>().join(" "),
        seed: cli.seed,
        fixtures: reports,
        all_passed,
        wall_clock_ms: start.elapsed().as_millis(),
    };
    emit_json(cli, &report)?;
    Ok(if all_passed { 0 } else { 1 })
}

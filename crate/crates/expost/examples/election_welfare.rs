//! Monte Carlo voter welfare in the normal-quadratic election against the
//! closed forms: full pandering, the anti-pandering equilibrium, and
//! delegation to one candidate.
//!
//! Run with: cargo run --example election_welfare [-- n_samples]

use expost::election::{
    closed_form_welfares, make_strategy, mc_welfare, MonteCarloConfig, NormalModel, StrategyKind,
    VoterRule,
};
use expost::Player;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200_000);
    let model = NormalModel::symmetric(1.0, 1.0).unwrap();
    let forms = closed_form_welfares(&model).unwrap();
    let cfg = MonteCarloConfig::new(7, n);

    let full = make_strategy(&model, StrategyKind::FullPander).unwrap();
    let anti_a = make_strategy(&model, StrategyKind::AntiPander(Player::A)).unwrap();
    let anti_b = make_strategy(&model, StrategyKind::AntiPander(Player::B)).unwrap();
    let unbiased = make_strategy(&model, StrategyKind::Unbiased(Player::A)).unwrap();
    let loser = make_strategy(&model, StrategyKind::DelegationLoser).unwrap();

    println!("alpha = 1, beta = 1, n = {n}, seed = {}\n", cfg.seed);
    println!("{:<28} {:>10} {:>10} {:>8}", "profile", "estimate", "closed", "z");
    let show = |name: &str, est: expost::election::WelfareEstimate, closed: f64| {
        println!(
            "{name:<28} {:>10.5} {:>10.5} {:>8.2}",
            est.mean,
            closed,
            (est.mean - closed) / est.std_error
        );
    };
    show(
        "full pandering / coin",
        mc_welfare(&model, &full, &full, &VoterRule::fair_coin(), &cfg).unwrap(),
        forms.full_pander,
    );
    show(
        "anti-pandering / coin",
        mc_welfare(&model, &anti_a, &anti_b, &VoterRule::fair_coin(), &cfg).unwrap(),
        forms.anti_pander,
    );
    show(
        "delegation / always-A",
        mc_welfare(&model, &unbiased, &loser, &VoterRule::always(Player::A), &cfg).unwrap(),
        forms.delegation,
    );
    println!(
        "\nThe closed forms order the equilibria: {:.4} < {:.4} < {:.4};\n\
         delegation to a single informed candidate is the equilibrium welfare\n\
         ceiling, however many informed candidates compete.",
        forms.full_pander, forms.anti_pander, forms.delegation
    );
}

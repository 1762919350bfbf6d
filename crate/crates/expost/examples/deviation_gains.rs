//! Why unbiased strategies cannot be an equilibrium: the probability of
//! winning by playing as if the signal were more extreme is strictly
//! increasing in the mimicked magnitude, whatever the true signal.
//!
//! Run with: cargo run --example deviation_gains

use expost::election::{mimic_win_probability, NormalModel};

fn main() {
    let model = NormalModel::symmetric(1.0, 1.0).unwrap();
    println!("win probability of mimicking signal s when the truth is s_true\n");
    print!("{:>8}", "mimic");
    for s_true in [0.0, 0.5, 1.0, 2.0] {
        print!("  s_true={s_true:<4}");
    }
    println!();
    let mut grid = Vec::new();
    let mut m = 0.0;
    while m <= 3.0 + 1e-9 {
        grid.push(m);
        m += 0.5;
    }
    for &mimic in &grid {
        print!("{mimic:>8.2}");
        for s_true in [0.0, 0.5, 1.0, 2.0] {
            print!("  {:>11.4}", mimic_win_probability(&model, s_true, mimic));
        }
        println!();
    }
    println!(
        "\nEach column rises monotonically: overreacting always gains office,\n\
         underreacting always loses it, so honesty is never self-enforcing."
    );
}

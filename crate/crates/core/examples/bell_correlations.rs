//! Singlet correlations E(a, b) = −cos(a − b) and the CHSH value over a
//! sweep of the second analyzer angle.
//!
//! ```bash
//! cargo run --example bell_correlations
//! ```

use std::f64::consts::PI;

use gqs::experiment::{chsh, singlet_correlation, TSIRELSON_ANGLES};

fn main() {
    println!("{:>8}  {:>10}", "a-b deg", "E");
    for k in 0..=8 {
        let theta = k as f64 * PI / 8.0;
        println!("{:>8.1}  {:>+10.6}", theta.to_degrees(), singlet_correlation(0.0, theta));
    }

    let s = chsh(TSIRELSON_ANGLES);
    println!("\nCHSH at the optimal angles: S = {s:.12} (2 sqrt 2 = {:.12})", 2.0 * 2f64.sqrt());

    let [a, a2, b, _] = TSIRELSON_ANGLES;
    let best = (0..=360)
        .map(|d| {
            let b2 = (d as f64).to_radians();
            (d, chsh([a, a2, b, b2]).abs())
        })
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap();
    println!("sweeping b' with a, a', b fixed: |S| peaks at {:.6} for b' = {} deg", best.1, best.0);
}

//! Levels of the tilted rectangular cavity, where gravity acts along
//! (x + y)/√2 and the states are products of two bouncers.
//!
//! ```bash
//! cargo run --example cavity_levels
//! ```

use gqs::bouncer::GravityMode;
use gqs::cavity;

fn main() -> gqs::Result<()> {
    let scales = GravityMode::Tilted.scales();
    println!("g_eff = {:.5} m/s^2, l0 = {:.4} um", scales.g_eff(), scales.l0().micrometers());
    for n in 0..3 {
        for m in 0..3 {
            let s = cavity::cavity_state(n, m, &scales)?;
            println!("E_{n}{m} = {:.5e} eV", s.energy().ev());
        }
    }
    let gap = cavity::energy_gap(&scales);
    println!("gap E01 - E00 = {:.4e} eV", gap.ev());
    println!("resolution time hbar/gap = {:.4e} s", cavity::resolution_time(&scales).seconds());

    let ground = cavity::cavity_state(0, 0, &scales)?;
    println!(
        "mean pair separation in the ground state: {:.4} um",
        cavity::pair_mean_separation(&ground)?.micrometers()
    );
    Ok(())
}

//! Absorber selectivity at 3 l0, ground-state bounce statistics, and the
//! hopper geometry check for the default beam.
//!
//! ```bash
//! cargo run --example absorber_design
//! ```

use gqs::bouncer::GravityMode;
use gqs::cavity;
use gqs::experiment::{self, BeamSpec};
use gqs::units::Time;

fn main() -> gqs::Result<()> {
    let scales = GravityMode::Tilted.scales();
    let states = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
        .iter()
        .map(|&(n, m)| cavity::cavity_state(n, m, &scales))
        .collect::<gqs::Result<Vec<_>>>()?;

    let cutoff = scales.l0() * 3.0;
    let sel = cavity::absorber_selectivity(&states, cutoff)?;
    println!("probability beyond {:.2} um on either axis:", cutoff.micrometers());
    for o in &sel.overlaps {
        let (n, m) = o.quantum_numbers;
        println!("  ({n},{m})  E = {:.4e} eV  overlap = {:.5}", o.energy.ev(), o.overlap);
    }
    println!("ground state least absorbed: {}", sel.ground_state_minimal);

    let b = cavity::bounce_statistics(Time::new(2.0), scales.l0() * 3.0, &states[0])?;
    println!(
        "2 s dwell over a 3 l0 side: n = {:.1} bounces, spread {:.1}, parity distinguishable: {}",
        b.mean_bounces, b.bounce_spread, b.parity_distinguishable
    );

    let hop = experiment::hopper_geometry_check(&BeamSpec::default());
    println!(
        "hopper: climb {:.4} m against {:.2} m, collimation ok {}, pass {}, borderline {}",
        hop.climb_height.si(),
        hop.climb_limit.si(),
        hop.collimation_ok,
        hop.pass(),
        hop.borderline
    );
    Ok(())
}

//! Full pair-production feasibility report for the default beam, then the
//! same report for a denser source.
//!
//! ```bash
//! cargo run --example feasibility_report
//! ```

use gqs::bouncer::GravityMode;
use gqs::experiment::{self, BeamSpec};
use gqs::units::{NumberDensity, Time};

fn main() -> gqs::Result<()> {
    let scales = GravityMode::Tilted.scales();
    let report = experiment::full_report(&BeamSpec::default(), &scales, Time::new(12.0))?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("report serializes"));

    let dense = BeamSpec {
        rho_ucn: NumberDensity::from_per_cubic_centimeter(10.0),
        ..BeamSpec::default()
    };
    let rate = experiment::pair_rate(&dense, report.coherence_length, Time::new(3.0))?;
    println!(
        "rho = 10 cm^-3: {:.3} pairs in 3 s, one pair every {:.3} s",
        rate.pairs,
        rate.time_per_pair().seconds()
    );
    Ok(())
}

//! The neutron bouncer above a vertical mirror: levels, moments, tails and
//! velocity bounds of the first few states.
//!
//! ```bash
//! cargo run --example bouncer_states
//! ```

use gqs::bouncer::{self, GravityMode};

fn main() -> gqs::Result<()> {
    let scales = GravityMode::Vertical.scales();
    println!(
        "vertical g = {} m/s^2: l0 = {:.4} um, eps0 = {:.5e} eV",
        scales.g_eff(),
        scales.l0().micrometers(),
        scales.eps0().ev()
    );
    println!("{:>2} {:>10} {:>12} {:>9} {:>9} {:>10} {:>10}", "n", "alpha", "E [peV]", "<x> um", "dx um", "P(x>3l0)", "dv m/s");
    for n in 0..6 {
        let psi = bouncer::wavefunction(n, &scales)?;
        let mean = bouncer::moment(&psi, 1)? * 1e6;
        let spread = bouncer::position_spread(&psi)?.micrometers();
        let tail = bouncer::tail_probability(&psi, scales.l0() * 3.0)?;
        let dv = bouncer::velocity_spread(&psi)?.si();
        println!(
            "{n:>2} {:>10.6} {:>12.6} {mean:>9.4} {spread:>9.4} {tail:>10.6} {dv:>10.4e}",
            psi.alpha(),
            psi.energy().ev() * 1e12,
        );
    }

    let ground = bouncer::wavefunction(0, &scales)?;
    let v = bouncer::velocity_bounds(&ground)?;
    println!(
        "ground state: N0 = {:.6e} m^-1/2 (closed form {:.6e}), v_max = {:.4e} m/s, dv_min = {:.4e} m/s",
        ground.norm_const(),
        ground.analytic_norm_const(),
        v.v_max.si(),
        v.delta_v_min.si()
    );
    Ok(())
}

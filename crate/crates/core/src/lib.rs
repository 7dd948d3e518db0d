//! Gravitational quantum states of ultracold neutrons above mirrors, and a
//! feasibility calculator for producing spin-entangled neutron pairs in a
//! tilted rectangular cavity.
//!
//! The crate is organized bottom-up:
//!
//! * [`constants`] and [`units`]: CODATA values and SI newtypes.
//! * [`airy`]: Ai, Ai′ and the zeros α_n of Ai(−α).
//! * [`quadrature`]: adaptive Gauss–Kronrod integration.
//! * [`bouncer`]: the 1D bouncer, with energies, normalized states, moments
//!   and tails.
//! * [`cavity`]: product states of the tilted cavity, density grids, absorber
//!   selectivity and bounce statistics.
//! * [`experiment`]: coherence length, pair yield, hopper geometry, dipole
//!   coupling, decay and singlet correlations.
//! * [`cli`]: the JSON-configured runner behind the `gqs` binary.
//!
//! Each capability has a runnable program under `examples/`:
//!
//! ```bash
//! cargo run --example airy_zeros
//! cargo run --example bouncer_states
//! cargo run --example cavity_levels
//! cargo run --example density_grids -- /tmp/grids
//! cargo run --example absorber_design
//! cargo run --example feasibility_report
//! cargo run --example bell_correlations
//! ```
//!
//! A minimal session:
//!
//! ```
//! use gqs::bouncer::GravityMode;
//! use gqs::cavity;
//!
//! let scales = GravityMode::Tilted.scales();
//! let ground = cavity::cavity_state(0, 0, &scales)?;
//! let tau = cavity::resolution_time(&scales);
//! assert!((ground.energy().ev() - 2.233e-12).abs() < 1e-14);
//! assert!((tau.seconds() - 7.88e-4).abs() < 1e-5);
//! # Ok::<(), gqs::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod airy;
pub mod bouncer;
pub mod cavity;
pub mod cli;
pub mod constants;
pub mod error;
pub mod experiment;
pub mod quadrature;
pub mod units;

pub use error::{Error, Result};

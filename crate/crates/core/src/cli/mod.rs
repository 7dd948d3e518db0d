//! Configuration-driven runner behind the `gqs` binary.
//!
//! [`execute`] is pure: it turns a [`RunConfig`] into output documents and
//! summary lines. [`run`] writes the documents (atomically, via a temporary
//! file and rename) or prints them to stdout.

mod config;

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

pub use config::{parse_config, parse_config_for, Command, RunConfig, DEFAULT_QUANTUM_NUMBERS};

use crate::bouncer::{self, GravityMode, GravityScales};
use crate::cavity::{self, CavityState2D};
use crate::error::{Error, Result};
use crate::experiment::{self, q};

/// One document produced by a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    /// Destination; `None` means stdout.
    pub path: Option<PathBuf>,
    pub contents: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub documents: Vec<Document>,
    /// One line per headline quantity, with units.
    pub summary: Vec<String>,
}

fn mode_name(mode: GravityMode) -> &'static str {
    match mode {
        GravityMode::Tilted => "tilted",
        GravityMode::Vertical => "vertical",
    }
}

fn scales_json(mode: GravityMode, s: &GravityScales) -> Value {
    json!({
        "g_mode": mode_name(mode),
        "g_eff": q(s.g_eff(), "m/s^2"),
        "l0": q(s.l0().micrometers(), "um"),
        "eps0": q(s.eps0().ev(), "eV"),
    })
}

fn states(cfg: &RunConfig, scales: &GravityScales) -> Result<Vec<CavityState2D>> {
    cfg.quantum_numbers
        .iter()
        .map(|&(n, m)| cavity::cavity_state(n, m, scales))
        .collect()
}

fn json_document(cfg: &RunConfig, value: &Value) -> Document {
    let mut contents = serde_json::to_string_pretty(value).expect("JSON values serialize");
    contents.push('\n');
    Document {
        path: cfg.output_path.clone(),
        contents,
    }
}

/// Computes every output of `cfg` without touching the filesystem.
pub fn execute(cfg: &RunConfig) -> Result<RunOutput> {
    let scales = cfg.g_mode.scales();
    let mut summary = Vec::new();
    let documents = match cfg.command {
        Command::Scales => {
            summary.push(format!("g_eff = {:.6} m/s^2", scales.g_eff()));
            summary.push(format!("l0 = {:.6} um", scales.l0().micrometers()));
            summary.push(format!("eps0 = {:.6e} eV", scales.eps0().ev()));
            vec![json_document(cfg, &scales_json(cfg.g_mode, &scales))]
        }
        Command::Levels => {
            let states = states(cfg, &scales)?;
            let levels: Vec<Value> = states
                .iter()
                .map(|s| {
                    let (n, m) = s.quantum_numbers();
                    summary.push(format!("E({n},{m}) = {:.6e} eV", s.energy().ev()));
                    json!({
                        "n": n,
                        "m": m,
                        "energy": q(s.energy().ev(), "eV"),
                        "energy_over_eps0": q(s.energy() / scales.eps0(), "1"),
                    })
                })
                .collect();
            let gap = cavity::energy_gap(&scales);
            let tau = cavity::resolution_time(&scales);
            summary.push(format!("gap = {:.6e} eV", gap.ev()));
            summary.push(format!("tau_g = {:.6e} s", tau.seconds()));
            let value = json!({
                "scales": scales_json(cfg.g_mode, &scales),
                "levels": levels,
                "gap": q(gap.ev(), "eV"),
                "resolution_time": q(tau.seconds(), "s"),
            });
            vec![json_document(cfg, &value)]
        }
        Command::Grid => {
            if cfg.quantum_numbers.is_empty() {
                return Err(Error::Config("grid needs at least one (n, m) pair".into()));
            }
            let states = states(cfg, &scales)?;
            if states.len() > 1 && cfg.output_path.is_none() {
                return Err(Error::Config(
                    "several grids need an output path; each file gets an _<n>_<m> suffix".into(),
                ));
            }
            let mut docs = Vec::with_capacity(states.len());
            for s in &states {
                let grid = cavity::density_grid(s, cfg.grid_extent, cfg.grid_resolution)?;
                let (n, m) = s.quantum_numbers();
                summary.push(format!(
                    "grid({n},{m}): {}x{} points over {}x{} l0, mass captured {:.6}",
                    cfg.grid_resolution.0,
                    cfg.grid_resolution.1,
                    cfg.grid_extent.0,
                    cfg.grid_extent.1,
                    grid.riemann_sum()
                ));
                let path = match &cfg.output_path {
                    Some(p) if states.len() > 1 => Some(suffixed(p, n, m)),
                    other => other.clone(),
                };
                docs.push(Document {
                    path,
                    contents: grid.to_csv_string(),
                });
            }
            docs
        }
        Command::Design => vec![json_document(cfg, &design(cfg, &scales, &mut summary)?)],
        Command::Report => {
            let report = experiment::full_report(&cfg.beam, &scales, cfg.t)?;
            summary.push(format!("coherence_length = {:.4e} m", report.coherence_length.si()));
            summary.push(format!("coherence_length_computed = {:.4e} m", report.coherence_length_computed.si()));
            summary.push(format!("pair_rate_coefficient = {:.4e} cm^6/s", report.pair_rate.coefficient));
            summary.push(format!("pairs = {:.4} in {} s", report.pair_rate.pairs, cfg.t.seconds()));
            summary.push(format!("resolution_time = {:.4e} s", report.resolution_time.seconds()));
            summary.push(format!("mono_margin = {:.4}", report.monochromaticity.margin));
            summary.push(format!("dipole_energy = {:.4e} eV", report.dipole_energy.ev()));
            summary.push(format!("decay_survival = {:.6}", report.decay_survival));
            vec![json_document(cfg, &report.to_json())]
        }
    };
    Ok(RunOutput { documents, summary })
}

fn design(cfg: &RunConfig, scales: &GravityScales, summary: &mut Vec<String>) -> Result<Value> {
    let states = states(cfg, scales)?;
    let cutoff = scales.l0() * cfg.cutoff_l0;
    let selectivity = cavity::absorber_selectivity(&states, cutoff)?;
    let overlaps: Vec<Value> = selectivity
        .overlaps
        .iter()
        .map(|o| {
            summary.push(format!(
                "absorbed({},{}) = {:.6}",
                o.quantum_numbers.0, o.quantum_numbers.1, o.overlap
            ));
            json!({
                "n": o.quantum_numbers.0,
                "m": o.quantum_numbers.1,
                "energy": q(o.energy.ev(), "eV"),
                "overlap": q(o.overlap, "1"),
            })
        })
        .collect();

    let ground = cavity::cavity_state(0, 0, scales)?;
    let psi = ground.x_state();
    let mean = bouncer::moment(psi, 1)?;
    let mean_sq = bouncer::moment(psi, 2)?;
    let spread = bouncer::position_spread(psi)?;
    let velocity = bouncer::velocity_bounds(psi)?;
    let velocity_spread = bouncer::velocity_spread(psi)?;
    let separation = cavity::pair_mean_separation(&ground)?;
    let bounce = cavity::bounce_statistics(cfg.dwell_time, scales.l0() * cfg.side_length_l0, &ground)?;
    let hopper = experiment::hopper_geometry_check(&cfg.beam);
    let tau = cavity::resolution_time(scales);

    summary.push(format!("tau_g = {:.6e} s", tau.seconds()));
    summary.push(format!("pair_separation = {:.4} um", separation.micrometers()));
    summary.push(format!(
        "bounces = {:.3} +- {:.3} (parity distinguishable: {})",
        bounce.mean_bounces, bounce.bounce_spread, bounce.parity_distinguishable
    ));

    Ok(json!({
        "scales": scales_json(cfg.g_mode, scales),
        "cutoff": q(cutoff.micrometers(), "um"),
        "cutoff_l0": q(cfg.cutoff_l0, "l0"),
        "absorber_overlaps": overlaps,
        "ground_state_minimal": selectivity.ground_state_minimal,
        "resolution_time": q(tau.seconds(), "s"),
        "ground_state": {
            "norm_const_squared": q(psi.norm_const().powi(2) * 1e-6, "um^-1"),
            "mean_x": q(mean * 1e6, "um"),
            "mean_x2": q(mean_sq * 1e12, "um^2"),
            "spread_x": q(spread.micrometers(), "um"),
            "v_max": q(velocity.v_max.si(), "m/s"),
            "delta_v_min": q(velocity.delta_v_min.si(), "m/s"),
            "velocity_spread": q(velocity_spread.si(), "m/s"),
        },
        "pair_separation": q(separation.micrometers(), "um"),
        "bounce": {
            "dwell_time": q(bounce.dwell_time.seconds(), "s"),
            "side_length": q(bounce.side_length.micrometers(), "um"),
            "mean_bounces": q(bounce.mean_bounces, "1"),
            "bounce_spread": q(bounce.bounce_spread, "1"),
            "v_bar_x": q(bounce.v_bar_x.si(), "m/s"),
            "delta_v_x": q(bounce.delta_v_x.si(), "m/s"),
            "parity_distinguishable": bounce.parity_distinguishable,
        },
        "hopper": {
            "v_xy": q(hopper.v_xy.si(), "m/s"),
            "climb_height": q(hopper.climb_height.si(), "m"),
            "climb_limit": q(hopper.climb_limit.si(), "m"),
            "pass": hopper.pass(),
            "borderline": hopper.borderline,
            "failure": hopper.failure.map(|f| f.to_string()),
        },
    }))
}

fn suffixed(path: &Path, n: usize, m: usize) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{n}_{m}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{n}_{m}"),
    };
    path.with_file_name(name)
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// Executes `cfg`, writes its documents and prints the summary to stderr.
pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    let output = execute(cfg)?;
    for doc in &output.documents {
        if let Some(path) = &doc.path {
            write_atomic(path, &doc.contents)?;
        }
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for doc in output.documents.iter().filter(|d| d.path.is_none()) {
        lock.write_all(doc.contents.as_bytes()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })?;
    }
    for line in &output.summary {
        eprintln!("{line}");
    }
    for doc in output.documents.iter().filter_map(|d| d.path.as_ref()) {
        eprintln!("wrote {}", doc.display());
    }
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    eprintln!("[gqs] {} finished at unix time {stamp}", cfg.command);
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffixes_keep_extension() {
        assert_eq!(suffixed(Path::new("out/grid.csv"), 1, 0), PathBuf::from("out/grid_1_0.csv"));
        assert_eq!(suffixed(Path::new("grid"), 0, 1), PathBuf::from("grid_0_1"));
    }

    #[test]
    fn empty_grid_request_fails_without_output() {
        let mut cfg = RunConfig::new(Command::Grid);
        cfg.quantum_numbers.clear();
        assert!(execute(&cfg).is_err());
    }

    #[test]
    fn several_grids_need_a_path() {
        let cfg = RunConfig::new(Command::Grid);
        assert!(execute(&cfg).is_err());
    }
}

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::airy::MAX_ZERO_INDEX;
use crate::bouncer::GravityMode;
use crate::cavity::{DEFAULT_GRID_EXTENT, DEFAULT_GRID_RESOLUTION};
use crate::error::{Error, Result};
use crate::experiment::BeamSpec;
use crate::units::{Area, Length, NumberDensity, Speed, Time};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Characteristic length and energy.
    Scales,
    /// Cavity energy levels, gap and resolution time.
    Levels,
    /// `|Ψ_{n,m}|²` density grids as CSV.
    Grid,
    /// Absorber selectivity, bounce statistics and hopper geometry.
    Design,
    /// The full pair-production feasibility report.
    Report,
}

impl Command {
    pub const ALL: [Command; 5] = [
        Command::Scales,
        Command::Levels,
        Command::Grid,
        Command::Design,
        Command::Report,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Scales => "scales",
            Command::Levels => "levels",
            Command::Grid => "grid",
            Command::Design => "design",
            Command::Report => "report",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown command `{s}`")))
    }
}

/// A validated run description with every default filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub g_mode: GravityMode,
    pub quantum_numbers: Vec<(usize, usize)>,
    /// In units of l₀.
    pub grid_extent: (f64, f64),
    pub grid_resolution: (usize, usize),
    pub beam: BeamSpec,
    /// Collection time for the pair yield.
    pub t: Time,
    /// Absorber height in units of l₀.
    pub cutoff_l0: f64,
    /// Dwell time in the cavity for bounce statistics.
    pub dwell_time: Time,
    /// Cavity side length in units of l₀.
    pub side_length_l0: f64,
    pub output_path: Option<PathBuf>,
}

pub const DEFAULT_QUANTUM_NUMBERS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            g_mode: GravityMode::Tilted,
            quantum_numbers: DEFAULT_QUANTUM_NUMBERS.to_vec(),
            grid_extent: DEFAULT_GRID_EXTENT,
            grid_resolution: DEFAULT_GRID_RESOLUTION,
            beam: BeamSpec::default(),
            t: Time::new(12.0),
            cutoff_l0: 3.0,
            dwell_time: Time::new(2.0),
            side_length_l0: 3.0,
            output_path: None,
        }
    }
}

const TOP_KEYS: &[&str] = &[
    "command",
    "g_mode",
    "quantum_numbers",
    "grid_extent",
    "grid_resolution",
    "beam",
    "t",
    "cutoff_l0",
    "dwell_time",
    "side_length_l0",
    "output_path",
];

const BEAM_KEYS: &[&str] = &[
    "v",
    "dv_over_v",
    "rho_ucn",
    "mono_reduction",
    "entrance_area",
    "collimation_ratio",
    "coherence_length_override_cm",
    "flight_distance",
];

/// Parses a JSON configuration that names its own command.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    parse_config_for(text, None)
}

/// Parses a JSON configuration; `command` comes from the command line and
/// must agree with the `command` key when both are present.
pub fn parse_config_for(text: &str, command: Option<Command>) -> Result<RunConfig> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Config(format!("malformed JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Config("top level must be a JSON object".into()))?;

    let mut unknown: BTreeSet<String> = obj
        .keys()
        .filter(|k| !TOP_KEYS.contains(&k.as_str()))
        .cloned()
        .collect();
    if let Some(Value::Object(beam)) = obj.get("beam") {
        unknown.extend(
            beam.keys()
                .filter(|k| !BEAM_KEYS.contains(&k.as_str()))
                .map(|k| format!("beam.{k}")),
        );
    }
    if !unknown.is_empty() {
        let list: Vec<String> = unknown.into_iter().collect();
        return Err(Error::Config(format!("unknown keys: {}", list.join(", "))));
    }

    let from_file = match obj.get("command") {
        None => None,
        Some(Value::String(s)) => Some(s.parse::<Command>()?),
        Some(_) => return Err(invalid("command", "must be a string")),
    };
    let command = match (command, from_file) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Config(format!(
                "command `{a}` on the command line conflicts with `{b}` in the configuration"
            )))
        }
        (Some(c), _) | (None, Some(c)) => c,
        (None, None) => return Err(Error::Config("no command given".into())),
    };

    let mut cfg = RunConfig::new(command);

    if let Some(v) = obj.get("g_mode") {
        cfg.g_mode = match v.as_str() {
            Some("tilted") => GravityMode::Tilted,
            Some("vertical") => GravityMode::Vertical,
            _ => return Err(invalid("g_mode", "must be \"tilted\" or \"vertical\"")),
        };
    }

    if let Some(v) = obj.get("quantum_numbers") {
        cfg.quantum_numbers = parse_quantum_numbers(v)?;
        if cfg.quantum_numbers.is_empty() && matches!(command, Command::Grid | Command::Levels | Command::Design) {
            return Err(invalid("quantum_numbers", "must list at least one (n, m) pair"));
        }
    }

    if let Some(v) = obj.get("grid_extent") {
        let [x, y] = pair_of_f64(v, "grid_extent")?;
        if !(x > 0.0 && y > 0.0) {
            return Err(invalid("grid_extent", "both extents must be positive"));
        }
        cfg.grid_extent = (x, y);
    }
    if let Some(v) = obj.get("grid_resolution") {
        let [x, y] = pair_of_f64(v, "grid_resolution")?;
        if !(x.fract() == 0.0 && y.fract() == 0.0 && x >= 2.0 && y >= 2.0) {
            return Err(invalid("grid_resolution", "both counts must be integers ≥ 2"));
        }
        cfg.grid_resolution = (x as usize, y as usize);
    }

    if let Some(t) = number(obj, "t")? {
        if !(t >= 0.0) {
            return Err(invalid("t", "must be non-negative"));
        }
        cfg.t = Time::new(t);
    }
    if let Some(c) = number(obj, "cutoff_l0")? {
        if !(c > 0.0) {
            return Err(invalid("cutoff_l0", "must be positive"));
        }
        cfg.cutoff_l0 = c;
    }
    if let Some(d) = number(obj, "dwell_time")? {
        if !(d >= 0.0) {
            return Err(invalid("dwell_time", "must be non-negative"));
        }
        cfg.dwell_time = Time::new(d);
    }
    if let Some(s) = number(obj, "side_length_l0")? {
        if !(s > 0.0) {
            return Err(invalid("side_length_l0", "must be positive"));
        }
        cfg.side_length_l0 = s;
    }
    match obj.get("output_path") {
        None | Some(Value::Null) => {}
        Some(Value::String(p)) if !p.is_empty() => cfg.output_path = Some(PathBuf::from(p)),
        Some(_) => return Err(invalid("output_path", "must be a non-empty string")),
    }

    match obj.get("beam") {
        None => {}
        Some(Value::Object(beam)) => cfg.beam = parse_beam(beam)?,
        Some(_) => return Err(invalid("beam", "must be an object")),
    }

    Ok(cfg)
}

fn invalid(field: &str, constraint: &str) -> Error {
    Error::Config(format!("invalid `{field}`: {constraint}"))
}

fn number(obj: &Map<String, Value>, key: &str) -> Result<Option<f64>> {
    match obj.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_f64()
            .filter(|x| x.is_finite())
            .map(Some)
            .ok_or_else(|| invalid(key, "must be a finite number")),
    }
}

fn pair_of_f64(v: &Value, field: &str) -> Result<[f64; 2]> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([a, b]) => match (a.as_f64(), b.as_f64()) {
            (Some(a), Some(b)) => Ok([a, b]),
            _ => Err(invalid(field, "must be a pair of numbers")),
        },
        _ => Err(invalid(field, "must be a pair of numbers")),
    }
}

fn parse_quantum_numbers(v: &Value) -> Result<Vec<(usize, usize)>> {
    let constraint = "must be a list of [n, m] pairs of non-negative integers";
    let list = v.as_array().ok_or_else(|| invalid("quantum_numbers", constraint))?;
    list.iter()
        .map(|pair| match pair.as_array().map(|a| a.as_slice()) {
            Some([n, m]) => match (n.as_u64(), m.as_u64()) {
                (Some(n), Some(m)) if n as usize <= MAX_ZERO_INDEX && m as usize <= MAX_ZERO_INDEX => {
                    Ok((n as usize, m as usize))
                }
                (Some(_), Some(_)) => Err(invalid(
                    "quantum_numbers",
                    &format!("quantum numbers must not exceed {MAX_ZERO_INDEX}"),
                )),
                _ => Err(invalid("quantum_numbers", constraint)),
            },
            _ => Err(invalid("quantum_numbers", constraint)),
        })
        .collect()
}

fn parse_beam(beam: &Map<String, Value>) -> Result<BeamSpec> {
    let mut b = BeamSpec::default();
    let field = |key: &str| number(beam, key).map_err(|_| invalid(&format!("beam.{key}"), "must be a finite number"));
    if let Some(v) = field("v")? {
        b.v = Speed::new(v);
    }
    if let Some(v) = field("dv_over_v")? {
        b.dv_over_v = v;
    }
    if let Some(v) = field("rho_ucn")? {
        b.rho_ucn = NumberDensity::from_per_cubic_centimeter(v);
    }
    if let Some(v) = field("mono_reduction")? {
        b.mono_reduction = v;
    }
    if let Some(v) = field("entrance_area")? {
        b.entrance_area = Area::from_square_centimeters(v);
    }
    if let Some(v) = field("collimation_ratio")? {
        b.collimation_ratio = v;
    }
    match beam.get("coherence_length_override_cm") {
        None => {}
        Some(Value::Null) => b.coherence_length_override = None,
        Some(_) => b.coherence_length_override = field("coherence_length_override_cm")?.map(Length::from_centimeters),
    }
    if let Some(v) = field("flight_distance")? {
        b.flight_distance = Length::new(v);
    }
    b.validate().map_err(|e| match e {
        Error::InvalidParameter { field, constraint } => invalid(&format!("beam.{field}"), &constraint),
        other => other,
    })?;
    Ok(b)
}

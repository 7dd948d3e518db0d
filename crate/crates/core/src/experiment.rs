//! Feasibility calculator for producing spin-singlet neutron pairs in the
//! gravitational cavity.
//!
//! Covers the monochromaticity condition `m Δv² < E₀₁ − E₀₀`, coherence
//! length, pair yield `N = v t L_c ρ² A²`, hopper collimation, dipole–dipole
//! coupling, decay survival and singlet spin correlations.

use std::fmt;

use serde_json::{json, Value};

use crate::bouncer::GravityScales;
use crate::cavity::{self, CavityState2D};
use crate::constants::{HBAR, MU0_OVER_4PI, NEUTRON_LIFETIME, NEUTRON_MAGNETIC_MOMENT, NEUTRON_MASS, STANDARD_GRAVITY};
use crate::error::{Error, Result};
use crate::units::{Area, Energy, Length, NumberDensity, Speed, Time};

/// Quoted coherence-length estimate for the default beam, 7e-4 cm. Used as
/// the default override so the quoted yield arithmetic is reproduced.
pub const REFERENCE_COHERENCE_LENGTH_CM: f64 = 7e-4;
/// Quoted order of magnitude of the dipole coupling, in eV.
pub const REFERENCE_DIPOLE_ENERGY_EV: f64 = 1e-23;

/// Upper bound on `v_xy/v_z` accepted by the hopper.
pub const MAX_COLLIMATION_RATIO: f64 = 0.2;
/// Climb height allowed by the hopper: half the 10 cm entrance side.
pub const CLIMB_LIMIT_M: f64 = 0.05;
/// Fractional slack on [`CLIMB_LIMIT_M`]; the limit is itself an estimate.
pub const CLIMB_SLACK: f64 = 0.05;

pub const DEPOLARIZATION_PER_COLLISION: f64 = 1e-5;
/// Total depolarization tolerated along the guide.
pub const DEPOLARIZATION_BUDGET: f64 = 0.01;

/// Parameters of the monochromatic UCN beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSpec {
    pub v: Speed,
    pub dv_over_v: f64,
    /// Polarized UCN density before monochromatization.
    pub rho_ucn: NumberDensity,
    /// Density reduction caused by monochromatization.
    pub mono_reduction: f64,
    pub entrance_area: Area,
    pub collimation_ratio: f64,
    /// Coherence length used for the yield. `None` uses `ħ/(mΔv)`.
    pub coherence_length_override: Option<Length>,
    /// Distance the pair travels to the analyzers.
    pub flight_distance: Length,
}

impl Default for BeamSpec {
    fn default() -> Self {
        BeamSpec {
            v: Speed::new(5.0),
            dv_over_v: 1e-3,
            rho_ucn: NumberDensity::from_per_cubic_centimeter(5.0),
            mono_reduction: 1e-3,
            entrance_area: Area::from_square_centimeters(100.0),
            collimation_ratio: MAX_COLLIMATION_RATIO,
            coherence_length_override: Some(Length::from_centimeters(REFERENCE_COHERENCE_LENGTH_CM)),
            flight_distance: Length::new(10.0),
        }
    }
}

impl BeamSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.v.si() > 0.0 && self.v.is_finite()) {
            return Err(Error::invalid("v", "must be positive"));
        }
        if !(self.dv_over_v > 0.0 && self.dv_over_v < 1.0) {
            return Err(Error::invalid("dv_over_v", "must lie in (0, 1)"));
        }
        if !(self.rho_ucn.si() >= 0.0 && self.rho_ucn.is_finite()) {
            return Err(Error::invalid("rho_ucn", "must be non-negative"));
        }
        if !(self.mono_reduction > 0.0 && self.mono_reduction <= 1.0) {
            return Err(Error::invalid("mono_reduction", "must lie in (0, 1]"));
        }
        if !(self.entrance_area.si() > 0.0 && self.entrance_area.is_finite()) {
            return Err(Error::invalid("entrance_area", "must be positive"));
        }
        if !(self.collimation_ratio >= 0.0 && self.collimation_ratio.is_finite()) {
            return Err(Error::invalid("collimation_ratio", "must be non-negative"));
        }
        if let Some(l) = self.coherence_length_override {
            if !(l.si() > 0.0 && l.is_finite()) {
                return Err(Error::invalid("coherence_length_override", "must be positive"));
            }
        }
        if !(self.flight_distance.si() >= 0.0 && self.flight_distance.is_finite()) {
            return Err(Error::invalid("flight_distance", "must be non-negative"));
        }
        Ok(())
    }

    pub fn delta_v(&self) -> Speed {
        self.v * self.dv_over_v
    }

    pub fn effective_density(&self) -> NumberDensity {
        self.rho_ucn * self.mono_reduction
    }
}

/// `L_c = ħ/(m v (Δv/v))`.
pub fn coherence_length(v: Speed, dv_over_v: f64) -> Result<Length> {
    if !(v.si() > 0.0) {
        return Err(Error::invalid("v", "must be positive"));
    }
    if !(dv_over_v > 0.0) {
        return Err(Error::invalid("dv_over_v", "must be positive"));
    }
    Ok(Length::new(HBAR / (NEUTRON_MASS * v.si() * dv_over_v)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonochromaticityCheck {
    pub ok: bool,
    /// `m Δv² / (E₀₁ − E₀₀)`; the condition holds when below one.
    pub margin: f64,
}

pub fn monochromaticity_ok(delta_v: Speed, scales: &GravityScales) -> Result<MonochromaticityCheck> {
    if !(delta_v.si() > 0.0) {
        return Err(Error::invalid("delta_v", "must be positive"));
    }
    let kinetic = NEUTRON_MASS * delta_v.si() * delta_v.si();
    let margin = kinetic / cavity::energy_gap(scales).si();
    Ok(MonochromaticityCheck { ok: margin < 1.0, margin })
}

/// The `Δv` at which `m Δv²` equals the gap.
pub fn threshold_velocity_spread(scales: &GravityScales) -> Speed {
    Speed::new((cavity::energy_gap(scales).si() / NEUTRON_MASS).sqrt())
}

/// Expected number of pairs within one coherence length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRate {
    /// `v L_c A²` in cm⁶ s⁻¹.
    pub coefficient: f64,
    /// `ρ · mono_reduction` in cm⁻³.
    pub effective_density: f64,
    pub time: Time,
    pub pairs: f64,
}

impl PairRate {
    /// Pairs collected in time `t`; linear in `t`.
    pub fn pairs_in(&self, t: Time) -> f64 {
        self.coefficient * t.seconds() * self.effective_density.powi(2)
    }

    /// Time to collect one pair on average.
    pub fn time_per_pair(&self) -> Time {
        Time::new(1.0 / (self.coefficient * self.effective_density.powi(2)))
    }
}

/// `N = v t L_c (ρ·mono_reduction)² A²`, evaluated in centimetres.
pub fn pair_rate(beam: &BeamSpec, coherence_length: Length, t: Time) -> Result<PairRate> {
    if !(coherence_length.si() > 0.0) {
        return Err(Error::invalid("coherence_length", "must be positive"));
    }
    if !(t.seconds() >= 0.0) {
        return Err(Error::invalid("t", "must be non-negative"));
    }
    let area = beam.entrance_area.square_centimeters();
    let coefficient = beam.v.centimeters_per_second() * coherence_length.centimeters() * area * area;
    let effective_density = beam.effective_density().per_cubic_centimeter();
    let rate = PairRate {
        coefficient,
        effective_density,
        time: t,
        pairs: 0.0,
    };
    Ok(PairRate {
        pairs: rate.pairs_in(t),
        ..rate
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopperFailure {
    Collimation,
    ClimbHeight,
}

impl fmt::Display for HopperFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HopperFailure::Collimation => "collimation",
            HopperFailure::ClimbHeight => "climb height",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopperCheck {
    pub v_xy: Speed,
    /// `v_xy²/(2g)`
    pub climb_height: Length,
    pub climb_limit: Length,
    pub collimation_ok: bool,
    pub climb_ok: bool,
    /// Passing, but at the collimation limit or inside the climb slack.
    pub borderline: bool,
    pub failure: Option<HopperFailure>,
}

impl HopperCheck {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn hopper_geometry_check(beam: &BeamSpec) -> HopperCheck {
    let v_xy = beam.v * beam.collimation_ratio;
    let climb_height = Length::new(v_xy.si() * v_xy.si() / (2.0 * STANDARD_GRAVITY));
    let climb_limit = Length::new(CLIMB_LIMIT_M);
    let collimation_ok = beam.collimation_ratio <= MAX_COLLIMATION_RATIO * (1.0 + 1e-12);
    let climb_ok = climb_height.si() <= CLIMB_LIMIT_M * (1.0 + CLIMB_SLACK);
    let failure = if !collimation_ok {
        Some(HopperFailure::Collimation)
    } else if !climb_ok {
        Some(HopperFailure::ClimbHeight)
    } else {
        None
    };
    let at_ratio_limit = beam.collimation_ratio >= MAX_COLLIMATION_RATIO * (1.0 - 1e-9);
    HopperCheck {
        v_xy,
        climb_height,
        climb_limit,
        collimation_ok,
        climb_ok,
        borderline: failure.is_none() && (at_ratio_limit || climb_height > climb_limit),
        failure,
    }
}

/// Dipole–dipole energy of two neutrons at separation `r12`.
///
/// With `aligned_along_z` both moments point along `z`, perpendicular to the
/// separation in the cavity cross-section, so `U = (μ₀/4π) μ²/r³`. Otherwise
/// both moments lie along the separation and `U = −2 (μ₀/4π) μ²/r³`.
pub fn dipole_interaction(r12: Length, aligned_along_z: bool) -> Result<Energy> {
    let mu = NEUTRON_MAGNETIC_MOMENT;
    if aligned_along_z {
        dipole_energy([0.0, 0.0, mu], [0.0, 0.0, mu], [r12.si(), 0.0, 0.0])
    } else {
        dipole_energy([mu, 0.0, 0.0], [mu, 0.0, 0.0], [r12.si(), 0.0, 0.0])
    }
}

/// `U = (μ₀/4π)/r³ [μ₁·μ₂ − 3(μ₁·n̂)(μ₂·n̂)]` for moments in J/T and `r` in m.
pub fn dipole_energy(mu1: [f64; 3], mu2: [f64; 3], r: [f64; 3]) -> Result<Energy> {
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let dist = dot(r, r).sqrt();
    if !(dist > 0.0) {
        return Err(Error::ZeroSeparation);
    }
    let n = [r[0] / dist, r[1] / dist, r[2] / dist];
    let angular = dot(mu1, mu2) - 3.0 * dot(mu1, n) * dot(mu2, n);
    Ok(Energy::new(MU0_OVER_4PI * angular / dist.powi(3)))
}

/// Probability that one neutron survives `t` without decaying.
pub fn decay_survival(t: Time) -> Result<f64> {
    if !(t.seconds() >= 0.0) {
        return Err(Error::invalid("t", "must be non-negative"));
    }
    Ok((-t.seconds() / NEUTRON_LIFETIME).exp())
}

/// Probability that both neutrons of a pair survive `t`.
pub fn pair_decay_survival(t: Time) -> Result<f64> {
    Ok(decay_survival(t)?.powi(2))
}

/// Largest number of wall collisions keeping depolarization within budget.
pub fn depolarization_collision_budget() -> u64 {
    // Nudge before flooring so 0.01/1e-5 does not land on 999.999….
    (DEPOLARIZATION_BUDGET / DEPOLARIZATION_PER_COLLISION * (1.0 + 1e-12)).floor() as u64
}

/// Spin correlation `E(a, b) = −cos(a − b)` of the singlet for analyzers at
/// angles `a` and `b` in a common plane.
pub fn singlet_correlation(a: f64, b: f64) -> f64 {
    -(a - b).cos()
}

/// Analyzer angles `(a, a′, b, b′)` giving the maximal quantum violation.
pub const TSIRELSON_ANGLES: [f64; 4] = [
    0.0,
    std::f64::consts::FRAC_PI_2,
    std::f64::consts::FRAC_PI_4,
    3.0 * std::f64::consts::FRAC_PI_4,
];

/// `S = E(a,b) − E(a,b′) + E(a′,b) + E(a′,b′)`.
pub fn chsh(angles: [f64; 4]) -> f64 {
    let [a, a2, b, b2] = angles;
    singlet_correlation(a, b) - singlet_correlation(a, b2) + singlet_correlation(a2, b) + singlet_correlation(a2, b2)
}

/// Every figure of merit for one beam, cavity and collection time.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub beam: BeamSpec,
    pub g_eff: f64,
    pub collection_time: Time,
    /// Coherence length feeding the yield: the override when set.
    pub coherence_length: Length,
    /// `ħ/(mΔv)`.
    pub coherence_length_computed: Length,
    pub n_c: f64,
    pub pair_rate: PairRate,
    pub pair_rate_computed: PairRate,
    pub monochromaticity: MonochromaticityCheck,
    pub threshold_delta_v: Speed,
    pub hopper: HopperCheck,
    pub resolution_time: Time,
    pub gap: Energy,
    pub pair_separation: Length,
    pub dipole_energy: Energy,
    pub flight_time: Time,
    pub decay_survival: f64,
    pub pair_decay_survival: f64,
    pub depolarization_collision_budget: u64,
    pub chsh: f64,
    pub notes: Vec<String>,
}

impl ExperimentReport {
    /// `N(t)` with the primary coherence length.
    pub fn pairs(&self, t: Time) -> f64 {
        self.pair_rate.pairs_in(t)
    }

    pub fn dipole_to_gap(&self) -> f64 {
        (self.dipole_energy / self.gap).abs()
    }

    /// JSON view: every number is an object `{value, unit}` rounded to 12
    /// significant digits, and the inputs are echoed under `inputs`.
    pub fn to_json(&self) -> Value {
        let b = &self.beam;
        json!({
            "inputs": {
                "v": q(b.v.si(), "m/s"),
                "dv_over_v": q(b.dv_over_v, "1"),
                "rho_ucn": q(b.rho_ucn.per_cubic_centimeter(), "cm^-3"),
                "mono_reduction": q(b.mono_reduction, "1"),
                "entrance_area": q(b.entrance_area.square_centimeters(), "cm^2"),
                "collimation_ratio": q(b.collimation_ratio, "1"),
                "coherence_length_override": b.coherence_length_override.map(|l| q(l.centimeters(), "cm")),
                "flight_distance": q(b.flight_distance.si(), "m"),
                "g_eff": q(self.g_eff, "m/s^2"),
                "t": q(self.collection_time.seconds(), "s"),
            },
            "coherence_length": q(self.coherence_length.si(), "m"),
            "coherence_length_computed": q(self.coherence_length_computed.si(), "m"),
            "n_c": q(self.n_c, "1"),
            "pair_rate_coefficient": q(self.pair_rate.coefficient, "cm^6/s"),
            "pair_rate_coefficient_computed": q(self.pair_rate_computed.coefficient, "cm^6/s"),
            "effective_density": q(self.pair_rate.effective_density, "cm^-3"),
            "pairs": q(self.pair_rate.pairs, "1"),
            "pairs_computed": q(self.pair_rate_computed.pairs, "1"),
            "time_per_pair": q(self.pair_rate.time_per_pair().seconds(), "s"),
            "mono_ok": self.monochromaticity.ok,
            "mono_margin": q(self.monochromaticity.margin, "1"),
            "delta_v": q(self.beam.delta_v().si(), "m/s"),
            "threshold_delta_v": q(self.threshold_delta_v.si(), "m/s"),
            "hopper_pass": self.hopper.pass(),
            "hopper_borderline": self.hopper.borderline,
            "hopper_failure": self.hopper.failure.map(|f| f.to_string()),
            "v_xy": q(self.hopper.v_xy.si(), "m/s"),
            "climb_height": q(self.hopper.climb_height.si(), "m"),
            "climb_limit": q(self.hopper.climb_limit.si(), "m"),
            "resolution_time": q(self.resolution_time.seconds(), "s"),
            "gap": q(self.gap.ev(), "eV"),
            "pair_separation": q(self.pair_separation.micrometers(), "um"),
            "dipole_energy": q(self.dipole_energy.ev(), "eV"),
            "dipole_to_gap": q(self.dipole_to_gap(), "1"),
            "flight_time": q(self.flight_time.seconds(), "s"),
            "decay_survival": q(self.decay_survival, "1"),
            "pair_decay_survival": q(self.pair_decay_survival, "1"),
            "depolarization_collision_budget": q(self.depolarization_collision_budget as f64, "collisions"),
            "chsh": q(self.chsh, "1"),
            "notes": self.notes,
        })
    }
}

/// A `{value, unit}` pair rounded to 12 significant digits.
pub(crate) fn q(value: f64, unit: &str) -> Value {
    json!({ "value": round12(value), "unit": unit })
}

pub(crate) fn round12(v: f64) -> f64 {
    if v.is_finite() {
        format!("{v:.11e}").parse().expect("formatted float parses")
    } else {
        v
    }
}

/// Composes every calculator for `beam` in the cavity described by `scales`.
pub fn full_report(beam: &BeamSpec, scales: &GravityScales, t: Time) -> Result<ExperimentReport> {
    beam.validate()?;
    let computed = coherence_length(beam.v, beam.dv_over_v).map_err(Error::in_field("coherence_length"))?;
    let primary = beam.coherence_length_override.unwrap_or(computed);
    let rate = pair_rate(beam, primary, t).map_err(Error::in_field("pairs"))?;
    let rate_computed = pair_rate(beam, computed, t).map_err(Error::in_field("pairs_computed"))?;
    let n_c = beam.entrance_area.square_centimeters()
        * primary.centimeters()
        * beam.effective_density().per_cubic_centimeter();
    let monochromaticity = monochromaticity_ok(beam.delta_v(), scales).map_err(Error::in_field("mono_ok"))?;
    let hopper = hopper_geometry_check(beam);

    let ground: CavityState2D = cavity::cavity_state(0, 0, scales).map_err(Error::in_field("pair_separation"))?;
    let pair_separation = cavity::pair_mean_separation(&ground).map_err(Error::in_field("pair_separation"))?;
    let dipole = dipole_interaction(pair_separation, true).map_err(Error::in_field("dipole_energy"))?;
    let gap = cavity::energy_gap(scales);

    let flight_time = beam.flight_distance / beam.v;
    let survival = decay_survival(flight_time).map_err(Error::in_field("decay_survival"))?;

    let mut notes = Vec::new();
    if let Some(l) = beam.coherence_length_override {
        let ratio = computed / l;
        if (ratio - 1.0).abs() > 0.01 {
            notes.push(format!(
                "coherence length: hbar/(m dv) = {:.3e} m differs from the supplied {:.3e} m by a factor {:.2}; \
                 pairs use the supplied value, pairs_computed the formula value ({:.3} pairs)",
                computed.si(),
                l.si(),
                ratio,
                rate_computed.pairs
            ));
        }
    }
    notes.push(format!(
        "dipole energy: direct evaluation at r12 = {:.3} um gives U = {:.3e} eV, versus the order-of-magnitude \
         estimate {:.0e} eV; either way U/gap = {:.2e} is negligible",
        pair_separation.micrometers(),
        dipole.ev(),
        REFERENCE_DIPOLE_ENERGY_EV,
        (dipole / gap).abs()
    ));
    if hopper.borderline {
        notes.push(format!(
            "hopper: borderline with climb height {:.4} m against a limit of {:.2} m",
            hopper.climb_height.si(),
            CLIMB_LIMIT_M
        ));
    }
    let budget = depolarization_collision_budget();
    notes.push(format!(
        "depolarization: at {DEPOLARIZATION_PER_COLLISION:e} per collision, up to {budget} wall collisions keep it below {}%",
        DEPOLARIZATION_BUDGET * 100.0
    ));

    Ok(ExperimentReport {
        beam: *beam,
        g_eff: scales.g_eff(),
        collection_time: t,
        coherence_length: primary,
        coherence_length_computed: computed,
        n_c,
        pair_rate: rate,
        pair_rate_computed: rate_computed,
        monochromaticity,
        threshold_delta_v: threshold_velocity_spread(scales),
        hopper,
        resolution_time: cavity::resolution_time(scales),
        gap,
        pair_separation,
        dipole_energy: dipole,
        flight_time,
        decay_survival: survival,
        pair_decay_survival: survival * survival,
        depolarization_collision_budget: budget,
        chsh: chsh(TSIRELSON_ANGLES),
        notes,
    })
}

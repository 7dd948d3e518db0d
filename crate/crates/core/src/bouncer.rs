//! The one-dimensional gravitational bouncer: a particle in `V = m g x` above
//! a hard wall at `x = 0`.
//!
//! Eigenfunctions are shifted Airy functions `ψ_n(x) = N_n Ai(x/l₀ − α_n)`
//! with energies `E_n = α_n ε₀`. Internally everything is evaluated in the
//! reduced coordinate `u = x/l₀`; SI values are produced at the boundary.

use serde::{Deserialize, Serialize};

use crate::airy::{self, airy_zero};
use crate::constants::{HBAR, NEUTRON_MASS, STANDARD_GRAVITY};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Tolerance, DEFAULT_TOLERANCE};
use crate::units::{Energy, Length, Speed};

/// Beyond `u = α_n + TAIL_CUTOFF` the integrand `Ai²` is below 1e-20.
pub const TAIL_CUTOFF: f64 = 12.0;

/// Relative agreement demanded between the quadrature normalization and
/// the closed form `1/(√l₀ |Ai′(−α_n)|)`.
pub const NORMALIZATION_CHECK: f64 = 1e-6;

/// Orientation of the mirror relative to gravity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GravityMode {
    /// A horizontal mirror; `g_eff = g`.
    Vertical,
    /// Each face of the 45°-tilted cavity; `g_eff = g/√2`.
    Tilted,
}

impl GravityMode {
    pub fn g_eff(self) -> f64 {
        match self {
            GravityMode::Vertical => STANDARD_GRAVITY,
            GravityMode::Tilted => STANDARD_GRAVITY / std::f64::consts::SQRT_2,
        }
    }

    pub fn scales(self) -> GravityScales {
        GravityScales::new(self.g_eff()).expect("standard gravity is positive")
    }
}

/// Characteristic length and energy of the bouncer for a given effective gravity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityScales {
    g_eff: f64,
    l0: Length,
    eps0: Energy,
}

impl GravityScales {
    /// `l₀ = (ħ²/(2m²g))^{1/3}`, `ε₀ = (m g² ħ²/2)^{1/3}`.
    pub fn new(g_eff: f64) -> Result<Self> {
        if !(g_eff > 0.0 && g_eff.is_finite()) {
            return Err(Error::invalid("g_eff", format!("must be positive and finite, got {g_eff}")));
        }
        let m = NEUTRON_MASS;
        let l0 = (HBAR * HBAR / (2.0 * m * m * g_eff)).cbrt();
        let eps0 = (m * g_eff * g_eff * HBAR * HBAR / 2.0).cbrt();
        Ok(GravityScales {
            g_eff,
            l0: Length::new(l0),
            eps0: Energy::new(eps0),
        })
    }

    pub fn g_eff(&self) -> f64 {
        self.g_eff
    }

    pub fn l0(&self) -> Length {
        self.l0
    }

    pub fn eps0(&self) -> Energy {
        self.eps0
    }
}

pub fn scales(g_eff: f64) -> Result<GravityScales> {
    GravityScales::new(g_eff)
}

/// `E_n = α_n ε₀`.
pub fn eigen_energy(n: usize, scales: &GravityScales) -> Result<Energy> {
    Ok(scales.eps0 * airy_zero(n)?)
}

/// A normalized bouncer eigenstate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate1D {
    n: usize,
    alpha: f64,
    energy: Energy,
    scales: GravityScales,
    /// Normalization in reduced units: `∫ (c·Ai(u − α))² du = 1`.
    reduced_norm: f64,
}

/// Builds the `n`th eigenstate, normalizing by quadrature on
/// `[0, (α_n + 12) l₀]` and checking the result against the closed form.
pub fn wavefunction(n: usize, scales: &GravityScales) -> Result<Eigenstate1D> {
    let alpha = airy_zero(n)?;
    let upper = alpha + TAIL_CUTOFF;
    let integral = integrate(
        |u| {
            let a = airy::ai(u - alpha);
            a * a
        },
        0.0,
        upper,
        DEFAULT_TOLERANCE,
    )?
    .value;
    let reduced_norm = integral.sqrt().recip();

    let closed_form = airy::ai_prime(-alpha).abs().recip();
    let deviation = (reduced_norm / closed_form - 1.0).abs();
    if deviation > NORMALIZATION_CHECK {
        return Err(Error::NormalizationMismatch { n, deviation });
    }

    Ok(Eigenstate1D {
        n,
        alpha,
        energy: scales.eps0 * alpha,
        scales: *scales,
        reduced_norm,
    })
}

impl Eigenstate1D {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The Airy zero `α_n`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn energy(&self) -> Energy {
        self.energy
    }

    pub fn scales(&self) -> &GravityScales {
        &self.scales
    }

    /// `N_n` in m^{-1/2}, from quadrature.
    pub fn norm_const(&self) -> f64 {
        self.reduced_norm / self.scales.l0.si().sqrt()
    }

    /// `1/(√l₀ |Ai′(−α_n)|)`.
    pub fn analytic_norm_const(&self) -> f64 {
        (self.scales.l0.si().sqrt() * airy::ai_prime(-self.alpha).abs()).recip()
    }

    /// Upper end of the integration domain in units of l₀.
    pub fn reduced_extent(&self) -> f64 {
        self.alpha + TAIL_CUTOFF
    }

    /// `ψ_n(x)` in m^{-1/2}; zero for `x < 0`.
    pub fn amplitude(&self, x: Length) -> f64 {
        self.reduced_amplitude(x / self.scales.l0) / self.scales.l0.si().sqrt()
    }

    /// `dψ_n/dx` in m^{-3/2}; zero for `x < 0`.
    pub fn slope(&self, x: Length) -> f64 {
        let l0 = self.scales.l0.si();
        self.reduced_slope(x / self.scales.l0) / (l0 * l0.sqrt())
    }

    /// Amplitude in reduced units, normalized so `∫ φ(u)² du = 1`.
    pub fn reduced_amplitude(&self, u: f64) -> f64 {
        // Hard wall: exactly zero on and below the mirror.
        if u <= 0.0 {
            0.0
        } else {
            self.reduced_norm * airy::ai(u - self.alpha)
        }
    }

    pub fn reduced_slope(&self, u: f64) -> f64 {
        if u < 0.0 {
            0.0
        } else {
            self.reduced_norm * airy::ai_prime(u - self.alpha)
        }
    }

    /// `|ψ_n|²` in units of l₀⁻¹.
    pub fn reduced_density(&self, u: f64) -> f64 {
        let a = self.reduced_amplitude(u);
        a * a
    }
}

/// `⟨x^k⟩` in m^k for `k ∈ 1..=4`.
pub fn moment(state: &Eigenstate1D, k: u32) -> Result<f64> {
    if !(1..=4).contains(&k) {
        return Err(Error::invalid("k", format!("moment order must be 1..=4, got {k}")));
    }
    let upper = state.reduced_extent();
    let tol = Tolerance {
        abs: DEFAULT_TOLERANCE.abs / upper.powi(k as i32),
        ..DEFAULT_TOLERANCE
    };
    let reduced = integrate(|u| u.powi(k as i32) * state.reduced_density(u), 0.0, upper, tol)?.value;
    Ok(reduced * state.scales.l0.si().powi(k as i32))
}

/// `Δx = √(⟨x²⟩ − ⟨x⟩²)`.
pub fn position_spread(state: &Eigenstate1D) -> Result<Length> {
    let mean = moment(state, 1)?;
    let mean_sq = moment(state, 2)?;
    Ok(Length::new((mean_sq - mean * mean).max(0.0).sqrt()))
}

/// Probability of finding the particle beyond `cutoff`.
pub fn tail_probability(state: &Eigenstate1D, cutoff: Length) -> Result<f64> {
    if !(cutoff.si() >= 0.0) {
        return Err(Error::invalid("cutoff", "must be non-negative"));
    }
    let start = cutoff / state.scales.l0;
    if start == 0.0 {
        return Ok(1.0);
    }
    let extent = state.reduced_extent();
    let end = if start < extent { extent } else { start + TAIL_CUTOFF };
    let p = integrate(|u| state.reduced_density(u), start, end, DEFAULT_TOLERANCE)?.value;
    Ok(p.clamp(0.0, 1.0))
}

/// Overlap `∫ψ_a ψ_b dx` of two states sharing the same scales.
pub fn overlap(a: &Eigenstate1D, b: &Eigenstate1D) -> Result<f64> {
    if a.scales != b.scales {
        return Err(Error::invalid("scales", "states must share the same gravity scales"));
    }
    let upper = a.reduced_extent().max(b.reduced_extent());
    Ok(integrate(
        |u| a.reduced_amplitude(u) * b.reduced_amplitude(u),
        0.0,
        upper,
        DEFAULT_TOLERANCE,
    )?
    .value)
}

/// Classical maximum speed and Heisenberg lower bound on the velocity spread.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityBounds {
    /// `√(2E_n/m)`
    pub v_max: Speed,
    /// `ħ/(2mΔx)`
    pub delta_v_min: Speed,
}

pub fn velocity_bounds(state: &Eigenstate1D) -> Result<VelocityBounds> {
    let spread = position_spread(state)?;
    Ok(VelocityBounds {
        v_max: Speed::new((2.0 * state.energy.si() / NEUTRON_MASS).sqrt()),
        delta_v_min: Speed::new(HBAR / (2.0 * NEUTRON_MASS * spread.si())),
    })
}

/// The state's actual velocity spread `(ħ/m)·√∫ψ′² dx`.
///
/// `⟨p⟩ = 0` for a bound state. The virial theorem for a linear potential
/// fixes the closed form at `√(2E_n/3m)`.
pub fn velocity_spread(state: &Eigenstate1D) -> Result<Speed> {
    let upper = state.reduced_extent();
    let kinetic = integrate(
        |u| {
            let d = state.reduced_slope(u);
            d * d
        },
        0.0,
        upper,
        DEFAULT_TOLERANCE,
    )?
    .value;
    Ok(Speed::new(HBAR / (NEUTRON_MASS * state.scales.l0.si()) * kinetic.sqrt()))
}

//! Product eigenstates of the tilted rectangular cavity.
//!
//! With mirrors on `x = 0` and `y = 0` and the potential `m g (x + y)/√2`,
//! the problem separates into two bouncers at `g_eff = g/√2`:
//! `Ψ_{n,m}(x, y) = ψ_n(x) ψ_m(y)` and `E_{n,m} = E_n + E_m`.
//! `E_{1,1}` is therefore `2α₁ε₀` (≈ 3.90e-12 eV), not `α₁ε₀`.

use std::io::{self, Write};

use crate::airy::airy_zero;
use crate::bouncer::{self, Eigenstate1D, GravityScales};
use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::units::{Energy, Length, Speed, Time};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityState2D {
    x_state: Eigenstate1D,
    y_state: Eigenstate1D,
    energy: Energy,
}

/// Builds `Ψ_{n,m}`.
pub fn cavity_state(n: usize, m: usize, scales: &GravityScales) -> Result<CavityState2D> {
    let x_state = bouncer::wavefunction(n, scales)?;
    let y_state = if m == n { x_state } else { bouncer::wavefunction(m, scales)? };
    Ok(CavityState2D {
        x_state,
        y_state,
        energy: x_state.energy() + y_state.energy(),
    })
}

impl CavityState2D {
    pub fn quantum_numbers(&self) -> (usize, usize) {
        (self.x_state.n(), self.y_state.n())
    }

    pub fn x_state(&self) -> &Eigenstate1D {
        &self.x_state
    }

    pub fn y_state(&self) -> &Eigenstate1D {
        &self.y_state
    }

    pub fn energy(&self) -> Energy {
        self.energy
    }

    pub fn scales(&self) -> &GravityScales {
        self.x_state.scales()
    }

    /// `Ψ(x, y)` in m⁻¹; zero outside the quadrant.
    pub fn amplitude(&self, x: Length, y: Length) -> f64 {
        self.x_state.amplitude(x) * self.y_state.amplitude(y)
    }

    /// `|Ψ|²` in units of l₀⁻², at reduced coordinates.
    pub fn reduced_density(&self, u: f64, v: f64) -> f64 {
        self.x_state.reduced_density(u) * self.y_state.reduced_density(v)
    }
}

/// `E₀₁ − E₀₀ = (α₁ − α₀) ε₀`.
pub fn energy_gap(scales: &GravityScales) -> Energy {
    let a0 = airy_zero(0).expect("index 0 is in range");
    let a1 = airy_zero(1).expect("index 1 is in range");
    scales.eps0() * (a1 - a0)
}

/// `τ_g = ħ/(E₀₁ − E₀₀)`, the dwell time needed to resolve the ground state
/// from the first excited doublet.
pub fn resolution_time(scales: &GravityScales) -> Time {
    Time::new(HBAR / energy_gap(scales).si())
}

/// `|Ψ_{n,m}|²` sampled on a regular grid including both axes.
///
/// Coordinates and density are in units of l₀ and l₀⁻².
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    quantum_numbers: (usize, usize),
    extent: (f64, f64),
    resolution: (usize, usize),
    values: Vec<f64>,
}

/// Default extent in units of l₀; captures > 99.9% of the ground state.
pub const DEFAULT_GRID_EXTENT: (f64, f64) = (8.0, 8.0);
pub const DEFAULT_GRID_RESOLUTION: (usize, usize) = (400, 400);

pub fn density_grid(state: &CavityState2D, extent: (f64, f64), resolution: (usize, usize)) -> Result<DensityGrid> {
    if !(extent.0 > 0.0 && extent.1 > 0.0 && extent.0.is_finite() && extent.1.is_finite()) {
        return Err(Error::invalid("grid_extent", "both extents must be positive and finite"));
    }
    if resolution.0 < 2 || resolution.1 < 2 {
        return Err(Error::invalid("grid_resolution", "need at least 2×2 points"));
    }
    let (nx, ny) = resolution;
    let axis = |count: usize, max: f64| (0..count).map(move |i| max * i as f64 / (count - 1) as f64);
    // The density is separable, so each axis is evaluated once.
    let fx: Vec<f64> = axis(nx, extent.0).map(|u| state.x_state.reduced_density(u)).collect();
    let fy: Vec<f64> = axis(ny, extent.1).map(|v| state.y_state.reduced_density(v)).collect();
    let mut values = Vec::with_capacity(nx * ny);
    for &a in &fx {
        values.extend(fy.iter().map(|&b| a * b));
    }
    Ok(DensityGrid {
        quantum_numbers: state.quantum_numbers(),
        extent,
        resolution,
        values,
    })
}

impl DensityGrid {
    pub fn quantum_numbers(&self) -> (usize, usize) {
        self.quantum_numbers
    }

    pub fn extent(&self) -> (f64, f64) {
        self.extent
    }

    pub fn resolution(&self) -> (usize, usize) {
        self.resolution
    }

    /// Row-major values, `x` index outermost.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn x(&self, i: usize) -> f64 {
        self.extent.0 * i as f64 / (self.resolution.0 - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.extent.1 * j as f64 / (self.resolution.1 - 1) as f64
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.resolution.1 + j]
    }

    pub fn cell_area(&self) -> f64 {
        self.extent.0 / (self.resolution.0 - 1) as f64 * self.extent.1 / (self.resolution.1 - 1) as f64
    }

    /// Σ values · cell area.
    pub fn riemann_sum(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_area()
    }

    /// Interior points strictly larger than all eight neighbours.
    pub fn local_maxima(&self) -> Vec<(usize, usize)> {
        let (nx, ny) = self.resolution;
        let mut found = Vec::new();
        for i in 1..nx.saturating_sub(1) {
            for j in 1..ny.saturating_sub(1) {
                let v = self.get(i, j);
                let is_peak = (-1i64..=1).all(|di| {
                    (-1i64..=1).all(|dj| {
                        (di == 0 && dj == 0) || v > self.get((i as i64 + di) as usize, (j as i64 + dj) as usize)
                    })
                });
                if is_peak {
                    found.push((i, j));
                }
            }
        }
        found
    }

    /// Local maxima of the row at fixed `y` index `j`, scanning along `x`.
    pub fn maxima_along_x(&self, j: usize) -> Vec<usize> {
        (1..self.resolution.0 - 1)
            .filter(|&i| {
                let v = self.get(i, j);
                v > self.get(i - 1, j) && v > self.get(i + 1, j)
            })
            .collect()
    }

    /// Writes the grid as CSV: a `#` header naming the metadata fields, a
    /// `#` line carrying them, then one `x,y,density` row per cell with 12
    /// significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let (n, m) = self.quantum_numbers;
        writeln!(out, "# n,m,extent_x,extent_y,nx,ny")?;
        writeln!(
            out,
            "# {n},{m},{},{},{},{}",
            sig12(self.extent.0),
            sig12(self.extent.1),
            self.resolution.0,
            self.resolution.1
        )?;
        for i in 0..self.resolution.0 {
            let x = sig12(self.x(i));
            for j in 0..self.resolution.1 {
                writeln!(out, "{x},{},{}", sig12(self.y(j)), sig12(self.get(i, j)))?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }
}

/// Scientific notation with 12 significant digits.
pub(crate) fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

/// Probability mass of one state that reaches past the absorbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbsorberOverlap {
    pub quantum_numbers: (usize, usize),
    pub energy: Energy,
    pub overlap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AbsorberSelectivity {
    pub cutoff: Length,
    pub overlaps: Vec<AbsorberOverlap>,
    /// The (0,0) state, when present, has strictly the smallest overlap.
    pub ground_state_minimal: bool,
}

/// `P(x > c or y > c) = 1 − (1 − p_n)(1 − p_m)` for each state.
pub fn absorber_selectivity(states: &[CavityState2D], cutoff: Length) -> Result<AbsorberSelectivity> {
    if !(cutoff.si() > 0.0) {
        return Err(Error::invalid("cutoff", "must be positive"));
    }
    let overlaps = states
        .iter()
        .map(|s| {
            let px = bouncer::tail_probability(&s.x_state, cutoff)?;
            let py = bouncer::tail_probability(&s.y_state, cutoff)?;
            Ok(AbsorberOverlap {
                quantum_numbers: s.quantum_numbers(),
                energy: s.energy,
                overlap: 1.0 - (1.0 - px) * (1.0 - py),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ground = overlaps.iter().find(|o| o.quantum_numbers == (0, 0));
    let ground_state_minimal = match ground {
        Some(g) => overlaps
            .iter()
            .filter(|o| o.quantum_numbers != (0, 0))
            .all(|o| o.overlap > g.overlap),
        None => false,
    };
    Ok(AbsorberSelectivity {
        cutoff,
        overlaps,
        ground_state_minimal,
    })
}

/// `√⟨r₁₂²⟩ = √(2Δx² + 2Δy²)` for two spatially uncorrelated particles in the
/// same state.
pub fn pair_mean_separation(state: &CavityState2D) -> Result<Length> {
    let dx = bouncer::position_spread(&state.x_state)?;
    let dy = bouncer::position_spread(&state.y_state)?;
    Ok(Length::new((2.0 * dx.si().powi(2) + 2.0 * dy.si().powi(2)).sqrt()))
}

/// Bounce count along `x` during a dwell time `T` in a cavity of side `l_x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BounceStats {
    pub dwell_time: Time,
    pub side_length: Length,
    /// `T v̄_x / (2 l_x)`
    pub mean_bounces: f64,
    /// `T Δv_x / (2 l_x)`
    pub bounce_spread: f64,
    /// `v_max/2`
    pub v_bar_x: Speed,
    /// The state's velocity spread along `x`.
    pub delta_v_x: Speed,
    /// Whether odd and even bounce counts can be told apart (`Δn < 1`).
    pub parity_distinguishable: bool,
}

pub fn bounce_statistics(dwell_time: Time, side_length: Length, state: &CavityState2D) -> Result<BounceStats> {
    if !(dwell_time.si() >= 0.0) {
        return Err(Error::invalid("dwell_time", "must be non-negative"));
    }
    if !(side_length.si() > 0.0) {
        return Err(Error::invalid("side_length", "must be positive"));
    }
    let bounds = bouncer::velocity_bounds(&state.x_state)?;
    let v_bar_x = bounds.v_max / 2.0;
    let delta_v_x = bouncer::velocity_spread(&state.x_state)?;
    let per_length = dwell_time.si() / (2.0 * side_length.si());
    let bounce_spread = per_length * delta_v_x.si();
    Ok(BounceStats {
        dwell_time,
        side_length,
        mean_bounces: per_length * v_bar_x.si(),
        bounce_spread,
        v_bar_x,
        delta_v_x,
        parity_distinguishable: bounce_spread < 1.0,
    })
}

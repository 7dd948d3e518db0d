//! Physical constants and the energy-unit conversions used throughout the crate.
//!
//! Values are CODATA 2018. Gravity is standard gravity, 9.80665 m/s²; with it
//! the tilted-cavity scales come out at l₀ ≈ 6.587 µm and ε₀ ≈ 4.775e-13 eV.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::units::Time;

/// Joules per electronvolt (exact in the 2019 SI).
pub const JOULE_PER_EV: f64 = 1.602_176_634e-19;

/// Electronvolts per joule.
pub const EV_PER_JOULE: f64 = 1.0 / JOULE_PER_EV;

pub const NEUTRON_MASS: f64 = 1.674_927_498_04e-27;
pub const HBAR: f64 = 1.054_571_817e-34;
pub const STANDARD_GRAVITY: f64 = 9.806_65;
/// μ₀/4π with μ₀ = 1.25663706212e-6 N/A².
pub const MU0_OVER_4PI: f64 = 1.000_000_000_55e-7;
/// Magnitude of the neutron magnetic moment. The moment itself is
/// antiparallel to the spin.
pub const NEUTRON_MAGNETIC_MOMENT: f64 = 9.662_365_1e-27;
/// Mean life of a free neutron at rest.
pub const NEUTRON_LIFETIME: f64 = 885.7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// kg
    pub neutron_mass: f64,
    /// J·s
    pub hbar: f64,
    /// m/s²
    pub g_earth: f64,
    /// T·m/A
    pub mu0_over_4pi: f64,
    /// J/T, magnitude only
    pub neutron_magnetic_moment: f64,
    /// s
    pub neutron_lifetime: f64,
    /// eV/J
    pub ev_per_joule: f64,
}

impl PhysicalConstants {
    pub fn neutron_lifetime(&self) -> Time {
        Time::new(self.neutron_lifetime)
    }
}

pub const NEUTRON: PhysicalConstants = PhysicalConstants {
    neutron_mass: NEUTRON_MASS,
    hbar: HBAR,
    g_earth: STANDARD_GRAVITY,
    mu0_over_4pi: MU0_OVER_4PI,
    neutron_magnetic_moment: NEUTRON_MAGNETIC_MOMENT,
    neutron_lifetime: NEUTRON_LIFETIME,
    ev_per_joule: EV_PER_JOULE,
};

/// The fixed constant set used by every solver in the crate.
pub fn neutron_constants() -> PhysicalConstants {
    NEUTRON
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergyUnit {
    Joule,
    ElectronVolt,
    NanoElectronVolt,
}

impl EnergyUnit {
    /// Size of one unit in joules.
    pub fn joules(self) -> f64 {
        match self {
            EnergyUnit::Joule => 1.0,
            EnergyUnit::ElectronVolt => JOULE_PER_EV,
            EnergyUnit::NanoElectronVolt => JOULE_PER_EV * 1e-9,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            EnergyUnit::Joule => "J",
            EnergyUnit::ElectronVolt => "eV",
            EnergyUnit::NanoElectronVolt => "neV",
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => Ok(EnergyUnit::Joule),
            "eV" => Ok(EnergyUnit::ElectronVolt),
            "neV" => Ok(EnergyUnit::NanoElectronVolt),
            other => Err(Error::UnknownUnit(other.to_owned())),
        }
    }
}

/// Linear conversion between energy units. Identity conversions return the
/// input untouched.
pub fn convert_energy(value: f64, from: EnergyUnit, to: EnergyUnit) -> f64 {
    if from == to {
        return value;
    }
    match (from, to) {
        (EnergyUnit::Joule, EnergyUnit::ElectronVolt) => value * EV_PER_JOULE,
        (EnergyUnit::ElectronVolt, EnergyUnit::Joule) => value * JOULE_PER_EV,
        _ => value * from.joules() / to.joules(),
    }
}

/// String-tagged variant of [`convert_energy`].
pub fn convert_energy_tagged(value: f64, from: &str, to: &str) -> Result<f64> {
    Ok(convert_energy(value, from.parse()?, to.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNITS: [EnergyUnit; 3] = [
        EnergyUnit::Joule,
        EnergyUnit::ElectronVolt,
        EnergyUnit::NanoElectronVolt,
    ];

    #[test]
    fn reference_values() {
        let c = neutron_constants();
        assert_eq!(c.neutron_lifetime, 885.7);
        assert_eq!(c.g_earth, 9.80665);
        assert!((c.ev_per_joule * JOULE_PER_EV - 1.0).abs() < 1e-15);
        assert_eq!(neutron_constants(), neutron_constants());
    }

    #[test]
    fn all_constants_positive() {
        let c = neutron_constants();
        for v in [
            c.neutron_mass,
            c.hbar,
            c.g_earth,
            c.mu0_over_4pi,
            c.neutron_magnetic_moment,
            c.neutron_lifetime,
            c.ev_per_joule,
        ] {
            assert!(v > 0.0);
        }
    }

    #[test]
    fn ev_to_joule() {
        let j = convert_energy(1.0, EnergyUnit::ElectronVolt, EnergyUnit::Joule);
        assert_eq!(j, 1.602176634e-19);
        assert_eq!(convert_energy(0.0, EnergyUnit::Joule, EnergyUnit::ElectronVolt), 0.0);
        let nev = convert_energy(2.5e-9, EnergyUnit::ElectronVolt, EnergyUnit::NanoElectronVolt);
        assert!((nev - 2.5).abs() < 1e-15);
    }

    #[test]
    fn identity_is_exact() {
        for u in UNITS {
            assert_eq!(convert_energy(3.7e-13, u, u), 3.7e-13);
        }
    }

    #[test]
    fn round_trips_to_machine_precision() {
        for from in UNITS {
            for to in UNITS {
                for x in [1e-30, 4.78e-13, 1.0, 12345.678] {
                    let back = convert_energy(convert_energy(x, from, to), to, from);
                    assert!(((back - x) / x).abs() <= 4.0 * f64::EPSILON, "{from}->{to}");
                }
            }
        }
    }

    #[test]
    fn unknown_tag_is_rejected() {
        assert!(matches!(
            convert_energy_tagged(1.0, "erg", "J"),
            Err(Error::UnknownUnit(u)) if u == "erg"
        ));
        assert!((convert_energy_tagged(1.0, "eV", "neV").unwrap() - 1e9).abs() < 1e-6);
    }
}

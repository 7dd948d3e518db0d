//! Thin SI newtypes for the quantities that cross module boundaries.
//!
//! Every type stores its value in SI units. Presentation units (µm, cm, eV)
//! only appear in the named constructors and accessors.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::constants::JOULE_PER_EV;

macro_rules! quantity {
    ($(#[$meta:meta])* $name:ident, $unit:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
        pub struct $name(f64);

        impl $name {
            pub const ZERO: $name = $name(0.0);

            /// Wraps a value given in SI units.
            pub const fn new(si: f64) -> Self {
                $name(si)
            }

            /// The value in SI units.
            pub const fn si(self) -> f64 {
                self.0
            }

            pub fn abs(self) -> Self {
                $name(self.0.abs())
            }

            pub fn is_finite(self) -> bool {
                self.0.is_finite()
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                $name(self.0 + rhs.0)
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                $name(self.0 - rhs.0)
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(-self.0)
            }
        }

        impl Mul<f64> for $name {
            type Output = $name;
            fn mul(self, rhs: f64) -> $name {
                $name(self.0 * rhs)
            }
        }

        impl Mul<$name> for f64 {
            type Output = $name;
            fn mul(self, rhs: $name) -> $name {
                $name(self * rhs.0)
            }
        }

        impl Div<f64> for $name {
            type Output = $name;
            fn div(self, rhs: f64) -> $name {
                $name(self.0 / rhs)
            }
        }

        impl Div for $name {
            type Output = f64;
            fn div(self, rhs: $name) -> f64 {
                self.0 / rhs.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:e} {}", self.0, $unit)
            }
        }
    };
}

quantity!(
    /// Length in metres.
    Length, "m"
);
quantity!(
    /// Area in square metres.
    Area, "m^2"
);
quantity!(
    /// Energy in joules.
    Energy, "J"
);
quantity!(
    /// Time in seconds.
    Time, "s"
);
quantity!(
    /// Speed in metres per second.
    Speed, "m/s"
);
quantity!(
    /// Number density in inverse cubic metres.
    NumberDensity, "m^-3"
);

impl Length {
    pub fn from_micrometers(um: f64) -> Self {
        Length(um * 1e-6)
    }
    pub fn from_centimeters(cm: f64) -> Self {
        Length(cm * 1e-2)
    }
    pub fn micrometers(self) -> f64 {
        self.0 * 1e6
    }
    pub fn centimeters(self) -> f64 {
        self.0 * 1e2
    }
}

impl Area {
    pub fn from_square_centimeters(cm2: f64) -> Self {
        Area(cm2 * 1e-4)
    }
    pub fn square_centimeters(self) -> f64 {
        self.0 * 1e4
    }
}

impl Energy {
    pub fn from_ev(ev: f64) -> Self {
        Energy(ev * JOULE_PER_EV)
    }
    pub fn joules(self) -> f64 {
        self.0
    }
    pub fn ev(self) -> f64 {
        self.0 / JOULE_PER_EV
    }
}

impl Time {
    pub fn seconds(self) -> f64 {
        self.0
    }
}

impl Speed {
    pub fn from_centimeters_per_second(cms: f64) -> Self {
        Speed(cms * 1e-2)
    }
    pub fn centimeters_per_second(self) -> f64 {
        self.0 * 1e2
    }
}

impl NumberDensity {
    pub fn from_per_cubic_centimeter(per_cm3: f64) -> Self {
        NumberDensity(per_cm3 * 1e6)
    }
    pub fn per_cubic_centimeter(self) -> f64 {
        self.0 * 1e-6
    }
}

impl Mul<Time> for Speed {
    type Output = Length;
    fn mul(self, rhs: Time) -> Length {
        Length(self.0 * rhs.0)
    }
}

impl Div<Speed> for Length {
    type Output = Time;
    fn div(self, rhs: Speed) -> Time {
        Time(self.0 / rhs.0)
    }
}

impl Mul for Length {
    type Output = Area;
    fn mul(self, rhs: Length) -> Area {
        Area(self.0 * rhs.0)
    }
}

//! Length and frequency newtypes.
//!
//! Values are held in SI base units (metres, hertz). Constructors and
//! accessors exist for the interface units used throughout the toolkit
//! (mm for patch dimensions, GHz for frequencies).

use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Speed of light used by every closed form in the crate (m/s).
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Free-space wave impedance (Ω).
pub const ETA_0: f64 = 120.0 * std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Length(f64);

impl Length {
    pub const fn from_m(m: f64) -> Self {
        Length(m)
    }

    pub fn from_mm(mm: f64) -> Self {
        Length(mm * 1e-3)
    }

    pub const fn m(self) -> f64 {
        self.0
    }

    pub fn mm(self) -> f64 {
        self.0 * 1e3
    }
}

impl Add for Length {
    type Output = Length;
    fn add(self, rhs: Length) -> Length {
        Length(self.0 + rhs.0)
    }
}

impl Sub for Length {
    type Output = Length;
    fn sub(self, rhs: Length) -> Length {
        Length(self.0 - rhs.0)
    }
}

impl Mul<Length> for f64 {
    type Output = Length;
    fn mul(self, rhs: Length) -> Length {
        Length(self * rhs.0)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3} mm", self.mm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Frequency(f64);

impl Frequency {
    pub const fn from_hz(hz: f64) -> Self {
        Frequency(hz)
    }

    pub fn from_ghz(ghz: f64) -> Self {
        Frequency(ghz * 1e9)
    }

    pub const fn hz(self) -> f64 {
        self.0
    }

    pub fn ghz(self) -> f64 {
        self.0 * 1e-9
    }

    /// Free-space wavelength.
    pub fn wavelength(self) -> Length {
        Length(SPEED_OF_LIGHT / self.0)
    }

    /// Free-space wavenumber k0 = 2π/λ0 (rad/m).
    pub fn wavenumber(self) -> f64 {
        2.0 * std::f64::consts::PI * self.0 / SPEED_OF_LIGHT
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} GHz", self.ghz())
    }
}

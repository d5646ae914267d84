//! Two-slot transmission-line surrogate for the inset-fed patch.
//!
//! The patch is modelled as two radiating edge slots joined by a section of
//! wide microstrip. Only the fundamental mode is represented: the line is
//! reduced to a single parallel resonance at the lossless two-slot resonance
//! condition. Sweeps far above that resonance are extrapolations of the
//! surrogate and are flagged as such.

mod impedance;
mod link;
mod pattern;
mod slot;

pub use impedance::{reflection_coefficient, vswr, SweepResult, SweepSummary, Vswr, VSWR_CLAMP};
pub use link::{fspl, link_budget, LinkBudget};
pub use pattern::{beamwidth, directivity, far_field, radiation_intensity, PatternCut, RadiationPattern};
pub use slot::{simpson, slot_power_integrand, SlotConductance};

use crate::design::PatchGeometry;
use crate::error::{Error, Result};
use crate::units::Frequency;
use num_complex::Complex64;

/// Lower edge of the model validity window (GHz).
pub const MODEL_MIN_GHZ: f64 = 1.0;
/// Upper edge of the model validity window (GHz).
pub const MODEL_MAX_GHZ: f64 = 30.0;

/// Sweep samples above this multiple of the fundamental resonance are
/// reported as surrogate-model extrapolation.
pub const EXTRAPOLATION_RATIO: f64 = 1.5;

pub(crate) fn check_validity(f: Frequency) -> Result<()> {
    let ghz = f.ghz();
    // small slack so that 1 GHz and 30 GHz grid end points are accepted
    if !(MODEL_MIN_GHZ * (1.0 - 1e-12)..=MODEL_MAX_GHZ * (1.0 + 1e-12)).contains(&ghz) {
        return Err(Error::ModelRange {
            f_ghz: ghz,
            min_ghz: MODEL_MIN_GHZ,
            max_ghz: MODEL_MAX_GHZ,
        });
    }
    Ok(())
}

/// Configuration of the surrogate model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSlotModel {
    /// Include the mutual conductance between the radiating edges.
    pub mutual_coupling: bool,
    /// Simpson panels used for the conductance integrals.
    pub quadrature_panels: usize,
    /// Reference impedance for S11 / VSWR (ohms).
    pub z_ref: f64,
}

impl Default for TwoSlotModel {
    fn default() -> Self {
        TwoSlotModel {
            mutual_coupling: true,
            quadrature_panels: 1000,
            z_ref: 50.0,
        }
    }
}

/// [`TwoSlotModel::slot_admittance`] with default settings.
pub fn slot_admittance(geometry: &PatchGeometry, f: Frequency) -> Result<Complex64> {
    TwoSlotModel::default().slot_admittance(geometry, f)
}

/// [`TwoSlotModel::input_impedance`] with default settings.
pub fn input_impedance(geometry: &PatchGeometry, f: Frequency) -> Result<Complex64> {
    TwoSlotModel::default().input_impedance(geometry, f)
}

/// [`TwoSlotModel::sweep`] with default settings.
pub fn sweep(geometry: &PatchGeometry, f_start: Frequency, f_stop: Frequency, n_points: usize) -> Result<SweepResult> {
    TwoSlotModel::default().sweep(geometry, f_start, f_stop, n_points)
}

use num_complex::Complex64;
use rayon::prelude::*;

use crate::design::PatchGeometry;
use crate::error::{Error, Result};
use crate::units::{Frequency, SPEED_OF_LIGHT};

use super::{check_validity, TwoSlotModel, EXTRAPOLATION_RATIO};

/// VSWR reported for total reflection.
pub const VSWR_CLAMP: f64 = 1e6;
const SATURATION_EPS: f64 = 1e-9;
/// |S11| floor (dB) so that a perfect match stays finite in reports.
const S11_FLOOR_DB: f64 = -300.0;

/// `(z_in - z0) / (z_in + z0)`.
pub fn reflection_coefficient(z_in: Complex64, z0: f64) -> Result<Complex64> {
    if !(z0 > 0.0) || !z0.is_finite() {
        return Err(Error::Domain(format!("reference impedance must be positive, got {z0}")));
    }
    let den = z_in + z0;
    if den.norm() <= f64::EPSILON * z0 {
        return Err(Error::Singularity(format!(
            "z_in = {z_in} cancels the reference impedance"
        )));
    }
    Ok((z_in - z0) / den)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vswr {
    pub value: f64,
    /// Set when |gamma| is within 1e-9 of total reflection; `value` is then
    /// [`VSWR_CLAMP`].
    pub saturated: bool,
}

pub fn vswr(gamma_mag: f64) -> Result<Vswr> {
    if !(gamma_mag >= 0.0) {
        return Err(Error::Domain(format!("|gamma| must be non-negative, got {gamma_mag}")));
    }
    if gamma_mag >= 1.0 - SATURATION_EPS {
        return Ok(Vswr {
            value: VSWR_CLAMP,
            saturated: true,
        });
    }
    let value = (1.0 + gamma_mag) / (1.0 - gamma_mag);
    if value >= VSWR_CLAMP {
        return Ok(Vswr {
            value: VSWR_CLAMP,
            saturated: true,
        });
    }
    Ok(Vswr {
        value,
        saturated: false,
    })
}

fn s11_db(gamma: Complex64) -> f64 {
    let mag = gamma.norm();
    if mag > 0.0 {
        (20.0 * mag.log10()).max(S11_FLOOR_DB)
    } else {
        S11_FLOOR_DB
    }
}

impl TwoSlotModel {
    /// Fundamental resonance: the lossless two-slot line resonates when
    /// `beta (L + 2 delta_L) = pi`.
    pub fn resonant_frequency(&self, geometry: &PatchGeometry) -> Frequency {
        let span = geometry.length.m() + 2.0 * geometry.delta_l.m();
        Frequency::from_hz(SPEED_OF_LIGHT / (2.0 * geometry.eps_eff.sqrt() * span))
    }

    /// Impedance seen at the radiating edge (no inset).
    ///
    /// Near the fundamental the line behaves as a parallel resonator with
    /// conductance `2G` (both slots, plus dielectric loss) and susceptance
    /// slope `pi Yc / f_r`.
    pub fn edge_impedance(&self, geometry: &PatchGeometry, f: Frequency) -> Result<Complex64> {
        let slot = self.slot_admittance(geometry, f)?;
        let yc = self.patch_line_admittance(geometry);
        let fr = self.resonant_frequency(geometry).hz();
        let x = f.hz() / fr - fr / f.hz();
        let stored = 0.5 * std::f64::consts::PI * yc;
        let conductance = 2.0 * slot.re + stored * geometry.substrate.loss_tangent;
        Ok(Complex64::new(conductance, stored * x).inv())
    }

    /// Input impedance at the inset feed point,
    /// `Z_in = Z_edge cos^2(pi Fi / L)`.
    pub fn input_impedance(&self, geometry: &PatchGeometry, f: Frequency) -> Result<Complex64> {
        let z_edge = self.edge_impedance(geometry, f)?;
        let c = (std::f64::consts::PI * geometry.inset_depth.m() / geometry.length.m()).cos();
        Ok(z_edge * (c * c))
    }

    /// Uniform frequency sweep of impedance, S11 and VSWR.
    pub fn sweep(
        &self,
        geometry: &PatchGeometry,
        f_start: Frequency,
        f_stop: Frequency,
        n_points: usize,
    ) -> Result<SweepResult> {
        if n_points < 2 {
            return Err(Error::Input(format!("sweep needs at least 2 points, got {n_points}")));
        }
        if !(f_start.hz() < f_stop.hz()) {
            return Err(Error::Input(format!(
                "sweep start {} GHz must be below stop {} GHz",
                f_start.ghz(),
                f_stop.ghz()
            )));
        }
        check_validity(f_start)?;
        check_validity(f_stop)?;

        let step = (f_stop.hz() - f_start.hz()) / (n_points - 1) as f64;
        let frequencies: Vec<Frequency> = (0..n_points)
            .map(|i| {
                if i + 1 == n_points {
                    f_stop
                } else {
                    Frequency::from_hz(f_start.hz() + step * i as f64)
                }
            })
            .collect();

        let samples: Vec<(Complex64, f64, Vswr)> = frequencies
            .par_iter()
            .map(|&f| {
                let z = self.input_impedance(geometry, f)?;
                let gamma = reflection_coefficient(z, self.z_ref)?;
                Ok((z, s11_db(gamma), vswr(gamma.norm())?))
            })
            .collect::<Result<_>>()?;

        let mut result = SweepResult {
            frequencies,
            z_in: Vec::with_capacity(n_points),
            s11_db: Vec::with_capacity(n_points),
            vswr: Vec::with_capacity(n_points),
            saturated: Vec::with_capacity(n_points),
            resonance: self.resonant_frequency(geometry),
        };
        for (z, s, v) in samples {
            result.z_in.push(z);
            result.s11_db.push(s);
            result.vswr.push(v.value);
            result.saturated.push(v.saturated);
        }
        Ok(result)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub frequencies: Vec<Frequency>,
    pub z_in: Vec<Complex64>,
    pub s11_db: Vec<f64>,
    pub vswr: Vec<f64>,
    /// VSWR clamp flags, one per sample.
    pub saturated: Vec<bool>,
    /// Fundamental resonance of the swept geometry.
    pub resonance: Frequency,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSummary {
    pub f_min_s11: Frequency,
    pub min_s11_db: f64,
    pub vswr_at_min: f64,
}

impl SweepResult {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    /// Index of the deepest S11 sample; the first one wins on ties.
    pub fn min_s11_index(&self) -> usize {
        let mut best = 0;
        for (i, &s) in self.s11_db.iter().enumerate() {
            if s < self.s11_db[best] {
                best = i;
            }
        }
        best
    }

    pub fn summary(&self) -> SweepSummary {
        let i = self.min_s11_index();
        SweepSummary {
            f_min_s11: self.frequencies[i],
            min_s11_db: self.s11_db[i],
            vswr_at_min: self.vswr[i],
        }
    }

    /// Whether sample `i` lies beyond the fundamental-mode range of the
    /// surrogate.
    pub fn is_extrapolated(&self, i: usize) -> bool {
        self.frequencies[i].hz() > EXTRAPOLATION_RATIO * self.resonance.hz()
    }

    /// First frequency flagged as extrapolation, if any.
    pub fn extrapolation_start(&self) -> Option<Frequency> {
        (0..self.len())
            .find(|&i| self.is_extrapolated(i))
            .map(|i| self.frequencies[i])
    }
}

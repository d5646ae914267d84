use num_complex::Complex64;

use crate::design::{microstrip_impedance, PatchGeometry};
use crate::error::Result;
use crate::units::Frequency;

use super::{check_validity, TwoSlotModel};

/// Composite Simpson rule over `[a, b]` with `panels` (rounded up to even)
/// sub-intervals.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2) + panels % 2;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + h * i as f64);
    }
    acc * h / 3.0
}

pub(crate) fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Integrand of the single-slot radiated-power integral,
/// `[sin(k0 W cos t / 2) / cos t]^2 sin^3 t`, written through `sinc` so it is
/// regular at `t = pi/2`.
pub fn slot_power_integrand(k0w: f64, theta: f64) -> f64 {
    let half = 0.5 * k0w;
    let s = theta.sin();
    let a = half * sinc(half * theta.cos());
    a * a * s * s * s
}

const CONDUCTANCE_SCALE: f64 = 1.0 / (120.0 * std::f64::consts::PI * std::f64::consts::PI);

/// Radiating conductances of one edge slot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlotConductance {
    /// Self conductance G1 (S).
    pub self_g: f64,
    /// Mutual conductance G12 between the two radiating edges (S).
    pub mutual_g: f64,
}

impl TwoSlotModel {
    pub fn slot_conductance(&self, geometry: &PatchGeometry, f: Frequency) -> Result<SlotConductance> {
        check_validity(f)?;
        let k0 = f.wavenumber();
        let k0w = k0 * geometry.width.m();
        let k0l = k0 * geometry.length.m();
        let pi = std::f64::consts::PI;
        let self_g = CONDUCTANCE_SCALE * simpson(|t| slot_power_integrand(k0w, t), 0.0, pi, self.quadrature_panels);
        let mutual_g = CONDUCTANCE_SCALE
            * simpson(
                |t| slot_power_integrand(k0w, t) * libm::j0(k0l * t.sin()),
                0.0,
                pi,
                self.quadrature_panels,
            );
        Ok(SlotConductance { self_g, mutual_g })
    }

    /// Characteristic admittance of the patch treated as a wide microstrip.
    pub fn patch_line_admittance(&self, geometry: &PatchGeometry) -> f64 {
        let sub = &geometry.substrate;
        1.0 / microstrip_impedance(geometry.width, sub.eps_r, sub.h)
    }

    /// Admittance of one radiating edge: conductance from the radiated-power
    /// integral (plus mutual coupling when enabled), susceptance from the
    /// open-end extension, `B = Yc tan(beta delta_L)`.
    pub fn slot_admittance(&self, geometry: &PatchGeometry, f: Frequency) -> Result<Complex64> {
        let g = self.slot_conductance(geometry, f)?;
        let conductance = if self.mutual_coupling {
            g.self_g + g.mutual_g
        } else {
            g.self_g
        };
        let beta = f.wavenumber() * geometry.eps_eff.sqrt();
        let susceptance = self.patch_line_admittance(geometry) * (beta * geometry.delta_l.m()).tan();
        Ok(Complex64::new(conductance, susceptance))
    }
}

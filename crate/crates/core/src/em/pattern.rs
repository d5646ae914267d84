use num_complex::Complex64;
use rayon::prelude::*;

use crate::design::PatchGeometry;
use crate::error::{Error, Result};
use crate::units::Frequency;

use super::slot::sinc;

const MIN_GRID: usize = 8;

/// Unnormalised radiation intensity of the two-slot patch at `(theta, phi)`.
///
/// Slots lie along y with width W, separated along x by the effective length
/// `L + 2 delta_L`, over a grounded dielectric slab. The slab factors for the
/// E-plane (`|F1|^2`) and H-plane (`|F2|^2`) components vanish at grazing
/// incidence.
pub fn radiation_intensity(geometry: &PatchGeometry, f: Frequency, theta: f64, phi: f64) -> f64 {
    let k0 = f.wavenumber();
    let eps_r = geometry.substrate.eps_r;
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();

    let separation = geometry.length.m() + 2.0 * geometry.delta_l.m();
    let array = (0.5 * k0 * separation * st * cp).cos();
    let element = sinc(0.5 * k0 * geometry.width.m() * st * sp);

    let s = (eps_r - st * st).max(0.0).sqrt();
    let t = (k0 * geometry.substrate.h.m() * s).tan();
    let j = Complex64::i();
    let f1 = slab_factor(2.0 * ct * s * t, s * t - j * eps_r * ct);
    if st == 0.0 {
        // both slab factors coincide at broadside
        return f1;
    }
    let f2 = slab_factor(2.0 * ct * t, ct * t - j * s);

    let af = array * element;
    af * af * (f1 * cp * cp + f2 * sp * sp)
}

fn slab_factor(num: f64, den: Complex64) -> f64 {
    let d = den.norm_sqr();
    if d == 0.0 {
        0.0
    } else {
        num * num / d
    }
}

/// Far-field intensity sampled over the upper hemisphere and normalised to a
/// unit maximum.
///
/// `theta` runs from 0 to pi/2 inclusive, `phi` covers `[0, 2pi)` uniformly.
/// Intensities are stored theta-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiationPattern {
    pub theta: Vec<f64>,
    pub phi: Vec<f64>,
    pub intensity: Vec<f64>,
    pub frequency: Frequency,
}

/// Principal-plane cut selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternCut {
    /// phi = 0, the plane containing both slots' separation.
    EPlane,
    /// phi = 90 deg.
    HPlane,
}

impl RadiationPattern {
    /// Samples `intensity(theta, phi)` on the standard grid and normalises.
    pub fn from_fn<F>(frequency: Frequency, n_theta: usize, n_phi: usize, intensity: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        if n_theta < MIN_GRID || n_phi < MIN_GRID {
            return Err(Error::Input(format!(
                "pattern grid needs at least {MIN_GRID} points per axis, got {n_theta} x {n_phi}"
            )));
        }
        let half_pi = std::f64::consts::FRAC_PI_2;
        let two_pi = 2.0 * std::f64::consts::PI;
        let theta: Vec<f64> = (0..n_theta)
            .map(|i| half_pi * i as f64 / (n_theta - 1) as f64)
            .collect();
        let phi: Vec<f64> = (0..n_phi).map(|j| two_pi * j as f64 / n_phi as f64).collect();

        let mut values: Vec<f64> = theta
            .par_iter()
            .flat_map_iter(|&t| phi.iter().map(move |&p| (t, p)))
            .map(|(t, p)| intensity(t, p))
            .collect();
        if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::DegeneratePattern(
                "intensity must be finite and non-negative".into(),
            ));
        }
        let max = values.iter().cloned().fold(0.0, f64::max);
        if max <= 0.0 {
            return Err(Error::DegeneratePattern("pattern is zero everywhere".into()));
        }
        values.iter_mut().for_each(|v| *v /= max);
        Ok(RadiationPattern {
            theta,
            phi,
            intensity: values,
            frequency,
        })
    }

    pub fn n_theta(&self) -> usize {
        self.theta.len()
    }

    pub fn n_phi(&self) -> usize {
        self.phi.len()
    }

    pub fn at(&self, i_theta: usize, j_phi: usize) -> f64 {
        self.intensity[i_theta * self.phi.len() + j_phi]
    }

    /// Intensity at grid index `i_theta` on the mirror image `-phi_j`.
    pub fn mirrored(&self, i_theta: usize, j_phi: usize) -> f64 {
        let n = self.phi.len();
        self.at(i_theta, (n - j_phi) % n)
    }

    /// Normalised intensity along a principal cut, linearly interpolated in
    /// theta. `None` when the grid has no sample on that cut.
    pub fn cut_intensity(&self, cut: PatternCut, theta: f64) -> Option<f64> {
        let target = match cut {
            PatternCut::EPlane => 0.0,
            PatternCut::HPlane => std::f64::consts::FRAC_PI_2,
        };
        let j = self.phi.iter().position(|&p| (p - target).abs() < 1e-12)?;
        let theta = theta.abs();
        let last = self.theta.len() - 1;
        if theta > self.theta[last] {
            return Some(0.0);
        }
        let step = self.theta[last] / last as f64;
        let i = ((theta / step).floor() as usize).min(last - 1);
        let w = (theta - self.theta[i]) / step;
        Some((1.0 - w) * self.at(i, j) + w * self.at(i + 1, j))
    }
}

/// Samples the two-slot far field of `geometry` at `f`.
pub fn far_field(geometry: &PatchGeometry, f: Frequency, n_theta: usize, n_phi: usize) -> Result<RadiationPattern> {
    if !(f.hz() > 0.0) || !f.hz().is_finite() {
        return Err(Error::Domain(format!(
            "frequency must be positive, got {} GHz",
            f.ghz()
        )));
    }
    RadiationPattern::from_fn(f, n_theta, n_phi, |t, p| radiation_intensity(geometry, f, t, p))
}

/// Directivity `4 pi U_max / P_rad` in dBi, with `P_rad` from trapezoidal
/// quadrature in theta and the periodic rectangle rule in phi.
pub fn directivity(pattern: &RadiationPattern) -> Result<f64> {
    let n_theta = pattern.n_theta();
    let n_phi = pattern.n_phi();
    if n_theta < 2 || n_phi < 1 {
        return Err(Error::DegeneratePattern("grid too small for quadrature".into()));
    }
    let d_theta = pattern.theta[n_theta - 1] / (n_theta - 1) as f64;
    let d_phi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut power = 0.0;
    let mut peak: f64 = 0.0;
    for (i, &t) in pattern.theta.iter().enumerate() {
        let w = if i == 0 || i == n_theta - 1 { 0.5 } else { 1.0 };
        let row = &pattern.intensity[i * n_phi..(i + 1) * n_phi];
        let ring: f64 = row.iter().sum();
        peak = row.iter().cloned().fold(peak, f64::max);
        power += w * t.sin() * ring;
    }
    power *= d_theta * d_phi;
    if !(power > 0.0) || !(peak > 0.0) {
        return Err(Error::DegeneratePattern("radiated power is zero".into()));
    }
    Ok(10.0 * (4.0 * std::f64::consts::PI * peak / power).log10())
}

/// Half-power beamwidth (radians) along a principal cut, from the analytic
/// intensity. `None` when the cut stays above half power down to the horizon.
pub fn beamwidth(geometry: &PatchGeometry, f: Frequency, cut: PatternCut) -> Option<f64> {
    let phi = match cut {
        PatternCut::EPlane => 0.0,
        PatternCut::HPlane => std::f64::consts::FRAC_PI_2,
    };
    let peak = radiation_intensity(geometry, f, 0.0, phi);
    let level = |t: f64| radiation_intensity(geometry, f, t, phi) / peak - 0.5;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let steps = 2000;
    let mut prev = 0.0;
    for k in 1..=steps {
        let t = half_pi * k as f64 / steps as f64;
        if level(t) < 0.0 {
            let (mut lo, mut hi) = (prev, t);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if level(mid) < 0.0 {
                    hi = mid
                } else {
                    lo = mid
                }
            }
            return Some(lo + hi);
        }
        prev = t;
    }
    None
}

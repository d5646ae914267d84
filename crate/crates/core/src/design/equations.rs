//! Closed-form synthesis equations for the rectangular patch.

use crate::error::{Error, Result};
use crate::units::{Frequency, Length, SPEED_OF_LIGHT};

/// Lower bound on the effective permittivity accepted by the edge-extension
/// formula; its denominator vanishes at this value.
pub const DELTA_L_POLE: f64 = 0.258;

fn check_frequency(f: Frequency) -> Result<()> {
    if !(f.hz() > 0.0) || !f.hz().is_finite() {
        return Err(Error::Domain(format!("frequency must be positive, got {} Hz", f.hz())));
    }
    Ok(())
}

fn check_eps_r(eps_r: f64) -> Result<()> {
    if !(eps_r >= 1.0) || !eps_r.is_finite() {
        return Err(Error::Domain(format!("eps_r must be >= 1, got {eps_r}")));
    }
    Ok(())
}

fn check_positive(name: &str, len: Length) -> Result<()> {
    if !(len.m() > 0.0) || !len.m().is_finite() {
        return Err(Error::Domain(format!("{name} must be positive, got {} mm", len.mm())));
    }
    Ok(())
}

/// Patch width for efficient radiation: `W = c / (2f·sqrt((eps_r + 1)/2))`.
pub fn compute_width(f: Frequency, eps_r: f64) -> Result<Length> {
    check_frequency(f)?;
    check_eps_r(eps_r)?;
    let w = SPEED_OF_LIGHT / (2.0 * f.hz() * ((eps_r + 1.0) / 2.0).sqrt());
    Ok(Length::from_m(w))
}

/// Effective permittivity of a microstrip of width `w` on a substrate of
/// height `h`. Always lies in `[1, eps_r]`.
pub fn compute_eps_eff(eps_r: f64, h: Length, w: Length) -> Result<f64> {
    check_eps_r(eps_r)?;
    check_positive("h", h)?;
    check_positive("W", w)?;
    let ratio = h.m() / w.m();
    Ok((eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / (1.0 + 12.0 * ratio).sqrt())
}

/// Fringing-field length extension at each radiating edge (Hammerstad form).
///
/// The denominator is `(eps_eff - 0.258)(W/h + 0.8)`.
pub fn compute_delta_l(h: Length, eps_eff: f64, w: Length) -> Result<Length> {
    check_positive("h", h)?;
    check_positive("W", w)?;
    if !(eps_eff > DELTA_L_POLE) || !eps_eff.is_finite() {
        return Err(Error::Singularity(format!(
            "edge extension undefined for eps_eff = {eps_eff} (must exceed {DELTA_L_POLE})"
        )));
    }
    let u = w.m() / h.m();
    let dl = 0.412 * h.m() * (eps_eff + 0.3) * (u + 0.264) / ((eps_eff - DELTA_L_POLE) * (u + 0.8));
    Ok(Length::from_m(dl))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResonantLength {
    /// Electrical half-wavelength `c / (2f·sqrt(eps_eff))`.
    pub effective: Length,
    /// Physical length `effective - 2·delta_L`.
    pub physical: Length,
}

pub fn compute_resonant_length(f: Frequency, eps_eff: f64, delta_l: Length) -> Result<ResonantLength> {
    check_frequency(f)?;
    if !(eps_eff >= 1.0) || !eps_eff.is_finite() {
        return Err(Error::Domain(format!("eps_eff must be >= 1, got {eps_eff}")));
    }
    if !(delta_l.m() >= 0.0) {
        return Err(Error::Domain(format!(
            "delta_L must be non-negative, got {} mm",
            delta_l.mm()
        )));
    }
    let effective = Length::from_m(SPEED_OF_LIGHT / (2.0 * f.hz() * eps_eff.sqrt()));
    let physical = effective - 2.0 * delta_l;
    if physical.m() <= 0.0 {
        return Err(Error::Geometry(format!(
            "2*delta_L = {:.4} mm leaves no patch inside L_eff = {:.4} mm",
            2.0 * delta_l.mm(),
            effective.mm()
        )));
    }
    Ok(ResonantLength { effective, physical })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen from an independent evaluation of the closed forms (c = 3e8 m/s).
    const W_245_MM: f64 = 36.266_257_821_985;
    const W_240_MM: f64 = 37.021_804_859_943;
    const EPS_EFF_REF: f64 = 4.345_947_744_364;
    const DELTA_L_REF_MM: f64 = 0.732_068_457_658;

    fn mm(x: f64) -> Length {
        Length::from_mm(x)
    }

    #[test]
    fn width_reproduces_reference_values() {
        let w = compute_width(Frequency::from_ghz(2.45), 4.7).unwrap().mm();
        assert!((w - W_245_MM).abs() < 1e-9);
        assert!((w - 36.27).abs() < 0.05);
        let w = compute_width(Frequency::from_ghz(2.4), 4.7).unwrap().mm();
        assert!((w - W_240_MM).abs() < 1e-9);
        assert!((w - 37.02).abs() < 0.05);
    }

    #[test]
    fn width_in_air_is_half_wavelength() {
        let f = Frequency::from_ghz(5.0);
        let w = compute_width(f, 1.0).unwrap();
        assert!((w.m() - f.wavelength().m() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn width_rejects_bad_inputs() {
        assert!(matches!(
            compute_width(Frequency::from_ghz(0.0), 4.7),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compute_width(Frequency::from_ghz(-1.0), 4.7),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compute_width(Frequency::from_ghz(2.4), 0.9),
            Err(Error::Domain(_))
        ));
        assert!(compute_width(Frequency::from_ghz(2.4), f64::NAN).is_err());
    }

    #[test]
    fn eps_eff_reference_and_limits() {
        let e = compute_eps_eff(4.7, mm(1.6), mm(36.27)).unwrap();
        assert!((e - EPS_EFF_REF).abs() < 1e-9);
        let wide = compute_eps_eff(4.7, mm(1.6), mm(1e9)).unwrap();
        assert!((wide - 4.7).abs() < 1e-4);
        assert_eq!(compute_eps_eff(1.0, mm(1.6), mm(3.0)).unwrap(), 1.0);
        assert!(compute_eps_eff(4.7, mm(1.6), mm(0.0)).is_err());
        assert!(compute_eps_eff(4.7, mm(1.6), mm(-2.0)).is_err());
    }

    #[test]
    fn delta_l_reference() {
        let dl = compute_delta_l(mm(1.6), 4.346, mm(36.27)).unwrap().mm();
        assert!((dl - DELTA_L_REF_MM).abs() < 1e-9);
    }

    #[test]
    fn delta_l_does_not_use_misprinted_denominator() {
        // (eps_eff - 0.25 - 8)(W/h - 0.8) evaluates to about -0.8227 mm here.
        let (h, e, w) = (1.6, 4.346, 36.27);
        let misprint = 0.412 * h * (e + 0.3) * (w / h + 0.264) / ((e - 0.25 - 8.0) * (w / h - 0.8));
        let dl = compute_delta_l(mm(h), e, mm(w)).unwrap().mm();
        assert!((dl - misprint).abs() > 0.1);
        assert!(dl > 0.0);
    }

    #[test]
    fn delta_l_vanishes_with_height_and_scales_linearly() {
        let small = compute_delta_l(mm(1e-9), 4.3, mm(1e-9 * 22.0)).unwrap();
        assert!(small.mm() < 1e-8);
        let a = compute_delta_l(mm(1.0), 4.3, mm(20.0)).unwrap().m();
        let b = compute_delta_l(mm(2.0), 4.3, mm(40.0)).unwrap().m();
        assert!((b - 2.0 * a).abs() < 1e-15);
    }

    #[test]
    fn delta_l_singularity() {
        assert!(matches!(
            compute_delta_l(mm(1.6), 0.258, mm(30.0)),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(
            compute_delta_l(mm(1.6), 0.1, mm(30.0)),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn resonant_length_reference() {
        let r = compute_resonant_length(Frequency::from_ghz(2.45), 4.346, mm(0.732)).unwrap();
        assert!((r.effective.mm() - 29.368_401_828).abs() < 1e-6);
        assert!((r.physical.mm() - 27.904_401_828).abs() < 1e-6);
    }

    #[test]
    fn resonant_length_air_without_fringing() {
        let f = Frequency::from_ghz(3.0);
        let r = compute_resonant_length(f, 1.0, mm(0.0)).unwrap();
        assert!((r.physical.mm() - 50.0).abs() < 1e-9);
    }

    #[test]
    fn resonant_length_decreases_with_extension() {
        let f = Frequency::from_ghz(2.45);
        let mut prev = f64::INFINITY;
        for k in 0..10 {
            let l = compute_resonant_length(f, 4.3, mm(0.2 * k as f64))
                .unwrap()
                .physical
                .m();
            assert!(l < prev);
            prev = l;
        }
    }

    #[test]
    fn resonant_length_geometry_error() {
        let r = compute_resonant_length(Frequency::from_ghz(2.45), 4.346, mm(15.0));
        assert!(matches!(r, Err(Error::Geometry(_))));
    }
}

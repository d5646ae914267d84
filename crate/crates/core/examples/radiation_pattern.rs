//! Far-field principal cuts, beamwidths and directivity of the resonant patch.

use patchsls::design::{design_patch, DesignMode, DesignRequest, SubstrateSpec};
use patchsls::em::{beamwidth, directivity, far_field, PatternCut};
use patchsls::Frequency;

fn main() -> patchsls::Result<()> {
    let f = Frequency::from_ghz(2.45);
    let geometry = design_patch(&DesignRequest::new(
        f,
        SubstrateSpec::fr4(),
        DesignMode::ResonantGeometry,
    ))?;
    let pattern = far_field(&geometry, f, 91, 72)?;

    println!("directivity  {:.3} dBi", directivity(&pattern)?);
    for cut in [PatternCut::EPlane, PatternCut::HPlane] {
        match beamwidth(&geometry, f, cut) {
            Some(bw) => println!("{cut:?} HPBW  {:.1} deg", bw.to_degrees()),
            None => println!("{cut:?} HPBW  above half power to the horizon"),
        }
    }

    println!("\n{:>7}{:>10}{:>10}", "theta", "E_db", "H_db");
    for deg in (0..=90).step_by(10) {
        let t = (deg as f64).to_radians();
        let db = |cut| {
            pattern
                .cut_intensity(cut, t)
                .map_or(f64::NEG_INFINITY, |u: f64| 10.0 * u.log10())
        };
        println!(
            "{deg:>7}{:>10.2}{:>10.2}",
            db(PatternCut::EPlane),
            db(PatternCut::HPlane)
        );
    }
    Ok(())
}

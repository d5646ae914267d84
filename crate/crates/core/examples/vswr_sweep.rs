//! Sweeps the resonant FR4 patch over 2.4-24 GHz and prints the match around resonance.

use patchsls::design::{design_patch, DesignMode, DesignRequest, SubstrateSpec};
use patchsls::em::TwoSlotModel;
use patchsls::Frequency;

fn main() -> patchsls::Result<()> {
    let request = DesignRequest::new(
        Frequency::from_ghz(2.45),
        SubstrateSpec::fr4(),
        DesignMode::ResonantGeometry,
    );
    let geometry = design_patch(&request)?;
    let model = TwoSlotModel::default();
    let result = model.sweep(&geometry, Frequency::from_ghz(2.4), Frequency::from_ghz(24.0), 500)?;

    let s = result.summary();
    println!("model resonance   {:.4} GHz", model.resonant_frequency(&geometry).ghz());
    println!(
        "deepest S11       {:.3} dB at {:.4} GHz",
        s.min_s11_db,
        s.f_min_s11.ghz()
    );
    println!("VSWR there        {:.3}", s.vswr_at_min);
    if let Some(f) = result.extrapolation_start() {
        println!("extrapolating above {:.3} GHz", f.ghz());
    }

    println!(
        "\n{:>9}{:>11}{:>11}{:>9}{:>9}",
        "f_ghz", "re_z", "im_z", "s11_db", "vswr"
    );
    let k = result.min_s11_index();
    for i in k.saturating_sub(3)..(k + 4).min(result.len()) {
        let z = result.z_in[i];
        println!(
            "{:>9.4}{:>11.2}{:>11.2}{:>9.3}{:>9.3}",
            result.frequencies[i].ghz(),
            z.re,
            z.im,
            result.s11_db[i],
            result.vswr[i]
        );
    }
    Ok(())
}

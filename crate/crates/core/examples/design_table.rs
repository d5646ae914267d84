//! Prints the dimension table for both design modes at 2.45 GHz on FR4.

use patchsls::design::{design_patch, DesignMode, DesignRequest, SubstrateSpec};
use patchsls::Frequency;

fn main() -> patchsls::Result<()> {
    let f = Frequency::from_ghz(2.45);
    let paper = design_patch(&DesignRequest::new(f, SubstrateSpec::fr4(), DesignMode::PaperGeometry))?;
    let resonant = design_patch(&DesignRequest::new(
        f,
        SubstrateSpec::fr4(),
        DesignMode::ResonantGeometry,
    ))?;

    println!("{:<5}{:>12}{:>12}", "", "paper", "resonant");
    for ((name, a), (_, b)) in paper.table_rows().into_iter().zip(resonant.table_rows()) {
        println!("{name:<5}{a:>12.3}{b:>12.3}");
    }
    println!();
    println!("eps_eff  = {:.4}", resonant.eps_eff);
    println!("delta_l  = {:.4} mm", resonant.delta_l.mm());
    println!("l_eff    = {:.4} mm", resonant.length_eff.mm());
    Ok(())
}

//! Assigns devices to towers using the patch directivity, first as a scalar
//! gain and then through the E-plane pattern with the patches facing +x.

use patchsls::design::{design_patch, DesignMode, DesignRequest, SubstrateSpec};
use patchsls::em::{directivity, far_field};
use patchsls::planner::{assign_devices, Deployment, LinkParams, Site, TowerGain};
use patchsls::Frequency;

fn main() -> patchsls::Result<()> {
    let f = Frequency::from_ghz(2.45);
    let geometry = design_patch(&DesignRequest::new(
        f,
        SubstrateSpec::fr4(),
        DesignMode::ResonantGeometry,
    ))?;
    let pattern = far_field(&geometry, f, 91, 72)?;
    let peak = directivity(&pattern)?;

    let deployment = Deployment {
        towers: vec![Site::new("T1", 0.0, 0.0), Site::new("T2", 2000.0, 0.0)],
        devices: vec![
            Site::new("front", 900.0, 50.0),
            Site::new("side", 0.0, 700.0),
            Site::new("far", 5000.0, 4000.0),
        ],
        frequency: f,
    };
    let link = LinkParams::default();

    for (label, gain) in [
        ("scalar", TowerGain::Scalar(peak)),
        (
            "pattern",
            TowerGain::Pattern {
                pattern,
                peak_dbi: peak,
                boresight: 0.0,
            },
        ),
    ] {
        println!("{label} gain");
        for a in assign_devices(&deployment, &link, &gain)? {
            let tower = a.tower.map_or("-".to_string(), |t| deployment.towers[t].id.clone());
            println!(
                "  {:<6} -> {:<3} p_rx {:>8.2} dBm  margin {:>7.2} dB",
                a.device_id,
                tower,
                a.budget.p_rx_dbm,
                a.budget.margin_db()
            );
        }
    }
    Ok(())
}

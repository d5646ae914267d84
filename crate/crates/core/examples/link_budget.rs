//! Free-space path loss and received power over distance at 2.45 GHz.

use patchsls::em::{fspl, link_budget};
use patchsls::Frequency;

fn main() -> patchsls::Result<()> {
    let f = Frequency::from_ghz(2.45);
    println!("{:>8}{:>10}{:>10}{:>9}", "d_m", "fspl_db", "p_rx_dbm", "margin");
    for d in [1.0, 10.0, 100.0, 500.0, 1000.0, 5000.0] {
        let b = link_budget(20.0, 7.0, 0.0, d, f, -90.0)?;
        println!(
            "{d:>8.0}{:>10.2}{:>10.2}{:>9.2}{}",
            fspl(d, f)?,
            b.p_rx_dbm,
            b.margin_db(),
            if b.feasible { "" } else { "  (out of range)" }
        );
    }
    Ok(())
}

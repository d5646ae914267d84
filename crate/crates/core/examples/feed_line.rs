//! Synthesizes microstrip feed widths and checks them against the analysis formula.

use patchsls::design::{microstrip_impedance, synthesize_feed_width};
use patchsls::Length;

fn main() -> patchsls::Result<()> {
    let h = Length::from_mm(1.6);
    println!("{:>8}{:>10}{:>12}", "z0", "w_mm", "analysed");
    for z0 in [25.0, 35.0, 50.0, 75.0, 100.0, 120.0] {
        let w = synthesize_feed_width(z0, 4.7, h)?;
        println!("{z0:>8.1}{:>10.3}{:>12.3}", w.mm(), microstrip_impedance(w, 4.7, h));
    }
    Ok(())
}

//! Discrete valley Chern numbers around the six zone corners, and the Berry
//! phase around the whole zone boundary.
//!
//! Run:
//!   cargo run -p topomech --example valley_chern

use topomech::honeycomb::{berry_bz_boundary, chern_discrete, k_point_radius, Band, HoneycombParams, Valley};

fn main() -> topomech::Result<()> {
    let radius = 0.05 * k_point_radius(1.0);
    for beta in [0.1, -0.1] {
        let p = HoneycombParams::new(beta)?;
        println!("beta = {beta:+}");
        for band in [Band::Minus, Band::Plus] {
            let values: Vec<String> = Valley::ALL
                .iter()
                .map(|&v| chern_discrete(&p, v, band, radius, 512).map(|c| format!("{v}:{:+.6}", c.value)))
                .collect::<Result<_, _>>()?;
            println!("  {:>5}: {}", band.name(), values.join("  "));
        }
        for band in [Band::Minus, Band::Plus] {
            let b = berry_bz_boundary(&p, band, 600)?;
            println!("  zone boundary Berry phase ({}): {:.3e}", band.name(), b.angle);
        }
    }

    // the loop value grows with the enclosed area and saturates
    let p = HoneycombParams::new(0.1)?;
    for frac in [0.01, 0.02, 0.05, 0.1] {
        let c = chern_discrete(&p, Valley::K1, Band::Plus, frac * k_point_radius(1.0), 512)?;
        println!("r = {frac:.2}|K1|: C = {:+.6}", c.value);
    }
    Ok(())
}

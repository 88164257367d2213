//! Discrete Zak phase of both bands: 0 for γ > 0, π for γ < 0.
//!
//! Run:
//!   cargo run -p topomech --example zak_phase

use topomech::chain1d::{zak_discrete, Band, ChainParams};

fn main() -> topomech::Result<()> {
    println!("{:>6} {:>6} {:>14} {:>8}", "gamma", "band", "value", "class");
    for gamma in [-0.9, -0.5, -0.1, 0.1, 0.5, 0.9] {
        let params = ChainParams::new(gamma)?;
        for band in [Band::Minus, Band::Plus] {
            let z = zak_discrete(&params, band, 2048, false)?;
            let class = z.classify(1e-6).map_or("?", |c| c.label());
            println!("{gamma:>6.1} {:>6} {:>14.10} {class:>8}", band.name(), z.value);
        }
    }

    // convergence in the number of samples
    let params = ChainParams::new(-0.3)?;
    for n in [16, 64, 256, 1024] {
        let z = zak_discrete(&params, Band::Minus, n, false)?;
        println!("N = {n:>5}: distance to pi = {:.3e}", z.distance_to(std::f64::consts::PI));
    }
    Ok(())
}

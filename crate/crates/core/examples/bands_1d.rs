//! Dispersion of the diatomic chain and its band gap.
//!
//! Run:
//!   cargo run -p topomech --example bands_1d

use std::f64::consts::PI;

use topomech::chain1d::{band_gap_1d, dispersion_1d, ChainParams};

fn main() -> topomech::Result<()> {
    for gamma in [0.0, 0.3, -0.5] {
        let params = ChainParams::new(gamma)?;
        let gap = band_gap_1d(&params);
        println!("gamma = {gamma:+.1}: gap in omega = ({:.6}, {:.6})", gap.lo, gap.hi);
        println!("{:>8} {:>10} {:>10}", "mu", "lambda-", "lambda+");
        for i in 0..=8 {
            let mu = -PI + PI * i as f64 / 4.0;
            let s = dispersion_1d(&params, mu)?;
            println!("{mu:>8.4} {:>10.6} {:>10.6}", s.lambda_minus, s.lambda_plus);
        }
        println!();
    }
    Ok(())
}

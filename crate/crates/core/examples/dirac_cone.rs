//! Conical touching of the honeycomb bands at the zone corners for equal
//! masses, and the gap that a mass contrast opens there.
//!
//! Run:
//!   cargo run -p topomech --example dirac_cone

use topomech::honeycomb::{dirac_check, dispersion_2d, HoneycombParams, Valley, WaveVector2};

fn main() -> topomech::Result<()> {
    let flat = HoneycombParams::new(0.0)?;
    for v in [Valley::K1, Valley::K4] {
        let r = dirac_check(&flat, v, &[1e-2, 1e-3, 1e-4], 8, 0.0)?;
        println!(
            "{v}: lambda* = {}, double = {}, worst slope error vs sqrt(3)/2 at h=1e-4: {:.2e}",
            r.lambda_star,
            r.multiplicity_two,
            r.max_slope_error(1.0, 1e-4)
        );
    }

    println!("\n{:>6} {:>12} {:>12}", "beta", "gap at K1", "3/(1-b)-3/(1+b)");
    for beta in [0.05, 0.1, 0.3] {
        let s = dispersion_2d(&HoneycombParams::new(beta)?, Valley::K1.reduced(), false)?;
        println!("{beta:>6.2} {:>12.9} {:>12.9}", s.gap(), 3.0 / (1.0 - beta) - 3.0 / (1.0 + beta));
    }

    // a cut through K1 along kappa2 = 1/3
    let p = HoneycombParams::new(0.05)?;
    println!("\n{:>8} {:>10} {:>10}", "kappa1", "lambda-", "lambda+");
    for i in 0..=8 {
        let k1 = 0.5 + i as f64 / 24.0;
        let s = dispersion_2d(&p, WaveVector2::new(k1, 1.0 / 3.0), false)?;
        println!("{k1:>8.4} {:>10.6} {:>10.6}", s.lambda_minus, s.lambda_plus);
    }
    Ok(())
}

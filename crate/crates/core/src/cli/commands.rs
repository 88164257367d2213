use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::table::{Cell, Table};
use super::{Bands1dArgs, Bands2dArgs, BerryArgs, ChernArgs, DiracArgs, Edge1dArgs, Edge2dArgs, Failure, RibbonArgs, ZakArgs};
use crate::chain1d::{self, Band, ChainParams};
use crate::honeycomb::{self, HoneycombParams, Valley, WaveVector2};
use crate::lattice::{assemble_chain, assemble_ribbon_with, spectrum};

const ZAK_CLASSIFY_TOL: f64 = 1e-4;

fn bands_or_both(band: Option<super::BandArg>) -> Vec<Band> {
    band.map_or(vec![Band::Minus, Band::Plus], |b| vec![b.into()])
}

/// Uniform grid with exact end points.
fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + (hi - lo) * (i as f64 / (n - 1) as f64) })
}

pub fn bands1d(a: &Bands1dArgs) -> Result<Table, Failure> {
    if a.samples < 2 {
        return Err(Failure::validation("samples", format!("must be at least 2, got {}", a.samples)));
    }
    let params = ChainParams::new(a.gamma)?;
    let mut t = Table::new(&["mu", "lambda_minus", "lambda_plus", "omega_minus", "omega_plus"]);
    for mu in grid(-PI, PI, a.samples) {
        let s = chain1d::dispersion_1d(&params, mu)?;
        t.push(vec![
            mu.into(),
            s.lambda_minus.into(),
            s.lambda_plus.into(),
            s.lambda_minus.max(0.0).sqrt().into(),
            s.lambda_plus.max(0.0).sqrt().into(),
        ]);
    }
    Ok(t)
}

pub fn zak(a: &ZakArgs) -> Result<Table, Failure> {
    let params = ChainParams::new(a.gamma)?;
    let z = chain1d::zak_discrete(&params, a.band.into(), a.n, false)?;
    let class = z.classify(ZAK_CLASSIFY_TOL).map_or("unclassified", |c| c.label());
    let mut t = Table::new(&["gamma", "band", "n", "value", "raw_sum", "classified"]);
    t.push(vec![a.gamma.into(), z.band.name().into(), z.n_points.into(), z.value.into(), z.raw_sum.into(), class.into()]);
    Ok(t)
}

/// Verified roots of the interface condition next to the in-gap eigenvalues
/// of the finite chain; oracle eigenvalues with no matching root get rows of
/// their own.
pub fn edge1d(a: &Edge1dArgs) -> Result<(Table, Table), Failure> {
    let left = ChainParams::new(a.gamma_left).map_err(|e| Failure::from(e).at("gamma_left"))?;
    let right = ChainParams::new(a.gamma_right).map_err(|e| Failure::from(e).at("gamma_right"))?;
    let search = chain1d::edge_modes_1d(&left, &right, a.cells, a.grid)?;
    let model = assemble_chain(&left, &right, a.cells, a.cells, a.boundary.into())?;
    let window = (search.gap.lo * search.gap.lo, search.gap.hi * search.gap.hi);
    let oracle = spectrum(&model, window)?;

    let mut t = Table::new(&[
        "kind",
        "omega",
        "omega_sq",
        "decay_left",
        "decay_right",
        "interface_residual",
        "oracle_omega_sq",
        "oracle_difference",
        "oracle_decay_left",
        "oracle_decay_right",
    ]);
    let mut used = vec![false; oracle.gap_modes.len()];
    for m in &search.modes {
        let w2 = m.omega_sq();
        let nearest = oracle
            .gap_modes
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|x, y| (x.1.omega_sq - w2).abs().total_cmp(&(y.1.omega_sq - w2).abs()));
        let (ow, od, odl, odr) = match nearest {
            Some((i, g)) => {
                used[i] = true;
                (Some(g.omega_sq), Some(g.omega_sq - w2), g.decay_left, g.decay_right)
            }
            None => (None, None, None, None),
        };
        t.push(vec![
            "root".into(),
            m.omega.into(),
            w2.into(),
            m.decay_left.into(),
            m.decay_right.into(),
            m.interface_residual.into(),
            ow.into(),
            od.into(),
            odl.into(),
            odr.into(),
        ]);
    }
    for (g, _) in oracle.gap_modes.iter().zip(&used).filter(|(_, u)| !**u) {
        let mut row = vec![Cell::from("oracle")];
        row.extend(std::iter::repeat_n(Cell::Missing, 5));
        row.extend([g.omega_sq.into(), Cell::Missing, g.decay_left.into(), g.decay_right.into()]);
        t.push(row);
    }

    let mut profile = Table::new(&["cell", "ua", "ub"]);
    if let Some(m) = search.modes.first() {
        for c in &m.profile {
            profile.push(vec![c.cell.into(), c.ua.into(), c.ub.into()]);
        }
    }
    Ok((t, profile))
}

pub fn bands2d(a: &Bands2dArgs) -> Result<Table, Failure> {
    if a.grid < 2 {
        return Err(Failure::validation("grid", format!("must be at least 2, got {}", a.grid)));
    }
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let mut t = Table::new(&["kappa1", "kappa2", "lambda_minus", "lambda_plus"]);
    for k1 in grid(0.0, 1.0, a.grid) {
        for k2 in grid(0.0, 1.0, a.grid) {
            let s = honeycomb::dispersion_2d(&params, WaveVector2::new(k1, k2), false)?;
            t.push(vec![k1.into(), k2.into(), s.lambda_minus.into(), s.lambda_plus.into()]);
        }
    }
    Ok(t)
}

/// The probe directions are rotated by a seeded random angle.
pub fn dirac(a: &DiracArgs, seed: u64) -> Result<Table, Failure> {
    if a.directions < 1 {
        return Err(Failure::validation("directions", "must be at least 1"));
    }
    if !(a.h > 0.0 && a.h.is_finite()) {
        return Err(Failure::validation("h", format!("must be positive, got {}", a.h)));
    }
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let offset = ChaCha8Rng::seed_from_u64(seed).gen::<f64>() * TAU / a.directions as f64;
    let expected = 3f64.sqrt() / 2.0 * a.a;
    let valleys = a.valley.map_or(Valley::ALL.to_vec(), |v| vec![v]);
    let mut t = Table::new(&[
        "valley",
        "lambda_star",
        "multiplicity_two",
        "angle",
        "h",
        "slope_plus",
        "slope_minus",
        "expected_slope",
    ]);
    for v in valleys {
        let r = honeycomb::dirac_check(&params, v, &[a.h], a.directions, offset)?;
        for s in &r.slopes {
            t.push(vec![
                v.to_string().as_str().into(),
                r.lambda_star.into(),
                r.multiplicity_two.into(),
                s.angle.into(),
                s.h.into(),
                s.slope_plus.into(),
                s.slope_minus.into(),
                expected.into(),
            ]);
        }
    }
    Ok(t)
}

pub fn chern(a: &ChernArgs) -> Result<Table, Failure> {
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let radius = a.radius.unwrap_or(0.05 * honeycomb::k_point_radius(a.a));
    let valleys = a.valley.map_or(Valley::ALL.to_vec(), |v| vec![v]);
    let mut t = Table::new(&["valley", "band", "radius", "n_points", "raw_sum", "value"]);
    for v in valleys {
        for band in bands_or_both(a.band) {
            let c = honeycomb::chern_discrete_with(&params, v, band, radius, a.n, a.pairing.into())?;
            t.push(vec![
                v.to_string().as_str().into(),
                band.name().into(),
                c.radius.into(),
                c.n_points.into(),
                c.raw_sum.into(),
                c.value.into(),
            ]);
        }
    }
    Ok(t)
}

pub fn berry(a: &BerryArgs) -> Result<Table, Failure> {
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let mut t = Table::new(&["band", "n_points", "raw_sum", "angle"]);
    for band in bands_or_both(a.band) {
        let b = honeycomb::berry_bz_boundary(&params, band, a.n)?;
        t.push(vec![band.name().into(), b.n_points.into(), b.raw_sum.into(), b.angle.into()]);
    }
    Ok(t)
}

/// Pairs the ribbon's in-gap eigenvalues with the two closed-form interface
/// frequencies: by rank when there are exactly two, by proximity otherwise.
pub(crate) fn match_ribbon(closed: [f64; 2], in_gap: &[f64]) -> [Option<f64>; 2] {
    if in_gap.len() == 2 {
        let (lo, hi) = (in_gap[0].min(in_gap[1]), in_gap[0].max(in_gap[1]));
        return if closed[0] <= closed[1] { [Some(lo), Some(hi)] } else { [Some(hi), Some(lo)] };
    }
    closed.map(|w| in_gap.iter().copied().min_by(|x, y| (x - w).abs().total_cmp(&(y - w).abs())))
}

pub fn edge2d(a: &Edge2dArgs) -> Result<Table, Failure> {
    if a.kpar_samples < 2 {
        return Err(Failure::validation("kpar_samples", format!("must be at least 2, got {}", a.kpar_samples)));
    }
    if a.width < 8 {
        return Err(Failure::validation("width", format!("must be at least 8, got {}", a.width)));
    }
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let mut t = Table::new(&[
        "k_par",
        "lambda_minus",
        "lambda_plus",
        "omega1_sq",
        "omega2_sq",
        "omega3_sq",
        "omega4_sq",
        "ribbon_omega1_sq",
        "ribbon_omega2_sq",
    ]);
    for k in grid(0.0, TAU / a.a, a.kpar_samples) {
        let e = honeycomb::edge_frequencies_2d(&params, k)?;
        let ribbon = assemble_ribbon_with(&params, k, a.width, a.boundary.into())?;
        let s = spectrum(&ribbon, (e.bands.lambda_minus, e.bands.lambda_plus))?;
        let [r1, r2] = match_ribbon([e.omega_sq[0], e.omega_sq[1]], &s.in_gap());
        let mut row: Vec<Cell> = vec![k.into(), e.bands.lambda_minus.into(), e.bands.lambda_plus.into()];
        row.extend(e.omega_sq.iter().map(|w| Cell::from(*w)));
        row.extend([r1.into(), r2.into()]);
        t.push(row);
    }
    Ok(t)
}

pub fn ribbon(a: &RibbonArgs) -> Result<Table, Failure> {
    let params = HoneycombParams::with_lattice_constant(a.beta, a.a)?;
    let bands = honeycomb::interface_bands(&params, a.k_par)?;
    let model = assemble_ribbon_with(&params, a.k_par, a.width, a.boundary.into())?;
    let s = spectrum(&model, (bands.lambda_minus, bands.lambda_plus))?;
    let mut t = Table::new(&["index", "omega_sq", "in_gap", "interface_fraction", "decay_left", "decay_right"]);
    for (i, w) in s.eigenvalues.iter().enumerate() {
        let g = s.gap_modes.iter().find(|g| g.omega_sq == *w);
        t.push(vec![
            i.into(),
            (*w).into(),
            g.is_some().into(),
            g.map(|g| g.interface_fraction).into(),
            g.and_then(|g| g.decay_left).into(),
            g.and_then(|g| g.decay_right).into(),
        ]);
    }
    Ok(t)
}

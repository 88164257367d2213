use super::{FiniteChainModel, LatticeModel, RibbonModel, Sublattice};
use crate::chain1d::{dispersion_1d, Band, EdgeMode1D};
use crate::numerics::{Complex, SimState};
use crate::{Error, Result};

/// The closed-form interface mode laid onto the chain's degrees of freedom,
/// at rest. Cells beyond the stored profile are left at zero.
pub fn edge_mode_state(model: &FiniteChainModel, mode: &EdgeMode1D) -> SimState {
    let positions = model
        .labels()
        .iter()
        .map(|d| {
            mode.cell(d.cell).map_or(0.0, |c| match d.sublattice {
                Sublattice::A => c.ua,
                Sublattice::B => c.ub,
            })
        })
        .collect::<Vec<_>>();
    SimState::from_real(&positions, &vec![0.0; positions.len()])
}

/// Real part of a Gaussian wave packet `Σ v(μ) e^{i(μj − ωt)}` on the right
/// half of the chain, centred on cell `center` with `width` cells. For
/// `0 < μ < π` it travels towards larger `j`.
pub fn bloch_packet_state(
    model: &FiniteChainModel,
    band: Band,
    mu: f64,
    center: f64,
    width: f64,
) -> Result<SimState> {
    if !(width > 0.0) {
        return Err(Error::invalid("width", "must be positive"));
    }
    let sample = dispersion_1d(&model.params_right, mu)?;
    let v = sample.eigenvector(band)?;
    let omega = sample.lambda(band).sqrt();
    let mut pos = Vec::with_capacity(model.dof());
    let mut vel = Vec::with_capacity(model.dof());
    for d in model.labels() {
        if d.cell < 1 {
            pos.push(0.0);
            vel.push(0.0);
            continue;
        }
        let j = d.cell as f64;
        let env = (-0.5 * ((j - center) / width).powi(2)).exp();
        let comp = match d.sublattice {
            Sublattice::A => v[0],
            Sublattice::B => v[1],
        };
        let wave = comp * Complex::from_polar(env, mu * j);
        pos.push(wave.re);
        vel.push((wave * Complex::new(0.0, -omega)).re);
    }
    Ok(SimState::from_real(&pos, &vel))
}

/// Unit velocity on one degree of freedom, everything else at rest.
pub fn point_impulse_state(dof: usize, index: usize, velocity: f64) -> Result<SimState> {
    if index >= dof {
        return Err(Error::invalid("index", format!("{index} out of range (dof = {dof})")));
    }
    let mut s = SimState::at_rest(dof);
    s.velocities[index] = velocity.into();
    Ok(s)
}

/// A ribbon eigenvector as a complex standing state at rest.
pub fn ribbon_mode_state(model: &RibbonModel, displacement: &[Complex]) -> Result<SimState> {
    if displacement.len() != model.dof() {
        return Err(Error::invalid("initial", "displacement length does not match the ribbon"));
    }
    let mut s = SimState::at_rest(model.dof());
    s.positions = displacement.to_vec();
    Ok(s)
}

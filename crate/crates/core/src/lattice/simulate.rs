use super::spectrum::INTERFACE_CELLS;
use super::LatticeModel;
use crate::numerics::{eig_hermitian_dense, Complex, SimState, Verlet};
use crate::{Error, Result};

/// Stable time steps satisfy `dt ≤ DT_FACTOR / ω_max`.
pub const DT_FACTOR: f64 = 0.2;

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub omega_max: f64,
    /// `t_0 … t_n`, one entry per step plus the initial state.
    pub times: Vec<f64>,
    /// `½vᴴMv + ½uᴴKu`.
    pub energies: Vec<f64>,
    /// The quadratic form velocity Verlet conserves exactly for linear
    /// forces: the mechanical energy minus `(dt²/8)(Ku)ᴴM⁻¹(Ku)`.
    pub modified_energies: Vec<f64>,
    pub probes: Vec<usize>,
    /// `probe_series[k][s]`: displacement of `probes[k]` at step `s`.
    pub probe_series: Vec<Vec<Complex>>,
    pub final_state: SimState,
    /// Energy per degree of freedom at the end; sums to the final energy.
    pub final_energy_profile: Vec<f64>,
}

impl Trajectory {
    /// `max |E_s − E_0| / E_0` over the run.
    pub fn relative_drift(series: &[f64]) -> f64 {
        let e0 = series[0];
        if e0 == 0.0 {
            return series.iter().map(|e| e.abs()).fold(0.0, f64::max);
        }
        series.iter().map(|e| (e - e0).abs() / e0.abs()).fold(0.0, f64::max)
    }

    /// Share of the final energy carried by degrees of freedom within
    /// `INTERFACE_CELLS` cells of the interface.
    pub fn final_interface_fraction<M: LatticeModel + ?Sized>(&self, model: &M) -> f64 {
        interface_fraction(model, &self.final_energy_profile)
    }
}

pub(crate) fn interface_fraction<M: LatticeModel + ?Sized>(model: &M, profile: &[f64]) -> f64 {
    let total: f64 = profile.iter().sum();
    if total == 0.0 {
        return 0.0;
    }
    let near: f64 = model
        .labels()
        .iter()
        .zip(profile)
        .filter(|(d, _)| d.cell.abs() <= INTERFACE_CELLS)
        .map(|(_, e)| e)
        .sum();
    near / total
}

struct Energetics<'a> {
    rows: Vec<Vec<(usize, Complex)>>,
    masses: &'a [f64],
}

impl Energetics<'_> {
    fn force(&self, u: &[Complex]) -> Vec<Complex> {
        self.rows.iter().map(|row| row.iter().map(|(j, k)| k * u[*j]).sum()).collect()
    }

    fn energy(&self, s: &SimState, dt: f64) -> (f64, f64, Vec<f64>) {
        let ku = self.force(&s.positions);
        let mut profile = Vec::with_capacity(ku.len());
        let mut correction = 0.0;
        for i in 0..ku.len() {
            let kinetic = 0.5 * self.masses[i] * s.velocities[i].norm_sqr();
            let potential = 0.5 * (s.positions[i].conj() * ku[i]).re;
            profile.push(kinetic + potential);
            correction += ku[i].norm_sqr() / self.masses[i];
        }
        let e: f64 = profile.iter().sum();
        (e, e - dt * dt / 8.0 * correction, profile)
    }
}

/// Integrates `M ü = −K u` with velocity Verlet for `n_steps` steps.
pub fn simulate<M: LatticeModel + ?Sized>(
    model: &M,
    initial: SimState,
    dt: f64,
    n_steps: usize,
    probes: &[usize],
) -> Result<Trajectory> {
    let n = model.dof();
    if initial.positions.len() != n || initial.velocities.len() != n {
        return Err(Error::invalid("initial", format!("state has {} entries, model has {n}", initial.dof())));
    }
    if let Some(&p) = probes.iter().find(|&&p| p >= n) {
        return Err(Error::invalid("probes", format!("index {p} out of range (dof = {n})")));
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::invalid("dt", format!("must be positive, got {dt}")));
    }
    let omega_max = eig_hermitian_dense(&model.dynamical())?.eigenvalues.last().copied().unwrap_or(0.0).max(0.0).sqrt();
    let bound = if omega_max > 0.0 { DT_FACTOR / omega_max } else { f64::INFINITY };
    if dt > bound {
        return Err(Error::Unstable { dt, bound });
    }

    let en = Energetics { rows: model.sparse_rows(), masses: model.masses() };
    let accel = |u: &[Complex], out: &mut [Complex]| {
        for (i, row) in en.rows.iter().enumerate() {
            let f: Complex = row.iter().map(|(j, k)| k * u[*j]).sum();
            out[i] = -f / en.masses[i];
        }
    };

    let mut times = Vec::with_capacity(n_steps + 1);
    let mut energies = Vec::with_capacity(n_steps + 1);
    let mut modified = Vec::with_capacity(n_steps + 1);
    let mut probe_series = vec![Vec::with_capacity(n_steps + 1); probes.len()];
    let mut record = |s: &SimState, times: &mut Vec<f64>| {
        let (e, em, _) = en.energy(s, dt);
        times.push(s.time);
        energies.push(e);
        modified.push(em);
        for (series, &p) in probe_series.iter_mut().zip(probes) {
            series.push(s.positions[p]);
        }
    };
    let mut sim = Verlet::new(initial, accel);
    record(sim.state(), &mut times);
    for _ in 0..n_steps {
        sim.step(dt);
        record(sim.state(), &mut times);
    }
    let final_state = sim.into_state();
    let (_, _, final_energy_profile) = en.energy(&final_state, dt);
    Ok(Trajectory {
        dt,
        omega_max,
        times,
        energies,
        modified_energies: modified,
        probes: probes.to_vec(),
        probe_series,
        final_state,
        final_energy_profile,
    })
}

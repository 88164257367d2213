use super::complex::Complex;

/// Positions and velocities of every degree of freedom at one instant.
/// Real systems keep the imaginary parts at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SimState {
    pub time: f64,
    pub positions: Vec<Complex>,
    pub velocities: Vec<Complex>,
}

impl SimState {
    pub fn at_rest(dof: usize) -> Self {
        SimState {
            time: 0.0,
            positions: vec![Complex::new(0.0, 0.0); dof],
            velocities: vec![Complex::new(0.0, 0.0); dof],
        }
    }

    pub fn from_real(positions: &[f64], velocities: &[f64]) -> Self {
        SimState {
            time: 0.0,
            positions: positions.iter().map(|&x| x.into()).collect(),
            velocities: velocities.iter().map(|&x| x.into()).collect(),
        }
    }

    pub fn dof(&self) -> usize {
        self.positions.len()
    }
}

/// One velocity-Verlet step. `accel(u, out)` writes the accelerations for
/// positions `u` into `out`.
pub fn verlet_step<F>(state: &SimState, mut accel: F, dt: f64) -> SimState
where
    F: FnMut(&[Complex], &mut [Complex]),
{
    let n = state.dof();
    let mut acc = vec![Complex::new(0.0, 0.0); n];
    accel(&state.positions, &mut acc);
    let mut next = state.clone();
    advance(&mut next, &mut acc, &mut accel, dt);
    next
}

/// Velocity Verlet with the acceleration carried between steps, so each
/// step costs one force evaluation.
pub struct Verlet<F> {
    state: SimState,
    acc: Vec<Complex>,
    accel: F,
}

impl<F> Verlet<F>
where
    F: FnMut(&[Complex], &mut [Complex]),
{
    pub fn new(state: SimState, mut accel: F) -> Self {
        let mut acc = vec![Complex::new(0.0, 0.0); state.dof()];
        accel(&state.positions, &mut acc);
        Verlet { state, acc, accel }
    }

    pub fn step(&mut self, dt: f64) {
        advance(&mut self.state, &mut self.acc, &mut self.accel, dt);
    }

    pub fn state(&self) -> &SimState {
        &self.state
    }

    pub fn into_state(self) -> SimState {
        self.state
    }
}

fn advance<F>(s: &mut SimState, acc: &mut [Complex], accel: &mut F, dt: f64)
where
    F: FnMut(&[Complex], &mut [Complex]),
{
    let half = 0.5 * dt;
    for ((x, v), a) in s.positions.iter_mut().zip(s.velocities.iter_mut()).zip(acc.iter()) {
        *v += a * half;
        *x += *v * dt;
    }
    accel(&s.positions, acc);
    for (v, a) in s.velocities.iter_mut().zip(acc.iter()) {
        *v += a * half;
    }
    s.time += dt;
}

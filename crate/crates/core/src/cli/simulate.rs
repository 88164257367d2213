//! Schema and runner for `simulate`.
//!
//! ```toml
//! model = "chain"        # or "ribbon"
//! dt = 0.05
//! steps = 10000
//! probes = [99, 100]     # degree-of-freedom indices recorded every step
//! record_every = 10      # energy rows kept every n steps (default 1)
//!
//! [chain]                # required for model = "chain"
//! gamma_left = -0.5
//! gamma_right = 0.5
//! cells = 50             # per side (default 50)
//! boundary = "clamped"   # clamped | clamped_whole_cells | free
//!
//! [ribbon]               # required for model = "ribbon"
//! beta = 0.1
//! a = 1.0
//! k_par = 3.14159
//! width = 40
//! boundary = "closed"    # closed | clamped
//!
//! [initial]
//! kind = "edge_mode"     # edge_mode | bloch_packet | point_impulse | zero
//! # bloch_packet: band = "minus", mu = 1.57, center = 10.0, width = 3.0
//! # point_impulse: index = 0, velocity = 1.0
//! # edge_mode on a ribbon: mode = 1 picks the lowest in-gap eigenvector
//!
//! [output]
//! energy = "energy.csv"  # overridden by --out; standard output if neither
//! profile = "profile.csv"
//! ```

use serde::Deserialize;
use std::path::PathBuf;

use super::table::{Cell, Table};
use super::Failure;
use crate::chain1d::{edge_mode_1d, Band, ChainParams};
use crate::honeycomb::{interface_bands, HoneycombParams};
use crate::lattice::{
    assemble_chain, assemble_ribbon_with, bloch_packet_state, edge_mode_state, point_impulse_state, ribbon_mode_state,
    simulate, spectrum, ChainBoundary, LatticeModel, RibbonBoundary, Trajectory,
};
use crate::numerics::SimState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Chain,
    Ribbon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
enum ChainBoundaryName {
    #[default]
    Clamped,
    ClampedWholeCells,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RibbonBoundaryName {
    #[default]
    Closed,
    Clamped,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainSection {
    pub gamma_left: f64,
    pub gamma_right: f64,
    #[serde(default = "default_cells")]
    pub cells: usize,
    #[serde(default)]
    boundary: ChainBoundaryName,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RibbonSection {
    pub beta: f64,
    #[serde(default = "default_a")]
    pub a: f64,
    pub k_par: f64,
    #[serde(default = "default_width")]
    pub width: usize,
    #[serde(default)]
    boundary: RibbonBoundaryName,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialSection {
    EdgeMode {
        #[serde(default)]
        mode: Option<usize>,
    },
    BlochPacket {
        band: String,
        mu: f64,
        center: f64,
        width: f64,
    },
    PointImpulse {
        index: usize,
        #[serde(default = "default_velocity")]
        velocity: f64,
    },
    Zero,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub energy: Option<PathBuf>,
    pub profile: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    pub model: ModelKind,
    pub dt: f64,
    pub steps: usize,
    #[serde(default)]
    pub probes: Vec<usize>,
    #[serde(default = "default_record_every")]
    pub record_every: usize,
    pub chain: Option<ChainSection>,
    pub ribbon: Option<RibbonSection>,
    pub initial: InitialSection,
    #[serde(default)]
    pub output: OutputSection,
}

fn default_cells() -> usize {
    50
}
fn default_a() -> f64 {
    1.0
}
fn default_width() -> usize {
    40
}
fn default_velocity() -> f64 {
    1.0
}
fn default_record_every() -> usize {
    1
}

impl SimulationConfig {
    /// Parses and checks the document; failures name the offending key.
    pub fn from_toml(text: &str) -> Result<Self, Failure> {
        let value: toml::Table = text.parse().map_err(|e: toml::de::Error| {
            Failure::validation("config", e.message().lines().next().unwrap_or("invalid TOML").to_string())
        })?;
        let cfg: SimulationConfig = serde_path_to_error::deserialize(toml::Value::Table(value)).map_err(|e| {
            let path = e.path().to_string();
            let field = if path == "." || path.is_empty() { "config".to_string() } else { path };
            Failure::validation(field, e.inner().to_string().lines().next().unwrap_or("invalid value").to_string())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), Failure> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Failure::validation("dt", format!("must be positive, got {}", self.dt)));
        }
        if self.steps == 0 {
            return Err(Failure::validation("steps", "must be at least 1"));
        }
        if self.record_every == 0 {
            return Err(Failure::validation("record_every", "must be at least 1"));
        }
        match self.model {
            ModelKind::Chain if self.chain.is_none() => Err(Failure::validation("chain", "section required for model = \"chain\"")),
            ModelKind::Ribbon if self.ribbon.is_none() => {
                Err(Failure::validation("ribbon", "section required for model = \"ribbon\""))
            }
            ModelKind::Ribbon if matches!(self.initial, InitialSection::BlochPacket { .. }) => {
                Err(Failure::validation("initial.kind", "bloch_packet is only available for the chain"))
            }
            _ => Ok(()),
        }
    }
}

fn field_error(e: crate::Error, section: &str) -> Failure {
    let f = Failure::from(e);
    let field = format!("{section}.{}", f.field);
    f.at(field)
}

/// Runs the simulation and returns the energy table and the final profile.
pub fn run(cfg: &SimulationConfig) -> Result<(Table, Table), Failure> {
    match cfg.model {
        ModelKind::Chain => {
            let c = cfg.chain.as_ref().expect("validated");
            let left = ChainParams::new(c.gamma_left).map_err(|e| Failure::from(e).at("chain.gamma_left"))?;
            let right = ChainParams::new(c.gamma_right).map_err(|e| Failure::from(e).at("chain.gamma_right"))?;
            let boundary = match c.boundary {
                ChainBoundaryName::Clamped => ChainBoundary::Clamped,
                ChainBoundaryName::ClampedWholeCells => ChainBoundary::ClampedWholeCells,
                ChainBoundaryName::Free => ChainBoundary::Free,
            };
            let model = assemble_chain(&left, &right, c.cells, c.cells, boundary).map_err(|e| field_error(e, "chain"))?;
            let state = match &cfg.initial {
                InitialSection::EdgeMode { .. } => {
                    let mode = edge_mode_1d(&left, &right, c.cells)
                        .map_err(|e| field_error(e, "chain"))?
                        .ok_or_else(|| Failure::numerical("initial.kind", "no interface mode for these chain parameters"))?;
                    edge_mode_state(&model, &mode)
                }
                InitialSection::BlochPacket { band, mu, center, width } => {
                    let band: Band = band.parse().map_err(|e| field_error(e, "initial"))?;
                    bloch_packet_state(&model, band, *mu, *center, *width).map_err(|e| field_error(e, "initial"))?
                }
                other => generic_state(other, model.dof())?,
            };
            finish(cfg, &model, state)
        }
        ModelKind::Ribbon => {
            let r = cfg.ribbon.as_ref().expect("validated");
            let params = HoneycombParams::with_lattice_constant(r.beta, r.a).map_err(|e| field_error(e, "ribbon"))?;
            let boundary = match r.boundary {
                RibbonBoundaryName::Closed => RibbonBoundary::Closed,
                RibbonBoundaryName::Clamped => RibbonBoundary::Clamped,
            };
            let model =
                assemble_ribbon_with(&params, r.k_par, r.width, boundary).map_err(|e| field_error(e, "ribbon"))?;
            let state = match &cfg.initial {
                InitialSection::EdgeMode { mode } => {
                    let bands = interface_bands(&params, r.k_par).map_err(|e| field_error(e, "ribbon"))?;
                    let s = spectrum(&model, (bands.lambda_minus, bands.lambda_plus))?;
                    let pick = mode.unwrap_or(1);
                    let g = pick
                        .checked_sub(1)
                        .and_then(|i| s.gap_modes.get(i))
                        .ok_or_else(|| {
                            Failure::numerical(
                                "initial.mode",
                                format!("ribbon has {} in-gap modes, asked for mode {pick}", s.gap_modes.len()),
                            )
                        })?;
                    ribbon_mode_state(&model, &g.displacement)?
                }
                other => generic_state(other, model.dof())?,
            };
            finish(cfg, &model, state)
        }
    }
}

fn generic_state(initial: &InitialSection, dof: usize) -> Result<SimState, Failure> {
    match initial {
        InitialSection::PointImpulse { index, velocity } => {
            point_impulse_state(dof, *index, *velocity).map_err(|e| field_error(e, "initial"))
        }
        InitialSection::Zero => Ok(SimState::at_rest(dof)),
        _ => unreachable!("model-specific initial states are handled by the caller"),
    }
}

fn finish<M: LatticeModel>(cfg: &SimulationConfig, model: &M, state: SimState) -> Result<(Table, Table), Failure> {
    let traj = simulate(model, state, cfg.dt, cfg.steps, &cfg.probes)?;
    Ok((energy_table(cfg, &traj), profile_table(model, &traj)))
}

fn energy_table(cfg: &SimulationConfig, traj: &Trajectory) -> Table {
    let mut columns: Vec<String> = ["step", "time", "energy", "modified_energy"].map(String::from).to_vec();
    for p in &traj.probes {
        columns.push(format!("u{p}_re"));
        columns.push(format!("u{p}_im"));
    }
    let mut t = Table::with_columns(columns);
    let last = traj.times.len() - 1;
    for step in (0..=last).filter(|s| s % cfg.record_every == 0 || *s == last) {
        let mut row: Vec<Cell> = vec![
            step.into(),
            traj.times[step].into(),
            traj.energies[step].into(),
            traj.modified_energies[step].into(),
        ];
        for series in &traj.probe_series {
            row.push(series[step].re.into());
            row.push(series[step].im.into());
        }
        t.push(row);
    }
    t
}

fn profile_table<M: LatticeModel>(model: &M, traj: &Trajectory) -> Table {
    let mut t = Table::new(&["index", "cell", "sublattice", "energy", "u_re", "u_im", "v_re", "v_im"]);
    let s = &traj.final_state;
    for (i, d) in model.labels().iter().enumerate() {
        t.push(vec![
            i.into(),
            d.cell.into(),
            d.sublattice.name().into(),
            traj.final_energy_profile[i].into(),
            s.positions[i].re.into(),
            s.positions[i].im.into(),
            s.velocities[i].re.into(),
            s.velocities[i].im.into(),
        ]);
    }
    t
}

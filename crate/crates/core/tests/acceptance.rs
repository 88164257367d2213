//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topomech::chain1d::{band_gap_1d, common_gap_1d, edge_mode_1d, transfer_1d, zak_discrete, ChainParams};
use topomech::honeycomb::{
    berry_bz_boundary, bloch_matrix_2d, chern_discrete, d_function, dirac_check, dispersion_2d, edge_frequencies_2d,
    interface_bands, k_point_radius, transfer_2d, valley_loop_samples, wilson_loop_sum, Band, HoneycombParams,
    Pairing, Side, Valley, WaveVector2,
};
use topomech::lattice::{
    assemble_chain, assemble_ribbon, point_impulse_state, simulate, spectrum, ChainBoundary, LatticeModel, Trajectory,
};
use topomech::numerics::{cis, eig_hermitian_dense, wrap_angle, SimState, Verlet};
use topomech::{Complex, Mat2};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn chain(g: f64) -> ChainParams {
    ChainParams::new(g).unwrap()
}

fn hb(beta: f64) -> HoneycombParams {
    HoneycombParams::new(beta).unwrap()
}

fn zak_quantization() -> Outcome {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for gamma in [-0.9, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.9] {
        for band in [Band::Minus, Band::Plus] {
            let z = zak_discrete(&chain(gamma), band, 2048, false).unwrap();
            worst = worst.max(z.distance_to(if gamma > 0.0 { 0.0 } else { PI }));
        }
    }
    let secs = t.elapsed().as_secs_f64();
    outcome(worst <= 1e-6 && secs < 1.0, format!("max distance to 0/pi {worst:.2e}, {secs:.2} s"))
}

fn chain_edge_mode() -> Outcome {
    let t = Instant::now();
    let values = [-0.8, -0.5, -0.2, 0.2, 0.5, 0.8];
    let mut failed = Vec::new();
    for l in values {
        for r in values {
            let model = assemble_chain(&chain(l), &chain(r), 50, 50, ChainBoundary::Clamped).unwrap();
            let g = common_gap_1d(&chain(l), &chain(r));
            let (lo, hi) = (g.lo * g.lo, g.hi * g.hi);
            let report = spectrum(&model, (lo, hi)).unwrap();
            let ok = if l * r < 0.0 {
                let root = edge_mode_1d(&chain(l), &chain(r), 50).unwrap();
                let root_ok = root.is_some_and(|m| (m.omega - 2f64.sqrt()).abs() <= 1e-12);
                let mode = report
                    .gap_modes
                    .iter()
                    .min_by(|a, b| (a.omega_sq - 2.0).abs().total_cmp(&(b.omega_sq - 2.0).abs()));
                let expect = |x: f64| (1.0 - x.abs()) / (1.0 + x.abs());
                let oracle_ok = mode.is_some_and(|m| {
                    (m.omega_sq - 2.0).abs() <= 1e-8
                        && m.decay_left.is_some_and(|d| (d - expect(l)).abs() <= 1e-3)
                        && m.decay_right.is_some_and(|d| (d - expect(r)).abs() <= 1e-3)
                });
                root_ok && oracle_ok
            } else {
                report.eigenvalues.iter().all(|&e| e <= lo + 1e-4 || e >= hi - 1e-4)
            };
            if !ok {
                failed.push(format!("({l},{r})"));
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    let pass = failed.is_empty() && secs < 10.0;
    let detail = if failed.is_empty() {
        format!("all 36 pairs, {secs:.2} s")
    } else {
        format!("{} of 36 pairs fail: {}, {secs:.2} s", failed.len(), failed.join(" "))
    };
    outcome(pass, detail)
}

fn dirac_point() -> Outcome {
    let p = hb(0.0);
    let lk1 = dispersion_2d(&p, Valley::K1.reduced(), false).unwrap();
    let lk4 = dispersion_2d(&p, Valley::K4.reduced(), false).unwrap();
    let exact = [lk1.lambda_minus, lk1.lambda_plus, lk4.lambda_minus, lk4.lambda_plus].iter().all(|&x| x == 3.0);
    let identity = bloch_matrix_2d(0.0, d_function(Valley::K1.reduced())) == Mat2::scaled_identity(3.0);
    let r = dirac_check(&p, Valley::K1, &[1e-4], 8, 0.0).unwrap();
    let err = r.max_slope_error(1.0, 1e-4);
    outcome(
        exact && identity && r.slopes.len() >= 8 && err <= 1e-3,
        format!("lambda(K1)=lambda(K4)=3 {exact}, M(K1)=3I {identity}, slope error {err:.2e} over {} directions", r.slopes.len()),
    )
}

fn gap_opening() -> Outcome {
    let p = hb(0.05);
    let n = 128;
    let mut best = (f64::INFINITY, WaveVector2::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..n {
            let k = WaveVector2::new(i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
            let g = dispersion_2d(&p, k, false).unwrap().gap();
            if g < best.0 {
                best = (g, k);
            }
        }
    }
    let target = 3.0 / 0.95 - 3.0 / 1.05;
    let cell = 1.0 / (n - 1) as f64;
    let near = Valley::ALL.iter().any(|v| {
        let r = v.reduced();
        let dk = |a: f64, b: f64| {
            let x = (a - b).rem_euclid(1.0);
            x.min(1.0 - x)
        };
        dk(best.1.kappa1, r.kappa1) <= cell && dk(best.1.kappa2, r.kappa2) <= cell
    });
    let err = (best.0 - target).abs();
    outcome(
        err <= 2e-3 && near,
        format!("grid minimum {:.7} vs {target:.7} (|diff| {err:.2e}), near K {near}", best.0),
    )
}

fn berry_phase() -> Outcome {
    let mut worst: f64 = 0.0;
    for beta in [-0.3, -0.1, 0.1, 0.3] {
        for band in [Band::Minus, Band::Plus] {
            worst = worst.max(berry_bz_boundary(&hb(beta), band, 600).unwrap().angle.abs());
        }
    }
    outcome(worst <= 1e-8, format!("max |phase| {worst:.2e}"))
}

fn valley_chern() -> Outcome {
    let t = Instant::now();
    let radius = 0.05 * k_point_radius(1.0);
    let mut eq_err: f64 = 0.0;
    let mut sign_ok = true;
    for beta in [-0.3, -0.1, -0.05, 0.05, 0.1, 0.3] {
        for band in [Band::Minus, Band::Plus] {
            let c: Vec<f64> = Valley::ALL
                .iter()
                .map(|&v| chern_discrete(&hb(beta), v, band, radius, 512).unwrap().value)
                .collect();
            eq_err = eq_err.max((c[0] - c[2]).abs()).max((c[0] - c[4]).abs());
            eq_err = eq_err.max((c[1] - c[3]).abs()).max((c[1] - c[5]).abs());
            eq_err = eq_err.max((c[0] + c[3]).abs());
            let expected = if band == Band::Plus { -beta.signum() } else { beta.signum() };
            sign_ok &= c[0].signum() == expected;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    outcome(
        eq_err <= 1e-10 && sign_ok && secs < 5.0,
        format!("equalities {eq_err:.2e}, sign table {sign_ok}, {secs:.2} s"),
    )
}

fn edge_frequencies() -> Outcome {
    let t = Instant::now();
    let p = hb(0.1);
    let mut classified = true;
    let mut ribbon_err: f64 = 0.0;
    let mut worst_k = 0.0;
    for i in 0..33 {
        let k = TAU * i as f64 / 32.0;
        let e = edge_frequencies_2d(&p, k).unwrap();
        let b = e.bands;
        classified &= e.in_gap[0] && e.in_gap[1] && e.omega_sq[2] < b.lambda_minus && e.omega_sq[3] > b.lambda_plus;
        let model = assemble_ribbon(&p, k, 40).unwrap();
        let inside = spectrum(&model, (b.lambda_minus, b.lambda_plus)).unwrap().in_gap();
        for w in &e.omega_sq[..2] {
            let d = inside.iter().map(|x| (x - w).abs()).fold(f64::INFINITY, f64::min);
            if d > ribbon_err {
                ribbon_err = d;
                worst_k = k;
            }
        }
    }
    let spot = edge_frequencies_2d(&p, PI).unwrap().omega_sq;
    let spot_ok = (spot[0] - 2.222_222_2).abs() < 1e-7 && (spot[1] - 3.636_363_6).abs() < 1e-7;
    let secs = t.elapsed().as_secs_f64();
    outcome(
        classified && ribbon_err <= 1e-6 && spot_ok && secs < 30.0,
        format!(
            "classification {classified}, ribbon max error {ribbon_err:.2e} (at k_par {worst_k:.4}), spot values {:.7}/{:.7}, {secs:.2} s",
            spot[0], spot[1]
        ),
    )
}

fn numerical_hygiene() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let mut det1: f64 = 0.0;
    let mut n1 = 0;
    while n1 < 1000 {
        let gamma: f64 = rng.gen_range(-0.95..0.95);
        if gamma.abs() < 0.01 {
            continue;
        }
        let p = chain(gamma);
        let g = band_gap_1d(&p);
        let omega = rng.gen_range(g.lo..g.hi);
        for side in [Side::Left, Side::Right] {
            if let Ok(t) = transfer_1d(&p, side, omega) {
                det1 = det1.max((t.det() - 1.0).abs());
            }
        }
        n1 += 1;
    }

    let mut det2: f64 = 0.0;
    let mut n2 = 0;
    while n2 < 1000 {
        let beta: f64 = rng.gen_range(-0.9..0.9);
        let k = rng.gen_range(0.0..TAU);
        let p = hb(beta);
        let b = interface_bands(&p, k).unwrap();
        if b.lambda_plus <= b.lambda_minus {
            continue;
        }
        let w = rng.gen_range(b.lambda_minus..b.lambda_plus);
        let (Ok(r), Ok(l)) = (transfer_2d(&p, Side::Right, k, w), transfer_2d(&p, Side::Left, k, w)) else {
            continue;
        };
        let (Some(mr), Some(ml)) = (r.matrix, l.matrix) else { continue };
        let phase = cis(k);
        det2 = det2
            .max((mr.det().norm() - 1.0).abs())
            .max((ml.det().norm() - 1.0).abs())
            .max((mr.det() - phase).norm())
            .max((ml.det() - phase.conj()).norm());
        n2 += 1;
    }

    // velocity Verlet on a lattice: the conserved modified energy at dt = 0.1/ω_max
    let model = assemble_chain(&chain(-0.5), &chain(0.5), 50, 50, ChainBoundary::Clamped).unwrap();
    let omega_max = eig_hermitian_dense(&model.dynamical()).unwrap().eigenvalues.last().unwrap().sqrt();
    let init = point_impulse_state(model.dof(), 37, 1.0).unwrap();
    let traj = simulate(&model, init, 0.1 / omega_max, 10_000, &[]).unwrap();
    let lattice_drift = Trajectory::relative_drift(&traj.modified_energies);
    // and the mechanical energy of a unit oscillator
    let mut osc = Verlet::new(SimState::from_real(&[1.0], &[0.0]), |u: &[Complex], a: &mut [Complex]| a[0] = -u[0]);
    let mut osc_drift: f64 = 0.0;
    for _ in 0..10_000 {
        osc.step(1e-3);
        let s = osc.state();
        let e = 0.5 * (s.positions[0].norm_sqr() + s.velocities[0].norm_sqr());
        osc_drift = osc_drift.max((e - 0.5).abs() / 0.5);
    }

    let mut gauge: f64 = 0.0;
    let radius = 0.05 * k_point_radius(1.0);
    for beta in [-0.3, 0.05, 0.1] {
        for band in [Band::Minus, Band::Plus] {
            let samples = valley_loop_samples(&hb(beta), Valley::K1, band, radius, 512);
            let base = -wrap_angle(wilson_loop_sum(&samples, Pairing::Plain, beta).unwrap()) / TAU;
            let rotated: Vec<_> = samples
                .iter()
                .map(|v| {
                    let ph = cis(rng.gen_range(-PI..PI));
                    [v[0] * ph, v[1] * ph]
                })
                .collect();
            let value = -wrap_angle(wilson_loop_sum(&rotated, Pairing::Plain, beta).unwrap()) / TAU;
            gauge = gauge.max((value - base).abs());
        }
    }

    let pass = det1 <= 1e-12 && det2 <= 1e-12 && lattice_drift <= 1e-6 && osc_drift <= 1e-6 && gauge <= 1e-12;
    outcome(
        pass,
        format!(
            "det 1D {det1:.1e}, det 2D {det2:.1e}, modified-energy drift {lattice_drift:.1e}, oscillator energy {osc_drift:.1e}, gauge {gauge:.1e}"
        ),
    )
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("topomech-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("sim.toml");
    std::fs::write(
        &config,
        "model = \"chain\"\ndt = 0.05\nsteps = 500\nprobes = [10]\n\n[chain]\ngamma_left = -0.5\ngamma_right = 0.5\ncells = 12\n\n[initial]\nkind = \"edge_mode\"\n",
    )
    .unwrap();
    let config = config.to_str().unwrap().to_owned();
    let commands: Vec<Vec<&str>> = vec![
        vec!["bands1d", "--gamma", "0.3"],
        vec!["zak", "--gamma", "-0.5"],
        vec!["edge1d", "--gamma-left", "-0.5", "--gamma-right", "0.5", "--cells", "20"],
        vec!["bands2d", "--beta", "0.05", "--grid", "16"],
        vec!["dirac", "--seed", "7"],
        vec!["chern", "--beta", "0.1", "--valley", "K2"],
        vec!["berry", "--beta", "0.3"],
        vec!["edge2d", "--beta", "0.1", "--kpar-samples", "3", "--width", "12"],
        vec!["ribbon", "--beta", "0.1", "--k-par", "1.0", "--width", "12"],
        vec!["simulate", &config],
        vec!["--format", "json", "dirac", "--seed", "7"],
    ];
    let mut differing = Vec::new();
    for (i, args) in commands.iter().enumerate() {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let path = dir.join(format!("out-{i}-{run}"));
            let status = Command::new(env!("CARGO_BIN_EXE_topomech"))
                .arg("--out")
                .arg(&path)
                .args(args)
                .status()
                .unwrap();
            outputs.push((status.success(), std::fs::read(&path).ok()));
        }
        if !(outputs[0].0 && outputs[0].1.is_some() && outputs[0] == outputs[1]) {
            differing.push(args[0]);
        }
    }
    std::fs::remove_dir_all(&dir).ok();
    outcome(
        differing.is_empty(),
        if differing.is_empty() {
            format!("{} commands byte-identical across two runs", commands.len())
        } else {
            format!("differing or failing: {}", differing.join(" "))
        },
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Zak phase quantization", zak_quantization),
        ("1D interface mode", chain_edge_mode),
        ("Dirac point", dirac_point),
        ("gap opening", gap_opening),
        ("zone-boundary Berry phase", berry_phase),
        ("valley Chern properties", valley_chern),
        ("2D edge frequencies", edge_frequencies),
        ("numerical hygiene", numerical_hygiene),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("criterion {}: {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

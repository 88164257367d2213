use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topomech::numerics::{
    cis_turns, eig2_hermitianlike, eig_hermitian_dense, find_roots_bracketed, verlet_step, HermitianMatrix, SimState,
    Verlet,
};
use topomech::{Complex, Mat2};

fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = HermitianMatrix::zeros(n);
    for i in 0..n {
        a.set(i, i, Complex::new(rng.gen_range(-1.0..1.0), 0.0));
        for j in i + 1..n {
            a.set(i, j, Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    a
}

#[test]
fn dense_solver_on_random_50x50() {
    for seed in 0..3 {
        let a = random_hermitian(50, seed);
        let eig = eig_hermitian_dense(&a).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        assert!((sum - a.trace()).abs() <= 1e-10 * a.trace().abs().max(1.0));
        assert!(eig.unitarity_defect() <= 1e-10);
        assert!(eig.max_residual(&a) <= 1e-10 * a.frobenius_norm());
        assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        // Frobenius norm is the root sum of squared eigenvalues
        let fro: f64 = eig.eigenvalues.iter().map(|l| l * l).sum::<f64>().sqrt();
        assert!((fro - a.frobenius_norm()).abs() < 1e-10 * fro);
    }
}

#[test]
fn dense_solver_simple_cases() {
    let d = HermitianMatrix::from_real_rows(3, &[3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]).unwrap();
    let eig = eig_hermitian_dense(&d).unwrap();
    assert_eq!(eig.eigenvalues, vec![1.0, 2.0, 3.0]);
    assert_eq!(eig.vector(0)[1].norm(), 1.0);

    let two = HermitianMatrix::from_real_rows(2, &[2.0, -2.0, -2.0, 2.0]).unwrap();
    let dense = eig_hermitian_dense(&two).unwrap();
    let small = eig2_hermitianlike(&Mat2::from_real([[2.0, -2.0], [-2.0, 2.0]])).unwrap();
    for (x, p) in dense.eigenvalues.iter().zip(&small) {
        assert!((x - p.value).abs() < 1e-12);
    }
    assert!((small[0].value - 0.0).abs() < 1e-12 && (small[1].value - 4.0).abs() < 1e-12);
}

#[test]
fn eig2_special_matrices() {
    let e = eig2_hermitianlike(&Mat2::scaled_identity(3.0)).unwrap();
    assert_eq!((e[0].value, e[1].value), (3.0, 3.0));
    let inner = e[0].vector[0].conj() * e[1].vector[0] + e[0].vector[1].conj() * e[1].vector[1];
    assert!(inner.norm() < 1e-15);
    // honeycomb Bloch matrix at the zone centre for equal masses: |d| = 3
    let gamma = Mat2::from_real([[3.0, 3.0], [3.0, 3.0]]);
    let e = eig2_hermitianlike(&gamma).unwrap();
    assert!(e[0].value.abs() < 1e-12 && (e[1].value - 6.0).abs() < 1e-12);
}

#[test]
fn roots_of_simple_functions() {
    let r = find_roots_bracketed(|x| x * x - 2.0, 0.0, 2.0, 64, 1e-12);
    assert_eq!(r.len(), 1);
    assert!((r[0] - 2f64.sqrt()).abs() < 1e-12);
    assert!(find_roots_bracketed(|x| x, 1.0, 2.0, 64, 1e-12).is_empty());
    let r = find_roots_bracketed(|x| (3.0 * x).sin(), -2.0, 2.0, 100, 1e-12);
    let expect = [-std::f64::consts::PI / 3.0, 0.0, std::f64::consts::PI / 3.0];
    assert_eq!(r.len(), 3);
    for (a, b) in r.iter().zip(expect) {
        assert!((a - b).abs() < 1e-11);
    }
}

#[test]
fn phase_table_is_exact_at_twelfths() {
    assert_eq!(cis_turns(0.0), Complex::new(1.0, 0.0));
    assert_eq!(cis_turns(0.5), Complex::new(-1.0, 0.0));
    let w = cis_turns(1.0 / 3.0) + cis_turns(2.0 / 3.0);
    assert_eq!(w, Complex::new(-1.0, 0.0));
    for k in 0..24 {
        let t = k as f64 / 12.0;
        let exact = Complex::from_polar(1.0, std::f64::consts::TAU * t);
        assert!((cis_turns(t) - exact).norm() < 1e-14);
    }
}

fn oscillator(u: &[Complex], a: &mut [Complex]) {
    a[0] = -u[0];
}

#[test]
fn harmonic_period() {
    let dt = 1e-3;
    let steps = (std::f64::consts::TAU / dt).round() as usize;
    let mut s = SimState::from_real(&[1.0], &[0.0]);
    let mut e_max: f64 = 0.0;
    for _ in 0..steps {
        s = verlet_step(&s, oscillator, dt);
        let e = 0.5 * (s.velocities[0].norm_sqr() + s.positions[0].norm_sqr());
        e_max = e_max.max((e - 0.5).abs() / 0.5);
    }
    assert!((s.positions[0].re - 1.0).abs() < 1e-5);
    // bounded mechanical energy error, (ω dt)²/4 for velocity Verlet
    assert!(e_max <= 0.25 * dt * dt * 1.01);
}

#[test]
fn unit_oscillator_energy_over_ten_thousand_steps() {
    let dt = 1e-3;
    let mut sim = Verlet::new(SimState::from_real(&[1.0], &[0.0]), oscillator);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        sim.step(dt);
        let s = sim.state();
        let e = 0.5 * (s.velocities[0].norm_sqr() + s.positions[0].norm_sqr());
        worst = worst.max((e - 0.5).abs() / 0.5);
    }
    assert!(worst <= 1e-6, "relative energy error {worst:e}");
    // analytic solution cos t
    let s = sim.state();
    assert!((s.positions[0].re - (10_000.0 * dt).cos()).abs() < 1e-5);
}

#[test]
fn rest_stays_at_rest() {
    let mut sim = Verlet::new(SimState::at_rest(3), |u: &[Complex], a: &mut [Complex]| {
        a[0] = -2.0 * u[0] + u[1];
        a[1] = u[0] - 2.0 * u[1] + u[2];
        a[2] = u[1] - 2.0 * u[2];
    });
    for _ in 0..100 {
        sim.step(0.1);
    }
    assert!(sim.state().positions.iter().chain(&sim.state().velocities).all(|z| *z == Complex::new(0.0, 0.0)));
}

proptest! {
    #[test]
    fn eig2_residual_on_hermitian(a in -5.0f64..5.0, d in -5.0f64..5.0, br in -5.0f64..5.0, bi in -5.0f64..5.0) {
        let m = Mat2::new(a.into(), Complex::new(br, bi), Complex::new(br, -bi), d.into());
        let e = eig2_hermitianlike(&m).unwrap();
        prop_assert!(e[0].value <= e[1].value);
        for p in &e {
            let av = m.apply(&p.vector);
            let res = ((av[0] - p.value * p.vector[0]).norm()).max((av[1] - p.value * p.vector[1]).norm());
            prop_assert!(res <= 1e-12 * m.norm().max(1.0));
        }
    }

    #[test]
    fn eig2_residual_on_mass_weighted(beta in -0.9f64..0.9, dr in -3.0f64..3.0, di in -3.0f64..3.0) {
        // the honeycomb Bloch matrix is not Hermitian for β ≠ 0 but has a real spectrum
        let d = Complex::new(dr, di);
        let m = Mat2::new(
            Complex::from(3.0 / (1.0 + beta)), d / (1.0 + beta),
            d.conj() / (1.0 - beta), Complex::from(3.0 / (1.0 - beta)),
        );
        let e = eig2_hermitianlike(&m).unwrap();
        for p in &e {
            let av = m.apply(&p.vector);
            let res = ((av[0] - p.value * p.vector[0]).norm()).max((av[1] - p.value * p.vector[1]).norm());
            prop_assert!(res <= 1e-12 * m.norm());
        }
    }

    #[test]
    fn dense_trace_and_unitarity(n in 2usize..12, seed in 0u64..1000) {
        let a = random_hermitian(n, seed);
        let eig = eig_hermitian_dense(&a).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        prop_assert!((sum - a.trace()).abs() <= 1e-10 * a.frobenius_norm().max(1.0));
        prop_assert!(eig.unitarity_defect() <= 1e-10);
    }

    #[test]
    fn bracketed_roots_are_sign_changes(c in -0.9f64..0.9, k in 1.0f64..6.0) {
        let f = |x: f64| (k * x).sin() - c;
        let roots = find_roots_bracketed(f, -3.0, 3.0, 512, 1e-12);
        prop_assert!(roots.windows(2).all(|w| w[0] < w[1]));
        for r in roots {
            prop_assert!(f(r).abs() < 1e-9);
        }
    }
}

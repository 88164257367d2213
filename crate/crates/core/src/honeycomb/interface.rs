use std::f64::consts::TAU;

use super::{eigenvalues_2d, HoneycombParams, Side};
use crate::numerics::{cis_turns, eigvec2, Complex, Mat2, Vec2};
use crate::{Error, Result};

/// `z(k∥) = 1 + e^{ik∥a²}`.
pub fn z_of(params: &HoneycombParams, k_par: f64) -> Complex {
    1.0 + cis_turns(k_par * params.a * params.a / TAU)
}

fn check_k_par(params: &HoneycombParams, k_par: f64) -> Result<()> {
    let top = TAU / params.a;
    if !(k_par >= 0.0 && k_par <= top) {
        return Err(Error::invalid("k_par", format!("must lie in [0, {top}], got {k_par}")));
    }
    Ok(())
}

/// Edges of the band gap seen by waves with wave number `k∥` along the
/// interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterfaceBands {
    pub k_par: f64,
    pub n_branch: u8,
    pub d_abs: f64,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
}

impl InterfaceBands {
    pub fn contains(&self, omega_sq: f64) -> bool {
        self.lambda_minus < omega_sq && omega_sq < self.lambda_plus
    }
}

pub fn interface_bands(params: &HoneycombParams, k_par: f64) -> Result<InterfaceBands> {
    check_k_par(params, k_par)?;
    let c = (0.5 * k_par * params.a * params.a).cos();
    let n_branch = if c > 0.0 { 1 } else { 0 };
    let sign = if n_branch == 1 { -1.0 } else { 1.0 };
    let d_abs = (1.0 + sign * 2.0 * c).abs();
    let (lambda_minus, lambda_plus) = eigenvalues_2d(params.beta, d_abs);
    Ok(InterfaceBands { k_par, n_branch, d_abs, lambda_minus, lambda_plus })
}

/// Kind of bond across the interface: two a-masses (the heavier sublattice
/// for `β > 0`) or two b-masses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Junction {
    AA,
    BB,
}

impl Junction {
    /// The b–b junction is the a–a junction of the lattice with the
    /// sublattices relabelled: `β → −β`, `z → z̄`.
    fn effective(self, beta: f64, z: Complex) -> (f64, Complex) {
        match self {
            Junction::AA => (beta, z),
            Junction::BB => (-beta, z.conj()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transfer2D {
    pub side: Side,
    pub k_par: f64,
    pub omega_sq: f64,
    pub tau: f64,
    pub sigma: f64,
    pub z: Complex,
    pub xi: f64,
    /// Absent in the decoupled limit `z = 0`.
    pub matrix: Option<Mat2>,
    pub decaying_eigenvalue: Complex,
    /// Unit norm.
    pub decaying_eigenvector: Vec2,
}

struct Parts {
    tau: f64,
    sigma: f64,
    xi: f64,
    matrix: Option<Mat2>,
    lambda: Complex,
    vector: Vec2,
}

/// Right-side transfer data for mass contrast `beta` and coupling `z`.
fn right_parts(beta: f64, z: Complex, omega_sq: f64) -> Result<Parts> {
    let tau = 3.0 - (1.0 + beta) * omega_sq;
    let sigma = 3.0 - (1.0 - beta) * omega_sq;
    let z2 = z.norm_sqr();
    let xi = tau * sigma - 1.0 - z2;
    let disc = xi * xi - 4.0 * z2;
    if disc < 0.0 {
        return Err(Error::OutsideGap {
            reason: format!("omega_sq = {omega_sq} propagates (xi^2 - 4|z|^2 = {disc:e} < 0)"),
        });
    }
    if z2 == 0.0 {
        let s = if sigma >= 0.0 { 1.0 } else { -1.0 };
        return Ok(Parts {
            tau,
            sigma,
            xi,
            matrix: None,
            lambda: Complex::new(0.0, 0.0),
            vector: [Complex::new(s, 0.0), Complex::new(0.0, 0.0)],
        });
    }
    let zb = z.conj();
    let matrix = Mat2::new(Complex::from(-z2), zb * sigma, -z * tau, Complex::from(tau * sigma - 1.0)).scale(zb.inv());
    // roots (ξ ± √(ξ²−4|z|²))/(2z̄) have product z/z̄; take the small one
    // from the large one to avoid cancellation
    let root = disc.sqrt();
    let big = if xi >= 0.0 { xi + root } else { xi - root };
    let lambda = 2.0 * z / big;
    Ok(Parts { tau, sigma, xi, vector: eigvec2(&matrix, lambda), matrix: Some(matrix), lambda })
}

pub fn transfer_2d(params: &HoneycombParams, side: Side, k_par: f64, omega_sq: f64) -> Result<Transfer2D> {
    let bands = interface_bands(params, k_par)?;
    if !bands.contains(omega_sq) {
        return Err(Error::OutsideGap {
            reason: format!(
                "omega_sq = {omega_sq} is not inside ({}, {})",
                bands.lambda_minus, bands.lambda_plus
            ),
        });
    }
    let z = z_of(params, k_par);
    let p = right_parts(params.beta, z, omega_sq)?;
    let (matrix, lambda, vector) = match side {
        Side::Right => (p.matrix, p.lambda, p.vector),
        Side::Left => (
            p.matrix.map(|m| m.conj()),
            p.lambda.conj(),
            [p.vector[0].conj(), p.vector[1].conj()],
        ),
    };
    Ok(Transfer2D {
        side,
        k_par,
        omega_sq,
        tau: p.tau,
        sigma: p.sigma,
        z,
        xi: p.xi,
        matrix,
        decaying_eigenvalue: lambda,
        decaying_eigenvector: vector,
    })
}

/// An in-gap interface mode rebuilt from its decaying halves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterfaceMode2D {
    /// 1 or 2.
    pub index: usize,
    pub omega_sq: f64,
    pub junction: Junction,
    pub c1: Complex,
    pub c2: Complex,
    pub lambda_right: Complex,
    pub decay: f64,
    pub interface_residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFrequencies2D {
    pub k_par: f64,
    pub bands: InterfaceBands,
    /// `(ω₁², ω₂², ω₃², ω₄²)`.
    pub omega_sq: [f64; 4],
    pub in_gap: [bool; 4],
    pub modes: Vec<InterfaceMode2D>,
}

impl EdgeFrequencies2D {
    pub fn mode(&self, index: usize) -> Option<&InterfaceMode2D> {
        self.modes.iter().find(|m| m.index == index)
    }
}

/// Amplitudes `(c₁, c₂)` with `c₁ = 1` for a mode at `omega_sq` on the given
/// junction, and the larger residual of the two interface equations.
pub fn interface_residual_2d(
    params: &HoneycombParams,
    junction: Junction,
    k_par: f64,
    omega_sq: f64,
) -> Result<(Complex, Complex, Complex, f64)> {
    let (beta, z) = junction.effective(params.beta, z_of(params, k_par));
    let p = right_parts(beta, z, omega_sq)?;
    let vr = p.vector;
    let vl = [vr[0].conj(), vr[1].conj()];
    let tau = p.tau;
    let c1 = Complex::new(1.0, 0.0);
    let c2 = if vl[0].norm() > 1e-8 {
        (tau * vr[0] - z.conj() * vr[1]) / vl[0]
    } else {
        vr[0] / (tau * vl[0] - z * vl[1])
    };
    let (u1, um1) = ([vr[0] * c1, vr[1] * c1], [vl[0] * c2, vl[1] * c2]);
    let line1 = tau * u1[0] - um1[0] - z.conj() * u1[1];
    let line2 = tau * um1[0] - u1[0] - z * um1[1];
    let residual = line1.norm().max(line2.norm()) / c2.norm().max(1.0);
    Ok((c1, c2, p.lambda, residual))
}

pub fn edge_frequencies_2d(params: &HoneycombParams, k_par: f64) -> Result<EdgeFrequencies2D> {
    params.require_gapped()?;
    let bands = interface_bands(params, k_par)?;
    let z2 = z_of(params, k_par).norm_sqr();
    let b2 = params.beta * params.beta;
    let q = 1.0 - b2;
    let r1 = (4.0 * b2 + q * z2).sqrt();
    let r2 = (16.0 * b2 + q * z2).sqrt();
    let omega_sq = [(2.0 + r1) / q, (4.0 - r2) / q, (2.0 - r1) / q, (4.0 + r2) / q];
    let in_gap = omega_sq.map(|w| bands.contains(w));

    let mut modes = Vec::new();
    for index in 1..=2 {
        let w = omega_sq[index - 1];
        if !in_gap[index - 1] {
            continue;
        }
        let best = [Junction::AA, Junction::BB]
            .into_iter()
            .filter_map(|j| interface_residual_2d(params, j, k_par, w).ok().map(|r| (j, r)))
            .min_by(|a, b| a.1 .3.total_cmp(&b.1 .3));
        if let Some((junction, (c1, c2, lambda, residual))) = best {
            modes.push(InterfaceMode2D {
                index,
                omega_sq: w,
                junction,
                c1,
                c2,
                lambda_right: lambda,
                decay: lambda.norm(),
                interface_residual: residual,
            });
        }
    }
    Ok(EdgeFrequencies2D { k_par, bands, omega_sq, in_gap, modes })
}

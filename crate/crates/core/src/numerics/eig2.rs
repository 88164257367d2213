use super::complex::{vnorm, Complex, Mat2, Vec2};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenpair2 {
    pub value: f64,
    /// Unit Euclidean norm.
    pub vector: Vec2,
}

/// Closed-form eigenpairs of a 2×2 matrix with real spectrum, such as a
/// Hermitian matrix or one similar to it through a positive diagonal weight.
///
/// Eigenvalues are returned in ascending order. For a multiple of the
/// identity the standard basis is returned.
pub fn eig2_hermitianlike(a: &Mat2) -> Result<[Eigenpair2; 2]> {
    if !a.is_finite() {
        return Err(Error::invalid("matrix", "non-finite entry"));
    }
    let half_tr = a.trace() * 0.5;
    let half_diff = (a[(0, 0)] - a[(1, 1)]) * 0.5;
    let disc = half_diff * half_diff + a[(0, 1)] * a[(1, 0)];
    let scale = a.norm().max(f64::MIN_POSITIVE);
    if disc.re < -1e-12 * scale * scale || disc.im.abs() > 1e-12 * scale * scale {
        return Err(Error::NonRealSpectrum { discriminant: disc.re });
    }
    let root = disc.re.max(0.0).sqrt();
    let lo = half_tr.re - root;
    let hi = half_tr.re + root;

    if a[(0, 1)].norm() == 0.0 && a[(1, 0)].norm() == 0.0 {
        let e0 = [Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)];
        let e1 = [Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)];
        let (d0, d1) = (a[(0, 0)].re, a[(1, 1)].re);
        return Ok(if d0 <= d1 {
            [Eigenpair2 { value: d0, vector: e0 }, Eigenpair2 { value: d1, vector: e1 }]
        } else {
            [Eigenpair2 { value: d1, vector: e1 }, Eigenpair2 { value: d0, vector: e0 }]
        });
    }
    let v_lo = eigvec2(a, lo.into());
    let v_hi = eigvec2(a, hi.into());
    Ok([Eigenpair2 { value: lo, vector: v_lo }, Eigenpair2 { value: hi, vector: v_hi }])
}

/// Unit eigenvector of `a` for the (known) eigenvalue `lambda`, taken from
/// whichever row of `a − λI` yields the better-conditioned null vector.
pub fn eigvec2(a: &Mat2, lambda: Complex) -> Vec2 {
    let r1 = [a[(0, 1)], lambda - a[(0, 0)]];
    let r2 = [lambda - a[(1, 1)], a[(1, 0)]];
    let (n1, n2) = (vnorm(&r1), vnorm(&r2));
    let (v, n) = if n1 >= n2 { (r1, n1) } else { (r2, n2) };
    if n == 0.0 {
        return [Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)];
    }
    [v[0] / n, v[1] / n]
}

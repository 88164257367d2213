use std::f64::consts::{PI, TAU};
use std::ops::{Index, IndexMut, Mul};

pub type Complex = num_complex::Complex64;
pub type Vec2 = [Complex; 2];

/// `e^{iθ}`.
pub fn cis(theta: f64) -> Complex {
    Complex::new(theta.cos(), theta.sin())
}

/// `e^{2πi t}` for a phase given in turns.
///
/// Multiples of 1/12 turn are taken from an exact table so that, for
/// instance, `1 + cis_turns(1/3) + cis_turns(2/3)` is exactly zero.
pub fn cis_turns(turns: f64) -> Complex {
    let t = turns.rem_euclid(1.0);
    let twelfths = t * 12.0;
    let k = twelfths.round();
    if (twelfths - k).abs() <= 1e-12 {
        const H: f64 = 0.5;
        const R: f64 = 0.866_025_403_784_438_6; // √3/2
        let (c, s) = match k as i64 % 12 {
            0 => (1.0, 0.0),
            1 => (R, H),
            2 => (H, R),
            3 => (0.0, 1.0),
            4 => (-H, R),
            5 => (-R, H),
            6 => (-1.0, 0.0),
            7 => (-R, -H),
            8 => (-H, -R),
            9 => (0.0, -1.0),
            10 => (H, -R),
            _ => (R, -H),
        };
        return Complex::new(c, s);
    }
    cis(TAU * t)
}

/// Argument in `(−π, π]`.
pub fn principal_arg(z: Complex) -> f64 {
    let a = z.im.atan2(z.re);
    if a == -PI {
        PI
    } else {
        a
    }
}

/// Reduces an angle into `(−π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let r = (theta + PI).rem_euclid(TAU) - PI;
    if r <= -PI {
        r + TAU
    } else {
        r
    }
}

/// Dense 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex; 2]; 2]);

impl Mat2 {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Mat2::new(m[0][0].into(), m[0][1].into(), m[1][0].into(), m[1][1].into())
    }

    pub fn identity() -> Self {
        Mat2::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn scaled_identity(s: f64) -> Self {
        Mat2::from_real([[s, 0.0], [0.0, s]])
    }

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex {
        self.0[0][0] + self.0[1][1]
    }

    pub fn conj(&self) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0].conj(), m[0][1].conj(), m[1][0].conj(), m[1][1].conj())
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn scale(&self, s: Complex) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    /// Inverse, or `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        let m = &self.0;
        Some(Mat2::new(m[1][1], -m[0][1], -m[1][0], m[0][0]).scale(det.inv()))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.0[i][j]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[Complex::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(out)
    }
}

pub(crate) fn vnorm(v: &Vec2) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_turns_cancel_exactly() {
        let s = Complex::new(1.0, 0.0) + cis_turns(2.0 / 3.0) + cis_turns(1.0 / 3.0);
        assert_eq!(s, Complex::new(0.0, 0.0));
        let s = Complex::new(1.0, 0.0) + cis_turns(-2.0 / 3.0) + cis_turns(-1.0 / 3.0);
        assert_eq!(s, Complex::new(0.0, 0.0));
    }

    #[test]
    fn cis_turns_matches_cis_off_table() {
        for &t in &[0.01, 0.3, -0.77, 1.234] {
            assert!((cis_turns(t) - cis(TAU * t)).norm() < 1e-14);
        }
    }

    #[test]
    fn wrap_is_half_open() {
        assert_eq!(wrap_angle(PI), PI);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(3.0 * PI + 0.1) - (-PI + 0.1)).abs() < 1e-12);
        assert_eq!(principal_arg(Complex::new(-1.0, -0.0)), PI);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat2::new(
            Complex::new(1.0, 2.0),
            Complex::new(0.5, -1.0),
            Complex::new(-3.0, 0.0),
            Complex::new(2.0, 0.25),
        );
        let p = m * m.inverse().unwrap();
        assert!(p.max_abs_diff(&Mat2::identity()) < 1e-14);
    }
}

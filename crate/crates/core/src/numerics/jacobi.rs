use super::complex::Complex;
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Dense Hermitian matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix { dim, data: vec![Complex::new(0.0, 0.0); dim * dim] }
    }

    /// Builds from a row-major array, checking Hermiticity to 1e-14.
    pub fn from_rows(dim: usize, data: Vec<Complex>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::invalid("matrix", format!("expected {dim}x{dim} entries")));
        }
        let m = HermitianMatrix { dim, data };
        if m.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("matrix", "non-finite entry"));
        }
        let r = m.hermiticity_residual();
        if r > 1e-14 {
            return Err(Error::invalid("matrix", format!("not Hermitian (residual {r:e})")));
        }
        Ok(m)
    }

    pub fn from_real_rows(dim: usize, data: &[f64]) -> Result<Self> {
        Self::from_rows(dim, data.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> &[Complex] {
        &self.data
    }

    /// Sets entry `(i, j)` and its mirror `(j, i)` to the conjugate.
    pub fn set(&mut self, i: usize, j: usize, value: Complex) {
        if i == j {
            self.data[i * self.dim + i] = Complex::new(value.re, 0.0);
        } else {
            self.data[i * self.dim + j] = value;
            self.data[j * self.dim + i] = value.conj();
        }
    }

    /// Adds to entry `(i, j)` and its mirror.
    pub fn add(&mut self, i: usize, j: usize, value: Complex) {
        let cur = self.get(i, j);
        self.set(i, j, cur + value);
    }

    pub fn hermiticity_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    pub fn apply(&self, x: &[Complex]) -> Vec<Complex> {
        let n = self.dim;
        (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Conjugation `diag(w) · A · diag(w)` by a real diagonal.
    pub fn scale_symmetric(&self, w: &[f64]) -> HermitianMatrix {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] *= w[i] * w[j];
            }
        }
        out
    }
}

/// Eigenvalues in ascending order with unit eigenvectors stored column by
/// column.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    dim: usize,
    vectors: Vec<Complex>,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vector(&self, k: usize) -> &[Complex] {
        &self.vectors[k * self.dim..(k + 1) * self.dim]
    }

    /// Largest `‖A v − λ v‖ / ‖A‖` over all pairs.
    pub fn max_residual(&self, a: &HermitianMatrix) -> f64 {
        let norm = a.frobenius_norm().max(f64::MIN_POSITIVE);
        (0..self.dim)
            .map(|k| {
                let v = self.vector(k);
                let av = a.apply(v);
                av.iter()
                    .zip(v)
                    .map(|(x, y)| (x - y * self.eigenvalues[k]).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
                    / norm
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation of `VᴴV` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let dot: Complex =
                    self.vector(i).iter().zip(self.vector(j)).map(|(a, b)| a.conj() * b).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

/// Scalar field the rotation kernel runs over. Real input takes the `f64`
/// path, which is several times faster than complex arithmetic.
trait Scalar: Copy + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> + std::ops::Mul<Output = Self> {
    const ZERO: Self;
    const ONE: Self;
    fn conj(self) -> Self;
    fn abs(self) -> f64;
    fn abs_sqr(self) -> f64;
    fn scale(self, s: f64) -> Self;
    fn real(x: f64) -> Self;
    fn re(self) -> f64;
    fn into_complex(self) -> Complex;
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    fn conj(self) -> Self {
        self
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn abs_sqr(self) -> f64 {
        self * self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn real(x: f64) -> Self {
        x
    }
    fn re(self) -> f64 {
        self
    }
    fn into_complex(self) -> Complex {
        Complex::new(self, 0.0)
    }
}

impl Scalar for Complex {
    const ZERO: Self = Complex::new(0.0, 0.0);
    const ONE: Self = Complex::new(1.0, 0.0);
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn abs_sqr(self) -> f64 {
        self.norm_sqr()
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn real(x: f64) -> Self {
        Complex::new(x, 0.0)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn into_complex(self) -> Complex {
        self
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
pub fn eig_hermitian_dense(a: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = a.dim;
    if n > 4096 {
        return Err(Error::invalid("matrix", format!("dimension {n} exceeds 4096")));
    }
    let norm = a.frobenius_norm();
    let (diag, v, sweeps) = if a.data.iter().all(|z| z.im == 0.0) {
        let (d, v, s) = jacobi(a.data.iter().map(|z| z.re).collect(), n, norm)?;
        (d, v.into_iter().map(Scalar::into_complex).collect::<Vec<_>>(), s)
    } else {
        jacobi(a.data.clone(), n, norm)?
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &i in &order {
        vectors.extend_from_slice(&v[i * n..(i + 1) * n]);
    }
    Ok(EigenDecomposition { eigenvalues, dim: n, vectors, sweeps })
}

/// Returns the diagonal after convergence, eigenvectors stored row by row,
/// and the sweep count.
fn jacobi<T: Scalar>(mut m: Vec<T>, n: usize, norm: f64) -> Result<(Vec<f64>, Vec<T>, usize)> {
    let mut v = vec![T::ZERO; n * n];
    for k in 0..n {
        v[k * n + k] = T::ONE;
    }
    let target = 1e-12 * norm;
    let off_norm = |m: &[T]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j].abs_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&m);
        if off <= target || norm == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        // early sweeps leave small elements for later
        let threshold = if sweeps <= 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                let g = apq.abs();
                if g <= f64::MIN_POSITIVE || g < 1e-18 * norm || g <= threshold {
                    continue;
                }
                let e = apq.scale(1.0 / g);
                let app = m[p * n + p].re();
                let aqq = m[q * n + q].re();
                let theta = (aqq - app) / (2.0 * g);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let ec = e.conj();
                let (es, ecs) = (e.scale(s), e.scale(c));
                // rows p and q are contiguous; columns follow by symmetry
                let (head, tail) = m.split_at_mut(q * n);
                let (rp, rq) = (&mut head[p * n..(p + 1) * n], &mut tail[..n]);
                for k in 0..n {
                    let (x, y) = (rp[k], rq[k]);
                    rp[k] = x.scale(c) - y * es;
                    rq[k] = x.scale(s) + y * ecs;
                }
                for k in 0..n {
                    m[k * n + p] = m[p * n + k].conj();
                    m[k * n + q] = m[q * n + k].conj();
                }
                m[p * n + p] = T::real(app - t * g);
                m[q * n + q] = T::real(aqq + t * g);
                m[p * n + q] = T::ZERO;
                m[q * n + p] = T::ZERO;
                let (ecs_v, ecc_v) = (ec.scale(s), ec.scale(c));
                let (head, tail) = v.split_at_mut(q * n);
                let (vp, vq) = (&mut head[p * n..(p + 1) * n], &mut tail[..n]);
                for k in 0..n {
                    let (x, y) = (vp[k], vq[k]);
                    vp[k] = x.scale(c) - y * ecs_v;
                    vq[k] = x.scale(s) + y * ecc_v;
                }
            }
        }
    }
    Ok(((0..n).map(|i| m[i * n + i].re()).collect(), v, sweeps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_is_already_solved() {
        let a = HermitianMatrix::from_real_rows(3, &[3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0])
            .unwrap();
        let e = eig_hermitian_dense(&a).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.vector(0)[1], Complex::new(1.0, 0.0));
        assert_eq!(e.sweeps, 0);
    }

    #[test]
    fn complex_two_by_two() {
        let mut a = HermitianMatrix::zeros(2);
        a.set(0, 0, 1.0.into());
        a.set(1, 1, (-2.0).into());
        a.set(0, 1, Complex::new(0.5, -1.5));
        let e = eig_hermitian_dense(&a).unwrap();
        let disc = (1.5f64 * 1.5 + 2.5).sqrt();
        assert!((e.eigenvalues[0] - (-0.5 - disc)).abs() < 1e-13);
        assert!((e.eigenvalues[1] - (-0.5 + disc)).abs() < 1e-13);
        assert!(e.max_residual(&a) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let data = vec![1.0.into(), Complex::new(0.0, 1.0), Complex::new(0.0, 1.0), 1.0.into()];
        assert!(HermitianMatrix::from_rows(2, data).is_err());
    }
}

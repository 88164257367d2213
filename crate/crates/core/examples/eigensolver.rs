//! The dense Jacobi eigensolver on a complex Hermitian matrix.
//!
//! Run:
//!   cargo run -p topomech --example eigensolver

use topomech::numerics::{eig_hermitian_dense, HermitianMatrix};
use topomech::Complex;

fn main() -> topomech::Result<()> {
    let n = 12;
    let mut a = HermitianMatrix::zeros(n);
    for i in 0..n {
        a.set(i, i, Complex::new(2.0 + (i as f64).sin(), 0.0));
        for j in i + 1..n {
            let x = ((i * 7 + j * 3) as f64).cos() / (1 + j - i) as f64;
            a.set(i, j, Complex::new(x, 0.5 * x * (j as f64).sin()));
        }
    }
    let eig = eig_hermitian_dense(&a)?;
    println!("sweeps: {}", eig.sweeps);
    println!("eigenvalues: {:.6?}", eig.eigenvalues);
    println!("sum = {:.12}, trace = {:.12}", eig.eigenvalues.iter().sum::<f64>(), a.trace());
    println!("max |A v - lambda v| = {:.2e}", eig.max_residual(&a));
    println!("unitarity defect = {:.2e}", eig.unitarity_defect());
    Ok(())
}

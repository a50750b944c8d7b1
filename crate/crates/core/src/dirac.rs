//! Free lattice Dirac operator and its exact one-particle propagator.
//!
//! The spatial derivative is the naive centered difference
//! `(f(x + a e) - f(x - a e)) / (2a)` under periodic wrap, which keeps the
//! operator Hermitian at the price of fermion doubling. One-particle spinor
//! fields are flat arrays of length `n_sites * ds`, site-major then spin.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::spin::SpinAlgebra;

/// Apply `H_free = -i sum_a alpha_a d/dx^a + m beta` to a one-particle field.
pub fn free_dirac_apply(
    field: &[C64],
    mass: f64,
    spec: &LatticeSpec,
    algebra: &SpinAlgebra,
) -> Result<Vec<C64>> {
    let ds = algebra.ds;
    let n = spec.n_sites();
    if field.len() != n * ds {
        return Err(Error::ShapeMismatch(format!(
            "field length {} but lattice has {} sites x {} spins",
            field.len(),
            n,
            ds
        )));
    }
    let mut out = vec![C64::new(0.0, 0.0); field.len()];
    let inv2a = 1.0 / (2.0 * spec.a);
    for site in 0..n {
        for s in 0..ds {
            let mut acc = C64::new(0.0, 0.0);
            for axis in 0..spec.d {
                let up = spec.neighbor(site, axis, 1);
                let dn = spec.neighbor(site, axis, -1);
                for sp in 0..ds {
                    let alpha = algebra.alpha[axis][(s, sp)];
                    if alpha != C64::new(0.0, 0.0) {
                        let grad = (field[up * ds + sp] - field[dn * ds + sp]) * inv2a;
                        acc += C64::new(0.0, -1.0) * alpha * grad;
                    }
                }
            }
            if mass != 0.0 {
                for sp in 0..ds {
                    let beta = algebra.beta[(s, sp)];
                    if beta != C64::new(0.0, 0.0) {
                        acc += beta * field[site * ds + sp] * mass;
                    }
                }
            }
            out[site * ds + s] = acc;
        }
    }
    Ok(out)
}

/// Dense matrix of the one-particle operator in the site (x) spin basis.
pub fn one_particle_matrix(mass: f64, spec: &LatticeSpec, algebra: &SpinAlgebra) -> DMatrix<C64> {
    let ds = algebra.ds;
    let n = spec.n_sites();
    let dim = n * ds;
    let mut h = DMatrix::zeros(dim, dim);
    let inv2a = 1.0 / (2.0 * spec.a);
    for site in 0..n {
        for axis in 0..spec.d {
            let up = spec.neighbor(site, axis, 1);
            let dn = spec.neighbor(site, axis, -1);
            for s in 0..ds {
                for sp in 0..ds {
                    let alpha = algebra.alpha[axis][(s, sp)];
                    if alpha != C64::new(0.0, 0.0) {
                        h[(site * ds + s, up * ds + sp)] += C64::new(0.0, -1.0) * alpha * inv2a;
                        h[(site * ds + s, dn * ds + sp)] += C64::new(0.0, 1.0) * alpha * inv2a;
                    }
                }
            }
        }
        for s in 0..ds {
            for sp in 0..ds {
                let beta = algebra.beta[(s, sp)];
                if beta != C64::new(0.0, 0.0) {
                    h[(site * ds + s, site * ds + sp)] += beta * mass;
                }
            }
        }
    }
    h
}

/// Analytic lattice dispersion: the eigenvalues of the one-particle operator
/// are `+/- sqrt(m^2 + sum_a sin^2(k_a a)/a^2)`, each with multiplicity ds/2
/// per momentum.
pub fn dispersion_eigenvalues(mass: f64, spec: &LatticeSpec, ds: usize) -> Vec<f64> {
    let mut eigs = Vec::with_capacity(spec.n_sites() * ds);
    for k in spec.momenta() {
        let mut sum = mass * mass;
        for ka in &k {
            let s = (ka * spec.a).sin() / spec.a;
            sum += s * s;
        }
        let e = sum.sqrt();
        for _ in 0..ds / 2 {
            eigs.push(e);
            eigs.push(-e);
        }
    }
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

/// Exact one-particle propagator via Hermitian eigendecomposition.
///
/// `evolve(field, t)` returns `exp(-i H t) field` for arbitrary real `t`.
#[derive(Debug, Clone)]
pub struct OneParticlePropagator {
    pub dim: usize,
    eigenvalues: Vec<f64>,
    vectors: DMatrix<C64>,
}

impl OneParticlePropagator {
    pub fn new(mass: f64, spec: &LatticeSpec, algebra: &SpinAlgebra) -> Self {
        let h = one_particle_matrix(mass, spec, algebra);
        let dim = h.nrows();
        let eig = h.symmetric_eigen();
        Self {
            dim,
            eigenvalues: eig.eigenvalues.iter().copied().collect(),
            vectors: eig.eigenvectors,
        }
    }

    pub fn evolve(&self, field: &[C64], t: f64) -> Vec<C64> {
        let v = DVector::from_column_slice(field);
        let mut coeff = self.vectors.adjoint() * v;
        for (i, c) in coeff.iter_mut().enumerate() {
            *c *= (C64::new(0.0, -1.0) * self.eigenvalues[i] * t).exp();
        }
        (self.vectors.clone() * coeff).as_slice().to_vec()
    }

    /// Dense matrix `exp(-i H t)`.
    pub fn matrix_at(&self, t: f64) -> DMatrix<C64> {
        let mut d = DMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            d[(i, i)] = (C64::new(0.0, -1.0) * self.eigenvalues[i] * t).exp();
        }
        &self.vectors * d * self.vectors.adjoint()
    }
}

//! Dirac spin algebra: alpha/beta matrices satisfying the Clifford relations.
//!
//! For d = 1 the spin space is C^2 with alpha_1 = sigma_1 and beta = sigma_3;
//! for d = 3 it is C^4 in the standard Dirac representation. Entries are
//! integer-valued in both representations, so the Clifford relations hold
//! exactly in floating point.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Hermitian Dirac matrices for a given spatial dimension.
#[derive(Debug, Clone)]
pub struct SpinAlgebra {
    /// Spin dimension: 2 for d = 1, 4 for d = 3.
    pub ds: usize,
    /// One alpha matrix per spatial axis.
    pub alpha: Vec<DMatrix<C64>>,
    /// Mass-term matrix; equals gamma^0.
    pub beta: DMatrix<C64>,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn pauli() -> [DMatrix<C64>; 3] {
    let s1 = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]);
    let s2 = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
    let s3 = DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
    [s1, s2, s3]
}

/// Build the spin algebra for spatial dimension `d` (1 or 3).
pub fn make_spin_algebra(d: usize) -> Result<SpinAlgebra> {
    let [s1, s2, s3] = pauli();
    match d {
        1 => Ok(SpinAlgebra {
            ds: 2,
            alpha: vec![s1],
            beta: s3,
        }),
        3 => {
            // Dirac representation: alpha_a = offdiag(sigma_a), beta = diag(I, -I).
            let ds = 4;
            let mut alpha = Vec::with_capacity(3);
            for s in [&s1, &s2, &s3] {
                let mut m = DMatrix::zeros(ds, ds);
                for i in 0..2 {
                    for j in 0..2 {
                        m[(i, 2 + j)] = s[(i, j)];
                        m[(2 + i, j)] = s[(i, j)];
                    }
                }
                alpha.push(m);
            }
            let mut beta = DMatrix::zeros(ds, ds);
            beta[(0, 0)] = c(1., 0.);
            beta[(1, 1)] = c(1., 0.);
            beta[(2, 2)] = c(-1., 0.);
            beta[(3, 3)] = c(-1., 0.);
            Ok(SpinAlgebra { ds, alpha, beta })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

impl SpinAlgebra {
    /// gamma^0 = beta.
    pub fn gamma0(&self) -> DMatrix<C64> {
        self.beta.clone()
    }

    /// Spatial gamma matrix: gamma^a = beta * alpha_a.
    pub fn gamma(&self, axis: usize) -> DMatrix<C64> {
        &self.beta * &self.alpha[axis]
    }

    /// Max absolute deviation from the Clifford relations
    /// {alpha_a, alpha_b} = 2 delta_ab, {alpha_a, beta} = 0, beta^2 = I.
    pub fn clifford_residual(&self) -> f64 {
        let id = DMatrix::<C64>::identity(self.ds, self.ds);
        let mut worst: f64 = 0.0;
        let mut track = |m: &DMatrix<C64>| {
            for v in m.iter() {
                worst = worst.max(v.norm());
            }
        };
        for (i, ai) in self.alpha.iter().enumerate() {
            for (j, aj) in self.alpha.iter().enumerate() {
                let target = if i == j { 2.0 } else { 0.0 };
                let anti = ai * aj + aj * ai - id.scale(target);
                track(&anti);
            }
            track(&(ai * &self.beta + &self.beta * ai));
        }
        track(&(&self.beta * &self.beta - id));
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relations_exact() {
        for d in [1, 3] {
            let alg = make_spin_algebra(d).unwrap();
            assert_eq!(alg.clifford_residual(), 0.0, "d = {d}");
        }
    }

    #[test]
    fn dimensions_match_spec() {
        assert_eq!(make_spin_algebra(1).unwrap().ds, 2);
        assert_eq!(make_spin_algebra(3).unwrap().ds, 4);
        assert!(make_spin_algebra(2).is_err());
    }

    #[test]
    fn alpha_beta_anticommute_to_zero_matrix() {
        let alg = make_spin_algebra(1).unwrap();
        let anti = &alg.alpha[0] * &alg.beta + &alg.beta * &alg.alpha[0];
        assert!(anti.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn alpha_squares_to_identity_in_3d() {
        let alg = make_spin_algebra(3).unwrap();
        let id = DMatrix::<C64>::identity(4, 4);
        for a in &alg.alpha {
            assert!((a * a - &id).iter().all(|z| z.norm() == 0.0));
        }
    }

    #[test]
    fn gamma_matrices_consistent() {
        let alg = make_spin_algebra(3).unwrap();
        // gamma^0 gamma^a = alpha_a
        for axis in 0..3 {
            let m = alg.gamma0() * alg.gamma(axis);
            let diff = &m - &alg.alpha[axis];
            assert!(diff.iter().all(|z| z.norm() == 0.0));
        }
    }
}

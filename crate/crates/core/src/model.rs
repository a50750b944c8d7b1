//! Model parameters: particle statistics, masses, the coupling tensor, and
//! Fock truncation caps.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::spin::SpinAlgebra;

/// The three particle species of the pair model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Species {
    X,
    Xbar,
    Y,
}

/// Exchange statistics signs (+1 boson, -1 fermion) and masses per species.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpeciesStatistics {
    pub eps_x: i8,
    pub eps_xbar: i8,
    pub eps_y: i8,
    pub m_x: f64,
    pub m_xbar: f64,
    pub m_y: f64,
}

impl SpeciesStatistics {
    pub fn new(eps_x: i8, eps_xbar: i8, eps_y: i8, m_x: f64, m_xbar: f64, m_y: f64) -> Result<Self> {
        for e in [eps_x, eps_xbar, eps_y] {
            if e != 1 && e != -1 {
                return Err(Error::InvalidConfig(format!("statistics sign {e} must be +1 or -1")));
            }
        }
        for m in [m_x, m_xbar, m_y] {
            if m < 0.0 {
                return Err(Error::InvalidConfig(format!("mass {m} must be nonnegative")));
            }
        }
        Ok(Self { eps_x, eps_xbar, eps_y, m_x, m_xbar, m_y })
    }

    pub fn eps(&self, s: Species) -> i8 {
        match s {
            Species::X => self.eps_x,
            Species::Xbar => self.eps_xbar,
            Species::Y => self.eps_y,
        }
    }

    pub fn mass(&self, s: Species) -> f64 {
        match s {
            Species::X => self.m_x,
            Species::Xbar => self.m_xbar,
            Species::Y => self.m_y,
        }
    }

    /// Product eps_x * eps_xbar * eps_y; +1 iff the species content admits a
    /// consistent multi-time formulation.
    pub fn eps_product(&self) -> i8 {
        self.eps_x * self.eps_xbar * self.eps_y
    }
}

/// `eps^k` as a float, for sign bookkeeping in slot sums.
pub fn eps_pow(eps: i8, k: usize) -> f64 {
    if eps > 0 || k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Coupling tensor g_{r rbar s} of the pair vertex, shape ds x ds x ds.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingTensor {
    pub ds: usize,
    data: Vec<C64>,
}

impl CouplingTensor {
    pub fn zeros(ds: usize) -> Self {
        Self { ds, data: vec![C64::new(0.0, 0.0); ds * ds * ds] }
    }

    /// Diagonal test coupling: g_{r rbar s} = strength for r = rbar = s, else 0.
    pub fn diagonal(ds: usize, strength: f64) -> Self {
        let mut g = Self::zeros(ds);
        for r in 0..ds {
            *g.at_mut(r, r, r) = C64::new(strength, 0.0);
        }
        g
    }

    pub fn from_entries(ds: usize, entries: &[(usize, usize, usize, C64)]) -> Self {
        let mut g = Self::zeros(ds);
        for &(r, rb, s, v) in entries {
            *g.at_mut(r, rb, s) = v;
        }
        g
    }

    #[inline]
    pub fn at(&self, r: usize, rbar: usize, s: usize) -> C64 {
        self.data[(r * self.ds + rbar) * self.ds + s]
    }

    pub fn at_mut(&mut self, r: usize, rbar: usize, s: usize) -> &mut C64 {
        &mut self.data[(r * self.ds + rbar) * self.ds + s]
    }

    /// Nonzero entries as (r, rbar, s, value).
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, C64)> {
        let mut out = Vec::new();
        for r in 0..self.ds {
            for rb in 0..self.ds {
                for s in 0..self.ds {
                    let v = self.at(r, rb, s);
                    if v != C64::new(0.0, 0.0) {
                        out.push((r, rb, s, v));
                    }
                }
            }
        }
        out
    }

    /// Max |g| entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Truncation caps (M_max, Mbar_max, N_max).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorCaps {
    pub m: usize,
    pub mbar: usize,
    pub n: usize,
}

impl SectorCaps {
    pub fn new(m: usize, mbar: usize, n: usize) -> Self {
        Self { m, mbar, n }
    }
}

/// Everything needed to apply the Hamiltonian and the multi-time generators.
#[derive(Debug, Clone)]
pub struct ModelParams {
    pub lattice: LatticeSpec,
    pub algebra: SpinAlgebra,
    pub stats: SpeciesStatistics,
    pub g: CouplingTensor,
    pub caps: SectorCaps,
}

impl ModelParams {
    pub fn new(
        lattice: LatticeSpec,
        algebra: SpinAlgebra,
        stats: SpeciesStatistics,
        g: CouplingTensor,
        caps: SectorCaps,
    ) -> Result<Self> {
        if g.ds != algebra.ds {
            return Err(Error::ShapeMismatch(format!(
                "coupling tensor ds = {} but spin algebra ds = {}",
                g.ds, algebra.ds
            )));
        }
        Ok(Self { lattice, algebra, stats, g, caps })
    }

    pub fn ds(&self) -> usize {
        self.algebra.ds
    }

    /// Cell volume a^d appearing in inner-product weights and delta factors.
    pub fn cell_volume(&self) -> f64 {
        self.lattice.a.powi(self.lattice.d as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics_signs_validated() {
        assert!(SpeciesStatistics::new(-1, -1, 1, 1.0, 1.0, 1.0).is_ok());
        assert!(SpeciesStatistics::new(0, 1, 1, 1.0, 1.0, 1.0).is_err());
        assert!(SpeciesStatistics::new(1, 1, 1, -0.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn eps_pow_signs() {
        assert_eq!(eps_pow(-1, 0), 1.0);
        assert_eq!(eps_pow(-1, 1), -1.0);
        assert_eq!(eps_pow(-1, 4), 1.0);
        assert_eq!(eps_pow(1, 7), 1.0);
    }

    #[test]
    fn diagonal_coupling_entries() {
        let g = CouplingTensor::diagonal(2, 0.5);
        assert_eq!(g.at(0, 0, 0), C64::new(0.5, 0.0));
        assert_eq!(g.at(1, 1, 1), C64::new(0.5, 0.0));
        assert_eq!(g.at(0, 1, 0), C64::new(0.0, 0.0));
        assert_eq!(g.nonzero().len(), 2);
    }
}

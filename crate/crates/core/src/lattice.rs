//! Periodic spatial lattice geometry.
//!
//! Sites are stored as flat indices into an `L^d` grid with axis-0 fastest
//! (`site = c0 + c1*L + c2*L^2`). All distances use the minimum-image
//! convention, and neighbor lookups wrap periodically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial lattice geometry and the global time step (c = 1 units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeSpec {
    /// Spatial dimension, 1 or 3.
    pub d: usize,
    /// Sites per dimension.
    pub l: usize,
    /// Lattice spacing.
    pub a: f64,
    /// Time step; must satisfy `dt <= a` so the discrete cone is resolvable.
    pub dt: f64,
}

impl LatticeSpec {
    pub fn new(d: usize, l: usize, a: f64, dt: f64) -> Result<Self> {
        if d != 1 && d != 3 {
            return Err(Error::UnsupportedDimension(d));
        }
        if l < 4 {
            return Err(Error::InvalidLattice(format!("L = {l} < 4")));
        }
        if !(a > 0.0) {
            return Err(Error::InvalidLattice(format!("spacing a = {a} must be > 0")));
        }
        if !(dt > 0.0) {
            return Err(Error::InvalidLattice(format!("time step dt = {dt} must be > 0")));
        }
        if dt > a {
            return Err(Error::InvalidLattice(format!("dt = {dt} exceeds a = {a}")));
        }
        Ok(Self { d, l, a, dt })
    }

    /// Total number of sites `L^d`.
    pub fn n_sites(&self) -> usize {
        self.l.pow(self.d as u32)
    }

    /// Coordinates of a flat site index, axis 0 fastest.
    pub fn site_coords(&self, site: usize) -> [usize; 3] {
        let mut c = [0usize; 3];
        let mut s = site;
        for cc in c.iter_mut().take(self.d) {
            *cc = s % self.l;
            s /= self.l;
        }
        c
    }

    pub fn site_index(&self, coords: &[usize]) -> usize {
        let mut s = 0;
        for axis in (0..self.d).rev() {
            s = s * self.l + (coords[axis] % self.l);
        }
        s
    }

    /// Neighbor of `site` along `axis`, displaced by `step` (periodic wrap).
    pub fn neighbor(&self, site: usize, axis: usize, step: i64) -> usize {
        debug_assert!(axis < self.d);
        let mut c = self.site_coords(site);
        let l = self.l as i64;
        c[axis] = (((c[axis] as i64 + step) % l + l) % l) as usize;
        self.site_index(&c[..self.d])
    }

    /// Flat index of the periodic offset `to - from` (componentwise mod L).
    pub fn offset_index(&self, from: usize, to: usize) -> usize {
        let cf = self.site_coords(from);
        let ct = self.site_coords(to);
        let l = self.l as i64;
        let mut off = [0usize; 3];
        for axis in 0..self.d {
            off[axis] = (((ct[axis] as i64 - cf[axis] as i64) % l + l) % l) as usize;
        }
        self.site_index(&off[..self.d])
    }

    /// Minimum-image Euclidean distance between two sites, in physical units.
    pub fn min_image_dist(&self, s1: usize, s2: usize) -> f64 {
        let c1 = self.site_coords(s1);
        let c2 = self.site_coords(s2);
        let l = self.l as i64;
        let mut sum2 = 0.0;
        for axis in 0..self.d {
            let mut dz = (c1[axis] as i64 - c2[axis] as i64).abs() % l;
            if dz > l / 2 {
                dz = l - dz;
            }
            sum2 += (dz * dz) as f64;
        }
        self.a * sum2.sqrt()
    }

    /// Minimum-image distance of a site offset from the origin, physical units.
    pub fn offset_dist(&self, offset: usize) -> f64 {
        self.min_image_dist(offset, 0)
    }

    /// All lattice momentum vectors `k_a = 2 pi n_a / (L a)`.
    pub fn momenta(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(self.n_sites());
        for site in 0..self.n_sites() {
            let c = self.site_coords(site);
            out.push(
                (0..self.d)
                    .map(|axis| 2.0 * std::f64::consts::PI * c[axis] as f64 / (self.l as f64 * self.a))
                    .collect(),
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_dimension_and_geometry() {
        assert!(LatticeSpec::new(2, 8, 1.0, 0.1).is_err());
        assert!(LatticeSpec::new(1, 3, 1.0, 0.1).is_err());
        assert!(LatticeSpec::new(1, 8, 0.0, 0.1).is_err());
        assert!(LatticeSpec::new(1, 8, 1.0, 1.5).is_err());
        assert!(LatticeSpec::new(1, 8, 1.0, 1.0).is_ok());
    }

    #[test]
    fn neighbor_wraps_periodically() {
        let lat = LatticeSpec::new(1, 8, 1.0, 0.5).unwrap();
        assert_eq!(lat.neighbor(7, 0, 1), 0);
        assert_eq!(lat.neighbor(0, 0, -1), 7);
        let lat3 = LatticeSpec::new(3, 4, 1.0, 0.5).unwrap();
        let s = lat3.site_index(&[3, 2, 1]);
        assert_eq!(lat3.site_coords(s)[..3], [3, 2, 1]);
        assert_eq!(lat3.site_coords(lat3.neighbor(s, 0, 1))[..3], [0, 2, 1]);
        assert_eq!(lat3.site_coords(lat3.neighbor(s, 2, -2))[..3], [3, 2, 3]);
    }

    #[test]
    fn min_image_distance_uses_shortest_wrap() {
        let lat = LatticeSpec::new(1, 8, 0.5, 0.25).unwrap();
        assert_eq!(lat.min_image_dist(0, 7), 0.5);
        assert_eq!(lat.min_image_dist(0, 4), 2.0);
        assert_eq!(lat.min_image_dist(2, 2), 0.0);
    }

    #[test]
    fn offset_index_roundtrip() {
        let lat = LatticeSpec::new(3, 4, 1.0, 0.5).unwrap();
        for from in 0..lat.n_sites() {
            let to = lat.neighbor(from, 1, 3);
            let off = lat.offset_index(from, to);
            // displacing `from` by the offset must land on `to`
            let c_from = lat.site_coords(from);
            let c_off = lat.site_coords(off);
            let mut c = [0usize; 3];
            for axis in 0..3 {
                c[axis] = (c_from[axis] + c_off[axis]) % lat.l;
            }
            assert_eq!(lat.site_index(&c), to);
        }
    }
}

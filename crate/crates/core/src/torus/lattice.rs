use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::halfplane::{complex_pair, HalfPlanePoint};

/// A point of `C / (Z + Z*tau)`, stored by a representative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticePoint {
    #[serde(with = "complex_pair")]
    pub z: Complex64,
    pub tau: HalfPlanePoint,
}

impl LatticePoint {
    pub fn new(z: Complex64, tau: HalfPlanePoint) -> Self {
        LatticePoint { z, tau }
    }

    /// Build `a + b*tau` from lattice coordinates.
    pub fn from_coords(a: f64, b: f64, tau: HalfPlanePoint) -> Self {
        LatticePoint {
            z: Complex64::new(a, 0.0) + tau.to_complex() * b,
            tau,
        }
    }

    /// Real coordinates `(a, b)` with `z = a + b*tau`.
    pub fn coords(&self) -> (f64, f64) {
        let b = self.z.im / self.tau.im();
        (self.z.re - b * self.tau.re(), b)
    }

    /// The representative with both coordinates in `[0, 1)`.
    pub fn canonical(&self) -> LatticePoint {
        let (a, b) = self.coords();
        LatticePoint::from_coords(frac(a), frac(b), self.tau)
    }

    pub fn canonical_coords(&self) -> (f64, f64) {
        let (a, b) = self.coords();
        (frac(a), frac(b))
    }

    pub fn scale(&self, n: f64) -> LatticePoint {
        LatticePoint::new(self.z * n, self.tau)
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint::new(-self.z, self.tau)
    }
}

/// Fractional part in `[0, 1)`; guards the `1.0` produced by `-tiny - floor`.
pub(crate) fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Lagrange-Gauss reduced basis of the lattice `Z + Z*tau` in `C`.
#[derive(Debug, Clone, Copy)]
pub struct ReducedBasis {
    b1: Complex64,
    b2: Complex64,
    det: f64,
}

impl ReducedBasis {
    pub fn new(tau: HalfPlanePoint) -> Self {
        let mut b1 = Complex64::new(1.0, 0.0);
        let mut b2 = tau.to_complex();
        for _ in 0..10_000 {
            if b1.norm_sqr() > b2.norm_sqr() {
                std::mem::swap(&mut b1, &mut b2);
            }
            let mu = ((b2 * b1.conj()).re / b1.norm_sqr()).round();
            if mu == 0.0 {
                break;
            }
            b2 -= b1 * mu;
        }
        ReducedBasis {
            b1,
            b2,
            det: b1.re * b2.im - b1.im * b2.re,
        }
    }

    /// Euclidean distance from `z` to the nearest lattice point: Babai
    /// rounding in the reduced basis plus the surrounding 3x3 block.
    pub fn distance(&self, z: Complex64) -> f64 {
        let x = (z.re * self.b2.im - z.im * self.b2.re) / self.det;
        let y = (self.b1.re * z.im - self.b1.im * z.re) / self.det;
        let (x0, y0) = (x.round(), y.round());
        let mut best = f64::INFINITY;
        for dx in -1..=1 {
            for dy in -1..=1 {
                let p = self.b1 * (x0 + dx as f64) + self.b2 * (y0 + dy as f64);
                best = best.min((z - p).norm());
            }
        }
        best
    }
}

/// Distance from the representative to the lattice `Z + Z*tau`.
pub fn lattice_distance(p: &LatticePoint) -> f64 {
    ReducedBasis::new(p.tau).distance(p.z)
}

//! Degree-zero line bundles on complex elliptic curves.
//!
//! Two presentations are used:
//!
//! * `L(tau, A, B)`: the quotient of `C^2` by `(x, y) ~ (x + 1, A y)` and
//!   `(x, y) ~ (x + tau, B y)` with `A = q^u`, `B = q^v` unit-modulus.
//! * `L(lambda, mu)`: the quotient of `C* x C` by `diag(lambda, mu)`, a bundle
//!   over `E_lambda = C*/lambda`, with `lambda = q^tau` and `mu = q^sigma`.
//!
//! Only the exponents `(tau, u, v)` and `(tau, sigma)` are stored; `A`, `B`,
//! `lambda` and `mu` are derived views. The map `(x, y) -> (q^x, q^(-u x) y)`
//! identifies `L(tau, q^u, q^v)` with `L(q^tau, q^(v - u tau))`, so the stored
//! fiber exponent of a Hopf presentation is `sigma = -u*tau + v`.
//!
//! The Pic0 class of `L(tau, q^u, q^v)` is the point `v - u*tau` of
//! `C/(Z + Z*tau)`. The orientation of that identification is a convention;
//! any fixed choice gives the same equivalence relation.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_bound, Error, Result};
use crate::ratrecon::reconstruct;
use crate::torus::{frac, HalfPlanePoint, LatticePoint};

/// Tolerance for rational reconstruction of exponents, relative to `max(1, |x|)`.
pub const TORSION_TOL: f64 = 1e-14;
/// Default denominator bound for torsion detection.
pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1_000_000;
/// Tolerance for `u_rep = u (mod 1)`.
pub const CONGRUENCE_TOL: f64 = 1e-10;

/// `L(tau, q^u, q^v)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BundleTauForm {
    pub tau: HalfPlanePoint,
    pub u: f64,
    pub v: f64,
}

/// `L(q^base_exp, q^fiber_exp)` over `E = C*/q^base_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BundleHopfForm {
    pub base_exp: HalfPlanePoint,
    pub fiber_exp: HalfPlanePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionVerdict {
    pub is_torsion: bool,
    pub order: Option<u64>,
    pub denominator_bound: u64,
}

impl BundleTauForm {
    pub fn new(tau: HalfPlanePoint, u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::NonFinite { name: "u", value: u });
        }
        if !v.is_finite() {
            return Err(Error::NonFinite { name: "v", value: v });
        }
        Ok(BundleTauForm { tau, u, v })
    }

    pub fn trivial(tau: HalfPlanePoint) -> Self {
        BundleTauForm { tau, u: 0.0, v: 0.0 }
    }

    /// Monodromy `A = q^u` around the cycle `1`.
    pub fn monodromy_a(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.u)
    }

    /// Monodromy `B = q^v` around the cycle `tau`.
    pub fn monodromy_b(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.v)
    }

    /// Lattice coordinates `(a, b)` of the class `a + b*tau`, reduced to `[0, 1)`.
    ///
    /// Computed from `(v, -u)` directly, without complex arithmetic.
    pub fn class_coords(&self) -> (f64, f64) {
        (frac(self.v), frac(-self.u))
    }

    /// `v - u*tau` as a raw complex number (not reduced).
    pub fn class_exponent(&self) -> Complex64 {
        Complex64::new(self.v, 0.0) - self.tau.to_complex() * self.u
    }

    /// The representative of `u` in `[-1, 0)`.
    pub fn default_u_rep(&self) -> f64 {
        frac(self.u) - 1.0
    }
}

/// The Pic0 class `v - u*tau`, canonically represented.
pub fn pic0_point(b: &BundleTauForm) -> LatticePoint {
    let (a, c) = b.class_coords();
    LatticePoint::from_coords(a, c, b.tau)
}

/// Torsion test: both exponents must reconstruct as fractions with
/// denominator at most `denominator_bound`. The order is the lcm of the two
/// denominators. A negative verdict only means "non-torsion up to the bound".
pub fn is_torsion(b: &BundleTauForm, denominator_bound: u64) -> Result<TorsionVerdict> {
    ensure_bound("denominator_bound", denominator_bound as i64, 1)?;
    let fu = reconstruct(b.u, TORSION_TOL, denominator_bound);
    let fv = reconstruct(b.v, TORSION_TOL, denominator_bound);
    let order = match (fu, fv) {
        (Some(fu), Some(fv)) => Some(fu.denom.lcm(&fv.denom)),
        _ => None,
    };
    Ok(TorsionVerdict {
        is_torsion: order.is_some(),
        order,
        denominator_bound,
    })
}

/// The Hopf presentation `L(q^tau, q^(-u_rep*tau + v))` for a negative
/// representative `u_rep` of `u` modulo 1.
pub fn tau_to_hopf(b: &BundleTauForm, u_rep: f64) -> Result<BundleHopfForm> {
    if u_rep >= 0.0 || u_rep.is_nan() {
        return Err(Error::NoHopfPresentation { u_prime: u_rep });
    }
    let diff = u_rep - b.u;
    if (diff - diff.round()).abs() > CONGRUENCE_TOL {
        return Err(Error::IncongruentRepresentative { u: b.u, u_rep });
    }
    let fiber = HalfPlanePoint::new_unchecked(b.v - u_rep * b.tau.re(), -u_rep * b.tau.im());
    Ok(BundleHopfForm {
        base_exp: b.tau,
        fiber_exp: fiber,
    })
}

/// Solve `sigma = -u*tau + v` for real `u, v`.
pub fn hopf_to_tau(h: &BundleHopfForm) -> BundleTauForm {
    let tau = h.base_exp;
    let sigma = h.fiber_exp;
    let u = -sigma.im() / tau.im();
    let v = sigma.re() + u * tau.re();
    BundleTauForm { tau, u, v }
}

/// `L^-1 = L(tau, A^-1, B^-1)`.
pub fn inverse_bundle(b: &BundleTauForm) -> BundleTauForm {
    BundleTauForm {
        tau: b.tau,
        u: -b.u,
        v: -b.v,
    }
}

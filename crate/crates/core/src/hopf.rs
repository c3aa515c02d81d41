//! Diagonal Hopf surfaces `H(lambda, mu) = (C^2 - 0) / diag(lambda, mu)`.
//!
//! A surface is stored by exponents: `lambda = q^lambda_exp`,
//! `mu = q^mu_exp`. The x-axis curve `{y = 0}` is `E_lambda`; the y-axis
//! curve `{x = 0}` is `E_mu`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bundle::{BundleHopfForm, BundleTauForm};
use crate::error::{ensure_bound, Error, Result};
use crate::torus::HalfPlanePoint;

pub const DEFAULT_RELATION_BOUND: u64 = 50;
/// Tolerance for `n*lambda_exp - m*mu_exp` being an integer.
pub const RELATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopfSurface {
    pub lambda_exp: HalfPlanePoint,
    pub mu_exp: HalfPlanePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HopfKind {
    EllipticFibration,
    TwoCurves,
}

/// `relation = Some((n, m))` means `lambda^n = mu^m`. A `TwoCurves` verdict
/// only holds up to `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfClassification {
    pub kind: HopfKind,
    pub relation: Option<(i64, i64)>,
    pub bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axis {
    /// `E_lambda`, the image of `{y = 0}`.
    XAxisCurve,
    /// `E_mu`, the image of `{x = 0}`.
    YAxisCurve,
}

/// Quotient of `base` by `diag(q^(1/n), q^(r/n))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecondaryHopfData {
    pub base: HopfSurface,
    pub n: i64,
    pub r: i64,
}

impl HopfSurface {
    pub fn new(lambda_exp: HalfPlanePoint, mu_exp: HalfPlanePoint) -> Self {
        HopfSurface { lambda_exp, mu_exp }
    }

    pub fn swapped(&self) -> HopfSurface {
        HopfSurface {
            lambda_exp: self.mu_exp,
            mu_exp: self.lambda_exp,
        }
    }

    /// Rebuild the surface from the bundle left after removing `axis`.
    pub fn from_complement(bundle: &BundleHopfForm, removed: Axis) -> HopfSurface {
        let h = HopfSurface::new(bundle.base_exp, bundle.fiber_exp);
        match removed {
            Axis::YAxisCurve => h,
            Axis::XAxisCurve => h.swapped(),
        }
    }
}

/// Smallest `(n, m)` with `n > 0`, `0 < m <= bound`, `n <= bound` and
/// `n*lambda_exp - m*mu_exp` an integer.
///
/// Both exponents lie in the upper half-plane, so a relation forces `n` and
/// `m` to share a sign, and the relations form a rank-one group: the
/// smallest `n` gives its generator.
pub fn classify_hopf(h: &HopfSurface, search_bound: u64) -> Result<HopfClassification> {
    ensure_bound("search_bound", search_bound as i64, 1)?;
    let (l, mu) = (h.lambda_exp, h.mu_exp);
    let ratio = l.im() / mu.im();
    for n in 1..=search_bound as i64 {
        let m = (n as f64 * ratio).round() as i64;
        if m < 1 || m > search_bound as i64 {
            continue;
        }
        let d_im = n as f64 * l.im() - m as f64 * mu.im();
        let d_re = n as f64 * l.re() - m as f64 * mu.re();
        if d_im.abs() <= RELATION_TOL && (d_re - d_re.round()).abs() <= RELATION_TOL {
            return Ok(HopfClassification {
                kind: HopfKind::EllipticFibration,
                relation: Some((n, m)),
                bound: search_bound,
            });
        }
    }
    Ok(HopfClassification {
        kind: HopfKind::TwoCurves,
        relation: None,
        bound: search_bound,
    })
}

/// The line bundle whose total space is `H` minus the removed axis curve.
pub fn complement_bundle(h: &HopfSurface, removed_axis: Axis) -> BundleHopfForm {
    match removed_axis {
        Axis::YAxisCurve => BundleHopfForm {
            base_exp: h.lambda_exp,
            fiber_exp: h.mu_exp,
        },
        Axis::XAxisCurve => BundleHopfForm {
            base_exp: h.mu_exp,
            fiber_exp: h.lambda_exp,
        },
    }
}

/// `H(q^tauE, q^tauF)`, containing `E` and `F` as its axis curves.
pub fn joint_hopf(tau_e: HalfPlanePoint, tau_f: HalfPlanePoint) -> (HopfSurface, HopfClassification) {
    joint_hopf_with_bound(tau_e, tau_f, DEFAULT_RELATION_BOUND).expect("default bound is positive")
}

pub fn joint_hopf_with_bound(
    tau_e: HalfPlanePoint,
    tau_f: HalfPlanePoint,
    search_bound: u64,
) -> Result<(HopfSurface, HopfClassification)> {
    let h = HopfSurface::new(tau_e, tau_f);
    Ok((h, classify_hopf(&h, search_bound)?))
}

/// Descriptor of `h / diag(q^(1/n), q^(r/n))`. Both diagonal entries must be
/// primitive `n`-th roots of unity; for `q^(1/n)` this is automatic.
pub fn secondary_quotient(h: &HopfSurface, n: i64, r: i64) -> Result<SecondaryHopfData> {
    ensure_bound("n", n, 2)?;
    if r.gcd(&n) != 1 || 1i64.gcd(&n) != 1 {
        return Err(Error::NonPrimitiveRoot { n, r });
    }
    Ok(SecondaryHopfData { base: *h, n, r })
}

/// Pull back along `C/(Z + Z*n*tau) -> C/(Z + Z*tau)`: `(n*tau, u, n*v)`.
pub fn isogeny_pullback(b: &BundleTauForm, n: u64) -> Result<BundleTauForm> {
    ensure_bound("n", n as i64, 1)?;
    let nf = n as f64;
    let tau = HalfPlanePoint::new(nf * b.tau.re(), nf * b.tau.im())?;
    BundleTauForm::new(tau, b.u, nf * b.v)
}

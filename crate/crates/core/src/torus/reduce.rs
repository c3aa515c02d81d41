//! Reduction to the standard fundamental domain of SL2(Z).
//!
//! Canonical form: `Re tau` in `(-1/2, 1/2]`, `|tau| >= 1`, and on the unit
//! arc `Re tau >= 0`.

use super::halfplane::{HalfPlanePoint, ModularMatrix};

/// Points this close to the domain boundary are snapped to the canonical side.
const BOUNDARY_EPS: f64 = 1e-12;
const MAX_STEPS: usize = 10_000;

/// Default tolerance for equality of moduli.
pub const MODULUS_TOL: f64 = 1e-9;

/// Returns `(tau*, gamma)` with `gamma * tau = tau*` in the fundamental domain.
pub fn reduce_to_fundamental_domain(tau: HalfPlanePoint) -> (HalfPlanePoint, ModularMatrix) {
    let (mut re, mut im) = (tau.re(), tau.im());
    let mut g = ModularMatrix::IDENTITY;

    for _ in 0..MAX_STEPS {
        let t = (re - 0.5).ceil();
        if t != 0.0 {
            re -= t;
            g = ModularMatrix::translation(-(t as i64)) * g;
        }
        let r2 = re * re + im * im;
        if r2 < 1.0 - BOUNDARY_EPS {
            re = -re / r2;
            im /= r2;
            g = ModularMatrix::S * g;
        } else {
            break;
        }
    }

    if re <= -0.5 + BOUNDARY_EPS {
        re += 1.0;
        g = ModularMatrix::T * g;
    }
    let r2 = re * re + im * im;
    if re < 0.0 && (r2 - 1.0).abs() <= BOUNDARY_EPS {
        re = -re / r2;
        im /= r2;
        g = ModularMatrix::S * g;
    }
    (HalfPlanePoint::new_unchecked(re, im), g)
}

/// For reduced `a` and `b`, find `delta` with `delta * a` within `tol` of `b`.
///
/// Canonical forms of nearly-equal moduli can land on opposite sides of the
/// domain boundary, so the boundary gluing maps are tried as well.
pub fn match_reduced(a: HalfPlanePoint, b: HalfPlanePoint, tol: f64) -> Option<ModularMatrix> {
    if a.dist(b) <= tol {
        return Some(ModularMatrix::IDENTITY);
    }
    if (a.re().abs() < 0.5 - 2.0 * tol) && (a.to_complex().norm() > 1.0 + 2.0 * tol) {
        return None;
    }
    ModularMatrix::small()
        .iter()
        .copied()
        .find(|g| g.apply(a).dist(b) <= tol)
}

/// Find `gamma` in SL2(Z) with `gamma * a` matching `b` up to `tol` after
/// reduction, or `None` if the curves differ.
pub fn match_moduli(a: HalfPlanePoint, b: HalfPlanePoint, tol: f64) -> Option<ModularMatrix> {
    let (ra, ga) = reduce_to_fundamental_domain(a);
    let (rb, gb) = reduce_to_fundamental_domain(b);
    match_reduced(ra, rb, tol).map(|d| gb.inverse() * d * ga)
}

/// True when the two moduli define isomorphic elliptic curves.
pub fn same_curve(a: HalfPlanePoint, b: HalfPlanePoint) -> bool {
    let (ra, _) = reduce_to_fundamental_domain(a);
    let (rb, _) = reduce_to_fundamental_domain(b);
    match_reduced(ra, rb, MODULUS_TOL).is_some()
}

/// Elements of SL2(Z) (entries in {-1,0,1}) fixing the reduced point `tau`,
/// up to `tol`. Always contains `+-I`.
pub fn stabilizer(tau: HalfPlanePoint, tol: f64) -> Vec<ModularMatrix> {
    ModularMatrix::small()
        .iter()
        .copied()
        .filter(|g| g.apply(tau).dist(tau) <= tol)
        .collect()
}

//! Bounded-degree isogeny search between complex elliptic curves.
//!
//! An isogeny `C/(Z + Z*tau1) -> C/(Z + Z*tau2)` of degree `D` exists iff
//! `tau2` is SL2(Z)-equivalent to `M * tau1` for an integer matrix `M` of
//! determinant `D`. Up to SL2(Z) on the left every such `M` has the Hermite
//! normal form `[[a, b], [0, d]]` with `a*d = D` and `0 <= b < d`, so the
//! search below is exhaustive for each degree.

use serde::{Deserialize, Serialize};

use super::halfplane::{HalfPlanePoint, IntMatrix};
use super::reduce::{match_reduced, reduce_to_fundamental_domain};
use crate::error::{ensure_bound, Result};

/// Residual tolerance for accepting a certificate.
pub const ISOGENY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsogenyCertificate {
    /// Integer matrix carrying `tau1` to `tau2` by Moebius action.
    pub matrix: IntMatrix,
    pub degree: u64,
    /// Distance between reduced moduli after the action.
    pub residual: f64,
}

/// Search degrees `1..=max_degree` in the order (degree ascending, `a`
/// descending, `b` ascending) and return the first certificate.
///
/// `None` means "no isogeny up to degree `max_degree`", not a proof of
/// non-isogeny.
pub fn bounded_isogeny_search(
    tau1: HalfPlanePoint,
    tau2: HalfPlanePoint,
    max_degree: u64,
) -> Result<Option<IsogenyCertificate>> {
    ensure_bound("max_degree", max_degree as i64, 1)?;
    let (r1, g1) = reduce_to_fundamental_domain(tau1);
    let (r2, g2) = reduce_to_fundamental_domain(tau2);

    for degree in 1..=max_degree as i64 {
        for a in (1..=degree).rev().filter(|a| degree % a == 0) {
            let d = degree / a;
            for b in 0..d {
                let hnf = IntMatrix::new(a, b, 0, d);
                let w = HalfPlanePoint::new_unchecked(
                    (a as f64 * r1.re() + b as f64) / d as f64,
                    a as f64 * r1.im() / d as f64,
                );
                let (rw, gw) = reduce_to_fundamental_domain(w);
                if let Some(delta) = match_reduced(rw, r2, ISOGENY_TOL) {
                    let residual = delta.apply(rw).dist(r2);
                    let matrix = g2.inverse().as_int() * delta.as_int() * gw.as_int() * hnf * g1.as_int();
                    return Ok(Some(IsogenyCertificate {
                        matrix,
                        degree: degree as u64,
                        residual,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling_i() {
        let cert = bounded_isogeny_search(HalfPlanePoint::I, HalfPlanePoint::new(0.0, 2.0).unwrap(), 5)
            .unwrap()
            .expect("degree 2 isogeny");
        assert_eq!(cert.degree, 2);
        assert_eq!(cert.matrix, IntMatrix::new(2, 0, 0, 1));
        assert!(cert.residual <= ISOGENY_TOL);
    }

    #[test]
    fn identity_isogeny() {
        let tau = HalfPlanePoint::new(0.3, 1.2).unwrap();
        let cert = bounded_isogeny_search(tau, tau, 3).unwrap().unwrap();
        assert_eq!(cert.degree, 1);
        assert_eq!(cert.matrix, IntMatrix::new(1, 0, 0, 1));
    }

    #[test]
    fn certificate_matrix_maps_tau1_to_tau2() {
        let tau1 = HalfPlanePoint::new(2.7, 0.8).unwrap();
        // 3*tau1 moved around by SL2(Z)
        let w = HalfPlanePoint::new(3.0 * 2.7 + 1.0, 3.0 * 0.8).unwrap();
        let tau2 = crate::torus::ModularMatrix::new(2, 1, 1, 1).unwrap().apply(w);
        let cert = bounded_isogeny_search(tau1, tau2, 4).unwrap().unwrap();
        assert_eq!(cert.degree, 3);
        assert_eq!(cert.matrix.det(), 3);
        assert!(cert.matrix.act(tau1.to_complex()).re - tau2.re() < 1e-8);
        assert!((cert.matrix.act(tau1.to_complex()) - tau2.to_complex()).norm() < 1e-8);
    }

    #[test]
    fn rejects_zero_bound() {
        assert!(bounded_isogeny_search(HalfPlanePoint::I, HalfPlanePoint::I, 0).is_err());
    }
}

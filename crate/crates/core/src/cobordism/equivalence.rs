use num_complex::Complex64;

use crate::bundle::BundleTauForm;
use crate::torus::{
    match_reduced, reduce_to_fundamental_domain, stabilizer, HalfPlanePoint, ReducedBasis, MODULUS_TOL,
};

/// Tolerance for Pic0 points agreeing modulo the lattice.
pub const CLASS_TOL: f64 = 1e-9;

fn transported(b: &BundleTauForm) -> (HalfPlanePoint, f64, f64) {
    let (r, g) = reduce_to_fundamental_domain(b.tau);
    let (u, v) = g.transport_exponents(b.u, b.v);
    (r, u, v)
}

/// Isomorphism of line bundles up to isomorphism of the base curve.
///
/// Both bundles are carried to the reduced modulus; their Pic0 points must
/// then agree modulo the lattice after some automorphism of the curve fixing
/// zero (`+-1` always, plus order 4 or 6 at `j = 1728` or `j = 0`).
pub fn bundles_equivalent(b1: &BundleTauForm, b2: &BundleTauForm) -> bool {
    let (r1, u1, v1) = transported(b1);
    let (r2, u2, v2) = transported(b2);
    let Some(delta) = match_reduced(r1, r2, MODULUS_TOL) else {
        return false;
    };
    let (u1, v1) = delta.transport_exponents(u1, v1);
    let basis = ReducedBasis::new(r2);
    let t = r2.to_complex();
    let p2 = Complex64::new(v2, 0.0) - t * u2;
    stabilizer(r2, MODULUS_TOL).into_iter().any(|s| {
        let (su, sv) = s.transport_exponents(u1, v1);
        let p1 = Complex64::new(sv, 0.0) - t * su;
        basis.distance(p1 - p2) <= CLASS_TOL
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::inverse_bundle;
    use crate::torus::ModularMatrix;

    fn b0() -> BundleTauForm {
        BundleTauForm::new(HalfPlanePoint::I, -0.5f64.sqrt(), 1.0 / 3f64.sqrt()).unwrap()
    }

    #[test]
    fn examples() {
        let b = b0();
        let shifted = BundleTauForm::new(b.tau, b.u + 1.0, b.v - 2.0).unwrap();
        assert!(bundles_equivalent(&b, &shifted));
        assert!(bundles_equivalent(&b, &inverse_bundle(&b)));
        let off = BundleTauForm::new(b.tau, b.u, b.v + 0.1).unwrap();
        assert!(!bundles_equivalent(&b, &off));
    }

    #[test]
    fn modular_transport_is_equivalent() {
        let b = BundleTauForm::new(HalfPlanePoint::new(0.31, 0.77).unwrap(), -0.42, 0.17).unwrap();
        for g in [
            ModularMatrix::new(2, 1, 1, 1).unwrap(),
            ModularMatrix::new(5, -2, 3, -1).unwrap(),
            ModularMatrix::S,
        ] {
            let (u, v) = g.transport_exponents(b.u, b.v);
            let moved = BundleTauForm::new(g.apply(b.tau), u, v).unwrap();
            assert!(bundles_equivalent(&b, &moved));
            let off = BundleTauForm::new(moved.tau, u + 0.3, v).unwrap();
            assert!(!bundles_equivalent(&b, &off));
        }
    }

    #[test]
    fn extra_automorphism_at_i() {
        // multiplication by i sends a + b*i to -b + a*i
        let b = BundleTauForm::new(HalfPlanePoint::I, -0.3, 0.2).unwrap();
        let rotated = BundleTauForm::new(HalfPlanePoint::I, -0.2, -0.3).unwrap();
        assert!(bundles_equivalent(&b, &rotated));
        let generic = HalfPlanePoint::new(0.1, 1.3).unwrap();
        let b = BundleTauForm::new(generic, -0.3, 0.2).unwrap();
        let rotated = BundleTauForm::new(generic, -0.2, -0.3).unwrap();
        assert!(!bundles_equivalent(&b, &rotated));
    }

    #[test]
    fn different_curves_are_not_equivalent() {
        let a = BundleTauForm::trivial(HalfPlanePoint::I);
        let b = BundleTauForm::trivial(HalfPlanePoint::new(0.0, 1.5).unwrap());
        assert!(!bundles_equivalent(&a, &b));
    }
}

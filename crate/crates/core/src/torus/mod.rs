//! Moduli of complex elliptic curves: the upper half-plane, SL2(Z), the
//! fundamental domain, j-invariants, lattice distances and isogenies.

mod halfplane;
mod isogeny;
mod jinv;
mod lattice;
mod reduce;

pub use halfplane::{apply_mobius, complex_pair, HalfPlanePoint, IntMatrix, ModularMatrix};
pub use isogeny::{bounded_isogeny_search, IsogenyCertificate, ISOGENY_TOL};
pub use jinv::j_invariant;
pub use lattice::{lattice_distance, LatticePoint, ReducedBasis};
pub use reduce::{
    match_moduli, match_reduced, reduce_to_fundamental_domain, same_curve, stabilizer, MODULUS_TOL,
};

pub(crate) use lattice::frac;

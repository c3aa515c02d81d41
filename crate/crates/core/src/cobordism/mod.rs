//! Hopf duality and analytic cobordance as an enumeration.
//!
//! A move `(gamma, r, negation)` re-presents a bundle `L(tau, q^u, q^v)`
//! over `tau' = gamma * tau` with exponents `u' = m v + n u + r`,
//! `v' = k v + l u`. When `u' < 0` this is the complement of the y-axis
//! curve in `H(q^tau', q^sigma)` with `sigma = -u' tau' + v'`, and the
//! y-axis curve `C/(Z + Z*sigma)` is the graft.

mod compactify;
mod equivalence;
mod moves;
mod report;

pub use compactify::{
    minimal_compactifications, minimal_compactifications_with, CompactificationOptions, CompactificationRecord,
};
pub use equivalence::{bundles_equivalent, CLASS_TOL};
pub use moves::{
    graft, graft_exponent_direct, matrices_up_to, move_height, CobordismMove, Graft, MoveEnumerator,
    GRAFT_IDENTITY_TOL,
};
pub use report::{
    apply_move, apply_move_with, enumerate_cobordant, enumerate_cobordant_with, enumerate_hopf_duals,
    enumerate_hopf_duals_with, find_cobordant_target, GraftReport, Relation, ReportOptions,
};

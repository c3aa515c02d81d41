//! Elliptic curves, degree-zero line bundles and Hopf surfaces: Hopf
//! duality and analytic cobordance as computable enumerations.
//!
//! Moduli are points of the upper half-plane; a bundle
//! `L(tau, q^u, q^v)` is stored by its exponents, with `q^x = exp(2 pi i x)`.

pub mod bundle;
pub mod cobordism;
pub mod diophantine;
pub mod error;
pub mod exec;
pub mod hopf;
pub mod k0;
pub mod motivic;
pub mod ratrecon;
pub mod surfaces;
pub mod torus;

pub use error::{Error, Result};
pub use exec::Execution;

//! Finite-range estimator for the Diophantine condition
//! `-log d(O, L^n) = O(log n)`.
//!
//! `d` is the Euclidean distance from `n * p` to the lattice, where `p` is
//! the Pic0 class. Distances are measured on the reduced model
//! `C/(Z + Z*tau_red)` of the curve, so isomorphic bundles get the same
//! report. Verdicts are heuristic: a finite sweep cannot prove an
//! asymptotic statement.

use serde::{Deserialize, Serialize};

use crate::bundle::BundleTauForm;
use crate::error::{ensure_bound, Result};
use crate::exec::{map_range, Execution};
use crate::torus::{frac, reduce_to_fundamental_domain, ReducedBasis};

pub const DEFAULT_SUSPECT_THRESHOLD: f64 = 4.0;
/// `d_n` below this counts as hitting the lattice.
pub const TORSION_DISTANCE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiophantineVerdict {
    DiophantineConsistent,
    Suspect,
    Torsion,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiophantineReport {
    pub n_max: u64,
    pub exponent_estimate: f64,
    pub worst_n: u64,
    pub worst_distance: f64,
    pub verdict: DiophantineVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiophantineOptions {
    pub suspect_threshold: f64,
    pub exec: Execution,
}

impl Default for DiophantineOptions {
    fn default() -> Self {
        DiophantineOptions {
            suspect_threshold: DEFAULT_SUSPECT_THRESHOLD,
            exec: Execution::Parallel,
        }
    }
}

pub fn diophantine_report(b: &BundleTauForm, n_max: u64) -> Result<DiophantineReport> {
    diophantine_report_with(b, n_max, &DiophantineOptions::default())
}

/// Sweep `n = 2..=n_max`, recording `(-log d_n) / log n`.
///
/// The sweep stops at the first `n` with `d_n < TORSION_DISTANCE`; that
/// index is included in the maximum with `d_n` clamped away from zero. Ties
/// go to the smallest `n`, so the result does not depend on `opts.exec`.
pub fn diophantine_report_with(
    b: &BundleTauForm,
    n_max: u64,
    opts: &DiophantineOptions,
) -> Result<DiophantineReport> {
    ensure_bound("n_max", n_max as i64, 2)?;
    let (tau_red, g) = reduce_to_fundamental_domain(b.tau);
    let (u, v) = g.transport_exponents(b.u, b.v);
    let (a, c) = BundleTauForm { tau: tau_red, u, v }.class_coords();
    let basis = ReducedBasis::new(tau_red);
    let tau = tau_red.to_complex();

    let distances = map_range(opts.exec, 2, n_max, |n| {
        let x = frac(n as f64 * a);
        let y = frac(n as f64 * c);
        basis.distance(tau * y + x)
    });

    let stop = distances.iter().position(|&d| d < TORSION_DISTANCE);
    let scanned = match stop {
        Some(idx) => &distances[..=idx],
        None => &distances[..],
    };

    let mut best = (f64::NEG_INFINITY, 2u64, f64::NAN);
    for (idx, &d) in scanned.iter().enumerate() {
        let n = idx as u64 + 2;
        let ratio = -d.max(f64::MIN_POSITIVE).ln() / (n as f64).ln();
        if ratio > best.0 {
            best = (ratio, n, d);
        }
    }

    let verdict = if stop.is_some() {
        DiophantineVerdict::Torsion
    } else if best.0 > opts.suspect_threshold {
        DiophantineVerdict::Suspect
    } else {
        DiophantineVerdict::DiophantineConsistent
    };
    let (worst_n, worst_distance) = match stop {
        Some(idx) => (idx as u64 + 2, scanned[idx]),
        None => (best.1, best.2),
    };

    Ok(DiophantineReport {
        n_max,
        exponent_estimate: best.0,
        worst_n,
        worst_distance,
        verdict,
    })
}

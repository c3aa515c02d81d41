//! Witness search for `[E] = [F]` in the analytic Grothendieck group.
//!
//! For a curve `W` with `H(q^tauE, q^W)` and `H(q^tauF, q^W)` both
//! two-curve surfaces, and with the complement bundles over `E` and `F`
//! non-torsion and Diophantine, Hopf transforms give `[E] = [W] = [F]`.

use serde::{Deserialize, Serialize};

use crate::bundle::{hopf_to_tau, is_torsion, BundleHopfForm, BundleTauForm, DEFAULT_DENOMINATOR_BOUND};
use crate::diophantine::{diophantine_report_with, DiophantineOptions, DiophantineVerdict};
use crate::exec::{find_first, Execution};
use crate::hopf::{classify_hopf, HopfKind, HopfSurface, DEFAULT_RELATION_BOUND};
use crate::torus::{frac, match_moduli, HalfPlanePoint, ModularMatrix, MODULUS_TOL};

/// Real root of `x^3 = x + 1`.
const PLASTIC: f64 = 1.324_717_957_244_746;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessBudget {
    /// Number of candidates tried.
    pub candidates: u64,
    /// Offset into the candidate sequence.
    pub seed: u64,
    pub relation_bound: u64,
    pub torsion_bound: u64,
    pub n_max: u64,
    pub exec: Execution,
}

impl Default for WitnessBudget {
    fn default() -> Self {
        WitnessBudget {
            candidates: 100,
            seed: 0,
            relation_bound: DEFAULT_RELATION_BOUND,
            torsion_bound: DEFAULT_DENOMINATOR_BOUND,
            n_max: 10_000,
            exec: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub hypothesis: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct K0Witness {
    #[serde(rename = "tauE")]
    pub tau_e: HalfPlanePoint,
    #[serde(rename = "tauF")]
    pub tau_f: HalfPlanePoint,
    pub witness_tau: HalfPlanePoint,
    /// 1-based position in the candidate sequence (after the seed offset).
    pub candidate_index: u64,
    #[serde(rename = "bundleE")]
    pub bundle_e: BundleTauForm,
    #[serde(rename = "bundleF")]
    pub bundle_f: BundleTauForm,
    pub checks: Vec<Check>,
}

impl K0Witness {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum K0Outcome {
    /// `E` and `F` are already isomorphic.
    Identity {
        #[serde(rename = "tauE")]
        tau_e: HalfPlanePoint,
        #[serde(rename = "tauF")]
        tau_f: HalfPlanePoint,
        matrix: ModularMatrix,
    },
    Witness(K0Witness),
    /// No witness within the budget; says nothing about the classes.
    Exhausted { candidates: u64 },
}

/// Candidate `index` (from 1): an additive recurrence with increments
/// `1/p` and `1/p^2`, `p` the plastic number, mapped to the box
/// `Re in (-1/2, 1/2]`, `Im in [1, 3)`.
pub fn witness_candidate(index: u64) -> HalfPlanePoint {
    let i = index as f64;
    let x = frac(0.5 + i / PLASTIC);
    let y = frac(0.5 + i / (PLASTIC * PLASTIC));
    HalfPlanePoint::new(0.5 - x, 1.0 + 2.0 * y).expect("box lies in the half-plane")
}

/// The bundle over the x-axis curve of `H(q^tau, q^w)`.
fn complement_over(tau: HalfPlanePoint, w: HalfPlanePoint) -> BundleTauForm {
    hopf_to_tau(&BundleHopfForm {
        base_exp: tau,
        fiber_exp: w,
    })
}

fn run_checks(
    tau_e: HalfPlanePoint,
    tau_f: HalfPlanePoint,
    w: HalfPlanePoint,
    budget: &WitnessBudget,
) -> (BundleTauForm, BundleTauForm, Vec<Check>) {
    let mut checks = Vec::with_capacity(6);
    let dioph = DiophantineOptions {
        exec: Execution::Sequential,
        ..Default::default()
    };
    for (name, tau) in [("E", tau_e), ("F", tau_f)] {
        let c = classify_hopf(&HopfSurface::new(tau, w), budget.relation_bound).expect("bound validated");
        checks.push(Check {
            hypothesis: "two-curves".into(),
            subject: format!("H({name},W)"),
            passed: c.kind == HopfKind::TwoCurves,
            detail: match c.relation {
                Some((n, m)) => format!("relation ({n},{m})"),
                None => format!("no relation up to {}", c.bound),
            },
        });
    }
    let be = complement_over(tau_e, w);
    let bf = complement_over(tau_f, w);
    for (name, b) in [("E", be), ("F", bf)] {
        let t = is_torsion(&b, budget.torsion_bound).expect("bound validated");
        checks.push(Check {
            hypothesis: "non-torsion".into(),
            subject: format!("bundle{name}"),
            passed: !t.is_torsion,
            detail: match t.order {
                Some(o) => format!("order {o}"),
                None => format!("no denominator up to {}", t.denominator_bound),
            },
        });
        let d = diophantine_report_with(&b, budget.n_max, &dioph).expect("n_max validated");
        checks.push(Check {
            hypothesis: "diophantine".into(),
            subject: format!("bundle{name}"),
            passed: d.verdict == DiophantineVerdict::DiophantineConsistent,
            detail: format!("exponent {:.6} up to n = {}", d.exponent_estimate, d.n_max),
        });
    }
    (be, bf, checks)
}

/// Search the candidate sequence for a witness curve `W`.
///
/// The search is deterministic: the lowest passing index wins regardless of
/// `budget.exec`.
pub fn verify_k0an_equality(
    tau_e: HalfPlanePoint,
    tau_f: HalfPlanePoint,
    budget: &WitnessBudget,
) -> crate::error::Result<K0Outcome> {
    crate::error::ensure_bound("relation_bound", budget.relation_bound as i64, 1)?;
    crate::error::ensure_bound("torsion_bound", budget.torsion_bound as i64, 1)?;
    crate::error::ensure_bound("n_max", budget.n_max as i64, 2)?;
    if let Some(matrix) = match_moduli(tau_e, tau_f, MODULUS_TOL) {
        return Ok(K0Outcome::Identity { tau_e, tau_f, matrix });
    }
    if budget.candidates == 0 {
        return Ok(K0Outcome::Exhausted { candidates: 0 });
    }
    let hit = find_first(budget.exec, 1, budget.candidates, |j| {
        let w = witness_candidate(budget.seed + j);
        run_checks(tau_e, tau_f, w, budget).2.iter().all(|c| c.passed)
    });
    Ok(match hit {
        Some(j) => {
            let w = witness_candidate(budget.seed + j);
            let (bundle_e, bundle_f, checks) = run_checks(tau_e, tau_f, w, budget);
            K0Outcome::Witness(K0Witness {
                tau_e,
                tau_f,
                witness_tau: w,
                candidate_index: j,
                bundle_e,
                bundle_f,
                checks,
            })
        }
        None => K0Outcome::Exhausted {
            candidates: budget.candidates,
        },
    })
}

/// Re-run every recorded check of a witness.
pub fn recheck(w: &K0Witness, budget: &WitnessBudget) -> bool {
    let (be, bf, checks) = run_checks(w.tau_e, w.tau_f, w.witness_tau, budget);
    be == w.bundle_e && bf == w.bundle_f && checks == w.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast() -> WitnessBudget {
        WitnessBudget {
            n_max: 2000,
            ..Default::default()
        }
    }

    #[test]
    fn equal_curves_give_identity() {
        let out = verify_k0an_equality(HalfPlanePoint::I, HalfPlanePoint::I, &fast()).unwrap();
        assert!(matches!(out, K0Outcome::Identity { .. }));
        let moved = ModularMatrix::new(2, 1, 1, 1).unwrap().apply(HalfPlanePoint::I);
        let out = verify_k0an_equality(HalfPlanePoint::I, moved, &fast()).unwrap();
        assert!(matches!(out, K0Outcome::Identity { .. }));
    }

    #[test]
    fn zero_budget_is_exhausted() {
        let b = WitnessBudget {
            candidates: 0,
            ..fast()
        };
        let out = verify_k0an_equality(HalfPlanePoint::I, HalfPlanePoint::new(0.0, 1.5).unwrap(), &b).unwrap();
        assert_eq!(out, K0Outcome::Exhausted { candidates: 0 });
    }

    #[test]
    fn witness_for_i_and_three_halves_i() {
        let tf = HalfPlanePoint::new(0.0, 1.5).unwrap();
        let out = verify_k0an_equality(HalfPlanePoint::I, tf, &fast()).unwrap();
        let K0Outcome::Witness(w) = out else {
            panic!("expected a witness, got {out:?}");
        };
        assert!(w.candidate_index <= 100);
        assert_eq!(w.checks.len(), 6);
        assert!(w.all_passed());
        assert!(recheck(&w, &fast()));
        let seq = WitnessBudget {
            exec: Execution::Sequential,
            ..fast()
        };
        assert_eq!(verify_k0an_equality(HalfPlanePoint::I, tf, &seq).unwrap(), K0Outcome::Witness(w));
    }

    #[test]
    fn candidates_stay_in_box() {
        for i in 1..1000 {
            let w = witness_candidate(i);
            assert!(w.re() > -0.5 && w.re() <= 0.5);
            assert!(w.im() >= 1.0 && w.im() < 3.0);
        }
    }
}

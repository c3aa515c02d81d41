use serde::{Deserialize, Serialize};

use super::moves::{graft, CobordismMove, MoveEnumerator};
use super::report::require_non_torsion;
use crate::bundle::{tau_to_hopf, BundleTauForm, DEFAULT_DENOMINATOR_BOUND};
use crate::error::{ensure_bound, Result};
use crate::hopf::{classify_hopf, isogeny_pullback, secondary_quotient, HopfClassification, HopfSurface};
use crate::hopf::{SecondaryHopfData, DEFAULT_RELATION_BOUND};
use crate::torus::{frac, HalfPlanePoint};

const SURFACE_TOL: f64 = 1e-9;

/// One minimal compactification of `Tot(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum CompactificationRecord {
    /// `P(O + L)`.
    Ruled { bundle: BundleTauForm },
    PrimaryHopf {
        surface: HopfSurface,
        classification: HopfClassification,
        generating_move: CobordismMove,
    },
    /// Descriptor only; `base` compactifies the pullback of `L` along the
    /// degree-`n` isogeny.
    SecondaryHopf {
        descriptor: SecondaryHopfData,
        pullback: BundleTauForm,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompactificationOptions {
    pub torsion_bound: u64,
    pub relation_bound: u64,
    /// Cap on primary records; the remainder of `count` goes to secondary
    /// descriptors. `None` fills `count` with primary records.
    pub max_primary: Option<usize>,
    pub max_secondary_n: i64,
}

impl Default for CompactificationOptions {
    fn default() -> Self {
        CompactificationOptions {
            torsion_bound: DEFAULT_DENOMINATOR_BOUND,
            relation_bound: DEFAULT_RELATION_BOUND,
            max_primary: None,
            max_secondary_n: 12,
        }
    }
}

fn same_exponent(a: HalfPlanePoint, b: HalfPlanePoint) -> bool {
    let d = frac(a.re() - b.re() + 0.5) - 0.5;
    d.abs() <= SURFACE_TOL && (a.im() - b.im()).abs() <= SURFACE_TOL
}

/// `H(lambda, mu)` and `H(mu, lambda)` are the same surface, and exponents
/// only matter modulo 1.
fn same_surface(a: &HopfSurface, b: &HopfSurface) -> bool {
    (same_exponent(a.lambda_exp, b.lambda_exp) && same_exponent(a.mu_exp, b.mu_exp))
        || (same_exponent(a.lambda_exp, b.mu_exp) && same_exponent(a.mu_exp, b.lambda_exp))
}

pub fn minimal_compactifications(b: &BundleTauForm, count: usize) -> Result<Vec<CompactificationRecord>> {
    minimal_compactifications_with(b, count, &CompactificationOptions::default())
}

/// The ruled surface first, then primary Hopf surfaces from moves on `b`,
/// then secondary descriptors for `n = 2..=max_secondary_n` and `r` coprime
/// to `n`, until `count` records are produced.
pub fn minimal_compactifications_with(
    b: &BundleTauForm,
    count: usize,
    opts: &CompactificationOptions,
) -> Result<Vec<CompactificationRecord>> {
    ensure_bound("count", count as i64, 1)?;
    require_non_torsion(b, opts.torsion_bound)?;
    let mut out = vec![CompactificationRecord::Ruled { bundle: *b }];

    let n_primary = opts.max_primary.map_or(count - 1, |m| m.min(count - 1));
    let mut surfaces: Vec<HopfSurface> = Vec::new();
    let mut moves = MoveEnumerator::new(*b);
    while surfaces.len() < n_primary {
        let mv = moves.next().expect("move enumeration is infinite");
        let surface = graft(b, &mv)?.surface();
        if surfaces.iter().any(|s| same_surface(s, &surface)) {
            continue;
        }
        surfaces.push(surface);
        out.push(CompactificationRecord::PrimaryHopf {
            surface,
            classification: classify_hopf(&surface, opts.relation_bound)?,
            generating_move: mv,
        });
    }

    'outer: for n in 2..=opts.max_secondary_n {
        if out.len() >= count {
            break;
        }
        let pullback = isogeny_pullback(b, n as u64)?;
        let h = tau_to_hopf(&pullback, pullback.default_u_rep())?;
        let base = HopfSurface::new(h.base_exp, h.fiber_exp);
        for r in 1..n {
            let Ok(descriptor) = secondary_quotient(&base, n, r) else {
                continue;
            };
            out.push(CompactificationRecord::SecondaryHopf { descriptor, pullback });
            if out.len() >= count {
                break 'outer;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfKind;

    fn b0() -> BundleTauForm {
        BundleTauForm::new(HalfPlanePoint::I, -0.5f64.sqrt(), 1.0 / 3f64.sqrt()).unwrap()
    }

    #[test]
    fn count_one_is_ruled() {
        let r = minimal_compactifications(&b0(), 1).unwrap();
        assert_eq!(r, vec![CompactificationRecord::Ruled { bundle: b0() }]);
    }

    #[test]
    fn ten_records_on_generic_bundle() {
        let r = minimal_compactifications(&b0(), 10).unwrap();
        assert_eq!(r.len(), 10);
        assert!(matches!(r[0], CompactificationRecord::Ruled { .. }));
        for rec in &r[1..] {
            let CompactificationRecord::PrimaryHopf { surface, classification, .. } = rec else {
                panic!("expected primary record");
            };
            assert_eq!(classification.kind, HopfKind::TwoCurves);
            assert_eq!(classify_hopf(surface, 50).unwrap(), *classification);
        }
        for i in 1..r.len() {
            for k in i + 1..r.len() {
                assert_ne!(r[i], r[k]);
            }
        }
    }

    #[test]
    fn secondary_records_after_primary_cap() {
        let opts = CompactificationOptions {
            max_primary: Some(2),
            ..Default::default()
        };
        let r = minimal_compactifications_with(&b0(), 8, &opts).unwrap();
        assert_eq!(r.len(), 8);
        let sec: Vec<_> = r
            .iter()
            .filter_map(|x| match x {
                CompactificationRecord::SecondaryHopf { descriptor, .. } => Some((descriptor.n, descriptor.r)),
                _ => None,
            })
            .collect();
        assert_eq!(sec, vec![(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]);
    }

    #[test]
    fn torsion_is_rejected() {
        let b = BundleTauForm::new(HalfPlanePoint::I, 0.25, 0.5).unwrap();
        assert!(minimal_compactifications(&b, 3).is_err());
    }

    #[test]
    fn json_tagging() {
        let r = minimal_compactifications(&b0(), 1).unwrap();
        let s = serde_json::to_string(&r[0]).unwrap();
        assert!(s.starts_with(r#"{"kind":"ruled","data":{"bundle":"#));
    }
}

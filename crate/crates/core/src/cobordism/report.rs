//! Graft reports and the enumeration of cobordant bundles.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::equivalence::bundles_equivalent;
use super::moves::{graft, CobordismMove, Graft, MoveEnumerator};
use crate::bundle::{inverse_bundle, is_torsion, BundleTauForm, TorsionVerdict, DEFAULT_DENOMINATOR_BOUND};
use crate::diophantine::{diophantine_report_with, DiophantineOptions, DiophantineReport};
use crate::error::{ensure_bound, Error, Result};
use crate::exec::{map_vec, Execution};
use crate::hopf::HopfSurface;
use crate::torus::{bounded_isogeny_search, complex_pair, j_invariant, reduce_to_fundamental_domain};
use crate::torus::{HalfPlanePoint, IsogenyCertificate};

/// Relative `|delta j|` under which two grafts are compared in full.
const J_PREFILTER: f64 = 1e-6;
/// Moves evaluated per parallel batch.
const BATCH: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `E' = E` and `L' = L`.
    Identity,
    HopfDual,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraftReport {
    pub relation: Relation,
    #[serde(rename = "move")]
    pub mv: CobordismMove,
    pub graft_exponent: HalfPlanePoint,
    pub graft_reduced: HalfPlanePoint,
    #[serde(with = "complex_pair")]
    pub graft_j: Complex64,
    pub target_bundle: BundleTauForm,
    /// The Hopf surface realizing the relation; absent for the identity.
    pub hopf_surface: Option<HopfSurface>,
    pub torsion: TorsionVerdict,
    pub diophantine: DiophantineReport,
    pub isogeny_to_source: Option<IsogenyCertificate>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    pub torsion_bound: u64,
    pub n_max: u64,
    /// `None` skips the isogeny search.
    pub isogeny_max_degree: Option<u64>,
    pub exec: Execution,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            torsion_bound: DEFAULT_DENOMINATOR_BOUND,
            n_max: 10_000,
            isogeny_max_degree: Some(20),
            exec: Execution::Parallel,
        }
    }
}

impl ReportOptions {
    fn validate(&self) -> Result<()> {
        ensure_bound("torsion_bound", self.torsion_bound as i64, 1)?;
        ensure_bound("n_max", self.n_max as i64, 2)?;
        if let Some(d) = self.isogeny_max_degree {
            ensure_bound("max_degree", d as i64, 1)?;
        }
        Ok(())
    }

    fn dioph(&self) -> DiophantineOptions {
        DiophantineOptions {
            exec: Execution::Sequential,
            ..Default::default()
        }
    }
}

pub(crate) fn require_non_torsion(b: &BundleTauForm, bound: u64) -> Result<()> {
    match is_torsion(b, bound)?.order {
        Some(order) => Err(Error::Torsion { order }),
        None => Ok(()),
    }
}

fn finish(
    relation: Relation,
    g: &Graft,
    hopf_surface: Option<HopfSurface>,
    source_tau: HalfPlanePoint,
    opts: &ReportOptions,
) -> Result<GraftReport> {
    let torsion = is_torsion(&g.target, opts.torsion_bound)?;
    let diophantine = diophantine_report_with(&g.target, opts.n_max, &opts.dioph())?;
    let isogeny_to_source = match opts.isogeny_max_degree {
        Some(d) => bounded_isogeny_search(g.graft_exponent, source_tau, d)?,
        None => None,
    };
    Ok(GraftReport {
        relation,
        mv: g.mv,
        graft_exponent: g.graft_exponent,
        graft_reduced: g.graft_reduced,
        graft_j: g.graft_j,
        target_bundle: g.target,
        hopf_surface,
        torsion,
        diophantine,
        isogeny_to_source,
    })
}

fn identity_graft(b: &BundleTauForm) -> Graft {
    let (reduced, _) = reduce_to_fundamental_domain(b.tau);
    Graft {
        mv: CobordismMove::IDENTITY,
        tau_prime: b.tau,
        u_prime: b.u,
        v_prime: b.v,
        graft_exponent: b.tau,
        graft_reduced: reduced,
        graft_j: j_invariant(reduced),
        target: *b,
    }
}

pub fn apply_move(b: &BundleTauForm, mv: &CobordismMove) -> Result<GraftReport> {
    apply_move_with(b, mv, &ReportOptions::default())
}

/// Apply one move to `b` and fill in every report field.
pub fn apply_move_with(b: &BundleTauForm, mv: &CobordismMove, opts: &ReportOptions) -> Result<GraftReport> {
    opts.validate()?;
    require_non_torsion(b, opts.torsion_bound)?;
    let g = graft(b, mv)?;
    finish(Relation::HopfDual, &g, Some(g.surface()), b.tau, opts)
}

fn same_target(a: &Graft, b: &Graft) -> bool {
    let scale = a.graft_j.norm().max(b.graft_j.norm()).max(1.0);
    (a.graft_j - b.graft_j).norm() <= J_PREFILTER * scale && bundles_equivalent(&a.target, &b.target)
}

/// First `count` grafts from `source` with pairwise inequivalent targets,
/// also inequivalent to everything in `seed`.
pub(crate) fn distinct_grafts(
    source: &BundleTauForm,
    seed: &[Graft],
    count: usize,
    exec: Execution,
) -> Result<Vec<Graft>> {
    let mut kept: Vec<Graft> = Vec::with_capacity(count);
    let mut moves = MoveEnumerator::new(*source);
    while kept.len() < count {
        let batch: Vec<CobordismMove> = moves.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let grafts = map_vec(exec, &batch, |mv| graft(source, mv));
        for g in grafts {
            let g = g?;
            if seed.iter().chain(kept.iter()).any(|k| same_target(k, &g)) {
                continue;
            }
            kept.push(g);
            if kept.len() == count {
                break;
            }
        }
    }
    Ok(kept)
}

pub fn enumerate_cobordant(b: &BundleTauForm, count: usize) -> Result<Vec<GraftReport>> {
    enumerate_cobordant_with(b, count, &ReportOptions::default())
}

/// Bundles analytically cobordant to `b`, in canonical order.
///
/// Report zero is `b` itself. The rest come from moves applied to `b^-1`,
/// so each target `L'` is Hopf dual to `b^-1`. Reports whose targets are
/// isomorphic (up to isomorphism of the base curve) are merged.
pub fn enumerate_cobordant_with(b: &BundleTauForm, count: usize, opts: &ReportOptions) -> Result<Vec<GraftReport>> {
    ensure_bound("count", count as i64, 1)?;
    opts.validate()?;
    require_non_torsion(b, opts.torsion_bound)?;
    let id = identity_graft(b);
    let source = inverse_bundle(b);
    let grafts = distinct_grafts(&source, std::slice::from_ref(&id), count - 1, opts.exec)?;

    let mut all = vec![(Relation::Identity, id)];
    all.extend(grafts.into_iter().map(|g| (Relation::HopfDual, g)));
    map_vec(opts.exec, &all, |(rel, g)| {
        let surface = (*rel == Relation::HopfDual).then(|| g.surface());
        finish(*rel, g, surface, b.tau, opts)
    })
    .into_iter()
    .collect()
}

pub fn enumerate_hopf_duals(b: &BundleTauForm, count: usize) -> Result<Vec<GraftReport>> {
    enumerate_hopf_duals_with(b, count, &ReportOptions::default())
}

/// Bundles Hopf dual to `b` itself: moves applied to `b` directly.
pub fn enumerate_hopf_duals_with(b: &BundleTauForm, count: usize, opts: &ReportOptions) -> Result<Vec<GraftReport>> {
    ensure_bound("count", count as i64, 1)?;
    opts.validate()?;
    require_non_torsion(b, opts.torsion_bound)?;
    let grafts = distinct_grafts(b, &[], count, opts.exec)?;
    map_vec(opts.exec, &grafts, |g| finish(Relation::HopfDual, g, Some(g.surface()), b.tau, opts))
        .into_iter()
        .collect()
}

/// Walk the moves from `b^-1` in canonical order, up to shell `max_shell`,
/// and return the first graft whose target is equivalent to `wanted`.
///
/// Used to exhibit the symmetry of cobordance without materializing every
/// intermediate report.
pub fn find_cobordant_target(
    b: &BundleTauForm,
    wanted: &BundleTauForm,
    max_shell: i64,
) -> Result<Option<(CobordismMove, BundleTauForm)>> {
    if bundles_equivalent(b, wanted) {
        return Ok(Some((CobordismMove::IDENTITY, *b)));
    }
    let source = inverse_bundle(b);
    for mv in MoveEnumerator::new(source).with_max_shell(max_shell) {
        let g = graft(&source, &mv)?;
        if bundles_equivalent(&g.target, wanted) {
            return Ok(Some((mv, g.target)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::tau_to_hopf;
    use crate::diophantine::DiophantineVerdict;
    use crate::hopf::{classify_hopf, complement_bundle, Axis, HopfKind};
    use crate::torus::ModularMatrix;

    fn b0() -> BundleTauForm {
        BundleTauForm::new(HalfPlanePoint::I, -0.5f64.sqrt(), 1.0 / 3f64.sqrt()).unwrap()
    }

    fn fast() -> ReportOptions {
        ReportOptions {
            n_max: 500,
            isogeny_max_degree: Some(3),
            ..Default::default()
        }
    }

    #[test]
    fn apply_move_example() {
        let mv = CobordismMove::new(ModularMatrix::S, -1, false);
        let r = apply_move_with(&b0(), &mv, &fast()).unwrap();
        assert!((r.graft_exponent.re() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8);
        assert!((r.graft_exponent.im() - 0.422_649_73).abs() < 1e-8);
        assert!(!r.torsion.is_torsion);
        assert_eq!(r.diophantine.verdict, DiophantineVerdict::DiophantineConsistent);
    }

    #[test]
    fn torsion_source_is_rejected() {
        let b = BundleTauForm::new(HalfPlanePoint::I, 1.0 / 3.0, 0.5).unwrap();
        let mv = CobordismMove::new(ModularMatrix::IDENTITY, -1, false);
        assert!(matches!(apply_move(&b, &mv), Err(Error::Torsion { order: 6 })));
        assert!(matches!(enumerate_cobordant(&b, 3), Err(Error::Torsion { order: 6 })));
    }

    #[test]
    fn count_one_is_self_report() {
        let r = enumerate_cobordant_with(&b0(), 1, &fast()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].relation, Relation::Identity);
        assert_eq!(r[0].target_bundle, b0());
        assert!((r[0].graft_j.re - 1728.0).abs() < 1e-9);
    }

    #[test]
    fn reports_have_distinct_j() {
        let r = enumerate_cobordant_with(&b0(), 20, &fast()).unwrap();
        assert_eq!(r.len(), 20);
        for i in 0..r.len() {
            for k in i + 1..r.len() {
                assert!((r[i].graft_j - r[k].graft_j).norm() > 1e-6, "{i} {k}");
            }
        }
    }

    #[test]
    fn pic0_coherence() {
        let r = enumerate_cobordant_with(&b0(), 8, &fast()).unwrap();
        for rep in &r[1..] {
            let h = rep.hopf_surface.unwrap();
            let read = crate::bundle::hopf_to_tau(&complement_bundle(&h, Axis::XAxisCurve));
            assert_eq!(read.tau, rep.target_bundle.tau);
            let d = read.class_exponent() - rep.target_bundle.class_exponent();
            assert!(d.norm() < 1e-10);
            assert_eq!(classify_hopf(&h, 50).unwrap().kind, HopfKind::TwoCurves);
        }
    }

    #[test]
    fn hopf_surface_contains_source() {
        // the other axis complement is the transported source bundle
        let b = b0();
        let mv = CobordismMove::new(ModularMatrix::new(1, 1, 1, 2).unwrap(), -2, true);
        let g = graft(&b, &mv).unwrap();
        let h = g.surface();
        let back = crate::bundle::hopf_to_tau(&complement_bundle(&h, Axis::YAxisCurve));
        let direct = tau_to_hopf(&BundleTauForm::new(g.tau_prime, g.u_prime, g.v_prime).unwrap(), g.u_prime).unwrap();
        assert!(direct.fiber_exp.dist(h.mu_exp) < 1e-12);
        assert!(bundles_equivalent(&back, &b) || bundles_equivalent(&back, &inverse_bundle(&b)));
    }

    #[test]
    fn sequential_matches_parallel() {
        let seq = ReportOptions {
            exec: Execution::Sequential,
            ..fast()
        };
        assert_eq!(
            enumerate_cobordant_with(&b0(), 12, &seq).unwrap(),
            enumerate_cobordant_with(&b0(), 12, &fast()).unwrap()
        );
    }

    #[test]
    fn symmetry_on_first_reports() {
        let b = b0();
        let r = enumerate_cobordant_with(&b, 6, &fast()).unwrap();
        for rep in &r {
            let found = find_cobordant_target(&rep.target_bundle, &b, 60).unwrap();
            assert!(found.is_some(), "{:?}", rep.mv);
        }
    }

    #[test]
    fn duals_exclude_identity_relation() {
        let r = enumerate_hopf_duals_with(&b0(), 5, &fast()).unwrap();
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|x| x.relation == Relation::HopfDual));
    }
}

//! Nine points on a plane cubic and the algebraic structures on the
//! complement of the strict transform.

use serde::{Deserialize, Serialize};

use crate::bundle::BundleTauForm;
use crate::cobordism::{enumerate_cobordant_with, GraftReport, ReportOptions};
use crate::diophantine::{diophantine_report_with, DiophantineOptions, DiophantineVerdict};
use crate::error::{Error, Result};
use crate::torus::{frac, HalfPlanePoint, LatticePoint};

/// Nine points `a_i + b_i*tau` on `E = C/(Z + Z*tau)`, given by lattice
/// coordinates. Points may coincide.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig", into = "RawConfig")]
pub struct NinePointConfig {
    tau: HalfPlanePoint,
    points: [(f64, f64); 9],
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    tau: HalfPlanePoint,
    points: Vec<[f64; 2]>,
}

impl TryFrom<RawConfig> for NinePointConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        let pts: Vec<(f64, f64)> = raw.points.iter().map(|p| (p[0], p[1])).collect();
        NinePointConfig::new(raw.tau, &pts)
    }
}

impl From<NinePointConfig> for RawConfig {
    fn from(c: NinePointConfig) -> Self {
        RawConfig {
            tau: c.tau,
            points: c.points.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl NinePointConfig {
    pub fn new(tau: HalfPlanePoint, points: &[(f64, f64)]) -> Result<Self> {
        let points: [(f64, f64); 9] = points
            .try_into()
            .map_err(|_| Error::InvalidConfig(format!("expected 9 points, got {}", points.len())))?;
        if let Some(&(a, b)) = points.iter().find(|(a, b)| !a.is_finite() || !b.is_finite()) {
            return Err(Error::InvalidConfig(format!("non-finite point ({a}, {b})")));
        }
        Ok(NinePointConfig { tau, points })
    }

    pub fn tau(&self) -> HalfPlanePoint {
        self.tau
    }

    pub fn points(&self) -> &[(f64, f64); 9] {
        &self.points
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.points
            .iter()
            .map(|&(a, b)| LatticePoint::from_coords(a, b, self.tau))
            .collect()
    }

    /// Translate every point by `s = a + b*tau`.
    pub fn translated(&self, a: f64, b: f64) -> NinePointConfig {
        let mut points = self.points;
        for p in &mut points {
            p.0 += a;
            p.1 += b;
        }
        NinePointConfig { tau: self.tau, points }
    }
}

/// Sum in a fixed order so the result does not depend on the order of input.
fn sorted_sum(mut xs: [f64; 9]) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs.iter().sum()
}

/// The class of `O_E(3H - p_1 - ... - p_9)`.
///
/// With the cubic uniformized from an inflection point, `O(3H)|_E = O(9o)`,
/// so the class is `-(z_1 + ... + z_9)`. Its canonical representative
/// `a + b*tau` (both coordinates in `[0, 1)`) becomes `(tau, u, v) = (tau, -b, a)`.
pub fn normal_bundle_class(cfg: &NinePointConfig) -> BundleTauForm {
    let sa = sorted_sum(cfg.points.map(|p| p.0));
    let sb = sorted_sum(cfg.points.map(|p| p.1));
    let (a, b) = (frac(-sa), frac(-sb));
    BundleTauForm {
        tau: cfg.tau,
        u: if b == 0.0 { 0.0 } else { -b },
        v: a,
    }
}

pub fn enumerate_algebraic_structures(cfg: &NinePointConfig, count: usize) -> Result<Vec<GraftReport>> {
    enumerate_algebraic_structures_with(cfg, count, &ReportOptions::default())
}

/// Algebraic structures on the complement of the strict transform of the
/// cubic, one per report: the compactifying pair is a blow-up of `P^2` at
/// nine points of a cubic with modulus `graft_reduced`, with the graft curve
/// as the cubic. The nine points themselves are not computed.
pub fn enumerate_algebraic_structures_with(
    cfg: &NinePointConfig,
    count: usize,
    opts: &ReportOptions,
) -> Result<Vec<GraftReport>> {
    let b = normal_bundle_class(cfg);
    let dioph = DiophantineOptions {
        exec: opts.exec,
        ..Default::default()
    };
    let report = diophantine_report_with(&b, opts.n_max, &dioph)?;
    match report.verdict {
        DiophantineVerdict::Suspect => {
            return Err(Error::NotDiophantine {
                exponent: report.exponent_estimate,
                threshold: dioph.suspect_threshold,
            })
        }
        DiophantineVerdict::Torsion => return Err(Error::Torsion { order: report.worst_n }),
        DiophantineVerdict::DiophantineConsistent => {}
    }
    enumerate_cobordant_with(&b, count, opts)
}

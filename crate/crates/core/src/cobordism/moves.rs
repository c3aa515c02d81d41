//! Cobordism moves and their canonical enumeration order.

use std::collections::VecDeque;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bundle::{hopf_to_tau, BundleHopfForm, BundleTauForm};
use crate::error::{Error, Result};
use crate::hopf::HopfSurface;
use crate::torus::{j_invariant, reduce_to_fundamental_domain, HalfPlanePoint, ModularMatrix};

/// Relative tolerance of the two-expression graft check.
pub const GRAFT_IDENTITY_TOL: f64 = 1e-10;

/// A choice `(gamma, r, negation)` re-presenting a bundle over the modulus
/// `gamma * tau` with `u' = m*v + n*u + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismMove {
    pub gamma: ModularMatrix,
    pub r: i64,
    pub use_negation: bool,
}

impl CobordismMove {
    pub const IDENTITY: CobordismMove = CobordismMove {
        gamma: ModularMatrix::IDENTITY,
        r: 0,
        use_negation: false,
    };

    pub fn new(gamma: ModularMatrix, r: i64, use_negation: bool) -> Self {
        CobordismMove { gamma, r, use_negation }
    }

    /// `(u', v')` for the source bundle, before the admissibility check.
    pub fn exponents(&self, b: &BundleTauForm) -> (f64, f64) {
        let (u, v) = signed(b, self.use_negation);
        let (u1, v1) = self.gamma.transport_exponents(u, v);
        (u1 + self.r as f64, v1)
    }
}

fn signed(b: &BundleTauForm, neg: bool) -> (f64, f64) {
    if neg {
        (-b.u, -b.v)
    } else {
        (b.u, b.v)
    }
}

/// The cheap part of a move: moduli and bundles, no budgets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Graft {
    pub mv: CobordismMove,
    pub tau_prime: HalfPlanePoint,
    pub u_prime: f64,
    pub v_prime: f64,
    pub graft_exponent: HalfPlanePoint,
    pub graft_reduced: HalfPlanePoint,
    pub graft_j: Complex64,
    pub target: BundleTauForm,
}

impl Graft {
    /// `H(q^tau', q^graft)`: the source sits over the x-axis curve, the
    /// graft is the y-axis curve.
    pub fn surface(&self) -> HopfSurface {
        HopfSurface::new(self.tau_prime, self.graft_exponent)
    }
}

/// Graft exponent `(v - u*tau - r*(k*tau + l)) / (m*tau + n)`, evaluated
/// directly from the source data.
pub fn graft_exponent_direct(b: &BundleTauForm, mv: &CobordismMove) -> Complex64 {
    let (u, v) = signed(b, mv.use_negation);
    let [k, l, m, n] = mv.gamma.entries().map(|e| e as f64);
    let tau = b.tau.to_complex();
    (Complex64::new(v, 0.0) - tau * u - (tau * k + l) * mv.r as f64) / (tau * m + n)
}

/// Compute a move without checking the source for torsion.
pub fn graft(b: &BundleTauForm, mv: &CobordismMove) -> Result<Graft> {
    let (u_prime, v_prime) = mv.exponents(b);
    if u_prime >= 0.0 || u_prime.is_nan() {
        return Err(Error::NoHopfPresentation { u_prime });
    }
    let tau_prime = mv.gamma.apply(b.tau);
    let tp = tau_prime.to_complex();
    let via_exponents = Complex64::new(v_prime, 0.0) - tp * u_prime;
    let direct = graft_exponent_direct(b, mv);
    let scale = direct.norm().max(1.0);
    if (via_exponents - direct).norm() > GRAFT_IDENTITY_TOL * scale {
        return Err(Error::Internal(format!(
            "graft exponent mismatch: {via_exponents} vs {direct}"
        )));
    }
    // -u' * Im(tau') is positive by construction, unlike Im(direct) after rounding
    let graft_exponent = HalfPlanePoint::new(via_exponents.re, -u_prime * tau_prime.im())?;
    let (graft_reduced, _) = reduce_to_fundamental_domain(graft_exponent);
    let target = hopf_to_tau(&BundleHopfForm {
        base_exp: graft_exponent,
        fiber_exp: tau_prime,
    });
    Ok(Graft {
        mv: *mv,
        tau_prime,
        u_prime,
        v_prime,
        graft_exponent,
        graft_reduced,
        graft_j: j_invariant(graft_reduced),
        target,
    })
}

/// Largest `r` with `c + r < 0`.
fn r_max(c: f64) -> i64 {
    (-c).ceil() as i64 - 1
}

/// Shell height of a move relative to its source:
/// `max(max |gamma entry|, r_index + 1)` where `r_index = r_max - r >= 0`.
pub fn move_height(b: &BundleTauForm, mv: &CobordismMove) -> Option<i64> {
    let (u, v) = signed(b, mv.use_negation);
    let (c, _) = mv.gamma.transport_exponents(u, v);
    let r_index = r_max(c) - mv.r;
    (r_index >= 0).then(|| mv.gamma.max_abs().max(r_index + 1))
}

/// Matrices of SL2(Z) with `max |entry| <= h`, one from each pair `+-gamma`
/// (bottom row `(m, n)` with `m > 0`, or `m = 0` and `n > 0`), in
/// lexicographic order of `(k, l, m, n)`. The sign is covered by the
/// negation flag, which acts exactly as `-gamma`.
pub fn matrices_up_to(h: i64) -> Vec<ModularMatrix> {
    let mut out = Vec::new();
    for k in -h..=h {
        for l in -h..=h {
            for m in 0..=h {
                if k == 0 {
                    // -l*m = 1
                    if m == 1 && l == -1 {
                        for n in -h..=h {
                            out.push(ModularMatrix::new_unchecked(k, l, m, n));
                        }
                    }
                    continue;
                }
                let num = 1 + l * m;
                if num % k != 0 {
                    continue;
                }
                let n = num / k;
                if n.abs() > h || (m == 0 && n <= 0) {
                    continue;
                }
                out.push(ModularMatrix::new_unchecked(k, l, m, n));
            }
        }
    }
    out
}

/// Lazy generator of admissible moves in canonical order: shells of
/// increasing height, then `gamma` lexicographically, then `r` by
/// increasing `|u'|`, then the negation flag (off before on).
#[derive(Debug, Clone)]
pub struct MoveEnumerator {
    source: BundleTauForm,
    shell: i64,
    max_shell: Option<i64>,
    buffer: VecDeque<CobordismMove>,
}

impl MoveEnumerator {
    pub fn new(source: BundleTauForm) -> Self {
        MoveEnumerator {
            source,
            shell: 0,
            max_shell: None,
            buffer: VecDeque::new(),
        }
    }

    /// Stop after shell `h`.
    pub fn with_max_shell(mut self, h: i64) -> Self {
        self.max_shell = Some(h);
        self
    }

    pub fn current_shell(&self) -> i64 {
        self.shell
    }

    fn fill_next_shell(&mut self) {
        self.shell += 1;
        let h = self.shell;
        for gamma in matrices_up_to(h) {
            let r_indices = if gamma.max_abs() == h { 0..h } else { h - 1..h };
            for r_index in r_indices {
                for neg in [false, true] {
                    let (u, v) = signed(&self.source, neg);
                    let (c, _) = gamma.transport_exponents(u, v);
                    self.buffer.push_back(CobordismMove::new(gamma, r_max(c) - r_index, neg));
                }
            }
        }
    }
}

impl Iterator for MoveEnumerator {
    type Item = CobordismMove;

    fn next(&mut self) -> Option<CobordismMove> {
        while self.buffer.is_empty() {
            if self.max_shell.is_some_and(|m| self.shell >= m) {
                return None;
            }
            self.fill_next_shell();
        }
        self.buffer.pop_front()
    }
}

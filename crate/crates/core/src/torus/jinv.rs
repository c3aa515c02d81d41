use num_complex::Complex64;

use super::halfplane::HalfPlanePoint;
use super::reduce::reduce_to_fundamental_domain;

/// Series terms below this magnitude are dropped.
const TERM_CUTOFF: f64 = 1e-18;

/// Klein's j-invariant, normalized so that `j(i) = 1728`.
///
/// Evaluated after reduction as `E4(q)^3 / (q * prod(1 - q^n)^24)`. The
/// discriminant comes from Euler's pentagonal series rather than
/// `E4^3 - E6^2`, which cancels catastrophically for large `Im tau`.
pub fn j_invariant(tau: HalfPlanePoint) -> Complex64 {
    let (red, _) = reduce_to_fundamental_domain(tau);
    let q = red.nome();
    let e4 = eisenstein_e4(q);
    let eta = euler_product(q);
    let eta2 = eta * eta;
    let eta4 = eta2 * eta2;
    let eta8 = eta4 * eta4;
    let eta24 = eta8 * eta8 * eta8;
    e4 * e4 * e4 / (q * eta24)
}

/// `1 + 240 * sum sigma_3(n) q^n`.
fn eisenstein_e4(q: Complex64) -> Complex64 {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut qn = q;
    let mut n = 1u64;
    loop {
        let term = qn * (240.0 * sigma3(n) as f64);
        sum += term;
        if term.norm() < TERM_CUTOFF {
            break;
        }
        n += 1;
        qn *= q;
    }
    sum
}

fn sigma3(n: u64) -> u64 {
    (1..=n).filter(|&d| n.is_multiple_of(d)).map(|d| d * d * d).sum()
}

/// `prod_{n>=1} (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}` over all integers k.
fn euler_product(q: Complex64) -> Complex64 {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut k = 1i64;
    loop {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let e1 = (k * (3 * k - 1) / 2) as i32;
        let e2 = (k * (3 * k + 1) / 2) as i32;
        let t1 = q.powi(e1);
        let t2 = q.powi(e2);
        sum += (t1 + t2) * sign;
        if t1.norm() < TERM_CUTOFF {
            break;
        }
        k += 1;
    }
    sum
}

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the upper half-plane: the modulus of `C/(Z + Z*tau)`.
#[derive(Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    re: f64,
    im: f64,
}

impl HalfPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() || im <= 0.0 {
            return Err(Error::NotInUpperHalfPlane { re, im });
        }
        Ok(HalfPlanePoint { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    /// The point `i`.
    pub const I: HalfPlanePoint = HalfPlanePoint { re: 0.0, im: 1.0 };

    /// `(1 + i*sqrt(3)) / 2`, the corner of the fundamental domain.
    pub fn rho() -> Self {
        HalfPlanePoint {
            re: 0.5,
            im: 3f64.sqrt() / 2.0,
        }
    }

    /// Caller guarantees `im > 0`; used where positivity follows from algebra.
    pub(crate) fn new_unchecked(re: f64, im: f64) -> Self {
        debug_assert!(im > 0.0, "imaginary part {im} not positive");
        HalfPlanePoint { re, im }
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.im
    }

    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// `q^tau = exp(2 pi i tau)`, a derived view of the exponent.
    pub fn nome(self) -> Complex64 {
        (Complex64::i() * std::f64::consts::TAU * self.to_complex()).exp()
    }

    pub fn dist(self, other: HalfPlanePoint) -> f64 {
        (self.to_complex() - other.to_complex()).norm()
    }
}

impl fmt::Debug for HalfPlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

impl fmt::Display for HalfPlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for HalfPlanePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.re, self.im].serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfPlanePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        HalfPlanePoint::new(re, im).map_err(serde::de::Error::custom)
    }
}

/// Serialize a complex number as `[re, im]`.
pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// An integer 2x2 matrix `[[a, b], [c, d]]` acting by Moebius transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Moebius action on a complex number; no positivity claims.
    pub fn act(&self, z: Complex64) -> Complex64 {
        (z * self.a as f64 + self.b as f64) / (z * self.c as f64 + self.d as f64)
    }

    /// Adjugate: the matrix of the dual isogeny.
    pub fn adjugate(&self) -> Self {
        IntMatrix::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn max_abs(&self) -> i64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;

    fn mul(self, o: IntMatrix) -> IntMatrix {
        IntMatrix::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, dd]] = <[[i64; 2]; 2]>::deserialize(d)?;
        Ok(IntMatrix::new(a, b, c, dd))
    }
}

/// An element `[[k, l], [m, n]]` of SL2(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularMatrix {
    k: i64,
    l: i64,
    m: i64,
    n: i64,
}

impl ModularMatrix {
    pub fn new(k: i64, l: i64, m: i64, n: i64) -> Result<Self> {
        if k * n - l * m != 1 {
            return Err(Error::NotUnimodular { k, l, m, n });
        }
        Ok(ModularMatrix { k, l, m, n })
    }

    pub(crate) const fn new_unchecked(k: i64, l: i64, m: i64, n: i64) -> Self {
        ModularMatrix { k, l, m, n }
    }

    pub const IDENTITY: ModularMatrix = ModularMatrix::new_unchecked(1, 0, 0, 1);
    /// `tau -> -1/tau`.
    pub const S: ModularMatrix = ModularMatrix::new_unchecked(0, -1, 1, 0);
    /// `tau -> tau + 1`.
    pub const T: ModularMatrix = ModularMatrix::new_unchecked(1, 1, 0, 1);

    pub fn translation(t: i64) -> Self {
        ModularMatrix::new_unchecked(1, t, 0, 1)
    }

    #[inline]
    pub fn k(&self) -> i64 {
        self.k
    }
    #[inline]
    pub fn l(&self) -> i64 {
        self.l
    }
    #[inline]
    pub fn m(&self) -> i64 {
        self.m
    }
    #[inline]
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.k, self.l, self.m, self.n]
    }

    pub fn inverse(&self) -> Self {
        ModularMatrix::new_unchecked(self.n, -self.l, -self.m, self.k)
    }

    pub fn negate(&self) -> Self {
        ModularMatrix::new_unchecked(-self.k, -self.l, -self.m, -self.n)
    }

    pub fn max_abs(&self) -> i64 {
        self.as_int().max_abs()
    }

    pub fn as_int(&self) -> IntMatrix {
        IntMatrix::new(self.k, self.l, self.m, self.n)
    }

    /// Moebius action on the half-plane. The imaginary part is computed as
    /// `Im(tau) / |m*tau + n|^2` so it stays positive.
    pub fn apply(&self, tau: HalfPlanePoint) -> HalfPlanePoint {
        apply_mobius(*self, tau)
    }

    /// Transport exponents along `beta_gamma`:
    /// `L(tau, q^u, q^v) ~ L(gamma*tau, q^(m v + n u), q^(k v + l u))`.
    pub fn transport_exponents(&self, u: f64, v: f64) -> (f64, f64) {
        (
            self.m as f64 * v + self.n as f64 * u,
            self.k as f64 * v + self.l as f64 * u,
        )
    }

    /// All of SL2(Z) with entries in {-1, 0, 1}, in lexicographic order.
    /// Contains the stabilizers of `i` and `rho` and the boundary gluing maps
    /// of the fundamental domain.
    pub fn small() -> &'static [ModularMatrix] {
        use std::sync::OnceLock;
        static SMALL: OnceLock<Vec<ModularMatrix>> = OnceLock::new();
        SMALL.get_or_init(|| {
            let mut out = Vec::new();
            for k in -1..=1 {
                for l in -1..=1 {
                    for m in -1..=1 {
                        for n in -1..=1 {
                            if let Ok(g) = ModularMatrix::new(k, l, m, n) {
                                out.push(g);
                            }
                        }
                    }
                }
            }
            out
        })
    }
}

impl Mul for ModularMatrix {
    type Output = ModularMatrix;

    fn mul(self, o: ModularMatrix) -> ModularMatrix {
        let p = self.as_int() * o.as_int();
        ModularMatrix::new_unchecked(p.a, p.b, p.c, p.d)
    }
}

impl Serialize for ModularMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_int().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModularMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = IntMatrix::deserialize(d)?;
        ModularMatrix::new(m.a, m.b, m.c, m.d).map_err(serde::de::Error::custom)
    }
}

/// `(k tau + l) / (m tau + n)`.
pub fn apply_mobius(gamma: ModularMatrix, tau: HalfPlanePoint) -> HalfPlanePoint {
    let z = tau.to_complex();
    let den = z * gamma.m as f64 + gamma.n as f64;
    let w = (z * gamma.k as f64 + gamma.l as f64) / den;
    HalfPlanePoint::new_unchecked(w.re, tau.im / den.norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: HalfPlanePoint, b: HalfPlanePoint, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(HalfPlanePoint::new(0.3, 0.0).is_err());
        assert!(HalfPlanePoint::new(0.3, -1.0).is_err());
        assert!(HalfPlanePoint::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(ModularMatrix::new(2, 0, 0, 1).is_err());
        assert!(ModularMatrix::new(-1, 0, 0, -1).is_ok());
    }

    #[test]
    fn mobius_examples() {
        let tau = HalfPlanePoint::new(0.3, 1.2).unwrap();
        assert!(close(apply_mobius(ModularMatrix::IDENTITY, tau), tau, 1e-15));
        let i = HalfPlanePoint::I;
        assert!(close(apply_mobius(ModularMatrix::S, i), i, 1e-15));
        let shifted = apply_mobius(ModularMatrix::T, tau);
        assert!(close(shifted, HalfPlanePoint::new(1.3, 1.2).unwrap(), 1e-15));
    }

    #[test]
    fn small_set_has_expected_members() {
        let small = ModularMatrix::small();
        assert!(small.contains(&ModularMatrix::S));
        assert!(small.contains(&ModularMatrix::T));
        assert!(small.contains(&ModularMatrix::IDENTITY.negate()));
        assert!(small.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn serde_shapes() {
        let tau = HalfPlanePoint::new(0.5, 2.0).unwrap();
        assert_eq!(serde_json::to_string(&tau).unwrap(), "[0.5,2.0]");
        assert!(serde_json::from_str::<HalfPlanePoint>("[0.5,-2.0]").is_err());
        let g = ModularMatrix::S;
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[0,-1],[1,0]]");
        assert!(serde_json::from_str::<ModularMatrix>("[[2,0],[0,1]]").is_err());
    }
}

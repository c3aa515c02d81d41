use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Everything except [`Error::Internal`] is a violated precondition: the
/// input does not satisfy a hypothesis the operation needs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {re}{im:+}i is not in the upper half-plane")]
    NotInUpperHalfPlane { re: f64, im: f64 },

    #[error("matrix [[{k},{l}],[{m},{n}]] does not have determinant 1")]
    NotUnimodular { k: i64, l: i64, m: i64, n: i64 },

    #[error("{name} must be at least {min}, got {value}")]
    BoundTooSmall { name: &'static str, value: i64, min: i64 },

    #[error("non-finite exponent {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("normal bundle torsion (order {order})")]
    Torsion { order: u64 },

    #[error("normal bundle not Diophantine (exponent estimate {exponent:.4} exceeds {threshold})")]
    NotDiophantine { exponent: f64, threshold: f64 },

    #[error("u' = {u_prime} is not negative; no Hopf presentation exists")]
    NoHopfPresentation { u_prime: f64 },

    #[error("representative {u_rep} is not congruent to u = {u} modulo 1")]
    IncongruentRepresentative { u: f64, u_rep: f64 },

    #[error("gcd({r}, {n}) != 1: diag(q^(1/n), q^(r/n)) does not act freely")]
    NonPrimitiveRoot { n: i64, r: i64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable name of the hypothesis an input failed.
    pub fn hypothesis(&self) -> &'static str {
        match self {
            Error::NotInUpperHalfPlane { .. } => "upper-half-plane",
            Error::NotUnimodular { .. } => "determinant-one",
            Error::BoundTooSmall { .. } => "bound-range",
            Error::NonFinite { .. } => "finite-exponents",
            Error::Torsion { .. } => "non-torsion",
            Error::NotDiophantine { .. } => "diophantine",
            Error::NoHopfPresentation { .. } => "negative-u",
            Error::IncongruentRepresentative { .. } => "congruent-representative",
            Error::NonPrimitiveRoot { .. } => "coprime-r-n",
            Error::InvalidConfig(_) => "valid-config",
            Error::Internal(_) => "internal",
        }
    }

    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_bound(name: &'static str, value: i64, min: i64) -> Result<()> {
    if value < min {
        Err(Error::BoundTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

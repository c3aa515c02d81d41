use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};

#[derive(Parser, Debug)]
#[command(name = "hopfgraft", version, about = "Hopf duality and analytic cobordance of line bundles on elliptic curves")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// A complex number written `re,im`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair(pub f64, pub f64);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
        Ok(Pair(parse_real(re)?, parse_real(im)?))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

/// A real number, either a decimal or an exact fraction `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Real(pub f64);

impl FromStr for Real {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_real(s).map(Real)
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
            let q: i64 = q.trim().parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
            if q == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            p as f64 / q as f64
        }
        None => s.parse::<f64>().map_err(|e| format!("bad number {s:?}: {e}"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("non-finite number {s:?}"))
    }
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TauArg {
    /// Modulus `re,im` with `im > 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Pair,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BundleArgs {
    /// Base modulus `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Pair,
    /// Exponent of the monodromy around `1` (decimal or `p/q`).
    #[arg(long, allow_hyphen_values = true)]
    pub u: Real,
    /// Exponent of the monodromy around `tau` (decimal or `p/q`).
    #[arg(long, allow_hyphen_values = true)]
    pub v: Real,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ReportArgs {
    /// Denominator bound for torsion detection.
    #[arg(long, default_value_t = 1_000_000)]
    pub bound: u64,
    /// Largest tensor power in the Diophantine sweep.
    #[arg(long, default_value_t = 10_000)]
    pub nmax: u64,
    /// Largest isogeny degree searched; 0 disables the search.
    #[arg(long = "max-degree", default_value_t = 20)]
    pub max_degree: u64,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Reduce a modulus to the fundamental domain.
    Reduce(TauArg),
    /// j-invariant of a modulus.
    Jinv(TauArg),
    /// Pic0 class of L(tau, q^u, q^v).
    Class(BundleArgs),
    /// Torsion test by rational reconstruction.
    Torsion {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Finite-range Diophantine estimate.
    Diophantine {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 10_000)]
        nmax: u64,
    },
    /// Hopf presentation of a bundle.
    ToHopf {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        /// Negative representative of u modulo 1 (default: u if negative, else the one in [-1, 0)).
        #[arg(long = "u-rep", allow_hyphen_values = true)]
        #[serde(skip_serializing_if = "Option::is_none")]
        u_rep: Option<Real>,
    },
    /// Tau presentation of L(q^tau, q^sigma).
    FromHopf {
        #[arg(long, allow_hyphen_values = true)]
        tau: Pair,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Pair,
    },
    /// Elliptic fibration or two curves.
    ClassifyHopf {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Pair,
        #[arg(long, allow_hyphen_values = true)]
        mu: Pair,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// The Hopf surface H(q^tauE, q^tauF).
    JointHopf {
        #[arg(long = "tauE", allow_hyphen_values = true)]
        #[serde(rename = "tauE")]
        tau_e: Pair,
        #[arg(long = "tauF", allow_hyphen_values = true)]
        #[serde(rename = "tauF")]
        tau_f: Pair,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Bundles analytically cobordant to L.
    Cobordants {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        #[serde(flatten)]
        report: ReportArgs,
    },
    /// Bundles Hopf dual to L.
    Duals {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        #[serde(flatten)]
        report: ReportArgs,
    },
    /// Minimal compactifications of Tot(L).
    Compactifications {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Cap on primary Hopf records; the rest are secondary descriptors.
        #[arg(long = "max-primary")]
        #[serde(skip_serializing_if = "Option::is_none")]
        max_primary: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Normal-bundle class of nine points on a cubic.
    NinePoints {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Algebraic structures on the complement of the cubic.
    Structures {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        #[serde(flatten)]
        report: ReportArgs,
    },
    /// Motivic bookkeeping.
    #[command(subcommand)]
    Motivic(MotivicCommand),
    /// Witness curve for [E] = [F] in the analytic Grothendieck group.
    K0anWitness {
        #[arg(long = "tauE", allow_hyphen_values = true)]
        #[serde(rename = "tauE")]
        tau_e: Pair,
        #[arg(long = "tauF", allow_hyphen_values = true)]
        #[serde(rename = "tauF")]
        tau_f: Pair,
        /// Number of candidates tried.
        #[arg(long, default_value_t = 100)]
        budget: u64,
        /// Offset into the candidate sequence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        nmax: u64,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(untagged)]
pub enum MotivicCommand {
    /// Class of P^2 blown up in n points.
    BlowupP2 {
        #[arg(long)]
        points: i64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_fractions() {
        assert_eq!("2.7,0.8".parse::<Pair>().unwrap(), Pair(2.7, 0.8));
        assert_eq!("-1/2,3".parse::<Pair>().unwrap(), Pair(-0.5, 3.0));
        assert_eq!("1/3".parse::<Real>().unwrap(), Real(1.0 / 3.0));
        assert!("1/0".parse::<Real>().is_err());
        assert!("nan".parse::<Real>().is_err());
        assert!("1;2".parse::<Pair>().is_err());
    }
}

//! Polynomials in the Lefschetz class `L = [A^1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_bound, Result};

/// `sum c_i L^i`, coefficients in ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MotivicClass {
    coefficients: Vec<i64>,
}

impl MotivicClass {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        MotivicClass { coefficients }
    }

    pub fn zero() -> Self {
        MotivicClass::default()
    }

    /// `[pt]`.
    pub fn point() -> Self {
        MotivicClass::new(vec![1])
    }

    pub fn lefschetz() -> Self {
        MotivicClass::new(vec![0, 1])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Specialization `L -> 1`: the topological Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    /// Specialization `L -> q`: point count over `F_q` for polynomial-count classes.
    pub fn evaluate(&self, q: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, c| acc * q + c)
    }
}

impl Add for &MotivicClass {
    type Output = MotivicClass;

    fn add(self, o: &MotivicClass) -> MotivicClass {
        let n = self.coefficients.len().max(o.coefficients.len());
        let c = (0..n)
            .map(|i| self.coefficients.get(i).unwrap_or(&0) + o.coefficients.get(i).unwrap_or(&0))
            .collect();
        MotivicClass::new(c)
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;

    fn neg(self) -> MotivicClass {
        MotivicClass::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Sub for &MotivicClass {
    type Output = MotivicClass;

    fn sub(self, o: &MotivicClass) -> MotivicClass {
        self + &-o
    }
}

impl Mul for &MotivicClass {
    type Output = MotivicClass;

    fn mul(self, o: &MotivicClass) -> MotivicClass {
        if self.coefficients.is_empty() || o.coefficients.is_empty() {
            return MotivicClass::zero();
        }
        let mut c = vec![0; self.coefficients.len() + o.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in o.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        MotivicClass::new(c)
    }
}

impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "L".to_string(),
                (1, c) => format!("{c}L"),
                (i, 1) => format!("L^{i}"),
                (i, c) => format!("{c}L^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `[Bl_n P^2] = L^2 + (n + 1) L + 1`: each blown-up point replaces a point
/// by a projective line. Length-`n` subschemes count as `n` points.
pub fn motivic_class_blowup_p2(n_points: i64) -> Result<MotivicClass> {
    ensure_bound("n_points", n_points, 0)?;
    let l = MotivicClass::lefschetz();
    let p2 = &(&(&l * &l) + &l) + &MotivicClass::point();
    let exceptional = &MotivicClass::new(vec![n_points]) * &l;
    Ok(&p2 + &exceptional)
}

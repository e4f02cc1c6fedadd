//! Coefficient-shape analysis: symmetry, trapezoidality, the stable plateau
//! and log-concavity.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape analysis requires a nonzero polynomial")]
    ZeroPolynomial,
    /// Trapezoid and log-concavity verdicts are only defined for positive
    /// sequences. The symmetry verdict is still carried along.
    #[error("coefficients are not all positive (symmetric: {is_symmetric})")]
    NonPositiveCoefficients { is_symmetric: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrapezoidReport {
    pub is_symmetric: bool,
    pub is_trapezoidal: bool,
    /// Midpoint of the exponent range, `(2 * offset + span) / 2`.
    #[serde(with = "ratio_string")]
    pub center: Rational64,
    /// Number of plateau coefficients minus one. Present only for symmetric
    /// trapezoidal input.
    pub stable_length: Option<usize>,
    pub is_log_concave: bool,
    pub sigma: Option<i64>,
    /// `stable_length <= |sigma|`, when both are known.
    pub bound_holds: Option<bool>,
}

pub fn is_symmetric(coeffs: &[BigInt]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

/// `a_i^2 >= a_{i-1} a_{i+1}` at every interior index.
pub fn is_log_concave(coeffs: &[BigInt]) -> bool {
    coeffs
        .windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Length of the plateau if the sequence strictly rises, stays flat, then
/// strictly falls. Returns the plateau's last-minus-first index.
fn trapezoid_plateau(coeffs: &[BigInt]) -> Option<usize> {
    let n = coeffs.len();
    let mut i = 0;
    while i + 1 < n && coeffs[i] < coeffs[i + 1] {
        i += 1;
    }
    let mut j = i;
    while j + 1 < n && coeffs[j] == coeffs[j + 1] {
        j += 1;
    }
    let mut k = j;
    while k + 1 < n && coeffs[k] > coeffs[k + 1] {
        k += 1;
    }
    (k + 1 == n).then_some(j - i)
}

pub fn analyze_shape(p: &LaurentPoly, sigma: Option<i64>) -> Result<TrapezoidReport, ShapeError> {
    if p.is_zero() {
        return Err(ShapeError::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    let symmetric = is_symmetric(coeffs);
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Err(ShapeError::NonPositiveCoefficients {
            is_symmetric: symmetric,
        });
    }
    let plateau = trapezoid_plateau(coeffs);
    let stable_length = if symmetric { plateau } else { None };
    let bound_holds = match (stable_length, sigma) {
        (Some(l), Some(s)) => Some(l as u64 <= s.unsigned_abs()),
        _ => None,
    };
    Ok(TrapezoidReport {
        is_symmetric: symmetric,
        is_trapezoidal: plateau.is_some(),
        center: Rational64::new(2 * p.offset() + p.span() as i64, 2),
        stable_length,
        is_log_concave: is_log_concave(coeffs),
        sigma,
        bound_holds,
    })
}

mod ratio_string {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

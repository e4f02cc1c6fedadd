//! Closed forms for the 4-braid families, the leading-coefficient formulas,
//! and the trapezoid/signature verdict pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BlockBraid;
use crate::burau::{alexander, AlexanderResult, BurauError};
use crate::laurent::{analyze_shape, LaurentPoly, ShapeError, TrapezoidReport};
use crate::signature::signature_closed_form;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error(transparent)]
    Burau(#[from] BurauError),
    #[error("unexpected shape failure: {0}")]
    Shape(#[from] ShapeError),
    #[error("coefficient formula a{index} is not an integer for n={n}, m={m}")]
    NonIntegerCoefficient { index: usize, n: u64, m: u64 },
    #[error("{0}")]
    InvalidParameters(String),
}

impl ConjectureError {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_defect(&self) -> bool {
        match self {
            ConjectureError::Burau(e) => e.is_defect(),
            ConjectureError::Shape(_) | ConjectureError::NonIntegerCoefficient { .. } => true,
            ConjectureError::InvalidParameters(_) => false,
        }
    }
}

fn qint(n: u64) -> LaurentPoly {
    LaurentPoly::quantum_integer(n as u32).expect("n >= 1")
}

/// `[p][q][r]`, the single-block 4-braid polynomial in `s`.
pub fn closed_form_m1(p: u64, q: u64, r: u64) -> LaurentPoly {
    &(&qint(p) * &qint(q)) * &qint(r)
}

/// Plateau length of `[p][q][r]`.
pub fn stable_length_m1(p: u64, q: u64, r: u64) -> u64 {
    let mut v = [p, q, r];
    v.sort_unstable_by(|a, b| b.cmp(a));
    let [a, b, c] = v;
    let head = a as i64 - b as i64 - c as i64 + 1;
    if head >= 0 {
        head as u64
    } else if (a + b + c - 3) % 2 == 0 {
        0
    } else {
        1
    }
}

/// Two-block 4-braid polynomial:
/// `s[q1][q2]([p1][p2][r1+r2] + [r1][r2][p1+p2]) + [p1+p2][q1+q2][r1+r2]`.
pub fn closed_form_m2(p1: u64, q1: u64, r1: u64, p2: u64, q2: u64, r2: u64) -> LaurentPoly {
    let inner = &(&(&qint(p1) * &qint(p2)) * &qint(r1 + r2))
        + &(&(&qint(r1) * &qint(r2)) * &qint(p1 + p2));
    let twisted = (&(&qint(q1) * &qint(q2)) * &inner).shift(1);
    &twisted + &closed_form_m1(p1 + p2, q1 + q2, r1 + r2)
}

/// Determinant of the two-block closure, `Delta(1)` in the `s` variable.
pub fn det_formula_m2(p1: u64, q1: u64, r1: u64, p2: u64, q2: u64, r2: u64) -> BigInt {
    let b = |v: u64| BigInt::from(v);
    b(q1) * b(q2) * (b(p1) * b(p2) * b(r1 + r2) + b(r1) * b(r2) * b(p1 + p2))
        + b(p1 + p2) * b(q1 + q2) * b(r1 + r2)
}

/// First four coefficients of the Alexander polynomial for large magnitudes.
///
/// `a[k]` is `None` when its magnitude threshold is not met; see
/// [`CoeffFormulaResult::restrict_to_min_entry`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffFormulaResult {
    pub a: [Option<BigInt>; 4],
    pub thresholds_met: [bool; 4],
}

/// Smallest magnitude for which `a_k` is valid: every entry must exceed this.
pub const COEFF_THRESHOLDS: [u64; 4] = [1, 1, 2, 3];

impl CoeffFormulaResult {
    /// Drops coefficients whose threshold `min_entry > COEFF_THRESHOLDS[k]` fails.
    pub fn restrict_to_min_entry(mut self, min_entry: u64) -> Self {
        for k in 0..4 {
            let met = min_entry > COEFF_THRESHOLDS[k];
            self.thresholds_met[k] = met;
            if !met {
                self.a[k] = None;
            }
        }
        self
    }

    /// The present coefficients, in order, up to the first absent one.
    pub fn prefix(&self) -> Vec<BigInt> {
        self.a.iter().map_while(|c| c.clone()).collect()
    }
}

fn exact(num: BigInt, den: i64, index: usize, n: u64, m: u64) -> Result<BigInt, ConjectureError> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ConjectureError::NonIntegerCoefficient { index, n, m })
    }
}

/// `a0 = 1`, `a1 = (n-2)m + 1`, `a2 = ((n-2)^2 m^2 + (3(n-2)+2) m) / 2`,
/// `a3 = ((n-2)^3 m^3 + 6(n-1)(n-2) m^2 + (5(n-1)+1) m) / 6` for `n > 3`
/// and `(m^3 + 12 m^2 + 17 m - 6) / 6` for `n = 3`.
pub fn leading_coeffs_formula(n: u64, m: u64) -> Result<CoeffFormulaResult, ConjectureError> {
    if n < 3 || m < 1 {
        return Err(ConjectureError::InvalidParameters(format!(
            "coefficient formulas need n >= 3 and m >= 1 (got n={n}, m={m})"
        )));
    }
    let bn = BigInt::from(n);
    let bm = BigInt::from(m);
    let k: BigInt = &bn - 2;
    let a0 = BigInt::from(1);
    let a1 = &k * &bm + 1;
    let a2 = exact(
        k.pow(2) * bm.pow(2) + (&k * 3 + 2) * &bm,
        2,
        2,
        n,
        m,
    )?;
    let a3 = if n == 3 {
        exact(bm.pow(3) + bm.pow(2) * 12 + &bm * 17 - 6, 6, 3, n, m)?
    } else {
        exact(
            k.pow(3) * bm.pow(3) + (&bn - 1) * &k * bm.pow(2) * 6 + ((&bn - 1) * 5 + 1) * &bm,
            6,
            3,
            n,
            m,
        )?
    };
    Ok(CoeffFormulaResult {
        a: [Some(a0), Some(a1), Some(a2), Some(a3)],
        thresholds_met: [true; 4],
    })
}

/// Four-strand special case, written in the single-variable form
/// `a2 = 2m^2 + 4m`, `a3 = 2m(2m^2 + 9m + 4) / 3`.
pub fn four_strand_coeffs(m: u64) -> [BigInt; 4] {
    let m = BigInt::from(m);
    let a3 = (&m * 2 * (m.pow(2) * 2 + &m * 9 + 4)) / 3;
    [BigInt::from(1), &m * 2 + 1, m.pow(2) * 2 + &m * 4, a3]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub components: usize,
    pub alexander: AlexanderResult,
    pub sigma: i64,
    /// Absent for split closures.
    pub shape: Option<TrapezoidReport>,
}

impl ConjectureReport {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    /// Symmetric, trapezoidal, and `l <= |sigma|`.
    pub fn trapezoid_bound_holds(&self) -> bool {
        self.shape.as_ref().is_some_and(|s| {
            s.is_symmetric && s.is_trapezoidal && s.bound_holds == Some(true)
        })
    }
}

/// Alexander polynomial, closed-form signature, and shape verdict for a block braid.
pub fn check_conjecture(b: &BlockBraid) -> Result<ConjectureReport, ConjectureError> {
    let word = b.expand();
    let alex = alexander(&word)?;
    let sigma = signature_closed_form(b).value;
    let shape = if alex.is_zero {
        None
    } else {
        Some(analyze_shape(&alex.poly_s, Some(sigma))?)
    };
    Ok(ConjectureReport {
        components: word.closure_components(),
        alexander: alex,
        sigma,
        shape,
    })
}

//! Reduced Burau representation of `B_n` and the Alexander polynomial of a
//! braid closure, `det(I - psi(b)) / (1 + t + ... + t^(n-1))` up to units.

mod matrix;

pub use matrix::PolyMatrix;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurauError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    /// An exact division that must succeed did not. Always a bug.
    #[error("internal arithmetic fault: {0}")]
    Defect(#[from] LaurentError),
}

impl BurauError {
    pub fn is_defect(&self) -> bool {
        matches!(self, BurauError::Defect(_))
    }
}

/// Image of `sigma_index^{±1}` in the reduced Burau representation of `B_strands`.
///
/// For the positive generator row `index` (1-based) is `t, -t, 1` around the
/// diagonal, every other row is the identity. The inverse has row
/// `1, -t^-1, t^-1` in the same positions.
pub fn burau_generator(strands: usize, index: usize, inverse: bool) -> Result<PolyMatrix, BurauError> {
    if strands < 2 || index == 0 || index >= strands {
        return Err(BurauError::IndexOutOfRange { index, strands });
    }
    let dim = strands - 1;
    let row = index - 1;
    let mut m = PolyMatrix::identity(dim);
    let (left, diag, right) = if inverse {
        (
            LaurentPoly::one(),
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::monomial(1, -1),
        )
    } else {
        (
            LaurentPoly::var(),
            LaurentPoly::monomial(-1, 1),
            LaurentPoly::one(),
        )
    };
    if row > 0 {
        m[(row, row - 1)] = left;
    }
    m[(row, row)] = diag;
    if row + 1 < dim {
        m[(row, row + 1)] = right;
    }
    Ok(m)
}

/// Ordered product of the generator images along the word.
pub fn burau_word(w: &BraidWord) -> PolyMatrix {
    let n = w.strands();
    let mut acc = PolyMatrix::identity(n - 1);
    for s in w.syllables() {
        // BraidWord guarantees index in range.
        let g = burau_generator(n, s.index, s.exponent < 0).expect("validated braid word");
        acc = &acc * &g.pow(s.exponent.unsigned_abs());
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderResult {
    /// Normalized in `t`: lowest exponent 0, positive constant term.
    pub poly_t: LaurentPoly,
    /// `poly_t` under `s = -t`, renormalized the same way.
    pub poly_s: LaurentPoly,
    /// Span of `poly_t` (0 for the zero polynomial).
    pub degree: usize,
    /// Coefficients of `poly_t` strictly alternate in sign, no internal zeros.
    pub alternating_in_t: bool,
    /// The closure is split and the polynomial vanishes.
    pub is_zero: bool,
}

fn strictly_alternating(p: &LaurentPoly) -> bool {
    let c = p.coeffs();
    c.iter().all(|a| !a.is_zero())
        && c.windows(2).all(|w| w[0].is_positive() != w[1].is_positive())
}

/// Alexander polynomial of the closure of `w`, up to units `±t^k`.
pub fn alexander(w: &BraidWord) -> Result<AlexanderResult, BurauError> {
    let n = w.strands();
    let dim = n - 1;
    let reduced = &PolyMatrix::identity(dim) - &burau_word(w);
    let d = reduced.det()?;
    if d.is_zero() {
        return Ok(AlexanderResult {
            poly_t: LaurentPoly::zero(),
            poly_s: LaurentPoly::zero(),
            degree: 0,
            alternating_in_t: false,
            is_zero: true,
        });
    }
    let divisor = LaurentPoly::quantum_integer(n as u32)?;
    let quotient = d.exact_div(&divisor)?;
    let poly_t = quotient.normalize_symmetric()?.poly;
    let poly_s = poly_t.substitute_neg().normalize_symmetric()?.poly;
    Ok(AlexanderResult {
        degree: poly_t.span(),
        alternating_in_t: strictly_alternating(&poly_t),
        poly_t,
        poly_s,
        is_zero: false,
    })
}

//! Signatures of closed alternating block braids.
//!
//! Two independent routes: the closed-form count over block magnitudes, and
//! (for a single block) the Sylvester inertia of the symmetrized Seifert
//! matrix, which is block diagonal in signed copies of the tridiagonal
//! `A_k = tridiag(-1, 2, -1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BlockBraid, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("the Seifert-matrix oracle needs exactly one block, got {0}")]
    BlockCountNotOne(usize),
}

/// Symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymIntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SymIntMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymIntMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    /// Returns `None` if `rows` is not square and symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return None;
                }
            }
        }
        Some(SymIntMatrix {
            dim,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn scaled(&self, k: i64) -> Self {
        SymIntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v * k).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[SymIntMatrix]) -> Self {
        let dim = blocks.iter().map(|b| b.dim).sum();
        let mut out = Self::zeros(dim);
        let mut at = 0;
        for b in blocks {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    out.entries[(at + i) * dim + at + j] = b.get(i, j);
                }
            }
            at += b.dim;
        }
        out
    }

    /// Exact determinant (fraction-free elimination over Z).
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::from(1);
        }
        sign * &a[n - 1][n - 1]
    }
}

/// `k x k` matrix with 2 on the diagonal and -1 beside it.
pub fn tridiagonal_a(k: usize) -> SymIntMatrix {
    let mut m = SymIntMatrix::zeros(k);
    for i in 0..k {
        m.entries[i * k + i] = 2;
        if i + 1 < k {
            m.entries[i * k + i + 1] = -1;
            m.entries[(i + 1) * k + i] = -1;
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Sylvester inertia by symmetric elimination over the rationals.
///
/// Each step applies a congruence `P^T M P`. A zero diagonal with a nonzero
/// off-diagonal `m_ij` is repaired by adding row/column `j` to row/column `i`,
/// which puts `2 m_ij` on the diagonal.
pub fn inertia(m: &SymIntMatrix) -> Inertia {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(m.get(i, j).into()))
                .collect()
        })
        .collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            if p != k {
                a.swap(p, k);
                for row in a.iter_mut() {
                    row.swap(p, k);
                }
            }
        } else {
            let hit = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero());
            match hit {
                Some((i, j)) => {
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[i][c] += v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[i] += v;
                    }
                    if i != k {
                        a.swap(i, k);
                        for row in a.iter_mut() {
                            row.swap(i, k);
                        }
                    }
                }
                None => {
                    out.zero += n - k;
                    break;
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        // Column elimination mirrors the row step; only the trailing block is read.
        for i in k + 1..n {
            a[i][k] = BigRational::zero();
            a[k][i] = BigRational::zero();
        }
        k += 1;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureMethod {
    ClosedForm,
    SeifertOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureCase {
    NOdd,
    NEvenPositive,
    NEvenNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub value: i64,
    pub method: SignatureMethod,
    pub case: SignatureCase,
}

fn case_of(b: &BlockBraid) -> SignatureCase {
    match (b.strands() % 2, b.sign()) {
        (1, _) => SignatureCase::NOdd,
        (_, Sign::Positive) => SignatureCase::NEvenPositive,
        (_, Sign::Negative) => SignatureCase::NEvenNegative,
    }
}

/// Closed form: with positive magnitudes, `sum(even generators) - sum(odd
/// generators)`, plus 1 when the strand count is even. The negative family
/// is the mirror image.
pub fn signature_closed_form(b: &BlockBraid) -> SignatureReport {
    let mut value: i64 = 0;
    for row in b.magnitudes() {
        for (k, &p) in row.iter().enumerate() {
            // k is 0-based: generator k+1 is odd when k is even.
            if k % 2 == 0 {
                value -= p as i64;
            } else {
                value += p as i64;
            }
        }
    }
    if b.strands() % 2 == 0 {
        value += 1;
    }
    SignatureReport {
        value: b.sign().as_i64() * value,
        method: SignatureMethod::ClosedForm,
        case: case_of(b),
    }
}

/// `Q - P - R + 1` for the totals of a positive 4-braid family.
pub fn signature_corollary_4braid(p: i64, q: i64, r: i64) -> i64 {
    q - p - r + 1
}

/// Symmetrized Seifert matrix of the single-block closure:
/// `diag(e * (-1)^i * A_{p_i - 1})` over the generators.
pub fn seifert_form_m1(b: &BlockBraid) -> Result<SymIntMatrix, SignatureError> {
    if b.blocks() != 1 {
        return Err(SignatureError::BlockCountNotOne(b.blocks()));
    }
    let e = b.sign().as_i64();
    let blocks: Vec<SymIntMatrix> = b.magnitudes()[0]
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let alt = if (k + 1) % 2 == 0 { 1 } else { -1 };
            tridiagonal_a(p as usize - 1).scaled(e * alt)
        })
        .collect();
    Ok(SymIntMatrix::direct_sum(&blocks))
}

pub fn seifert_oracle_m1(b: &BlockBraid) -> Result<SignatureReport, SignatureError> {
    let form = seifert_form_m1(b)?;
    Ok(SignatureReport {
        value: inertia(&form).signature(),
        method: SignatureMethod::SeifertOracle,
        case: case_of(b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(n: usize, text: &str, sign: Sign) -> BlockBraid {
        BlockBraid::parse(n, text, sign).unwrap()
    }

    #[test]
    fn worked_examples() {
        let r = signature_closed_form(&block(4, "3,2,5", Sign::Positive));
        assert_eq!(r.value, -5);
        assert_eq!(r.case, SignatureCase::NEvenPositive);
        let r = signature_closed_form(&block(5, "3,4,2,9;2,1,3,8", Sign::Positive));
        assert_eq!(r.value, 12);
        assert_eq!(r.case, SignatureCase::NOdd);
        let r = signature_closed_form(&block(4, "3,2,5", Sign::Negative));
        assert_eq!(r.value, 5);
        assert_eq!(r.case, SignatureCase::NEvenNegative);
    }

    #[test]
    fn corollary() {
        assert_eq!(signature_corollary_4braid(3, 2, 5), -5);
        assert_eq!(signature_corollary_4braid(2, 2, 2), -1);
        assert_eq!(signature_corollary_4braid(1, 1, 1), 0);
    }

    #[test]
    fn small_tridiagonals() {
        assert_eq!(tridiagonal_a(1).determinant(), BigInt::from(2));
        let a2 = tridiagonal_a(2);
        assert_eq!(a2, SymIntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap());
        assert_eq!(a2.determinant(), BigInt::from(3));
        assert_eq!(tridiagonal_a(0).dim(), 0);
        assert_eq!(tridiagonal_a(0).determinant(), BigInt::from(1));
    }

    #[test]
    fn inertia_examples() {
        let i = inertia(&tridiagonal_a(6));
        assert_eq!((i.positive, i.negative, i.zero), (6, 0, 0));
        let i = inertia(&tridiagonal_a(4).scaled(-1));
        assert_eq!((i.positive, i.negative, i.zero), (0, 4, 0));
        let i = inertia(&SymIntMatrix::zeros(3));
        assert_eq!((i.positive, i.negative, i.zero), (0, 0, 3));
    }

    #[test]
    fn inertia_with_zero_diagonal() {
        // [[0,1],[1,0]] has eigenvalues ±1.
        let m = SymIntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let i = inertia(&m);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        // hyperbolic plane plus a null direction
        let m = SymIntMatrix::from_rows(&[vec![0, 0, 2], vec![0, 0, 0], vec![2, 0, 0]]).unwrap();
        let i = inertia(&m);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
        // singular with a nonzero pivot first
        let m = SymIntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let i = inertia(&m);
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));
    }

    #[test]
    fn symmetric_check() {
        assert!(SymIntMatrix::from_rows(&[vec![1, 2], vec![3, 1]]).is_none());
        assert!(SymIntMatrix::from_rows(&[vec![1, 2]]).is_none());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(seifert_oracle_m1(&block(4, "3,2,5", Sign::Positive)).unwrap().value, -5);
        assert_eq!(seifert_oracle_m1(&block(2, "3", Sign::Positive)).unwrap().value, -2);
        assert_eq!(seifert_oracle_m1(&block(4, "1,1,1", Sign::Positive)).unwrap().value, 0);
        let r = seifert_oracle_m1(&block(4, "3,2,5", Sign::Negative)).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.method, SignatureMethod::SeifertOracle);
        assert_eq!(
            seifert_oracle_m1(&block(4, "1,1,1;1,1,1", Sign::Positive)),
            Err(SignatureError::BlockCountNotOne(2))
        );
    }

    #[test]
    fn seifert_form_layout() {
        let f = seifert_form_m1(&block(4, "3,2,5", Sign::Positive)).unwrap();
        assert_eq!(f.dim(), 2 + 1 + 4);
        assert_eq!(f.get(0, 0), -2);
        assert_eq!(f.get(0, 1), 1);
        assert_eq!(f.get(2, 2), 2);
        assert_eq!(f.get(3, 3), -2);
        assert_eq!(f.get(2, 3), 0);
    }
}

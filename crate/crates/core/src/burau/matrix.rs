//! Square matrices over the Laurent ring and their determinants.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize) -> Self {
        PolyMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    /// Builds from rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Entrywise map, used for variable substitutions.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact in the Laurent ring; a failed division means a bug, not bad input.
    pub fn det(&self) -> Result<LaurentPoly, LaurentError> {
        let n = self.dim;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant by Laplace expansion along the first row. Exponential in
    /// the dimension; kept as an independent check for small matrices.
    pub fn det_cofactor(&self) -> LaurentPoly {
        let idx: Vec<usize> = (0..self.dim).collect();
        self.minor_det(&idx, 0)
    }

    fn minor_det(&self, cols: &[usize], row: usize) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one();
        }
        let mut acc = LaurentPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = &self[(row, c)];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.minor_det(&rest, row + 1);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (r, c): (usize, usize)) -> &LaurentPoly {
        &self.entries[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[r * self.dim + c]
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = PolyMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        PolyMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix[{}x{}]", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| self[(r, c)].display_in('t').to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

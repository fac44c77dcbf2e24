//! Exact rational linear algebra: dense matrices over Q, reduced row echelon
//! form, rank, and canonical nullspace bases.
//!
//! Every subspace computed elsewhere in this crate (derivations, centroids,
//! centralizers, ...) bottoms out in [`Matrix::rref`] and
//! [`Matrix::nullspace_basis`]. Dimensions are exact integers; there is no
//! tolerance machinery anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Field element for all rational computation. Kept in canonical form
/// (reduced, positive denominator) by `num-rational`.
///
/// Text form is `"p/q"` with `/q` omitted when the denominator is 1; this is
/// exactly what `Display`/`FromStr` produce and accept.
pub type Scalar = BigRational;

/// Coordinate vector over [`Scalar`]. Length is fixed by the context that
/// builds it.
pub type Vector = Vec<Scalar>;

/// Shorthand for an integer scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn scalar_ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// True when `p` divides the numerator or the denominator of `s`.
///
/// Used to decide whether a rational elimination pivot survives reduction
/// modulo `p` unchanged.
pub fn prime_touches_scalar(s: &Scalar, p: u32) -> bool {
    let p = BigInt::from(p);
    (s.numer() % &p).is_zero() || (s.denom() % &p).is_zero()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("entry count {got} does not match shape {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, got: usize },
}

/// Dense row-major matrix over [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of a reduction to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    /// The unique RREF of the input.
    pub reduced: Matrix,
    /// Number of pivots.
    pub rank: usize,
    /// Pivot column indices, ascending.
    pub pivot_cols: Vec<usize>,
    /// The pivot entries as selected during elimination (before the row was
    /// normalized). Consumers use these to decide which primes are safe for
    /// modular cross-checks.
    pub pivot_values: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::BadEntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    /// Builds a matrix from a table of i64 entries; convenient in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&n| scalar(n))
            })
            .collect();
        Self { rows: r, cols: c, entries }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&Matrix]) -> Self {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack with differing column counts");
            entries.extend_from_slice(&b.entries);
            rows += b.rows;
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            entries.extend(row);
        }
        Self { rows: r, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Exact matrix product.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out[i] += self.at(i, j) * x;
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum; shapes must agree.
    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        let neg = Matrix {
            rows: other.rows,
            cols: other.cols,
            entries: other.entries.iter().map(|e| -e).collect(),
        };
        self.add(&neg)
    }

    pub fn scale(&self, by: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * by).collect(),
        }
    }

    /// Gauss-Jordan reduction with exact fraction arithmetic.
    ///
    /// Pivot choice is the first row with a nonzero entry in the current
    /// column, so the result is deterministic. The RREF itself is unique
    /// regardless.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_cols = Vec::new();
        let mut pivot_values = Vec::new();
        let mut pr = 0;

        for pc in 0..cols {
            if pr >= rows {
                break;
            }
            let Some(nonzero) = (pr..rows).find(|&r| !m.at(r, pc).is_zero()) else {
                continue;
            };
            if nonzero != pr {
                for c in 0..cols {
                    let tmp = m.at(nonzero, c).clone();
                    *m.at_mut(nonzero, c) = m.at(pr, c).clone();
                    *m.at_mut(pr, c) = tmp;
                }
            }
            let pivot = m.at(pr, pc).clone();
            pivot_values.push(pivot.clone());
            for c in pc..cols {
                let v = m.at(pr, c).clone() / &pivot;
                *m.at_mut(pr, c) = v;
            }
            for r in 0..rows {
                if r == pr || m.at(r, pc).is_zero() {
                    continue;
                }
                let factor = m.at(r, pc).clone();
                for c in pc..cols {
                    let v = m.at(r, c).clone() - &factor * m.at(pr, c);
                    *m.at_mut(r, c) = v;
                }
            }
            pivot_cols.push(pc);
            pr += 1;
        }

        Rref {
            reduced: m,
            rank: pr,
            pivot_cols,
            pivot_values,
        }
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical nullspace basis read off the RREF: one vector per free
    /// column, with that free variable set to 1 and all other free variables
    /// set to 0.
    pub fn nullspace_basis(&self) -> Vec<Vector> {
        let rref = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (row, &col) in rref.pivot_cols.iter().enumerate() {
                map[col] = Some(row);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&pc, pivot_row) in rref.pivot_cols.iter().zip(0..) {
                v[pc] = -rref.reduced.at(pivot_row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Signed-integer-friendly pretty printer for debugging and text reports.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// True when every entry is exactly zero.
pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// True when `m . v` is exactly the zero vector.
pub fn annihilates(m: &Matrix, v: &[Scalar]) -> bool {
    m.apply(v).map(|w| w.iter().all(Scalar::is_zero)).unwrap_or(false)
}

/// Rank of the span of `vectors` inside Q^len.
pub fn span_rank(len: usize, vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(len, vectors.to_vec()).rank()
}

/// Membership of `candidate` in the span of `vectors`, by exact rank
/// comparison.
pub fn in_span(len: usize, vectors: &[Vector], candidate: &[Scalar]) -> bool {
    let base = span_rank(len, vectors);
    let mut rows = vectors.to_vec();
    rows.push(candidate.to_vec());
    Matrix::from_rows(len, rows).rank() == base
}

/// True when the two families span the same subspace of Q^len.
pub fn same_span(len: usize, a: &[Vector], b: &[Vector]) -> bool {
    let ra = span_rank(len, a);
    let rb = span_rank(len, b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(len, &all) == ra
}

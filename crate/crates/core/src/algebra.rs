//! Data model for Hom-associative trialgebras: three structure-constant
//! tensors (left `⊣`, right `⊢`, middle `⊥`), the twisting map `α`, and
//! coordinate-level evaluation of products.
//!
//! Conventions, fixed once here and relied on everywhere else:
//! * `ProductTensor` entry `c[i][j][k]` is the coefficient of `e_k` in
//!   `e_i ∘ e_j` (0-based internally, 1-based in the file format).
//! * The twist matrix `a` is the ordinary coordinate matrix: `a[j][i]` is the
//!   coefficient of `e_j` in `α(e_i)`, so the columns of `a` are the images
//!   of the basis vectors. `α` is not assumed invertible.

use crate::linalg::{Matrix, Scalar, Vector};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Names the three products of a trialgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSelector {
    /// `⊣`, structure constants γ.
    Left,
    /// `⊢`, structure constants δ.
    Right,
    /// `⊥`, structure constants φ.
    Middle,
}

impl OpSelector {
    pub const ALL: [OpSelector; 3] = [OpSelector::Left, OpSelector::Right, OpSelector::Middle];

    pub fn symbol(self) -> &'static str {
        match self {
            OpSelector::Left => "left",
            OpSelector::Right => "right",
            OpSelector::Middle => "middle",
        }
    }
}

impl fmt::Display for OpSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate table entry for {op} product at ({i},{j})")]
    DuplicateEntry { op: OpSelector, i: usize, j: usize },
    #[error("invalid scalar literal {text:?}")]
    BadScalar { text: String },
    #[error("alpha matrix must be {dim}x{dim}")]
    BadAlphaShape { dim: usize },
}

/// One product's structure constants: an n x n x n array of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTensor {
    dim: usize,
    c: Vec<Scalar>, // flattened (i * dim + j) * dim + k
}

impl ProductTensor {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn at_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i ∘ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.c[base..base + self.dim]
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.at(i, j, k);
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &ProductTensor) -> ProductTensor {
        assert_eq!(self.dim, other.dim);
        ProductTensor {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &ProductTensor) -> ProductTensor {
        assert_eq!(self.dim, other.dim);
        ProductTensor {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, by: &Scalar) -> ProductTensor {
        ProductTensor {
            dim: self.dim,
            c: self.c.iter().map(|a| a * by).collect(),
        }
    }

    /// The tensor with arguments swapped: `result[i][j][.] = self[j][i][.]`.
    pub fn swap_args(&self) -> ProductTensor {
        let mut t = ProductTensor::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    *t.at_mut(i, j, k) = self.at(j, i, k).clone();
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }
}

/// The twisting endomorphism, stored as its coordinate matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMap {
    matrix: Matrix,
}

impl TwistMap {
    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            matrix: Matrix::zero(dim, dim),
        }
    }

    pub fn from_matrix(matrix: Matrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != matrix.cols() {
            return Err(AlgebraError::BadAlphaShape { dim: matrix.rows() });
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `a[j][i]`: coefficient of `e_j` in `α(e_i)`.
    pub fn coeff(&self, j: usize, i: usize) -> &Scalar {
        self.matrix.at(j, i)
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.matrix
            .apply(x)
            .map_err(|_| AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            })
    }

    /// Image of the `i`-th basis vector.
    pub fn basis_image(&self, i: usize) -> Vector {
        (0..self.dim()).map(|j| self.matrix.at(j, i).clone()).collect()
    }
}

/// A finite-dimensional Hom-associative trialgebra presented by structure
/// constants: the 5-tuple (A, ⊣, ⊢, ⊥, α).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomTrialgebra {
    dim: usize,
    left: ProductTensor,
    right: ProductTensor,
    middle: ProductTensor,
    alpha: TwistMap,
    label: Option<String>,
}

/// One table line for [`HomTrialgebra::from_tables`]: `e_i ∘ e_j = v` with
/// 1-based indices, matching the file format.
#[derive(Debug, Clone)]
pub struct TableLine {
    pub op: OpSelector,
    pub i: usize,
    pub j: usize,
    pub value: Vector,
}

impl HomTrialgebra {
    pub fn new(
        left: ProductTensor,
        right: ProductTensor,
        middle: ProductTensor,
        alpha: TwistMap,
        label: Option<String>,
    ) -> Result<Self, AlgebraError> {
        let dim = left.dim();
        for got in [right.dim(), middle.dim(), alpha.dim()] {
            if got != dim {
                return Err(AlgebraError::DimensionMismatch { expected: dim, got });
            }
        }
        Ok(Self {
            dim,
            left,
            right,
            middle,
            alpha,
            label,
        })
    }

    /// The algebra with all products and the twist identically zero.
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            left: ProductTensor::zero(dim),
            right: ProductTensor::zero(dim),
            middle: ProductTensor::zero(dim),
            alpha: TwistMap::zero(dim),
            label: None,
        }
    }

    /// Builds an algebra from sparse multiplication-table lines. Unlisted
    /// products are zero, which is what makes the usual sparse tables
    /// well-defined. Duplicate `(op, i, j)` lines are an error so that
    /// transcription accidents surface instead of silently merging.
    pub fn from_tables(
        dim: usize,
        lines: &[TableLine],
        alpha_columns: &[(usize, Vector)],
        label: Option<String>,
    ) -> Result<Self, AlgebraError> {
        let mut left = ProductTensor::zero(dim);
        let mut right = ProductTensor::zero(dim);
        let mut middle = ProductTensor::zero(dim);
        let mut seen: Vec<(OpSelector, usize, usize)> = Vec::new();

        for line in lines {
            let check = |index: usize| {
                if index == 0 || index > dim {
                    Err(AlgebraError::IndexOutOfRange { index, dim })
                } else {
                    Ok(index - 1)
                }
            };
            let i = check(line.i)?;
            let j = check(line.j)?;
            if line.value.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: line.value.len(),
                });
            }
            if seen.contains(&(line.op, line.i, line.j)) {
                return Err(AlgebraError::DuplicateEntry {
                    op: line.op,
                    i: line.i,
                    j: line.j,
                });
            }
            seen.push((line.op, line.i, line.j));
            let tensor = match line.op {
                OpSelector::Left => &mut left,
                OpSelector::Right => &mut right,
                OpSelector::Middle => &mut middle,
            };
            for (k, v) in line.value.iter().enumerate() {
                *tensor.at_mut(i, j, k) = v.clone();
            }
        }

        let mut a = Matrix::zero(dim, dim);
        let mut seen_alpha: Vec<usize> = Vec::new();
        for (i, column) in alpha_columns {
            if *i == 0 || *i > dim {
                return Err(AlgebraError::IndexOutOfRange { index: *i, dim });
            }
            if column.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: column.len(),
                });
            }
            if seen_alpha.contains(i) {
                return Err(AlgebraError::DuplicateEntry {
                    op: OpSelector::Left,
                    i: *i,
                    j: 0,
                });
            }
            seen_alpha.push(*i);
            for (j, v) in column.iter().enumerate() {
                *a.at_mut(j, i - 1) = v.clone();
            }
        }

        Self::new(left, right, middle, TwistMap::from_matrix(a)?, label)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn tensor(&self, op: OpSelector) -> &ProductTensor {
        match op {
            OpSelector::Left => &self.left,
            OpSelector::Right => &self.right,
            OpSelector::Middle => &self.middle,
        }
    }

    pub fn alpha(&self) -> &TwistMap {
        &self.alpha
    }

    /// Bilinear product of coordinate vectors under the selected operation.
    pub fn multiply(&self, op: OpSelector, x: &[Scalar], y: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.tensor(op).evaluate(x, y)
    }

    /// `α` applied to a coordinate vector.
    pub fn apply_twist(&self, x: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.alpha.apply(x)
    }

    /// Coordinates of `e_i ∘ e_j` (0-based indices).
    pub fn basis_product(&self, op: OpSelector, i: usize, j: usize) -> &[Scalar] {
        self.tensor(op).basis_product(i, j)
    }

    /// Coordinates of `α(e_i)` (0-based index).
    pub fn twist_of_basis(&self, i: usize) -> Vector {
        self.alpha.basis_image(i)
    }

    /// Standard basis vector as coordinates (0-based index).
    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = num_traits::One::one();
        v
    }

    /// Replaces the tensor of one product, keeping everything else.
    pub fn with_tensor(&self, op: OpSelector, tensor: ProductTensor) -> HomTrialgebra {
        let mut out = self.clone();
        assert_eq!(tensor.dim(), self.dim);
        match op {
            OpSelector::Left => out.left = tensor,
            OpSelector::Right => out.right = tensor,
            OpSelector::Middle => out.middle = tensor,
        }
        out
    }
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// Serialized form: `{ "dim": n, "label": ..., "alpha": [[..]], "left": [..],
/// "right": [..], "middle": [..] }` where `alpha` is the row-major coordinate
/// matrix `a` (so `a[j][i]` multiplies `e_j` in `α(e_i)`), indices are
/// 1-based, scalars are strings like `"-1"` or `"3/2"`, and omitted products
/// are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub left: Vec<ProductLine>,
    #[serde(default)]
    pub right: Vec<ProductLine>,
    #[serde(default)]
    pub middle: Vec<ProductLine>,
}

/// `e_i ∘ e_j = Σ v[k] e_{k+1}` with 1-based `i`, `j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductLine {
    pub i: usize,
    pub j: usize,
    pub v: Vec<String>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("at {path}: {source} (line {line}, column {column})")]
    Json {
        path: String,
        line: usize,
        column: usize,
        source: serde_json::Error,
    },
}

fn parse_scalar(text: &str) -> Result<Scalar, AlgebraError> {
    Scalar::from_str(text.trim()).map_err(|_| AlgebraError::BadScalar {
        text: text.to_string(),
    })
}

fn tensor_lines(tensor: &ProductTensor) -> Vec<ProductLine> {
    let dim = tensor.dim();
    let mut lines = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let v = tensor.basis_product(i, j);
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            lines.push(ProductLine {
                i: i + 1,
                j: j + 1,
                v: v.iter().map(|s| s.to_string()).collect(),
            });
        }
    }
    lines
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &HomTrialgebra) -> Self {
        let dim = algebra.dim();
        let alpha = (0..dim)
            .map(|r| (0..dim).map(|c| algebra.alpha().matrix().at(r, c).to_string()).collect())
            .collect();
        AlgebraFile {
            dim,
            label: algebra.label().map(str::to_string),
            provenance: None,
            alpha,
            left: tensor_lines(algebra.tensor(OpSelector::Left)),
            right: tensor_lines(algebra.tensor(OpSelector::Right)),
            middle: tensor_lines(algebra.tensor(OpSelector::Middle)),
        }
    }

    pub fn into_algebra(&self) -> Result<HomTrialgebra, AlgebraError> {
        let dim = self.dim;
        if self.alpha.len() != dim || self.alpha.iter().any(|row| row.len() != dim) {
            return Err(AlgebraError::BadAlphaShape { dim });
        }
        let mut lines = Vec::new();
        for (op, group) in [
            (OpSelector::Left, &self.left),
            (OpSelector::Right, &self.right),
            (OpSelector::Middle, &self.middle),
        ] {
            for line in group {
                let value = line
                    .v
                    .iter()
                    .map(|s| parse_scalar(s))
                    .collect::<Result<Vector, _>>()?;
                lines.push(TableLine {
                    op,
                    i: line.i,
                    j: line.j,
                    value,
                });
            }
        }
        let mut a = Matrix::zero(dim, dim);
        for (r, row) in self.alpha.iter().enumerate() {
            for (c, text) in row.iter().enumerate() {
                *a.at_mut(r, c) = parse_scalar(text)?;
            }
        }
        let alpha_columns: Vec<(usize, Vector)> = (0..dim)
            .map(|i| (i + 1, (0..dim).map(|j| a.at(j, i).clone()).collect()))
            .collect();
        HomTrialgebra::from_tables(dim, &lines, &alpha_columns, self.label.clone())
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("algebra file serialization");
        out.push('\n');
        out
    }

    pub fn parse_json(path_for_errors: &str, text: &str) -> Result<HomTrialgebra, FileError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: AlgebraFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let line = e.inner().line();
            let column = e.inner().column();
            let path = if e.path().to_string() == "." {
                path_for_errors.to_string()
            } else {
                format!("{}: field {}", path_for_errors, e.path())
            };
            FileError::Json {
                path,
                line,
                column,
                source: e.into_inner(),
            }
        })?;
        Ok(file.into_algebra()?)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::linalg::scalar;
    use proptest::prelude::*;

    fn e(dim: usize, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); dim];
        v[i - 1] = scalar(1);
        v
    }

    /// The TH2.9 multiplication table built by hand; a nontrivial fixture
    /// with a singular-looking twist and an asymmetric middle product.
    pub(crate) fn sample_two_dim() -> HomTrialgebra {
        let lines = vec![
            TableLine { op: OpSelector::Left, i: 1, j: 1, value: vec![scalar(-1), scalar(0)] },
            TableLine { op: OpSelector::Left, i: 1, j: 2, value: e(2, 2) },
            TableLine { op: OpSelector::Left, i: 2, j: 1, value: e(2, 2) },
            TableLine { op: OpSelector::Right, i: 1, j: 1, value: vec![scalar(-1), scalar(0)] },
            TableLine { op: OpSelector::Right, i: 1, j: 2, value: e(2, 2) },
            TableLine { op: OpSelector::Right, i: 2, j: 1, value: e(2, 2) },
            TableLine { op: OpSelector::Middle, i: 1, j: 1, value: vec![scalar(-1), scalar(0)] },
            TableLine { op: OpSelector::Middle, i: 1, j: 2, value: e(2, 1) },
            TableLine { op: OpSelector::Middle, i: 2, j: 2, value: e(2, 2) },
        ];
        let alpha = vec![(1, e(2, 1)), (2, vec![scalar(0), scalar(-1)])];
        HomTrialgebra::from_tables(2, &lines, &alpha, Some("sample".into())).unwrap()
    }

    /// The TH2.4 multiplication table: a single product entry repeated across
    /// all three operations and a unipotent twist. Satisfies all nine axioms.
    pub(crate) fn sample_passing() -> HomTrialgebra {
        let lines = vec![
            TableLine { op: OpSelector::Left, i: 2, j: 2, value: e(2, 1) },
            TableLine { op: OpSelector::Right, i: 2, j: 2, value: e(2, 1) },
            TableLine { op: OpSelector::Middle, i: 2, j: 2, value: e(2, 1) },
        ];
        let alpha = vec![(1, e(2, 1)), (2, vec![scalar(1), scalar(1)])];
        HomTrialgebra::from_tables(2, &lines, &alpha, Some("passing".into())).unwrap()
    }

    #[test]
    fn multiply_reads_the_table() {
        let a = sample_two_dim();
        let e1 = a.basis_vector(0);
        let got = a.multiply(OpSelector::Left, &e1, &e1).unwrap();
        assert_eq!(got, vec![scalar(-1), scalar(0)]);
        let e2 = a.basis_vector(1);
        assert_eq!(a.multiply(OpSelector::Middle, &e2, &e2).unwrap(), e(2, 2));
    }

    #[test]
    fn multiply_zero_vector() {
        let a = sample_two_dim();
        let zero = vec![scalar(0), scalar(0)];
        let y = vec![scalar(3), crate::linalg::scalar_ratio(5, 7)];
        for op in OpSelector::ALL {
            assert_eq!(a.multiply(op, &zero, &y).unwrap(), zero);
        }
    }


    #[test]
    fn apply_twist_matches_columns() {
        let a = sample_two_dim();
        let e2 = a.basis_vector(1);
        assert_eq!(a.apply_twist(&e2).unwrap(), vec![scalar(0), scalar(-1)]);
        let id = HomTrialgebra::from_tables(2, &[], &[(1, e(2, 1)), (2, e(2, 2))], None).unwrap();
        let v = vec![scalar(4), scalar(-7)];
        assert_eq!(id.apply_twist(&v).unwrap(), v);
    }

    #[test]
    fn from_tables_rejects_duplicates_and_bad_indices() {
        let dup = vec![
            TableLine { op: OpSelector::Left, i: 1, j: 1, value: e(2, 1) },
            TableLine { op: OpSelector::Left, i: 1, j: 1, value: e(2, 2) },
        ];
        assert!(matches!(
            HomTrialgebra::from_tables(2, &dup, &[], None),
            Err(AlgebraError::DuplicateEntry { .. })
        ));
        let oob = vec![TableLine { op: OpSelector::Right, i: 3, j: 1, value: e(2, 1) }];
        assert!(matches!(
            HomTrialgebra::from_tables(2, &oob, &[], None),
            Err(AlgebraError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn zero_algebra_from_empty_tables() {
        let a = HomTrialgebra::from_tables(3, &[], &[], None).unwrap();
        let x = vec![scalar(1), scalar(2), scalar(3)];
        for op in OpSelector::ALL {
            assert!(a.multiply(op, &x, &x).unwrap().iter().all(Scalar::is_zero));
        }
        assert!(a.apply_twist(&x).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn file_roundtrip_is_identity() {
        let a = sample_two_dim();
        let text = AlgebraFile::from_algebra(&a).to_json();
        let back = AlgebraFile::parse_json("<mem>", &text).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn parse_errors_name_position() {
        let bad = r#"{ "dim": 2, "alpha": [["1","0"],["0","x"]] }"#;
        let err = AlgebraFile::parse_json("demo.json", bad).unwrap_err();
        assert!(matches!(err, FileError::Algebra(AlgebraError::BadScalar { .. })));
        let bad_json = r#"{ "dim": 2, "alpha": [["1","0"],["0", 3]] }"#;
        let err = AlgebraFile::parse_json("demo.json", bad_json).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("demo.json"), "{msg}");
        assert!(msg.contains("alpha"), "{msg}");
    }

    fn arb_vec2() -> impl Strategy<Value = Vector> {
        proptest::collection::vec((-5i64..=5).prop_map(scalar), 2)
    }

    proptest! {
        #[test]
        fn multiply_is_bilinear(x in arb_vec2(), xp in arb_vec2(), y in arb_vec2(), lam in -4i64..=4) {
            let a = sample_two_dim();
            let lam = scalar(lam);
            for op in OpSelector::ALL {
                let mixed: Vector = x.iter().zip(&xp).map(|(u, v)| &lam * u + v).collect();
                let lhs = a.multiply(op, &mixed, &y).unwrap();
                let m1 = a.multiply(op, &x, &y).unwrap();
                let m2 = a.multiply(op, &xp, &y).unwrap();
                let rhs: Vector = m1.iter().zip(&m2).map(|(u, v)| &lam * u + v).collect();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

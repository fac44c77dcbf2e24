//! The printed inner-derivation and centroid tables, kept as data so the
//! solver's output can be compared against them entry by entry.
//!
//! Cells are stored in the display orientation the tables use, which is the
//! transpose of this crate's standard coordinate convention. Each distinct
//! label is one free parameter; a cell holds `coeff * label`. Where a printed
//! label visibly disagrees with its cell position the adopted reading is
//! recorded in `notes` (the comparison itself is positional).

use std::collections::BTreeMap;

/// One nonzero cell of a printed basis pattern, display orientation,
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedCell {
    pub row: usize,
    pub col: usize,
    pub label: &'static str,
    pub coeff: i64,
}

/// A printed table row: the symbolic matrix and the stated dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedBasisTable {
    pub stated_dim: usize,
    pub cells: Vec<PrintedCell>,
    pub notes: Vec<&'static str>,
}

impl PrintedBasisTable {
    /// Number of distinct labels, i.e. the dimension the symbolic matrix
    /// itself displays (which can disagree with `stated_dim`).
    pub fn label_count(&self) -> usize {
        let mut labels: Vec<&str> = self.cells.iter().map(|c| c.label).collect();
        labels.sort();
        labels.dedup();
        labels.len()
    }

    /// The subspace the printed pattern spans, as standard-convention basis
    /// matrices (one per label), vectorized row-major into length n*n.
    pub fn standard_basis_vectors(&self, n: usize) -> Vec<Vec<crate::linalg::Scalar>> {
        let mut by_label: BTreeMap<&str, Vec<crate::linalg::Scalar>> = BTreeMap::new();
        for cell in &self.cells {
            let v = by_label
                .entry(cell.label)
                .or_insert_with(|| vec![crate::linalg::scalar(0); n * n]);
            // Display (row, col) is standard (col, row).
            let std_idx = (cell.col - 1) * n + (cell.row - 1);
            v[std_idx] = crate::linalg::scalar(cell.coeff);
        }
        by_label.into_values().collect()
    }
}

fn cells(spec: &[(usize, usize, &'static str, i64)]) -> Vec<PrintedCell> {
    spec.iter()
        .map(|&(row, col, label, coeff)| PrintedCell {
            row,
            col,
            label,
            coeff,
        })
        .collect()
}

fn table(
    stated_dim: usize,
    spec: &[(usize, usize, &'static str, i64)],
    notes: &[&'static str],
) -> PrintedBasisTable {
    PrintedBasisTable {
        stated_dim,
        cells: cells(spec),
        notes: notes.to_vec(),
    }
}

/// The inner-derivation table rows (the tables cover only part of the
/// catalog; absent entries return `None`).
pub fn inner_derivation_table(id: &str) -> Option<PrintedBasisTable> {
    let t = match id {
        "TH2.1" | "TH2.2" | "TH2.3" | "TH2.6" => table(1, &[(2, 1, "I21", 1)], &[]),
        "TH2.4" => table(
            1,
            &[(2, 1, "I21", 1), (2, 2, "I22", 1)],
            &["stated dimension 1 and a two-parameter matrix conflict; the accompanying proof claims dimension 2"],
        ),
        "TH3.1" | "TH3.2" => table(
            3,
            &[
                (1, 1, "I11", 1),
                (2, 2, "I22", 1),
                (2, 3, "I23", 1),
                (3, 2, "I22", -1),
                (3, 3, "I23", -1),
            ],
            &[],
        ),
        "TH3.3" => table(
            3,
            &[(1, 1, "I11", 1), (1, 2, "I21", 1), (3, 3, "I33", 1)],
            &["label I21 is printed at cell (1,2); the cell position is adopted"],
        ),
        "TH3.4" => table(2, &[(1, 1, "I11", 1), (1, 3, "I13", 1)], &[]),
        "TH3.5" => table(2, &[(2, 3, "I23", 1), (3, 3, "I33", 1)], &[]),
        "TH3.6" => table(
            3,
            &[
                (1, 1, "I11", 1),
                (1, 3, "I13", 1),
                (2, 2, "I22", 1),
                (3, 1, "I11", -1),
                (3, 3, "I13", -1),
            ],
            &[],
        ),
        "TH3.7" | "TH3.8" => table(
            3,
            &[
                (1, 1, "I11", 1),
                (1, 2, "I12", 1),
                (2, 1, "I11", -1),
                (2, 2, "I12", -1),
                (3, 3, "I33", 1),
            ],
            &[],
        ),
        "TH3.10" | "TH3.11" => table(2, &[(2, 1, "I21", 1), (3, 3, "I33", 1)], &[]),
        "TH3.12" | "TH3.13" | "TH3.15" | "TH3.16" | "TH3.17" | "TH3.18" => table(
            2,
            &[(2, 1, "I21", 1), (2, 3, "I23", 1)],
            &["label I23 is printed at cell (2,2); the label position (2,3) is adopted"],
        ),
        "TH3.14" => table(
            3,
            &[(2, 1, "I21", 1), (2, 3, "I23", 1)],
            &[
                "label I23 is printed at cell (2,2); the label position (2,3) is adopted",
                "stated dimension 3 and a two-parameter matrix conflict",
            ],
        ),
        "TH3.19" => table(
            1,
            &[(1, 1, "I21", 1)],
            &["label I21 is printed at cell (1,1); the cell position is adopted"],
        ),
        _ => return None,
    };
    Some(t)
}

/// The centroid table rows.
pub fn centroid_table(id: &str) -> Option<PrintedBasisTable> {
    let t = match id {
        "TH2.1" | "TH2.2" => table(1, &[(2, 1, "c21", 1)], &[]),
        "TH2.4" => table(
            2,
            &[(1, 1, "c11", 1), (2, 1, "c21", 1), (2, 2, "c11", 1)],
            &["the (2,2) cell is printed as d11; read as c11"],
        ),
        "TH2.5" | "TH2.6" => table(
            2,
            &[(1, 1, "c11", 1), (2, 1, "c21", 1), (2, 2, "c11", 1)],
            &[],
        ),
        "TH2.7" | "TH2.8" | "TH2.13" => {
            table(1, &[(1, 1, "c11", 1), (2, 2, "c11", 1)], &[])
        }
        "TH2.10" | "TH2.12" => table(1, &[(1, 1, "c11", 1)], &[]),
        "TH2.11" => table(1, &[(2, 2, "c22", 1)], &[]),
        "TH3.1" | "TH3.2" => table(
            3,
            &[
                (1, 1, "c11", 1),
                (2, 2, "c22", 1),
                (2, 3, "c23", 1),
                (3, 2, "c22", -1),
                (3, 3, "c23", -1),
            ],
            &[],
        ),
        "TH3.3" => table(1, &[(1, 2, "c12", 1)], &[]),
        "TH3.4" => table(
            2,
            &[(1, 1, "c11", 1), (1, 3, "c13", 1), (3, 3, "c11", 1)],
            &[],
        ),
        "TH3.5" => table(
            2,
            &[(2, 2, "c22", 1), (3, 3, "c33", 1)],
            &["the printed (2,3) cell is blank; read as zero"],
        ),
        "TH3.6" => table(
            3,
            &[
                (1, 1, "c11", 1),
                (1, 3, "c13", 1),
                (2, 2, "c22", 1),
                (3, 1, "c11", -1),
                (3, 3, "c13", -1),
            ],
            &[],
        ),
        "TH3.7" | "TH3.8" => table(
            3,
            &[
                (1, 1, "c11", 1),
                (1, 2, "c12", 1),
                (2, 1, "c11", -1),
                (2, 2, "c12", -1),
                (3, 3, "c33", 1),
            ],
            &[],
        ),
        "TH3.10" | "TH3.11" => table(2, &[(2, 1, "c21", 1), (3, 3, "c33", 1)], &[]),
        "TH3.12" | "TH3.13" => table(
            2,
            &[(2, 1, "c21", 1), (2, 3, "c23", 1)],
            &["label c23 is printed at cell (2,2); the label position (2,3) is adopted"],
        ),
        "TH3.14" => table(
            3,
            &[
                (1, 1, "c11", 1),
                (2, 1, "c21", 1),
                (2, 2, "c11", 1),
                (2, 3, "c23", 1),
                (3, 1, "c11", -1),
            ],
            &[],
        ),
        "TH3.15" | "TH3.16" | "TH3.17" | "TH3.18" => table(
            2,
            &[(2, 1, "c21", 1), (2, 3, "c23", 1)],
            &["label c23 is printed at cell (2,2); the label position (2,3) is adopted"],
        ),
        "TH3.20" | "TH3.21" => table(
            2,
            &[(2, 1, "c21", 1), (3, 1, "c31", 1), (3, 2, "c21", 1)],
            &[],
        ),
        _ => return None,
    };
    Some(t)
}

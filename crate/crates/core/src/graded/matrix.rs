//! Generalized permutation matrices with root-of-unity entries.
//!
//! A monomial matrix stores, per column, an optional target row and a phase
//! in `Z_m` (realized as the m-th root of unity `ζ^phase`). At most one
//! entry per row and per column; composition adds phases and composes the
//! underlying partial permutations, so all arithmetic is exact.

use super::GradedError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<Option<(usize, u64)>>,
}

impl MonomialMatrix {
    pub fn from_entries(
        rows: usize,
        cols: usize,
        modulus: u64,
        entries: Vec<Option<(usize, u64)>>,
    ) -> Result<Self, GradedError> {
        if modulus == 0 {
            return Err(GradedError::BadModulus { modulus });
        }
        if entries.len() != cols {
            return Err(GradedError::MalformedTable {
                len: entries.len(),
                expected: cols,
            });
        }
        let mut row_used = vec![false; rows];
        for entry in entries.iter().flatten() {
            let (row, phase) = *entry;
            if row >= rows {
                return Err(GradedError::Internal {
                    context: format!("monomial entry row {row} out of range {rows}"),
                });
            }
            if phase >= modulus {
                return Err(GradedError::PhaseOutOfRange {
                    value: phase,
                    modulus,
                });
            }
            if row_used[row] {
                return Err(GradedError::DuplicateRow { row });
            }
            row_used[row] = true;
        }
        Ok(MonomialMatrix {
            rows,
            cols,
            modulus,
            entries,
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        MonomialMatrix {
            rows: n,
            cols: n,
            modulus,
            entries: (0..n).map(|i| Some((i, 0))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The `(row, phase)` entry of a column, if the column is nonzero.
    pub fn entry(&self, col: usize) -> Option<(usize, u64)> {
        self.entries[col]
    }

    /// Composite `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &MonomialMatrix) -> Result<Self, GradedError> {
        if self.modulus != inner.modulus {
            return Err(GradedError::ModulusMismatch {
                a: self.modulus,
                b: inner.modulus,
            });
        }
        if self.cols != inner.rows {
            return Err(GradedError::ShapeMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: inner.rows,
                rhs_cols: inner.cols,
            });
        }
        let entries = inner
            .entries
            .iter()
            .map(|first| {
                first.and_then(|(mid, p1)| {
                    self.entries[mid].map(|(row, p2)| (row, (p1 + p2) % self.modulus))
                })
            })
            .collect();
        // Row uniqueness survives composition of partial injections.
        Ok(MonomialMatrix {
            rows: self.rows,
            cols: inner.cols,
            modulus: self.modulus,
            entries,
        })
    }

    /// Inverse, when the matrix is a full (square, total) monomial matrix.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let mut entries = vec![None; self.rows];
        for (col, entry) in self.entries.iter().enumerate() {
            let (row, phase) = (*entry)?;
            entries[row] = Some((col, (self.modulus - phase) % self.modulus));
        }
        if entries.iter().any(Option::is_none) {
            return None;
        }
        Some(MonomialMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(col, e)| *e == Some((col, 0)))
    }
}

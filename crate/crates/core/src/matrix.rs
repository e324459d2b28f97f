//! Dense matrices over the integers.
//!
//! Every differential, kernel basis and generator lattice in this crate is
//! carried by [`IntMatrix`]. Entries are arbitrary-precision integers; no
//! floating point arithmetic is used anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix with `BigInt` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from rows of machine integers. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &BigInt) {
        let e = &mut self.data[i * self.cols + j];
        *e += value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Horizontal concatenation. All operands must share the row count.
    pub fn hstack(parts: &[&IntMatrix]) -> Self {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows), "row count mismatch");
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    if !m.get(i, j).is_zero() {
                        out.set(i, off + j, m.get(i, j).clone());
                    }
                }
            }
            off += m.cols;
        }
        out
    }

    /// Block matrix assembly. `blocks[bi][bj]`, when present, must have shape
    /// `(row_dims[bi], col_dims[bj])`; absent blocks are zero.
    pub fn from_blocks(
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[Vec<Option<&IntMatrix>>],
    ) -> Self {
        let rows = row_dims.iter().sum();
        let cols = col_dims.iter().sum();
        let mut out = Self::zeros(rows, cols);
        let mut roff = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            let mut coff = 0;
            for (bj, blk) in brow.iter().enumerate() {
                if let Some(m) = blk {
                    assert_eq!(m.rows, row_dims[bi], "block row dim mismatch");
                    assert_eq!(m.cols, col_dims[bj], "block col dim mismatch");
                    for i in 0..m.rows {
                        for j in 0..m.cols {
                            if !m.get(i, j).is_zero() {
                                out.set(roff + i, coff + j, m.get(i, j).clone());
                            }
                        }
                    }
                }
                coff += col_dims[bj];
            }
            roff += row_dims[bi];
        }
        out
    }

    /// Matrix product, skipping zero entries of `self` so that products of
    /// sparse boundary matrices stay cheap.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = &mut out.data[i * other.cols + j];
                    *e += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] += a * &v[j];
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn select_columns(&self, indices: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, indices.len());
        for (jj, &j) in indices.iter().enumerate() {
            for i in 0..self.rows {
                if !self.get(i, j).is_zero() {
                    out.set(i, jj, self.get(i, j).clone());
                }
            }
        }
        out
    }

    /// Contiguous row slice `[from, from + count)` as a new matrix.
    pub fn row_slice(&self, from: usize, count: usize) -> IntMatrix {
        assert!(from + count <= self.rows, "row slice out of range");
        let mut out = Self::zeros(count, self.cols);
        for i in 0..count {
            for j in 0..self.cols {
                if !self.get(from + i, j).is_zero() {
                    out.set(i, j, self.get(from + i, j).clone());
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Entries as i128 when every entry fits; used to pick the fast
    /// elimination lane.
    pub(crate) fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(|x| i128::try_from(x).ok()).collect()
    }

    pub(crate) fn from_i128(rows: usize, cols: usize, data: &[i128]) -> Self {
        IntMatrix {
            rows,
            cols,
            data: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }
}

pub fn vec_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let s = self.get(i, j).to_string();
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

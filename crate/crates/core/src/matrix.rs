//! Dense matrices over an exact scalar and their canonical row reduction.

use crate::error::Error;
use crate::scalar::Scalar;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Result of a reduction to reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
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
            entries: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_row_vecs(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    /// The unique reduced row echelon form, its pivot columns and rank.
    /// The input is left untouched; zero rows sink to the bottom.
    pub fn rref(&self) -> Rref<T> {
        let mut rows = self.to_row_vecs();
        let pivots = T::reduce_rows(&mut rows);
        let matrix = Matrix::from_rows(rows).expect("reduction preserves the shape");
        Rref { matrix, pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{One, Zero};

    fn m(rows: usize, cols: usize, ints: &[i64]) -> Matrix<Rat> {
        Matrix::new(rows, cols, ints.iter().map(|&x| Rat::from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let mut e = vec![Rat::zero(); 9];
        for i in 0..3 {
            e[i * 3 + i] = Rat::one();
        }
        let id = Matrix::new(3, 3, e).unwrap();
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn proportional_rows_collapse() {
        let r = m(2, 2, &[1, 2, 2, 4]).rref();
        assert_eq!(r.matrix, m(2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn rows_are_swapped_into_pivot_order() {
        let r = m(2, 3, &[0, 1, 1, 1, 0, 1]).rref();
        assert_eq!(r.matrix, m(2, 3, &[1, 0, 1, 0, 1, 1]));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(3, 4, &[2, 4, -2, 6, 1, 1, 1, 1, 3, 5, -1, 7]);
        let once = a.rref();
        let twice = once.matrix.rref();
        assert_eq!(once, twice);
    }

    #[test]
    fn entry_count_is_checked() {
        assert!(matches!(
            Matrix::<Rat>::new(2, 2, vec![Rat::zero(); 3]),
            Err(Error::EntryCount { .. })
        ));
    }
}

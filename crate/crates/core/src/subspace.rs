//! Linear subspaces in canonical form.
//!
//! A subspace is stored as the reduced row echelon basis of its span, so two
//! subspaces are equal as sets exactly when their stored data are equal.
//! This canonicity is what lets the higher modules compare power spaces and
//! graded pieces by `==`.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    /// The span of the given vectors inside an ambient space of the given
    /// dimension. Zero vectors in the input are ignored.
    pub fn from_spanning(vectors: &[Vec<T>], ambient_dim: usize) -> Result<Self, Error> {
        if ambient_dim == 0 {
            return Err(Error::ZeroAmbientDim);
        }
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
        }
        let reduced = Matrix::from_rows(vectors.to_vec())?.rref();
        let rank = reduced.rank();
        let basis_rows: Vec<Vec<T>> = reduced
            .matrix
            .row_iter()
            .take(rank)
            .map(<[T]>::to_vec)
            .collect();
        let mut basis = Matrix::from_rows(basis_rows)?;
        if rank == 0 {
            // keep the column count meaningful for the zero subspace
            basis = Matrix::zero(0, ambient_dim);
        }
        Ok(Self {
            ambient_dim,
            basis,
            pivots: reduced.pivots,
        })
    }

    pub fn zero(ambient_dim: usize) -> Result<Self, Error> {
        Self::from_spanning(&[], ambient_dim)
    }

    pub fn full(ambient_dim: usize) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(ambient_dim);
        for i in 0..ambient_dim {
            let mut row = vec![T::zero(); ambient_dim];
            row[i] = T::one();
            rows.push(row);
        }
        Self::from_spanning(&rows, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[T]> {
        self.basis.row_iter()
    }

    /// Normal form of `v` modulo the subspace: the pivot coordinates are
    /// eliminated against the basis. `v` lies in the subspace exactly when
    /// the normal form is zero.
    pub fn reduce(&self, v: &[T]) -> Result<Vec<T>, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, b) in w.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * b.clone();
            }
        }
        Ok(w)
    }

    /// Exact membership test, no tolerance of any kind.
    pub fn member(&self, v: &[T]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// The space of linear functionals vanishing on the subspace, with
    /// respect to the standard dual pairing on coordinates.
    pub fn annihilator(&self) -> Self {
        let n = self.ambient_dim;
        let is_pivot = {
            let mut mask = vec![false; n];
            for &p in &self.pivots {
                mask[p] = true;
            }
            mask
        };
        let mut rows = Vec::with_capacity(n - self.dim());
        for f in 0..n {
            if is_pivot[f] {
                continue;
            }
            let mut w = vec![T::zero(); n];
            w[f] = T::one();
            for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
                w[p] = -row[f].clone();
            }
            rows.push(w);
        }
        Self::from_spanning(&rows, n).expect("ambient dimension is positive")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn vecs(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter()
            .map(|row| row.iter().map(|&x| Rat::from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn spanning_basics() {
        let full = Subspace::from_spanning(&vecs(&[&[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(full.dim(), 2);

        let scaled = Subspace::from_spanning(&vecs(&[&[2, 4]]), 2).unwrap();
        assert_eq!(scaled.dim(), 1);
        assert_eq!(scaled.basis().row(0), &vecs(&[&[1, 2]])[0][..]);

        let zero = Subspace::<Rat>::from_spanning(&[], 3).unwrap();
        assert_eq!(zero.dim(), 0);
    }

    #[test]
    fn ambient_zero_is_rejected() {
        assert_eq!(
            Subspace::<Rat>::from_spanning(&[], 0),
            Err(Error::ZeroAmbientDim)
        );
    }

    #[test]
    fn membership() {
        let line = Subspace::from_spanning(&vecs(&[&[1, 2]]), 2).unwrap();
        assert!(line.member(&vecs(&[&[1, 2]])[0]).unwrap());
        let other = Subspace::from_spanning(&vecs(&[&[0, 1]]), 2).unwrap();
        assert!(!other.member(&vecs(&[&[1, 0]])[0]).unwrap());
        let zero = Subspace::<Rat>::zero(2).unwrap();
        assert!(zero.member(&vecs(&[&[0, 0]])[0]).unwrap());
    }

    #[test]
    fn member_checks_lengths() {
        let line = Subspace::from_spanning(&vecs(&[&[1, 2]]), 2).unwrap();
        assert!(matches!(
            line.member(&vecs(&[&[1, 2, 3]])[0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn annihilators() {
        let full = Subspace::<Rat>::full(3).unwrap();
        assert_eq!(full.annihilator().dim(), 0);

        let plane = Subspace::from_spanning(&vecs(&[&[1, 0, 0], &[0, 1, 0]]), 3).unwrap();
        let ann = plane.annihilator();
        assert_eq!(ann, Subspace::from_spanning(&vecs(&[&[0, 0, 1]]), 3).unwrap());

        // the cubic system s^3, s^2 t, t^3 in Sym^3: the st^2 functional
        let l = Subspace::from_spanning(
            &vecs(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]),
            4,
        )
        .unwrap();
        assert_eq!(
            l.annihilator(),
            Subspace::from_spanning(&vecs(&[&[0, 0, 1, 0]]), 4).unwrap()
        );
    }

    #[test]
    fn double_annihilator_is_identity() {
        let v = Subspace::from_spanning(&vecs(&[&[1, 2, 3, 4], &[0, 1, -1, 2]]), 4).unwrap();
        assert_eq!(v.annihilator().annihilator(), v);
        assert_eq!(v.dim() + v.annihilator().dim(), 4);
    }
}

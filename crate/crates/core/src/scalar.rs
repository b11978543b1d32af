//! Exact field scalars and the row-reduction strategies attached to them.
//!
//! Every computation in this crate happens over an exact field: arithmetic
//! never rounds, and subspace comparisons are plain data comparisons of
//! canonical reduced row echelon bases. The [`Scalar`] trait captures what
//! the linear algebra needs from a coefficient field; the crate root fixes
//! the concrete alias [`crate::Rat`] used by all the higher-level modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field scalar.
///
/// Implementations must satisfy the field axioms exactly; nothing in this
/// crate tolerates rounding. The `reduce_rows` hook lets a scalar type plug
/// in a faster elimination strategy. Since the reduced row echelon form is
/// unique, overriding it can never change observable results, only speed.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Exact conversion from an arbitrary-precision integer.
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Bring `rows` into reduced row echelon form in place and return the
    /// pivot columns. Zero rows end up at the bottom.
    fn reduce_rows(rows: &mut [Vec<Self>]) -> Vec<usize> {
        plain_row_reduce(rows)
    }
}

/// Textbook Gauss-Jordan elimination over the scalar field.
///
/// This is the reference elimination path: scalar types may override
/// [`Scalar::reduce_rows`] with a faster strategy, and the test suites
/// compare those strategies against this one on random matrices.
pub fn plain_row_reduce<T: Scalar>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for x in rows[rank].iter_mut().skip(col) {
            *x = x.clone() / pivot.clone();
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Divide a row of integers by the gcd of its entries.
fn strip_content(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &row {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g > BigInt::one() {
        for x in &mut row {
            *x = &*x / &g;
        }
    }
    row
}

/// Fraction-free elimination for big rationals.
///
/// Rows are scaled to integers, eliminated by cross-multiplication with
/// content stripping after every update, and only divided back into
/// rationals once at the end. The output is the same unique RREF as
/// [`plain_row_reduce`], reached without intermediate rational arithmetic.
fn fraction_free_reduce(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = row
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect();
            strip_content(ints)
        })
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // The smallest pivot keeps the cross-multiplied entries short.
        let p = (rank..nrows)
            .filter(|&i| !m[i][col].is_zero())
            .min_by(|&i, &j| m[i][col].abs().cmp(&m[j][col].abs()));
        let Some(p) = p else { continue };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let a = pivot_row[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let b = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * p;
            }
            let stripped = strip_content(std::mem::take(row));
            *row = stripped;
        }
        pivots.push(col);
        rank += 1;
    }

    for (r, row) in m.into_iter().enumerate() {
        if r < rank {
            let d = row[pivots[r]].clone();
            rows[r] = row
                .into_iter()
                .map(|x| BigRational::new(x, d.clone()))
                .collect();
        } else {
            debug_assert!(row.iter().all(Zero::is_zero));
            rows[r] = vec![BigRational::zero(); ncols];
        }
    }
    pivots
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn reduce_rows(rows: &mut [Vec<Self>]) -> Vec<usize> {
        fraction_free_reduce(rows)
    }
}

/// Machine-word rationals. Still exact; panics instead of overflowing
/// silently when a value leaves the representable range.
impl Scalar for Rational64 {
    fn from_bigint(n: &BigInt) -> Self {
        let v = n
            .to_i64()
            .expect("integer does not fit in a Rational64 scalar");
        Rational64::from_integer(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fraction_free_matches_plain_on_fractions() {
        let base = vec![
            vec![rat(1, 2), rat(-3, 4), rat(5, 1)],
            vec![rat(2, 3), rat(1, 6), rat(0, 1)],
            vec![rat(7, 2), rat(-1, 12), rat(5, 3)],
        ];
        let mut a = base.clone();
        let mut b = base;
        let pa = fraction_free_reduce(&mut a);
        let pb = plain_row_reduce(&mut b);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
    }

    #[test]
    fn plain_reduce_works_for_rational64() {
        let mut rows = vec![
            vec![Rational64::new(0, 1), Rational64::new(1, 1), Rational64::new(1, 1)],
            vec![Rational64::new(1, 1), Rational64::new(0, 1), Rational64::new(1, 1)],
        ];
        let pivots = Rational64::reduce_rows(&mut rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows[0], vec![Rational64::new(1, 1), Rational64::new(0, 1), Rational64::new(1, 1)]);
        assert_eq!(rows[1], vec![Rational64::new(0, 1), Rational64::new(1, 1), Rational64::new(1, 1)]);
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Square matrix stored row-major. `get`/`set` take 1-based `(row, col)`.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    n: usize,
    cells: Vec<T>,
}

impl<T: Clone> DenseMatrix<T> {
    pub fn filled(n: usize, value: T) -> Self {
        DenseMatrix {
            n,
            cells: vec![value; n * n],
        }
    }
}

impl<T> DenseMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                r.len()
            )));
        }
        Ok(DenseMatrix {
            n,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                cells.push(f(i, j));
            }
        }
        DenseMatrix { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.cells[self.offset(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        let k = self.offset(row, col);
        self.cells[k] = value;
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        assert!((1..=self.n).contains(&i), "row {i} out of range");
        &self.cells[(i - 1) * self.n..i * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.cells.chunks(self.n.max(1))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            n: self.n,
            cells: self.cells.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<DenseMatrix<U>, E> {
        Ok(DenseMatrix {
            n: self.n,
            cells: self.cells.iter().map(f).collect::<std::result::Result<_, _>>()?,
        })
    }

    fn offset(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.n).contains(&row) && (1..=self.n).contains(&col),
            "({row}, {col}) outside a {0}x{0} matrix",
            self.n
        );
        (row - 1) * self.n + (col - 1)
    }
}

impl<T: Clone> DenseMatrix<T> {
    /// Row `i` of the result is row `n + 1 - i` of `self`, i.e. `R * self`
    /// for the exchange matrix `R`.
    pub fn reverse_rows(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for i in (1..=self.n).rev() {
            cells.extend_from_slice(self.row(i));
        }
        DenseMatrix { n: self.n, cells }
    }
}

impl<T: Field> DenseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        DenseMatrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The anti-diagonal permutation matrix.
    pub fn exchange(n: usize) -> Self {
        DenseMatrix::<T>::identity(n).reverse_rows()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, rhs.n
            )));
        }
        let n = self.n;
        let mut out = DenseMatrix::filled(n, T::zero());
        for i in 1..=n {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k + 1).iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.cells[(i - 1) * n + j];
                    *cell = cell.plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.first_non_identity().is_none()
    }

    /// First 1-based cell where `self` differs from the identity, as judged
    /// by [`Field::is_zero`].
    pub fn first_non_identity(&self) -> Option<(usize, usize)> {
        let one = T::one();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let v = self.get(i, j);
                let ok = if i == j { v.minus(&one).is_zero() } else { v.is_zero() };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}) [", self.n)?;
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|c| format!("{c:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int(rows: &[&[i64]]) -> DenseMatrix<BigRational> {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn reverse_rows_is_an_involution() {
        let x = int(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(x.reverse_rows().reverse_rows(), x);
        assert_eq!(x.reverse_rows().row(1), x.row(3));
    }

    #[test]
    fn reversed_identity_is_exchange() {
        let r = DenseMatrix::<BigRational>::identity(4).reverse_rows();
        assert_eq!(r, DenseMatrix::exchange(4));
        assert!(r.mul(&r).unwrap().is_identity());
    }

    #[test]
    fn reverse_rows_equals_left_product_with_exchange() {
        let x = int(&[&[1, -2, 3], &[0, 5, 6], &[7, 8, -9]]);
        let r = DenseMatrix::<BigRational>::exchange(3);
        assert_eq!(r.mul(&x).unwrap(), x.reverse_rows());
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![1.0, 2.0], vec![3.0]];
        assert!(DenseMatrix::from_rows(rows).is_err());
    }
}

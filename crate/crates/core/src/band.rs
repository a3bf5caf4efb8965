//! The cyclic nonadiagonal matrix in compact band form.
//!
//! Nine diagonals at offsets -4..=4 are stored as sequences indexed by row.
//! Six of those entries sit in the corners instead of on their diagonal: the
//! column of every band entry is its row plus the band offset, taken
//! cyclically. That gives `(1, n) = b_1`, `(1, n-1) = B_1`, `(2, n) = B_2`,
//! `(n-1, 1) = A_{n-1}`, `(n, 1) = a_n` and `(n, 2) = A_n`.

use std::fmt;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::seq::Seq;

/// Smallest order for which the band layout is well formed (wrap cells do
/// not collide with any diagonal).
pub const MIN_ORDER: usize = 8;

/// Smallest order accepted by the structured factorization.
pub const MIN_STRUCTURED_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Band {
    /// `d`, the main diagonal.
    Diag,
    /// `a`, offset +1; `a_n` wraps to `(n, 1)`.
    Super1,
    /// `A`, offset +2; `A_{n-1}`, `A_n` wrap.
    Super2,
    /// `M`, offset +3.
    Super3,
    /// `z`, offset +4.
    Super4,
    /// `b`, offset -1; `b_1` wraps to `(1, n)`.
    Sub1,
    /// `B`, offset -2; `B_1`, `B_2` wrap.
    Sub2,
    /// `N`, offset -3, rows 4..=n.
    Sub3,
    /// `R`, offset -4, rows 5..=n.
    Sub4,
}

impl Band {
    /// All bands, in file order.
    pub const ALL: [Band; 9] = [
        Band::Diag,
        Band::Super1,
        Band::Super2,
        Band::Super3,
        Band::Super4,
        Band::Sub1,
        Band::Sub2,
        Band::Sub3,
        Band::Sub4,
    ];

    /// Key used in the JSON file format.
    pub fn key(self) -> &'static str {
        match self {
            Band::Diag => "d",
            Band::Super1 => "a",
            Band::Super2 => "A",
            Band::Super3 => "M",
            Band::Super4 => "z",
            Band::Sub1 => "b",
            Band::Sub2 => "B",
            Band::Sub3 => "N",
            Band::Sub4 => "R",
        }
    }

    pub fn from_key(key: &str) -> Option<Band> {
        Band::ALL.into_iter().find(|b| b.key() == key)
    }

    /// Column minus row for the non-wrapping entries.
    pub fn offset(self) -> isize {
        match self {
            Band::Diag => 0,
            Band::Super1 => 1,
            Band::Super2 => 2,
            Band::Super3 => 3,
            Band::Super4 => 4,
            Band::Sub1 => -1,
            Band::Sub2 => -2,
            Band::Sub3 => -3,
            Band::Sub4 => -4,
        }
    }

    fn from_offset(offset: isize) -> Band {
        Band::ALL
            .into_iter()
            .find(|b| b.offset() == offset)
            .expect("offset within -4..=4")
    }

    /// First valid row subscript.
    pub fn first(self) -> usize {
        match self {
            Band::Sub3 => 4,
            Band::Sub4 => 5,
            _ => 1,
        }
    }

    /// Last valid row subscript for order `n`.
    pub fn last(self, n: usize) -> usize {
        match self {
            Band::Super3 => n - 3,
            Band::Super4 => n - 4,
            _ => n,
        }
    }

    /// Number of stored entries for order `n`.
    pub fn len(self, n: usize) -> usize {
        self.last(n) + 1 - self.first()
    }

    /// Column holding the entry with row subscript `i`.
    pub fn column(self, n: usize, i: usize) -> usize {
        let zero_based = (i as isize - 1 + self.offset()).rem_euclid(n as isize);
        zero_based as usize + 1
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// An `n x n` cyclic nonadiagonal matrix.
#[derive(Clone, PartialEq)]
pub struct CyclicNonadiagonal<T> {
    n: usize,
    bands: [Seq<T>; 9],
}

impl<T> CyclicNonadiagonal<T> {
    /// Builds from band vectors given in [`Band::ALL`] order, each listing its
    /// valid range in increasing subscript order.
    pub fn new(n: usize, bands: [Vec<T>; 9]) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER });
        }
        for (band, values) in Band::ALL.iter().zip(&bands) {
            if values.len() != band.len(n) {
                return Err(Error::BadBandLength {
                    band: *band,
                    expected: band.len(n),
                    actual: values.len(),
                });
            }
        }
        let mut k = 0;
        let bands = bands.map(|values| {
            let band = Band::ALL[k];
            k += 1;
            Seq::new(band.first(), values)
        });
        Ok(CyclicNonadiagonal { n, bands })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Band, usize) -> T) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER });
        }
        let bands = Band::ALL.map(|band| (band.first()..=band.last(n)).map(|i| f(band, i)).collect());
        Self::new(n, bands)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Checks the preconditions of the structured algorithm.
    pub fn validate(&self) -> Result<()> {
        if self.n < MIN_STRUCTURED_ORDER {
            return Err(Error::OrderTooSmall {
                n: self.n,
                min: MIN_STRUCTURED_ORDER,
            });
        }
        Ok(())
    }

    pub fn band(&self, band: Band) -> &Seq<T> {
        &self.bands[band.slot()]
    }

    /// Value with row subscript `i` on `band`. Panics outside the band range.
    pub fn get(&self, band: Band, i: usize) -> &T {
        &self.bands[band.slot()][i]
    }

    pub fn set(&mut self, band: Band, i: usize, value: T) {
        self.bands[band.slot()][i] = value;
    }

    /// Locates the stored entry for cell `(i, j)`, if the cell is structurally
    /// nonzero.
    pub fn locate(&self, i: usize, j: usize) -> Result<Option<(Band, usize)>> {
        let n = self.n;
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(Error::IndexOutOfRange { row: i, col: j, n });
        }
        let offset = j as isize - i as isize;
        if offset.abs() <= 4 {
            return Ok(Some((Band::from_offset(offset), i)));
        }
        let wrap = match (i, j) {
            (1, c) if c == n => Some((Band::Sub1, 1)),
            (1, c) if c == n - 1 => Some((Band::Sub2, 1)),
            (2, c) if c == n => Some((Band::Sub2, 2)),
            (r, 1) if r == n - 1 => Some((Band::Super2, n - 1)),
            (r, 1) if r == n => Some((Band::Super1, n)),
            (r, 2) if r == n => Some((Band::Super2, n)),
            _ => None,
        };
        Ok(wrap)
    }

    /// Structurally nonzero cells of row `i` as `(column, value)`.
    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        let n = self.n;
        Band::ALL.into_iter().filter_map(move |band| {
            self.band(band)
                .get(i)
                .map(|value| (band.column(n, i), value))
        })
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> CyclicNonadiagonal<U> {
        let bands = std::array::from_fn(|k| self.bands[k].map(&mut f));
        CyclicNonadiagonal { n: self.n, bands }
    }

    pub fn try_map<U, E>(
        &self,
        mut f: impl FnMut(&T) -> std::result::Result<U, E>,
    ) -> std::result::Result<CyclicNonadiagonal<U>, E> {
        let mut out: Vec<Seq<U>> = Vec::with_capacity(9);
        for seq in &self.bands {
            let values = seq.values().iter().map(&mut f).collect::<std::result::Result<Vec<_>, _>>()?;
            out.push(Seq::new(seq.first(), values));
        }
        let bands: [Seq<U>; 9] = out.try_into().unwrap_or_else(|_| unreachable!());
        Ok(CyclicNonadiagonal { n: self.n, bands })
    }
}

impl<T: Field> CyclicNonadiagonal<T> {
    /// Value of cell `(i, j)`, zero outside the nine bands and six wraps.
    pub fn entry(&self, i: usize, j: usize) -> Result<T> {
        Ok(match self.locate(i, j)? {
            Some((band, k)) => self.get(band, k).clone(),
            None => T::zero(),
        })
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let mut out = DenseMatrix::filled(self.n, T::zero());
        for i in 1..=self.n {
            for (j, v) in self.row_entries(i) {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// Extracts the bands from a dense matrix, rejecting nonzero cells
    /// outside the nonadiagonal pattern.
    pub fn from_dense(x: &DenseMatrix<T>) -> Result<Self> {
        let n = x.order();
        let m = CyclicNonadiagonal::from_fn(n, |band, i| x.get(i, band.column(n, i)).clone())?;
        for i in 1..=n {
            for j in 1..=n {
                if m.locate(i, j)?.is_none() && !x.get(i, j).is_zero() {
                    return Err(Error::DimensionMismatch(format!(
                        "cell ({i}, {j}) is nonzero but outside the nonadiagonal pattern"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// `self * x` using only the structurally nonzero cells of `self`.
    pub fn mul_dense(&self, x: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
        let n = self.n;
        if x.order() != n {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply order {n} by order {}",
                x.order()
            )));
        }
        let mut out = DenseMatrix::filled(n, T::zero());
        for i in 1..=n {
            let mut acc = vec![T::zero(); n];
            for (k, a) in self.row_entries(i) {
                if a.is_zero() {
                    continue;
                }
                for (cell, b) in acc.iter_mut().zip(x.row(k)) {
                    *cell = cell.plus(&a.times(b));
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.set(i, j + 1, v);
            }
        }
        Ok(out)
    }
}

impl<T: fmt::Debug> fmt::Debug for CyclicNonadiagonal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CyclicNonadiagonal(n = {}) {{", self.n)?;
        for (band, seq) in Band::ALL.iter().zip(&self.bands) {
            let vals: Vec<String> = seq.values().iter().map(|v| format!("{v:?}")).collect();
            writeln!(f, "  {band}[{}..]: [{}]", seq.first(), vals.join(", "))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn identity(n: usize) -> CyclicNonadiagonal<Scalar> {
        CyclicNonadiagonal::from_fn(n, |band, _| {
            if band == Band::Diag {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .unwrap()
    }

    #[test]
    fn band_lengths() {
        let lens: Vec<usize> = Band::ALL.iter().map(|b| b.len(12)).collect();
        assert_eq!(lens, vec![12, 12, 12, 9, 8, 12, 12, 9, 8]);
    }

    #[test]
    fn wrap_columns() {
        let n = 12;
        assert_eq!(Band::Sub1.column(n, 1), 12);
        assert_eq!(Band::Sub2.column(n, 1), 11);
        assert_eq!(Band::Sub2.column(n, 2), 12);
        assert_eq!(Band::Super2.column(n, 11), 1);
        assert_eq!(Band::Super1.column(n, 12), 1);
        assert_eq!(Band::Super2.column(n, 12), 2);
        assert_eq!(Band::Super4.column(n, 8), 12);
        assert_eq!(Band::Sub4.column(n, 5), 1);
    }

    #[test]
    fn short_z_band_is_rejected() {
        let mut bands: [Vec<Scalar>; 9] = Band::ALL.map(|b| vec![Scalar::one(); b.len(12)]);
        bands[4].pop();
        let err = CyclicNonadiagonal::new(12, bands).unwrap_err();
        assert_eq!(
            err,
            Error::BadBandLength {
                band: Band::Super4,
                expected: 8,
                actual: 7
            }
        );
    }

    #[test]
    fn order_ten_is_too_small_for_the_structured_path() {
        let m = identity(10);
        assert_eq!(m.validate(), Err(Error::OrderTooSmall { n: 10, min: 12 }));
        assert!(identity(12).validate().is_ok());
    }

    #[test]
    fn identity_bands_give_identity() {
        assert!(identity(12).to_dense().is_identity());
    }

    #[test]
    fn cells_outside_pattern_are_zero() {
        let m = CyclicNonadiagonal::from_fn(12, |_, _| Scalar::one()).unwrap();
        assert!(m.entry(1, 7).unwrap().is_zero());
        assert!(m.entry(2, 11).unwrap().is_zero());
        assert_eq!(m.entry(1, 12).unwrap(), Scalar::one());
        assert!(m.entry(0, 1).is_err());
        assert!(m.entry(1, 13).is_err());
    }

    #[test]
    fn generic_nonzero_count() {
        for n in [8, 9, 12, 17] {
            let m = CyclicNonadiagonal::from_fn(n, |_, _| Scalar::one()).unwrap();
            let dense = m.to_dense();
            let count = dense.rows().flatten().filter(|v| !v.is_zero()).count();
            assert_eq!(count, 9 * n - 20 + 6, "n = {n}");
        }
    }
}

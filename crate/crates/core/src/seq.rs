use std::ops::{Index, IndexMut};

/// A vector addressed by 1-based subscripts starting at `first`.
///
/// Band and coefficient sequences do not all start at index 1 (the third
/// subdiagonal starts at row 4, the fourth at row 5), so each carries its own
/// offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seq<T> {
    first: usize,
    values: Vec<T>,
}

impl<T> Seq<T> {
    pub fn new(first: usize, values: Vec<T>) -> Self {
        Seq { first, values }
    }

    pub fn first(&self) -> usize {
        self.first
    }

    /// Last valid subscript; `first - 1` when empty.
    pub fn last(&self) -> usize {
        self.first + self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.first && i < self.first + self.values.len()
    }

    pub fn get(&self, i: usize) -> Option<&T> {
        if self.contains(i) {
            Some(&self.values[i - self.first])
        } else {
            None
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `(subscript, value)` pairs in increasing subscript order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.values.iter().enumerate().map(move |(k, v)| (k + self.first, v))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Seq<U> {
        Seq {
            first: self.first,
            values: self.values.iter().map(f).collect(),
        }
    }
}

impl<T> Index<usize> for Seq<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        assert!(
            self.contains(i),
            "subscript {i} outside {}..={}",
            self.first,
            self.last()
        );
        &self.values[i - self.first]
    }
}

impl<T> IndexMut<usize> for Seq<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        assert!(
            self.contains(i),
            "subscript {i} outside {}..={}",
            self.first,
            self.last()
        );
        &mut self.values[i - self.first]
    }
}

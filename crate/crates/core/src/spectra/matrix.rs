use num_traits::Float;

/// Dense square matrix, row-major, intended to hold symmetric data.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Float> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    /// Panics if `rows` is not square.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {r} has length {}, expected {n}", row.len());
            m.data[r * n..(r + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.n + c] = v;
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `Σ a_ij²`.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// First `(r, c)` with `|a_rc − a_cr| > tol`.
    pub fn asymmetry(&self, tol: T) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|r| (r + 1..self.n).map(move |c| (r, c)))
            .find(|&(r, c)| (self.get(r, c) - self.get(c, r)).abs() > tol)
    }

    pub(crate) fn as_slice(&self) -> &[T] {
        &self.data
    }
}

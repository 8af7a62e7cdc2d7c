//! Multigraded sparse matrices and the free resolution container.

use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, ScalarMonomial};

/// One nonzero matrix entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: ScalarMonomial,
}

/// Sparse matrix with single-term entries and multidegree labels on rows
/// and columns. Entries are kept sorted by `(col, row)`; zeros are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Entry>,
    row_degrees: Vec<Monomial>,
    col_degrees: Vec<Monomial>,
}

impl SparseMatrix {
    pub fn new(
        row_degrees: Vec<Monomial>,
        col_degrees: Vec<Monomial>,
        entries: impl IntoIterator<Item = Entry>,
    ) -> Self {
        let mut m = SparseMatrix {
            rows: row_degrees.len(),
            cols: col_degrees.len(),
            entries: Vec::new(),
            row_degrees,
            col_degrees,
        };
        for e in entries {
            m.set(e.row, e.col, e.value);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_degrees(&self) -> &[Monomial] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[Monomial] {
        &self.col_degrees
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn position(&self, row: usize, col: usize) -> std::result::Result<usize, usize> {
        self.entries
            .binary_search_by(|e| (e.col, e.row).cmp(&(col, row)))
    }

    pub fn get(&self, row: usize, col: usize) -> ScalarMonomial {
        match self.position(row, col) {
            Ok(idx) => self.entries[idx].value.clone(),
            Err(_) => ScalarMonomial::zero(),
        }
    }

    /// Overwrites one entry; a zero value removes it.
    ///
    /// Panics when `(row, col)` lies outside the matrix.
    pub fn set(&mut self, row: usize, col: usize, value: ScalarMonomial) {
        assert!(
            row < self.rows && col < self.cols,
            "entry ({row}, {col}) out of bounds"
        );
        match (self.position(row, col), value.is_zero()) {
            (Ok(idx), true) => {
                self.entries.remove(idx);
            }
            (Ok(idx), false) => self.entries[idx].value = value,
            (Err(_), true) => {}
            (Err(idx), false) => self.entries.insert(idx, Entry { row, col, value }),
        }
    }

    /// Appends a column with the given degree label and entries.
    pub fn push_column(
        &mut self,
        degree: Monomial,
        entries: impl IntoIterator<Item = (usize, ScalarMonomial)>,
    ) {
        let col = self.cols;
        self.cols += 1;
        self.col_degrees.push(degree);
        for (row, value) in entries {
            self.set(row, col, value);
        }
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &Entry> {
        let start = self.entries.partition_point(|e| e.col < col);
        self.entries[start..]
            .iter()
            .take_while(move |e| e.col == col)
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(move |e| e.row == row)
    }

    /// Number of nonzero entries in each column.
    pub fn column_supports(&self) -> Vec<usize> {
        let mut out = vec![0; self.cols];
        for e in &self.entries {
            out[e.col] += 1;
        }
        out
    }

    /// Multiplies a whole column by -1.
    pub fn negate_column(&mut self, col: usize) {
        for e in self.entries.iter_mut().filter(|e| e.col == col) {
            e.value = -e.value.clone();
        }
    }

    /// Column `col` as a dense vector.
    pub fn dense_column(&self, col: usize) -> Vec<ScalarMonomial> {
        let mut out = vec![ScalarMonomial::zero(); self.rows];
        for e in self.column(col) {
            out[e.row] = e.value.clone();
        }
        out
    }
}

/// A length-three free resolution `0 -> R^m -> R^(n+m-1) -> R^n -> R`
/// together with where each basis element came from.
///
/// `provenance2[c]` is the generator pair behind column `c` of `f2`;
/// `provenance3[c]` is the generator triple behind column `c` of `f3`.
/// Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    pub ideal: MonomialIdeal,
    pub f1: SparseMatrix,
    pub f2: SparseMatrix,
    pub f3: SparseMatrix,
    pub provenance2: Vec<(usize, usize)>,
    pub provenance3: Vec<Vec<usize>>,
}

impl FreeResolution {
    /// Ranks `(1, n, n + m - 1, m)` of the free modules `F_0 .. F_3`.
    pub fn ranks(&self) -> [usize; 4] {
        [
            self.f1.rows(),
            self.f1.cols(),
            self.f2.cols(),
            self.f3.cols(),
        ]
    }

    /// Betti numbers. Checks the rank shape in debug builds.
    pub fn betti(&self) -> [usize; 4] {
        let r = self.ranks();
        debug_assert!(self.has_rank_shape(), "rank shape broken: {r:?}");
        r
    }

    /// `rank F_2 = n + m - 1` and the matrices chain together.
    pub fn has_rank_shape(&self) -> bool {
        let [one, n, mid, m] = self.ranks();
        one == 1 && self.f2.rows() == n && self.f3.rows() == mid && mid + 1 == n + m
    }

    pub fn n(&self) -> usize {
        self.f1.cols()
    }

    pub fn m(&self) -> usize {
        self.f3.cols()
    }

    /// Column of `f2` holding `sigma_ij` (`i < j`).
    pub fn f2_column_of(&self, i: usize, j: usize) -> Option<usize> {
        self.provenance2.iter().position(|&p| p == (i, j))
    }
}

/// The row matrix `[m_1 ... m_n]`.
pub fn first_differential(ideal: &MonomialIdeal) -> SparseMatrix {
    SparseMatrix::new(
        vec![Monomial::ONE],
        ideal.gens().to_vec(),
        ideal.gens().iter().enumerate().map(|(col, g)| Entry {
            row: 0,
            col,
            value: ScalarMonomial::from_int(1, *g),
        }),
    )
}

//! Dense exact matrices and the linear maps they realize.

use std::fmt;

use super::{AlgebraError, Field, Scalar};

/// A dense row-major matrix over a single exact field.
///
/// Shape mismatches in the arithmetic helpers are logic errors and panic, the same
/// way slice indexing does. Fallible entry points live on [`LinearMap`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

/// Output of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub echelon: ExactMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, field, entries }
    }

    /// Builds a matrix from rows; all rows must share one length and all entries `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(AlgebraError::RaggedRows);
            }
            for x in row {
                if x.field() != field {
                    return Err(AlgebraError::MixedFields);
                }
                entries.push(x);
            }
        }
        Ok(ExactMatrix { rows: n, cols, field, entries })
    }

    /// Integer entries, handy for fixtures and tests.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn row_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_fn(field, 1, v.len(), |_, j| v[j].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        assert_eq!(value.field(), self.field, "entry from another field");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Largest entry magnitude (`0` for empty or zero matrices).
    pub fn max_norm(&self) -> Scalar {
        self.entries
            .iter()
            .max_by(|a, b| a.magnitude_cmp(b))
            .map(Scalar::magnitude)
            .unwrap_or_else(|| self.field.zero())
    }

    /// Matrix product `self · rhs`. Zero entries of `self` are skipped, so products
    /// with permutation-like factors cost one pass over the output.
    pub fn matmul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul: {}x{} · {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        self.assert_same_field(rhs);
        // Nonzero pattern of each rhs row, so sparse factors cost only their support.
        let rhs_support: Vec<Vec<(usize, &Scalar)>> = (0..rhs.rows)
            .map(|k| rhs.row(k).iter().enumerate().filter(|(_, b)| !b.is_zero()).collect())
            .collect();
        let mut out = ExactMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, a) in self.entries[i * self.cols..(i + 1) * self.cols].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if a.is_one() {
                    for &(j, b) in &rhs_support[k] {
                        out_row[j] += b;
                    }
                } else {
                    for &(j, b) in &rhs_support[k] {
                        out_row[j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; the basis vector `e_i ⊗ e_j` sits at index `i · dim_rhs + j`.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.assert_same_field(rhs);
        let (r2, c2) = (rhs.rows, rhs.cols);
        let mut out = ExactMatrix::zeros(self.field, self.rows * r2, self.cols * c2);
        let out_cols = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * r2 + k) * out_cols + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    fn zip_with(&self, rhs: &ExactMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        self.assert_same_field(rhs);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn assert_same_field(&self, rhs: &ExactMatrix) {
        assert_eq!(self.field, rhs.field, "matrices over different fields");
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.assert_same_field(rhs);
        let mut out = ExactMatrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        self.assert_same_field(rhs);
        ExactMatrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        self.assert_same_field(rhs);
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        ExactMatrix { rows: self.rows + rhs.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Applies the matrix to a coordinate column.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let x = m.get(row, j);
                if !x.is_zero() {
                    let y = x * &inv;
                    m.entries[row * m.cols + j] = y;
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let p = &m.entries[row * m.cols + j];
                    if p.is_zero() {
                        continue;
                    }
                    let delta = &factor * p;
                    m.entries[r * m.cols + j] -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref { echelon: m, pivots, rank }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Two-sided inverse, `None` when singular or non-square.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&ExactMatrix::identity(self.field, n)).rref();
        if aug.pivots.iter().take(n).copied().ne(0..n) || aug.rank < n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.echelon.select_columns(&cols))
    }

    /// A particular solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = self.hstack(&ExactMatrix::column_vector(self.field, b)).rref();
        if aug.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in aug.pivots.iter().enumerate() {
            x[p] = aug.echelon.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix<{}>{}x{} [", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

impl serde::Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

/// A linear map `V → W` between coordinate spaces.
///
/// Column convention: the matrix is `dim W × dim V` and its columns are the images of
/// the domain basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: ExactMatrix,
}

impl LinearMap {
    pub fn new(matrix: ExactMatrix) -> Self {
        LinearMap { matrix }
    }

    /// Checks that `matrix` has the stated shape before wrapping it.
    pub fn with_dims(matrix: ExactMatrix, domain_dim: usize, codomain_dim: usize) -> Result<Self, AlgebraError> {
        if matrix.rows() != codomain_dim || matrix.cols() != domain_dim {
            return Err(AlgebraError::Shape {
                expected: (codomain_dim, domain_dim),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap::new(ExactMatrix::identity(field, n))
    }

    pub fn zero(field: Field, domain_dim: usize, codomain_dim: usize) -> Self {
        LinearMap::new(ExactMatrix::zeros(field, codomain_dim, domain_dim))
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.matrix
    }

    /// `self` followed by `next`, i.e. `next ∘ self`.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        LinearMap::new(next.matrix.matmul(&self.matrix))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.matmul(&inner.matrix))
    }

    /// Fallible composition for maps that come from user input.
    pub fn try_compose(&self, inner: &LinearMap) -> Result<LinearMap, AlgebraError> {
        if inner.codomain_dim() != self.domain_dim() {
            return Err(AlgebraError::Compose { inner: inner.codomain_dim(), outer: self.domain_dim() });
        }
        Ok(self.compose(inner))
    }

    /// `self ⊗ rhs` under the row-major index convention.
    pub fn tensor(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.kron(&rhs.matrix))
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap::new(self.matrix.transpose())
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.add(&rhs.matrix))
    }

    pub fn sub(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.sub(&rhs.matrix))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(LinearMap::new)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn direct_sum(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.direct_sum(&rhs.matrix))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({} -> {}) {:?}", self.domain_dim(), self.codomain_dim(), self.matrix)
    }
}

impl serde::Serialize for LinearMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.matrix.serialize(serializer)
    }
}

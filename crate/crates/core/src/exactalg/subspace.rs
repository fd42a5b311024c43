//! Subspaces in canonical echelon form, kernels, images and quotients.

use super::{ExactMatrix, Field, LinearMap, Scalar};

/// A subspace of `K^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon form. Two spanning sets of the same subspace give equal values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        SubspaceBasis { field, ambient_dim, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Self::from_matrix_rows(&ExactMatrix::identity(field, ambient_dim))
    }

    /// The span of `vectors`, each of length `ambient_dim`.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient_dim);
        }
        let rows = ExactMatrix::from_fn(field, vectors.len(), ambient_dim, |i, j| {
            assert_eq!(vectors[i].len(), ambient_dim, "vector length differs from ambient dimension");
            vectors[i][j].clone()
        });
        Self::from_matrix_rows(&rows)
    }

    /// The row space of `m`.
    pub fn from_matrix_rows(m: &ExactMatrix) -> Self {
        let r = m.rref();
        let vectors = (0..r.rank).map(|i| r.echelon.row(i).to_vec()).collect();
        SubspaceBasis { field: m.field(), ambient_dim: m.cols(), vectors, pivots: r.pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a `dim × ambient_dim` matrix.
    pub fn as_rows(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.dim(), self.ambient_dim, |i, j| self.vectors[i][j].clone())
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn as_columns(&self) -> ExactMatrix {
        self.as_rows().transpose()
    }

    /// Reduces `v` against the echelon rows; the result vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &(&c * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        SubspaceBasis::span(self.field, self.ambient_dim, &all)
    }

    /// `self ∩ other`, from the kernel of `[A | -B]` where the columns of `A`, `B` span
    /// the two subspaces.
    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimensions differ");
        if self.dim() == 0 || other.dim() == 0 {
            return SubspaceBasis::zero(self.field, self.ambient_dim);
        }
        let a = self.as_columns();
        let neg_b = other.as_columns().scale(&-self.field.one());
        let kernel = kernel_basis(&LinearMap::new(a.hstack(&neg_b)));
        let coeffs: Vec<Vec<Scalar>> = kernel.vectors.iter().map(|k| k[..self.dim()].to_vec()).collect();
        let vectors: Vec<Vec<Scalar>> = coeffs.iter().map(|c| a.apply(c)).collect();
        SubspaceBasis::span(self.field, self.ambient_dim, &vectors)
    }

    /// Coordinates not occupied by a pivot, in increasing order.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.ambient_dim - self.dim());
        let mut pivots = self.pivots.iter().peekable();
        for j in 0..self.ambient_dim {
            if pivots.peek() == Some(&&j) {
                pivots.next();
            } else {
                free.push(j);
            }
        }
        free
    }
}

/// Basis of `{v : f(v) = 0}`.
pub fn kernel_basis(f: &LinearMap) -> SubspaceBasis {
    let field = f.field();
    let n = f.domain_dim();
    let r = f.matrix().rref();
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &p in &r.pivots {
            s[p] = true;
        }
        s
    };
    let vectors: Vec<Vec<Scalar>> = (0..n)
        .filter(|&j| !pivot_set[j])
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.echelon.get(row, free);
            }
            v
        })
        .collect();
    SubspaceBasis::span(field, n, &vectors)
}

/// Basis of the column space of `f`.
pub fn image_basis(f: &LinearMap) -> SubspaceBasis {
    SubspaceBasis::from_matrix_rows(&f.matrix().transpose())
}

/// A particular solution of `f(x) = b`, `None` if `b` is not in the image.
pub fn solve_linear_system(f: &LinearMap, b: &[Scalar]) -> Option<Vec<Scalar>> {
    f.matrix().solve(b)
}

pub fn intersect_subspaces(a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
    a.intersect(b)
}

pub fn direct_sum(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.direct_sum(g)
}

/// The projection `K^n → K^n / R` together with a section.
///
/// The quotient basis is the set of non-pivot coordinates of the relation echelon
/// form, so `section` sends the k-th quotient basis vector to the k-th free unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub proj: LinearMap,
    pub section: LinearMap,
    pub representatives: Vec<usize>,
}

pub fn quotient(ambient_dim: usize, relations: &SubspaceBasis) -> Quotient {
    assert_eq!(relations.ambient_dim(), ambient_dim, "relations live in another space");
    let field = relations.field();
    let free = relations.free_coordinates();
    let qdim = free.len();
    // proj(e_j) = reduce(e_j) restricted to the free coordinates.
    let mut proj = ExactMatrix::zeros(field, qdim, ambient_dim);
    let position: Vec<Option<usize>> = {
        let mut pos = vec![None; ambient_dim];
        for (k, &j) in free.iter().enumerate() {
            pos[j] = Some(k);
        }
        pos
    };
    for j in 0..ambient_dim {
        if let Some(k) = position[j] {
            proj.set(k, j, field.one());
        }
    }
    for (row, &p) in relations.vectors().iter().zip(relations.pivots()) {
        // e_p ≡ e_p - row, which is supported on free coordinates only.
        for (j, x) in row.iter().enumerate() {
            if j == p || x.is_zero() {
                continue;
            }
            let k = position[j].expect("echelon row has zeros on other pivots");
            proj.set(k, p, -x);
        }
    }
    let section = ExactMatrix::from_fn(field, ambient_dim, qdim, |i, k| {
        if free[k] == i {
            field.one()
        } else {
            field.zero()
        }
    });
    Quotient { proj: LinearMap::new(proj), section: LinearMap::new(section), representatives: free }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let f = Field::Rational;
        assert_eq!(kernel_basis(&LinearMap::identity(f, 3)).dim(), 0);
        assert_eq!(kernel_basis(&LinearMap::zero(f, 3, 2)).dim(), 3);
        let k = kernel_basis(&LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 1]])));
        assert_eq!(k.vectors(), &[ints(f, &[1, -1])]);
    }

    #[test]
    fn quotient_examples() {
        let f = Field::Rational;
        let q = quotient(3, &SubspaceBasis::zero(f, 3));
        assert_eq!(q.proj, LinearMap::identity(f, 3));
        assert_eq!(q.section, LinearMap::identity(f, 3));

        let rel = SubspaceBasis::span(f, 2, &[ints(f, &[1, -1])]);
        let q = quotient(2, &rel);
        assert_eq!(q.proj.codomain_dim(), 1);
        assert!(q.proj.apply(&ints(f, &[1, -1])).iter().all(Scalar::is_zero));
        assert_eq!(q.proj.compose(&q.section), LinearMap::identity(f, 1));
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rational;
        let a = SubspaceBasis::span(f, 3, &[ints(f, &[1, 0, 0]), ints(f, &[0, 1, 0])]);
        let b = SubspaceBasis::span(f, 3, &[ints(f, &[0, 1, 0]), ints(f, &[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.vectors(), &[ints(f, &[0, 1, 0])]);
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn image_and_solve() {
        let f = Field::Rational;
        let m = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 2], &[2, 4], &[0, 0]]));
        let im = image_basis(&m);
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&ints(f, &[1, 2, 0])));
        assert!(solve_linear_system(&m, &ints(f, &[2, 4, 0])).is_some());
        assert!(solve_linear_system(&m, &ints(f, &[0, 0, 1])).is_none());
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::MoncatError;
use crate::exactalg::{ExactMatrix, Field, LinearMap};

/// A word of object atoms; the empty word is the unit object.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjectWord(pub Vec<String>);

impl ObjectWord {
    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = S>) -> Self {
        ObjectWord(atoms.into_iter().map(Into::into).collect())
    }

    pub fn unit() -> Self {
        ObjectWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.0
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut atoms = self.0.clone();
        atoms.extend(other.0.iter().cloned());
        ObjectWord(atoms)
    }

    /// The word obtained by moving atom `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &Permutation) -> ObjectWord {
        assert_eq!(perm.len(), self.len(), "permutation size differs from word length");
        let mut out = vec![String::new(); self.len()];
        for (i, atom) in self.0.iter().enumerate() {
            out[perm.0[i]] = atom.clone();
        }
        ObjectWord(out)
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// A permutation of word positions: `perm[i]` is where the atom at domain position `i` ends up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len(), "permutation sizes differ");
        Permutation(self.0.iter().map(|&i| next.0[i]).collect())
    }

    /// Block juxtaposition `self ⊕ other`.
    pub fn juxtapose(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().copied().chain(other.0.iter().map(|&j| j + n)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.len()];
        self.0.iter().all(|&p| p < seen.len() && !std::mem::replace(&mut seen[p], true))
    }
}

/// A morphism built from identities and adjacent symmetries by composition and tensor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymExpr {
    Identity(ObjectWord),
    /// Exchanges the atoms at `position` and `position + 1`.
    AdjacentSwap(ObjectWord, usize),
    /// `first` then `then`.
    Compose(Box<SymExpr>, Box<SymExpr>),
    Tensor(Box<SymExpr>, Box<SymExpr>),
}

impl SymExpr {
    pub fn id(word: ObjectWord) -> Self {
        SymExpr::Identity(word)
    }

    pub fn swap(word: ObjectWord, position: usize) -> Self {
        SymExpr::AdjacentSwap(word, position)
    }

    pub fn then(self, next: SymExpr) -> Self {
        SymExpr::Compose(Box::new(self), Box::new(next))
    }

    pub fn tensor(self, right: SymExpr) -> Self {
        SymExpr::Tensor(Box::new(self), Box::new(right))
    }

    pub fn domain(&self) -> ObjectWord {
        match self {
            SymExpr::Identity(w) | SymExpr::AdjacentSwap(w, _) => w.clone(),
            SymExpr::Compose(first, _) => first.domain(),
            SymExpr::Tensor(l, r) => l.domain().concat(&r.domain()),
        }
    }

    /// Checks well-formedness and returns the codomain word.
    pub fn codomain(&self) -> Result<ObjectWord, MoncatError> {
        match self {
            SymExpr::Identity(w) => Ok(w.clone()),
            SymExpr::AdjacentSwap(w, i) => {
                if *i + 1 >= w.len() {
                    return Err(MoncatError::SwapPosition { position: *i, word: w.clone() });
                }
                let mut atoms = w.0.clone();
                atoms.swap(*i, *i + 1);
                Ok(ObjectWord(atoms))
            }
            SymExpr::Compose(first, then) => {
                let mid = first.codomain()?;
                let dom = then.domain();
                if mid != dom {
                    return Err(MoncatError::ComposeMismatch { codomain: mid, domain: dom });
                }
                then.codomain()
            }
            SymExpr::Tensor(l, r) => Ok(l.codomain()?.concat(&r.codomain()?)),
        }
    }

    /// Number of adjacent swaps plus identities, a rough size measure.
    pub fn size(&self) -> usize {
        match self {
            SymExpr::Identity(_) | SymExpr::AdjacentSwap(..) => 1,
            SymExpr::Compose(a, b) | SymExpr::Tensor(a, b) => a.size() + b.size(),
        }
    }

    /// The expression realizing `perm` on `word`, as a product of adjacent swaps.
    pub fn from_permutation(word: &ObjectWord, perm: &Permutation) -> Result<SymExpr, MoncatError> {
        if perm.len() != word.len() || !perm.is_valid() {
            return Err(MoncatError::BadPermutation { len: word.len() });
        }
        // Bubble sort the target positions; each exchange is one adjacent swap.
        let mut targets = perm.0.clone();
        let mut current = word.clone();
        let mut expr = SymExpr::Identity(word.clone());
        let n = targets.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(pass + 1) {
                if targets[i] > targets[i + 1] {
                    expr = expr.then(SymExpr::AdjacentSwap(current.clone(), i));
                    current.0.swap(i, i + 1);
                    targets.swap(i, i + 1);
                }
            }
        }
        Ok(expr)
    }

    /// The block symmetry `u ⊗ v → v ⊗ u`.
    pub fn block_swap(u: &ObjectWord, v: &ObjectWord) -> SymExpr {
        let (a, b) = (u.len(), v.len());
        let perm = Permutation((0..a).map(|i| i + b).chain(0..b).collect());
        Self::from_permutation(&u.concat(v), &perm).expect("block permutation is valid")
    }
}

/// The permutation underlying an expression.
pub fn perm_of(e: &SymExpr) -> Result<Permutation, MoncatError> {
    e.codomain()?;
    Ok(perm_unchecked(e))
}

fn perm_unchecked(e: &SymExpr) -> Permutation {
    match e {
        SymExpr::Identity(w) => Permutation::identity(w.len()),
        SymExpr::AdjacentSwap(w, i) => Permutation::transposition(w.len(), *i),
        SymExpr::Compose(a, b) => perm_unchecked(a).then(&perm_unchecked(b)),
        SymExpr::Tensor(a, b) => perm_unchecked(a).juxtapose(&perm_unchecked(b)),
    }
}

/// Decides equality of two parallel expressions by comparing their permutations.
pub fn coherence_equal(e1: &SymExpr, e2: &SymExpr) -> Result<bool, MoncatError> {
    let (d1, c1) = (e1.domain(), e1.codomain()?);
    let (d2, c2) = (e2.domain(), e2.codomain()?);
    if d1 != d2 || c1 != c2 {
        return Err(MoncatError::BoundaryMismatch { left: (d1, c1), right: (d2, c2) });
    }
    Ok(perm_unchecked(e1) == perm_unchecked(e2))
}

/// Evaluates an expression in coordinate vector spaces of the given atom dimensions.
pub fn eval_in_vec(e: &SymExpr, dims: &BTreeMap<String, usize>, field: Field) -> Result<LinearMap, MoncatError> {
    e.codomain()?;
    let columns = eval_columns(e, dims)?;
    let n = columns.len();
    let mut m = ExactMatrix::zeros(field, n, n);
    for (j, &i) in columns.iter().enumerate() {
        m.set(i, j, field.one());
    }
    Ok(LinearMap::new(m))
}

fn word_dims(w: &ObjectWord, dims: &BTreeMap<String, usize>) -> Result<Vec<usize>, MoncatError> {
    w.0.iter()
        .map(|a| dims.get(a).copied().ok_or_else(|| MoncatError::MissingDimension(a.clone())))
        .collect()
}

/// Every generator is a 0/1 permutation matrix, so the value is kept as the row index of
/// the single `1` in each column: `⊗` multiplies indices, `;` composes them.
fn eval_columns(e: &SymExpr, dims: &BTreeMap<String, usize>) -> Result<Vec<usize>, MoncatError> {
    Ok(match e {
        SymExpr::Identity(w) => (0..word_dims(w, dims)?.iter().product()).collect(),
        SymExpr::AdjacentSwap(w, i) => {
            let d = word_dims(w, dims)?;
            let (a, b) = (d[*i], d[*i + 1]);
            let prefix: usize = d[..*i].iter().product();
            let suffix: usize = d[*i + 2..].iter().product();
            let mut out = Vec::with_capacity(prefix * a * b * suffix);
            for p in 0..prefix {
                for x in 0..a {
                    for y in 0..b {
                        for s in 0..suffix {
                            out.push(((p * b + y) * a + x) * suffix + s);
                        }
                    }
                }
            }
            out
        }
        SymExpr::Compose(first, second) => {
            let (f, g) = (eval_columns(first, dims)?, eval_columns(second, dims)?);
            f.iter().map(|&k| g[k]).collect()
        }
        SymExpr::Tensor(left, right) => {
            let (l, r) = (eval_columns(left, dims)?, eval_columns(right, dims)?);
            let nr = r.len();
            l.iter().flat_map(|&i| r.iter().map(move |&k| i * nr + k)).collect()
        }
    })
}

/// The matrix of `perm` acting on `word`, computed directly from the index formula.
/// Independent of [`eval_in_vec`] and used to cross-check it.
pub fn permutation_matrix(
    word: &ObjectWord,
    perm: &Permutation,
    dims: &BTreeMap<String, usize>,
    field: Field,
) -> Result<ExactMatrix, MoncatError> {
    let d = word_dims(word, dims)?;
    let out_dims: Vec<usize> = {
        let mut v = vec![0; d.len()];
        for (i, &p) in perm.0.iter().enumerate() {
            v[p] = d[i];
        }
        v
    };
    let total: usize = d.iter().product();
    let mut m = ExactMatrix::zeros(field, total, total);
    let mut digits = vec![0usize; d.len()];
    for col in 0..total {
        let mut rem = col;
        for k in (0..d.len()).rev() {
            digits[k] = rem % d[k];
            rem /= d[k];
        }
        let mut out_digits = vec![0usize; d.len()];
        for (i, &p) in perm.0.iter().enumerate() {
            out_digits[p] = digits[i];
        }
        let row = out_digits.iter().zip(&out_dims).fold(0, |acc, (&x, &n)| acc * n + x);
        m.set(row, col, field.one());
    }
    Ok(m)
}

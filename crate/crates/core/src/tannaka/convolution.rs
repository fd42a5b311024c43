use serde::Serialize;

use super::{AlgebraData, BialgebraData, CoalgebraData, HopfData, TannakaError};
use crate::exactalg::{ExactMatrix, Field, LinearMap, Scalar};
use crate::report::Report;

/// Largest search space walked by the exhaustive enumerations.
pub const ENUMERATION_BOUND: u128 = 1 << 20;

/// `f ∗ g = m_A ∘ (f ⊗ g) ∘ Δ_C`.
pub fn convolution(f: &LinearMap, g: &LinearMap, c: &CoalgebraData, a: &AlgebraData) -> Result<LinearMap, TannakaError> {
    for (name, h) in [("f", f), ("g", g)] {
        if (h.codomain_dim(), h.domain_dim()) != (a.dim, c.dim) {
            return Err(TannakaError::Shape(format!(
                "{name} is {}x{}, expected {}x{}",
                h.codomain_dim(),
                h.domain_dim(),
                a.dim,
                c.dim
            )));
        }
    }
    Ok(a.m.compose(&f.tensor(g)).compose(&c.delta))
}

/// Convolution of two functionals `C → K`.
pub fn convolve_functionals(f: &LinearMap, g: &LinearMap, c: &CoalgebraData) -> Result<LinearMap, TannakaError> {
    convolution(f, g, c, &AlgebraData::ground(c.field()))
}

/// Every vector of `K^n` over a prime field, in lexicographic order.
fn enumerate_vectors(field: Field, n: usize, alphabet: &[Scalar]) -> Result<Vec<Vec<Scalar>>, TannakaError> {
    let size = (alphabet.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > ENUMERATION_BOUND {
        return Err(TannakaError::Unsupported(format!("{size} candidates exceed the enumeration bound over {field}")));
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&d| alphabet[d].clone()).collect());
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < alphabet.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

fn prime_alphabet(field: Field) -> Option<Vec<Scalar>> {
    match field {
        Field::Prime(p) => Some((0..p as i64).map(|k| field.from_i64(k)).collect()),
        Field::Rational => None,
    }
}

/// Every column has at most one nonzero entry.
fn monomial_columns(m: &ExactMatrix) -> Option<Vec<Option<(usize, Scalar)>>> {
    (0..m.cols())
        .map(|c| {
            let mut found = None;
            for r in 0..m.rows() {
                let v = m.get(r, c);
                if !v.is_zero() {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((r, v.clone()));
                }
            }
            Some(found)
        })
        .collect()
}

pub fn is_grouplike(v: &[Scalar], b: &CoalgebraData) -> bool {
    if v.len() != b.dim {
        return false;
    }
    let col = ExactMatrix::column_vector(b.field(), v);
    b.eps.apply(v)[0].is_one() && b.delta.matrix().matmul(&col) == col.kron(&col)
}

/// Solutions of `Δ(v) = v ⊗ v`, `ε(v) = 1`.
///
/// Supplied candidates are filtered. Otherwise prime fields are enumerated, and over `ℚ`
/// a monomial `Δ` is required: a grouplike `v` has `|supp v|² ≤ |supp Δ(v)| ≤ |supp v|`
/// nonzero coefficients, so `v = c·b_j` with `Δ(b_j) = c·b_j ⊗ b_j`.
pub fn grouplikes(b: &CoalgebraData, candidates: Option<&[Vec<Scalar>]>) -> Result<Vec<Vec<Scalar>>, TannakaError> {
    let field = b.field();
    let pool = match (candidates, prime_alphabet(field)) {
        (Some(c), _) => c.to_vec(),
        (None, Some(alphabet)) => enumerate_vectors(field, b.dim, &alphabet)?,
        (None, None) => {
            let cols = monomial_columns(b.delta.matrix())
                .ok_or_else(|| TannakaError::Unsupported("Δ is not monomial; supply grouplike candidates".into()))?;
            cols.iter()
                .enumerate()
                .filter_map(|(j, entry)| match entry {
                    Some((row, c)) if *row == j * b.dim + j => {
                        let mut v = vec![field.zero(); b.dim];
                        v[j] = c.clone();
                        Some(v)
                    }
                    _ => None,
                })
                .collect()
        }
    };
    Ok(pool.into_iter().filter(|v| is_grouplike(v, b)).collect())
}

/// `χ ∘ m = χ ⊗ χ` and `χ ∘ u = 1`.
pub fn check_character(chi: &LinearMap, b: &BialgebraData) -> Report {
    let mut r = Report::new("character");
    if (chi.codomain_dim(), chi.domain_dim()) != (1, b.dim()) {
        r.fail("shape", format!("{}x{}", chi.codomain_dim(), chi.domain_dim()));
        return r;
    }
    r.check_equal("χ∘m = χ⊗χ", chi.compose(&b.algebra.m).matrix(), chi.tensor(chi).matrix());
    r.check_equal("χ∘u = 1", chi.compose(&b.algebra.u).matrix(), &ExactMatrix::identity(b.field(), 1));
    r
}

fn is_character(chi: &LinearMap, b: &BialgebraData) -> bool {
    let u_val = chi.compose(&b.algebra.u);
    u_val.matrix().get(0, 0).is_one() && chi.compose(&b.algebra.m) == chi.tensor(chi)
}

/// Algebra maps `B → K`.
///
/// Supplied candidates are filtered. Otherwise prime fields are enumerated; over `ℚ`
/// the multiplication must send basis pairs to basis vectors or zero, which makes the
/// basis a finite monoid and forces every character value into `{0, 1, -1}`.
pub fn characters(b: &BialgebraData, candidates: Option<&[Vec<Scalar>]>) -> Result<Vec<LinearMap>, TannakaError> {
    let field = b.field();
    let pool = match (candidates, prime_alphabet(field)) {
        (Some(c), _) => c.to_vec(),
        (None, Some(alphabet)) => enumerate_vectors(field, b.dim(), &alphabet)?,
        (None, None) => {
            let cols = monomial_columns(b.algebra.m.matrix())
                .ok_or_else(|| TannakaError::Unsupported("m is not monomial; supply character candidates".into()))?;
            if cols.iter().flatten().any(|(_, c)| !c.is_one()) {
                return Err(TannakaError::Unsupported("m has non-unit structure constants; supply character candidates".into()));
            }
            enumerate_vectors(field, b.dim(), &[field.zero(), field.one(), field.from_i64(-1)])?
        }
    };
    Ok(pool
        .into_iter()
        .filter(|v| v.len() == b.dim())
        .map(|v| LinearMap::new(ExactMatrix::row_vector(field, &v)))
        .filter(|chi| is_character(chi, b))
        .collect())
}

/// Multiplication table of a finite set under a binary operation, with the group axioms
/// recorded in `report`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupTable {
    pub table: Vec<Vec<Option<usize>>>,
    pub identity: Option<usize>,
    pub inverses: Vec<Option<usize>>,
    pub report: Report,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_group(&self) -> bool {
        self.report.all_passed()
    }

    /// Some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        let (Some(e), true) = (self.identity, self.is_group()) else {
            return false;
        };
        let n = self.order();
        (0..n).any(|g| {
            let mut x = g;
            let mut k = 1;
            while x != e {
                x = match self.table[x][g] {
                    Some(y) => y,
                    None => return false,
                };
                k += 1;
            }
            k == n
        })
    }

    fn build<T>(elements: &[T], op: impl Fn(&T, &T) -> T, identity: &T, eq: impl Fn(&T, &T) -> bool, title: &str) -> Self {
        let n = elements.len();
        let find = |x: &T| elements.iter().position(|y| eq(x, y));
        let mut report = Report::new(title);
        let table: Vec<Vec<Option<usize>>> =
            elements.iter().map(|a| elements.iter().map(|b| find(&op(a, b))).collect()).collect();
        let closed = table.iter().flatten().all(Option::is_some);
        report.check("closed under the product", closed, None);
        let identity_pos = find(identity);
        report.check("identity element present", identity_pos.is_some(), None);
        let mut assoc = closed;
        if closed {
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let ab = table[a][b].unwrap();
                        let bc = table[b][c].unwrap();
                        if table[ab][c] != table[a][bc] {
                            assoc = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        report.check("associative", assoc, None);
        let inverses: Vec<Option<usize>> = (0..n)
            .map(|a| (0..n).find(|&b| identity_pos.is_some() && table[a][b] == identity_pos && table[b][a] == identity_pos))
            .collect();
        report.check("every element is invertible", inverses.iter().all(Option::is_some), None);
        GroupTable { table, identity: identity_pos, inverses, report }
    }
}

/// Characters under convolution: closure, `ε` as identity and `χ ∘ a` as two-sided inverse.
pub fn convolution_group(chars: &[LinearMap], h: &HopfData) -> Result<GroupTable, TannakaError> {
    let b = &h.bialgebra;
    if let Some(i) = chars.iter().position(|chi| !is_character(chi, b)) {
        return Err(TannakaError::NotCharacter(i));
    }
    let c = &b.coalgebra;
    let conv = |x: &LinearMap, y: &LinearMap| convolve_functionals(x, y, c).expect("shapes checked");
    let mut g = GroupTable::build(chars, conv, &c.eps, |x, y| x == y, "convolution group");
    let eps_pos = g.identity;
    for (i, chi) in chars.iter().enumerate() {
        let inv = chi.compose(&h.antipode);
        let left = conv(chi, &inv) == c.eps;
        let right = conv(&inv, chi) == c.eps;
        g.report.check(format!("χ{i} ∗ (χ{i}∘a) = ε = (χ{i}∘a) ∗ χ{i}"), left && right, None);
        let pos = chars.iter().position(|x| *x == inv);
        g.report.check(format!("χ{i}∘a is the table inverse"), pos.is_some() && pos == g.inverses[i], None);
    }
    g.report.check("ε is the identity", eps_pos.is_some(), None);
    Ok(g)
}

/// Grouplikes under the multiplication of a bialgebra, with `u(1)` as identity.
pub fn grouplike_group(grouplikes: &[Vec<Scalar>], b: &BialgebraData) -> GroupTable {
    let field = b.field();
    let mul = |x: &Vec<Scalar>, y: &Vec<Scalar>| {
        let xy = ExactMatrix::column_vector(field, x).kron(&ExactMatrix::column_vector(field, y));
        b.algebra.m.matrix().matmul(&xy).column(0)
    };
    let unit = b.algebra.u.apply(&[field.one()]);
    GroupTable::build(grouplikes, mul, &unit, |x, y| x == y, "grouplike group")
}

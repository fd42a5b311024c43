use std::collections::BTreeMap;

use serde::Serialize;

use super::TannakaError;
use crate::exactalg::{ExactMatrix, Field, LinearMap};
use crate::moncat::{eval_in_vec, ObjectWord, SymExpr};
use crate::report::Report;

/// Comultiplication `Δ: C → C ⊗ C` and counit `ε: C → K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalgebraData {
    pub dim: usize,
    pub delta: LinearMap,
    pub eps: LinearMap,
}

/// Multiplication `m: A ⊗ A → A` and unit `u: K → A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraData {
    pub dim: usize,
    pub m: LinearMap,
    pub u: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BialgebraData {
    pub coalgebra: CoalgebraData,
    pub algebra: AlgebraData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfData {
    pub bialgebra: BialgebraData,
    pub antipode: LinearMap,
}

/// A left coaction `ρ: M → C ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComoduleData {
    pub coalgebra_dim: usize,
    pub space_dim: usize,
    pub rho: LinearMap,
}

fn shape(what: &str, m: &LinearMap, codomain: usize, domain: usize) -> Result<(), TannakaError> {
    if (m.codomain_dim(), m.domain_dim()) != (codomain, domain) {
        return Err(TannakaError::Shape(format!(
            "{what} is {}x{}, expected {codomain}x{domain}",
            m.codomain_dim(),
            m.domain_dim()
        )));
    }
    Ok(())
}

impl CoalgebraData {
    pub fn new(delta: LinearMap, eps: LinearMap) -> Result<Self, TannakaError> {
        let dim = delta.domain_dim();
        shape("Δ", &delta, dim * dim, dim)?;
        shape("ε", &eps, 1, dim)?;
        Ok(CoalgebraData { dim, delta, eps })
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field(), self.dim)
    }

    /// Coassociativity and both counit laws.
    pub fn check(&self) -> Report {
        let mut r = Report::new("coalgebra");
        let id = self.id();
        r.check_equal(
            "coassociativity",
            self.delta.tensor(&id).compose(&self.delta).matrix(),
            id.tensor(&self.delta).compose(&self.delta).matrix(),
        );
        r.check_equal("left counit law", self.eps.tensor(&id).compose(&self.delta).matrix(), id.matrix());
        r.check_equal("right counit law", id.tensor(&self.eps).compose(&self.delta).matrix(), id.matrix());
        r
    }

    /// The coalgebra as a left comodule over itself.
    pub fn regular_comodule(&self) -> ComoduleData {
        ComoduleData { coalgebra_dim: self.dim, space_dim: self.dim, rho: self.delta.clone() }
    }
}

impl AlgebraData {
    pub fn new(m: LinearMap, u: LinearMap) -> Result<Self, TannakaError> {
        let dim = m.codomain_dim();
        shape("m", &m, dim, dim * dim)?;
        shape("u", &u, dim, 1)?;
        Ok(AlgebraData { dim, m, u })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        AlgebraData { dim: 1, m: LinearMap::identity(field, 1), u: LinearMap::identity(field, 1) }
    }

    pub fn field(&self) -> Field {
        self.m.field()
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("algebra");
        let id = LinearMap::identity(self.field(), self.dim);
        r.check_equal(
            "associativity",
            self.m.compose(&self.m.tensor(&id)).matrix(),
            self.m.compose(&id.tensor(&self.m)).matrix(),
        );
        r.check_equal("left unit law", self.m.compose(&self.u.tensor(&id)).matrix(), id.matrix());
        r.check_equal("right unit law", self.m.compose(&id.tensor(&self.u)).matrix(), id.matrix());
        r
    }
}

/// The symmetry `B⊗B⊗B⊗B → B⊗B⊗B⊗B` exchanging the two middle factors, evaluated
/// from the expression `swap[B1,B2,B3,B4;1]`.
pub fn middle_swap(field: Field, dim: usize) -> LinearMap {
    let word = ObjectWord::new(["B1", "B2", "B3", "B4"]);
    let dims: BTreeMap<String, usize> = word.atoms().iter().map(|a| (a.clone(), dim)).collect();
    eval_in_vec(&SymExpr::swap(word, 1), &dims, field).expect("well-formed swap")
}

impl BialgebraData {
    pub fn new(coalgebra: CoalgebraData, algebra: AlgebraData) -> Result<Self, TannakaError> {
        if coalgebra.dim != algebra.dim {
            return Err(TannakaError::Shape(format!("coalgebra dim {} vs algebra dim {}", coalgebra.dim, algebra.dim)));
        }
        Ok(BialgebraData { coalgebra, algebra })
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    /// Coalgebra and algebra axioms plus the four compatibility diagrams.
    pub fn check(&self) -> Report {
        let mut r = Report::new("bialgebra");
        r.absorb(self.coalgebra.check());
        r.absorb(self.algebra.check());
        let (delta, eps) = (&self.coalgebra.delta, &self.coalgebra.eps);
        let (m, u) = (&self.algebra.m, &self.algebra.u);
        let psi = middle_swap(self.field(), self.dim());
        r.check_equal(
            "Δ∘m = (m⊗m)(id⊗ψ⊗id)(Δ⊗Δ)",
            delta.compose(m).matrix(),
            m.tensor(m).compose(&psi).compose(&delta.tensor(delta)).matrix(),
        );
        r.check_equal("ε∘m = ε⊗ε", eps.compose(m).matrix(), eps.tensor(eps).matrix());
        r.check_equal("Δ∘u = u⊗u", delta.compose(u).matrix(), u.tensor(u).matrix());
        r.check_equal("ε∘u = 1", eps.compose(u).matrix(), &ExactMatrix::identity(self.field(), 1));
        r
    }
}

impl HopfData {
    pub fn new(bialgebra: BialgebraData, antipode: LinearMap) -> Result<Self, TannakaError> {
        let n = bialgebra.dim();
        shape("antipode", &antipode, n, n)?;
        Ok(HopfData { bialgebra, antipode })
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("hopf");
        r.absorb(self.bialgebra.check());
        let b = &self.bialgebra;
        let id = b.coalgebra.id();
        let (delta, m) = (&b.coalgebra.delta, &b.algebra.m);
        let ue = b.algebra.u.compose(&b.coalgebra.eps);
        r.check_equal("m(a⊗id)Δ = uε", m.compose(&self.antipode.tensor(&id)).compose(delta).matrix(), ue.matrix());
        r.check_equal("m(id⊗a)Δ = uε", m.compose(&id.tensor(&self.antipode)).compose(delta).matrix(), ue.matrix());
        r
    }
}

impl ComoduleData {
    pub fn new(coalgebra_dim: usize, rho: LinearMap) -> Result<Self, TannakaError> {
        let space_dim = rho.domain_dim();
        shape("ρ", &rho, coalgebra_dim * space_dim, space_dim)?;
        Ok(ComoduleData { coalgebra_dim, space_dim, rho })
    }

    /// Adapter for a right coaction `M → M ⊗ C`.
    pub fn from_right_coaction(coalgebra_dim: usize, rho_right: &LinearMap) -> Result<Self, TannakaError> {
        let n = rho_right.domain_dim();
        shape("right ρ", rho_right, n * coalgebra_dim, n)?;
        let swap = LinearMap::new(crate::exactalg::commutation_matrix(rho_right.field(), n, coalgebra_dim));
        Self::new(coalgebra_dim, swap.compose(rho_right))
    }
}

/// Coassociativity and counit law of a left coaction.
pub fn check_comodule(m: &ComoduleData, b: &CoalgebraData) -> Result<Report, TannakaError> {
    if m.coalgebra_dim != b.dim {
        return Err(TannakaError::Shape(format!("comodule over dim {} used with coalgebra of dim {}", m.coalgebra_dim, b.dim)));
    }
    let mut r = Report::new("comodule");
    let id_v = LinearMap::identity(b.field(), m.space_dim);
    let id_b = b.id();
    r.check_equal(
        "(Δ⊗id)ρ = (id⊗ρ)ρ",
        b.delta.tensor(&id_v).compose(&m.rho).matrix(),
        id_b.tensor(&m.rho).compose(&m.rho).matrix(),
    );
    r.check_equal("(ε⊗id)ρ = id", b.eps.tensor(&id_v).compose(&m.rho).matrix(), id_v.matrix());
    Ok(r)
}

/// The square `ρ₂ ∘ f = (id ⊗ f) ∘ ρ₁`.
pub fn check_comodule_morphism(
    f: &LinearMap,
    m1: &ComoduleData,
    m2: &ComoduleData,
    b: &CoalgebraData,
) -> Result<Report, TannakaError> {
    if (f.codomain_dim(), f.domain_dim()) != (m2.space_dim, m1.space_dim) || m1.coalgebra_dim != b.dim || m2.coalgebra_dim != b.dim {
        return Err(TannakaError::Shape("comodule morphism dimensions".into()));
    }
    let mut r = Report::new("comodule morphism");
    r.check_equal("ρ₂∘f = (id⊗f)∘ρ₁", m2.rho.compose(f).matrix(), b.id().tensor(f).compose(&m1.rho).matrix());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> LinearMap {
        LinearMap::new(ExactMatrix::from_i64_rows(Field::Rational, rows))
    }

    /// K[ℤ/2] with grouplike basis 1, g.
    fn group_algebra() -> BialgebraData {
        let delta = q(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
        let eps = q(&[&[1, 1]]);
        let m = q(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let u = q(&[&[1], &[0]]);
        BialgebraData::new(CoalgebraData::new(delta, eps).unwrap(), AlgebraData::new(m, u).unwrap()).unwrap()
    }

    #[test]
    fn group_algebra_is_hopf() {
        let b = group_algebra();
        assert!(b.check().all_passed(), "{}", b.check());
        let h = HopfData::new(b, LinearMap::identity(Field::Rational, 2)).unwrap();
        assert!(h.check().all_passed());
        let mut bad = h.clone();
        bad.antipode = LinearMap::zero(Field::Rational, 2, 2);
        assert!(!bad.check().all_passed());
    }

    #[test]
    fn regular_comodule_and_trivial_cases() {
        let b = group_algebra().coalgebra;
        let reg = b.regular_comodule();
        assert!(check_comodule(&reg, &b).unwrap().all_passed());
        let zero = ComoduleData::new(2, LinearMap::zero(Field::Rational, 3, 6)).unwrap();
        assert!(!check_comodule(&zero, &b).unwrap().all_passed());
        let id = LinearMap::identity(Field::Rational, 2);
        assert!(check_comodule_morphism(&id, &reg, &reg, &b).unwrap().all_passed());
    }

    #[test]
    fn right_coaction_adapter() {
        let b = group_algebra().coalgebra;
        // M = K with right coaction v ↦ v ⊗ g.
        let right = q(&[&[0], &[1]]);
        let left = ComoduleData::from_right_coaction(2, &right).unwrap();
        assert_eq!(left.rho, q(&[&[0], &[1]]));
        assert!(check_comodule(&left, &b).unwrap().all_passed());
    }

    #[test]
    fn middle_swap_moves_factors() {
        let f = Field::Rational;
        let psi = middle_swap(f, 2);
        // e_a ⊗ e_b ⊗ e_c ⊗ e_d ↦ e_a ⊗ e_c ⊗ e_b ⊗ e_d
        let idx = |a: usize, b: usize, c: usize, d: usize| ((a * 2 + b) * 2 + c) * 2 + d;
        assert!(psi.matrix().get(idx(1, 0, 1, 1), idx(1, 1, 0, 1)).is_one());
    }
}

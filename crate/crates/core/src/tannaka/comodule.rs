use std::collections::BTreeMap;

use serde::Deserialize;

use super::endvee::{endvee_coalgebra, require};
use super::{check_comodule, check_comodule_morphism, CoalgebraData, ComoduleData, TannakaError};
use crate::catpres::{build_document, matrix_from_raw, CatError, Document, FiberFunctor, PresentedCategory, RawDocument, RawMatrix};
use crate::coend::{coevaluation, descend, natvee, CoendPresentation, DescendedMap};
use crate::exactalg::{ExactMatrix, Field, LinearMap};
use crate::report::Report;

/// `F` lifted to comodules over `End^∨(F)`.
#[derive(Clone, Debug)]
pub struct Lift {
    pub coalgebra: CoalgebraData,
    pub comodules: BTreeMap<String, ComoduleData>,
    pub report: Report,
}

/// Coevaluation as coaction on every `F(C)`, with both comodule laws and the morphism
/// square of every generator checked.
pub fn lift_functor(cat: &PresentedCategory, f: &FiberFunctor, p: &CoendPresentation) -> Result<Lift, TannakaError> {
    let coalgebra = endvee_coalgebra(p)?;
    let mut report = Report::new("lift");
    let mut comodules = BTreeMap::new();
    for c in cat.objects() {
        let m = ComoduleData::new(p.quotient_dim(), coevaluation(p, c)?)?;
        for check in check_comodule(&m, &coalgebra)?.checks {
            report.checks.push(crate::report::Check { name: format!("{} at {c}", check.name), ..check });
        }
        comodules.insert(c.clone(), m);
    }
    for g in cat.generators() {
        let r = check_comodule_morphism(f.generator_map(&g.name), &comodules[&g.src], &comodules[&g.dst], &coalgebra)?;
        report.check(format!("F({}) is a comodule morphism", g.name), r.all_passed(), None);
    }
    Ok(Lift { coalgebra, comodules, report })
}

/// `[e_i ⊗ φ_j]_V ↦ (id_B ⊗ φ_j) ρ_V(e_i)` on the ambient space of `P = End^∨(U)`, pushed down.
pub fn rho_tilde_descended(
    b: &CoalgebraData,
    p: &CoendPresentation,
    coactions: &BTreeMap<String, ComoduleData>,
) -> Result<DescendedMap, TannakaError> {
    let mut amb = ExactMatrix::zeros(b.field(), b.dim, p.ambient_dim());
    for block in p.blocks() {
        let m = coactions.get(&block.object).ok_or_else(|| TannakaError::MissingCoaction(block.object.clone()))?;
        let n = block.fdim;
        if m.space_dim != n || m.coalgebra_dim != b.dim {
            return Err(TannakaError::Shape(format!("coaction at {}", block.object)));
        }
        for i in 0..n {
            for j in 0..n {
                for r in 0..b.dim {
                    let v = m.rho.matrix().get(r * n + j, i);
                    if !v.is_zero() {
                        amb.set(r, block.index(i, j), v.clone());
                    }
                }
            }
        }
    }
    Ok(descend(p, &LinearMap::new(amb)))
}

#[derive(Clone, Debug)]
pub struct RhoTilde {
    pub map: LinearMap,
    pub rank: usize,
    pub report: Report,
}

impl RhoTilde {
    pub fn is_surjective(&self) -> bool {
        self.rank == self.map.codomain_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_surjective() && self.rank == self.map.domain_dim()
    }
}

/// The reconstruction morphism `End^∨(U) → B` for a category of `B`-comodules.
pub fn rho_tilde(
    b: &CoalgebraData,
    cat: &PresentedCategory,
    u: &FiberFunctor,
    coactions: &BTreeMap<String, ComoduleData>,
) -> Result<RhoTilde, TannakaError> {
    for c in cat.objects() {
        let m = coactions.get(c).ok_or_else(|| TannakaError::MissingCoaction(c.clone()))?;
        if !check_comodule(m, b)?.all_passed() {
            return Err(TannakaError::InvalidComodule(c.clone()));
        }
    }
    for g in cat.generators() {
        if !check_comodule_morphism(u.generator_map(&g.name), &coactions[&g.src], &coactions[&g.dst], b)?.all_passed() {
            return Err(TannakaError::InvalidComodule(format!("generator {}", g.name)));
        }
    }
    let p = natvee(cat, u, u)?;
    let map = require("ρ̃", rho_tilde_descended(b, &p, coactions)?)?;
    let end = endvee_coalgebra(&p)?;
    let report = coalgebra_morphism_report(&map, &end, b);
    Ok(RhoTilde { rank: map.rank(), map, report })
}

/// `Δ_B ∘ φ = (φ ⊗ φ) ∘ Δ_A` and `ε_B ∘ φ = ε_A`.
pub fn coalgebra_morphism_report(phi: &LinearMap, a: &CoalgebraData, b: &CoalgebraData) -> Report {
    let mut r = Report::new("coalgebra morphism");
    r.check_equal("Δ∘φ = (φ⊗φ)∘Δ", b.delta.compose(phi).matrix(), phi.tensor(phi).compose(&a.delta).matrix());
    r.check_equal("ε∘φ = ε", b.eps.compose(phi).matrix(), a.eps.matrix());
    r
}

/// `V ⊗ V^∨` with `Δ(e_i ⊗ φ_j) = Σ_k (e_i ⊗ φ_k) ⊗ (e_k ⊗ φ_j)` and `ε(e_i ⊗ φ_j) = δ_ij`.
pub fn comatrix_coalgebra(field: Field, n: usize) -> CoalgebraData {
    let dim = n * n;
    let mut delta = ExactMatrix::zeros(field, dim * dim, dim);
    let mut eps = ExactMatrix::zeros(field, 1, dim);
    for i in 0..n {
        eps.set(0, i * n + i, field.one());
        for j in 0..n {
            for k in 0..n {
                delta.set((i * n + k) * dim + k * n + j, i * n + j, field.one());
            }
        }
    }
    CoalgebraData { dim, delta: LinearMap::new(delta), eps: LinearMap::new(eps) }
}

/// `ρ(e_k) = Σ_i (e_k ⊗ φ_i) ⊗ e_i`, making `V` a comodule over its comatrix coalgebra.
pub fn standard_comodule(field: Field, n: usize) -> ComoduleData {
    let m = ExactMatrix::from_fn(field, n * n * n, n, |row, k| {
        let (b, i) = (row / n, row % n);
        if b == k * n + i {
            field.one()
        } else {
            field.zero()
        }
    });
    ComoduleData { coalgebra_dim: n * n, space_dim: n, rho: LinearMap::new(m) }
}

/// `α̃ = (id_B ⊗ eval) ∘ (ρ ⊗ id_{V^∨}): V ⊗ V^∨ → B`.
pub fn alpha_tilde(m: &ComoduleData) -> LinearMap {
    let field = m.rho.field();
    let n = m.space_dim;
    let eval = LinearMap::new(ExactMatrix::from_fn(field, 1, n * n, |_, c| {
        if c / n == c % n {
            field.one()
        } else {
            field.zero()
        }
    }));
    let id_b = LinearMap::identity(field, m.coalgebra_dim);
    id_b.tensor(&eval).compose(&m.rho.tensor(&LinearMap::identity(field, n)))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCoalgebra {
    pub dim: usize,
    pub delta: RawMatrix,
    pub eps: RawMatrix,
}

/// The category sections plus an optional coalgebra and coactions on each object.
#[derive(Clone, Debug, Deserialize)]
pub struct RawComoduleDocument {
    #[serde(flatten)]
    pub base: RawDocument,
    #[serde(default)]
    pub coalgebra: Option<RawCoalgebra>,
    #[serde(default)]
    pub coactions: Option<BTreeMap<String, RawMatrix>>,
}

#[derive(Clone, Debug)]
pub struct ComoduleDocument {
    pub document: Document,
    pub coalgebra: Option<CoalgebraData>,
    pub coactions: BTreeMap<String, ComoduleData>,
}

pub fn parse_comodule_document(text: &str, override_field: Option<Field>) -> Result<ComoduleDocument, TannakaError> {
    let raw: RawComoduleDocument = serde_json::from_str(text).map_err(|e| CatError::Json(e.to_string()))?;
    let document = build_document(&raw.base, override_field)?;
    let field = document.field;
    let coalgebra = match &raw.coalgebra {
        None => None,
        Some(rc) => {
            let delta = matrix_from_raw(field, &rc.delta, rc.dim * rc.dim, rc.dim, "coalgebra delta")?;
            let eps = matrix_from_raw(field, &rc.eps, 1, rc.dim, "coalgebra eps")?;
            Some(CoalgebraData::new(delta, eps)?)
        }
    };
    let mut coactions = BTreeMap::new();
    if let Some(raw_coactions) = &raw.coactions {
        let b = coalgebra.as_ref().ok_or(CatError::MissingSection("coalgebra"))?;
        for (obj, m) in raw_coactions {
            if !document.category.has_object(obj) {
                return Err(CatError::UnknownObject(obj.clone()).into());
            }
            let n = document.functor.dim(obj);
            let rho = matrix_from_raw(field, m, b.dim * n, n, &format!("coaction {obj}"))?;
            coactions.insert(obj.clone(), ComoduleData::new(b.dim, rho)?);
        }
    }
    Ok(ComoduleDocument { document, coalgebra, coactions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn load(name: &str) -> ComoduleDocument {
        parse_comodule_document(fixtures::get(name).unwrap(), None).unwrap()
    }

    #[test]
    fn lift_passes_on_every_fixture() {
        for name in fixtures::valid_names() {
            let d = load(name).document;
            let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
            let lift = lift_functor(&d.category, &d.functor, &p).unwrap();
            assert!(lift.report.all_passed(), "{name}: {}", lift.report);
        }
    }

    #[test]
    fn trivial_lift_and_character_coaction() {
        let d = load("trivial").document;
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let lift = lift_functor(&d.category, &d.functor, &p).unwrap();
        assert_eq!(lift.comodules["I"].rho, LinearMap::identity(d.field, 1));

        let d = load("z2_characters").document;
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let lift = lift_functor(&d.category, &d.functor, &p).unwrap();
        let f = d.field;
        // ρ_σ(s) = x_σ ⊗ s
        assert_eq!(lift.comodules["s"].rho.apply(&[f.one()]), vec![f.zero(), f.one()]);
    }

    #[test]
    fn comatrix_coalgebra_oracle() {
        let f = Field::Rational;
        assert_eq!(comatrix_coalgebra(f, 1).delta, LinearMap::identity(f, 1));
        let c = comatrix_coalgebra(f, 2);
        assert!(c.check().all_passed());
        let std = standard_comodule(f, 2);
        assert!(check_comodule(&std, &c).unwrap().all_passed());
        // α̃ of the standard comodule is the identity of V ⊗ V^∨.
        assert_eq!(alpha_tilde(&std), LinearMap::identity(f, 4));
    }

    #[test]
    fn alpha_tilde_of_regular_comodule_is_a_coalgebra_morphism() {
        let d = load("z2_functions");
        let b = d.coalgebra.unwrap();
        let reg = b.regular_comodule();
        let a = alpha_tilde(&reg);
        let r = coalgebra_morphism_report(&a, &comatrix_coalgebra(b.field(), b.dim), &b);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn rho_tilde_on_the_comodule_fixtures() {
        let d = load("comatrix");
        let rt = rho_tilde(d.coalgebra.as_ref().unwrap(), &d.document.category, &d.document.functor, &d.coactions).unwrap();
        assert!(rt.report.all_passed());
        assert!(rt.is_bijective());

        let d = load("z2_functions");
        let rt = rho_tilde(d.coalgebra.as_ref().unwrap(), &d.document.category, &d.document.functor, &d.coactions).unwrap();
        assert!(rt.report.all_passed());
        assert!(rt.is_surjective());
    }

    #[test]
    fn ground_field_rho_tilde_is_identity() {
        let f = Field::Rational;
        let k = comatrix_coalgebra(f, 1);
        let cat = PresentedCategory::new(vec!["K".into()], vec![], vec![]).unwrap();
        let u = FiberFunctor::new(&cat, f, [("K".to_string(), 1)].into(), BTreeMap::new()).unwrap();
        let coactions = [("K".to_string(), k.regular_comodule())].into();
        let rt = rho_tilde(&k, &cat, &u, &coactions).unwrap();
        assert_eq!(rt.map, LinearMap::identity(f, 1));
    }

    #[test]
    fn invalid_coaction_is_rejected() {
        let mut d = load("z2_functions");
        let zero = ComoduleData::new(2, LinearMap::zero(d.document.field, 1, 2)).unwrap();
        d.coactions.insert("triv".into(), zero);
        let err = rho_tilde(d.coalgebra.as_ref().unwrap(), &d.document.category, &d.document.functor, &d.coactions);
        assert!(matches!(err, Err(TannakaError::InvalidComodule(_))));
    }
}

use std::collections::BTreeMap;

use super::{AlgebraData, BialgebraData, CoalgebraData, HopfData, TannakaError};
use crate::catpres::{DualityData, FiberFunctor, PresentedCategory, TensorData};
use crate::coend::{cocomposition_descended, counit_descended, descend, descend_pair, CoendPresentation, DescendedMap};
use crate::exactalg::{commutation_matrix, ExactMatrix, LinearMap};
use crate::moncat::{eval_in_vec, ObjectWord, SymExpr};

pub(crate) fn require(what: &'static str, d: DescendedMap) -> Result<LinearMap, TannakaError> {
    if d.is_well_defined() {
        Ok(d.map)
    } else {
        Err(TannakaError::NotWellDefined { what, residue: d.residue.max_norm().to_string() })
    }
}

/// `Δ = cocomposition(P, P, P)` and `ε = counit(P)`.
pub fn endvee_coalgebra(p: &CoendPresentation) -> Result<CoalgebraData, TannakaError> {
    let delta = require("Δ", cocomposition_descended(p, p, p)?)?;
    let eps = require("ε", counit_descended(p)?)?;
    CoalgebraData::new(delta, eps)
}

/// `FC ⊗ FC^∨ ⊗ FD ⊗ FD^∨ → FC ⊗ FD ⊗ FC^∨ ⊗ FD^∨`.
fn middle_reorder(p: &CoendPresentation, n_c: usize, n_d: usize) -> LinearMap {
    let word = ObjectWord::new(["C", "Cv", "D", "Dv"]);
    let dims: BTreeMap<String, usize> =
        [("C", n_c), ("Cv", n_c), ("D", n_d), ("Dv", n_d)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    eval_in_vec(&SymExpr::swap(word, 1), &dims, p.field()).expect("well-formed swap")
}

/// The multiplication on the ambient tensor square, pushed to `End^∨(F) ⊗ End^∨(F)`.
pub fn multiplication_descended(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    t: &TensorData,
    p: &CoendPresentation,
) -> Result<DescendedMap, TannakaError> {
    let field = p.field();
    let amb = p.ambient_dim();
    let mut m_amb = ExactMatrix::zeros(field, p.quotient_dim(), amb * amb);
    for c in cat.objects() {
        for d in cat.objects() {
            let (bc, bd) = (p.block(c)?, p.block(d)?);
            let (n_c, n_d) = (f.dim(c), f.dim(d));
            let cd = t.tensor(c, d)?;
            let s = t.s_map(c, d)?;
            let s_inv = s.inverse().ok_or(TannakaError::Singular("s"))?;
            let local = p
                .lambda(cd)?
                .compose(&s.tensor(&s_inv.transpose()))
                .compose(&middle_reorder(p, n_c, n_d));
            let lm = local.matrix();
            for x in 0..bc.size() {
                for y in 0..bd.size() {
                    let col = (bc.offset + x) * amb + bd.offset + y;
                    let local_col = x * bd.size() + y;
                    for r in 0..p.quotient_dim() {
                        let v = lm.get(r, local_col);
                        if !v.is_zero() {
                            m_amb.set(r, col, v.clone());
                        }
                    }
                }
            }
        }
    }
    Ok(descend_pair(p, p, &LinearMap::new(m_amb)))
}

/// `u = λ_I ∘ (f_unit ⊗ (f_unit^{-1})^∨)`. A map out of `K` needs no descent.
pub fn unit_map(t: &TensorData, p: &CoendPresentation) -> Result<LinearMap, TannakaError> {
    let f_inv = t.f_unit.inverse().ok_or(TannakaError::Singular("f_unit"))?;
    Ok(p.lambda(&t.unit)?.compose(&t.f_unit.tensor(&f_inv.transpose())))
}

/// Multiplication and unit from the tensor structure; all four compatibility diagrams
/// are left to [`BialgebraData::check`].
pub fn endvee_bialgebra(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    t: &TensorData,
    p: &CoendPresentation,
) -> Result<BialgebraData, TannakaError> {
    let coalgebra = endvee_coalgebra(p)?;
    let m = require("m", multiplication_descended(cat, f, t, p)?)?;
    let u = unit_map(t, p)?;
    BialgebraData::new(coalgebra, AlgebraData::new(m, u)?)
}

/// On block `C`: `FC ⊗ FC^∨ → F(C^∧)^∨ ⊗ F(C^∧) → F(C^∧) ⊗ F(C^∧)^∨ → End^∨(F)`, using
/// `ι = Eᵀ: FC → F(C^∧)^∨` and `ι' = E^{-1}: FC^∨ → F(C^∧)` for the pairing form `E`.
pub fn antipode_descended(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    t: &TensorData,
    duality: &DualityData,
    p: &CoendPresentation,
) -> Result<DescendedMap, TannakaError> {
    let field = p.field();
    let mut a_amb = ExactMatrix::zeros(field, p.quotient_dim(), p.ambient_dim());
    for c in cat.objects() {
        let ev = duality.evaluate(cat, f, t, c)?;
        let (n, n_dual) = (f.dim(c), f.dim(&ev.dual));
        let e = ev.pairing_matrix(n, n_dual);
        let e_inv = e.inverse().ok_or(TannakaError::Singular("pairing form"))?;
        let iota = LinearMap::new(e.transpose());
        let iota_prime = LinearMap::new(e_inv);
        let swap = LinearMap::new(commutation_matrix(field, n_dual, n_dual));
        let local = p.lambda(&ev.dual)?.compose(&swap).compose(&iota.tensor(&iota_prime));
        let b = p.block(c)?;
        for x in 0..b.size() {
            for r in 0..p.quotient_dim() {
                let v = local.matrix().get(r, x);
                if !v.is_zero() {
                    a_amb.set(r, b.offset + x, v.clone());
                }
            }
        }
    }
    Ok(descend(p, &LinearMap::new(a_amb)))
}

pub fn endvee_antipode(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    t: &TensorData,
    duality: &DualityData,
    p: &CoendPresentation,
) -> Result<HopfData, TannakaError> {
    let bialgebra = endvee_bialgebra(cat, f, t, p)?;
    let a = require("antipode", antipode_descended(cat, f, t, duality, p)?)?;
    HopfData::new(bialgebra, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catpres::{parse_document, Document};
    use crate::coend::natvee;
    use crate::exactalg::Field;
    use crate::fixtures;

    fn setup(name: &str) -> (Document, CoendPresentation) {
        let d = parse_document(fixtures::get(name).unwrap(), None).unwrap();
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        (d, p)
    }

    fn e(f: Field, n: usize, i: usize) -> Vec<crate::exactalg::Scalar> {
        (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
    }

    #[test]
    fn coalgebra_axioms_on_every_fixture() {
        for name in fixtures::valid_names() {
            let (_, p) = setup(name);
            let c = endvee_coalgebra(&p).unwrap();
            assert!(c.check().all_passed(), "{name}: {}", c.check());
        }
    }

    #[test]
    fn single_object_dim_one() {
        let (d, p) = setup("trivial");
        let c = endvee_coalgebra(&p).unwrap();
        assert_eq!(c.delta, LinearMap::identity(d.field, 1));
        assert_eq!(c.eps, LinearMap::identity(d.field, 1));
    }

    #[test]
    fn character_category_is_the_group_algebra() {
        let (d, p) = setup("z2_characters");
        let (cat, f, t) = (&d.category, &d.functor, d.tensor.as_ref().unwrap());
        let b = endvee_bialgebra(cat, f, t, &p).unwrap();
        assert!(b.check().all_passed(), "{}", b.check());
        let fl = d.field;
        // basis x_1, x_σ; m(x_a ⊗ x_b) = x_{ab}
        let m = &b.algebra.m;
        assert_eq!(m.apply(&e(fl, 4, 0)), e(fl, 2, 0));
        assert_eq!(m.apply(&e(fl, 4, 1)), e(fl, 2, 1));
        assert_eq!(m.apply(&e(fl, 4, 2)), e(fl, 2, 1));
        assert_eq!(m.apply(&e(fl, 4, 3)), e(fl, 2, 0));
        assert_eq!(b.algebra.u.apply(&[fl.one()]), e(fl, 2, 0));
        let h = endvee_antipode(cat, f, t, d.duality.as_ref().unwrap(), &p).unwrap();
        assert_eq!(h.antipode, LinearMap::identity(fl, 2));
        assert!(h.check().all_passed(), "{}", h.check());
    }

    #[test]
    fn trivial_category_is_the_ground_field() {
        let (d, p) = setup("trivial");
        let h = endvee_antipode(&d.category, &d.functor, d.tensor.as_ref().unwrap(), d.duality.as_ref().unwrap(), &p).unwrap();
        let one = LinearMap::identity(d.field, 1);
        assert_eq!(h.bialgebra.algebra.m, one);
        assert_eq!(h.bialgebra.algebra.u, one);
        assert_eq!(h.antipode, one);
    }

    #[test]
    fn twisted_z3_is_hopf_with_inverse_antipode() {
        let (d, p) = setup("z3_twisted");
        let h = endvee_antipode(&d.category, &d.functor, d.tensor.as_ref().unwrap(), d.duality.as_ref().unwrap(), &p).unwrap();
        assert!(h.check().all_passed(), "{}", h.check());
        let fl = d.field;
        assert_eq!(h.antipode.apply(&e(fl, 3, 1)), e(fl, 3, 2));
        assert_eq!(h.antipode.apply(&e(fl, 3, 2)), e(fl, 3, 1));
    }
}

use std::collections::BTreeMap;

use super::convolution::convolve_functionals;
use super::{check_comodule_morphism, lift_functor, CoalgebraData, ComoduleData, TannakaError};
use crate::catpres::{FiberFunctor, PresentedCategory};
use crate::coend::CoendPresentation;
use crate::exactalg::{kernel_basis, ExactMatrix, LinearMap, Scalar, SubspaceBasis};
use crate::report::Report;

/// `θ(χ) = (χ ⊗ id_V) ∘ ρ`.
pub fn rep_of_comodule(m: &ComoduleData, chi: &LinearMap) -> Result<LinearMap, TannakaError> {
    if (chi.codomain_dim(), chi.domain_dim()) != (1, m.coalgebra_dim) {
        return Err(TannakaError::Shape("functional does not match the coalgebra".into()));
    }
    Ok(chi.tensor(&LinearMap::identity(chi.field(), m.space_dim)).compose(&m.rho))
}

/// `θ₂(χ) ∘ f = f ∘ θ₁(χ)` for every probe `χ`.
pub fn intertwines(f: &LinearMap, m1: &ComoduleData, m2: &ComoduleData, probes: &[LinearMap]) -> Result<bool, TannakaError> {
    for chi in probes {
        if rep_of_comodule(m2, chi)?.compose(f) != f.compose(&rep_of_comodule(m1, chi)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coordinate functionals of `B`, which span `B^*`.
pub fn dual_basis(b: &CoalgebraData) -> Vec<LinearMap> {
    let field = b.field();
    (0..b.dim)
        .map(|k| LinearMap::new(ExactMatrix::from_fn(field, 1, b.dim, |_, c| if c == k { field.one() } else { field.zero() })))
        .collect()
}

/// A linear map between two named comodules.
#[derive(Clone, Debug)]
pub struct NamedMorphism {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub map: LinearMap,
}

/// `θ(ε) = id`, `θ(f) ∘ θ(g) = θ(g ∗ f)` for all character pairs, and for each morphism
/// that intertwining every `θ`-action agrees with being a comodule morphism.
pub fn check_rep_correspondence(
    comodules: &BTreeMap<String, ComoduleData>,
    morphisms: &[NamedMorphism],
    chars: &[LinearMap],
    b: &CoalgebraData,
) -> Result<Report, TannakaError> {
    let mut r = Report::new("rep correspondence");
    for (name, m) in comodules {
        let id = LinearMap::identity(b.field(), m.space_dim);
        r.check_equal(format!("θ(ε) = id on {name}"), rep_of_comodule(m, &b.eps)?.matrix(), id.matrix());
        for (i, f) in chars.iter().enumerate() {
            for (j, g) in chars.iter().enumerate() {
                let lhs = rep_of_comodule(m, f)?.compose(&rep_of_comodule(m, g)?);
                let rhs = rep_of_comodule(m, &convolve_functionals(g, f, b)?)?;
                r.check_equal(format!("θ(χ{i})∘θ(χ{j}) = θ(χ{j}∗χ{i}) on {name}"), lhs.matrix(), rhs.matrix());
            }
        }
    }
    let probes = dual_basis(b);
    for nm in morphisms {
        let (m1, m2) = match (comodules.get(&nm.src), comodules.get(&nm.dst)) {
            (Some(a), Some(c)) => (a, c),
            _ => return Err(TannakaError::MissingCoaction(format!("{} or {}", nm.src, nm.dst))),
        };
        let is_morphism = check_comodule_morphism(&nm.map, m1, m2, b)?.all_passed();
        let acts = intertwines(&nm.map, m1, m2, &probes)?;
        r.check(
            format!("{} intertwines θ iff comodule morphism", nm.name),
            is_morphism == acts,
            Some(format!("morphism: {is_morphism}, intertwines: {acts}")),
        );
    }
    Ok(r)
}

/// Maps `V₁ → V₂` satisfying `ρ₂ f = (id ⊗ f) ρ₁`, flattened row-major.
pub fn comodule_morphism_space(m1: &ComoduleData, m2: &ComoduleData, b: &CoalgebraData) -> Result<SubspaceBasis, TannakaError> {
    let field = b.field();
    let (d1, d2) = (m1.space_dim, m2.space_dim);
    let id_b = b.id();
    let mut columns = Vec::with_capacity(d1 * d2);
    for r in 0..d2 {
        for c in 0..d1 {
            let e = LinearMap::new(ExactMatrix::from_fn(field, d2, d1, |i, j| {
                if (i, j) == (r, c) {
                    field.one()
                } else {
                    field.zero()
                }
            }));
            let defect = m2.rho.compose(&e).sub(&id_b.tensor(&e).compose(&m1.rho));
            columns.push(defect.matrix().to_rows().concat());
        }
    }
    let rows = b.dim * d2 * d1;
    let system = ExactMatrix::from_fn(field, rows, d1 * d2, |i, k| columns[k][i].clone());
    Ok(kernel_basis(&LinearMap::new(system)))
}

/// Span of `F(u)` over all paths `u: a → b`, found by closing `{id_{F(a)}}` under the
/// generators until nothing new appears.
pub fn path_image_span(cat: &PresentedCategory, f: &FiberFunctor, a: &str, b: &str) -> Result<SubspaceBasis, TannakaError> {
    let field = f.field();
    let da = f.dim(a);
    for o in [a, b] {
        if !cat.has_object(o) {
            return Err(crate::catpres::CatError::UnknownObject(o.to_string()).into());
        }
    }
    let mut spans: BTreeMap<String, SubspaceBasis> =
        cat.objects().iter().map(|o| (o.clone(), SubspaceBasis::zero(field, f.dim(o) * da))).collect();
    let id: Vec<Scalar> = LinearMap::identity(field, da).matrix().to_rows().concat();
    spans.insert(a.to_string(), SubspaceBasis::span(field, da * da, &[id]));
    loop {
        let mut changed = false;
        for g in cat.generators() {
            let (ds, dt) = (f.dim(&g.src), f.dim(&g.dst));
            let fg = f.generator_map(&g.name).matrix();
            let images: Vec<Vec<Scalar>> = spans[&g.src]
                .vectors()
                .iter()
                .map(|v| {
                    let m = ExactMatrix::from_fn(field, ds, da, |i, j| v[i * da + j].clone());
                    fg.matmul(&m).to_rows().concat()
                })
                .collect();
            let target = &spans[&g.dst];
            let grown = target.sum(&SubspaceBasis::span(field, dt * da, &images));
            if grown.dim() > target.dim() {
                spans.insert(g.dst.clone(), grown);
                changed = true;
            }
        }
        if !changed {
            return Ok(spans.remove(b).expect("object present"));
        }
    }
}

#[derive(Clone, Debug)]
pub struct FullnessWitness {
    pub comodule_morphisms: usize,
    pub path_images: usize,
    pub contained: bool,
}

impl FullnessWitness {
    pub fn holds(&self) -> bool {
        self.contained && self.comodule_morphisms == self.path_images
    }
}

/// Compares comodule morphisms `F(a) → F(b)` between lifted objects with the span of images of paths `a → b`.
pub fn fullness_witness(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    p: &CoendPresentation,
    a: &str,
    b: &str,
) -> Result<FullnessWitness, TannakaError> {
    let lift = lift_functor(cat, f, p)?;
    let morphisms = comodule_morphism_space(&lift.comodules[a], &lift.comodules[b], &lift.coalgebra)?;
    let paths = path_image_span(cat, f, a, b)?;
    Ok(FullnessWitness {
        comodule_morphisms: morphisms.dim(),
        path_images: paths.dim(),
        contained: morphisms.contains_subspace(&paths),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catpres::parse_document;
    use crate::coend::natvee;
    use crate::exactalg::Field;
    use crate::fixtures;
    use crate::tannaka::{characters, endvee_bialgebra};

    #[test]
    fn character_fixture_actions() {
        let d = parse_document(fixtures::get("z2_characters").unwrap(), None).unwrap();
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let b = endvee_bialgebra(&d.category, &d.functor, d.tensor.as_ref().unwrap(), &p).unwrap();
        let chars = characters(&b, None).unwrap();
        assert_eq!(chars.len(), 2);
        let lift = lift_functor(&d.category, &d.functor, &p).unwrap();
        let f = d.field;
        let chi = chars.iter().find(|c| **c != b.coalgebra.eps).unwrap();
        assert_eq!(chi.matrix().row(0), &[f.one(), f.from_i64(-1)]);
        assert_eq!(rep_of_comodule(&lift.comodules["s"], chi).unwrap().matrix().get(0, 0), &f.from_i64(-1));
        assert!(rep_of_comodule(&lift.comodules["1"], chi).unwrap().matrix().get(0, 0).is_one());
        let r = check_rep_correspondence(&lift.comodules, &[], &chars, &b.coalgebra).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn swap_is_the_only_extra_endomorphism_of_the_regular_lift() {
        let d = parse_document(fixtures::get("z2_regular").unwrap(), None).unwrap();
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let w = fullness_witness(&d.category, &d.functor, &p, "*", "*").unwrap();
        assert_eq!(w.comodule_morphisms, 2);
        assert!(w.holds());
    }

    #[test]
    fn non_morphism_fails_to_intertwine() {
        let d = parse_document(fixtures::get("z2_regular").unwrap(), None).unwrap();
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let lift = lift_functor(&d.category, &d.functor, &p).unwrap();
        let f = Field::Rational;
        let proj = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]));
        let m = &lift.comodules["*"];
        assert!(!intertwines(&proj, m, m, &dual_basis(&lift.coalgebra)).unwrap());
        let nm = NamedMorphism { name: "p".into(), src: "*".into(), dst: "*".into(), map: proj };
        let r = check_rep_correspondence(&lift.comodules, &[nm], &[], &lift.coalgebra).unwrap();
        assert!(r.all_passed());
    }
}

mod common;

use predual::coend::natvee;
use predual::exactalg::{ExactMatrix, Field, LinearMap, SubspaceBasis};
use predual::fixtures;
use predual::tannaka::{
    comatrix_coalgebra, convolution, endvee_coalgebra, grouplikes, lift_functor, parse_comodule_document, rep_of_comodule,
    rho_tilde, standard_comodule, AlgebraData, ComoduleDocument,
};

fn load(name: &str) -> ComoduleDocument {
    parse_comodule_document(fixtures::get(name).unwrap(), None).unwrap()
}

#[test]
fn random_relation_free_coalgebras_and_lifts() {
    let mut rng = common::rng(41);
    for field in [Field::Rational, Field::Prime(5)] {
        for _ in 0..20 {
            let (cat, f) = common::random_relation_free(&mut rng, field, 3, 4);
            let p = natvee(&cat, &f, &f).unwrap();
            let c = endvee_coalgebra(&p).unwrap();
            assert!(c.check().all_passed());
            let lift = lift_functor(&cat, &f, &p).unwrap();
            assert!(lift.report.all_passed(), "{}", lift.report);
            // Reconstructing from the lift itself returns the identity of End^∨(F).
            let rt = rho_tilde(&c, &cat, &f, &lift.comodules).unwrap();
            assert_eq!(rt.map, LinearMap::identity(field, c.dim));
        }
    }
}

#[test]
fn grouplikes_are_linearly_independent() {
    for name in fixtures::valid_names() {
        let d = load(name).document;
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let c = endvee_coalgebra(&p).unwrap();
        if let Ok(gl) = grouplikes(&c, None) {
            assert_eq!(SubspaceBasis::span(c.field(), c.dim, &gl).dim(), gl.len(), "{name}");
        }
    }
    // A matrix coalgebra of size n ≥ 2 is simple and has no grouplikes.
    for p in [2, 3] {
        assert_eq!(grouplikes(&comatrix_coalgebra(Field::Prime(p), 1), None).unwrap().len(), 1);
        assert!(grouplikes(&comatrix_coalgebra(Field::Prime(p), 2), None).unwrap().is_empty());
    }
}

/// `θ(χ)` on the standard comodule is the matrix `[χ(e_ij)]` read with rows and columns
/// exchanged: `θ(χ)(e_k) = Σ_i χ(e_ki) e_i`.
#[test]
fn comatrix_actions_match_functional_values() {
    let field = Field::Prime(2);
    let std = standard_comodule(field, 2);
    for code in 0..16u32 {
        let values: Vec<_> = (0..4).map(|k| field.from_i64(((code >> k) & 1) as i64)).collect();
        let chi = LinearMap::new(ExactMatrix::row_vector(field, &values));
        let theta = rep_of_comodule(&std, &chi).unwrap();
        let expected = ExactMatrix::from_fn(field, 2, 2, |i, k| values[k * 2 + i].clone());
        assert_eq!(theta.matrix(), &expected);
    }
}

#[test]
fn convolution_unit_law_on_random_functionals() {
    let mut rng = common::rng(42);
    for name in ["z2_regular", "z2_two_reps", "comatrix"] {
        let d = load(name).document;
        let p = natvee(&d.category, &d.functor, &d.functor).unwrap();
        let c = endvee_coalgebra(&p).unwrap();
        let k = AlgebraData::ground(c.field());
        let ue = k.u.compose(&c.eps);
        for _ in 0..5 {
            let f = common::random_map(&mut rng, c.field(), c.dim, 1);
            assert_eq!(convolution(&f, &ue, &c, &k).unwrap(), f);
            assert_eq!(convolution(&ue, &f, &c, &k).unwrap(), f);
            let g = common::random_map(&mut rng, c.field(), c.dim, 1);
            let h = common::random_map(&mut rng, c.field(), c.dim, 1);
            let left = convolution(&convolution(&f, &g, &c, &k).unwrap(), &h, &c, &k).unwrap();
            let right = convolution(&f, &convolution(&g, &h, &c, &k).unwrap(), &c, &k).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn comatrix_reconstruction_is_an_isomorphism() {
    for n in 1..=3 {
        let field = Field::Rational;
        let b = comatrix_coalgebra(field, n);
        let cat = predual::catpres::PresentedCategory::new(vec!["V".into()], vec![], vec![]).unwrap();
        let u = predual::catpres::FiberFunctor::new(&cat, field, [("V".to_string(), n)].into(), Default::default()).unwrap();
        let coactions = [("V".to_string(), standard_comodule(field, n))].into();
        let rt = rho_tilde(&b, &cat, &u, &coactions).unwrap();
        assert!(rt.is_bijective() && rt.report.all_passed());
        assert_eq!(rt.rank, n * n);
    }
}

mod common;

use predual::catpres::{
    parse_document, path_eval, validate_duality_data, validate_functor, validate_tensor_data, CatError, Path,
};
use predual::exactalg::LinearMap;
use predual::fixtures;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random composable word in the generators of `z2_two_reps`, starting at `start`.
fn random_path(rng: &mut rand_chacha::ChaCha8Rng, d: &predual::catpres::Document, start: &str, len: usize) -> Vec<String> {
    let mut at = start.to_string();
    let mut word = Vec::new();
    for _ in 0..len {
        let out: Vec<_> = d.category.generators().iter().filter(|g| g.src == at).collect();
        let g = out.choose(rng).unwrap();
        word.push(g.name.clone());
        at = g.dst.clone();
    }
    word
}

/// Replaces one occurrence of a relation side by the other side.
fn rewrite_once(d: &predual::catpres::Document, word: &[String], rng: &mut rand_chacha::ChaCha8Rng) -> Option<Vec<String>> {
    let mut options = Vec::new();
    for (p, q) in d.category.relations() {
        for (from, to) in [(p, q), (q, p)] {
            let pat = from.generators();
            if pat.is_empty() {
                continue;
            }
            for i in 0..word.len().saturating_sub(pat.len() - 1) {
                if word[i..i + pat.len()] == *pat {
                    let mut out = word[..i].to_vec();
                    out.extend(to.generators().iter().cloned());
                    out.extend(word[i + pat.len()..].iter().cloned());
                    options.push(out);
                }
            }
        }
    }
    options.choose(rng).cloned()
}

#[test]
fn relation_rewriting_preserves_evaluation() {
    let d = parse_document(fixtures::get("z2_two_reps").unwrap(), None).unwrap();
    let mut rng = common::rng(21);
    let mut rewrites = 0;
    for _ in 0..200 {
        let start = if rng.gen_bool(0.5) { "R" } else { "T" };
        let len = rng.gen_range(1..8);
        let word = random_path(&mut rng, &d, start, len);
        let before = path_eval(&d.category, &d.functor, &Path::Word(word.clone())).unwrap();
        let mut current = word;
        for _ in 0..4 {
            match rewrite_once(&d, &current, &mut rng) {
                Some(next) if !next.is_empty() => {
                    current = next;
                    rewrites += 1;
                }
                _ => break,
            }
        }
        let after = path_eval(&d.category, &d.functor, &Path::Word(current.clone())).unwrap();
        assert_eq!(before, after, "{current:?}");
    }
    assert!(rewrites > 50);
}

#[test]
fn perturbed_functor_breaks_a_relation() {
    let d = parse_document(fixtures::get("z2_regular").unwrap(), None).unwrap();
    let mut rng = common::rng(22);
    let mut caught = 0;
    for _ in 0..30 {
        let m = common::random_map(&mut rng, d.field, 2, 2);
        let sq = m.compose(&m);
        let functor = predual::catpres::FiberFunctor::new(
            &d.category,
            d.field,
            d.functor.on_objects().clone(),
            [("g".to_string(), m.clone())].into(),
        )
        .unwrap();
        let valid = validate_functor(&d.category, &functor).all_passed();
        assert_eq!(valid, sq == LinearMap::identity(d.field, 2));
        caught += (!valid) as usize;
    }
    assert!(caught > 0);
}

#[test]
fn broken_fixture_names_the_relation() {
    let d = parse_document(fixtures::get("broken_relation").unwrap(), None).unwrap();
    let r = validate_functor(&d.category, &d.functor);
    let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
    assert_eq!(failed, vec!["relation g.g = id_*".to_string()]);
}

#[test]
fn shipped_monoidal_fixtures_validate() {
    for name in fixtures::valid_names() {
        let d = parse_document(fixtures::get(name).unwrap(), None).unwrap();
        assert!(validate_functor(&d.category, &d.functor).all_passed(), "{name}");
        if let Some(t) = &d.tensor {
            assert!(validate_tensor_data(&d.category, &d.functor, t).all_passed(), "{name}");
            if let Some(dual) = &d.duality {
                assert!(validate_duality_data(&d.category, &d.functor, t, dual).all_passed(), "{name}");
            }
        }
    }
}

#[test]
fn schema_errors_are_reported() {
    let err = parse_document("{\"objects\": [\"A\"],\n \"functor\": {\"on_objects\": {\"A\": }}}", None).unwrap_err();
    assert!(matches!(&err, CatError::Json(msg) if msg.contains("line 2")), "{err}");
    let err = parse_document(r#"{"objects": ["A"]}"#, None).unwrap_err();
    assert!(matches!(err, CatError::MissingSection("functor")));
    let err = parse_document(
        r#"{"objects": ["A"], "generators": [{"name": "f", "src": "A", "dst": "B"}], "functor": {"on_objects": {"A": 1}}}"#,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, CatError::UnknownObject(ref o) if o == "B"), "{err}");
    let err = parse_document(
        r#"{"objects": ["A"], "generators": [{"name": "f", "src": "A", "dst": "A"}],
            "functor": {"on_objects": {"A": 2}, "on_generators": {"f": [["1"]]}}}"#,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, CatError::MatrixShape { .. }), "{err}");
}

#[test]
fn field_override_reduces_entries() {
    let text = fixtures::get("z2_regular").unwrap();
    let d = parse_document(text, Some("Fp:2".parse().unwrap())).unwrap();
    assert_eq!(d.field, predual::exactalg::Field::Prime(2));
    assert!(validate_functor(&d.category, &d.functor).all_passed());
    assert!(parse_document(text, Some(predual::exactalg::Field::Prime(4))).is_err());
}

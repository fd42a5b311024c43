//! Browser bindings. Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use predual::exactalg::Field;
use predual::fixtures;
use predual::jobs::{self, JobError, Outcome};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Outcome, JobError>) -> String {
    match result {
        Ok(outcome) => {
            let mut json = outcome.json;
            json["text"] = outcome.text.into();
            json.to_string()
        }
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

fn field_override(field: &str) -> Result<Option<Field>, JobError> {
    if field.trim().is_empty() {
        return Ok(None);
    }
    field.trim().parse().map(Some).map_err(|e| JobError::Usage(format!("{e}")))
}

/// Decides equality of two symmetry expressions; `dims` like `A=2,B=3` adds a matrix check.
#[wasm_bindgen]
pub fn coherence(left: &str, right: &str, dims: &str) -> String {
    respond((|| {
        let dims = if dims.trim().is_empty() { None } else { Some(jobs::parse_dims(dims)?) };
        jobs::coherence(left, right, dims.as_ref(), Field::Rational)
    })())
}

/// Full reconstruction of `End^∨(F)` for a JSON document; `field` may be empty.
#[wasm_bindgen]
pub fn reconstruct(document: &str, field: &str) -> String {
    respond(field_override(field).and_then(|f| jobs::reconstruct(&jobs::load(document, f)?)))
}

/// Characters of `End^∨(F)` and their actions.
#[wasm_bindgen]
pub fn characters(document: &str, field: &str) -> String {
    respond(field_override(field).and_then(|f| jobs::characters(&jobs::load(document, f)?)))
}

/// Names of the shipped example documents, as a JSON array.
#[wasm_bindgen]
pub fn fixture_names() -> String {
    serde_json::to_string(&fixtures::names().collect::<Vec<_>>()).expect("names serialize")
}

/// The text of a shipped example, or an empty string.
#[wasm_bindgen]
pub fn fixture(name: &str) -> String {
    fixtures::get(name).unwrap_or_default().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn reconstruct_a_fixture() {
        let v = parse(reconstruct(&fixture("z2_characters"), ""));
        assert_eq!(v["passed"], true);
        assert_eq!(v["coend"]["quotient_dim"], 2);
        assert!(v["text"].as_str().unwrap().contains("End^∨(F)"));
    }

    #[test]
    fn characters_over_a_prime_field() {
        let v = parse(characters(&fixture("z3_twisted"), "Fp:7"));
        assert_eq!(v["characters"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn coherence_and_errors() {
        let v = parse(coherence("(swap[A,B;0] ; swap[B,A;0])", "id[A,B]", "A=2,B=2"));
        assert_eq!((v["equal"].as_bool(), v["matrices_equal"].as_bool()), (Some(true), Some(true)));
        assert!(parse(coherence("swap[A", "id[A]", "")).get("error").is_some());
        assert!(parse(reconstruct("{", "")).get("error").is_some());
        assert!(parse(reconstruct(&fixture("trivial"), "Fp:4")).get("error").is_some());
        assert_eq!(parse(fixture_names()).as_array().unwrap().len(), fixtures::names().count());
    }
}

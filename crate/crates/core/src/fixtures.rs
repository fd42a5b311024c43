//! Example documents shipped with the crate.

/// `(name, JSON text)` pairs in a fixed order.
pub const ALL: &[(&str, &str)] = &[
    ("trivial", include_str!("../fixtures/trivial.json")),
    ("empty", include_str!("../fixtures/empty.json")),
    ("single_object", include_str!("../fixtures/single_object.json")),
    ("z2_regular", include_str!("../fixtures/z2_regular.json")),
    ("z2_two_reps", include_str!("../fixtures/z2_two_reps.json")),
    ("broken_relation", include_str!("../fixtures/broken_relation.json")),
    ("z2_characters", include_str!("../fixtures/z2_characters.json")),
    ("z3_twisted", include_str!("../fixtures/z3_twisted.json")),
    ("comatrix", include_str!("../fixtures/comatrix.json")),
    ("z2_functions", include_str!("../fixtures/z2_functions.json")),
];

pub fn get(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ALL.iter().map(|(n, _)| *n)
}

/// Fixtures whose functor satisfies its relations.
pub fn valid_names() -> impl Iterator<Item = &'static str> {
    names().filter(|n| *n != "broken_relation")
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CatError;
use crate::exactalg::{ExactMatrix, Field, LinearMap};
use crate::report::Report;

/// A generating morphism `name: src → dst`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// A composable sequence of generators, first generator applied first.
/// The empty path is written `{"id": C}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Path {
    Identity { id: String },
    Word(Vec<String>),
}

impl Path {
    pub fn identity(object: impl Into<String>) -> Self {
        Path::Identity { id: object.into() }
    }

    pub fn word<S: Into<String>>(gens: impl IntoIterator<Item = S>) -> Self {
        Path::Word(gens.into_iter().map(Into::into).collect())
    }

    pub fn generators(&self) -> &[String] {
        match self {
            Path::Identity { .. } => &[],
            Path::Word(w) => w,
        }
    }

    /// Concatenation, `self` first.
    pub fn then(&self, next: &Path) -> Path {
        match (self, next) {
            (Path::Identity { .. }, _) => next.clone(),
            (_, Path::Identity { .. }) => self.clone(),
            (Path::Word(a), Path::Word(b)) => Path::Word(a.iter().chain(b).cloned().collect()),
        }
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Path::Identity { id } => write!(f, "id_{id}"),
            Path::Word(w) => write!(f, "{}", w.join(".")),
        }
    }
}

/// A finite category given by objects, generators and relations between paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedCategory {
    objects: Vec<String>,
    generators: Vec<Generator>,
    relations: Vec<(Path, Path)>,
    object_index: BTreeMap<String, usize>,
    generator_index: BTreeMap<String, usize>,
}

impl PresentedCategory {
    pub fn new(objects: Vec<String>, generators: Vec<Generator>, relations: Vec<(Path, Path)>) -> Result<Self, CatError> {
        let mut object_index = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(CatError::Duplicate { kind: "object", name: o.clone() });
            }
        }
        let mut generator_index = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if generator_index.insert(g.name.clone(), i).is_some() {
                return Err(CatError::Duplicate { kind: "generator", name: g.name.clone() });
            }
            for end in [&g.src, &g.dst] {
                if !object_index.contains_key(end) {
                    return Err(CatError::UnknownObject(end.clone()));
                }
            }
        }
        let cat = PresentedCategory { objects, generators, relations, object_index, generator_index };
        for (p, q) in &cat.relations {
            let ends_p = cat.endpoints(p)?;
            let ends_q = cat.endpoints(q)?;
            if ends_p != ends_q {
                return Err(CatError::RelationEndpoints { left: p.to_string(), right: q.to_string() });
            }
        }
        Ok(cat)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }

    pub fn has_object(&self, name: &str) -> bool {
        self.object_index.contains_key(name)
    }

    pub fn object_position(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn generator(&self, name: &str) -> Result<&Generator, CatError> {
        self.generator_index
            .get(name)
            .map(|&i| &self.generators[i])
            .ok_or_else(|| CatError::UnknownGenerator(name.to_string()))
    }

    /// `(src, dst)` of a path, checking that consecutive generators compose.
    pub fn endpoints(&self, p: &Path) -> Result<(String, String), CatError> {
        match p {
            Path::Identity { id } => {
                if !self.has_object(id) {
                    return Err(CatError::UnknownObject(id.clone()));
                }
                Ok((id.clone(), id.clone()))
            }
            Path::Word(w) => {
                let first = w.first().ok_or(CatError::EmptyPath)?;
                let src = self.generator(first)?.src.clone();
                let mut at = src.clone();
                for name in w {
                    let g = self.generator(name)?;
                    if g.src != at {
                        return Err(CatError::NotComposable { path: p.to_string(), at: name.clone() });
                    }
                    at = g.dst.clone();
                }
                Ok((src, at))
            }
        }
    }
}

/// Object dimensions and generator matrices of a functor into coordinate spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberFunctor {
    field: Field,
    on_objects: BTreeMap<String, usize>,
    on_generators: BTreeMap<String, LinearMap>,
}

impl FiberFunctor {
    /// Checks that every object has a dimension and every generator a matrix of the right shape.
    pub fn new(
        cat: &PresentedCategory,
        field: Field,
        on_objects: BTreeMap<String, usize>,
        on_generators: BTreeMap<String, LinearMap>,
    ) -> Result<Self, CatError> {
        for o in cat.objects() {
            if !on_objects.contains_key(o) {
                return Err(CatError::MissingDimension(o.clone()));
            }
        }
        if let Some(extra) = on_objects.keys().find(|o| !cat.has_object(o)) {
            return Err(CatError::UnknownObject(extra.clone()));
        }
        for g in cat.generators() {
            let m = on_generators.get(&g.name).ok_or_else(|| CatError::MissingMatrix(g.name.clone()))?;
            let expected = (on_objects[&g.dst], on_objects[&g.src]);
            if (m.codomain_dim(), m.domain_dim()) != expected || m.field() != field {
                return Err(CatError::MatrixShape {
                    what: format!("generator {}", g.name),
                    expected,
                    found: (m.codomain_dim(), m.domain_dim()),
                });
            }
        }
        if let Some(extra) = on_generators.keys().find(|g| cat.generator(g).is_err()) {
            return Err(CatError::UnknownGenerator(extra.clone()));
        }
        Ok(FiberFunctor { field, on_objects, on_generators })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, object: &str) -> usize {
        self.on_objects.get(object).copied().unwrap_or_else(|| panic!("object {object:?} has no dimension"))
    }

    pub fn generator_map(&self, name: &str) -> &LinearMap {
        &self.on_generators[name]
    }

    pub fn on_objects(&self) -> &BTreeMap<String, usize> {
        &self.on_objects
    }

    pub fn on_generators(&self) -> &BTreeMap<String, LinearMap> {
        &self.on_generators
    }
}

/// Applies the functor to a path; `[g, h]` evaluates to `F(h) · F(g)`.
pub fn path_eval(cat: &PresentedCategory, functor: &FiberFunctor, p: &Path) -> Result<LinearMap, CatError> {
    let (src, _) = cat.endpoints(p)?;
    let mut acc = LinearMap::identity(functor.field(), functor.dim(&src));
    for name in p.generators() {
        acc = functor.generator_map(name).compose(&acc);
    }
    Ok(acc)
}

/// Checks every relation under the functor.
pub fn validate_functor(cat: &PresentedCategory, functor: &FiberFunctor) -> Report {
    let mut report = Report::new("functor");
    for (p, q) in cat.relations() {
        let name = format!("relation {p} = {q}");
        match (path_eval(cat, functor, p), path_eval(cat, functor, q)) {
            (Ok(a), Ok(b)) => {
                report.check_equal(name, a.matrix(), b.matrix());
            }
            (Err(e), _) | (_, Err(e)) => {
                report.fail(name, e.to_string());
            }
        }
    }
    if report.checks.is_empty() {
        report.pass("no relations to check");
    }
    report
}

/// The identity map of `F(object)`.
pub fn identity_at(functor: &FiberFunctor, object: &str) -> LinearMap {
    LinearMap::identity(functor.field(), functor.dim(object))
}

pub(crate) fn expect_shape(what: impl Into<String>, m: &ExactMatrix, rows: usize, cols: usize) -> Result<(), CatError> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(CatError::MatrixShape { what: what.into(), expected: (rows, cols), found: (m.rows(), m.cols()) });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(matrix: &[&[i64]]) -> (PresentedCategory, FiberFunctor) {
        let f = Field::Rational;
        let cat = PresentedCategory::new(
            vec!["*".into()],
            vec![Generator { name: "g".into(), src: "*".into(), dst: "*".into() }],
            vec![(Path::word(["g", "g"]), Path::identity("*"))],
        )
        .unwrap();
        let functor = FiberFunctor::new(
            &cat,
            f,
            [("*".to_string(), 2)].into(),
            [("g".to_string(), LinearMap::new(ExactMatrix::from_i64_rows(f, matrix)))].into(),
        )
        .unwrap();
        (cat, functor)
    }

    #[test]
    fn regular_representation_is_a_functor() {
        let (cat, functor) = z2(&[&[0, 1], &[1, 0]]);
        assert!(validate_functor(&cat, &functor).all_passed());
    }

    #[test]
    fn unipotent_matrix_violates_the_relation() {
        let (cat, functor) = z2(&[&[1, 1], &[0, 1]]);
        let report = validate_functor(&cat, &functor);
        assert!(!report.all_passed());
        assert_eq!(report.failures().next().unwrap().name, "relation g.g = id_*");
    }

    #[test]
    fn path_composition_order() {
        let f = Field::Rational;
        let cat = PresentedCategory::new(
            vec!["A".into(), "B".into(), "C".into()],
            vec![
                Generator { name: "g".into(), src: "A".into(), dst: "B".into() },
                Generator { name: "h".into(), src: "B".into(), dst: "C".into() },
            ],
            vec![],
        )
        .unwrap();
        let g = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 2], &[0, 1], &[3, 0]]));
        let h = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 1, 1]]));
        let functor = FiberFunctor::new(
            &cat,
            f,
            [("A".into(), 2), ("B".into(), 3), ("C".into(), 1)].into(),
            [("g".into(), g.clone()), ("h".into(), h.clone())].into(),
        )
        .unwrap();
        assert_eq!(path_eval(&cat, &functor, &Path::word(["g", "h"])).unwrap(), h.compose(&g));
        assert_eq!(path_eval(&cat, &functor, &Path::identity("B")).unwrap(), LinearMap::identity(f, 3));
        assert_eq!(path_eval(&cat, &functor, &Path::word(["g"])).unwrap(), g);
        assert!(matches!(path_eval(&cat, &functor, &Path::word(["h", "g"])), Err(CatError::NotComposable { .. })));
        assert!(validate_functor(&cat, &functor).all_passed());
    }

    #[test]
    fn structural_errors() {
        let dup = PresentedCategory::new(vec!["A".into(), "A".into()], vec![], vec![]);
        assert!(matches!(dup, Err(CatError::Duplicate { .. })));
        let bad_rel = PresentedCategory::new(
            vec!["A".into(), "B".into()],
            vec![Generator { name: "g".into(), src: "A".into(), dst: "B".into() }],
            vec![(Path::word(["g"]), Path::identity("A"))],
        );
        assert!(matches!(bad_rel, Err(CatError::RelationEndpoints { .. })));
    }
}

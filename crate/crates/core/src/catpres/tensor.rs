use std::collections::BTreeMap;

use super::category::identity_at;
use super::{path_eval, CatError, FiberFunctor, Path, PresentedCategory};
use crate::exactalg::{commutation_matrix, LinearMap};
use crate::report::Report;

/// Paths realizing `g ⊗ id_D` (`right`) and `id_D ⊗ g` (`left`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerRule {
    pub right: Path,
    pub left: Path,
}

/// Strict tensor structure on a presented category together with the monoidal
/// structure maps `s` and `f_unit` of the functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorData {
    pub unit: String,
    pub table: BTreeMap<(String, String), String>,
    /// Keyed by `(generator, object)`.
    pub whiskers: BTreeMap<(String, String), WhiskerRule>,
    /// `s_{C,D}: F(C) ⊗ F(D) → F(C ⊗ D)`.
    pub s: BTreeMap<(String, String), LinearMap>,
    /// `K → F(I)`.
    pub f_unit: LinearMap,
    /// Optional symmetry paths `C ⊗ D → D ⊗ C`.
    pub braiding: Option<BTreeMap<(String, String), Path>>,
}

impl TensorData {
    pub fn tensor(&self, c: &str, d: &str) -> Result<&str, CatError> {
        self.table
            .get(&(c.to_string(), d.to_string()))
            .map(String::as_str)
            .ok_or_else(|| CatError::MissingTensor { left: c.to_string(), right: d.to_string() })
    }

    pub fn s_map(&self, c: &str, d: &str) -> Result<&LinearMap, CatError> {
        self.s
            .get(&(c.to_string(), d.to_string()))
            .ok_or_else(|| CatError::MissingStructureMap { left: c.to_string(), right: d.to_string() })
    }

    pub fn whisker(&self, generator: &str, object: &str) -> Result<&WhiskerRule, CatError> {
        self.whiskers
            .get(&(generator.to_string(), object.to_string()))
            .ok_or_else(|| CatError::MissingWhisker { generator: generator.to_string(), object: object.to_string() })
    }
}

/// Table laws, whisker endpoints, invertibility and naturality of `s`, and the unit,
/// associativity and (when declared) symmetry diagrams of a tensor functor.
pub fn validate_tensor_data(cat: &PresentedCategory, functor: &FiberFunctor, t: &TensorData) -> Report {
    let mut r = Report::new("tensor");
    let objs = cat.objects();
    let field = functor.field();

    if !cat.has_object(&t.unit) {
        r.fail("unit object exists", format!("unknown object {:?}", t.unit));
        return r;
    }
    // Table totality.
    let mut total = true;
    for c in objs {
        for d in objs {
            match t.tensor(c, d) {
                Ok(cd) if cat.has_object(cd) => {}
                Ok(cd) => total &= r.fail(format!("table {c}⊗{d}"), format!("unknown object {cd:?}")),
                Err(e) => total &= r.fail(format!("table {c}⊗{d}"), e.to_string()),
            }
        }
    }
    if !total {
        return r;
    }
    r.pass("table is total");
    let tensor = |c: &str, d: &str| t.tensor(c, d).expect("table is total").to_string();
    for c in objs {
        let ok = tensor(&t.unit, c) == *c && tensor(c, &t.unit) == *c;
        r.check(format!("table unit law at {c}"), ok, (!ok).then(|| "I⊗C or C⊗I differs from C".to_string()));
    }
    for c in objs {
        for d in objs {
            for e in objs {
                let lhs = tensor(&tensor(c, d), e);
                let rhs = tensor(c, &tensor(d, e));
                let ok = lhs == rhs;
                r.check(format!("table associativity ({c},{d},{e})"), ok, (!ok).then(|| format!("{lhs} vs {rhs}")));
            }
        }
    }
    if !r.all_passed() {
        return r;
    }

    // Structure maps: shapes and invertibility.
    let f_shape_ok = t.f_unit.domain_dim() == 1 && t.f_unit.codomain_dim() == functor.dim(&t.unit);
    if !f_shape_ok || t.f_unit.inverse().is_none() {
        r.fail("f_unit is an invertible K → F(I)", format!("{:?}", t.f_unit));
        return r;
    }
    r.pass("f_unit is an invertible K → F(I)");
    for c in objs {
        for d in objs {
            let name = format!("s[{c},{d}] is invertible of the right shape");
            match t.s_map(c, d) {
                Ok(s) => {
                    let shape = (s.codomain_dim(), s.domain_dim());
                    let want = (functor.dim(&tensor(c, d)), functor.dim(c) * functor.dim(d));
                    if shape != want {
                        r.fail(name, format!("shape {shape:?}, expected {want:?}"));
                    } else if s.inverse().is_none() {
                        r.fail(name, "singular");
                    } else {
                        r.pass(name);
                    }
                }
                Err(e) => {
                    r.fail(name, e.to_string());
                }
            }
        }
    }
    if !r.all_passed() {
        return r;
    }
    let s = |c: &str, d: &str| t.s_map(c, d).expect("checked above");

    // Whisker paths and naturality of s.
    for g in cat.generators() {
        for d in objs {
            let rule = match t.whisker(&g.name, d) {
                Ok(rule) => rule,
                Err(e) => {
                    r.fail(format!("whiskers of {} with {d}", g.name), e.to_string());
                    continue;
                }
            };
            let right_ends = (tensor(&g.src, d), tensor(&g.dst, d));
            let left_ends = (tensor(d, &g.src), tensor(d, &g.dst));
            let ends_ok = cat.endpoints(&rule.right).ok() == Some(right_ends.clone())
                && cat.endpoints(&rule.left).ok() == Some(left_ends.clone());
            if !ends_ok {
                r.fail(
                    format!("whiskers of {} with {d}", g.name),
                    format!("expected {right_ends:?} and {left_ends:?}"),
                );
                continue;
            }
            let fg = functor.generator_map(&g.name);
            let id_d = identity_at(functor, d);
            let right = path_eval(cat, functor, &rule.right).expect("endpoints checked");
            let left = path_eval(cat, functor, &rule.left).expect("endpoints checked");
            r.check_equal(
                format!("s natural in {}⊗{d}", g.name),
                s(&g.dst, d).compose(&fg.tensor(&id_d)).matrix(),
                right.compose(s(&g.src, d)).matrix(),
            );
            r.check_equal(
                format!("s natural in {d}⊗{}", g.name),
                s(d, &g.dst).compose(&id_d.tensor(fg)).matrix(),
                left.compose(s(d, &g.src)).matrix(),
            );
        }
    }

    // Unit diagrams, with K ⊗ V = V = V ⊗ K as identity reindexings.
    for c in objs {
        let id_c = identity_at(functor, c);
        r.check_equal(
            format!("left unit diagram at {c}"),
            s(&t.unit, c).compose(&t.f_unit.tensor(&id_c)).matrix(),
            id_c.matrix(),
        );
        r.check_equal(
            format!("right unit diagram at {c}"),
            s(c, &t.unit).compose(&id_c.tensor(&t.f_unit)).matrix(),
            id_c.matrix(),
        );
    }

    // Associativity hexagon collapsed to a square by strictness.
    for c in objs {
        for d in objs {
            for e in objs {
                let id_c = identity_at(functor, c);
                let id_e = identity_at(functor, e);
                let lhs = s(&tensor(c, d), e).compose(&s(c, d).tensor(&id_e));
                let rhs = s(c, &tensor(d, e)).compose(&id_c.tensor(s(d, e)));
                r.check_equal(format!("associativity diagram ({c},{d},{e})"), lhs.matrix(), rhs.matrix());
            }
        }
    }

    // Symmetry: F(c_{C,D}) ∘ s_{C,D} = s_{D,C} ∘ ψ_{FC,FD}.
    if let Some(braiding) = &t.braiding {
        for c in objs {
            for d in objs {
                let name = format!("symmetry diagram ({c},{d})");
                let Some(path) = braiding.get(&(c.clone(), d.clone())) else {
                    r.fail(name, "missing braiding path");
                    continue;
                };
                if cat.endpoints(path).ok() != Some((tensor(c, d), tensor(d, c))) {
                    r.fail(name, format!("path {path} does not go {c}⊗{d} → {d}⊗{c}"));
                    continue;
                }
                let psi = LinearMap::new(commutation_matrix(field, functor.dim(c), functor.dim(d)));
                let lhs = path_eval(cat, functor, path).expect("endpoints checked").compose(s(c, d));
                let rhs = s(d, c).compose(&psi);
                r.check_equal(name, lhs.matrix(), rhs.matrix());
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catpres::{parse_document, validate_duality_data, validate_functor};
    use crate::exactalg::{ExactMatrix, Field};
    use crate::fixtures;

    fn doc(name: &str) -> crate::catpres::Document {
        parse_document(fixtures::get(name).unwrap(), None).unwrap()
    }

    #[test]
    fn fixtures_with_tensor_data_validate() {
        for name in ["trivial", "z2_characters", "z3_twisted"] {
            let d = doc(name);
            assert!(validate_functor(&d.category, &d.functor).all_passed(), "{name}");
            let t = d.tensor.as_ref().unwrap();
            let report = validate_tensor_data(&d.category, &d.functor, t);
            assert!(report.all_passed(), "{name}: {report}");
            let report = validate_duality_data(&d.category, &d.functor, t, d.duality.as_ref().unwrap());
            assert!(report.all_passed(), "{name}: {report}");
        }
    }

    #[test]
    fn rescaling_s_on_the_non_unit_pair_is_still_a_tensor_functor() {
        // With s[s,s] = 2 every associativity square reads 2 = 2 and the unit diagrams
        // never involve s[s,s]; the change is a coboundary.
        let mut d = doc("z2_characters");
        let t = d.tensor.as_mut().unwrap();
        let two = LinearMap::new(ExactMatrix::from_i64_rows(Field::Rational, &[&[2]]));
        t.s.insert(("s".into(), "s".into()), two.clone());
        assert!(validate_tensor_data(&d.category, &d.functor, t).all_passed());
        // The induced pairing rescales ε by 2 and η by 1/2, so the duality still validates.
        let report = validate_duality_data(&d.category, &d.functor, t, d.duality.as_ref().unwrap());
        assert!(report.all_passed(), "{report}");

        t.s.insert(("s".into(), "s".into()), LinearMap::identity(Field::Rational, 1));
        t.s.insert(("1".into(), "s".into()), two);
        let report = validate_tensor_data(&d.category, &d.functor, t);
        assert!(!report.find("left unit diagram at s").unwrap().passed);
    }

    #[test]
    fn evaluated_pairing_matches_moncat_triangles() {
        let d = doc("z3_twisted");
        let t = d.tensor.as_ref().unwrap();
        let dual = d.duality.as_ref().unwrap();
        for c in d.category.objects() {
            let ev = dual.evaluate(&d.category, &d.functor, t, c).unwrap();
            let mut p = ev.as_dual_pairing(&d.functor).unwrap();
            assert!(crate::moncat::check_triangles(&p), "{c}");
            p.coeval = p.coeval.scale(&Field::Rational.from_i64(2));
            assert!(!crate::moncat::check_triangles(&p), "{c}");
        }
    }
}

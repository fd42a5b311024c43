use std::collections::BTreeMap;

use super::category::identity_at;
use super::{path_eval, CatError, FiberFunctor, Path, PresentedCategory, TensorData};
use crate::exactalg::{ExactMatrix, LinearMap};
use crate::moncat::DualPairing;
use crate::report::Report;

/// Right dual `C ⊣ C^∧` given by paths `η: I → C^∧ ⊗ C` and `ε: C ⊗ C^∧ → I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEntry {
    pub dual: String,
    pub eta: Path,
    pub eps: Path,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityData {
    pub entries: BTreeMap<String, DualEntry>,
}

/// `η` and `ε` of one object pushed through the functor and the monoidal structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedDuality {
    pub object: String,
    pub dual: String,
    /// `F(C) ⊗ F(C^∧) → K`.
    pub eps: LinearMap,
    /// `K → F(C^∧) ⊗ F(C)`.
    pub eta: LinearMap,
}

impl EvaluatedDuality {
    /// `E[a][b] = ε(e_a ⊗ e'_b)`, a `dim F(C) × dim F(C^∧)` matrix.
    pub fn pairing_matrix(&self, dim_c: usize, dim_dual: usize) -> ExactMatrix {
        let row = self.eps.matrix();
        ExactMatrix::from_fn(row.field(), dim_c, dim_dual, |a, b| row.get(0, a * dim_dual + b).clone())
    }

    /// The same data as a pairing of `V = F(C^∧)` with `V^∨ = F(C)`.
    pub fn as_dual_pairing(&self, functor: &FiberFunctor) -> Option<DualPairing> {
        let n = functor.dim(&self.dual);
        if functor.dim(&self.object) != n {
            return None;
        }
        DualPairing::new(n, self.eps.clone(), self.eta.clone()).ok()
    }
}

impl DualityData {
    pub fn entry(&self, object: &str) -> Result<&DualEntry, CatError> {
        self.entries.get(object).ok_or_else(|| CatError::MissingDual(object.to_string()))
    }

    pub fn evaluate(
        &self,
        cat: &PresentedCategory,
        functor: &FiberFunctor,
        t: &TensorData,
        object: &str,
    ) -> Result<EvaluatedDuality, CatError> {
        let entry = self.entry(object)?;
        let dual = entry.dual.as_str();
        if !cat.has_object(dual) {
            return Err(CatError::UnknownObject(dual.to_string()));
        }
        let c_cd = t.tensor(object, dual)?.to_string();
        let cd_c = t.tensor(dual, object)?.to_string();
        let expect = |p: &Path, from: &str, to: &str| -> Result<(), CatError> {
            if cat.endpoints(p)? != (from.to_string(), to.to_string()) {
                return Err(CatError::DualityEndpoints { object: object.to_string(), path: p.to_string() });
            }
            Ok(())
        };
        expect(&entry.eps, &c_cd, &t.unit)?;
        expect(&entry.eta, &t.unit, &cd_c)?;
        let f_inv = t.f_unit.inverse().ok_or(CatError::Singular("f_unit"))?;
        let s_inv = t.s_map(dual, object)?.inverse().ok_or(CatError::Singular("s"))?;
        let eps = f_inv.compose(&path_eval(cat, functor, &entry.eps)?).compose(t.s_map(object, dual)?);
        let eta = s_inv.compose(&path_eval(cat, functor, &entry.eta)?).compose(&t.f_unit);
        Ok(EvaluatedDuality { object: object.to_string(), dual: dual.to_string(), eps, eta })
    }

    /// The dual of `F(g)` for `g: X → Y`, as a map `F(Y^∧) → F(X^∧)`.
    pub fn dual_of_generator(
        &self,
        cat: &PresentedCategory,
        functor: &FiberFunctor,
        t: &TensorData,
        generator: &str,
    ) -> Result<LinearMap, CatError> {
        let g = cat.generator(generator)?;
        let dx = self.evaluate(cat, functor, t, &g.src)?;
        let dy = self.evaluate(cat, functor, t, &g.dst)?;
        let id_xd = identity_at(functor, &dx.dual);
        let id_yd = identity_at(functor, &dy.dual);
        // F(Y^∧) → F(X^∧)⊗F(X)⊗F(Y^∧) → F(X^∧)⊗F(Y)⊗F(Y^∧) → F(X^∧)
        let open = dx.eta.tensor(&id_yd);
        let apply = id_xd.tensor(functor.generator_map(generator)).tensor(&id_yd);
        let close = id_xd.tensor(&dy.eps);
        Ok(close.compose(&apply).compose(&open))
    }
}

/// Triangle identities of every declared dual, invertibility of the induced pairing,
/// and the dual square `ε_Y (F(g) ⊗ id) = ε_X (id ⊗ F(g)^∧)` for every generator.
pub fn validate_duality_data(
    cat: &PresentedCategory,
    functor: &FiberFunctor,
    t: &TensorData,
    d: &DualityData,
) -> Report {
    let mut r = Report::new("duality");
    for c in cat.objects() {
        let ev = match d.evaluate(cat, functor, t, c) {
            Ok(ev) => ev,
            Err(e) => {
                r.fail(format!("duality data for {c}"), e.to_string());
                continue;
            }
        };
        let id_c = identity_at(functor, c);
        let id_cd = identity_at(functor, &ev.dual);
        let t1 = ev.eps.tensor(&id_c).compose(&id_c.tensor(&ev.eta));
        r.check_equal(format!("triangle (ε⊗id)(id⊗η) = id at {c}"), t1.matrix(), id_c.matrix());
        let t2 = id_cd.tensor(&ev.eps).compose(&ev.eta.tensor(&id_cd));
        r.check_equal(format!("triangle (id⊗ε)(η⊗id) = id at {c}"), t2.matrix(), id_cd.matrix());
        let e = ev.pairing_matrix(functor.dim(c), functor.dim(&ev.dual));
        let invertible = e.inverse().is_some();
        r.check(format!("pairing form at {c} is invertible"), invertible, (!invertible).then(|| format!("{e:?}")));
    }
    if !r.all_passed() {
        return r;
    }
    for g in cat.generators() {
        let name = format!("dual square for {}", g.name);
        let (dx, dy) = match (d.evaluate(cat, functor, t, &g.src), d.evaluate(cat, functor, t, &g.dst)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                r.fail(name, e.to_string());
                continue;
            }
        };
        let g_dual = match d.dual_of_generator(cat, functor, t, &g.name) {
            Ok(m) => m,
            Err(e) => {
                r.fail(name, e.to_string());
                continue;
            }
        };
        let lhs = dy.eps.compose(&functor.generator_map(&g.name).tensor(&identity_at(functor, &dy.dual)));
        let rhs = dx.eps.compose(&identity_at(functor, &g.src).tensor(&g_dual));
        r.check_equal(name, lhs.matrix(), rhs.matrix());
    }
    r
}

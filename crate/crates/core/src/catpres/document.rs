//! The JSON input document shared by the command line and the fixtures.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{CatError, DualEntry, DualityData, FiberFunctor, Generator, Path, PresentedCategory, TensorData, WhiskerRule};
use crate::exactalg::{ExactMatrix, Field, LinearMap};

/// Rows of scalar literals.
pub type RawMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFunctor {
    pub on_objects: BTreeMap<String, usize>,
    #[serde(default)]
    pub on_generators: BTreeMap<String, RawMatrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawWhisker {
    pub generator: String,
    pub object: String,
    /// `g ⊗ id_object`.
    pub right: Path,
    /// `id_object ⊗ g`.
    pub left: Path,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawStructureMap {
    pub left: String,
    pub right: String,
    pub matrix: RawMatrix,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBraiding {
    pub left: String,
    pub right: String,
    pub path: Path,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTensor {
    pub unit: String,
    /// Entries `[C, D, C⊗D]`.
    pub table: Vec<(String, String, String)>,
    #[serde(default)]
    pub whiskers: Vec<RawWhisker>,
    pub s: Vec<RawStructureMap>,
    pub f_unit: RawMatrix,
    #[serde(default)]
    pub braiding: Option<Vec<RawBraiding>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDual {
    pub object: String,
    pub dual: String,
    pub eta: Path,
    pub eps: Path,
}

/// The document as written. Sections used by other stages (coalgebra, coactions, ...)
/// are ignored here.
#[derive(Clone, Debug, Deserialize)]
pub struct RawDocument {
    #[serde(default)]
    pub field: Option<Field>,
    #[serde(default)]
    pub objects: Vec<String>,
    #[serde(default)]
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub relations: Vec<(Path, Path)>,
    #[serde(default)]
    pub functor: Option<RawFunctor>,
    #[serde(default)]
    pub tensor: Option<RawTensor>,
    #[serde(default)]
    pub duality: Option<Vec<RawDual>>,
}

/// A parsed and structurally checked document.
#[derive(Clone, Debug)]
pub struct Document {
    pub field: Field,
    pub category: PresentedCategory,
    pub functor: FiberFunctor,
    pub tensor: Option<TensorData>,
    pub duality: Option<DualityData>,
}

/// Resolves the field of a document, letting `override_field` win.
pub fn document_field(declared: Option<Field>, override_field: Option<Field>) -> Result<Field, CatError> {
    match override_field.or(declared).unwrap_or(Field::Rational) {
        Field::Prime(p) => Field::prime(p).map_err(CatError::from),
        Field::Rational => Ok(Field::Rational),
    }
}

/// Reads a matrix of the given shape; an empty row list stands for any `0 × cols` matrix.
pub fn matrix_from_raw(field: Field, raw: &RawMatrix, rows: usize, cols: usize, what: &str) -> Result<LinearMap, CatError> {
    let m = if raw.is_empty() {
        ExactMatrix::zeros(field, 0, cols)
    } else {
        crate::exactalg::parse_matrix(field, raw).map_err(|e| CatError::Scalar { what: what.to_string(), source: e })?
    };
    super::category::expect_shape(what, &m, rows, cols)?;
    Ok(LinearMap::new(m))
}

pub fn parse_document(text: &str, override_field: Option<Field>) -> Result<Document, CatError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CatError::Json(e.to_string()))?;
    build_document(&raw, override_field)
}

pub fn build_document(raw: &RawDocument, override_field: Option<Field>) -> Result<Document, CatError> {
    let field = document_field(raw.field, override_field)?;
    let category = PresentedCategory::new(raw.objects.clone(), raw.generators.clone(), raw.relations.clone())?;
    let rf = raw.functor.as_ref().ok_or(CatError::MissingSection("functor"))?;
    for o in category.objects() {
        if !rf.on_objects.contains_key(o) {
            return Err(CatError::MissingDimension(o.clone()));
        }
    }
    let mut on_generators = BTreeMap::new();
    for g in category.generators() {
        let m = rf.on_generators.get(&g.name).ok_or_else(|| CatError::MissingMatrix(g.name.clone()))?;
        let (rows, cols) = (rf.on_objects[&g.dst], rf.on_objects[&g.src]);
        on_generators.insert(g.name.clone(), matrix_from_raw(field, m, rows, cols, &format!("generator {}", g.name))?);
    }
    if let Some(extra) = rf.on_generators.keys().find(|g| category.generator(g).is_err()) {
        return Err(CatError::UnknownGenerator(extra.clone()));
    }
    let functor = FiberFunctor::new(&category, field, rf.on_objects.clone(), on_generators)?;
    let tensor = raw.tensor.as_ref().map(|t| build_tensor(field, &category, &functor, t)).transpose()?;
    let duality = raw.duality.as_ref().map(|entries| build_duality(&category, entries)).transpose()?;
    if duality.is_some() && tensor.is_none() {
        return Err(CatError::MissingSection("tensor (required by duality)"));
    }
    Ok(Document { field, category, functor, tensor, duality })
}

fn check_object(cat: &PresentedCategory, o: &str) -> Result<(), CatError> {
    if cat.has_object(o) {
        Ok(())
    } else {
        Err(CatError::UnknownObject(o.to_string()))
    }
}

fn build_tensor(field: Field, cat: &PresentedCategory, functor: &FiberFunctor, raw: &RawTensor) -> Result<TensorData, CatError> {
    check_object(cat, &raw.unit)?;
    let mut table = BTreeMap::new();
    for (c, d, cd) in &raw.table {
        for o in [c, d, cd] {
            check_object(cat, o)?;
        }
        if table.insert((c.clone(), d.clone()), cd.clone()).is_some() {
            return Err(CatError::Duplicate { kind: "tensor table entry", name: format!("{c}⊗{d}") });
        }
    }
    let mut whiskers = BTreeMap::new();
    for w in &raw.whiskers {
        cat.generator(&w.generator)?;
        check_object(cat, &w.object)?;
        let rule = WhiskerRule { right: w.right.clone(), left: w.left.clone() };
        if whiskers.insert((w.generator.clone(), w.object.clone()), rule).is_some() {
            return Err(CatError::Duplicate { kind: "whisker rule", name: format!("{} with {}", w.generator, w.object) });
        }
    }
    let mut s = BTreeMap::new();
    for entry in &raw.s {
        check_object(cat, &entry.left)?;
        check_object(cat, &entry.right)?;
        let key = (entry.left.clone(), entry.right.clone());
        let target = table.get(&key).ok_or_else(|| CatError::MissingTensor { left: key.0.clone(), right: key.1.clone() })?;
        let rows = functor.dim(target);
        let cols = functor.dim(&entry.left) * functor.dim(&entry.right);
        let m = matrix_from_raw(field, &entry.matrix, rows, cols, &format!("s[{},{}]", entry.left, entry.right))?;
        if s.insert(key, m).is_some() {
            return Err(CatError::Duplicate { kind: "structure map", name: format!("s[{},{}]", entry.left, entry.right) });
        }
    }
    let f_unit = matrix_from_raw(field, &raw.f_unit, functor.dim(&raw.unit), 1, "f_unit")?;
    let braiding = raw
        .braiding
        .as_ref()
        .map(|list| -> Result<_, CatError> {
            let mut out = BTreeMap::new();
            for b in list {
                check_object(cat, &b.left)?;
                check_object(cat, &b.right)?;
                out.insert((b.left.clone(), b.right.clone()), b.path.clone());
            }
            Ok(out)
        })
        .transpose()?;
    Ok(TensorData { unit: raw.unit.clone(), table, whiskers, s, f_unit, braiding })
}

fn build_duality(cat: &PresentedCategory, raw: &[RawDual]) -> Result<DualityData, CatError> {
    let mut entries = BTreeMap::new();
    for d in raw {
        check_object(cat, &d.object)?;
        check_object(cat, &d.dual)?;
        let entry = DualEntry { dual: d.dual.clone(), eta: d.eta.clone(), eps: d.eps.clone() };
        if entries.insert(d.object.clone(), entry).is_some() {
            return Err(CatError::Duplicate { kind: "dual entry", name: d.object.clone() });
        }
    }
    Ok(DualityData { entries })
}

use std::collections::BTreeMap;

use serde::Serialize;

use super::CoendError;
use crate::catpres::{validate_functor, FiberFunctor, PresentedCategory};
use crate::exactalg::{quotient, ExactMatrix, Field, LinearMap, Quotient, Scalar, SubspaceBasis};

/// One summand `F(C) ⊗ G(C)^∨` of the ambient space. Local index `(i, j)` sits at
/// `offset + i · gdim + j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub object: String,
    pub fdim: usize,
    pub gdim: usize,
    pub offset: usize,
}

impl Block {
    pub fn size(&self) -> usize {
        self.fdim * self.gdim
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        self.offset + i * self.gdim + j
    }
}

/// `Nat^∨(F, G)` as the quotient of `⊕_C F(C) ⊗ G(C)^∨` by the relations of the generators.
#[derive(Clone, Debug)]
pub struct CoendPresentation {
    field: Field,
    blocks: Vec<Block>,
    ambient_dim: usize,
    relation_span: SubspaceBasis,
    quotient: Quotient,
    lambda: Vec<LinearMap>,
}

/// Builds the coend presentation of `Nat^∨(F, G)`.
pub fn natvee(cat: &PresentedCategory, f: &FiberFunctor, g: &FiberFunctor) -> Result<CoendPresentation, CoendError> {
    let field = f.field();
    if g.field() != field {
        return Err(CoendError::FieldMismatch);
    }
    for (name, functor) in [("F", f), ("G", g)] {
        let report = validate_functor(cat, functor);
        let first_failure = report.failures().next().map(|c| c.name.clone());
        if let Some(bad) = first_failure {
            return Err(CoendError::InvalidFunctor(format!("{name}: {bad}")));
        }
    }
    let mut blocks = Vec::with_capacity(cat.objects().len());
    let mut offset = 0;
    for c in cat.objects() {
        let b = Block { object: c.clone(), fdim: f.dim(c), gdim: g.dim(c), offset };
        offset += b.size();
        blocks.push(b);
    }
    let ambient_dim = offset;
    let position: BTreeMap<&str, usize> = blocks.iter().enumerate().map(|(k, b)| (b.object.as_str(), k)).collect();

    let mut relations: Vec<Vec<Scalar>> = Vec::new();
    for gen in cat.generators() {
        let src = &blocks[position[gen.src.as_str()]];
        let dst = &blocks[position[gen.dst.as_str()]];
        let ff = f.generator_map(&gen.name).matrix();
        let gf = g.generator_map(&gen.name).matrix();
        for i in 0..src.fdim {
            for j in 0..dst.gdim {
                // e_i ⊗ G(f)^∨ φ_j in the source block minus F(f) e_i ⊗ φ_j in the target block.
                let mut v = vec![field.zero(); ambient_dim];
                for k in 0..src.gdim {
                    v[src.index(i, k)] += gf.get(j, k);
                }
                for l in 0..dst.fdim {
                    v[dst.index(l, j)] -= ff.get(l, i);
                }
                if v.iter().any(|x| !x.is_zero()) {
                    relations.push(v);
                }
            }
        }
    }
    let relation_span = SubspaceBasis::span(field, ambient_dim, &relations);
    let quotient = quotient(ambient_dim, &relation_span);
    let lambda = blocks
        .iter()
        .map(|b| {
            let cols: Vec<usize> = (b.offset..b.offset + b.size()).collect();
            LinearMap::new(quotient.proj.matrix().select_columns(&cols))
        })
        .collect();
    Ok(CoendPresentation { field, blocks, ambient_dim, relation_span, quotient, lambda })
}

impl CoendPresentation {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, object: &str) -> Result<&Block, CoendError> {
        self.blocks.iter().find(|b| b.object == object).ok_or_else(|| CoendError::UnknownObject(object.to_string()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient.representatives.len()
    }

    pub fn relation_span(&self) -> &SubspaceBasis {
        &self.relation_span
    }

    pub fn proj(&self) -> &LinearMap {
        &self.quotient.proj
    }

    pub fn section(&self) -> &LinearMap {
        &self.quotient.section
    }

    /// Ambient coordinates chosen as quotient basis.
    pub fn representatives(&self) -> &[usize] {
        &self.quotient.representatives
    }

    /// `λ_C: F(C) ⊗ G(C)^∨ → Nat^∨(F, G)`.
    pub fn lambda(&self, object: &str) -> Result<&LinearMap, CoendError> {
        let k = self
            .blocks
            .iter()
            .position(|b| b.object == object)
            .ok_or_else(|| CoendError::UnknownObject(object.to_string()))?;
        Ok(&self.lambda[k])
    }

    /// Human-readable label of quotient basis vector `q`: `[C: e_i ⊗ φ_j]`.
    pub fn basis_label(&self, q: usize) -> String {
        let amb = self.quotient.representatives[q];
        let b = self.blocks.iter().rev().find(|b| b.offset <= amb).expect("index lies in a block");
        let local = amb - b.offset;
        format!("[{}: e{} ⊗ φ{}]", b.object, local / b.gdim, local % b.gdim)
    }

    pub fn summary(&self) -> CoendSummary {
        CoendSummary {
            ambient_dim: self.ambient_dim,
            relation_rank: self.relation_span.dim(),
            quotient_dim: self.quotient_dim(),
            basis: (0..self.quotient_dim()).map(|q| self.basis_label(q)).collect(),
            lambda: self.blocks.iter().zip(&self.lambda).map(|(b, l)| (b.object.clone(), l.matrix().clone())).collect(),
        }
    }
}

/// JSON-friendly view of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct CoendSummary {
    pub ambient_dim: usize,
    pub relation_rank: usize,
    pub quotient_dim: usize,
    pub basis: Vec<String>,
    pub lambda: Vec<(String, ExactMatrix)>,
}

/// A map out of the quotient obtained from a map on the ambient space, together with
/// the part of the ambient map that does not factor through the projection.
#[derive(Clone, Debug)]
pub struct DescendedMap {
    pub map: LinearMap,
    /// `ambient − map ∘ proj`; zero exactly when the ambient map kills the relations.
    pub residue: ExactMatrix,
}

impl DescendedMap {
    pub fn is_well_defined(&self) -> bool {
        self.residue.is_zero()
    }
}

/// Pushes `ambient` (a map out of the ambient space) down to the quotient.
pub fn descend(p: &CoendPresentation, ambient: &LinearMap) -> DescendedMap {
    let map = ambient.compose(p.section());
    let residue = ambient.matrix().sub(map.compose(p.proj()).matrix());
    DescendedMap { map, residue }
}

/// Pushes a map out of `ambient_p ⊗ ambient_q` down to `quotient_p ⊗ quotient_q`.
pub fn descend_pair(p: &CoendPresentation, q: &CoendPresentation, ambient: &LinearMap) -> DescendedMap {
    let map = ambient.compose(&p.section().tensor(q.section()));
    let residue = ambient.matrix().sub(map.compose(&p.proj().tensor(q.proj())).matrix());
    DescendedMap { map, residue }
}

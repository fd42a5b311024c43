use super::MoncatError;
use crate::exactalg::{ExactMatrix, Field, LinearMap};

/// Evaluation `V^∨ ⊗ V → K` and coevaluation `K → V ⊗ V^∨` for a space of dimension `space_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairing {
    pub space_dim: usize,
    pub eval: LinearMap,
    pub coeval: LinearMap,
}

impl DualPairing {
    /// Wraps user-supplied maps after checking their shapes; the triangles are not checked.
    pub fn new(space_dim: usize, eval: LinearMap, coeval: LinearMap) -> Result<Self, MoncatError> {
        let sq = space_dim * space_dim;
        if eval.domain_dim() != sq || eval.codomain_dim() != 1 || coeval.domain_dim() != 1 || coeval.codomain_dim() != sq {
            return Err(MoncatError::PairingShape { space_dim });
        }
        Ok(DualPairing { space_dim, eval, coeval })
    }

    pub fn field(&self) -> Field {
        self.eval.field()
    }

    /// Residues `T1 - id_V` and `T2 - id_{V^∨}` of the two triangle identities.
    pub fn triangle_residues(&self) -> (ExactMatrix, ExactMatrix) {
        let f = self.field();
        let n = self.space_dim;
        let id = LinearMap::identity(f, n);
        // V → V ⊗ V^∨ ⊗ V → V
        let t1 = id.tensor(&self.eval).compose(&self.coeval.tensor(&id));
        // V^∨ → V^∨ ⊗ V ⊗ V^∨ → V^∨
        let t2 = self.eval.tensor(&id).compose(&id.tensor(&self.coeval));
        (t1.matrix().sub(id.matrix()), t2.matrix().sub(id.matrix()))
    }

    /// Moves the pairing along an invertible change of basis `p` of `V`:
    /// `eval' = eval ∘ (p^{-T} ⊗ p^{-1})`, `coeval' = (p ⊗ p^T) ∘ coeval`.
    pub fn transported(&self, p: &LinearMap) -> Result<DualPairing, MoncatError> {
        if p.domain_dim() != self.space_dim || p.codomain_dim() != self.space_dim {
            return Err(MoncatError::PairingShape { space_dim: self.space_dim });
        }
        let p_inv = p.inverse().ok_or(MoncatError::Singular)?;
        let eval = self.eval.compose(&p_inv.transpose().tensor(&p_inv));
        let coeval = p.tensor(&p.transpose()).compose(&self.coeval);
        Ok(DualPairing { space_dim: self.space_dim, eval, coeval })
    }
}

/// The pairing of `K^dim` with its coordinate dual: `ε(φ⊗v) = φ(v)`, `η(1) = Σ e_i ⊗ e_i^∨`.
pub fn standard_pairing(field: Field, dim: usize) -> DualPairing {
    let flat = ExactMatrix::from_fn(field, 1, dim * dim, |_, k| {
        if k / dim.max(1) == k % dim.max(1) {
            field.one()
        } else {
            field.zero()
        }
    });
    DualPairing { space_dim: dim, eval: LinearMap::new(flat.clone()), coeval: LinearMap::new(flat.transpose()) }
}

pub fn check_triangles(p: &DualPairing) -> bool {
    let (a, b) = p.triangle_residues();
    a.is_zero() && b.is_zero()
}

/// The dual of `f: Y → X` as the composite
/// `X^∨ → X^∨⊗Y⊗Y^∨ → X^∨⊗X⊗Y^∨ → Y^∨`, with `p_dom` pairing `X` and `p_cod` pairing `Y`.
pub fn dual_map(f: &LinearMap, p_dom: &DualPairing, p_cod: &DualPairing) -> Result<LinearMap, MoncatError> {
    let (x, y) = (f.codomain_dim(), f.domain_dim());
    if p_dom.space_dim != x || p_cod.space_dim != y {
        return Err(MoncatError::DualMapShape { map: (x, y), pairings: (p_dom.space_dim, p_cod.space_dim) });
    }
    let field = f.field();
    let id_x = LinearMap::identity(field, x);
    let id_y = LinearMap::identity(field, y);
    let insert = id_x.tensor(&p_cod.coeval);
    let apply = id_x.tensor(f).tensor(&id_y);
    let contract = p_dom.eval.tensor(&id_y);
    Ok(contract.compose(&apply).compose(&insert))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_pairings() {
        let f = Field::Rational;
        let p1 = standard_pairing(f, 1);
        assert_eq!(p1.eval.matrix(), &ExactMatrix::from_i64_rows(f, &[&[1]]));
        let p2 = standard_pairing(f, 2);
        assert_eq!(p2.coeval.matrix(), &ExactMatrix::from_i64_rows(f, &[&[1], &[0], &[0], &[1]]));
        let p0 = standard_pairing(f, 0);
        assert_eq!(p0.eval.domain_dim(), 0);
        for n in 0..=4 {
            assert!(check_triangles(&standard_pairing(f, n)), "n = {n}");
        }
    }

    #[test]
    fn scaled_coevaluation_breaks_triangles() {
        let f = Field::Rational;
        let mut p = standard_pairing(f, 2);
        p.coeval = p.coeval.scale(&f.from_i64(2));
        assert!(!check_triangles(&p));
    }

    #[test]
    fn dual_of_small_matrix_is_transpose() {
        let f = Field::Rational;
        let m = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]));
        let p = standard_pairing(f, 2);
        let d = dual_map(&m, &p, &p).unwrap();
        assert_eq!(d.matrix(), &ExactMatrix::from_i64_rows(f, &[&[1, 3], &[2, 4]]));
        assert_eq!(dual_map(&LinearMap::identity(f, 2), &p, &p).unwrap(), LinearMap::identity(f, 2));
        assert!(dual_map(&m, &standard_pairing(f, 3), &p).is_err());
    }

    #[test]
    fn transported_pairing_is_valid() {
        let f = Field::Rational;
        let p = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[2, 1], &[1, 1]]));
        let t = standard_pairing(f, 2).transported(&p).unwrap();
        assert!(check_triangles(&t));
        let singular = LinearMap::new(ExactMatrix::from_i64_rows(f, &[&[1, 1], &[1, 1]]));
        assert!(standard_pairing(f, 2).transported(&singular).is_err());
    }
}

use super::{descend, CoendError, CoendPresentation, DescendedMap};
use crate::exactalg::{ExactMatrix, LinearMap};

/// `η_C: F(C) → Nat^∨(F, G) ⊗ G(C)`, `η_C(e_k) = Σ_i λ_C(e_k ⊗ φ_i) ⊗ e_i`.
pub fn coevaluation(p: &CoendPresentation, object: &str) -> Result<LinearMap, CoendError> {
    let b = p.block(object)?;
    let lambda = p.lambda(object)?.matrix();
    let q = p.quotient_dim();
    let m = ExactMatrix::from_fn(p.field(), q * b.gdim, b.fdim, |row, k| {
        let (a, i) = (row / b.gdim, row % b.gdim);
        lambda.get(a, k * b.gdim + i).clone()
    });
    Ok(LinearMap::new(m))
}

/// Cocomposition on the ambient space of `Nat^∨(F, H)`, pushed to the quotient:
/// `[e_a ⊗ ψ_b]_C ↦ Σ_k λ^{FG}_C(e_a ⊗ φ_k) ⊗ λ^{GH}_C(e_k ⊗ ψ_b)`.
pub fn cocomposition_descended(
    p_fg: &CoendPresentation,
    p_gh: &CoendPresentation,
    p_fh: &CoendPresentation,
) -> Result<DescendedMap, CoendError> {
    let field = p_fh.field();
    let (q1, q2) = (p_fg.quotient_dim(), p_gh.quotient_dim());
    let mut amb = ExactMatrix::zeros(field, q1 * q2, p_fh.ambient_dim());
    for b in p_fh.blocks() {
        let b1 = p_fg.block(&b.object)?;
        let b2 = p_gh.block(&b.object)?;
        if b1.fdim != b.fdim || b1.gdim != b2.fdim || b2.gdim != b.gdim {
            return Err(CoendError::Incompatible(b.object.clone()));
        }
        let l1 = p_fg.lambda(&b.object)?.matrix();
        let l2 = p_gh.lambda(&b.object)?.matrix();
        let mid = b1.gdim;
        for a in 0..b.fdim {
            for c in 0..b.gdim {
                let col = b.index(a, c);
                for k in 0..mid {
                    let x_col = a * mid + k;
                    let y_col = k * b.gdim + c;
                    for r in 0..q1 {
                        let x = l1.get(r, x_col);
                        if x.is_zero() {
                            continue;
                        }
                        for s in 0..q2 {
                            let y = l2.get(s, y_col);
                            if !y.is_zero() {
                                let prev = amb.get(r * q2 + s, col).clone();
                                amb.set(r * q2 + s, col, &prev + &(x * y));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(descend(p_fh, &LinearMap::new(amb)))
}

/// `Δ: Nat^∨(F, H) → Nat^∨(F, G) ⊗ Nat^∨(G, H)`, verified to be well defined.
pub fn cocomposition(
    p_fg: &CoendPresentation,
    p_gh: &CoendPresentation,
    p_fh: &CoendPresentation,
) -> Result<LinearMap, CoendError> {
    let d = cocomposition_descended(p_fg, p_gh, p_fh)?;
    if !d.is_well_defined() {
        return Err(CoendError::NotWellDefined { what: "cocomposition", residue: d.residue.max_norm().to_string() });
    }
    Ok(d.map)
}

/// The evaluation form `[e_i ⊗ φ_j]_C ↦ δ_ij` on the ambient space of `End^∨(F)`, pushed down.
pub fn counit_descended(p: &CoendPresentation) -> Result<DescendedMap, CoendError> {
    let field = p.field();
    let mut amb = ExactMatrix::zeros(field, 1, p.ambient_dim());
    for b in p.blocks() {
        if b.fdim != b.gdim {
            return Err(CoendError::NotEndomorphism(b.object.clone()));
        }
        for i in 0..b.fdim {
            amb.set(0, b.index(i, i), field.one());
        }
    }
    Ok(descend(p, &LinearMap::new(amb)))
}

/// `ε: End^∨(F) → K`, verified to be well defined.
pub fn counit(p: &CoendPresentation) -> Result<LinearMap, CoendError> {
    let d = counit_descended(p)?;
    if !d.is_well_defined() {
        return Err(CoendError::NotWellDefined { what: "counit", residue: d.residue.max_norm().to_string() });
    }
    Ok(d.map)
}

use std::collections::BTreeMap;

use serde::Serialize;

use super::{CoendError, CoendPresentation};
use crate::catpres::{FiberFunctor, PresentedCategory};
use crate::exactalg::{kernel_basis, ExactMatrix, LinearMap, Scalar};
use crate::report::Report;

/// A family `θ_C: F(C) → G(C)`, keyed by object.
pub type NatTrans = BTreeMap<String, LinearMap>;

/// A basis of `Nat(F, G)`.
#[derive(Clone, Debug, Serialize)]
pub struct EndSpace {
    pub basis: Vec<NatTrans>,
    pub dim: usize,
}

/// Unknown layout: `θ_C[j][i]` is unknown `offset_C + i · dim G(C) + j`.
fn unknown_offsets(cat: &PresentedCategory, f: &FiberFunctor, g: &FiberFunctor) -> (BTreeMap<String, usize>, usize) {
    let mut offsets = BTreeMap::new();
    let mut n = 0;
    for c in cat.objects() {
        offsets.insert(c.clone(), n);
        n += f.dim(c) * g.dim(c);
    }
    (offsets, n)
}

/// Solves `θ_{C'} F(f) = G(f) θ_C` for every generator `f: C → C'`.
pub fn nat_space(cat: &PresentedCategory, f: &FiberFunctor, g: &FiberFunctor) -> EndSpace {
    let field = f.field();
    let (offsets, n) = unknown_offsets(cat, f, g);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for gen in cat.generators() {
        let (c, c2) = (&gen.src, &gen.dst);
        let (fc, gc, fc2, gc2) = (f.dim(c), g.dim(c), f.dim(c2), g.dim(c2));
        let ff = f.generator_map(&gen.name).matrix();
        let gf = g.generator_map(&gen.name).matrix();
        for j in 0..gc2 {
            for i in 0..fc {
                let mut row = vec![field.zero(); n];
                // (θ_{C'} F(f))[j][i] = Σ_l θ_{C'}[j][l] F(f)[l][i]
                for l in 0..fc2 {
                    row[offsets[c2] + l * gc2 + j] += ff.get(l, i);
                }
                // (G(f) θ_C)[j][i] = Σ_k G(f)[j][k] θ_C[k][i]
                for k in 0..gc {
                    row[offsets[c] + i * gc + k] -= gf.get(j, k);
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        ExactMatrix::zeros(field, 0, n)
    } else {
        ExactMatrix::from_rows(field, rows).expect("rows share one length")
    };
    let kernel = kernel_basis(&LinearMap::new(system));
    let basis: Vec<NatTrans> = kernel.vectors().iter().map(|v| unflatten(cat, f, g, &offsets, v)).collect();
    EndSpace { dim: basis.len(), basis }
}

fn unflatten(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    g: &FiberFunctor,
    offsets: &BTreeMap<String, usize>,
    v: &[Scalar],
) -> NatTrans {
    cat.objects()
        .iter()
        .map(|c| {
            let (fc, gc) = (f.dim(c), g.dim(c));
            let m = ExactMatrix::from_fn(f.field(), gc, fc, |j, i| v[offsets[c] + i * gc + j].clone());
            (c.clone(), LinearMap::new(m))
        })
        .collect()
}

/// The natural transformation of a functional `ξ` on `Nat^∨(F, G)`:
/// `θ_C(e_i) = Σ_j ξ(λ_C(e_i ⊗ φ_j)) e_j`.
pub fn pairing_to_nat(p: &CoendPresentation, xi: &[Scalar]) -> Result<NatTrans, CoendError> {
    if xi.len() != p.quotient_dim() {
        return Err(CoendError::Length { expected: p.quotient_dim(), found: xi.len() });
    }
    let field = p.field();
    let row = ExactMatrix::row_vector(field, xi);
    let mut out = NatTrans::new();
    for b in p.blocks() {
        let values = row.matmul(p.lambda(&b.object)?.matrix());
        let m = ExactMatrix::from_fn(field, b.gdim, b.fdim, |j, i| values.get(0, i * b.gdim + j).clone());
        out.insert(b.object.clone(), LinearMap::new(m));
    }
    Ok(out)
}

/// Inverse of [`pairing_to_nat`]: solves `ξ ∘ λ_C = θ_C` on every block.
/// Returns `None` when `θ` is not natural.
pub fn nat_to_pairing(p: &CoendPresentation, theta: &NatTrans) -> Result<Option<Vec<Scalar>>, CoendError> {
    let field = p.field();
    let mut target = vec![field.zero(); p.ambient_dim()];
    for b in p.blocks() {
        let m = theta.get(&b.object).ok_or_else(|| CoendError::UnknownObject(b.object.clone()))?;
        if (m.codomain_dim(), m.domain_dim()) != (b.gdim, b.fdim) {
            return Err(CoendError::Length { expected: b.size(), found: m.codomain_dim() * m.domain_dim() });
        }
        for i in 0..b.fdim {
            for j in 0..b.gdim {
                target[b.index(i, j)] = m.matrix().get(j, i).clone();
            }
        }
    }
    // ξ · proj = target, i.e. projᵀ ξ = target.
    Ok(p.proj().matrix().transpose().solve(&target))
}

/// Checks that [`pairing_to_nat`] is a bijection `Nat^∨(F, G)^* → Nat(F, G)`: images of
/// the coordinate functionals are natural and independent, and every basis transformation
/// comes back from [`nat_to_pairing`].
pub fn pairing_report(
    cat: &PresentedCategory,
    f: &FiberFunctor,
    g: &FiberFunctor,
    p: &CoendPresentation,
) -> Result<Report, CoendError> {
    let field = p.field();
    let q = p.quotient_dim();
    let nat = nat_space(cat, f, g);
    let mut r = Report::new("pairing");
    r.check(
        "dim Nat^∨(F,G) = dim Nat(F,G)",
        q == nat.dim,
        (q != nat.dim).then(|| format!("{q} vs {}", nat.dim)),
    );
    let mut images = Vec::with_capacity(q);
    let mut natural = true;
    for k in 0..q {
        let xi: Vec<Scalar> = (0..q).map(|i| if i == k { field.one() } else { field.zero() }).collect();
        let theta = pairing_to_nat(p, &xi)?;
        natural &= cat.generators().iter().all(|gen| {
            theta[&gen.dst].compose(f.generator_map(&gen.name)) == g.generator_map(&gen.name).compose(&theta[&gen.src])
        });
        images.push(theta.values().flat_map(|m| m.matrix().to_rows().concat()).collect::<Vec<_>>());
    }
    r.check("every functional gives a natural transformation", natural, None);
    let rank = if q == 0 { 0 } else { ExactMatrix::from_rows(field, images).expect("equal lengths").rank() };
    r.check("pairing_to_nat is injective", rank == q, (rank != q).then(|| format!("rank {rank} of {q}")));
    let mut round_trip = true;
    for theta in &nat.basis {
        round_trip &= match nat_to_pairing(p, theta)? {
            Some(xi) => pairing_to_nat(p, &xi)? == *theta,
            None => false,
        };
    }
    r.check("every natural transformation comes from a functional", round_trip, None);
    Ok(r)
}

#![allow(dead_code)]

use std::collections::BTreeMap;

use predual::catpres::{FiberFunctor, Generator, PresentedCategory};
use predual::coend::{nat_space, nat_to_pairing, pairing_to_nat, CoendPresentation, NatTrans};
use predual::exactalg::{ExactMatrix, Field, LinearMap, Scalar};
use predual::moncat::{perm_of, ObjectWord, Permutation, SymExpr};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const ATOMS: [&str; 3] = ["A", "B", "C"];

pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> ObjectWord {
    let n = rng.gen_range(1..=max_len);
    ObjectWord::new((0..n).map(|_| *ATOMS.choose(rng).unwrap()))
}

/// A random well-formed expression with the given domain.
pub fn random_expr(rng: &mut ChaCha8Rng, word: &ObjectWord, depth: usize) -> SymExpr {
    let n = word.len();
    let choice = if depth == 0 { rng.gen_range(0..2) } else { rng.gen_range(0..5) };
    match choice {
        0 => SymExpr::id(word.clone()),
        1 if n >= 2 => SymExpr::swap(word.clone(), rng.gen_range(0..n - 1)),
        1 => SymExpr::id(word.clone()),
        2 | 3 => {
            let first = random_expr(rng, word, depth - 1);
            let mid = first.codomain().expect("generated expressions are well formed");
            first.then(random_expr(rng, &mid, depth - 1))
        }
        _ if n >= 2 => {
            let k = rng.gen_range(1..n);
            let left = ObjectWord(word.0[..k].to_vec());
            let right = ObjectWord(word.0[k..].to_vec());
            random_expr(rng, &left, depth - 1).tensor(random_expr(rng, &right, depth - 1))
        }
        _ => SymExpr::id(word.clone()),
    }
}

/// A random permutation of the codomain positions that fixes the atom labels.
fn label_preserving(rng: &mut ChaCha8Rng, word: &ObjectWord) -> Permutation {
    let mut perm: Vec<usize> = (0..word.len()).collect();
    for atom in ATOMS {
        let positions: Vec<usize> = (0..word.len()).filter(|&i| word.0[i] == atom).collect();
        let mut shuffled = positions.clone();
        shuffled.shuffle(rng);
        for (p, q) in positions.iter().zip(&shuffled) {
            perm[*p] = *q;
        }
    }
    Permutation(perm)
}

/// Two parallel expressions. Roughly half the time the second is built from the
/// permutation of the first; otherwise it is an unrelated expression bent onto the same
/// codomain by a label-preserving permutation.
pub fn random_parallel_pair(rng: &mut ChaCha8Rng, max_len: usize) -> (SymExpr, SymExpr) {
    let word = random_word(rng, max_len);
    let e1 = random_expr(rng, &word, 3);
    let target = e1.codomain().unwrap();
    let e2 = if rng.gen_bool(0.5) {
        // prefix, then whatever finishes the permutation of e1
        let prefix = random_expr(rng, &word, 2);
        let mid = prefix.codomain().unwrap();
        let rest = perm_of(&prefix).unwrap().inverse().then(&perm_of(&e1).unwrap());
        prefix.then(SymExpr::from_permutation(&mid, &rest).unwrap())
    } else {
        let other = random_expr(rng, &word, 3);
        let mid = other.codomain().unwrap();
        // Permute `mid` onto `target`: both are rearrangements of `word`.
        let mut used = vec![false; mid.len()];
        let to_target: Vec<usize> = mid
            .0
            .iter()
            .map(|a| {
                let j = (0..target.len()).find(|&j| !used[j] && target.0[j] == *a).unwrap();
                used[j] = true;
                j
            })
            .collect();
        let fix = Permutation(to_target).then(&label_preserving(rng, &target));
        other.then(SymExpr::from_permutation(&mid, &fix).unwrap())
    };
    assert_eq!(e2.codomain().unwrap(), target);
    (e1, e2)
}

pub fn random_dims(rng: &mut ChaCha8Rng, choices: &[usize]) -> BTreeMap<String, usize> {
    ATOMS.iter().map(|a| (a.to_string(), *choices.choose(rng).unwrap())).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(field, rows, cols, |_, _| field.from_i64(rng.gen_range(-3..=3)))
}

pub fn random_map(rng: &mut ChaCha8Rng, field: Field, domain: usize, codomain: usize) -> LinearMap {
    LinearMap::new(random_matrix(rng, field, codomain, domain))
}

/// A category with no relations, `≤ max_objects` objects and `≤ max_generators` generators,
/// and a random functor on it.
pub fn random_relation_free(
    rng: &mut ChaCha8Rng,
    field: Field,
    max_objects: usize,
    max_generators: usize,
) -> (PresentedCategory, FiberFunctor) {
    let n = rng.gen_range(1..=max_objects);
    let objects: Vec<String> = (0..n).map(|i| format!("O{i}")).collect();
    let g = rng.gen_range(0..=max_generators);
    let generators: Vec<Generator> = (0..g)
        .map(|i| Generator {
            name: format!("g{i}"),
            src: objects.choose(rng).unwrap().clone(),
            dst: objects.choose(rng).unwrap().clone(),
        })
        .collect();
    let cat = PresentedCategory::new(objects.clone(), generators.clone(), vec![]).unwrap();
    let dims: BTreeMap<String, usize> = objects.iter().map(|o| (o.clone(), rng.gen_range(0..=2))).collect();
    let maps: BTreeMap<String, LinearMap> = generators
        .iter()
        .map(|gen| (gen.name.clone(), random_map(rng, field, dims[&gen.src], dims[&gen.dst])))
        .collect();
    let functor = FiberFunctor::new(&cat, field, dims, maps).unwrap();
    (cat, functor)
}

fn flatten(theta: &NatTrans) -> Vec<Scalar> {
    theta.values().flat_map(|m| m.matrix().to_rows().concat()).collect()
}

/// Rank of the images of the coordinate functionals and surjectivity onto `Nat(F, G)`.
pub fn pairing_is_bijective(cat: &PresentedCategory, f: &FiberFunctor, g: &FiberFunctor, p: &CoendPresentation) -> bool {
    let field = p.field();
    let q = p.quotient_dim();
    let images: Vec<Vec<Scalar>> = (0..q)
        .map(|k| {
            let xi: Vec<Scalar> = (0..q).map(|i| if i == k { field.one() } else { field.zero() }).collect();
            flatten(&pairing_to_nat(p, &xi).unwrap())
        })
        .collect();
    let injective = q == 0 || ExactMatrix::from_rows(field, images).unwrap().rank() == q;
    let nat = nat_space(cat, f, g);
    let surjective = nat.basis.iter().all(|theta| nat_to_pairing(p, theta).unwrap().is_some());
    injective && surjective && nat.dim == q
}

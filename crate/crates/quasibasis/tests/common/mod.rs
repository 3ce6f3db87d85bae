//! Shared helpers for the integration suites: seeded random instances over
//! a fixed entry palette, plus exact reconstruction helpers.

#![allow(dead_code)]

use num_bigint::BigInt;
use quasibasis::{AtomSpace, Field, GeneratorSet, ModVector, Rational, RingElem};
use rand::Rng;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The nonzero entry palette: {−2, −1, 1, 2, 1/2, −1/3}.
pub fn nonzero_palette() -> Vec<Rational> {
    vec![
        ratio(-2, 1),
        ratio(-1, 1),
        ratio(1, 1),
        ratio(2, 1),
        ratio(1, 2),
        ratio(-1, 3),
    ]
}

/// One random entry: zero with probability `sparsity`, otherwise drawn from
/// the nonzero palette.
pub fn random_entry<R: Rng>(rng: &mut R, sparsity: f64) -> Rational {
    if rng.gen_bool(sparsity) {
        ratio(0, 1)
    } else {
        let palette = nonzero_palette();
        palette[rng.gen_range(0..palette.len())].clone()
    }
}

pub fn random_ring_elem<R: Rng>(rng: &mut R, space: &AtomSpace, sparsity: f64) -> RingElem {
    let values = (0..space.atom_count())
        .map(|_| random_entry(rng, sparsity))
        .collect();
    RingElem::new(space, values).unwrap()
}

/// A random unit of the ring: nonzero at every atom.
pub fn random_unit<R: Rng>(rng: &mut R, space: &AtomSpace) -> RingElem {
    let palette = nonzero_palette();
    let values = (0..space.atom_count())
        .map(|_| palette[rng.gen_range(0..palette.len())].clone())
        .collect();
    RingElem::new(space, values).unwrap()
}

pub fn random_vector<R: Rng>(
    rng: &mut R,
    space: &AtomSpace,
    ambient_rank: usize,
    sparsity: f64,
) -> ModVector {
    let coords = (0..ambient_rank)
        .map(|_| random_ring_elem(rng, space, sparsity))
        .collect();
    ModVector::new(space, coords).unwrap()
}

/// A randomized instance: `atoms` atoms, ambient rank in `1..=max_rank`,
/// `1..=max_gens` generators, entries drawn with a random sparsity knob.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    max_atoms: usize,
    max_rank: usize,
    max_gens: usize,
) -> (AtomSpace, GeneratorSet) {
    let atoms = rng.gen_range(1..=max_atoms);
    let ambient_rank = rng.gen_range(1..=max_rank);
    let gens_count = rng.gen_range(1..=max_gens);
    let sparsity = rng.gen_range(0.0..0.8);
    let space = AtomSpace::new(atoms).unwrap();
    let gens = (0..gens_count)
        .map(|_| random_vector(rng, &space, ambient_rank, sparsity))
        .collect();
    (
        space.clone(),
        GeneratorSet::new(&space, ambient_rank, gens).unwrap(),
    )
}

/// Exact Σ coeffs[j]·vectors[j].
pub fn combine(
    space: &AtomSpace,
    ambient_rank: usize,
    coeffs: &[RingElem],
    vectors: &[ModVector],
) -> ModVector {
    let mut acc = ModVector::zero(space, ambient_rank).unwrap();
    for (coeff, vector) in coeffs.iter().zip(vectors) {
        acc = acc.add(&vector.scale(coeff).unwrap()).unwrap();
    }
    acc
}

/// Fiber of a generator set at one atom, as columns.
pub fn fiber_columns(gens: &GeneratorSet, atom: usize) -> Vec<Vec<Rational>> {
    gens.generators()
        .iter()
        .map(|g| g.fiber(atom).unwrap())
        .collect()
}

/// Test-side membership decision for one fiber, by rank comparison with its
/// own elimination (independent of the library's solver).
pub fn fiber_in_span(columns: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let base = test_rank(columns);
    let mut augmented = columns.to_vec();
    augmented.push(rhs.to_vec());
    test_rank(&augmented) == base
}

/// Plain Gaussian elimination rank, written here so the acceptance checks do
/// not share code with the crate under test.
pub fn test_rank(columns: &[Vec<Rational>]) -> usize {
    let rows = columns.first().map_or(0, Vec::len);
    let cols = columns.len();
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let mut pivot = None;
        for row in rank..rows {
            if !Field::is_zero(&mat[row][col]) {
                pivot = Some(row);
                break;
            }
        }
        let Some(pivot) = pivot else { continue };
        mat.swap(rank, pivot);
        for row in rank + 1..rows {
            if Field::is_zero(&mat[row][col]) {
                continue;
            }
            let factor = &mat[row][col] / &mat[rank][col];
            for c in col..cols {
                let delta = &mat[rank][c] * &factor;
                mat[row][c] = &mat[row][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

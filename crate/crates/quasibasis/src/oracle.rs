//! Componentwise ground truth for rank stratification.
//!
//! The oracle answers one question per atom: what is the rank over `K` of
//! the matrix whose columns are the generator fibers there? Grouping atoms
//! by that rank gives a stratification that any correct quasi-basis
//! construction must reproduce exactly. The elimination here is deliberately
//! self-contained (forward elimination only, no witnesses) so it shares no
//! code with the solver the construction uses.

use crate::basis::RankProfile;
use crate::field::Field;
use crate::module::GeneratorSet;
use crate::space::Idempotent;

/// Rank over `K` of a matrix given as a list of columns.
pub(crate) fn column_rank<F: Field>(columns: &[Vec<F>]) -> usize {
    let rows = columns.first().map_or(0, Vec::len);
    // row-major working copy
    let mut mat: Vec<Vec<F>> = (0..rows)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let cols = columns.len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !mat[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inv().expect("pivot is nonzero");
        for r in rank + 1..rows {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].mul(&inv);
            for c in col..cols {
                let delta = mat[rank][c].mul(&factor);
                mat[r][c] = mat[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Fiber ranks of a generator set, one per atom.
pub fn fiber_ranks<F: Field>(gens: &GeneratorSet<F>) -> Vec<usize> {
    gens.space()
        .atoms()
        .map(|atom| {
            let columns: Vec<Vec<F>> = gens
                .generators()
                .iter()
                .map(|g| g.fiber_unchecked(atom))
                .collect();
            column_rank(&columns)
        })
        .collect()
}

/// The ground-truth rank profile: stratum `j` is the set of atoms whose
/// fiber matrix has rank exactly `j`. This must agree with the profile of
/// any quasi-basis for the span of `gens`.
pub fn oracle_rank_profile<F: Field>(gens: &GeneratorSet<F>) -> RankProfile {
    let ranks = fiber_ranks(gens);
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let strata = (0..=max_rank)
        .map(|j| {
            let atoms = ranks
                .iter()
                .enumerate()
                .filter(|(_, &r)| r == j)
                .map(|(atom, _)| atom);
            Idempotent::new(gens.space(), atoms).expect("atom indices in range")
        })
        .collect();
    RankProfile::new(strata)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};
    use crate::fixtures;
    use crate::module::{GeneratorSet, ModVector};
    use crate::ring::RingElem;
    use crate::space::AtomSpace;

    #[test]
    fn fixture_fiber_ranks() {
        let (_, g) = fixtures::f1();
        assert_eq!(fiber_ranks(&g), vec![2, 2, 1]);
    }

    #[test]
    fn fixture_strata() {
        let (space, g) = fixtures::f1();
        let profile = oracle_rank_profile(&g);
        assert_eq!(
            profile.strata(),
            &[
                Idempotent::zero(&space),
                Idempotent::new(&space, [2]).unwrap(),
                Idempotent::new(&space, [0, 1]).unwrap(),
            ]
        );
    }

    #[test]
    fn zero_generator_is_rank_zero_everywhere() {
        let space = AtomSpace::new(3).unwrap();
        let theta = ModVector::<Rational>::zero(&space, 2).unwrap();
        let g = GeneratorSet::new(&space, 2, vec![theta]).unwrap();
        let profile = oracle_rank_profile(&g);
        assert_eq!(profile.strata(), &[Idempotent::identity(&space)]);
    }

    #[test]
    fn standard_basis_is_full_rank_everywhere() {
        let space = AtomSpace::new(2).unwrap();
        let m = 3;
        let gens: Vec<ModVector<Rational>> = (0..m)
            .map(|k| {
                let coords = (0..m)
                    .map(|c| {
                        if c == k {
                            RingElem::identity(&space)
                        } else {
                            RingElem::zero(&space)
                        }
                    })
                    .collect();
                ModVector::new(&space, coords).unwrap()
            })
            .collect();
        let g = GeneratorSet::new(&space, m, gens).unwrap();
        let profile = oracle_rank_profile(&g);
        assert_eq!(profile.strata().len(), m + 1);
        for j in 0..m {
            assert!(profile.strata()[j].is_zero());
        }
        assert_eq!(profile.strata()[m], Idempotent::identity(&space));
    }

    #[test]
    fn column_rank_basics() {
        let c = |vals: &[i64]| vals.iter().map(|&v| int(v)).collect::<Vec<Rational>>();
        assert_eq!(column_rank::<Rational>(&[]), 0);
        assert_eq!(column_rank(&[c(&[0, 0])]), 0);
        assert_eq!(column_rank(&[c(&[1, 0]), c(&[0, 0]), c(&[1, 1])]), 2);
        assert_eq!(column_rank(&[c(&[1, 2]), c(&[2, 4])]), 1);
        assert_eq!(column_rank(&[c(&[0, 2]), c(&[1, 1]), c(&[0, 0])]), 2);
    }
}

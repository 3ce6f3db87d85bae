//! Randomized cross-check: the construction's rank profile against raw
//! per-atom fiber ranks, on a stream of random modules.
//!
//! Run with: cargo run -p quasibasis --example oracle_crosscheck

use num_bigint::BigInt;
use quasibasis::{
    construct, oracle_rank_profile, AtomSpace, GeneratorSet, ModVector, Rational, RingElem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_entry<R: Rng>(rng: &mut R) -> Rational {
    let palette: [(i64, i64); 7] = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 3)];
    let (num, den) = palette[rng.gen_range(0..palette.len())];
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rounds = 200;
    let mut lengths = [0usize; 7];
    for round in 0..rounds {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=6);
        let l = rng.gen_range(1..=6);
        let space = AtomSpace::new(n).unwrap();
        let gens: Vec<ModVector> = (0..l)
            .map(|_| {
                ModVector::new(
                    &space,
                    (0..m)
                        .map(|_| {
                            RingElem::new(&space, (0..n).map(|_| random_entry(&mut rng)).collect())
                                .unwrap()
                        })
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let gens = GeneratorSet::new(&space, m, gens).unwrap();

        let basis = construct(&gens);
        let profile = basis.rank_profile().unwrap();
        let oracle = oracle_rank_profile(&gens);
        assert_eq!(profile, oracle, "mismatch in round {round}");
        assert!(basis.verify(&gens).unwrap().all_ok());
        lengths[basis.len()] += 1;
    }
    println!("{rounds} random modules: construction and oracle agree on every one");
    println!("basis length histogram:");
    for (len, count) in lengths.iter().enumerate() {
        if *count > 0 {
            println!("  n = {len}: {count}");
        }
    }
}

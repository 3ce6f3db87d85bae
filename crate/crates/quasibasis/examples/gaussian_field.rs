//! The same algebra over ℚ(i): the scalar field is swappable as long as it
//! is exact.
//!
//! Run with: cargo run -p quasibasis --example gaussian_field

use quasibasis::field::{int, Gaussian};
use quasibasis::{construct, oracle_rank_profile, AtomSpace, GeneratorSet, ModVector, RingElem};

fn g(re: i64, im: i64) -> Gaussian {
    Gaussian::new(int(re), int(im))
}

fn main() {
    let space = AtomSpace::new(2).unwrap();
    let row = |values: [(i64, i64); 2]| {
        RingElem::new(&space, values.iter().map(|&(re, im)| g(re, im)).collect()).unwrap()
    };

    // inverses work through the complex norm: (1+2i)⁻¹ = (1−2i)/5
    let a = RingElem::new(&space, vec![g(1, 2), g(0, 0)]).unwrap();
    println!("a   = {a}");
    println!("a⁻¹ = {}", a.gen_inverse());
    println!(
        "a·a⁻¹ = {} (the support of a)",
        a.mul(&a.gen_inverse()).unwrap()
    );

    // a small module over ℚ(i)^Ω: z2 = i·z1, so one element suffices
    let z1 = ModVector::new(&space, vec![row([(1, 0), (0, 0)]), row([(0, 1), (2, 0)])]).unwrap();
    let z2 = ModVector::new(&space, vec![row([(0, 1), (0, 0)]), row([(-1, 0), (0, 2)])]).unwrap();
    let gens = GeneratorSet::new(&space, 2, vec![z1, z2]).unwrap();

    let basis = construct(&gens);
    println!(
        "\ngenerators related by the unit i collapse to {} element(s)",
        basis.len()
    );
    for (x, support) in basis.elements().iter().zip(basis.supports()) {
        println!("  {x}   support {support}");
    }
    assert!(basis.verify(&gens).unwrap().all_ok());
    assert_eq!(basis.rank_profile().unwrap(), oracle_rank_profile(&gens));
    println!("verified, and the profile agrees with the componentwise oracle");
}

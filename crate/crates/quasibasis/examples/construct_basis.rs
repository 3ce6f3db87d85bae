//! The main algorithm: build a quasi-basis for the span of a generator
//! list, check the quasi-basis laws, and read off the rank stratification.
//!
//! Run with: cargo run -p quasibasis --example construct_basis

use quasibasis::{construct, fixtures, oracle_rank_profile};

fn main() {
    let (_, gens) = fixtures::f1();
    println!("generators:");
    for (k, z) in gens.generators().iter().enumerate() {
        println!("  z{} = {z}   support {}", k + 1, z.support());
    }

    let basis = construct(&gens);
    println!("\nquasi-basis ({} elements):", basis.len());
    for (x, support) in basis.elements().iter().zip(basis.supports()) {
        println!("  {x}   support {support}");
    }

    let report = basis.verify(&gens).unwrap();
    println!(
        "\nverification: span {}, chain {}, independence {}",
        report.span_ok, report.chain_ok, report.independent_ok
    );
    assert!(report.all_ok());

    let profile = basis.rank_profile().unwrap();
    println!("rank strata: {profile}");

    // an independent route to the same answer: per-atom fiber ranks
    let oracle = oracle_rank_profile(&gens);
    println!("oracle says: {oracle}");
    assert_eq!(profile, oracle);
    println!("profiles agree");
}

//! Separation idempotents: where a vector escapes a span, where it belongs,
//! and the witnesses that certify membership atom by atom.
//!
//! Run with: cargo run -p quasibasis --example membership

use quasibasis::field::int;
use quasibasis::{
    equality_stratifier, fixtures, nonmembership_idempotent, solve_on_stratum, ModVector, RingElem,
};

fn main() {
    let (space, gens) = fixtures::f1();

    // a vector that agrees with the span except on the last atom
    let x = ModVector::new(
        &space,
        vec![
            RingElem::zero(&space),
            RingElem::new(&space, vec![int(0), int(0), int(1)]).unwrap(),
        ],
    )
    .unwrap();
    let report = nonmembership_idempotent(&x, &gens).unwrap();
    println!("x = {x}");
    println!("outside locus = {}", report.outside());
    println!("member: {}", report.is_member());
    for (atom, witness) in report.witnesses() {
        print!("  witness at atom {atom}: (");
        for (j, c) in witness.iter().enumerate() {
            if j > 0 {
                print!(", ");
            }
            print!("{c}");
        }
        println!(")");
    }

    // on the membership locus we can solve for ring coefficients
    let stratum = report.outside().complement();
    let coeffs = solve_on_stratum(&x, &gens, &stratum).unwrap();
    println!("coefficients on {stratum}:");
    for (j, c) in coeffs.iter().enumerate() {
        println!("  c{} = {c}", j + 1);
    }

    // equality of two vectors is also a stratified question
    let z1 = &gens.generators()[0];
    let z2 = &gens.generators()[1];
    let differ = equality_stratifier(z1, z2).unwrap();
    println!("z1 and z2 differ exactly on {differ}");
    let agree = differ.complement();
    assert_eq!(z1.restrict(&agree).unwrap(), z2.restrict(&agree).unwrap());
    println!("and agree on the complement {agree}");
}

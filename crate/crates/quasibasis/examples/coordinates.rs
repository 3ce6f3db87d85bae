//! Canonical coordinates over a quasi-basis: unique ring coefficients with
//! a_j·i_{x_j} = a_j, reconstructing the vector exactly.
//!
//! Run with: cargo run -p quasibasis --example coordinates

use quasibasis::{construct, fixtures, ModVector};

fn main() {
    let (space, gens) = fixtures::f1();
    let basis = construct(&gens);
    println!("basis elements:");
    for (x, support) in basis.elements().iter().zip(basis.supports()) {
        println!("  {x}   support {support}");
    }

    // coordinates of an original generator over the constructed basis
    let z3 = &gens.generators()[2];
    let coords = basis.coordinates(z3).unwrap();
    println!("\ncoordinates of z3 = {z3}:");
    for (j, (a, support)) in coords.iter().zip(basis.supports()).enumerate() {
        println!("  a{} = {a}   (canonical: support ⩽ {support})", j + 1);
        assert!(a.support().le(support));
    }

    // exact reconstruction
    let mut total = ModVector::zero(&space, basis.ambient_rank()).unwrap();
    for (a, x) in coords.iter().zip(basis.elements()) {
        total = total.add(&x.scale(a).unwrap()).unwrap();
    }
    println!("Σ a_j·x_j = {total}");
    assert_eq!(&total, z3);
    println!("reconstruction is exact");

    // a vector outside the span reports the obstructing locus instead
    let outside = ModVector::new(
        &space,
        vec![
            quasibasis::RingElem::zero(&space),
            quasibasis::RingElem::new(
                &space,
                vec![
                    quasibasis::field::int(0),
                    quasibasis::field::int(0),
                    quasibasis::field::int(1),
                ],
            )
            .unwrap(),
        ],
    )
    .unwrap();
    match basis.coordinates(&outside) {
        Err(quasibasis::Error::NotAMember { outside }) => {
            println!("non-member rejected; outside locus {outside}");
        }
        other => panic!("unexpected: {other:?}"),
    }
}

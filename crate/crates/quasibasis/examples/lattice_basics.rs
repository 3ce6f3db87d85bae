//! The idempotent lattice of K^Ω: joins, meets, complements, partitions.
//!
//! Run with: cargo run -p quasibasis --example lattice_basics

use quasibasis::{AtomSpace, Idempotent};

fn main() {
    let space = AtomSpace::new(4).unwrap();
    let a = Idempotent::new(&space, [0, 1]).unwrap();
    let b = Idempotent::new(&space, [1, 2]).unwrap();

    println!("space with {} atoms", space.atom_count());
    println!("a          = {a}");
    println!("b          = {b}");
    println!("a ∨ b      = {}", a.join(&b).unwrap());
    println!("a ∧ b      = {}", a.meet(&b).unwrap());
    println!("e − a      = {}", a.complement());
    println!("a − b      = {}", a.minus(&b).unwrap());
    println!("a ⩽ a ∨ b  : {}", a.le(&a.join(&b).unwrap()));

    // the lattice operations are ring arithmetic in disguise:
    // a ∨ b = a + b − ab and a ∧ b = ab on indicator elements
    let ar = a.indicator::<quasibasis::Rational>();
    let br = b.indicator::<quasibasis::Rational>();
    let formula = ar.add(&br).unwrap().sub(&ar.mul(&br).unwrap()).unwrap();
    println!("a + b − ab = {formula} (the indicator of a ∨ b)");

    // suprema of arbitrary finite families, and partitions of e
    let singletons: Vec<Idempotent> = space
        .atoms()
        .map(|atom| Idempotent::new(&space, [atom]).unwrap())
        .collect();
    let sup = Idempotent::sup(&space, singletons.iter()).unwrap();
    println!("⋁ singletons = {sup} (the identity e)");
    assert!(sup.is_identity());
    Idempotent::check_partition(&space, &singletons).unwrap();
    println!("singletons form a partition of e: ok");
}

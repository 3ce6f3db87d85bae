//! Ring elements of K^Ω: pointwise arithmetic, supports, generalized
//! inverses, and why zero divisors make classical bases impossible.
//!
//! Run with: cargo run -p quasibasis --example ring_arithmetic

use quasibasis::field::{int, ratio};
use quasibasis::{AtomSpace, RingElem};

fn main() {
    let space = AtomSpace::new(3).unwrap();
    let a = RingElem::new(&space, vec![int(2), int(0), int(-3)]).unwrap();
    let b = RingElem::new(&space, vec![int(0), int(5), ratio(1, 2)]).unwrap();

    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", a.add(&b).unwrap());
    println!("a · b   = {}", a.mul(&b).unwrap());

    // zero divisors: neither factor is zero, the product vanishes at atom 0
    let c = RingElem::new(&space, vec![int(2), int(0), int(0)]).unwrap();
    let d = RingElem::new(&space, vec![int(0), int(5), int(0)]).unwrap();
    println!("zero divisors: {c} · {d} = {}", c.mul(&d).unwrap());

    // the support is the least idempotent fixing the element
    println!("support(a) = {}", a.support());
    println!(
        "support(c·d) = {} (= support c ∧ support d)",
        c.mul(&d).unwrap().support()
    );

    // generalized inverse: reciprocal on the support, zero elsewhere
    let inv = a.gen_inverse();
    println!("a⁻¹     = {inv}");
    println!("a⁻¹ · a = {} (the support of a)", inv.mul(&a).unwrap());
    assert_eq!(inv.mul(&a).unwrap(), a.support().indicator());
    assert_eq!(inv.gen_inverse(), a);
    println!("(a⁻¹)⁻¹ = a: ok");
}

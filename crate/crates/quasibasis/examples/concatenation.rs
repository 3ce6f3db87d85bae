//! Piecewise gluing: concatenating module vectors along a partition of the
//! identity, and recovering a vector from its own pieces.
//!
//! Run with: cargo run -p quasibasis --example concatenation

use quasibasis::field::int;
use quasibasis::{AtomSpace, Idempotent, ModVector, RingElem};

fn main() {
    let space = AtomSpace::new(2).unwrap();
    let vec1 = |values: [i64; 2]| {
        ModVector::new(
            &space,
            vec![RingElem::new(&space, values.iter().map(|&v| int(v)).collect()).unwrap()],
        )
        .unwrap()
    };

    // glue (5,7) on {0} with (9,4) on {1}
    let partition = [
        Idempotent::new(&space, [0]).unwrap(),
        Idempotent::new(&space, [1]).unwrap(),
    ];
    let parts = [vec1([5, 7]), vec1([9, 4])];
    let glued = ModVector::concatenate(&partition, &parts).unwrap();
    println!(
        "glue {} on {} with {} on {}",
        parts[0], partition[0], parts[1], partition[1]
    );
    println!("  => {glued}");

    // splitting then concatenating is the identity
    let x = vec1([3, -8]);
    let pieces = [
        x.restrict(&partition[0]).unwrap(),
        x.restrict(&partition[1]).unwrap(),
    ];
    let back = ModVector::concatenate(&partition, &pieces).unwrap();
    println!(
        "split {x} into {} and {}, glue back => {back}",
        pieces[0], pieces[1]
    );
    assert_eq!(back, x);

    // agreement on every piece of a partition forces equality
    let y = vec1([3, -8]);
    let agree = partition
        .iter()
        .all(|p| x.restrict(p).unwrap() == y.restrict(p).unwrap());
    println!(
        "x and y agree on all pieces: {agree}, and indeed x == y: {}",
        x == y
    );
}

//! Small worked instances shared by tests, examples and documentation.

use crate::field::{int, Rational};
use crate::module::{GeneratorSet, ModVector};
use crate::ring::RingElem;
use crate::space::AtomSpace;

fn elem(space: &AtomSpace, values: &[i64]) -> RingElem<Rational> {
    RingElem::new(space, values.iter().map(|&v| int(v)).collect()).unwrap()
}

fn vector(space: &AtomSpace, rows: &[&[i64]]) -> ModVector<Rational> {
    ModVector::new(space, rows.iter().map(|row| elem(space, row)).collect()).unwrap()
}

/// Three atoms, ambient rank two, three generators:
///
/// ```text
/// z1 = [(1,0,0), (0,2,0)]    fibers (1,0), (0,2), (0,0)
/// z2 = [(0,1,0), (0,1,0)]    fibers (0,0), (1,1), (0,0)
/// z3 = [(1,0,1), (1,0,0)]    fibers (1,1), (0,0), (1,0)
/// ```
///
/// Fiber ranks are 2, 2, 1, so the span is free of rank 2 on atoms {0,1}
/// and of rank 1 on atom 2.
pub fn f1() -> (AtomSpace, GeneratorSet<Rational>) {
    let space = AtomSpace::new(3).unwrap();
    let z1 = vector(&space, &[&[1, 0, 0], &[0, 2, 0]]);
    let z2 = vector(&space, &[&[0, 1, 0], &[0, 1, 0]]);
    let z3 = vector(&space, &[&[1, 0, 1], &[1, 0, 0]]);
    let gens = GeneratorSet::new(&space, 2, vec![z1, z2, z3]).unwrap();
    (space, gens)
}

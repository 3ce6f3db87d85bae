//! Property tests for the algebraic laws: the Boolean lattice of
//! idempotents, support homomorphisms, generalized inverses, concatenation,
//! separation idempotents, and the quasi-basis laws against the
//! componentwise oracle.

mod common;

use common::ratio;
use proptest::collection::vec;
use proptest::prelude::*;
use quasibasis::{
    construct, equality_stratifier, nonmembership_idempotent, oracle_rank_profile,
    solve_on_stratum, AtomSpace, Field, Gaussian, GeneratorSet, Idempotent, ModVector, Rational,
    RingElem,
};

fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(ratio(0, 1)),
        1 => Just(ratio(1, 1)),
        1 => Just(ratio(-1, 1)),
        1 => Just(ratio(2, 1)),
        1 => Just(ratio(-2, 1)),
        1 => Just(ratio(1, 2)),
        1 => Just(ratio(-1, 3)),
    ]
}

fn space(n: usize) -> AtomSpace {
    AtomSpace::new(n).unwrap()
}

fn elem(n: usize, values: Vec<Rational>) -> RingElem {
    RingElem::new(&space(n), values).unwrap()
}

fn idem(n: usize, mask: &[bool]) -> Idempotent {
    let atoms = mask.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k);
    Idempotent::new(&space(n), atoms).unwrap()
}

fn vector(n: usize, rows: Vec<Vec<Rational>>) -> ModVector {
    let s = space(n);
    ModVector::new(
        &s,
        rows.into_iter()
            .map(|row| RingElem::new(&s, row).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Three ring elements over one space.
fn ring_triple() -> impl Strategy<Value = (usize, RingElem, RingElem, RingElem)> {
    (1usize..=6).prop_flat_map(|n| {
        (vec(entry(), n), vec(entry(), n), vec(entry(), n))
            .prop_map(move |(a, b, c)| (n, elem(n, a), elem(n, b), elem(n, c)))
    })
}

/// Three idempotents over one space.
fn idem_triple() -> impl Strategy<Value = (usize, Idempotent, Idempotent, Idempotent)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            vec(any::<bool>(), n),
            vec(any::<bool>(), n),
            vec(any::<bool>(), n),
        )
            .prop_map(move |(a, b, c)| (n, idem(n, &a), idem(n, &b), idem(n, &c)))
    })
}

/// A generator set plus a spare stack of coefficient ring elements.
fn instance() -> impl Strategy<Value = (GeneratorSet, Vec<RingElem>)> {
    (1usize..=6, 1usize..=4, 0usize..=5).prop_flat_map(|(n, m, l)| {
        (vec(vec(vec(entry(), n), m), l), vec(vec(entry(), n), 4)).prop_map(
            move |(raw, coeff_rows)| {
                let s = space(n);
                let gens = raw
                    .into_iter()
                    .map(|mat| vector(n, mat))
                    .collect::<Vec<_>>();
                let coeffs = coeff_rows
                    .into_iter()
                    .map(|row| elem(n, row))
                    .collect::<Vec<_>>();
                (GeneratorSet::new(&s, m, gens).unwrap(), coeffs)
            },
        )
    })
}

proptest! {
    // --- Boolean lattice laws -------------------------------------------

    #[test]
    fn lattice_commutative_and_associative((_, a, b, c) in idem_triple()) {
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(
            a.join(&b.join(&c).unwrap()).unwrap(),
            a.join(&b).unwrap().join(&c).unwrap()
        );
        prop_assert_eq!(
            a.meet(&b.meet(&c).unwrap()).unwrap(),
            a.meet(&b).unwrap().meet(&c).unwrap()
        );
    }

    #[test]
    fn lattice_absorption_and_distributivity((_, a, b, c) in idem_triple()) {
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(
            a.meet(&b.join(&c).unwrap()).unwrap(),
            a.meet(&b).unwrap().join(&a.meet(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.join(&b.meet(&c).unwrap()).unwrap(),
            a.join(&b).unwrap().meet(&a.join(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn lattice_order_characterizations((_, a, b, _) in idem_triple()) {
        let le = a.le(&b);
        prop_assert_eq!(le, a.meet(&b).unwrap() == a);
        prop_assert_eq!(le, a.atoms().all(|atom| b.contains(atom)));
        // complement laws
        prop_assert!(a.meet(&a.complement()).unwrap().is_zero());
        prop_assert!(a.join(&a.complement()).unwrap().is_identity());
    }

    #[test]
    fn lattice_matches_ring_arithmetic((_, a, b, _) in idem_triple()) {
        let ar = a.indicator::<Rational>();
        let br = b.indicator::<Rational>();
        let join_formula = ar.add(&br).unwrap().sub(&ar.mul(&br).unwrap()).unwrap();
        prop_assert_eq!(join_formula, a.join(&b).unwrap().indicator());
        prop_assert_eq!(ar.mul(&br).unwrap(), a.meet(&b).unwrap().indicator());
        // idempotents really are idempotent as ring elements
        prop_assert_eq!(ar.mul(&ar).unwrap(), ar);
    }

    // --- Supports and generalized inverses ------------------------------

    #[test]
    fn support_homomorphism_laws((_, a, b, _) in ring_triple()) {
        let sum_support = a.add(&b).unwrap().support();
        prop_assert!(sum_support.le(&a.support().join(&b.support()).unwrap()));
        prop_assert_eq!(
            a.mul(&b).unwrap().support(),
            a.support().meet(&b.support()).unwrap()
        );
    }

    #[test]
    fn gen_inverse_laws((_, a, _, _) in ring_triple()) {
        let inv = a.gen_inverse();
        prop_assert_eq!(a.mul(&inv).unwrap(), a.support().indicator());
        prop_assert_eq!(inv.support(), a.support());
        prop_assert_eq!(inv.gen_inverse(), a.clone());
        // support is minimal: i·a = a and any smaller idempotent loses atoms
        prop_assert_eq!(a.support().indicator::<Rational>().mul(&a).unwrap(), a);
    }

    // --- Module vectors, restriction, concatenation ---------------------

    #[test]
    fn vector_support_laws((gens, coeffs) in instance()) {
        let s = gens.space().clone();
        for x in gens.generators() {
            prop_assert_eq!(x.support().is_zero(), x.is_zero());
            let a = &coeffs[0];
            prop_assert_eq!(
                x.scale(a).unwrap().support(),
                a.support().meet(&x.support()).unwrap()
            );
            // restrict(i, x) has support ⩽ i
            let i = a.support();
            prop_assert!(x.restrict(&i).unwrap().support().le(&i));
        }
        prop_assert!(ModVector::<Rational>::zero(&s, gens.ambient_rank()).unwrap().support().is_zero());
    }

    #[test]
    fn concatenation_round_trip((gens, coeffs) in instance()) {
        if gens.is_empty() {
            return Ok(());
        }
        let s = gens.space().clone();
        let x = &gens.generators()[0];
        // split x along a partition derived from a random idempotent
        let i = coeffs[0].support();
        let partition = [i.clone(), i.complement()];
        let parts = [x.restrict(&partition[0]).unwrap(), x.restrict(&partition[1]).unwrap()];
        let glued = ModVector::concatenate(&partition, &parts).unwrap();
        prop_assert_eq!(&glued, x);
        // constant concatenation
        let same = ModVector::concatenate(&partition, &[x.clone(), x.clone()]).unwrap();
        prop_assert_eq!(&same, x);
        let _ = s;
    }

    #[test]
    fn equality_from_partition_agreement((gens, coeffs) in instance()) {
        if gens.len() < 2 {
            return Ok(());
        }
        let x = &gens.generators()[0];
        let y = &gens.generators()[1];
        let i = coeffs[0].support();
        let partition = [i.clone(), i.complement()];
        let agree_everywhere = partition
            .iter()
            .all(|p| x.restrict(p).unwrap() == y.restrict(p).unwrap());
        prop_assert_eq!(agree_everywhere, x == y);
        // and the stratifier pins the disagreement locus exactly
        let differ = equality_stratifier(x, y).unwrap();
        prop_assert_eq!(differ.is_zero(), x == y);
        let agree = differ.complement();
        prop_assert_eq!(x.restrict(&agree).unwrap(), y.restrict(&agree).unwrap());
    }

    // --- Separation idempotents ------------------------------------------

    #[test]
    fn membership_witnesses_certify((gens, coeffs) in instance()) {
        let s = gens.space().clone();
        let m = gens.ambient_rank();
        // query: a ring combination (member) perturbed by one generator cut off
        let x = common::combine(&s, m, &coeffs[..gens.len().min(coeffs.len())], gens.generators());
        let report = nonmembership_idempotent(&x, &gens).unwrap();
        prop_assert!(report.is_member());
        // witnesses reconstruct on every atom
        for (&atom, witness) in report.witnesses() {
            let mut acc = vec![<Rational as Field>::zero(); m];
            for (j, g) in gens.generators().iter().enumerate() {
                for (r, value) in g.fiber(atom).unwrap().iter().enumerate() {
                    acc[r] = acc[r].add(&witness[j].mul(value));
                }
            }
            prop_assert_eq!(acc, x.fiber(atom).unwrap());
        }
    }

    #[test]
    fn directedness_identity((gens, coeffs) in instance()) {
        if gens.is_empty() {
            return Ok(());
        }
        let s = gens.space().clone();
        let m = gens.ambient_rank();
        let x = common::combine(&s, m, &coeffs[..gens.len().min(coeffs.len())], gens.generators());
        // membership holds everywhere; cut two arbitrary strata
        let i1 = coeffs[0].support();
        let i2 = coeffs.get(1).map(RingElem::support).unwrap_or_else(|| i1.complement());
        let c1 = solve_on_stratum(&x, &gens, &i1).unwrap();
        let c2 = solve_on_stratum(&x, &gens, &i2).unwrap();
        // splice: use c1 on i3 = i1 − i1∧i2 and c2 on the rest of i1∨i2
        let i3 = i1.minus(&i1.meet(&i2).unwrap()).unwrap();
        let joined = i1.join(&i2).unwrap();
        let rest = joined.minus(&i3).unwrap();
        let spliced: Vec<RingElem> = c1
            .iter()
            .zip(&c2)
            .map(|(a, b)| {
                a.restrict(&i3)
                    .unwrap()
                    .add(&b.restrict(&rest).unwrap())
                    .unwrap()
            })
            .collect();
        let combined = common::combine(&s, m, &spliced, gens.generators());
        prop_assert_eq!(
            combined.restrict(&joined).unwrap(),
            x.restrict(&joined).unwrap()
        );
    }

    // --- Quasi-basis laws -------------------------------------------------

    #[test]
    fn construction_matches_oracle((gens, _) in instance()) {
        let basis = construct(&gens);
        let profile = basis.rank_profile().unwrap();
        let oracle = oracle_rank_profile(&gens);
        prop_assert_eq!(&profile, &oracle);
        // supports[j] is exactly the locus of fiber rank ⩾ j+1
        for (j, support) in basis.supports().iter().enumerate() {
            for atom in gens.space().atoms() {
                let rank = oracle.rank_at(atom).unwrap();
                prop_assert_eq!(support.contains(atom), rank > j);
            }
        }
        // n ⩽ min(l, m), and n = 0 only for all-zero generators
        prop_assert!(basis.len() <= gens.len().min(gens.ambient_rank()));
        let all_zero = gens.generators().iter().all(ModVector::is_zero);
        prop_assert_eq!(basis.is_empty(), all_zero);
    }

    #[test]
    fn construction_verifies((gens, _) in instance()) {
        let basis = construct(&gens);
        let report = basis.verify(&gens).unwrap();
        prop_assert!(report.all_ok(), "counterexample: {:?}", report.counterexample);
    }

    #[test]
    fn span_preserved_after_every_step((gens, _) in instance()) {
        let s = gens.space().clone();
        let m = gens.ambient_rank();
        for k in 0..=gens.len() {
            let prefix =
                GeneratorSet::new(&s, m, gens.generators()[..k].to_vec()).unwrap();
            let basis = construct(&prefix);
            let report = basis.verify(&prefix).unwrap();
            prop_assert!(report.span_ok);
        }
    }

    #[test]
    fn coordinates_round_trip((gens, coeffs) in instance()) {
        let s = gens.space().clone();
        let m = gens.ambient_rank();
        let basis = construct(&gens);
        let picked: Vec<RingElem> = coeffs[..basis.len().min(coeffs.len())].to_vec();
        let x = common::combine(&s, m, &picked, basis.elements());
        let recovered = basis.coordinates(&x).unwrap();
        let reconstructed = common::combine(&s, m, &recovered, basis.elements());
        prop_assert_eq!(reconstructed, x);
        for (a, support) in recovered.iter().zip(basis.supports()) {
            prop_assert_eq!(&a.restrict(support).unwrap(), a);
        }
    }
}

/// The same machinery runs over ℚ(i); a small complex instance end to end.
#[test]
fn gaussian_field_instance() {
    let s = AtomSpace::new(3).unwrap();
    let g = |re: i64, im: i64| Gaussian::new(ratio(re, 1), ratio(im, 1));
    let row = |values: [(i64, i64); 3]| {
        RingElem::new(&s, values.iter().map(|&(re, im)| g(re, im)).collect()).unwrap()
    };
    let z1 = ModVector::new(
        &s,
        vec![row([(1, 0), (0, 1), (0, 0)]), row([(0, 1), (0, 0), (0, 0)])],
    )
    .unwrap();
    let z2 = ModVector::new(
        &s,
        vec![
            row([(0, 2), (0, 0), (0, 0)]),
            row([(-2, 0), (0, 0), (0, 0)]),
        ],
    )
    .unwrap();
    let z3 = ModVector::new(
        &s,
        vec![row([(0, 0), (1, 1), (1, 0)]), row([(0, 0), (0, 0), (0, 0)])],
    )
    .unwrap();
    let gens = GeneratorSet::new(&s, 2, vec![z1.clone(), z2, z3]).unwrap();

    let basis = construct(&gens);
    assert!(basis.verify(&gens).unwrap().all_ok());
    assert_eq!(basis.rank_profile().unwrap(), oracle_rank_profile(&gens));
    // z2 = 2i·z1 where both live, z3 is proportional to z1 on atom 1 and
    // escapes only on atom 2, where the cascade merges it into x₁
    assert_eq!(basis.len(), 1);
    assert!(basis.supports()[0].is_identity());
    let coords = basis.coordinates(&z1).unwrap();
    let total = coords
        .iter()
        .zip(basis.elements())
        .fold(ModVector::zero(&s, 2).unwrap(), |acc, (c, e)| {
            acc.add(&e.scale(c).unwrap()).unwrap()
        });
    assert_eq!(total, z1);
}

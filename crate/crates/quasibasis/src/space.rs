//! Finite atom spaces and their idempotent lattice.
//!
//! An [`AtomSpace`] is a finite set of atoms, the sample-space model on which
//! everything else lives. Its idempotents are exactly the indicator functions
//! of atom subsets, so they are represented extensionally as index sets and
//! the lattice operations (`a ∨ b = a + b − ab`, `a ∧ b = ab`) become set
//! union and intersection.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};

#[derive(Debug, PartialEq, Eq)]
struct SpaceInner {
    atom_count: usize,
    weights: Option<Vec<Rational>>,
}

/// A finite space of atoms, optionally carrying probability weights.
///
/// Weights are metadata: they are validated (positive, summing to one) and
/// echoed through serialization, but no algebraic operation consults them.
/// Handles are cheap to clone and compare equal when their contents do.
#[derive(Clone, Debug)]
pub struct AtomSpace {
    inner: Arc<SpaceInner>,
}

impl PartialEq for AtomSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for AtomSpace {}

impl AtomSpace {
    /// A space of `atom_count` atoms with no weight metadata.
    pub fn new(atom_count: usize) -> Result<Self> {
        if atom_count == 0 {
            return Err(Error::InvalidSpace("at least one atom required".into()));
        }
        Ok(AtomSpace {
            inner: Arc::new(SpaceInner {
                atom_count,
                weights: None,
            }),
        })
    }

    /// A space with probability weights; each must be positive and they must
    /// sum to exactly one.
    pub fn with_weights(atom_count: usize, weights: Vec<Rational>) -> Result<Self> {
        if atom_count == 0 {
            return Err(Error::InvalidSpace("at least one atom required".into()));
        }
        if weights.len() != atom_count {
            return Err(Error::InvalidSpace(format!(
                "{} weights given for {} atoms",
                weights.len(),
                atom_count
            )));
        }
        let zero = <Rational as Field>::zero();
        if let Some(pos) = weights.iter().position(|w| *w <= zero) {
            return Err(Error::InvalidSpace(format!("weight {pos} is not positive")));
        }
        let total: Rational = weights.iter().cloned().sum();
        if total != <Rational as Field>::one() {
            return Err(Error::InvalidSpace(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(AtomSpace {
            inner: Arc::new(SpaceInner {
                atom_count,
                weights: Some(weights),
            }),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.inner.atom_count
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.inner.weights.as_deref()
    }

    /// Iterate over all atom indices.
    pub fn atoms(&self) -> impl Iterator<Item = usize> {
        0..self.inner.atom_count
    }

    pub(crate) fn check_same(&self, other: &AtomSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.atom_count(),
                right: other.atom_count(),
            })
        }
    }

    pub(crate) fn check_atom(&self, atom: usize) -> Result<()> {
        if atom < self.atom_count() {
            Ok(())
        } else {
            Err(Error::AtomOutOfRange {
                atom,
                size: self.atom_count(),
            })
        }
    }
}

/// An idempotent of `K^Ω`: the indicator of a set of atoms.
///
/// Under the lattice order `a ⩽ b ⟺ ab = a` these are ordered by set
/// inclusion, with bottom the zero element and top the ring identity `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    atoms: BTreeSet<usize>,
    space: AtomSpace,
}

impl Idempotent {
    /// Indicator of the given atom set. Errors when an index is out of range.
    pub fn new<I: IntoIterator<Item = usize>>(space: &AtomSpace, atoms: I) -> Result<Self> {
        let atoms: BTreeSet<usize> = atoms.into_iter().collect();
        if let Some(&max) = atoms.iter().next_back() {
            space.check_atom(max)?;
        }
        Ok(Idempotent {
            atoms,
            space: space.clone(),
        })
    }

    /// The zero idempotent (empty atom set).
    pub fn zero(space: &AtomSpace) -> Self {
        Idempotent {
            atoms: BTreeSet::new(),
            space: space.clone(),
        }
    }

    /// The identity `e` (all atoms).
    pub fn identity(space: &AtomSpace) -> Self {
        Idempotent {
            atoms: space.atoms().collect(),
            space: space.clone(),
        }
    }

    pub fn space(&self) -> &AtomSpace {
        &self.space
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.atoms.iter().copied()
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.atoms.contains(&atom)
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.len() == self.space.atom_count()
    }

    /// Join `a ∨ b = a + b − ab`: the union of the atom sets.
    pub fn join(&self, other: &Idempotent) -> Result<Idempotent> {
        self.space.check_same(&other.space)?;
        Ok(Idempotent {
            atoms: self.atoms.union(&other.atoms).copied().collect(),
            space: self.space.clone(),
        })
    }

    /// Meet `a ∧ b = ab`: the intersection of the atom sets.
    pub fn meet(&self, other: &Idempotent) -> Result<Idempotent> {
        self.space.check_same(&other.space)?;
        Ok(Idempotent {
            atoms: self.atoms.intersection(&other.atoms).copied().collect(),
            space: self.space.clone(),
        })
    }

    /// Complement `e − a`.
    pub fn complement(&self) -> Idempotent {
        Idempotent {
            atoms: self
                .space
                .atoms()
                .filter(|atom| !self.atoms.contains(atom))
                .collect(),
            space: self.space.clone(),
        }
    }

    /// Relative difference `a ∧ (e − b)`; equals `a − b` as ring elements
    /// whenever `b ⩽ a`.
    pub fn minus(&self, other: &Idempotent) -> Result<Idempotent> {
        self.space.check_same(&other.space)?;
        Ok(Idempotent {
            atoms: self.atoms.difference(&other.atoms).copied().collect(),
            space: self.space.clone(),
        })
    }

    /// Supremum of a finite family; the empty family yields zero.
    pub fn sup<'a, I>(space: &AtomSpace, family: I) -> Result<Idempotent>
    where
        I: IntoIterator<Item = &'a Idempotent>,
    {
        let mut atoms = BTreeSet::new();
        for member in family {
            space.check_same(&member.space)?;
            atoms.extend(member.atoms.iter().copied());
        }
        Ok(Idempotent {
            atoms,
            space: space.clone(),
        })
    }

    /// Lattice order: `a ⩽ b` iff `a ∧ b = a` iff the atom sets are nested.
    pub fn le(&self, other: &Idempotent) -> bool {
        self.atoms.is_subset(&other.atoms)
    }

    /// Sorted atom indices, the canonical external form.
    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.atoms.iter().copied().collect()
    }

    /// View as a ring element: 1 on the atom set, 0 elsewhere.
    pub fn indicator<F: Field>(&self) -> crate::ring::RingElem<F> {
        let values = self
            .space
            .atoms()
            .map(|atom| {
                if self.atoms.contains(&atom) {
                    F::one()
                } else {
                    F::zero()
                }
            })
            .collect();
        crate::ring::RingElem::new_unchecked(&self.space, values)
    }

    /// Check that `parts` is a partition of the identity: pairwise disjoint
    /// with join `e`.
    pub fn check_partition(space: &AtomSpace, parts: &[Idempotent]) -> Result<()> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for (index, part) in parts.iter().enumerate() {
            space.check_same(&part.space)?;
            for atom in part.atoms() {
                if !seen.insert(atom) {
                    return Err(Error::NotAPartition(format!(
                        "parts overlap at atom {atom} (part {index})"
                    )));
                }
            }
        }
        if seen.len() != space.atom_count() {
            let missing = space.atoms().find(|atom| !seen.contains(atom)).unwrap();
            return Err(Error::NotAPartition(format!(
                "atom {missing} is not covered"
            )));
        }
        Ok(())
    }

    pub(crate) fn describe_atoms(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, atom) in self.atoms().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{atom}")?;
        }
        write!(f, "}}")
    }
}

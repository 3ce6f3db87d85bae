//! The free module `R^m` and finitely generated submodules of it.
//!
//! A [`ModVector`] is an element of `R^m`: `m` coordinates, each a ring
//! element over one shared atom space. Evaluating all coordinates at a single
//! atom gives the fiber, a plain vector in `K^m`; most questions about a
//! finitely generated module reduce to exact linear algebra on fibers.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::ring::RingElem;
use crate::space::{AtomSpace, Idempotent};

/// An element of the free module `R^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVector<F: Field = Rational> {
    coords: Vec<RingElem<F>>,
    space: AtomSpace,
}

impl<F: Field> ModVector<F> {
    /// Build from coordinates; all must share one space and `m ⩾ 1`.
    pub fn new(space: &AtomSpace, coords: Vec<RingElem<F>>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidValue(
                "a module vector needs at least one coordinate".into(),
            ));
        }
        for coord in &coords {
            space.check_same(coord.space())?;
        }
        Ok(ModVector {
            coords,
            space: space.clone(),
        })
    }

    /// The zero vector θ of `R^m`.
    pub fn zero(space: &AtomSpace, ambient_rank: usize) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::InvalidValue(
                "a module vector needs at least one coordinate".into(),
            ));
        }
        Ok(ModVector {
            coords: vec![RingElem::zero(space); ambient_rank],
            space: space.clone(),
        })
    }

    pub fn space(&self) -> &AtomSpace {
        &self.space
    }

    /// The ambient rank `m`.
    pub fn ambient_rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[RingElem<F>] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.space.check_same(&other.space)?;
        if self.ambient_rank() != other.ambient_rank() {
            return Err(Error::RankMismatch {
                expected: self.ambient_rank(),
                found: other.ambient_rank(),
            });
        }
        Ok(())
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            coords,
            space: self.space.clone(),
        })
    }

    /// Coordinatewise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            coords,
            space: self.space.clone(),
        })
    }

    /// Module action: multiply every coordinate by the ring element.
    pub fn scale(&self, scalar: &RingElem<F>) -> Result<Self> {
        self.space.check_same(scalar.space())?;
        let coords = self
            .coords
            .iter()
            .map(|c| c.mul(scalar))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            coords,
            space: self.space.clone(),
        })
    }

    /// `i·x`: zero all coordinates outside the idempotent.
    pub fn restrict(&self, idem: &Idempotent) -> Result<Self> {
        self.space.check_same(idem.space())?;
        let coords = self
            .coords
            .iter()
            .map(|c| c.restrict(idem))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            coords,
            space: self.space.clone(),
        })
    }

    /// The support idempotent `i_x`: atoms where the fiber is nonzero,
    /// equivalently the join of the coordinate supports. This is the least
    /// idempotent `i` with `i·x = x`, and it is zero exactly for θ.
    pub fn support(&self) -> Idempotent {
        let supports: Vec<Idempotent> = self.coords.iter().map(|c| c.support()).collect();
        Idempotent::sup(&self.space, supports.iter()).expect("coordinate supports share the space")
    }

    /// The fiber at one atom: the `K^m` vector of coordinate values.
    pub fn fiber(&self, atom: usize) -> Result<Vec<F>> {
        self.space.check_atom(atom)?;
        Ok(self.fiber_unchecked(atom))
    }

    pub(crate) fn fiber_unchecked(&self, atom: usize) -> Vec<F> {
        self.coords
            .iter()
            .map(|c| c.values()[atom].clone())
            .collect()
    }

    /// Glue `parts` along a partition of the identity: the unique `x` with
    /// `restrict(i_k, x) = restrict(i_k, parts[k])` for every `k`.
    pub fn concatenate(partition: &[Idempotent], parts: &[ModVector<F>]) -> Result<Self> {
        if partition.is_empty() {
            return Err(Error::NotAPartition("the partition is empty".into()));
        }
        if partition.len() != parts.len() {
            return Err(Error::NotAPartition(format!(
                "{} idempotents but {} parts",
                partition.len(),
                parts.len()
            )));
        }
        let space = partition[0].space().clone();
        Idempotent::check_partition(&space, partition)?;
        let ambient_rank = parts[0].ambient_rank();
        for part in parts {
            space.check_same(part.space())?;
            if part.ambient_rank() != ambient_rank {
                return Err(Error::RankMismatch {
                    expected: ambient_rank,
                    found: part.ambient_rank(),
                });
            }
        }
        let mut result = ModVector::zero(&space, ambient_rank)?;
        for (idem, part) in partition.iter().zip(parts) {
            result = result.add(&part.restrict(idem)?)?;
        }
        Ok(result)
    }
}

impl<F: Field> fmt::Display for ModVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, coord) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{coord}")?;
        }
        write!(f, "]")
    }
}

/// An ordered, possibly redundant list of module generators.
///
/// Zeros and repeats are legal; the construction skips anything already in
/// the running span. The order is significant: it is the scan order of the
/// quasi-basis construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet<F: Field = Rational> {
    space: AtomSpace,
    ambient_rank: usize,
    gens: Vec<ModVector<F>>,
}

impl<F: Field> GeneratorSet<F> {
    pub fn new(space: &AtomSpace, ambient_rank: usize, gens: Vec<ModVector<F>>) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::InvalidValue(
                "ambient rank must be at least one".into(),
            ));
        }
        for gen in &gens {
            space.check_same(gen.space())?;
            if gen.ambient_rank() != ambient_rank {
                return Err(Error::RankMismatch {
                    expected: ambient_rank,
                    found: gen.ambient_rank(),
                });
            }
        }
        Ok(GeneratorSet {
            space: space.clone(),
            ambient_rank,
            gens,
        })
    }

    pub fn space(&self) -> &AtomSpace {
        &self.space
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[ModVector<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

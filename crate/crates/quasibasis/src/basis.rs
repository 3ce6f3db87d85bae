//! Quasi-bases: construction, verification, stratification, coordinates.
//!
//! A quasi-basis for a finitely generated submodule `M ⊆ R^m` is an ordered
//! list `x₁, …, x_n` that spans `M`, whose support idempotents form a
//! nonincreasing chain `i_{x₁} ⩾ … ⩾ i_{x_n}`, and whose supported fibers
//! are linearly independent at every atom. It plays the role a basis plays
//! over a field: every member of `M` has canonical ring coordinates, and the
//! support chain cuts the atom space into strata on which `M` is free of a
//! fixed rank. Elements of a quasi-basis are not canonical, but the chain
//! (hence the strata) is: any two quasi-bases for the same module have the
//! same length and the same supports.
//!
//! [`construct`] builds one by a single pass over the generators. Each
//! generator that escapes the running span on some nonzero locus `j₀` is
//! folded in by a cascade that grafts it onto the existing elements where
//! their supports leave room, so the chain stays nonincreasing:
//!
//! ```text
//! i₁ = j₀ ∧ i_{x₁}        x₁ += (j₀ − i₁)·z
//! i₂ = i₁ ∧ i_{x₂}        x₂ += (i₁ − i₂)·z
//! …
//! i_j = … ∧ i_{x_j}       append i_j·z if i_j ≠ 0
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::module::{GeneratorSet, ModVector};
use crate::ring::RingElem;
use crate::solve::columns_independent;
use crate::space::{AtomSpace, Idempotent};
use crate::stratify::{nonmembership_idempotent, solve_on_stratum, MembershipReport};

/// An ordered quasi-basis with its support chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBasis<F: Field = Rational> {
    space: AtomSpace,
    ambient_rank: usize,
    elements: Vec<ModVector<F>>,
    supports: Vec<Idempotent>,
}

impl<F: Field> QuasiBasis<F> {
    /// The empty quasi-basis, spanning `{θ}`.
    pub fn empty(space: &AtomSpace, ambient_rank: usize) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::InvalidValue(
                "ambient rank must be at least one".into(),
            ));
        }
        Ok(QuasiBasis {
            space: space.clone(),
            ambient_rank,
            elements: Vec::new(),
            supports: Vec::new(),
        })
    }

    /// Wrap candidate elements without validating the quasi-basis laws.
    ///
    /// Supports are computed from the elements; whether the chain is
    /// nonincreasing and the fibers independent is checked by [`Self::verify`],
    /// not here.
    pub fn from_elements(
        space: &AtomSpace,
        ambient_rank: usize,
        elements: Vec<ModVector<F>>,
    ) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::InvalidValue(
                "ambient rank must be at least one".into(),
            ));
        }
        for element in &elements {
            space.check_same(element.space())?;
            if element.ambient_rank() != ambient_rank {
                return Err(Error::RankMismatch {
                    expected: ambient_rank,
                    found: element.ambient_rank(),
                });
            }
        }
        let supports = elements.iter().map(ModVector::support).collect();
        Ok(QuasiBasis {
            space: space.clone(),
            ambient_rank,
            elements,
            supports,
        })
    }

    pub fn space(&self) -> &AtomSpace {
        &self.space
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Number of quasi-basis elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ModVector<F>] {
        &self.elements
    }

    /// The support chain `i_{x₁} ⩾ … ⩾ i_{x_n}`.
    pub fn supports(&self) -> &[Idempotent] {
        &self.supports
    }

    /// The elements viewed as a generator set for their span.
    pub fn as_generator_set(&self) -> GeneratorSet<F> {
        GeneratorSet::new(&self.space, self.ambient_rank, self.elements.clone())
            .expect("quasi-basis elements are a valid generator set")
    }

    /// Fold one new generator into the basis.
    ///
    /// `z` must escape the current span somewhere; the membership case is an
    /// error (callers that scan a generator list skip members instead). The
    /// result spans the old span together with `z`, the support chain stays
    /// nonincreasing, and the element count grows by at most one.
    pub fn insert_generator(self, z: &ModVector<F>) -> Result<Self> {
        let report = nonmembership_idempotent(z, &self.as_generator_set())?;
        if report.outside().is_zero() {
            return Err(Error::AlreadyMember);
        }
        Ok(self.insert_with_locus(z, report.outside().clone()))
    }

    /// The cascade, with the separation idempotent `j₀` already computed.
    fn insert_with_locus(mut self, z: &ModVector<F>, locus: Idempotent) -> Self {
        debug_assert!(!locus.is_zero());
        let mut carry = locus;
        for (element, support) in self.elements.iter_mut().zip(self.supports.iter_mut()) {
            let next = carry.meet(support).expect("shared space");
            let delta = carry.minus(&next).expect("shared space");
            if !delta.is_zero() {
                *element = element
                    .add(&z.restrict(&delta).expect("shared space"))
                    .expect("shared space and rank");
                *support = element.support();
            }
            carry = next;
            if carry.is_zero() {
                break;
            }
        }
        if !carry.is_zero() {
            let tail = z.restrict(&carry).expect("shared space");
            debug_assert_eq!(tail.support(), carry);
            self.elements.push(tail);
            self.supports.push(carry);
        }
        debug_assert!(self.supports.windows(2).all(|pair| pair[1].le(&pair[0])));
        self
    }

    /// Check the quasi-basis laws against a generator set.
    ///
    /// `span_ok` is two-sided span equality, `chain_ok` the nonincreasing
    /// support chain, `independent_ok` fiberwise linear independence of the
    /// supported elements. Failures are reported, not raised.
    pub fn verify(&self, gens: &GeneratorSet<F>) -> Result<VerificationReport> {
        self.space.check_same(gens.space())?;
        if self.ambient_rank != gens.ambient_rank() {
            return Err(Error::RankMismatch {
                expected: gens.ambient_rank(),
                found: self.ambient_rank,
            });
        }

        let mut counterexample = None;

        let self_gens = self.as_generator_set();
        let mut span_ok = true;
        for (index, gen) in gens.generators().iter().enumerate() {
            let report = nonmembership_idempotent(gen, &self_gens)?;
            if !report.is_member() {
                span_ok = false;
                counterexample.get_or_insert(Counterexample::GeneratorOutsideSpan {
                    index,
                    outside: report.outside().clone(),
                });
                break;
            }
        }
        if span_ok {
            for (index, element) in self.elements.iter().enumerate() {
                let report = nonmembership_idempotent(element, gens)?;
                if !report.is_member() {
                    span_ok = false;
                    counterexample.get_or_insert(Counterexample::ElementOutsideSpan {
                        index,
                        outside: report.outside().clone(),
                    });
                    break;
                }
            }
        }

        let chain_break = self.chain_break();
        let chain_ok = chain_break.is_none();
        if let Some(position) = chain_break {
            counterexample.get_or_insert(Counterexample::ChainViolation { position });
        }

        let dependent_atom = self.dependent_atom();
        let independent_ok = dependent_atom.is_none();
        if let Some(atom) = dependent_atom {
            counterexample.get_or_insert(Counterexample::DependentFibers { atom });
        }

        Ok(VerificationReport {
            span_ok,
            chain_ok,
            independent_ok,
            counterexample,
        })
    }

    /// First position where the support chain increases, if any.
    fn chain_break(&self) -> Option<usize> {
        self.supports
            .windows(2)
            .position(|pair| !pair[1].le(&pair[0]))
    }

    /// First atom whose supported fibers are linearly dependent, if any.
    fn dependent_atom(&self) -> Option<usize> {
        self.space.atoms().find(|&atom| {
            let fibers: Vec<Vec<F>> = self
                .elements
                .iter()
                .zip(&self.supports)
                .filter(|(_, support)| support.contains(atom))
                .map(|(element, _)| element.fiber_unchecked(atom))
                .collect();
            !columns_independent(&fibers)
        })
    }

    /// The rank stratification induced by the support chain.
    ///
    /// Stratum `j` is `i_{x_j} − i_{x_{j+1}}` (with `i₀ = e − i_{x₁}` and the
    /// last stratum equal to the last support); on it the spanned module is
    /// free of rank `j`. Requires the chain and independence laws to hold.
    pub fn rank_profile(&self) -> Result<RankProfile> {
        if let Some(position) = self.chain_break() {
            return Err(Error::UnverifiedBasis(format!(
                "support chain increases at position {position}"
            )));
        }
        if let Some(atom) = self.dependent_atom() {
            return Err(Error::UnverifiedBasis(format!(
                "supported fibers are dependent at atom {atom}"
            )));
        }
        let identity = Idempotent::identity(&self.space);
        let mut strata = Vec::with_capacity(self.len() + 1);
        match self.supports.first() {
            None => strata.push(identity),
            Some(first) => {
                strata.push(identity.minus(first).expect("shared space"));
                for pair in self.supports.windows(2) {
                    strata.push(pair[0].minus(&pair[1]).expect("shared space"));
                }
                strata.push(self.supports.last().unwrap().clone());
            }
        }
        Ok(RankProfile::new(strata))
    }

    /// Canonical ring coordinates of `x` with respect to this basis.
    ///
    /// Returns `a₁, …, a_n` with `Σ a_j·x_j = x` and `a_j·i_{x_j} = a_j`;
    /// under that normalization the coefficients are unique. Fails with the
    /// outside idempotent when `x` is not in the span.
    pub fn coordinates(&self, x: &ModVector<F>) -> Result<Vec<RingElem<F>>> {
        let identity = Idempotent::identity(&self.space);
        let raw = solve_on_stratum(x, &self.as_generator_set(), &identity)?;
        raw.into_iter()
            .zip(&self.supports)
            .map(|(coeff, support)| coeff.restrict(support))
            .collect()
    }

    /// Membership test of `x` against the span of this basis.
    pub fn membership(&self, x: &ModVector<F>) -> Result<MembershipReport<F>> {
        nonmembership_idempotent(x, &self.as_generator_set())
    }
}

/// Build a quasi-basis for the span of `gens`.
///
/// Generators are scanned in input order; each one already in the running
/// span (zeros and duplicates included) is skipped, every other one is folded
/// in by the cascade. The result always verifies against `gens`, and its
/// length is at most `min(l, m)`.
pub fn construct<F: Field>(gens: &GeneratorSet<F>) -> QuasiBasis<F> {
    let mut basis = QuasiBasis::empty(gens.space(), gens.ambient_rank())
        .expect("generator sets have positive ambient rank");
    for z in gens.generators() {
        let report = nonmembership_idempotent(z, &basis.as_generator_set())
            .expect("generators share the set's space and rank");
        if report.outside().is_zero() {
            continue;
        }
        basis = basis.insert_with_locus(z, report.outside().clone());
    }
    basis
}

/// Outcome of checking a candidate against the quasi-basis laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub span_ok: bool,
    pub chain_ok: bool,
    pub independent_ok: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.span_ok && self.chain_ok && self.independent_ok
    }
}

/// Pinpointed witness of a verification failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Generator `index` escapes the candidate's span on `outside`.
    GeneratorOutsideSpan { index: usize, outside: Idempotent },
    /// Candidate element `index` escapes the generators' span on `outside`.
    ElementOutsideSpan { index: usize, outside: Idempotent },
    /// `supports[position] ⩾ supports[position+1]` fails.
    ChainViolation { position: usize },
    /// The supported fibers at `atom` are linearly dependent.
    DependentFibers { atom: usize },
}

/// A partition of the identity into loci of constant free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    strata: Vec<Idempotent>,
}

impl RankProfile {
    pub(crate) fn new(strata: Vec<Idempotent>) -> Self {
        RankProfile { strata }
    }

    /// Stratum `j` is the locus where the module is free of rank `j`.
    pub fn strata(&self) -> &[Idempotent] {
        &self.strata
    }

    /// The largest rank attained anywhere.
    pub fn max_rank(&self) -> usize {
        self.strata.len() - 1
    }

    /// The rank at one atom.
    pub fn rank_at(&self, atom: usize) -> Option<usize> {
        self.strata
            .iter()
            .position(|stratum| stratum.contains(atom))
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (rank, stratum) in self.strata.iter().enumerate() {
            if rank > 0 {
                write!(f, ", ")?;
            }
            write!(f, "rank {rank} on {stratum}")?;
        }
        Ok(())
    }
}

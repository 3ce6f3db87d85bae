//! Separation idempotents and stratified solving.
//!
//! For a vector `x` and a finitely generated submodule `span(G)` of `R^m`,
//! the atoms split into those where the fiber of `x` lies in the fiber span
//! of `G` and those where it does not. The indicator of the second set is
//! the separation idempotent: below it no ring combination of `G` ever
//! agrees with `x`, off it one always does, and the per-atom witnesses make
//! the second clause constructive.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{GeneratorSet, ModVector};
use crate::ring::RingElem;
use crate::solve::solve_columns;
use crate::space::Idempotent;

/// Outcome of a membership test of `x` against `span(G)`, atom by atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport<F: Field> {
    /// Atoms where the fiber of `x` is *not* in the fiber span of `G`.
    outside: Idempotent,
    /// For each atom off `outside`, coefficients `c` with `Σ c_j·z_j(ω) = x(ω)`.
    witnesses: BTreeMap<usize, Vec<F>>,
}

impl<F: Field> MembershipReport<F> {
    /// The separation idempotent; zero exactly when `x ∈ span(G)`.
    pub fn outside(&self) -> &Idempotent {
        &self.outside
    }

    /// Per-atom witness coefficients on the membership locus.
    pub fn witnesses(&self) -> &BTreeMap<usize, Vec<F>> {
        &self.witnesses
    }

    pub fn is_member(&self) -> bool {
        self.outside.is_zero()
    }
}

fn check_query<F: Field>(x: &ModVector<F>, gens: &GeneratorSet<F>) -> Result<()> {
    gens.space().check_same(x.space())?;
    if x.ambient_rank() != gens.ambient_rank() {
        return Err(Error::RankMismatch {
            expected: gens.ambient_rank(),
            found: x.ambient_rank(),
        });
    }
    Ok(())
}

/// Split the atom space by fiber membership of `x` in `span(G)`.
///
/// The returned `outside` is the separation idempotent of the pair
/// `({x}, span(G))` whenever `x ∉ span(G)`; when `x` is a member the pair
/// intersects and the result degenerates to zero with a witness at every
/// atom.
pub fn nonmembership_idempotent<F: Field>(
    x: &ModVector<F>,
    gens: &GeneratorSet<F>,
) -> Result<MembershipReport<F>> {
    check_query(x, gens)?;
    let space = gens.space();
    let mut outside_atoms = Vec::new();
    let mut witnesses = BTreeMap::new();
    for atom in space.atoms() {
        let columns: Vec<Vec<F>> = gens
            .generators()
            .iter()
            .map(|g| g.fiber_unchecked(atom))
            .collect();
        let rhs = x.fiber_unchecked(atom);
        match solve_columns(&columns, &rhs) {
            Some(witness) => {
                witnesses.insert(atom, witness);
            }
            None => outside_atoms.push(atom),
        }
    }
    Ok(MembershipReport {
        outside: Idempotent::new(space, outside_atoms)?,
        witnesses,
    })
}

/// The least idempotent off whose complement `x` and `y` agree:
/// `support(x − y)`. For distinct `x, y` this is the separation idempotent
/// of the singleton pair `({x}, {y})`; for `y = θ` it is `i_x`.
pub fn equality_stratifier<F: Field>(x: &ModVector<F>, y: &ModVector<F>) -> Result<Idempotent> {
    Ok(x.sub(y)?.support())
}

/// Solve `restrict(i, Σ c_j·z_j) = restrict(i, x)` for ring coefficients.
///
/// Requires membership on all of `i`; fails with the offending atoms
/// otherwise. Coefficients are zeroed outside `i`.
pub fn solve_on_stratum<F: Field>(
    x: &ModVector<F>,
    gens: &GeneratorSet<F>,
    stratum: &Idempotent,
) -> Result<Vec<RingElem<F>>> {
    check_query(x, gens)?;
    gens.space().check_same(stratum.space())?;
    let space = gens.space();
    let mut columns: Vec<Vec<F>> = vec![vec![F::zero(); space.atom_count()]; gens.len()];
    let mut failed = Vec::new();
    for atom in stratum.atoms() {
        let fiber_columns: Vec<Vec<F>> = gens
            .generators()
            .iter()
            .map(|g| g.fiber_unchecked(atom))
            .collect();
        let rhs = x.fiber_unchecked(atom);
        match solve_columns(&fiber_columns, &rhs) {
            Some(witness) => {
                for (j, value) in witness.into_iter().enumerate() {
                    columns[j][atom] = value;
                }
            }
            None => failed.push(atom),
        }
    }
    if !failed.is_empty() {
        return Err(Error::NotAMember {
            outside: Idempotent::new(space, failed)?,
        });
    }
    columns
        .into_iter()
        .map(|values| RingElem::new(space, values))
        .collect()
}

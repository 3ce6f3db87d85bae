//! Quasi-bases for finitely generated modules over `K^Ω`.
//!
//! The coefficient ring here is `R = K^Ω`: functions from a finite atom
//! space into an exact field `K`, with pointwise arithmetic. `R` has zero
//! divisors, so submodules of `R^m` usually have no basis in the classical
//! sense. What they always have is a *quasi-basis*: an ordered spanning list
//! whose support idempotents form a nonincreasing chain and whose fibers are
//! linearly independent at every atom. The chain is an invariant of the
//! module and cuts the atom space into strata on which the module is free of
//! a fixed rank.
//!
//! The crate provides:
//!
//! - the idempotent lattice of `R` ([`Idempotent`], [`AtomSpace`]) with
//!   joins, meets, complements and suprema as exact set operations;
//! - ring elements with supports and generalized inverses ([`RingElem`]);
//! - the free module `R^m` with restriction and finite concatenation
//!   ([`ModVector`], [`GeneratorSet`]);
//! - separation idempotents and stratified solving ([`stratify`]);
//! - quasi-basis construction, verification, rank profiles and coordinates
//!   ([`construct`], [`QuasiBasis`], [`RankProfile`]);
//! - a componentwise oracle ([`oracle_rank_profile`]) that recomputes the
//!   stratification from raw fiber ranks, independently of the construction;
//! - a JSON batch interface ([`io`], [`cli`]) behind the `quasibasis` binary.
//!
//! All arithmetic is exact: rational by default ([`Rational`]), Gaussian
//! rational ([`Gaussian`]) when a complex scalar field is needed. There are
//! no tolerances anywhere.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p quasibasis --example lattice_basics      # idempotent algebra
//! cargo run -p quasibasis --example ring_arithmetic     # supports, inverses
//! cargo run -p quasibasis --example concatenation       # piecewise gluing
//! cargo run -p quasibasis --example construct_basis     # the main algorithm
//! cargo run -p quasibasis --example membership          # separation idempotents
//! cargo run -p quasibasis --example coordinates         # canonical coefficients
//! cargo run -p quasibasis --example oracle_crosscheck   # randomized cross-check
//! cargo run -p quasibasis --example gaussian_field      # the ℚ(i) scalar field
//! ```
//!
//! A minimal in-code tour:
//!
//! ```
//! use quasibasis::{construct, fixtures, oracle_rank_profile};
//!
//! let (_, gens) = fixtures::f1();
//! let basis = construct(&gens);
//! assert_eq!(basis.len(), 2);
//! assert!(basis.verify(&gens).unwrap().all_ok());
//! assert_eq!(basis.rank_profile().unwrap(), oracle_rank_profile(&gens));
//! ```

pub mod basis;
pub mod cli;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod io;
pub mod module;
pub mod oracle;
pub mod ring;
mod solve;
pub mod space;
pub mod stratify;

pub use basis::{construct, Counterexample, QuasiBasis, RankProfile, VerificationReport};
pub use error::{Error, Result};
pub use field::{Field, Gaussian, Rational};
pub use module::{GeneratorSet, ModVector};
pub use oracle::oracle_rank_profile;
pub use ring::RingElem;
pub use space::{AtomSpace, Idempotent};
pub use stratify::{
    equality_stratifier, nonmembership_idempotent, solve_on_stratum, MembershipReport,
};

//! JSON problem files and result documents.
//!
//! Rationals travel as strings ("p/q" or "p") so exactness survives any JSON
//! pipeline; idempotents serialize as sorted atom-index arrays. Output is
//! deterministic: fixed field order, canonical gcd-reduced rationals with a
//! positive denominator.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Rational;
use crate::module::{GeneratorSet, ModVector};
use crate::ring::RingElem;
use crate::space::{AtomSpace, Idempotent};

/// A rational matrix in file layout: outer index = coordinate, inner = atom.
pub type RationalMatrix = Vec<Vec<String>>;

/// Diagnostic for a malformed or inconsistent problem file.
#[derive(Debug, Clone, Error)]
#[error("{0}")]
pub struct FileError(pub String);

/// One batch problem: a module presented by generators, with optional
/// probability weights, an optional candidate quasi-basis and optional
/// query vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub omega_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    pub ambient_rank: usize,
    pub generators: Vec<RationalMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate: Option<Vec<RationalMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub queries: Option<Vec<RationalMatrix>>,
}

/// A validated problem, ready for the algebra layer.
#[derive(Clone, Debug)]
pub struct Problem {
    pub space: AtomSpace,
    pub generators: GeneratorSet<Rational>,
    pub candidate: Option<Vec<ModVector<Rational>>>,
    pub queries: Vec<ModVector<Rational>>,
}

/// Parse an exact rational from "p/q" or "p". No decimals, no rounding.
pub fn parse_rational(text: &str) -> Result<Rational, FileError> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| FileError(format!("'{text}' is not an exact rational")))?;
    let denom: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| FileError(format!("'{text}' is not an exact rational")))?,
        None => BigInt::from(1),
    };
    if denom == BigInt::from(0) {
        return Err(FileError(format!("'{text}' has a zero denominator")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical form: gcd-reduced, positive denominator, "/1" omitted.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

fn parse_vector(
    space: &AtomSpace,
    ambient_rank: usize,
    matrix: &RationalMatrix,
    what: &str,
    index: usize,
) -> Result<ModVector<Rational>, FileError> {
    if matrix.len() != ambient_rank {
        return Err(FileError(format!(
            "{what}[{index}]: {} coordinates given, expected ambient rank {ambient_rank}",
            matrix.len()
        )));
    }
    let mut coords = Vec::with_capacity(ambient_rank);
    for (coord, row) in matrix.iter().enumerate() {
        if row.len() != space.atom_count() {
            return Err(FileError(format!(
                "{what}[{index}]: coordinate {coord} has {} entries, expected {} atoms",
                row.len(),
                space.atom_count()
            )));
        }
        let values = row
            .iter()
            .map(|text| {
                parse_rational(text)
                    .map_err(|e| FileError(format!("{what}[{index}]: coordinate {coord}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        coords.push(RingElem::new(space, values).expect("length checked above"));
    }
    ModVector::new(space, coords).map_err(|e| FileError(format!("{what}[{index}]: {e}")))
}

impl ProblemFile {
    /// Validate dimensions and parse all rationals.
    pub fn validate(&self) -> Result<Problem, FileError> {
        let space = match &self.weights {
            None => AtomSpace::new(self.omega_size),
            Some(weights) => {
                let parsed = weights
                    .iter()
                    .enumerate()
                    .map(|(k, text)| {
                        parse_rational(text).map_err(|e| FileError(format!("weights[{k}]: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                AtomSpace::with_weights(self.omega_size, parsed)
            }
        }
        .map_err(|e| FileError(e.to_string()))?;

        if self.ambient_rank == 0 {
            return Err(FileError("ambient_rank must be at least 1".into()));
        }

        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, m)| parse_vector(&space, self.ambient_rank, m, "generators", k))
            .collect::<Result<Vec<_>, _>>()?;
        let generators = GeneratorSet::new(&space, self.ambient_rank, gens)
            .map_err(|e| FileError(e.to_string()))?;

        let candidate = match &self.candidate {
            None => None,
            Some(mats) => Some(
                mats.iter()
                    .enumerate()
                    .map(|(k, m)| parse_vector(&space, self.ambient_rank, m, "candidate", k))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };

        let queries = match &self.queries {
            None => Vec::new(),
            Some(mats) => mats
                .iter()
                .enumerate()
                .map(|(k, m)| parse_vector(&space, self.ambient_rank, m, "queries", k))
                .collect::<Result<Vec<_>, _>>()?,
        };

        Ok(Problem {
            space,
            generators,
            candidate,
            queries,
        })
    }
}

/// Serialize a module vector in file layout.
pub fn vector_to_matrix(vector: &ModVector<Rational>) -> RationalMatrix {
    vector
        .coords()
        .iter()
        .map(|coord| coord.values().iter().map(format_rational).collect())
        .collect()
}

fn idem_to_atoms(idem: &Idempotent) -> Vec<usize> {
    idem.to_sorted_vec()
}

/// Result of `compute`: the quasi-basis, its support chain and rank strata,
/// plus the oracle profile when cross-checking was requested.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComputeDoc {
    pub omega_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    pub ambient_rank: usize,
    pub n: usize,
    pub elements: Vec<RationalMatrix>,
    pub supports: Vec<Vec<usize>>,
    pub strata: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_strata: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

/// Result of `verify`, mirroring the verification report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub span_ok: bool,
    pub chain_ok: bool,
    pub independent_ok: bool,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterexampleDoc {
    GeneratorOutsideSpan { index: usize, outside: Vec<usize> },
    ElementOutsideSpan { index: usize, outside: Vec<usize> },
    ChainViolation { position: usize },
    DependentFibers { atom: usize },
}

impl From<&crate::basis::Counterexample> for CounterexampleDoc {
    fn from(ce: &crate::basis::Counterexample) -> Self {
        use crate::basis::Counterexample as C;
        match ce {
            C::GeneratorOutsideSpan { index, outside } => CounterexampleDoc::GeneratorOutsideSpan {
                index: *index,
                outside: idem_to_atoms(outside),
            },
            C::ElementOutsideSpan { index, outside } => CounterexampleDoc::ElementOutsideSpan {
                index: *index,
                outside: idem_to_atoms(outside),
            },
            C::ChainViolation { position } => CounterexampleDoc::ChainViolation {
                position: *position,
            },
            C::DependentFibers { atom } => CounterexampleDoc::DependentFibers { atom: *atom },
        }
    }
}

/// One membership witness: coefficients over the generators at one atom.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub atom: usize,
    pub coefficients: Vec<String>,
}

/// Membership report for one query vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MemberQueryDoc {
    pub query: usize,
    pub member: bool,
    pub outside: Vec<usize>,
    pub witnesses: Vec<WitnessDoc>,
}

/// Result of `member`: one report per processed query.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MemberDoc {
    pub queries: Vec<MemberQueryDoc>,
}

/// Coordinates for one query vector, or the locus that obstructs them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoordsQueryDoc {
    pub query: usize,
    pub representable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outside: Option<Vec<usize>>,
}

/// Result of `coords`: the constructed basis shape plus per-query
/// coefficients.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoordsDoc {
    pub n: usize,
    pub supports: Vec<Vec<usize>>,
    pub queries: Vec<CoordsQueryDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, ratio};

    #[test]
    fn rational_round_trip() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn validate_rejects_row_length_mismatch() {
        let file = ProblemFile {
            omega_size: 3,
            weights: None,
            ambient_rank: 2,
            generators: vec![vec![
                vec!["1".into(), "0".into(), "0".into()],
                vec!["0".into(), "2".into()], // one atom short
            ]],
            candidate: None,
            queries: None,
        };
        let err = file.validate().unwrap_err();
        assert!(err.0.contains("generators[0]"), "diagnostic: {}", err.0);
        assert!(err.0.contains("coordinate 1"), "diagnostic: {}", err.0);
    }

    #[test]
    fn validate_rejects_bad_weights() {
        let file = ProblemFile {
            omega_size: 2,
            weights: Some(vec!["1/2".into(), "1/3".into()]),
            ambient_rank: 1,
            generators: vec![],
            candidate: None,
            queries: None,
        };
        assert!(file.validate().is_err());
    }

    #[test]
    fn validate_accepts_fixture_shape() {
        let file = ProblemFile {
            omega_size: 3,
            weights: Some(vec!["1/2".into(), "1/4".into(), "1/4".into()]),
            ambient_rank: 2,
            generators: vec![
                vec![
                    vec!["1".into(), "0".into(), "0".into()],
                    vec!["0".into(), "2".into(), "0".into()],
                ],
                vec![
                    vec!["0".into(), "1".into(), "0".into()],
                    vec!["0".into(), "1".into(), "0".into()],
                ],
            ],
            candidate: None,
            queries: None,
        };
        let problem = file.validate().unwrap();
        assert_eq!(problem.space.atom_count(), 3);
        assert_eq!(problem.generators.len(), 2);
        assert!(problem.space.weights().is_some());
    }
}

//! Batch front end: read a problem file, run one operation, emit JSON.
//!
//! Exit codes: 0 for success (and oracle agreement), 1 for a clean negative
//! answer (verification failed, non-member, not representable), 2 for
//! invalid input, 3 for an oracle mismatch (the latter signals a bug, not
//! a property of the input).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::basis::{construct, QuasiBasis};
use crate::io::{format_rational, vector_to_matrix};
use crate::io::{
    ComputeDoc, CoordsDoc, CoordsQueryDoc, CounterexampleDoc, MemberDoc, MemberQueryDoc, Problem,
    ProblemFile, VerifyDoc, WitnessDoc,
};
use crate::module::ModVector;
use crate::oracle::oracle_rank_profile;
use crate::stratify::nonmembership_idempotent;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ORACLE_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "quasibasis",
    about = "Quasi-bases and rank stratification for modules over K^Omega",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CommonArgs {
    /// Problem file (JSON).
    pub input: PathBuf,
    /// Write the result document here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Suppress the summary line on standard error.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a quasi-basis for the span of the generators.
    Compute {
        #[command(flatten)]
        common: CommonArgs,
        /// Recompute the rank strata from raw fiber ranks and compare.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Check a candidate basis (the `candidate` field) against the generators.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Test query vectors for membership in the span of the generators.
    Member {
        #[command(flatten)]
        common: CommonArgs,
        /// Process a single query by index instead of all of them.
        #[arg(long)]
        query: Option<usize>,
    },
    /// Coordinates of query vectors over the constructed quasi-basis.
    Coords {
        #[command(flatten)]
        common: CommonArgs,
        /// Process a single query by index instead of all of them.
        #[arg(long)]
        query: Option<usize>,
    },
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Compute {
            common,
            oracle_check,
        } => with_problem(&common, |problem| {
            cmd_compute(problem, oracle_check, &common)
        }),
        Command::Verify { common } => with_problem(&common, |problem| cmd_verify(problem, &common)),
        Command::Member { common, query } => {
            with_problem(&common, |problem| cmd_member(problem, query, &common))
        }
        Command::Coords { common, query } => {
            with_problem(&common, |problem| cmd_coords(problem, query, &common))
        }
    }
}

fn with_problem<F>(common: &CommonArgs, body: F) -> i32
where
    F: FnOnce(Problem) -> i32,
{
    match load_problem(&common.input) {
        Ok(problem) => body(problem),
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_INVALID
        }
    }
}

fn load_problem(path: &Path) -> Result<Problem, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: ProblemFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.validate()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn emit<T: Serialize>(doc: &T, common: &CommonArgs) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
    text.push('\n');
    match &common.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}

fn summarize(common: &CommonArgs, message: &str) {
    if !common.quiet {
        eprintln!("{message}");
    }
}

fn cmd_compute(problem: Problem, oracle_check: bool, common: &CommonArgs) -> i32 {
    let basis = construct(&problem.generators);
    let profile = basis
        .rank_profile()
        .expect("constructed bases satisfy the quasi-basis laws");

    let mut doc = ComputeDoc {
        omega_size: problem.space.atom_count(),
        weights: problem
            .space
            .weights()
            .map(|ws| ws.iter().map(format_rational).collect()),
        ambient_rank: problem.generators.ambient_rank(),
        n: basis.len(),
        elements: basis.elements().iter().map(vector_to_matrix).collect(),
        supports: basis.supports().iter().map(|s| s.to_sorted_vec()).collect(),
        strata: profile.strata().iter().map(|s| s.to_sorted_vec()).collect(),
        oracle_strata: None,
        oracle_match: None,
    };

    let mut exit = EXIT_OK;
    if oracle_check {
        let oracle = oracle_rank_profile(&problem.generators);
        let matches = oracle == profile;
        doc.oracle_strata = Some(oracle.strata().iter().map(|s| s.to_sorted_vec()).collect());
        doc.oracle_match = Some(matches);
        if !matches {
            exit = EXIT_ORACLE_MISMATCH;
        }
    }

    if let Err(message) = emit(&doc, common) {
        eprintln!("error: {message}");
        return EXIT_INVALID;
    }
    match doc.oracle_match {
        Some(true) => summarize(
            common,
            &format!("quasi-basis of length {}; oracle match", basis.len()),
        ),
        Some(false) => summarize(
            common,
            &format!("quasi-basis of length {}; ORACLE MISMATCH", basis.len()),
        ),
        None => summarize(common, &format!("quasi-basis of length {}", basis.len())),
    }
    exit
}

fn cmd_verify(problem: Problem, common: &CommonArgs) -> i32 {
    let Some(candidate) = problem.candidate else {
        eprintln!(
            "error: {}: no `candidate` field to verify",
            common.input.display()
        );
        return EXIT_INVALID;
    };
    let ambient_rank = problem.generators.ambient_rank();
    let basis = match QuasiBasis::from_elements(&problem.space, ambient_rank, candidate) {
        Ok(basis) => basis,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let report = match basis.verify(&problem.generators) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let doc = VerifyDoc {
        span_ok: report.span_ok,
        chain_ok: report.chain_ok,
        independent_ok: report.independent_ok,
        verified: report.all_ok(),
        counterexample: report.counterexample.as_ref().map(CounterexampleDoc::from),
    };
    if let Err(message) = emit(&doc, common) {
        eprintln!("error: {message}");
        return EXIT_INVALID;
    }
    if doc.verified {
        summarize(common, "candidate verified");
        EXIT_OK
    } else {
        summarize(common, "candidate rejected");
        EXIT_NEGATIVE
    }
}

fn select_queries(
    queries: &[ModVector],
    selection: Option<usize>,
    input: &Path,
) -> Result<Vec<(usize, ModVector)>, String> {
    if queries.is_empty() {
        return Err(format!("{}: no `queries` to process", input.display()));
    }
    match selection {
        None => Ok(queries.iter().cloned().enumerate().collect()),
        Some(index) => match queries.get(index) {
            Some(q) => Ok(vec![(index, q.clone())]),
            None => Err(format!(
                "{}: query index {index} out of range ({} queries)",
                input.display(),
                queries.len()
            )),
        },
    }
}

fn cmd_member(problem: Problem, selection: Option<usize>, common: &CommonArgs) -> i32 {
    let selected = match select_queries(&problem.queries, selection, &common.input) {
        Ok(selected) => selected,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INVALID;
        }
    };
    let mut docs = Vec::with_capacity(selected.len());
    let mut all_members = true;
    for (index, query) in &selected {
        let report = nonmembership_idempotent(query, &problem.generators)
            .expect("queries were validated against the space");
        all_members &= report.is_member();
        docs.push(MemberQueryDoc {
            query: *index,
            member: report.is_member(),
            outside: report.outside().to_sorted_vec(),
            witnesses: report
                .witnesses()
                .iter()
                .map(|(atom, coefficients)| WitnessDoc {
                    atom: *atom,
                    coefficients: coefficients.iter().map(format_rational).collect(),
                })
                .collect(),
        });
    }
    let doc = MemberDoc { queries: docs };
    if let Err(message) = emit(&doc, common) {
        eprintln!("error: {message}");
        return EXIT_INVALID;
    }
    if all_members {
        summarize(common, "all queries are members");
        EXIT_OK
    } else {
        summarize(common, "some query is not a member");
        EXIT_NEGATIVE
    }
}

fn cmd_coords(problem: Problem, selection: Option<usize>, common: &CommonArgs) -> i32 {
    let selected = match select_queries(&problem.queries, selection, &common.input) {
        Ok(selected) => selected,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INVALID;
        }
    };
    let basis = construct(&problem.generators);
    let mut docs = Vec::with_capacity(selected.len());
    let mut all_representable = true;
    for (index, query) in &selected {
        match basis.coordinates(query) {
            Ok(coefficients) => docs.push(CoordsQueryDoc {
                query: *index,
                representable: true,
                coefficients: Some(
                    coefficients
                        .iter()
                        .map(|c| c.values().iter().map(format_rational).collect())
                        .collect(),
                ),
                outside: None,
            }),
            Err(crate::error::Error::NotAMember { outside }) => {
                all_representable = false;
                docs.push(CoordsQueryDoc {
                    query: *index,
                    representable: false,
                    coefficients: None,
                    outside: Some(outside.to_sorted_vec()),
                });
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
        }
    }
    let doc = CoordsDoc {
        n: basis.len(),
        supports: basis.supports().iter().map(|s| s.to_sorted_vec()).collect(),
        queries: docs,
    };
    if let Err(message) = emit(&doc, common) {
        eprintln!("error: {message}");
        return EXIT_INVALID;
    }
    if all_representable {
        summarize(common, "all queries are representable");
        EXIT_OK
    } else {
        summarize(common, "some query is not representable");
        EXIT_NEGATIVE
    }
}

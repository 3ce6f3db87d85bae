//! Exact fiber solving.
//!
//! Reduces augmented systems `A·c = b` over a field to reduced row echelon
//! form with first-nonzero pivoting. Rank decisions are exact comparisons
//! with zero; when a system is underdetermined the returned witness is the
//! minimal-index solution (free variables set to zero), so output is a
//! deterministic function of the input.

use crate::field::Field;

/// Solve `A·c = b` where `A` is given by columns. Returns the RREF
/// particular solution, or `None` when the system is inconsistent.
pub(crate) fn solve_columns<F: Field>(columns: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));

    // augmented row-major matrix [A | b]
    let mut mat: Vec<Vec<F>> = (0..rows)
        .map(|r| {
            let mut row: Vec<F> = columns.iter().map(|col| col[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let inv = mat[rank][col].inv().expect("pivot is nonzero");
        for c in col..=cols {
            mat[rank][c] = mat[rank][c].mul(&inv);
        }
        for r in 0..rows {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in col..=cols {
                let delta = mat[rank][c].mul(&factor);
                mat[r][c] = mat[r][c].sub(&delta);
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // inconsistent iff some zero row of A has a nonzero right-hand side
    for r in rank..rows {
        if !mat[r][cols].is_zero() {
            return None;
        }
    }

    let mut solution = vec![F::zero(); cols];
    for (row, col) in pivots {
        solution[col] = mat[row][cols].clone();
    }
    Some(solution)
}

/// Are the given columns linearly independent? Forward elimination with
/// first-nonzero pivoting; every column must produce a pivot.
pub(crate) fn columns_independent<F: Field>(columns: &[Vec<F>]) -> bool {
    if columns.is_empty() {
        return true;
    }
    let rows = columns[0].len();
    if columns.len() > rows {
        return false;
    }
    let mut mat: Vec<Vec<F>> = (0..rows)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let cols = columns.len();
    for col in 0..cols {
        let Some(pivot_row) = (col..rows).find(|&r| !mat[r][col].is_zero()) else {
            return false;
        };
        mat.swap(col, pivot_row);
        let inv = mat[col][col].inv().expect("pivot is nonzero");
        for r in col + 1..rows {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].mul(&inv);
            for c in col..cols {
                let delta = mat[col][c].mul(&factor);
                mat[r][c] = mat[r][c].sub(&delta);
            }
        }
    }
    true
}

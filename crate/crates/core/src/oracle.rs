//! Brute-force reference implementations for tests.
//!
//! Nothing here calls into the abacus module. The grid walk below
//! materializes a finite block of rows and places beads cell by cell, so it
//! can be checked against the computed bead predicate of an
//! [`AbacusDiagram`](crate::abacus::AbacusDiagram).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::partition::{is_lecture_hall, LectureHallPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("rows {lo}..={hi} are too few to place the bead for part {class}")]
    RowsTooSmall { lo: i64, hi: i64, class: usize },
    #[error("position {position} is outside the materialized grid")]
    OutOfRange { position: i64 },
}

/// Every sequence of `n` non-negative integers with sum at most `max_weight`
/// that satisfies the lecture hall inequalities.
pub fn brute_lecture_hall(n: usize, max_weight: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    if max_weight < 0 {
        return out;
    }
    let mut seq = vec![0i64; n];
    loop {
        if is_lecture_hall(n, &seq).expect("length matches") {
            out.insert(seq.clone());
        }
        // odometer over all compositions with sum <= max_weight
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            seq[k] += 1;
            if seq.iter().sum::<i64>() <= max_weight {
                break;
            }
            seq[k] = 0;
        }
    }
}

/// An explicit finite block of the `2n`-column array with its beads listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaterializedGrid {
    pub n: usize,
    pub first_row: i64,
    pub last_row: i64,
    pub beads: BTreeSet<i64>,
}

impl MaterializedGrid {
    fn width(&self) -> i64 {
        2 * self.n as i64
    }

    pub fn first_position(&self) -> i64 {
        1 + self.width() * self.first_row
    }

    pub fn last_position(&self) -> i64 {
        self.width() * (self.last_row + 1)
    }

    pub fn contains(&self, position: i64) -> bool {
        (self.first_position()..=self.last_position()).contains(&position)
    }

    pub fn is_bead(&self, position: i64) -> Option<bool> {
        self.contains(position).then(|| self.beads.contains(&position))
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> {
        self.first_position()..=self.last_position()
    }
}

/// Rows `-(w + 2) ..= w + 2` where `w = ⌈λₙ / n⌉`.
pub fn default_rows(lambda: &LectureHallPartition) -> (i64, i64) {
    let n = lambda.n() as i64;
    let w = (lambda.part(lambda.n()) + n - 1) / n;
    (-(w + 2), w + 2)
}

struct Cell {
    label: i64,
    column: i64,
}

/// Walks the grid in reading order placing `bₙ, ..., b₁`, then marks each
/// defining bead's column upward and, in the dual column, the entry
/// `1 - 2n - bᵢ` and everything above it.
pub fn simulate_encoding(lambda: &LectureHallPartition, rows: (i64, i64)) -> Result<MaterializedGrid, OracleError> {
    let n = lambda.n();
    let width = 2 * n as i64;
    let (lo, hi) = rows;
    let cells: Vec<Cell> = (lo..=hi)
        .flat_map(|row| {
            (1..=width).map(move |column| Cell {
                label: column + width * row,
                column,
            })
        })
        .collect();

    let mut blocked: BTreeSet<i64> = BTreeSet::new();
    let mut defining: Vec<(i64, i64)> = Vec::new();
    for class in (1..=n).rev() {
        let part = lambda.part(class);
        let free = cells.iter().filter(|c| !blocked.contains(&c.column));
        let chosen = if part > 0 {
            free.filter(|c| c.label >= 1).nth((part - 1) as usize)
        } else {
            free.filter(|c| c.label <= 0).max_by_key(|c| c.label)
        };
        let cell = chosen.ok_or(OracleError::RowsTooSmall { lo, hi, class })?;
        blocked.insert(cell.column);
        blocked.insert(width + 1 - cell.column);
        defining.push((cell.label, cell.column));
    }

    let mut beads = BTreeSet::new();
    for (label, column) in defining {
        let dual_column = width + 1 - column;
        let dual_label = 1 - width - label;
        for cell in &cells {
            if (cell.column == column && cell.label <= label)
                || (cell.column == dual_column && cell.label <= dual_label)
            {
                beads.insert(cell.label);
            }
        }
    }
    Ok(MaterializedGrid {
        n,
        first_row: lo,
        last_row: hi,
        beads,
    })
}

/// Gaps at positions strictly between `position - 2n` and `position`.
pub fn brute_gap_count(grid: &MaterializedGrid, position: i64) -> Result<usize, OracleError> {
    let start = position - grid.width();
    for p in [start, position] {
        if !grid.contains(p) {
            return Err(OracleError::OutOfRange { position: p });
        }
    }
    Ok((start + 1..position).filter(|p| !grid.beads.contains(p)).count())
}

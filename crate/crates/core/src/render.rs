//! ASCII rendering of an abacus: beads as `(p)`, gaps as ` p `, one extra
//! space between the two windows of each row, and an optional footer with
//! the class of every column.

use thiserror::Error;

use crate::abacus::{AbacusDiagram, AbacusError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("row range {lo}..{hi} is empty")]
    EmptyRows { lo: i64, hi: i64 },
    #[error(transparent)]
    Abacus(#[from] AbacusError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub n: usize,
    pub defining_beads: Vec<i64>,
    pub rows: (i64, i64),
    pub show_class_row: bool,
}

impl RenderSpec {
    pub fn render(&self) -> Result<String, RenderError> {
        let (lo, hi) = self.rows;
        if lo > hi {
            return Err(RenderError::EmptyRows { lo, hi });
        }
        let abacus = AbacusDiagram::new(self.n, self.defining_beads.clone())?;
        Ok(render(&abacus, self.rows, self.show_class_row))
    }
}

pub fn render(abacus: &AbacusDiagram, rows: (i64, i64), show_class_row: bool) -> String {
    let width = 2 * abacus.n() as i64;
    let (lo, hi) = rows;
    let label_width = [1 + width * lo, width * (hi + 1)]
        .iter()
        .map(|p| p.to_string().len())
        .max()
        .unwrap_or(1);
    let cell_width = label_width + 2;

    let join = |cells: Vec<String>| -> String {
        let (left, right) = cells.split_at(abacus.n());
        format!("{} {}", left.concat(), right.concat()).trim_end().to_string()
    };

    let mut lines: Vec<String> = (lo..=hi)
        .map(|row| {
            let cells = (1..=width)
                .map(|column| {
                    let p = column + width * row;
                    let marker = if abacus.is_bead(p) {
                        format!("({p})")
                    } else {
                        format!(" {p} ")
                    };
                    format!("{marker:>cell_width$}")
                })
                .collect();
            join(cells)
        })
        .collect();

    if show_class_row {
        lines.push(String::new());
        let cells = (1..=width)
            .map(|column| format!("{:>cell_width$}", format!("[{}]", abacus.class_of(column))))
            .collect();
        lines.push(join(cells));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

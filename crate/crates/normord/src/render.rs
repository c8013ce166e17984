//! Plain-text tables and CSV.

use normord_core::{FiniteMatrix, StirlingMatrix};

/// Right-aligned columns separated by two spaces, LF line endings.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; cols];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

/// The staircase padded with zeros to a full rectangle, one row per line.
pub fn stirling_table(m: &StirlingMatrix) -> String {
    let width = m.n_max() * m.step() + 1;
    let rows: Vec<Vec<String>> = (0..=m.n_max())
        .map(|n| (0..width).map(|k| m.get(n, k).to_string()).collect())
        .collect();
    aligned(&rows)
}

/// Staircase rows, entries separated by `;`, no padding.
pub fn stirling_csv(m: &StirlingMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(";"));
        out.push('\n');
    }
    out
}

pub fn matrix_table(m: &FiniteMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .rows()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    aligned(&rows)
}

pub fn matrix_csv(m: &FiniteMatrix) -> String {
    let mut out = String::new();
    for r in m.rows() {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(";"));
        out.push('\n');
    }
    out
}

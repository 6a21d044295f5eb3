//! ASCII diagrams in matrix coordinates: row 1 on top, column 1 on the left.

use std::collections::BTreeMap;

use crate::shapes::{Cell, CellSet, Partition, SkewShape};
use crate::strips::Decomposition;

const GLYPHS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Glyph for strip `i` (0-based); cycles after 61 strips.
pub fn strip_glyph(i: usize) -> char {
    GLYPHS[i % GLYPHS.len()] as char
}

fn show_partition(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn header(s: &SkewShape) -> String {
    if s.inner.is_empty() {
        show_partition(&s.outer)
    } else {
        format!("{}/{}", show_partition(&s.outer), show_partition(&s.inner))
    }
}

fn grid(
    rows: i64,
    cols: impl Fn(i64) -> i64,
    width: usize,
    glyph: impl Fn(Cell) -> Option<String>,
) -> String {
    let mut out = String::new();
    for i in 1..=rows {
        let mut line = String::new();
        for j in 1..=cols(i) {
            let g = glyph(Cell { row: i, col: j }).unwrap_or_else(|| " ".into());
            line.push_str(&format!("{g:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn content_width(cells: impl Iterator<Item = Cell>) -> usize {
    cells
        .map(|c| c.content().to_string().len())
        .max()
        .unwrap_or(1)
        + 1
}

/// `#` for cells of `λ/μ`, `.` for cells of `μ`; with `contents`, cells show their content.
pub fn render_shape(s: &SkewShape, contents: bool) -> String {
    let cells = s.cells();
    let width = if contents {
        content_width(cells.iter().copied())
    } else {
        1
    };
    let body = grid(
        s.outer.len() as i64,
        |i| s.outer.part(i),
        width,
        |c| {
            if cells.contains(&c) {
                Some(if contents {
                    c.content().to_string()
                } else {
                    "#".into()
                })
            } else if s.inner.contains_cell(c) {
                Some(".".into())
            } else {
                None
            }
        },
    );
    format!("{}\n{}", header(s), body)
}

/// A placed cell set inside its bounding box from row and column 1; other positions are `.`.
pub fn render_cells(cells: &CellSet, contents: bool) -> String {
    let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let cols = cells.iter().map(|c| c.col).max().unwrap_or(0);
    let width = if contents {
        content_width(cells.iter().copied())
    } else {
        1
    };
    grid(
        rows,
        |_| cols,
        width,
        |c| {
            Some(if !cells.contains(&c) {
                ".".into()
            } else if contents {
                c.content().to_string()
            } else {
                "#".into()
            })
        },
    )
}

/// Cells labelled by strip index, `.` for cells of `μ`. Followed by the `(p_i, q_i)` table.
pub fn render_decomposition(s: &SkewShape, d: &Decomposition) -> String {
    let mut owner: BTreeMap<Cell, usize> = BTreeMap::new();
    for (i, strip) in d.strips.iter().enumerate() {
        for &c in strip.cells() {
            owner.insert(c, i);
        }
    }
    let body = grid(
        s.outer.len() as i64,
        |i| s.outer.part(i),
        1,
        |c| {
            if let Some(&i) = owner.get(&c) {
                Some(strip_glyph(i).to_string())
            } else if s.outer.contains_cell(c) {
                Some(".".into())
            } else {
                None
            }
        },
    );
    let mut out = format!("{}\n{}", header(s), body);
    if d.is_empty() {
        out.push_str("k=0\n");
        return out;
    }
    out.push_str(&format!("k={}\n", d.len()));
    for (i, strip) in d.strips.iter().enumerate() {
        out.push_str(&format!(
            "{}  p={:>3}  q={:>3}\n",
            strip_glyph(i),
            strip.p(),
            strip.q()
        ));
    }
    out
}

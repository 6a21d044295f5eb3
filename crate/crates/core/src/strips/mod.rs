//! Border strips, slices, and decompositions of skew shapes by cutting strips.

mod construct;
mod glue;

pub(crate) use construct::dyck;
pub use construct::{strip_with_endpoints, StripPlan};
pub use glue::{
    glue, is_compatible_partition, is_compatible_strip, CompatWindow, GlueOrigin, GluedShape,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, CellSet, Partition, SkewShape};

/// Direction of the step from content `c` to content `c + 1` along a strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Horizontal,
    Vertical,
}

/// A connected skew shape without 2x2 blocks, stored as one cell per content.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderStrip {
    p: i64,
    cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn new(set: &CellSet) -> Result<Self> {
        let mut cells: Vec<Cell> = set.iter().copied().collect();
        if cells.is_empty() {
            return Err(Error::NotABorderStrip("empty cell set".into()));
        }
        cells.sort_by_key(Cell::content);
        for w in cells.windows(2) {
            let (x, y) = (w[0], w[1]);
            if y != x.translate(0, 1) && y != x.translate(-1, 0) {
                return Err(Error::NotABorderStrip(format!(
                    "cells {x} and {y} do not link"
                )));
            }
        }
        Ok(BorderStrip {
            p: cells[0].content(),
            cells,
        })
    }

    /// Strip running from `start` with the given steps.
    pub fn from_steps(start: Cell, steps: &[Step]) -> Self {
        let mut cells = vec![start];
        let mut cur = start;
        for s in steps {
            cur = match s {
                Step::Horizontal => cur.translate(0, 1),
                Step::Vertical => cur.translate(-1, 0),
            };
            cells.push(cur);
        }
        BorderStrip {
            p: start.content(),
            cells,
        }
    }

    /// Content of the starting (south-west) cell.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Content of the ending (north-east) cell.
    pub fn q(&self) -> i64 {
        self.p + self.cells.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn covers(&self, c: i64) -> bool {
        (self.p()..=self.q()).contains(&c)
    }

    pub fn cell_at(&self, c: i64) -> Option<Cell> {
        self.covers(c).then(|| self.cells[(c - self.p) as usize])
    }

    /// Cells ordered by content.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_set(&self) -> CellSet {
        self.cells.iter().copied().collect()
    }

    pub fn steps(&self) -> Vec<Step> {
        self.cells
            .windows(2)
            .map(|w| {
                if w[1].col > w[0].col {
                    Step::Horizontal
                } else {
                    Step::Vertical
                }
            })
            .collect()
    }

    /// The step between contents `c` and `c + 1`.
    pub fn step(&self, c: i64) -> Option<Step> {
        let (x, y) = (self.cell_at(c)?, self.cell_at(c + 1)?);
        Some(if y.col > x.col {
            Step::Horizontal
        } else {
            Step::Vertical
        })
    }

    pub fn diagonal(&self, t: i64) -> BorderStrip {
        BorderStrip {
            p: self.p,
            cells: self.cells.iter().map(|c| c.diagonal(t)).collect(),
        }
    }

    /// `γ[a, b]`: a sub-strip for `a <= b`, empty for `a = b + 1`, undefined below that.
    pub fn slice(&self, a: i64, b: i64) -> Result<StripSlice> {
        if a == b + 1 {
            return Ok(StripSlice::Empty);
        }
        if a > b + 1 {
            return Ok(StripSlice::Undefined);
        }
        for c in [a, b] {
            if !self.covers(c) {
                return Err(Error::OutOfRange(c));
            }
        }
        let lo = (a - self.p) as usize;
        let hi = (b - self.p) as usize;
        Ok(StripSlice::Strip(BorderStrip {
            p: a,
            cells: self.cells[lo..=hi].to_vec(),
        }))
    }

    /// Cells with contents in `[a, b]`, clipped to the strip.
    pub fn clip(&self, a: i64, b: i64) -> CellSet {
        self.cells
            .iter()
            .filter(|c| (a..=b).contains(&c.content()))
            .copied()
            .collect()
    }

    pub fn to_skew_shape(&self) -> Result<SkewShape> {
        self.cell_set().normalized().to_skew_shape()
    }
}

impl Serialize for BorderStrip {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cells.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BorderStrip {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cells: Vec<Cell> = Vec::deserialize(d)?;
        BorderStrip::new(&cells.into_iter().collect()).map_err(serde::de::Error::custom)
    }
}

/// Result of slicing a border strip by a content window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripSlice {
    Strip(BorderStrip),
    Empty,
    Undefined,
}

/// Result of slicing an arbitrary placed cell set by a content window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeSlice {
    Shape(CellSet),
    Empty,
    Undefined,
    NotSkew,
}

/// `α[a, b]` for a placed cell set: empty when `a = b + 1`, undefined when `a > b + 1`.
pub fn skew_slice(cells: &CellSet, a: i64, b: i64) -> ShapeSlice {
    if a == b + 1 {
        return ShapeSlice::Empty;
    }
    if a > b + 1 {
        return ShapeSlice::Undefined;
    }
    let part = cells.restrict_contents(a, b);
    if part.normalized().is_skew_shape() {
        ShapeSlice::Shape(part)
    } else {
        ShapeSlice::NotSkew
    }
}

/// First cell outside `λ` on the diagonal of content `c`.
fn diagonal_exit(lambda: &Partition, c: i64) -> Cell {
    let mut cell = if c >= 0 {
        Cell::new(1, 1 + c)
    } else {
        Cell::new(1 - c, 1)
    };
    while lambda.contains_cell(cell) {
        cell = cell.diagonal(1);
    }
    cell
}

/// The outer strip `λ⁰`: cells `x ∈ λ` with `x + (1,1) ∉ λ`.
pub fn outer_strip(lambda: &Partition) -> Option<BorderStrip> {
    let (lo, hi) = lambda.content_range()?;
    let cells: Vec<Cell> = (lo..=hi)
        .map(|c| diagonal_exit(lambda, c).diagonal(-1))
        .collect();
    Some(BorderStrip { p: lo, cells })
}

/// The window `[lo, hi]` of the extended outer strip `λ⁺`, the first cell outside `λ`
/// on every diagonal.
pub fn extended_outer_strip(lambda: &Partition, lo: i64, hi: i64) -> Result<BorderStrip> {
    if lo > hi {
        return Err(Error::Precondition(format!("empty window [{lo}, {hi}]")));
    }
    let cells = (lo..=hi).map(|c| diagonal_exit(lambda, c)).collect();
    Ok(BorderStrip { p: lo, cells })
}

/// The inner strip of `λ/μ`: cells with no north-west neighbour inside the shape, completed
/// by outer strip cells on the remaining contents.
pub fn inner_strip(s: &SkewShape) -> Result<Option<BorderStrip>> {
    let Some(outer) = outer_strip(&s.outer) else {
        return Ok(None);
    };
    let cells = s.cells();
    let rho: CellSet = cells
        .iter()
        .filter(|x| !cells.contains(&x.diagonal(-1)))
        .copied()
        .collect();
    let used = rho.contents();
    let extra: CellSet = outer
        .cells
        .iter()
        .filter(|x| !used.contains(&x.content()))
        .copied()
        .collect();
    if rho.is_empty() {
        return Ok(Some(outer));
    }
    BorderStrip::new(&rho.union(&extra)).map(Some)
}

fn top_right(cells: &CellSet) -> Option<Cell> {
    let top = cells.iter().map(|c| c.row).min()?;
    cells
        .iter()
        .filter(|c| c.row == top)
        .max_by_key(|c| c.col)
        .copied()
}

fn bottom_left(cells: &CellSet) -> Option<Cell> {
    let bottom = cells.iter().map(|c| c.row).max()?;
    cells
        .iter()
        .filter(|c| c.row == bottom)
        .min_by_key(|c| c.col)
        .copied()
}

fn attach(alpha: &CellSet, beta: &CellSet, above: bool) -> Result<CellSet> {
    let (Some(a), Some(b)) = (top_right(alpha), bottom_left(beta)) else {
        return Err(Error::Attach("both shapes must be nonempty".into()));
    };
    if b.content() != a.content() + 1 {
        return Err(Error::Attach(format!(
            "corner contents {} and {} are not consecutive",
            a.content(),
            b.content()
        )));
    }
    let target = if above {
        a.translate(-1, 0)
    } else {
        a.translate(0, 1)
    };
    let moved = beta.translate(target.row - b.row, target.col - b.col);
    if !moved.is_disjoint(alpha) {
        return Err(Error::Attach("shapes overlap after attaching".into()));
    }
    let out = alpha.union(&moved).normalized();
    if !out.is_skew_shape() {
        return Err(Error::Attach(
            "attached cells do not form a skew shape".into(),
        ));
    }
    Ok(out)
}

/// `α → β`: `β` attached so its bottom-left corner sits right of the top-right corner of `α`.
pub fn attach_right(alpha: &CellSet, beta: &CellSet) -> Result<CellSet> {
    attach(alpha, beta, false)
}

/// `α ↑ β`: `β` attached so its bottom-left corner sits above the top-right corner of `α`.
pub fn attach_above(alpha: &CellSet, beta: &CellSet) -> Result<CellSet> {
    attach(alpha, beta, true)
}

/// `λ(a, b)` computed by removing `λ⁰[b + 1, a]` or adding `λ⁺[a + 1, b]`.
pub fn swap_by_strips(lambda: &Partition, a: i64, b: i64) -> Result<Partition> {
    let cells = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return Ok(lambda.clone()),
        std::cmp::Ordering::Greater => {
            let g = outer_strip(lambda).ok_or(Error::OutOfRange(a))?;
            let StripSlice::Strip(t) = g.slice(b + 1, a)? else {
                return Err(Error::OutOfRange(a));
            };
            lambda.cells().difference(&t.cell_set())
        }
        std::cmp::Ordering::Less => {
            let t = extended_outer_strip(lambda, a + 1, b)?;
            lambda.cells().union(&t.cell_set())
        }
    };
    let s = cells.to_skew_shape()?;
    if !s.inner.is_empty() {
        return Err(Error::InvalidMove {
            a,
            b,
            reason: "result is not a partition".into(),
        });
    }
    Ok(s.outer)
}

/// A border strip decomposition, strips ordered by decreasing `q` then decreasing `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub strips: Vec<BorderStrip>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    strips: Vec<Vec<Cell>>,
    p: Vec<i64>,
    q: Vec<i64>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionJson {
            strips: self.strips.iter().map(|t| t.cells.clone()).collect(),
            p: self.p(),
            q: self.q(),
        }
        .serialize(s)
    }
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    pub fn p(&self) -> Vec<i64> {
        self.strips.iter().map(BorderStrip::p).collect()
    }

    pub fn q(&self) -> Vec<i64> {
        self.strips.iter().map(BorderStrip::q).collect()
    }

    pub fn cells(&self) -> CellSet {
        self.strips
            .iter()
            .flat_map(|t| t.cells.iter().copied())
            .collect()
    }
}

/// Cut a placed cell set along the diagonal translates of `gamma`.
pub fn decompose(cells: &CellSet, gamma: &BorderStrip) -> Result<Decomposition> {
    let mut layers: BTreeMap<i64, CellSet> = BTreeMap::new();
    for x in cells {
        let g = gamma
            .cell_at(x.content())
            .ok_or(Error::IncompatibleCuttingStrip(x.content()))?;
        layers.entry(x.row - g.row).or_default().insert(*x);
    }
    let mut strips = Vec::new();
    for layer in layers.values() {
        for comp in layer.components() {
            strips.push(BorderStrip::new(&comp)?);
        }
    }
    strips.sort_by(|a, b| b.q().cmp(&a.q()).then(b.p().cmp(&a.p())));
    Ok(Decomposition { strips })
}

pub fn decompose_shape(s: &SkewShape, gamma: &BorderStrip) -> Result<Decomposition> {
    decompose(&s.cells(), gamma)
}

/// Decomposition of `λ/μ` cut by the outer strip of `λ`.
pub fn lascoux_pragacz(s: &SkewShape) -> Result<Decomposition> {
    match outer_strip(&s.outer) {
        Some(g) => decompose_shape(s, &g),
        None => Ok(Decomposition::default()),
    }
}

/// Decomposition of `λ/μ` cut by its inner strip.
pub fn kreiman(s: &SkewShape) -> Result<Decomposition> {
    match inner_strip(s)? {
        Some(g) => decompose_shape(s, &g),
        None => Ok(Decomposition::default()),
    }
}

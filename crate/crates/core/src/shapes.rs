//! Partitions, content codes, skew shapes and placed cell sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell in matrix coordinates. `row` grows downwards and `col` to the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub const fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col - self.row
    }

    pub fn translate(self, dr: i64, dc: i64) -> Cell {
        Cell::new(self.row + dr, self.col + dc)
    }

    pub fn diagonal(self, t: i64) -> Cell {
        self.translate(t, t)
    }
}

impl From<(i64, i64)> for Cell {
    fn from((row, col): (i64, i64)) -> Self {
        Cell::new(row, col)
    }
}

impl From<Cell> for (i64, i64) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!(
                "negative part in {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, zero past the end.
    pub fn part(&self, i: i64) -> i64 {
        if i < 1 {
            return i64::MAX;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as i64)
            .collect();
        Partition { parts }
    }

    pub fn cells(&self) -> CellSet {
        let mut out = BTreeSet::new();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.insert(Cell::new(i as i64 + 1, j));
            }
        }
        CellSet { cells: out }
    }

    /// Inclusive content range `[1 - len, first part - 1]`, or `None` for the empty partition.
    pub fn content_range(&self) -> Option<(i64, i64)> {
        if self.is_empty() {
            None
        } else {
            Some((1 - self.len() as i64, self.parts[0] - 1))
        }
    }

    /// The content code `{λ_i - i : 1 <= i <= n}`.
    pub fn content_code(&self, n: usize) -> Result<ContentSet> {
        if self.len() > n {
            return Err(Error::InvalidArity { len: self.len(), n });
        }
        let values = (1..=n as i64).map(|i| self.part(i) - i).collect();
        ContentSet::new(values)
    }

    /// Inverse of [`Partition::content_code`].
    pub fn from_content_code(code: &ContentSet, n: usize) -> Result<Partition> {
        if code.len() != n {
            return Err(Error::InvalidContentSet(format!(
                "expected {n} values, got {}",
                code.len()
            )));
        }
        let desc = code.descending();
        if let Some(&last) = desc.last() {
            if last < -(n as i64) {
                return Err(Error::InvalidContentSet(format!("{last} is below -{n}")));
            }
        }
        let parts = desc
            .iter()
            .enumerate()
            .map(|(i, c)| c + i as i64 + 1)
            .collect();
        Partition::new(parts)
    }

    /// Replace `a` by `b` in the content code of length `n`.
    pub fn swap_content(&self, n: usize, a: i64, b: i64) -> Result<Partition> {
        let code = self.content_code(n)?;
        if a == b {
            return if code.contains(a) {
                Ok(self.clone())
            } else {
                Err(Error::InvalidMove {
                    a,
                    b,
                    reason: format!("{a} is not in the code"),
                })
            };
        }
        if !code.contains(a) {
            return Err(Error::InvalidMove {
                a,
                b,
                reason: format!("{a} is not in the code"),
            });
        }
        if code.contains(b) {
            return Err(Error::InvalidMove {
                a,
                b,
                reason: format!("{b} is already in the code"),
            });
        }
        if b < -(n as i64) {
            return Err(Error::InvalidMove {
                a,
                b,
                reason: format!("{b} is below -{n}"),
            });
        }
        let values = code
            .values
            .iter()
            .map(|&c| if c == a { b } else { c })
            .collect();
        Partition::from_content_code(&ContentSet::new(values)?, n)
    }

    pub fn to_frobenius(&self) -> FrobeniusPair {
        let conj = self.conjugate();
        let r = (1..).take_while(|&i| self.part(i) >= i).count() as i64;
        FrobeniusPair {
            arms: (1..=r).map(|i| self.part(i) - i).collect(),
            legs: (1..=r).map(|j| conj.part(j) - j).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions with `|λ| <= max_size`, at most `max_len` parts and parts at most `max_part`.
pub fn partitions_bounded(max_size: i64, max_len: usize, max_part: i64) -> Vec<Partition> {
    fn rec(rem: i64, len_left: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if len_left == 0 {
            return;
        }
        for p in 1..=cap.min(rem) {
            cur.push(p);
            rec(rem - p, len_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions fitting in a `rows x cols` box.
pub fn partitions_in_box(rows: usize, cols: i64) -> Vec<Partition> {
    partitions_bounded(rows as i64 * cols, rows, cols)
}

/// A finite set of distinct integers, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContentSet {
    values: Vec<i64>,
}

impl ContentSet {
    pub fn new(mut values: Vec<i64>) -> Result<Self> {
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidContentSet(format!(
                "repeated value in {values:?}"
            )));
        }
        Ok(ContentSet { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn descending(&self) -> Vec<i64> {
        self.values.iter().rev().copied().collect()
    }

    /// Elements of `self` not in `other`, ascending.
    pub fn difference(&self, other: &ContentSet) -> Vec<i64> {
        self.values
            .iter()
            .copied()
            .filter(|&v| !other.contains(v))
            .collect()
    }
}

/// Frobenius coordinates `(a | b)` with strictly decreasing nonnegative arms and legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusPair {
    pub arms: Vec<i64>,
    pub legs: Vec<i64>,
}

fn check_strict_desc(v: &[i64], what: &str) -> Result<()> {
    if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidPartition(format!(
            "{what} {v:?} must be strictly decreasing and nonnegative"
        )));
    }
    Ok(())
}

impl FrobeniusPair {
    pub fn new(arms: Vec<i64>, legs: Vec<i64>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(format!(
                "arms and legs differ in length ({} vs {})",
                arms.len(),
                legs.len()
            )));
        }
        check_strict_desc(&arms, "arms")?;
        check_strict_desc(&legs, "legs")?;
        Ok(FrobeniusPair { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank() as i64;
        let mut parts: Vec<i64> = self
            .arms
            .iter()
            .enumerate()
            .map(|(i, a)| a + i as i64 + 1)
            .collect();
        let col_len: Vec<i64> = self
            .legs
            .iter()
            .enumerate()
            .map(|(j, b)| b + j as i64 + 1)
            .collect();
        let mut i = r + 1;
        loop {
            let p = col_len.iter().filter(|&&l| l >= i).count() as i64;
            if p == 0 {
                break;
            }
            parts.push(p);
            i += 1;
        }
        Partition { parts }
    }
}

/// Merge two disjoint strictly decreasing sequences into one.
pub fn disjoint_union(a: &[i64], c: &[i64]) -> Result<Vec<i64>> {
    let mut v: Vec<i64> = a.iter().chain(c).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!(
            "{a:?} and {c:?} are not disjoint"
        )));
    }
    Ok(v)
}

/// A finite set of cells at explicit positions, not necessarily a skew shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet {
            cells: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

impl CellSet {
    pub fn new() -> Self {
        CellSet::default()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.cells.iter()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        self.cells.union(&other.cells).copied().collect()
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        self.cells.difference(&other.cells).copied().collect()
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    pub fn contents(&self) -> BTreeSet<i64> {
        self.cells.iter().map(Cell::content).collect()
    }

    pub fn min_content(&self) -> Option<i64> {
        self.cells.iter().map(Cell::content).min()
    }

    pub fn max_content(&self) -> Option<i64> {
        self.cells.iter().map(Cell::content).max()
    }

    pub fn translate(&self, dr: i64, dc: i64) -> CellSet {
        self.cells.iter().map(|c| c.translate(dr, dc)).collect()
    }

    pub fn diagonal(&self, t: i64) -> CellSet {
        self.translate(t, t)
    }

    /// Translate, failing if a cell leaves the positive quadrant.
    pub fn shift(&self, dr: i64, dc: i64) -> Result<CellSet> {
        let out = self.translate(dr, dc);
        if let Some(c) = out.cells.iter().find(|c| c.row < 1 || c.col < 1) {
            return Err(Error::Placement(format!(
                "cell {c} leaves the positive quadrant"
            )));
        }
        Ok(out)
    }

    /// Diagonally translated copy with `min(min row, min col) = 1`.
    pub fn normalized(&self) -> CellSet {
        let m = self
            .cells
            .iter()
            .map(|c| c.row.min(c.col))
            .min()
            .unwrap_or(1);
        self.diagonal(1 - m)
    }

    /// The diagonal shift `t` with `other = self + (t, t)`, if one exists.
    pub fn diagonal_offset(&self, other: &CellSet) -> Option<i64> {
        if self.len() != other.len() {
            return None;
        }
        if self.is_empty() {
            return Some(0);
        }
        let a = self.cells.iter().next()?;
        let b = other.cells.iter().next()?;
        let t = b.row - a.row;
        if b.col - a.col != t {
            return None;
        }
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(x, y)| x.diagonal(t) == *y)
            .then_some(t)
    }

    pub fn restrict_contents(&self, a: i64, b: i64) -> CellSet {
        self.cells
            .iter()
            .filter(|c| (a..=b).contains(&c.content()))
            .copied()
            .collect()
    }

    /// True if some cell of `self` shares an edge with a cell of `other`.
    pub fn touches(&self, other: &CellSet) -> bool {
        self.cells.iter().any(|c| {
            [(0, 1), (0, -1), (1, 0), (-1, 0)]
                .iter()
                .any(|&(dr, dc)| other.contains(&c.translate(dr, dc)))
        })
    }

    /// Edge-connected components ordered by decreasing maximal content.
    pub fn components(&self) -> Vec<CellSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.cells {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(c) = queue.pop_front() {
                comp.insert(c);
                for (dr, dc) in [(0, 1), (0, -1), (1, 0), (-1, 0)] {
                    let n = c.translate(dr, dc);
                    if self.cells.contains(&n) && seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            out.push(CellSet { cells: comp });
        }
        out.sort_by(|a, b| {
            b.max_content()
                .cmp(&a.max_content())
                .then_with(|| b.min_content().cmp(&a.min_content()))
        });
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_2x2_block(&self) -> bool {
        self.cells.iter().any(|c| {
            self.contains(&c.translate(0, 1))
                && self.contains(&c.translate(1, 0))
                && self.contains(&c.translate(1, 1))
        })
    }

    /// Row index to (first column, last column, number of cells).
    fn row_spans(&self) -> BTreeMap<i64, (i64, i64, i64)> {
        let mut rows: BTreeMap<i64, (i64, i64, i64)> = BTreeMap::new();
        for c in &self.cells {
            let e = rows.entry(c.row).or_insert((c.col, c.col, 0));
            e.0 = e.0.min(c.col);
            e.1 = e.1.max(c.col);
            e.2 += 1;
        }
        rows
    }

    /// The minimal `(outer, inner)` pair realising this set as a skew diagram.
    pub fn to_skew_shape(&self) -> Result<SkewShape> {
        if self.is_empty() {
            return Ok(SkewShape::empty());
        }
        if let Some(c) = self.cells.iter().find(|c| c.row < 1 || c.col < 1) {
            return Err(Error::Placement(format!(
                "cell {c} is outside the positive quadrant"
            )));
        }
        let spans = self.row_spans();
        let bottom = *spans.keys().next_back().unwrap_or(&0);
        let mut outer = vec![0; bottom as usize];
        let mut inner = vec![0; bottom as usize];
        let mut below = 0;
        for i in (1..=bottom).rev() {
            let idx = i as usize - 1;
            match spans.get(&i) {
                Some(&(lo, hi, n)) => {
                    if hi - lo + 1 != n {
                        return Err(Error::NotASkewShape(format!("row {i} is not an interval")));
                    }
                    outer[idx] = hi;
                    inner[idx] = lo - 1;
                }
                None => {
                    outer[idx] = below;
                    inner[idx] = below;
                }
            }
            below = outer[idx];
        }
        let (outer, inner) = match (Partition::new(outer), Partition::new(inner)) {
            (Ok(o), Ok(i)) => (o, i),
            _ => return Err(Error::NotASkewShape("row bounds are not monotone".into())),
        };
        let shape = SkewShape::new(outer, inner)
            .map_err(|_| Error::NotASkewShape("row bounds are not monotone".into()))?;
        debug_assert_eq!(&shape.cells(), self);
        Ok(shape)
    }

    pub fn is_skew_shape(&self) -> bool {
        self.to_skew_shape().is_ok()
    }
}

/// A skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    #[serde(default)]
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewShape::default()
    }

    pub fn size(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn cells(&self) -> CellSet {
        let mut out = BTreeSet::new();
        for i in 1..=self.outer.len() as i64 {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.insert(Cell::new(i, j));
            }
        }
        CellSet { cells: out }
    }

    pub fn contents(&self) -> BTreeSet<i64> {
        self.cells().contents()
    }

    pub fn components(&self) -> Vec<CellSet> {
        self.cells().components()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn content_code_of_six_six_four_two() {
        let code = p(&[6, 6, 4, 2]).content_code(6).unwrap();
        assert_eq!(code.descending(), vec![5, 4, 1, -2, -5, -6]);
        assert_eq!(
            Partition::from_content_code(&code, 6).unwrap(),
            p(&[6, 6, 4, 2])
        );
    }

    #[test]
    fn swap_content_examples() {
        let lam = p(&[6, 6, 4, 2]);
        assert_eq!(lam.swap_content(6, 4, 0).unwrap(), p(&[6, 3, 3, 2]));
        assert_eq!(lam.swap_content(6, -5, 2).unwrap(), p(&[6, 6, 5, 5, 3]));
        assert!(lam.swap_content(6, 3, 0).is_err());
        assert!(lam.swap_content(6, 4, 1).is_err());
    }

    #[test]
    fn frobenius_round_trip() {
        let f = FrobeniusPair::new(vec![4, 2, 1], vec![3, 1, 0]).unwrap();
        assert_eq!(f.to_partition(), p(&[5, 4, 4, 1]));
        assert_eq!(p(&[5, 4, 4, 1]).to_frobenius(), f);
    }

    #[test]
    fn minimal_embedding_handles_gaps() {
        let cells: CellSet = [Cell::new(1, 3), Cell::new(3, 1)].into_iter().collect();
        let s = cells.to_skew_shape().unwrap();
        assert_eq!(s.cells(), cells);
        let bad: CellSet = [Cell::new(1, 1), Cell::new(1, 3)].into_iter().collect();
        assert!(bad.to_skew_shape().is_err());
        let bad: CellSet = [Cell::new(1, 1), Cell::new(2, 2)].into_iter().collect();
        assert!(bad.to_skew_shape().is_err());
    }

    #[test]
    fn components_sorted_by_content() {
        let s = SkewShape::new(p(&[3, 2, 1]), p(&[2, 2])).unwrap();
        let comps = s.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].max_content(), Some(2));
    }
}

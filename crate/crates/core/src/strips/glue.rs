use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{extended_outer_strip, outer_strip, skew_slice, BorderStrip, ShapeSlice};
use crate::error::{Error, Result};
use crate::shapes::{Cell, CellSet, Partition, SkewShape};

/// Which content window around a component is compared when testing a partition for
/// compatibility: `[a, b]` or `[a - 1, b + 1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompatWindow {
    Exact,
    #[default]
    Widened,
}

/// Connected components of `ν/λ` with their content ranges, or `None` when some content
/// of `ν/λ` falls outside `Cont(λ)`.
fn components_in_range(
    nu: &Partition,
    lambda: &Partition,
) -> Result<Option<Vec<(CellSet, i64, i64)>>> {
    if !nu.contains(lambda) {
        return Err(Error::NotContained);
    }
    let skew = SkewShape::new(nu.clone(), lambda.clone())?;
    if skew.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let Some((lo, hi)) = lambda.content_range() else {
        return Ok(None);
    };
    let mut out = Vec::new();
    for comp in skew.components() {
        let (a, b) = (
            comp.min_content().unwrap_or(0),
            comp.max_content().unwrap_or(0),
        );
        if a < lo || b > hi {
            return Ok(None);
        }
        out.push((comp, a, b));
    }
    Ok(Some(out))
}

fn same_up_to_shift(x: &CellSet, y: &CellSet) -> Option<i64> {
    if x.contents() != y.contents() {
        return None;
    }
    x.diagonal_offset(y)
}

/// `γ` agrees with `λ⁰` on `[a - 1, b + 1]` around every component `[a, b]` of `ν/λ`.
pub fn is_compatible_strip(
    gamma: &BorderStrip,
    nu: &Partition,
    lambda: &Partition,
) -> Result<bool> {
    let Some(comps) = components_in_range(nu, lambda)? else {
        return Ok(false);
    };
    let Some(outer) = outer_strip(lambda) else {
        return Ok(comps.is_empty());
    };
    Ok(comps.iter().all(|(_, a, b)| {
        same_up_to_shift(&outer.clip(a - 1, b + 1), &gamma.clip(a - 1, b + 1)).is_some()
    }))
}

/// `μ⁺` agrees with `λ⁰` on the window around every component of `ν/λ`.
pub fn is_compatible_partition(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    window: CompatWindow,
) -> Result<bool> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let Some(comps) = components_in_range(nu, lambda)? else {
        return Ok(false);
    };
    let Some(outer) = outer_strip(lambda) else {
        return Ok(comps.is_empty());
    };
    for (_, a, b) in &comps {
        let (lo, hi) = match window {
            CompatWindow::Exact => (*a, *b),
            CompatWindow::Widened => (a - 1, b + 1),
        };
        let plus = extended_outer_strip(mu, lo, hi)?.cell_set();
        if same_up_to_shift(&outer.clip(lo, hi), &plus).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where a cell of a glued shape came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GlueOrigin {
    Strip,
    Component(usize),
}

/// `γ ⊕ ν/λ`: the strip `γ` with every component of `ν/λ` glued along its south-east side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedShape {
    pub cells: CellSet,
    pub origin: BTreeMap<Cell, GlueOrigin>,
    /// Components of `ν/λ` in their original position, by decreasing content.
    pub components: Vec<CellSet>,
}

impl GluedShape {
    pub fn shape(&self) -> Result<SkewShape> {
        self.cells.normalized().to_skew_shape()
    }

    pub fn slice(&self, a: i64, b: i64) -> ShapeSlice {
        skew_slice(&self.cells, a, b)
    }
}

pub fn glue(gamma: &BorderStrip, nu: &Partition, lambda: &Partition) -> Result<GluedShape> {
    let comps = components_in_range(nu, lambda)?
        .ok_or_else(|| Error::GlueFailure("Cont(ν/λ) is not inside Cont(λ)".into()))?;
    let mut cells = gamma.cell_set();
    let mut origin: BTreeMap<Cell, GlueOrigin> =
        cells.iter().map(|&c| (c, GlueOrigin::Strip)).collect();
    let outer = outer_strip(lambda);
    for (idx, (comp, a, b)) in comps.iter().enumerate() {
        let outer = outer
            .as_ref()
            .ok_or_else(|| Error::GlueFailure("λ is empty".into()))?;
        let t = same_up_to_shift(&outer.clip(a - 1, b + 1), &gamma.clip(a - 1, b + 1)).ok_or_else(
            || Error::GlueFailure(format!("γ differs from λ⁰ on [{}, {}]", a - 1, b + 1)),
        )?;
        let placed = comp.diagonal(t);
        if !placed.is_disjoint(&cells) {
            return Err(Error::GlueFailure(format!("component {idx} overlaps")));
        }
        if !placed.touches(&gamma.cell_set()) {
            return Err(Error::GlueFailure(format!(
                "component {idx} does not meet γ"
            )));
        }
        for &c in &placed {
            origin.insert(c, GlueOrigin::Component(idx));
        }
        cells = cells.union(&placed);
    }
    if !cells.normalized().is_skew_shape() {
        return Err(Error::GlueFailure("result is not a skew shape".into()));
    }
    Ok(GluedShape {
        cells,
        origin,
        components: comps.into_iter().map(|(c, _, _)| c).collect(),
    })
}

use super::{decompose, BorderStrip, Step};
use crate::error::{Error, Result};
use crate::shapes::CellSet;

/// Options for [`strip_with_endpoints`].
#[derive(Clone, Copy, Debug)]
pub struct StripPlan {
    /// Stop after this many distinct shapes.
    pub limit: usize,
}

impl Default for StripPlan {
    fn default() -> Self {
        StripPlan { limit: 1 }
    }
}

pub(crate) fn dyck(a: &[i64], b: &[i64]) -> bool {
    let mut pts: Vec<i64> = a.iter().chain(b).copied().collect();
    pts.sort_unstable();
    pts.iter()
        .all(|&x| a.iter().filter(|&&v| v <= x).count() >= b.iter().filter(|&&v| v <= x).count())
}

fn layer_range(cells: &CellSet, gamma: &BorderStrip) -> Option<(i64, i64)> {
    let layers: Vec<i64> = cells
        .iter()
        .filter_map(|x| gamma.cell_at(x.content()).map(|g| x.row - g.row))
        .collect();
    Some((*layers.iter().min()?, *layers.iter().max()?))
}

fn has_endpoints(cells: &CellSet, gamma: &BorderStrip, a: &[i64], b: &[i64]) -> bool {
    let Ok(d) = decompose(cells, gamma) else {
        return false;
    };
    let (mut p, mut q) = (d.p(), d.q());
    p.sort_unstable();
    q.sort_unstable();
    p == a && q == b
}

/// Skew shapes whose decomposition by `gamma` has starting contents `a` and ending
/// contents `b` as multisets. Both sequences must be strictly increasing, lie in
/// `Cont(γ)`, and every prefix count of `a` must dominate that of `b`.
pub fn strip_with_endpoints(
    gamma: &BorderStrip,
    a: &[i64],
    b: &[i64],
    plan: StripPlan,
) -> Result<Vec<CellSet>> {
    if a.len() != b.len() {
        return Err(Error::Precondition("a and b differ in length".into()));
    }
    for v in [a, b] {
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(format!(
                "{v:?} is not strictly increasing"
            )));
        }
        if let Some(&c) = v.iter().find(|&&c| !gamma.covers(c)) {
            return Err(Error::OutOfRange(c));
        }
    }
    if !dyck(a, b) {
        return Err(Error::Precondition(format!(
            "{a:?} and {b:?} fail the ballot condition"
        )));
    }
    let mut out = Vec::new();
    realize(gamma, a, b, plan.limit.max(1), &mut out);
    if out.is_empty() {
        return Err(Error::ConstructionUnavailable(format!(
            "no shape found for a = {a:?}, b = {b:?}"
        )));
    }
    Ok(out)
}

fn realize(gamma: &BorderStrip, a: &[i64], b: &[i64], limit: usize, out: &mut Vec<CellSet>) {
    if a.is_empty() {
        out.push(CellSet::new());
        return;
    }
    let b1 = b[0];
    let m = a.iter().rposition(|&x| x <= b1).unwrap_or(0);
    let first = match gamma.step(b1) {
        Some(Step::Vertical) => m,
        _ => 0,
    };
    let choices = std::iter::once(first).chain((0..=m).filter(|&i| i != first));
    for pick in choices {
        let rest_a: Vec<i64> = a
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pick)
            .map(|(_, &x)| x)
            .collect();
        if !dyck(&rest_a, &b[1..]) || a[pick] > b1 {
            continue;
        }
        let Ok(super::StripSlice::Strip(theta)) = gamma.slice(a[pick], b1) else {
            continue;
        };
        let theta = theta.cell_set();
        let mut inner = Vec::new();
        realize(gamma, &rest_a, &b[1..], limit, &mut inner);
        for sigma in inner {
            let shifts: Vec<i64> = match layer_range(&sigma, gamma) {
                None => vec![0],
                Some((lo, hi)) => {
                    let pad = theta.len() as i64 + 1;
                    (lo - pad..=hi + pad).collect()
                }
            };
            for t in shifts {
                let placed = theta.diagonal(t);
                if !placed.is_disjoint(&sigma) {
                    continue;
                }
                let tau = sigma.union(&placed);
                if !tau.normalized().is_skew_shape() || !has_endpoints(&tau, gamma, a, b) {
                    continue;
                }
                if !out.contains(&tau) {
                    out.push(tau);
                    if out.len() >= limit {
                        return;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Cell;

    fn strip(cells: &[(i64, i64)]) -> BorderStrip {
        BorderStrip::new(&cells.iter().map(|&c| Cell::from(c)).collect()).unwrap()
    }

    #[test]
    fn single_strip_is_a_slice() {
        let g = strip(&[(3, 1), (3, 2), (2, 2), (2, 3), (1, 3)]);
        let shapes = strip_with_endpoints(&g, &[-1], &[1], StripPlan::default()).unwrap();
        assert_eq!(shapes[0].len(), 3);
    }

    #[test]
    fn first_end_may_pair_with_a_later_start() {
        let g = strip(&[(4, 1), (3, 1), (3, 2), (2, 2), (1, 2), (1, 3)]);
        let shapes = strip_with_endpoints(&g, &[-3, -2], &[1, 2], StripPlan { limit: 8 }).unwrap();
        for tau in &shapes {
            let d = decompose(tau, &g).unwrap();
            let pairs: Vec<(i64, i64)> = d.strips.iter().map(|t| (t.p(), t.q())).collect();
            assert!(pairs.contains(&(-2, 1)), "{pairs:?}");
        }
    }

    #[test]
    fn rejects_ballot_failure() {
        let g = strip(&[(3, 1), (3, 2), (2, 2), (2, 3), (1, 3)]);
        assert!(strip_with_endpoints(&g, &[1], &[0], StripPlan::default()).is_err());
    }
}

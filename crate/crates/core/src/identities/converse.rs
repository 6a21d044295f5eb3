use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use super::{sort_parity, IdentityReport, ReportBuilder, Side, TheoremId, Verdict};
use crate::error::{Error, Result};
use crate::hring::{det, det_rat, HPoly};
use crate::schur::{classical_jt, schur9_cells, schur_expansion};
use crate::shapes::{CellSet, Partition, SkewShape};
use crate::strips::{
    decompose, dyck, inner_strip, is_compatible_partition, is_compatible_strip, outer_strip,
    skew_slice, strip_with_endpoints, BorderStrip, CompatWindow, ShapeSlice, StripPlan,
};

/// A witness `det(s_{α[a_j, b_i]}) = ε s_ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseConstruction {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub rho: SkewShape,
    pub sign: i64,
    /// `r_s` for each component of `α` off the inner strip.
    pub r: Vec<usize>,
    pub compatible: bool,
}

const CANDIDATES: usize = 48;
const SHIFTS: i64 = 3;

enum Piece {
    Cells(CellSet),
    One,
    Zero,
}

fn slice_piece(cells: &CellSet, a: i64, b: i64) -> Result<Piece> {
    match skew_slice(cells, a, b) {
        ShapeSlice::Shape(c) => Ok(Piece::Cells(c)),
        ShapeSlice::Empty => Ok(Piece::One),
        ShapeSlice::Undefined => Ok(Piece::Zero),
        ShapeSlice::NotSkew => Err(Error::Precondition(format!(
            "α[{a}, {b}] is not a skew shape"
        ))),
    }
}

fn classical(p: &Piece) -> Result<HPoly> {
    Ok(match p {
        Piece::Cells(c) => schur9_cells(c)?.collapse(),
        Piece::One => HPoly::one(),
        Piece::Zero => HPoly::zero(),
    })
}

fn numeric(p: &Piece, x: &[BigRational]) -> Result<BigRational> {
    Ok(match p {
        Piece::Cells(c) => classical_jt(&c.normalized().to_skew_shape()?, x)?,
        Piece::One => BigRational::one(),
        Piece::Zero => BigRational::zero(),
    })
}

/// Components placed south-west to north-east without sharing rows or columns.
fn disjoint_placement(parts: &[CellSet]) -> Result<SkewShape> {
    let mut out = CellSet::new();
    let (mut top, mut right) = (0i64, 0i64);
    for part in parts.iter().filter(|p| !p.is_empty()) {
        let p = part.normalized();
        let rows = p.iter().map(|c| c.row).max().unwrap_or(0);
        let min_col = p.iter().map(|c| c.col).min().unwrap_or(1);
        let placed = p.translate(top - rows, right + 1 - min_col);
        top = placed.iter().map(|c| c.row).min().unwrap_or(top) - 1;
        right = placed.iter().map(|c| c.col).max().unwrap_or(right);
        out = out.union(&placed);
    }
    let min_row = out.iter().map(|c| c.row).min().unwrap_or(1);
    out.translate(1 - min_row, 0).to_skew_shape()
}

fn rho_classical(parts: &[CellSet]) -> Result<HPoly> {
    let mut acc = HPoly::one();
    for p in parts {
        acc = &acc * &schur9_cells(p)?.collapse();
    }
    Ok(acc)
}

/// The Schur expansion when it has coefficients of both signs. No `±s_ρ` can then equal
/// `p`, since skew Schur functions are Schur positive.
fn mixed_signs(p: &HPoly) -> Option<Vec<serde_json::Value>> {
    let e = schur_expansion(p);
    let pos = e.values().any(|c| c.is_positive());
    let neg = e.values().any(|c| c.is_negative());
    (pos && neg).then(|| {
        e.iter()
            .map(|(l, c)| json!({ "shape": l, "coeff": c.to_string() }))
            .collect()
    })
}

/// `±s_κ` read off a one-term Schur expansion.
fn straight_witness(p: &HPoly) -> Option<Candidate> {
    let e = schur_expansion(p);
    let (kappa, c) = e.iter().next().filter(|_| e.len() == 1)?;
    let sign = if c.is_one() {
        1
    } else if (-c).is_one() {
        -1
    } else {
        return None;
    };
    let cells = kappa.cells();
    Some(Candidate {
        construction: ConverseConstruction {
            lambda: Partition::empty(),
            mu: Partition::empty(),
            nu: Partition::empty(),
            rho: SkewShape::straight(kappa.clone()),
            sign,
            r: Vec::new(),
            compatible: false,
        },
        parts: vec![cells],
    })
}

/// `sign(σ) ∏ s_{α[a_σ(i), b_i]}` when `σ` is the only permutation with no vanishing entry.
fn lone_term(pieces: &[Vec<Piece>]) -> Result<Option<Candidate>> {
    let k = pieces.len();
    let mut live = (0..k).permutations(k).filter(|s| {
        s.iter()
            .enumerate()
            .all(|(i, &j)| !matches!(pieces[i][j], Piece::Zero))
    });
    let (Some(sigma), None) = (live.next(), live.next()) else {
        return Ok(None);
    };
    let parts: Vec<CellSet> = sigma
        .iter()
        .enumerate()
        .filter_map(|(i, &j)| match &pieces[i][j] {
            Piece::Cells(c) => Some(c.clone()),
            _ => None,
        })
        .collect();
    let order: Vec<i64> = sigma.iter().map(|&j| j as i64).collect();
    let sign = if sort_parity(&order) == Some(true) {
        -1
    } else {
        1
    };
    Ok(Some(Candidate {
        construction: ConverseConstruction {
            lambda: Partition::empty(),
            mu: Partition::empty(),
            nu: Partition::empty(),
            rho: disjoint_placement(&parts)?,
            sign,
            r: Vec::new(),
            compatible: false,
        },
        parts,
    }))
}

struct Candidate {
    construction: ConverseConstruction,
    parts: Vec<CellSet>,
}

fn try_candidate(
    gamma: &BorderStrip,
    extras: &[CellSet],
    tau: &CellSet,
    a: &[i64],
    b: &[i64],
) -> Result<Option<Candidate>> {
    let shape = tau.to_skew_shape()?;
    if shape.cells() != *tau {
        return Ok(None);
    }
    let (lambda, mu) = (shape.outer.clone(), shape.inner.clone());
    let Some(outer) = outer_strip(&lambda) else {
        return Ok(None);
    };
    let mut nu_cells = lambda.cells();
    for beta in extras {
        let (lo, hi) = (
            beta.min_content().unwrap_or(0),
            beta.max_content().unwrap_or(0),
        );
        let (g, o) = (gamma.clip(lo - 1, hi + 1), outer.clip(lo - 1, hi + 1));
        if g.contents() != o.contents() {
            return Ok(None);
        }
        let Some(t) = g.diagonal_offset(&o) else {
            return Ok(None);
        };
        let placed = beta.diagonal(t);
        if !placed.is_disjoint(&nu_cells) {
            return Ok(None);
        }
        nu_cells = nu_cells.union(&placed);
    }
    let Ok(nu_shape) = nu_cells.to_skew_shape() else {
        return Ok(None);
    };
    if !nu_shape.inner.is_empty() || nu_shape.cells() != nu_cells {
        return Ok(None);
    }
    let nu = nu_shape.outer;
    if let Some((lo, hi)) = lambda.content_range() {
        if nu_cells
            .difference(&lambda.cells())
            .iter()
            .any(|c| c.content() < lo || c.content() > hi)
        {
            return Ok(None);
        }
    }
    let theta = decompose(tau, gamma)?;
    let (p, q) = (theta.p(), theta.q());
    let pos = |v: &[i64], w: &[i64]| -> Option<Vec<i64>> {
        v.iter()
            .map(|x| w.iter().position(|y| y == x).map(|i| i as i64))
            .collect()
    };
    let (Some(rows), Some(cols)) = (pos(b, &q), pos(a, &p)) else {
        return Ok(None);
    };
    let (Some(odd_r), Some(odd_c)) = (sort_parity(&rows), sort_parity(&cols)) else {
        return Ok(None);
    };
    let sign = if odd_r ^ odd_c { -1 } else { 1 };
    let mut parts = SkewShape::new(nu.clone(), mu.clone())?.components();
    let mut r = Vec::new();
    for beta in extras {
        let (lo, hi) = (
            beta.min_content().unwrap_or(0),
            beta.max_content().unwrap_or(0),
        );
        let rs = p
            .iter()
            .zip(&q)
            .filter(|&(&pi, &qi)| pi <= lo && hi <= qi)
            .count();
        r.push(rs);
        if rs == 0 {
            let Some(idx) = parts
                .iter()
                .position(|c| c.contents() == beta.contents() && c.diagonal_offset(beta).is_some())
            else {
                return Ok(None);
            };
            parts.remove(idx);
        } else {
            parts.extend(std::iter::repeat_n(beta.clone(), rs - 1));
        }
    }
    let compatible = is_compatible_strip(gamma, &nu, &lambda).unwrap_or(false)
        && is_compatible_partition(&mu, &nu, &lambda, CompatWindow::default()).unwrap_or(false);
    let rho = disjoint_placement(&parts)?;
    Ok(Some(Candidate {
        construction: ConverseConstruction {
            lambda,
            mu,
            nu,
            rho,
            sign,
            r,
            compatible,
        },
        parts,
    }))
}

fn construct(alpha: &CellSet, a: &[i64], b: &[i64], target: &HPoly) -> Result<Option<Candidate>> {
    let shape = alpha.to_skew_shape()?;
    let gamma = inner_strip(&shape)?.ok_or_else(|| Error::Precondition("α is empty".into()))?;
    let extras = alpha.difference(&gamma.cell_set()).components();
    let (mut sa, mut sb) = (a.to_vec(), b.to_vec());
    sa.sort_unstable();
    sb.sort_unstable();
    let taus = match strip_with_endpoints(&gamma, &sa, &sb, StripPlan { limit: CANDIDATES }) {
        Ok(t) => t,
        Err(Error::ConstructionUnavailable(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut fallback = None;
    for tau in &taus {
        let base = tau.normalized();
        for u in 0..SHIFTS {
            let Some(c) = try_candidate(&gamma, &extras, &base.diagonal(u), a, b)? else {
                continue;
            };
            let value = rho_classical(&c.parts)?;
            let signed = if c.construction.sign < 0 {
                -&value
            } else {
                value
            };
            if signed == *target {
                if c.construction.compatible {
                    return Ok(Some(c));
                }
                fallback.get_or_insert(c);
            }
        }
    }
    Ok(fallback)
}

/// `det(s_{α[a_j, b_i]})` for a connected skew shape `α` and contents `a`, `b` in `Cont(α)`,
/// compared with the sign times a single skew Schur function, or with zero.
pub fn verify_converse(
    alpha: &SkewShape,
    a: &[i64],
    b: &[i64],
    points: &[Vec<BigRational>],
) -> Result<IdentityReport> {
    if a.len() != b.len() {
        return Err(Error::Input("a and b differ in length".into()));
    }
    let cells = alpha.cells();
    if cells.is_empty() || !cells.is_connected() {
        return Err(Error::Precondition(
            "α must be a nonempty connected skew shape".into(),
        ));
    }
    let conts = cells.contents();
    if let Some(c) = a.iter().chain(b).find(|c| !conts.contains(c)) {
        return Err(Error::OutOfRange(*c));
    }
    let instance = json!({
        "alpha": alpha,
        "a": a,
        "b": b,
        "x": points.iter().map(|x| x.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let rb = ReportBuilder::new(TheoremId::Converse, instance);
    let k = a.len();
    let pieces = b
        .iter()
        .map(|&bi| {
            a.iter()
                .map(|&aj| slice_piece(&cells, aj, bi))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sym = pieces
        .iter()
        .map(|row| row.iter().map(classical).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let lhs_sym = if k == 0 { HPoly::one() } else { det(&sym)? };
    let mut lhs = Vec::with_capacity(points.len());
    for x in points {
        let m = pieces
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| numeric(p, x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        lhs.push(if k == 0 {
            BigRational::one()
        } else {
            det_rat(&m)?
        });
    }
    let show = |v: &[BigRational]| Side::Values(v.iter().map(|x| x.to_string()).collect());
    let admissible = sort_parity(a).is_some() && sort_parity(b).is_some() && {
        let (mut sa, mut sb) = (a.to_vec(), b.to_vec());
        sa.sort_unstable();
        sb.sort_unstable();
        dyck(&sa, &sb)
    };
    if k == 0 {
        return Ok(rb.finish(
            "converse",
            0,
            show(&lhs),
            show(&lhs),
            Verdict::TrivialPass,
            json!(null),
        ));
    }
    let unavailable = |why: String| -> Result<IdentityReport> {
        match mixed_signs(&lhs_sym) {
            Some(expansion) => {
                let detail = json!({ "lhs": lhs_sym.fingerprint(), "schur_expansion": expansion });
                Ok(rb.finish(
                    "converse",
                    k,
                    show(&lhs),
                    Side::Values(Vec::new()),
                    Verdict::Fail,
                    detail,
                ))
            }
            None => Err(Error::ConstructionUnavailable(why)),
        }
    };
    if lhs_sym.is_zero() {
        let zeros = vec![BigRational::zero(); points.len()];
        let verdict = if lhs.iter().all(Zero::is_zero) {
            Verdict::Zero
        } else {
            Verdict::Fail
        };
        let detail = json!({ "admissible": admissible, "lhs": lhs_sym.fingerprint() });
        return Ok(rb.finish("converse", k, show(&lhs), show(&zeros), verdict, detail));
    }
    let found = if !admissible {
        lone_term(&pieces)?.or_else(|| straight_witness(&lhs_sym))
    } else if k == 1 {
        match &pieces[0][0] {
            Piece::Cells(c) => Some(Candidate {
                construction: ConverseConstruction {
                    lambda: Partition::empty(),
                    mu: Partition::empty(),
                    nu: Partition::empty(),
                    rho: c.normalized().to_skew_shape()?,
                    sign: 1,
                    r: Vec::new(),
                    compatible: true,
                },
                parts: vec![c.clone()],
            }),
            _ => None,
        }
    } else {
        match construct(&cells, a, b, &lhs_sym)? {
            Some(c) => Some(c),
            None => lone_term(&pieces)?.or_else(|| straight_witness(&lhs_sym)),
        }
    };
    let Some(c) = found else {
        return unavailable(format!("no ρ found for a = {a:?}, b = {b:?}"));
    };
    let rhs_sym = {
        let v = rho_classical(&c.parts)?;
        if c.construction.sign < 0 {
            -&v
        } else {
            v
        }
    };
    let mut rhs = Vec::with_capacity(points.len());
    for x in points {
        let v = classical_jt(&c.construction.rho, x)?;
        rhs.push(if c.construction.sign < 0 { -v } else { v });
    }
    let verdict = if lhs_sym != rhs_sym || lhs != rhs {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    let detail = json!({
        "construction": c.construction,
        "lhs": lhs_sym.fingerprint(),
        "rhs": rhs_sym.fingerprint(),
    });
    Ok(rb.finish("converse", k, show(&lhs), show(&rhs), verdict, detail))
}

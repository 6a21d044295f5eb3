use serde_json::json;

use super::{chi, pow_km1, IdentityReport, ReportBuilder, TheoremId};
use crate::error::{Error, Result};
use crate::hring::{det, HPoly};
use crate::schur::{schur9, schur9_cells, schur9_shape};
use crate::shapes::{disjoint_union, CellSet, FrobeniusPair, Partition, SkewShape};
use crate::strips::{
    attach_above, attach_right, decompose_shape, glue, is_compatible_partition,
    is_compatible_strip, lascoux_pragacz, outer_strip, BorderStrip, CompatWindow, Decomposition,
    GluedShape, ShapeSlice,
};

use super::jt::strip_determinant;

/// Intermediate values of the generalized Hamel-Goulden identity.
#[derive(Clone, Debug)]
pub struct GeneralHgSides {
    pub theta: Decomposition,
    pub glued: GluedShape,
    /// `r_s` for each component of `ν/λ`, by increasing content.
    pub r: Vec<usize>,
    /// `s̃_{ν/μ} ∏ s̃_{α_s}^{r_s - 1}` over components with `r_s >= 1`.
    pub lhs: HPoly,
    /// `det(s̃_{(γ⊕ν/λ)[p_j, q_i]})` times `s̃_{α_s}` for each component with `r_s = 0`.
    pub rhs: HPoly,
}

fn slice_value(glued: &GluedShape, a: i64, b: i64) -> Result<HPoly> {
    match glued.slice(a, b) {
        ShapeSlice::Shape(c) => schur9_cells(&c),
        ShapeSlice::Empty => Ok(HPoly::one()),
        ShapeSlice::Undefined => Ok(HPoly::zero()),
        ShapeSlice::NotSkew => Err(Error::NotASkewShape(format!("glued slice [{a}, {b}]"))),
    }
}

/// Both sides without checking that `μ` is compatible; `γ` must glue.
pub fn general_hg_sides(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    gamma: &BorderStrip,
) -> Result<GeneralHgSides> {
    let inner = SkewShape::new(lambda.clone(), mu.clone())?;
    let top = SkewShape::new(nu.clone(), mu.clone())?;
    let glued = glue(gamma, nu, lambda)?;
    let theta = decompose_shape(&inner, gamma)?;
    let (p, q) = (theta.p(), theta.q());
    let mut lhs = schur9_shape(&top)?;
    let mut r = Vec::new();
    let mut missing = HPoly::one();
    let mut comps: Vec<&CellSet> = glued.components.iter().collect();
    comps.sort_by_key(|c| c.min_content());
    for comp in comps {
        let (lo, hi) = (
            comp.min_content().unwrap_or(0),
            comp.max_content().unwrap_or(0),
        );
        let rs = p
            .iter()
            .zip(&q)
            .filter(|&(&pi, &qi)| pi <= lo && hi <= qi)
            .count();
        let value = schur9_cells(comp)?;
        if rs == 0 {
            missing = &missing * &value;
        } else {
            lhs = &lhs * &pow_km1(&value, rs);
        }
        r.push(rs);
    }
    let m = q
        .iter()
        .map(|&qi| {
            p.iter()
                .map(|&pj| slice_value(&glued, pj, qi))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = &det(&m)? * &missing;
    Ok(GeneralHgSides {
        theta,
        glued,
        r,
        lhs,
        rhs,
    })
}

/// The generalized Hamel-Goulden identity for a compatible triple and cutting strip.
pub fn verify_general_hg(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    gamma: &BorderStrip,
    window: CompatWindow,
) -> Result<IdentityReport> {
    if !nu.contains(lambda) || !lambda.contains(mu) {
        return Err(Error::Precondition("need μ ⊆ λ ⊆ ν".into()));
    }
    if !is_compatible_strip(gamma, nu, lambda)? {
        return Err(Error::Precondition("γ is not compatible with ν/λ".into()));
    }
    if !is_compatible_partition(mu, nu, lambda, window)? {
        return Err(Error::Precondition("μ is not compatible with ν/λ".into()));
    }
    let rb = ReportBuilder::new(
        TheoremId::GeneralHamelGoulden,
        json!({ "nu": nu, "lambda": lambda, "mu": mu, "gamma": gamma }),
    );
    let s = general_hg_sides(nu, lambda, mu, gamma)?;
    let detail = json!({ "p": s.theta.p(), "q": s.theta.q(), "r": s.r });
    Ok(rb.poly("HG", s.theta.len(), &s.lhs, &s.rhs, detail))
}

/// `s̃_{λ/μ} = det(s̃_{γ[p_j, q_i]})` for a cutting strip covering `Cont(λ)`.
pub fn verify_hamel_goulden(
    lambda: &Partition,
    mu: &Partition,
    gamma: &BorderStrip,
) -> Result<IdentityReport> {
    let s = SkewShape::new(lambda.clone(), mu.clone())?;
    if let Some((lo, hi)) = lambda.content_range() {
        if !gamma.covers(lo) || !gamma.covers(hi) {
            return Err(Error::Precondition("Cont(λ) is not inside Cont(γ)".into()));
        }
    }
    let rb = ReportBuilder::new(
        TheoremId::HamelGoulden,
        json!({ "lambda": lambda, "mu": mu, "gamma": gamma }),
    );
    let lhs = schur9_shape(&s)?;
    let (theta, rhs) = strip_determinant(&s, gamma)?;
    Ok(rb.poly(
        "HG",
        theta.len(),
        &lhs,
        &rhs,
        json!({ "p": theta.p(), "q": theta.q() }),
    ))
}

fn strictly_decreasing_nonneg(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.windows(2).all(|w| w[0] > w[1])
}

/// The generalized Giambelli identity for Frobenius data `(a ⊔ c | b ⊔ d)`.
pub fn verify_giambelli(a: &[i64], b: &[i64], c: &[i64], d: &[i64]) -> Result<IdentityReport> {
    let ac: Vec<i64> = a.iter().chain(c).copied().collect();
    let bd: Vec<i64> = b.iter().chain(d).copied().collect();
    if a.len() != b.len()
        || c.len() != d.len()
        || !strictly_decreasing_nonneg(&ac)
        || !strictly_decreasing_nonneg(&bd)
    {
        return Err(Error::Precondition(
            "need a > c >= 0 and b > d >= 0 as strictly decreasing blocks".into(),
        ));
    }
    let rb = ReportBuilder::new(
        TheoremId::Giambelli,
        json!({ "a": a, "b": b, "c": c, "d": d }),
    );
    let r = a.len();
    let frob = |x: Vec<i64>, y: Vec<i64>| -> Result<HPoly> {
        let lam = FrobeniusPair::new(x, y)?.to_partition();
        schur9(&lam, &Partition::empty(), lam.len())
    };
    let base = frob(c.to_vec(), d.to_vec())?;
    if r == 0 {
        return Ok(rb.poly("Giambelli", 0, &HPoly::one(), &HPoly::one(), json!(null)));
    }
    let lhs = &pow_km1(&base, r) * &frob(ac, bd)?;
    let m = a
        .iter()
        .map(|&ai| {
            b.iter()
                .map(|&bj| frob(disjoint_union(&[ai], c)?, disjoint_union(&[bj], d)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = det(&m)?;
    let outer = FrobeniusPair::new(
        a.iter().chain(c).copied().collect(),
        b.iter().chain(d).copied().collect(),
    )?;
    Ok(rb.poly(
        "Giambelli",
        r,
        &lhs,
        &rhs,
        json!({ "shape": outer.to_partition() }),
    ))
}

/// `(s̃_α s̃_β, s̃_{α→β} + s̃_{α↑β})` for placed shapes.
pub fn attach_rule_sides(
    alpha: &CellSet,
    beta: &CellSet,
) -> Result<(HPoly, HPoly, CellSet, CellSet)> {
    let right = attach_right(alpha, beta)?;
    let above = attach_above(alpha, beta)?;
    let lhs = &schur9_cells(alpha)? * &schur9_cells(beta)?;
    let rhs = &schur9_cells(&right)? + &schur9_cells(&above)?;
    Ok((lhs, rhs, right, above))
}

pub fn verify_attach_rule(alpha: &SkewShape, beta: &SkewShape) -> Result<IdentityReport> {
    let rb = ReportBuilder::new(
        TheoremId::AttachRule,
        json!({ "alpha": alpha, "beta": beta }),
    );
    let (lhs, rhs, right, above) = attach_rule_sides(&alpha.cells(), &beta.cells())?;
    let detail = json!({ "right": right.to_skew_shape()?, "above": above.to_skew_shape()? });
    Ok(rb.poly("attach", 2, &lhs, &rhs, detail))
}

/// Entrywise relation between `s̃_{ν/λ(q_i, p_j - 1)}` and the glued slices for the
/// Lascoux-Pragacz decomposition of `λ/μ`.
pub fn verify_strip_lemma(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<bool> {
    let theta = lascoux_pragacz(&SkewShape::new(lambda.clone(), mu.clone())?)?;
    let Some(gamma) = outer_strip(lambda) else {
        return Ok(true);
    };
    let glued = glue(&gamma, nu, lambda)?;
    let n = nu.len().max(lambda.len());
    let comps: Vec<(i64, i64, HPoly)> = glued
        .components
        .iter()
        .map(|c| {
            Ok((
                c.min_content().unwrap_or(0),
                c.max_content().unwrap_or(0),
                schur9_cells(c)?,
            ))
        })
        .collect::<Result<_>>()?;
    for &qi in &theta.q() {
        for &pj in &theta.p() {
            let lhs = schur9(nu, &lambda.swap_content(n, qi, pj - 1)?, n)?;
            let mut rhs = slice_value(&glued, pj, qi)?;
            for (lo, hi, v) in &comps {
                let e = chi(qi < *lo) + chi(pj > *hi);
                rhs = &rhs * &v.pow(e as u32);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

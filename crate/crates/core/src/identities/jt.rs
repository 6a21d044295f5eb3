use serde_json::json;

use super::{inv, pow_km1, signed, IdentityReport, ReportBuilder, TheoremId};
use crate::error::{Error, Result};
use crate::hring::{det, HPoly};
use crate::schur::{schur9, schur9_cells, schur9_shape};
use crate::shapes::{Partition, SkewShape};
use crate::strips::{
    kreiman, lascoux_pragacz, outer_strip, BorderStrip, Decomposition, StripSlice,
};

fn default_n(n: Option<usize>, parts: &[&Partition]) -> Result<usize> {
    let need = parts.iter().map(|p| p.len()).max().unwrap_or(0);
    match n {
        Some(n) if n < need => Err(Error::InvalidArity { len: need, n }),
        Some(n) => Ok(n),
        None => Ok(need),
    }
}

/// `s̃_{ρ/ν}` or, with `upper`, `s̃_{ν/ρ}`.
fn against(nu: &Partition, n: usize, upper: bool) -> impl Fn(&Partition) -> Result<HPoly> + '_ {
    move |rho| {
        if upper {
            schur9(nu, rho, n)
        } else {
            schur9(rho, nu, n)
        }
    }
}

fn triple_instance(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> serde_json::Value {
    json!({ "lambda": lambda, "mu": mu, "nu": nu, "n": n })
}

/// Both identities relating `s̃_{λ/ν}, s̃_{μ/ν}` (and `s̃_{ν/λ}, s̃_{ν/μ}`) to content swaps.
pub fn verify_main(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: Option<usize>,
) -> Result<Vec<IdentityReport>> {
    let n = default_n(n, &[lambda, mu, nu])?;
    let rb = ReportBuilder::new(TheoremId::Main, triple_instance(lambda, mu, nu, n));
    let (cl, cm) = (lambda.content_code(n)?, mu.content_code(n)?);
    let a: Vec<i64> = cl.difference(&cm).into_iter().rev().collect();
    let b: Vec<i64> = cm.difference(&cl).into_iter().rev().collect();
    let k = a.len();
    let sign = (inv(&b, &a) + k * k.saturating_sub(1) / 2) % 2 == 1;
    let mut out = Vec::new();
    for (form, upper) in [("main1", false), ("main2", true)] {
        let f = against(nu, n, upper);
        if k == 0 {
            let one = HPoly::one();
            out.push(rb.poly(form, 0, &one, &one, json!(null)));
            continue;
        }
        let lhs = &pow_km1(&f(lambda)?, k) * &f(mu)?;
        let mut m = Vec::with_capacity(k);
        for &ai in &a {
            let mut row = Vec::with_capacity(k);
            for &bj in &b {
                row.push(signed(f(&lambda.swap_content(n, ai, bj)?)?, bj > ai));
            }
            m.push(row);
        }
        let rhs = signed(det(&m)?, sign);
        out.push(rb.poly(form, k, &lhs, &rhs, json!({ "a": a, "b": b })));
    }
    Ok(out)
}

fn checked_skew(lambda: &Partition, mu: &Partition) -> Result<SkewShape> {
    SkewShape::new(lambda.clone(), mu.clone())
}

fn decomposition_detail(d: &Decomposition) -> serde_json::Value {
    json!({ "p": d.p(), "q": d.q() })
}

/// Lascoux-Pragacz forms with `ν` below (`LP1`) and above (`LP2`).
pub fn verify_lp(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: Option<usize>,
) -> Result<Vec<IdentityReport>> {
    let n = default_n(n, &[lambda, mu, nu])?;
    let rb = ReportBuilder::new(
        TheoremId::LascouxPragacz,
        triple_instance(lambda, mu, nu, n),
    );
    let theta = lascoux_pragacz(&checked_skew(lambda, mu)?)?;
    [("LP1", false), ("LP2", true)]
        .into_iter()
        .map(|(form, upper)| {
            let (k, lhs, rhs) = lp_sides(lambda, mu, &theta, &against(nu, n, upper), n)?;
            Ok(rb.poly(form, k, &lhs, &rhs, decomposition_detail(&theta)))
        })
        .collect()
}

fn lp_sides(
    lambda: &Partition,
    mu: &Partition,
    theta: &Decomposition,
    f: &dyn Fn(&Partition) -> Result<HPoly>,
    n: usize,
) -> Result<(usize, HPoly, HPoly)> {
    let (p, q, k) = (theta.p(), theta.q(), theta.len());
    if k == 0 {
        return Ok((0, HPoly::one(), HPoly::one()));
    }
    let lhs = &pow_km1(&f(lambda)?, k) * &f(mu)?;
    let m = q
        .iter()
        .map(|&qi| {
            p.iter()
                .map(|&pj| Ok(signed(f(&lambda.swap_content(n, qi, pj - 1)?)?, pj > qi)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((k, lhs, det(&m)?))
}

/// Which product stands on the left of the Kreiman form with `ν` on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KreimanLhs {
    /// `s̃_{ν/μ}^{k-1} s̃_{ν/λ}`, the image of the lower form under `λ <-> μ`.
    Swapped,
    /// `s̃_{ν/λ}^{k-1} s̃_{ν/μ}`.
    Literal,
}

/// Kreiman forms with `ν` below (`K1`) and above (`K2`).
pub fn verify_kreiman(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: Option<usize>,
    upper_lhs: KreimanLhs,
) -> Result<Vec<IdentityReport>> {
    let n = default_n(n, &[lambda, mu, nu])?;
    let rb = ReportBuilder::new(TheoremId::Kreiman, triple_instance(lambda, mu, nu, n));
    let theta = kreiman(&checked_skew(lambda, mu)?)?;
    let mut out = Vec::new();
    for (form, upper) in [("K1", false), ("K2", true)] {
        let f = against(nu, n, upper);
        let (first, second) = if upper && upper_lhs == KreimanLhs::Literal {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let (k, lhs, rhs) = kreiman_sides(first, second, mu, &theta, &f, n)?;
        out.push(rb.poly(form, k, &lhs, &rhs, decomposition_detail(&theta)));
    }
    Ok(out)
}

fn kreiman_sides(
    power: &Partition,
    single: &Partition,
    mu: &Partition,
    theta: &Decomposition,
    f: &dyn Fn(&Partition) -> Result<HPoly>,
    n: usize,
) -> Result<(usize, HPoly, HPoly)> {
    let (p, q, k) = (theta.p(), theta.q(), theta.len());
    if k == 0 {
        return Ok((0, HPoly::one(), HPoly::one()));
    }
    let lhs = &pow_km1(&f(power)?, k) * &f(single)?;
    let m = p
        .iter()
        .map(|&pi| {
            q.iter()
                .map(|&qj| Ok(signed(f(&mu.swap_content(n, pi - 1, qj)?)?, pi > qj)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((k, lhs, det(&m)?))
}

/// The decomposition of `s` by `gamma` and `det(s̃_{γ[p_j, q_i]})`.
pub fn strip_determinant(s: &SkewShape, gamma: &BorderStrip) -> Result<(Decomposition, HPoly)> {
    let theta = crate::strips::decompose_shape(s, gamma)?;
    let (p, q) = (theta.p(), theta.q());
    let m = q
        .iter()
        .map(|&qi| {
            p.iter()
                .map(|&pj| {
                    Ok(match gamma.slice(pj, qi)? {
                        StripSlice::Strip(t) => schur9_cells(&t.cell_set())?,
                        StripSlice::Empty => HPoly::one(),
                        StripSlice::Undefined => HPoly::zero(),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let d = det(&m)?;
    Ok((theta, d))
}

/// `s̃_{λ/μ} = det(s̃_{λ⁰[p_j, q_i]})`.
pub fn verify_outer_strip_formula(lambda: &Partition, mu: &Partition) -> Result<IdentityReport> {
    let s = checked_skew(lambda, mu)?;
    let rb = ReportBuilder::new(TheoremId::OuterStrip, json!({ "lambda": lambda, "mu": mu }));
    let lhs = schur9_shape(&s)?;
    let Some(gamma) = outer_strip(lambda) else {
        return Ok(rb.poly("LP", 0, &lhs, &HPoly::one(), json!(null)));
    };
    let (theta, rhs) = strip_determinant(&s, &gamma)?;
    Ok(rb.poly("LP", theta.len(), &lhs, &rhs, decomposition_detail(&theta)))
}

/// `s̃_λ^{k-1} s̃_μ` against the Lascoux-Pragacz determinant.
pub fn verify_lp_straight(lambda: &Partition, mu: &Partition) -> Result<IdentityReport> {
    let n = lambda.len();
    let rb = ReportBuilder::new(TheoremId::LpStraight, json!({ "lambda": lambda, "mu": mu }));
    let theta = lascoux_pragacz(&checked_skew(lambda, mu)?)?;
    let empty = Partition::empty();
    let (k, lhs, rhs) = lp_sides(lambda, mu, &theta, &against(&empty, n, false), n)?;
    Ok(rb.poly("LP1", k, &lhs, &rhs, decomposition_detail(&theta)))
}

/// `s̃_μ^{k-1} s̃_λ` against the Kreiman determinant.
pub fn verify_kreiman_straight(lambda: &Partition, mu: &Partition) -> Result<IdentityReport> {
    let n = lambda.len();
    let rb = ReportBuilder::new(
        TheoremId::KreimanStraight,
        json!({ "lambda": lambda, "mu": mu }),
    );
    let theta = kreiman(&checked_skew(lambda, mu)?)?;
    let empty = Partition::empty();
    let (k, lhs, rhs) = kreiman_sides(mu, lambda, mu, &theta, &against(&empty, n, false), n)?;
    Ok(rb.poly("K1", k, &lhs, &rhs, decomposition_detail(&theta)))
}

/// The endpoint contents of `theta` recover the content code differences of `λ` and `μ`,
/// and no start, end, or start minus one collides across strips.
pub fn code_lemma_holds(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    theta: &Decomposition,
) -> Result<bool> {
    let (cl, cm) = (lambda.content_code(n)?, mu.content_code(n)?);
    let (p, q) = (theta.p(), theta.q());
    let mut qs = q.clone();
    qs.sort_unstable();
    let mut pm: Vec<i64> = p.iter().map(|x| x - 1).collect();
    pm.sort_unstable();
    if qs != cl.difference(&cm) || pm != cm.difference(&cl) {
        return Ok(false);
    }
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j && (p[i] == p[j] || q[i] == q[j] || p[i] == q[j] || p[i] - 1 == q[j]) {
                return Ok(false);
            }
        }
    }
    Ok(q.windows(2).all(|w| w[0] > w[1]))
}

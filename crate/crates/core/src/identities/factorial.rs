use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use super::{IdentityReport, ReportBuilder, TheoremId};
use crate::error::{Error, Result};
use crate::hring::det_rat;
use crate::schur::factorial_schur;
use crate::shapes::{Partition, SkewShape};
use crate::strips::{lascoux_pragacz, outer_strip, StripSlice};

/// The determinant side of the factorial Schur identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorialForm {
    /// Entries `(-1)^{χ(p_j > q_i)} s_{λ(q_i, p_j - 1)}`.
    Corrected,
    /// Entries `s_{λ \ λ⁰[p_j, q_i]}`, zero when the slice is undefined.
    Original,
}

/// A signed partition entry of the determinant; `None` stands for zero.
pub type Entry = Option<(bool, Partition)>;

fn without_cells(lambda: &Partition, cells: &crate::shapes::CellSet) -> Result<Partition> {
    let rest = lambda.cells().difference(cells);
    let s = rest.to_skew_shape()?;
    if !s.inner.is_empty() {
        return Err(Error::Precondition(
            "removing the slice does not leave a partition".into(),
        ));
    }
    Ok(s.outer)
}

/// Entries of the determinant for `λ/μ`, indexed by `(q_i, p_j)`.
pub fn factorial_entries(
    lambda: &Partition,
    mu: &Partition,
    form: FactorialForm,
) -> Result<Vec<Vec<Entry>>> {
    let theta = lascoux_pragacz(&SkewShape::new(lambda.clone(), mu.clone())?)?;
    let (p, q) = (theta.p(), theta.q());
    let n = lambda.len();
    let outer = outer_strip(lambda);
    q.iter()
        .map(|&qi| {
            p.iter()
                .map(|&pj| match form {
                    FactorialForm::Corrected => {
                        Ok(Some((pj > qi, lambda.swap_content(n, qi, pj - 1)?)))
                    }
                    FactorialForm::Original => {
                        let g = outer
                            .as_ref()
                            .ok_or(Error::Precondition("empty partition".into()))?;
                        Ok(match g.slice(pj, qi)? {
                            StripSlice::Strip(t) => {
                                Some((false, without_cells(lambda, &t.cell_set())?))
                            }
                            StripSlice::Empty => Some((false, lambda.clone())),
                            StripSlice::Undefined => None,
                        })
                    }
                })
                .collect()
        })
        .collect()
}

/// `s_μ(x|a) s_λ(x|a)^{k-1}` against the chosen determinant at each point `x`.
pub fn verify_factorial(
    lambda: &Partition,
    mu: &Partition,
    a: &[BigRational],
    points: &[Vec<BigRational>],
    form: FactorialForm,
) -> Result<IdentityReport> {
    let d = points.first().map_or(0, Vec::len);
    if points.iter().any(|x| x.len() != d) {
        return Err(Error::Input("evaluation points differ in length".into()));
    }
    if lambda.len() > d {
        return Err(Error::Precondition(format!(
            "λ has more than d = {d} parts"
        )));
    }
    let instance = json!({
        "lambda": lambda,
        "mu": mu,
        "d": d,
        "a": a.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "x": points.iter().map(|x| x.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let rb = ReportBuilder::new(TheoremId::Factorial, instance);
    let entries = factorial_entries(lambda, mu, form)?;
    let k = entries.len();
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for x in points {
        let sl = factorial_schur(lambda, x, a)?;
        let sm = factorial_schur(mu, x, a)?;
        let mut l = sm;
        for _ in 1..k {
            l *= &sl;
        }
        let m = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        None => Ok(BigRational::zero()),
                        Some((neg, part)) => {
                            let v = factorial_schur(part, x, a)?;
                            Ok(if *neg { -v } else { v })
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let r = if k == 0 {
            BigRational::one()
        } else {
            det_rat(&m)?
        };
        lhs.push(if k == 0 { BigRational::one() } else { l });
        rhs.push(r);
    }
    let label = match form {
        FactorialForm::Corrected => "corrected",
        FactorialForm::Original => "original",
    };
    let shown: Vec<Vec<serde_json::Value>> = entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    None => json!(0),
                    Some((neg, part)) => {
                        json!({ "sign": if *neg { -1 } else { 1 }, "shape": part })
                    }
                })
                .collect()
        })
        .collect();
    Ok(rb.values(label, k, &lhs, &rhs, json!({ "entries": shown })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Verdict;
    use crate::schur::rat;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counterexample_entries() {
        let (l, m) = (p(&[2, 1]), p(&[1]));
        let orig = factorial_entries(&l, &m, FactorialForm::Original).unwrap();
        assert_eq!(orig[0][0], Some((false, p(&[1, 1]))));
        assert_eq!(orig[0][1], Some((false, p(&[]))));
        assert_eq!(orig[1][0], None);
        assert_eq!(orig[1][1], Some((false, p(&[2]))));
        let corr = factorial_entries(&l, &m, FactorialForm::Corrected).unwrap();
        assert_eq!(corr[1][0], Some((true, p(&[2, 2]))));
    }

    #[test]
    fn corrected_form_holds_with_shifts() {
        let a: Vec<_> = [1, -2, 3, 0, 5, 2].iter().map(|&v| rat(v)).collect();
        let pts = vec![vec![rat(2), rat(7), rat(-3)], vec![rat(1), rat(4), rat(11)]];
        let r =
            verify_factorial(&p(&[3, 2, 1]), &p(&[1]), &a, &pts, FactorialForm::Corrected).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }
}

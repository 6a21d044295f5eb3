//! The ninth variation `s̃_{λ/μ}` and its classical and factorial
//! specializations.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hring::{det, det_rat, HPoly};
use crate::shapes::{partitions_bounded, Cell, CellSet, Partition, SkewShape};

/// `h_{r,s}` with `h_{0,s} = 1` and `h_{r,s} = 0` for `r < 0`.
pub fn jt_entry(r: i64, s: i64) -> HPoly {
    match r {
        r if r < 0 => HPoly::zero(),
        0 => HPoly::one(),
        r => HPoly::var(u32::try_from(r).expect("degree fits in u32"), s),
    }
}

/// `det(h_{λ_i - μ_j - i + j, μ_j - j + 1})` over `n` rows. No containment check: the
/// determinant is computed as is, so it vanishes exactly when `μ ⊄ λ`.
pub fn schur9(outer: &Partition, inner: &Partition, n: usize) -> Result<HPoly> {
    let need = outer.len().max(inner.len());
    if need > n {
        return Err(Error::InvalidArity { len: need, n });
    }
    let m: Vec<Vec<HPoly>> = (1..=n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| {
                    let (l, u) = (outer.part(i), inner.part(j));
                    jt_entry(l - u - i + j, u - j + 1)
                })
                .collect()
        })
        .collect();
    det(&m)
}

pub fn schur9_shape(s: &SkewShape) -> Result<HPoly> {
    schur9(&s.outer, &s.inner, s.outer.len())
}

pub fn schur9_partition(lambda: &Partition) -> Result<HPoly> {
    schur9(lambda, &Partition::empty(), lambda.len())
}

/// `s̃` of a placed cell set. The set is moved diagonally into the positive quadrant first.
pub fn schur9_cells(cells: &CellSet) -> Result<HPoly> {
    schur9_shape(&cells.normalized().to_skew_shape()?)
}

/// Complete homogeneous symmetric polynomials `h_0(x), ..., h_max(x)`.
pub fn complete_homogeneous(x: &[BigRational], max: usize) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); max + 1];
    h[0] = BigRational::one();
    for xi in x {
        for r in 1..=max {
            let v = &h[r - 1] * xi;
            h[r] += v;
        }
    }
    h
}

/// Value of `s̃_{λ/μ}` under `h_{r,s} -> h_r(x)`, through the free-ring determinant.
pub fn classical_value(s: &SkewShape, x: &[BigRational]) -> Result<BigRational> {
    classical_of(&schur9_shape(s)?, x)
}

/// Apply `h_{r,s} -> h_r(x)` to an arbitrary ring element.
pub fn classical_of(p: &HPoly, x: &[BigRational]) -> Result<BigRational> {
    let max = p
        .terms()
        .flat_map(|(m, _)| m.into_iter().map(|v| v.r as usize))
        .max()
        .unwrap_or(0);
    let h = complete_homogeneous(x, max);
    p.eval(|v| Some(h[v.r as usize].clone()))
}

/// Classical skew Schur value from the Jacobi-Trudi determinant evaluated numerically.
pub fn classical_jt(s: &SkewShape, x: &[BigRational]) -> Result<BigRational> {
    let n = s.outer.len() as i64;
    let max = s.outer.part(1) as usize + n as usize;
    let h = complete_homogeneous(x, max);
    let m: Vec<Vec<BigRational>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let r = s.outer.part(i) - s.inner.part(j) - i + j;
                    if r < 0 {
                        BigRational::zero()
                    } else {
                        h[r as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    det_rat(&m)
}

/// Sum of `x^T` over semistandard tableaux `T` of shape `s` with entries in `1..=x.len()`.
pub fn ssyt_value(s: &SkewShape, x: &[BigRational]) -> BigRational {
    let cells: Vec<Cell> = s.cells().iter().copied().collect();
    let mut fill: std::collections::HashMap<Cell, usize> = Default::default();
    fn rec(
        idx: usize,
        cells: &[Cell],
        fill: &mut std::collections::HashMap<Cell, usize>,
        x: &[BigRational],
        acc: &BigRational,
        total: &mut BigRational,
    ) {
        if idx == cells.len() {
            *total += acc;
            return;
        }
        let c = cells[idx];
        let lo_row = fill.get(&c.translate(0, -1)).copied().unwrap_or(0);
        let lo_col = fill.get(&c.translate(-1, 0)).map_or(0, |v| v + 1);
        for v in lo_row.max(lo_col)..x.len() {
            fill.insert(c, v);
            let next = acc * &x[v];
            rec(idx + 1, cells, fill, x, &next, total);
        }
        fill.remove(&c);
    }
    let mut total = BigRational::zero();
    rec(0, &cells, &mut fill, x, &BigRational::one(), &mut total);
    total
}

/// Factorial Schur function `s_λ(x | a)` in `d = x.len()` variables.
/// Returns zero when `λ` has more than `d` parts.
pub fn factorial_schur(
    lambda: &Partition,
    x: &[BigRational],
    a: &[BigRational],
) -> Result<BigRational> {
    let d = x.len();
    if lambda.len() > d {
        return Ok(BigRational::zero());
    }
    let need = (lambda.part(1) as usize + d).saturating_sub(1);
    if a.len() < need {
        return Err(Error::ShortParameters { need, got: a.len() });
    }
    for i in 0..d {
        for j in i + 1..d {
            if x[i] == x[j] {
                return Err(Error::SingularEvaluation(format!(
                    "x_{} = x_{}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let m: Vec<Vec<BigRational>> = x
        .iter()
        .map(|xi| {
            (1..=d as i64)
                .map(|j| {
                    let deg = (lambda.part(j) + d as i64 - j) as usize;
                    a[..deg]
                        .iter()
                        .fold(BigRational::one(), |acc, am| acc * (xi - am))
                })
                .collect()
        })
        .collect();
    let mut vdm = BigRational::one();
    for i in 0..d {
        for j in i + 1..d {
            vdm *= &x[i] - &x[j];
        }
    }
    Ok(det_rat(&m)? / vdm)
}

/// Number of semistandard tableaux of shape `nu` with content `kappa`.
pub fn kostka(nu: &Partition, kappa: &[i64]) -> BigInt {
    fn rec(nu: &[i64], kappa: &[i64], memo: &mut HashMap<(Vec<i64>, usize), BigInt>) -> BigInt {
        let Some((&last, rest)) = kappa.split_last() else {
            return if nu.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let key = (nu.to_vec(), kappa.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        // remove a horizontal strip of size `last`
        let mut total = BigInt::zero();
        let mut inner = vec![0i64; nu.len()];
        fn strips(
            nu: &[i64],
            i: usize,
            left: i64,
            inner: &mut Vec<i64>,
            rest: &[i64],
            memo: &mut HashMap<(Vec<i64>, usize), BigInt>,
            total: &mut BigInt,
        ) {
            if i == nu.len() {
                if left == 0 {
                    let mut rho: Vec<i64> = inner.clone();
                    while rho.last() == Some(&0) {
                        rho.pop();
                    }
                    *total += rec(&rho, rest, memo);
                }
                return;
            }
            let floor = nu.get(i + 1).copied().unwrap_or(0);
            for take in 0..=(nu[i] - floor).min(left) {
                inner[i] = nu[i] - take;
                strips(nu, i + 1, left - take, inner, rest, memo, total);
            }
        }
        strips(nu, 0, last, &mut inner, rest, memo, &mut total);
        memo.insert(key, total.clone());
        total
    }
    if kappa.iter().any(|&k| k < 0) {
        return BigInt::zero();
    }
    let kappa: Vec<i64> = kappa.iter().copied().filter(|&k| k > 0).collect();
    rec(nu.parts(), &kappa, &mut HashMap::new())
}

/// Schur expansion of an element written in the `h_r` (any `s` index is ignored).
pub fn schur_expansion(p: &HPoly) -> BTreeMap<Partition, BigInt> {
    let mut by_size: HashMap<i64, Vec<Partition>> = HashMap::new();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (vars, coeff) in p.terms() {
        let kappa: Vec<i64> = vars.iter().map(|v| v.r as i64).collect();
        let n: i64 = kappa.iter().sum();
        let shapes = by_size.entry(n).or_insert_with(|| {
            partitions_bounded(n, n as usize, n)
                .into_iter()
                .filter(|l| l.size() == n)
                .collect()
        });
        for nu in shapes.iter() {
            let k = kostka(nu, &kappa);
            if !k.is_zero() {
                *out.entry(nu.clone()).or_insert_with(BigInt::zero) += coeff * k;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn h(r: u32, s: i64) -> HPoly {
        HPoly::var(r, s)
    }

    #[test]
    fn single_row_and_column() {
        assert_eq!(schur9_partition(&p(&[3])).unwrap(), h(3, 0));
        let expect = &(&h(1, 0) * &h(1, -1)) - &h(2, -1);
        assert_eq!(schur9_partition(&p(&[1, 1])).unwrap(), expect);
    }

    #[test]
    fn vanishes_without_containment() {
        assert!(schur9(&p(&[2]), &p(&[1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn padding_rows_do_not_matter() {
        let s = SkewShape::new(p(&[3, 3, 1]), p(&[2, 1])).unwrap();
        let a = schur9_shape(&s).unwrap();
        assert_eq!(schur9(&s.outer, &s.inner, 5).unwrap(), a);
        assert_eq!(schur9_cells(&s.cells().diagonal(3)).unwrap(), a);
    }

    #[test]
    fn schur_two_one_in_two_variables() {
        let x = [rat(2), rat(3)];
        let s = SkewShape::straight(p(&[2, 1]));
        // x1^2 x2 + x1 x2^2 = 12 + 18
        assert_eq!(classical_value(&s, &x).unwrap(), rat(30));
        assert_eq!(ssyt_value(&s, &x), rat(30));
        assert_eq!(classical_jt(&s, &x).unwrap(), rat(30));
    }

    #[test]
    fn factorial_schur_reduces_to_classical() {
        let x = [rat(2), rat(5), rat(-1)];
        let a = vec![rat(0); 8];
        for lam in [p(&[2, 1]), p(&[3, 1, 1]), p(&[2, 2])] {
            let s = SkewShape::straight(lam.clone());
            assert_eq!(factorial_schur(&lam, &x, &a).unwrap(), ssyt_value(&s, &x));
        }
        assert!(factorial_schur(&p(&[1, 1, 1, 1]), &x, &a)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), BigInt::from(2));
        assert_eq!(kostka(&p(&[3, 2]), &[2, 2, 1]), BigInt::from(2));
        assert_eq!(kostka(&p(&[2, 2]), &[3, 1]), BigInt::zero());
    }

    #[test]
    fn expansion_of_schur_is_a_basis_vector() {
        for lam in [p(&[3, 2, 2]), p(&[4, 1]), p(&[2, 2, 1, 1])] {
            let e = schur_expansion(&schur9_partition(&lam).unwrap());
            assert_eq!(e.len(), 1);
            assert_eq!(e.get(&lam), Some(&BigInt::one()));
        }
    }
}

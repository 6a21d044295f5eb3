//! The free commutative ring `Z[h_{r,s} : r >= 1, s ∈ Z]`, determinants and
//! exact linear algebra over `Z` and `Q`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest determinant expanded by memoized Laplace expansion.
pub const MAX_DET_SIZE: usize = 16;

const S_BIAS: i64 = 1 << 31;

/// The free generator `h_{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HVar {
    pub r: u32,
    pub s: i64,
}

impl HVar {
    fn key(self) -> u64 {
        ((self.r as u64) << 32) | (self.s + S_BIAS) as u64
    }

    fn from_key(k: u64) -> HVar {
        HVar {
            r: (k >> 32) as u32,
            s: (k & 0xffff_ffff) as i64 - S_BIAS,
        }
    }
}

type Monomial = SmallVec<[u64; 8]>;

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Monomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// An element of the free ring: a sorted list of monomials with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HPoly {
    terms: Vec<(Monomial, BigInt)>,
}

/// Compact summary of an [`HPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub terms: usize,
    pub abs_coeff_sum: String,
    pub hash: String,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly::default()
    }

    pub fn one() -> Self {
        HPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        if c == 0 {
            return HPoly::zero();
        }
        HPoly {
            terms: vec![(Monomial::new(), BigInt::from(c))],
        }
    }

    /// The generator `h_{r,s}`; `r` must be positive.
    pub fn var(r: u32, s: i64) -> Self {
        assert!(r >= 1, "h_{{0,s}} is the constant 1, not a generator");
        let mut m = Monomial::new();
        m.push(HVar { r, s }.key());
        HPoly {
            terms: vec![(m, BigInt::one())],
        }
    }

    fn from_map(map: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        HPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_empty() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(sorted generators, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<HVar>, &BigInt)> + '_ {
        self.terms
            .iter()
            .map(|(m, c)| (m.iter().map(|&k| HVar::from_key(k)).collect(), c))
    }

    pub fn scale(&self, c: i64) -> HPoly {
        if c == 0 {
            return HPoly::zero();
        }
        let c = BigInt::from(c);
        HPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * &c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> HPoly {
        let mut out = HPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    fn add_signed(&self, other: &HPoly, negate: bool) -> HPoly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        HPoly { terms }
    }

    fn mul_impl(&self, other: &HPoly) -> HPoly {
        if self.is_zero() || other.is_zero() {
            return HPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut map: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = merge(ma, mb);
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        HPoly::from_map(map)
    }

    /// Image under `h_{r,s} -> h_{r,0}`. The `h_{r,0}` are algebraically independent, so this
    /// represents the classical specialization `h_{r,s} -> h_r` faithfully.
    pub fn collapse(&self) -> HPoly {
        let mut map: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mono: Monomial = m
                .iter()
                .map(|&k| {
                    HVar {
                        r: HVar::from_key(k).r,
                        s: 0,
                    }
                    .key()
                })
                .collect();
            mono.sort_unstable();
            *map.entry(mono).or_insert_with(BigInt::zero) += c;
        }
        HPoly::from_map(map)
    }

    /// Evaluate under a ring homomorphism given on generators.
    pub fn eval<F>(&self, mut value: F) -> Result<BigRational>
    where
        F: FnMut(HVar) -> Option<BigRational>,
    {
        let mut cache: HashMap<u64, BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from_integer(c.clone());
            for &k in m {
                let v = match cache.get(&k) {
                    Some(v) => v.clone(),
                    None => {
                        let var = HVar::from_key(k);
                        let v = value(var).ok_or(Error::UnboundVariable { r: var.r, s: var.s })?;
                        cache.insert(k, v.clone());
                        v
                    }
                };
                prod *= v;
            }
            total += prod;
        }
        Ok(total)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let abs: BigInt = self.terms.iter().map(|(_, c)| c.abs()).sum();
        let digest = Sha256::digest(self.to_string().as_bytes());
        let hash = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        Fingerprint {
            terms: self.terms.len(),
            abs_coeff_sum: abs.to_string(),
            hash,
        }
    }
}

impl fmt::Display for HPoly {
    /// Canonical text: `+3*h[1,0]*h[2,-1] -1*h[3,2]`, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if c.is_negative() {
                write!(f, "{c}")?;
            } else {
                write!(f, "+{c}")?;
            }
            for &k in m {
                let v = HVar::from_key(k);
                write!(f, "*h[{},{}]", v.r, v.s)?;
            }
        }
        Ok(())
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        self.add_signed(rhs, false)
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self.add_signed(rhs, true)
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    Ok(n)
}

/// Determinant over the free ring by Laplace expansion memoized on column subsets.
pub fn det(m: &[Vec<HPoly>]) -> Result<HPoly> {
    let n = check_square(m)?;
    if n > MAX_DET_SIZE {
        return Err(Error::SizeGuard(n));
    }
    if n == 0 {
        return Ok(HPoly::one());
    }
    // minors[mask] = determinant of the bottom |mask| rows restricted to the columns in mask
    let full = (1usize << n) - 1;
    let mut minors: HashMap<usize, HPoly> = HashMap::new();
    minors.insert(0, HPoly::one());
    let mut layer = vec![0usize];
    for size in 1..=n {
        let row = n - size;
        let mut next: HashMap<usize, HPoly> = HashMap::new();
        for &prev in &layer {
            let below = match minors.get(&prev) {
                Some(p) => p.clone(),
                None => continue,
            };
            for (col, entry) in m[row].iter().enumerate() {
                if prev & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                let mask = prev | (1 << col);
                let pos = (mask & ((1 << col) - 1)).count_ones();
                let term = entry * &below;
                let term = if pos % 2 == 1 { -&term } else { term };
                let e = next.entry(mask).or_insert_with(HPoly::zero);
                *e = &*e + &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        if size == n {
            return Ok(next.remove(&full).unwrap_or_else(HPoly::zero));
        }
        layer = next.keys().copied().collect();
        layer.sort_unstable();
        minors = next;
    }
    unreachable!()
}

/// Integer determinant by fraction-free elimination.
pub fn det_int(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    })
}

/// Rational determinant by Gaussian elimination.
pub fn det_rat(m: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut d = BigRational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if piv != k {
            a.swap(piv, k);
            d = -d;
        }
        let p = a[k][k].clone();
        d *= &p;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= y * &f;
            }
        }
    }
    Ok(d)
}

/// An integer matrix whose rows are labelled by consecutive integers starting at `first_row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledMatrix {
    pub first_row: i64,
    pub rows: Vec<Vec<BigInt>>,
}

impl LabelledMatrix {
    pub fn cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// The maximal minor on rows `labels`, taken in the given order.
    pub fn minor(&self, labels: &[i64]) -> Result<BigInt> {
        if labels.len() != self.cols() {
            return Err(Error::NotSquare {
                rows: labels.len(),
                cols: self.cols(),
            });
        }
        let sub = labels
            .iter()
            .map(|&l| {
                let idx = l - self.first_row;
                if idx < 0 || idx as usize >= self.rows.len() {
                    Err(Error::OutOfRange(l))
                } else {
                    Ok(self.rows[idx as usize].clone())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        det_int(&sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(r: u32, s: i64) -> HPoly {
        HPoly::var(r, s)
    }

    #[test]
    fn ring_laws_on_small_polys() {
        let a = &h(1, 0) + &h(2, 1);
        let b = &h(1, 0) - &h(3, -2);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn two_by_two_determinant() {
        let m = vec![vec![h(1, 1), h(2, 1)], vec![HPoly::one(), h(1, 2)]];
        let d = det(&m).unwrap();
        assert_eq!(d, &(&h(1, 1) * &h(1, 2)) - &h(2, 1));
    }

    #[test]
    fn determinant_matches_leibniz_on_3x3() {
        let v = |i: u32, j: i64| &h(i, j) + &HPoly::constant(j);
        let m: Vec<Vec<HPoly>> = (1..=3)
            .map(|i| (1..=3).map(|j| v(i, j)).collect())
            .collect();
        let mut expect = HPoly::zero();
        for (p, sgn) in [
            ([0, 1, 2], 1),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([2, 1, 0], -1),
        ] {
            let t = &(&m[0][p[0]] * &m[1][p[1]]) * &m[2][p[2]];
            expect = &expect + &t.scale(sgn);
        }
        assert_eq!(det(&m).unwrap(), expect);
    }

    #[test]
    fn integer_and_rational_determinants() {
        let m: Vec<Vec<BigInt>> = [[2, 0, 1], [1, 3, -1], [0, 5, 4]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(det_int(&m).unwrap(), BigInt::from(39));
        let q: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        assert_eq!(
            det_rat(&q).unwrap(),
            BigRational::from_integer(BigInt::from(39))
        );
    }

    #[test]
    fn text_form_is_canonical() {
        let a = &h(2, -1) + &h(1, 0).scale(-3);
        assert_eq!(a.to_string(), "-3*h[1,0] +1*h[2,-1]");
        assert_eq!(
            a.fingerprint(),
            (&h(1, 0).scale(-3) + &h(2, -1)).fingerprint()
        );
    }
}

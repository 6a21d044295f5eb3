//! Seeded instance generators. All randomness flows from [`rng`], a ChaCha8 stream keyed
//! by one 64-bit seed, so a seed fixes every instance on every platform.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hring::LabelledMatrix;
use crate::identities::random_labelled_matrix;
use crate::shapes::{Cell, Partition, SkewShape};
use crate::strips::{
    dyck, glue, is_compatible_partition, is_compatible_strip, outer_strip, skew_slice, BorderStrip,
    CompatWindow, ShapeSlice, Step,
};

pub type SchurRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SchurRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform-ish partition with `|λ| <= max_size`, `ℓ(λ) <= max_len`, `λ_1 <= max_part`.
pub fn partition<R: Rng>(rng: &mut R, max_size: i64, max_len: usize, max_part: i64) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut parts: Vec<i64> = (0..len)
        .map(|_| rng.gen_range(1..=max_part.max(1)))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    while parts.iter().sum::<i64>() > max_size {
        let i = rng.gen_range(0..parts.len());
        parts[i] -= 1;
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
    Partition::new(parts).expect("sorted nonnegative parts")
}

pub fn subpartition<R: Rng>(rng: &mut R, lambda: &Partition) -> Partition {
    let mut prev = i64::MAX;
    let parts = lambda
        .parts()
        .iter()
        .map(|&l| {
            let v = rng.gen_range(0..=l.min(prev));
            prev = v;
            v
        })
        .collect();
    Partition::new(parts).expect("weakly decreasing")
}

/// `ν ⊇ λ` grown by `cells` random addable cells; with `inside` set, only cells whose
/// content lies in `Cont(λ)` are added.
pub fn grow<R: Rng>(rng: &mut R, lambda: &Partition, cells: usize, inside: bool) -> Partition {
    let range = lambda.content_range();
    let mut parts = lambda.parts().to_vec();
    for _ in 0..cells {
        let mut addable: Vec<usize> = (0..=parts.len())
            .filter(|&i| i == 0 || parts[i - 1] > parts.get(i).copied().unwrap_or(0))
            .collect();
        if inside {
            let Some((lo, hi)) = range else { break };
            addable.retain(|&i| {
                let c = parts.get(i).copied().unwrap_or(0) + 1 - (i as i64 + 1);
                (lo..=hi).contains(&c)
            });
        }
        let Some(&i) = addable.choose(rng) else { break };
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
    }
    Partition::new(parts).expect("adding corners keeps a partition")
}

fn strip_start(lo: i64, len: usize) -> Cell {
    let row = (len as i64 + 1).max(1 - lo);
    Cell { row, col: row + lo }
}

/// Random border strip with contents `lo..=hi`, placed in the positive quadrant.
pub fn border_strip<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> BorderStrip {
    let n = (hi - lo).max(0) as usize;
    let steps: Vec<Step> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Step::Horizontal
            } else {
                Step::Vertical
            }
        })
        .collect();
    BorderStrip::from_steps(strip_start(lo, n), &steps)
}

/// Connected nonempty skew shape inside a `rows × cols` box with at most `max_size` cells.
pub fn connected_skew<R: Rng>(rng: &mut R, rows: usize, cols: i64, max_size: i64) -> SkewShape {
    loop {
        let outer = partition(rng, max_size + rows as i64 * cols, rows, cols);
        let inner = subpartition(rng, &outer);
        let s = SkewShape::new(outer, inner).expect("subpartition");
        let cells = s.cells();
        if !cells.is_empty() && cells.len() as i64 <= max_size && cells.is_connected() {
            return s;
        }
    }
}

fn sample_sorted<R: Rng>(rng: &mut R, pool: &[i64], k: usize) -> Vec<i64> {
    let mut v: Vec<i64> = pool.choose_multiple(rng, k).copied().collect();
    v.sort_unstable();
    v
}

/// Ascending `a`, `b` of length `k` in `Cont(γ)` satisfying the ballot condition.
pub fn ballot_endpoints<R: Rng>(
    rng: &mut R,
    gamma: &BorderStrip,
    k: usize,
) -> Option<(Vec<i64>, Vec<i64>)> {
    let pool: Vec<i64> = (gamma.p()..=gamma.q()).collect();
    if pool.len() < k {
        return None;
    }
    for _ in 0..200 {
        let a = sample_sorted(rng, &pool, k);
        let b = sample_sorted(rng, &pool, k);
        if dyck(&a, &b) {
            return Some((a, b));
        }
    }
    None
}

/// Instance of the generalized Hamel-Goulden identity with `μ` and `γ` compatible.
#[derive(Clone, Debug)]
pub struct HgInstance {
    pub nu: Partition,
    pub lambda: Partition,
    pub mu: Partition,
    pub gamma: BorderStrip,
}

/// `γ` follows `λ⁰` on every window around a component of `ν/λ` and is random elsewhere.
pub fn compatible_strip<R: Rng>(
    rng: &mut R,
    nu: &Partition,
    lambda: &Partition,
) -> Option<BorderStrip> {
    let outer = outer_strip(lambda)?;
    let skew = SkewShape::new(nu.clone(), lambda.clone()).ok()?;
    let windows: Vec<(i64, i64)> = skew
        .components()
        .iter()
        .map(|c| {
            (
                c.min_content().unwrap_or(0) - 1,
                c.max_content().unwrap_or(0) + 1,
            )
        })
        .collect();
    let base = outer.steps();
    let steps: Vec<Step> = base
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let c = outer.p() + i as i64;
            if windows.iter().any(|&(lo, hi)| lo <= c && c < hi) {
                s
            } else if rng.gen_bool(0.5) {
                Step::Horizontal
            } else {
                Step::Vertical
            }
        })
        .collect();
    Some(BorderStrip::from_steps(
        strip_start(outer.p(), steps.len()),
        &steps,
    ))
}

pub fn hg_instance<R: Rng>(rng: &mut R, max_size: i64) -> HgInstance {
    loop {
        let lambda = partition(rng, max_size, 5, 6);
        if lambda.is_empty() {
            continue;
        }
        let extra = rng.gen_range(0..=3);
        let nu = grow(rng, &lambda, extra, true);
        let Some(gamma) = compatible_strip(rng, &nu, &lambda) else {
            continue;
        };
        if !is_compatible_strip(&gamma, &nu, &lambda).unwrap_or(false)
            || glue(&gamma, &nu, &lambda).is_err()
        {
            continue;
        }
        for _ in 0..50 {
            let mu = subpartition(rng, &lambda);
            if is_compatible_partition(&mu, &nu, &lambda, CompatWindow::Widened).unwrap_or(false) {
                return HgInstance {
                    nu,
                    lambda,
                    mu,
                    gamma,
                };
            }
        }
    }
}

/// Instance of the converse theorem: `α` connected, every slice skew, `a`, `b` in random order.
#[derive(Clone, Debug)]
pub struct ConverseInstance {
    pub alpha: SkewShape,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

pub fn converse_instance<R: Rng>(rng: &mut R, max_size: i64, max_k: usize) -> ConverseInstance {
    let k = rng.gen_range(1..=max_k.max(1));
    loop {
        let alpha = connected_skew(rng, 4, 5, max_size);
        let cells = alpha.cells();
        let pool: Vec<i64> = cells.contents().into_iter().collect();
        if pool.len() < k {
            continue;
        }
        for _ in 0..20 {
            let a = sample_sorted(rng, &pool, k);
            let b = sample_sorted(rng, &pool, k);
            if !dyck(&a, &b) || a.iter().any(|x| b.contains(&(x - 1))) {
                continue;
            }
            let skew = a.iter().all(|&x| {
                b.iter()
                    .all(|&y| !matches!(skew_slice(&cells, x, y), ShapeSlice::NotSkew))
            });
            if !skew {
                continue;
            }
            let (mut a, mut b) = (a, b);
            a.shuffle(rng);
            b.shuffle(rng);
            return ConverseInstance { alpha, a, b };
        }
    }
}

/// `count` points in `d` variables with distinct coordinates `n/m`, `|n| <= 40`, `1 <= m <= 7`.
pub fn rational_points<R: Rng>(rng: &mut R, count: usize, d: usize) -> Vec<Vec<BigRational>> {
    (0..count)
        .map(|_| {
            let mut x: Vec<BigRational> = Vec::with_capacity(d);
            while x.len() < d {
                let v = BigRational::new(
                    BigInt::from(rng.gen_range(-40..=40)),
                    BigInt::from(rng.gen_range(1..=7)),
                );
                if !x.contains(&v) {
                    x.push(v);
                }
            }
            x
        })
        .collect()
}

/// Integer parameters in `-5..=5`.
pub fn integer_parameters<R: Rng>(rng: &mut R, count: usize) -> Vec<BigRational> {
    (0..count)
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-5..=5))))
        .collect()
}

#[derive(Clone, Debug)]
pub struct BazinInstance {
    pub matrix: LabelledMatrix,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

/// Rows labelled `-6..=6`, `n <= 6` columns, `k <= 3`.
pub fn bazin_instance<R: Rng>(rng: &mut R) -> BazinInstance {
    let labels: Vec<i64> = (-6..=6).collect();
    let n = rng.gen_range(1..=6);
    let k = rng.gen_range(1..=n.min(3));
    let matrix = random_labelled_matrix(rng, -6, labels.len(), n);
    let mut pool = labels.clone();
    pool.shuffle(rng);
    let c: Vec<i64> = pool[..n - k].to_vec();
    let a: Vec<i64> = pool[n - k..n].to_vec();
    let rest: Vec<i64> = labels.iter().copied().filter(|x| !c.contains(x)).collect();
    let b: Vec<i64> = rest.choose_multiple(rng, k).copied().collect();
    BazinInstance { matrix, a, b, c }
}

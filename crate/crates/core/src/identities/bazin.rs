use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hring::{det_int, LabelledMatrix};

/// A matrix with rows labelled `first_row..first_row + rows` and small random entries.
pub fn random_labelled_matrix<R: Rng>(
    rng: &mut R,
    first_row: i64,
    rows: usize,
    cols: usize,
) -> LabelledMatrix {
    LabelledMatrix {
        first_row,
        rows: (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| BigInt::from(rng.gen_range(-5..=5)))
                    .collect()
            })
            .collect(),
    }
}

/// Both sides of `[a ⊔ c]^{k-1} [b ⊔ c] = (-1)^{k(k-1)/2} det([b_j ⊔ (a \ a_i) ⊔ c])`,
/// where `[x]` is the maximal minor on rows `x` in the given order.
pub fn bazin_sides(
    m: &LabelledMatrix,
    a: &[i64],
    b: &[i64],
    c: &[i64],
) -> Result<(BigInt, BigInt)> {
    let k = a.len();
    if b.len() != k || k + c.len() != m.cols() {
        return Err(Error::Precondition(
            "sequence lengths do not match the matrix".into(),
        ));
    }
    let cat = |parts: &[&[i64]]| parts.concat();
    let ac = m.minor(&cat(&[a, c]))?;
    let bc = m.minor(&cat(&[b, c]))?;
    let lhs = num_traits::pow(ac, k.saturating_sub(1)) * bc;
    let mut entries = Vec::with_capacity(k);
    for i in 0..k {
        let rest: Vec<i64> = a
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != i)
            .map(|(_, &v)| v)
            .collect();
        let mut row = Vec::with_capacity(k);
        for &bj in b {
            row.push(m.minor(&cat(&[&[bj], &rest, c]))?);
        }
        entries.push(row);
    }
    let mut rhs = det_int(&entries)?;
    if (k * k.saturating_sub(1) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bazin_on_fixed_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_labelled_matrix(&mut rng, -4, 10, 4);
        let (l, r) = bazin_sides(&m, &[3, -1], &[0, 5], &[2, -4]).unwrap();
        assert_eq!(l, r);
    }
}

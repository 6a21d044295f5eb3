use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use schurdet::hring::{det, det_int, HPoly, HVar};
use schurdet::random;
use schurdet::schur::{schur9, schur9_cells, schur9_shape};
use schurdet::shapes::{CellSet, Partition, SkewShape};
use schurdet::strips::{
    decompose, glue, inner_strip, kreiman, lascoux_pragacz, outer_strip, strip_with_endpoints,
    BorderStrip, StripPlan, StripSlice,
};

fn partition(max_len: usize, max_part: i64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(max_len: usize, max_part: i64) -> impl Strategy<Value = SkewShape> {
    (partition(max_len, max_part), any::<u64>()).prop_map(|(outer, seed)| {
        let inner = random::subpartition(&mut random::rng(seed), &outer);
        SkewShape::new(outer, inner).unwrap()
    })
}

fn hpoly() -> impl Strategy<Value = HPoly> {
    prop::collection::vec(
        (
            -3i64..=3,
            prop::collection::vec((1u32..=3, -2i64..=2), 0..=3),
        ),
        0..=4,
    )
    .prop_map(|terms| {
        let mut acc = HPoly::zero();
        for (c, vars) in terms {
            let mut m = HPoly::constant(c);
            for (r, s) in vars {
                m = &m * &HPoly::var(r, s);
            }
            acc = &acc + &m;
        }
        acc
    })
}

fn integer_value(v: HVar) -> Option<BigRational> {
    Some(BigRational::from_integer(BigInt::from(
        (v.r as i64) * 3 - v.s * 2 + 1,
    )))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in hpoly(), b in hpoly(), c in hpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, HPoly::zero());
        prop_assert_eq!(&a * &HPoly::one(), a.clone());
        prop_assert_eq!(&a + &(-&a), HPoly::zero());
    }

    #[test]
    fn det_commutes_with_evaluation(entries in prop::collection::vec(hpoly(), 9), k in 1usize..=3) {
        let m: Vec<Vec<HPoly>> = (0..k).map(|i| entries[i * 3..i * 3 + k].to_vec()).collect();
        let symbolic = det(&m).unwrap().eval(integer_value).unwrap();
        let numeric: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| row.iter().map(|p| p.eval(integer_value).unwrap().to_integer()).collect())
            .collect();
        prop_assert_eq!(symbolic, BigRational::from_integer(det_int(&numeric).unwrap()));
    }

    #[test]
    fn decompositions_partition_the_shape(s in skew(4, 6)) {
        for d in [lascoux_pragacz(&s).unwrap(), kreiman(&s).unwrap()] {
            let total: usize = d.strips.iter().map(BorderStrip::len).sum();
            prop_assert_eq!(total, s.cells().len());
            prop_assert_eq!(d.cells(), s.cells());
            let mut ps = d.p();
            ps.sort_unstable();
            ps.dedup();
            prop_assert_eq!(ps.len(), d.len());
        }
        if let Some(g) = outer_strip(&s.outer) {
            for t in &lascoux_pragacz(&s).unwrap().strips {
                prop_assert!(g.clip(t.p(), t.q()).diagonal_offset(&t.cell_set()).is_some());
            }
        }
        if let Some(g) = inner_strip(&s).unwrap() {
            for t in &kreiman(&s).unwrap().strips {
                prop_assert!(g.clip(t.p(), t.q()).diagonal_offset(&t.cell_set()).is_some());
            }
        }
    }

    #[test]
    fn slice_trichotomy(seed in any::<u64>(), lo in -5i64..=0, len in 0i64..=8) {
        let g = random::border_strip(&mut random::rng(seed), lo, lo + len);
        for a in lo..=lo + len {
            for b in lo..=lo + len {
                match g.slice(a, b).unwrap() {
                    StripSlice::Strip(t) => {
                        prop_assert!(a <= b);
                        prop_assert_eq!((t.p(), t.q()), (a, b));
                    }
                    StripSlice::Empty => prop_assert_eq!(a, b + 1),
                    StripSlice::Undefined => prop_assert!(a > b + 1),
                }
            }
        }
    }

    #[test]
    fn glue_keeps_contents(seed in any::<u64>()) {
        let h = random::hg_instance(&mut random::rng(seed), 12);
        let glued = glue(&h.gamma, &h.nu, &h.lambda).unwrap();
        let skew = SkewShape::new(h.nu.clone(), h.lambda.clone()).unwrap();
        prop_assert_eq!(glued.cells.len(), h.gamma.len() + skew.cells().len());
        let mut expected = h.gamma.cell_set().contents().into_iter().collect::<Vec<_>>();
        let mut got = Vec::new();
        for c in glued.cells.iter() {
            got.push(c.content());
        }
        for c in skew.cells().iter() {
            expected.push(c.content());
        }
        expected.sort_unstable();
        got.sort_unstable();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn strip_construction_round_trip(seed in any::<u64>(), lo in -5i64..=0, len in 1i64..=9, k in 1usize..=3) {
        let mut rng = random::rng(seed);
        let g = random::border_strip(&mut rng, lo, lo + len);
        if let Some((a, b)) = random::ballot_endpoints(&mut rng, &g, k) {
            for tau in strip_with_endpoints(&g, &a, &b, StripPlan { limit: 4 }).unwrap() {
                let d = decompose(&tau, &g).unwrap();
                let (mut p, mut q) = (d.p(), d.q());
                p.sort_unstable();
                q.sort_unstable();
                prop_assert_eq!(&p, &a);
                prop_assert_eq!(&q, &b);
            }
        }
    }

    #[test]
    fn ninth_variation_ignores_padding_and_diagonal_shifts(s in skew(3, 4), extra in 0usize..=2, t in 0i64..=2) {
        let base = schur9_shape(&s).unwrap();
        prop_assert_eq!(schur9(&s.outer, &s.inner, s.outer.len() + extra).unwrap(), base.clone());
        if !s.is_empty() {
            prop_assert_eq!(schur9_cells(&s.cells().diagonal(t)).unwrap(), base);
        }
    }

    #[test]
    fn disconnected_shapes_factor(s in skew(4, 5)) {
        let comps: Vec<CellSet> = s.components();
        let mut prod = HPoly::one();
        for c in &comps {
            prod = &prod * &schur9_cells(c).unwrap();
        }
        prop_assert_eq!(schur9_shape(&s).unwrap(), prod);
    }
}

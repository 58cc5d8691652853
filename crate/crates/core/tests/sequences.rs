//! Sequence-space properties against brute force and a dense Bareiss rank.

use affwhit::scalar::{self, int, Scalar};
use affwhit::seqspace::{
    self, evaluate, is_generic, is_strongly_generic_set, minimal_annihilator, reconstruct, size,
    window_rank_check, BiSequence, FinVector, Genericity, NotStronglyGenericReason, StrongGenericity,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Fraction-free elimination on an integer matrix obtained by clearing
/// denominators row by row.
fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn window_rows(q: &[BiSequence], shifts: i64, window: i64, weighted: bool) -> Vec<Vec<Scalar>> {
    let row = |s: &BiSequence| (-window..=window).map(|i| s.entry(i)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for x in q {
        for s in -shifts..=shifts {
            out.push(row(&x.translate(s)));
        }
        if weighted {
            out.push(row(&x.weighted()));
        }
    }
    out
}

fn small_vector() -> impl Strategy<Value = FinVector> {
    prop::collection::btree_map(-4i64..=4, -5i64..=5, 1..5).prop_map(|m| {
        FinVector::from_pairs(m.into_iter().map(|(i, c)| (i, int(c))))
    })
}

fn nonzero_vector() -> impl Strategy<Value = FinVector> {
    small_vector().prop_filter("nonzero", |v| !v.is_zero())
}

fn geometric() -> impl Strategy<Value = BiSequence> {
    (2i64..=7, 1i64..=3).prop_filter_map("j > 1", |(p, q)| {
        let j = scalar::ratio(p, q);
        (j > Scalar::one()).then(|| BiSequence::geometric(j).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn nonzero_finite_sequences_are_generic(a in nonzero_vector(), v in nonzero_vector()) {
        let seq = BiSequence::finite(a.clone());
        prop_assert_eq!(is_generic(&seq), Genericity::Generic);
        // some translate of v pairs nontrivially with a
        let hit = (-12i64..=12).any(|n| !evaluate(&seq, &v.translate(n)).is_zero());
        prop_assert!(hit);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn window_rank_matches_bareiss(
        q in prop::collection::vec(prop_oneof![
            geometric(),
            nonzero_vector().prop_map(BiSequence::finite),
            (-3i64..=3).prop_map(|c| BiSequence::constant(int(c))),
        ], 1..3),
        shifts in 0i64..=3,
        extra in 0i64..=4,
        weighted in any::<bool>(),
    ) {
        let window = shifts + extra;
        let r = window_rank_check(&q, shifts, window, weighted).unwrap();
        let rows = window_rows(&q, shifts, window, weighted);
        prop_assert_eq!(r.count, rows.len());
        prop_assert_eq!(r.rank, bareiss_rank(&rows));
    }

    #[test]
    fn translation_is_adjoint_to_vector_shift(
        v in small_vector(),
        s in prop_oneof![geometric(), nonzero_vector().prop_map(BiSequence::finite)],
        n in -5i64..=5,
    ) {
        prop_assert_eq!(evaluate(&s.translate(n), &v), evaluate(&s, &v.translate(n)));
    }

    #[test]
    fn translates_compose(s in geometric(), a in -4i64..=4, b in -4i64..=4, i in -8i64..=8) {
        prop_assert_eq!(s.translate(a).translate(b).entry(i), s.entry(i + a + b));
    }

    #[test]
    fn recurrences_round_trip(
        tail in prop::collection::vec(-3i64..=3, 1..=3),
        lead in prop_oneof![-3i64..=-1, 1i64..=3],
        last in prop_oneof![-3i64..=-1, 1i64..=3],
        init in prop::collection::vec(-4i64..=4, 4),
    ) {
        let mut coeffs = vec![lead];
        coeffs.extend(&tail[..tail.len() - 1]);
        coeffs.push(last);
        let v = FinVector::from_pairs(coeffs.iter().enumerate().map(|(i, c)| (i as i64, int(*c))));
        let w = v.width();
        let initial: Vec<Scalar> = init[..w].iter().map(|c| int(*c)).collect();
        let s = reconstruct(v.clone(), initial.clone()).unwrap();
        for (i, c) in initial.iter().enumerate() {
            prop_assert_eq!(&s.entry(i as i64), c);
        }
        for n in -8i64..=8 {
            prop_assert!(evaluate(&s, &v.translate(n)).is_zero());
        }
        if s.is_zero() {
            prop_assert_eq!(size(&s).unwrap(), 0);
        } else {
            let m = minimal_annihilator(&s).unwrap();
            prop_assert!(m.width() <= w);
            prop_assert!(m.width() >= 1);
            for n in -8i64..=8 {
                prop_assert!(evaluate(&s, &m.translate(n)).is_zero());
            }
        }
    }

    #[test]
    fn translate_relations_hold(
        x in prop_oneof![geometric(), nonzero_vector().prop_map(BiSequence::finite)],
        y in prop_oneof![geometric(), nonzero_vector().prop_map(BiSequence::finite)],
        shift in -3i64..=3,
    ) {
        let y = y.translate(shift);
        let (left, right) = seqspace::translate_relation(&x, &y).unwrap();
        prop_assert!(!left.is_zero() || !right.is_zero());
        for i in -15i64..=15 {
            prop_assert_eq!(
                seqspace::apply_translates(&x, &left, i),
                seqspace::apply_translates(&y, &right, i)
            );
        }
    }
}

#[test]
fn geometric_pair_is_dependent_in_every_window() {
    let q = [BiSequence::geometric(int(2)).unwrap(), BiSequence::geometric(int(3)).unwrap()];
    let r = window_rank_check(&q, 2, 10, false).unwrap();
    assert!(!r.full_rank);
    assert_eq!(r.rank, bareiss_rank(&window_rows(&q, 2, 10, false)));
    assert!(matches!(
        is_strongly_generic_set(&q),
        StrongGenericity::NotStronglyGeneric(NotStronglyGenericReason::TranslateRelation { .. })
    ));
}

#[test]
fn single_geometric_is_strongly_generic_in_windows() {
    for j in [int(2), int(3), scalar::ratio(5, 2)] {
        let q = [BiSequence::geometric(j).unwrap()];
        assert!(window_rank_check(&q, 4, 12, true).unwrap().full_rank);
        assert_eq!(is_strongly_generic_set(&q), StrongGenericity::StronglyGeneric);
    }
}

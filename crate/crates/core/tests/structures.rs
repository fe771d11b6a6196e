mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use rankpath::{BoxedPartition, Partition, RankConstraint, StepWord};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..9)
        .prop_map(Partition::from_unsorted)
        .prop_filter("area at most 30", |p| p.area() <= 30)
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(lam in arb_partition()) {
        let c = lam.conjugate();
        prop_assert_eq!(&c.conjugate(), &lam);
        prop_assert_eq!(c.area(), lam.area());
        prop_assert_eq!(c.durfee(), lam.durfee());
        prop_assert_eq!(c.parts().to_vec(), conj(lam.parts()));
    }

    #[test]
    fn statistics_match_definitions(lam in arb_partition()) {
        prop_assert_eq!(lam.durfee() as usize, durfee(lam.parts()));
        prop_assert_eq!(lam.durfee_rect() as usize, durfee_rect(lam.parts()));
        prop_assert_eq!(lam.ranks(), ranks(lam.parts()));
        prop_assert_eq!(lam.area(), area(lam.parts()));
    }

    #[test]
    fn partition_json_round_trip(lam in arb_partition()) {
        let s = serde_json::to_string(&lam).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), lam);
    }

    #[test]
    fn word_parse_round_trip(steps in prop::collection::vec(1u8..=2, 0..20)) {
        let word = from_digits(&steps);
        prop_assert_eq!(digits(&word), steps);
        let letters: StepWord = word.to_letters().parse().unwrap();
        prop_assert_eq!(&letters, &word);
        let json = serde_json::to_string(&word).unwrap();
        prop_assert_eq!(serde_json::from_str::<StepWord>(&json).unwrap(), word);
    }

    #[test]
    fn reflect_swaps_valleys_and_peaks(steps in prop::collection::vec(1u8..=2, 0..20)) {
        let word = from_digits(&steps);
        let r = word.reflect();
        prop_assert_eq!(&r.reflect(), &word);
        let vx: Vec<usize> = word.valleys().iter().map(|v| v.x).collect();
        let px: Vec<usize> = r.peaks().iter().map(|v| v.x).collect();
        prop_assert_eq!(vx, px);
    }
}

#[test]
fn json_shapes() {
    assert_eq!(serde_json::to_string(&p(&[4, 3, 3])).unwrap(), "[4,3,3]");
    let bp = p(&[4, 3, 3]).boxed(4, 6).unwrap();
    let v: serde_json::Value = serde_json::to_value(&bp).unwrap();
    assert_eq!(v, serde_json::json!({"parts": [4, 3, 3], "m": 4, "n": 6}));
    assert_eq!(serde_json::to_string(&w("1212")).unwrap(), "\"UDUD\"");
    assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    assert!(serde_json::from_str::<BoxedPartition>(r#"{"parts":[5],"m":1,"n":4}"#).is_err());
}

#[test]
fn boundary_words_in_all_boxes() {
    for m in 0..=7 {
        for n in 0..=7 {
            for parts in partitions_in_box(m, n) {
                let bp = p(&parts).boxed(m, n).unwrap();
                let word = bp.to_word();
                assert_eq!(digits(&word), boundary_word(&parts, m, n), "{parts:?} in {m}x{n}");
                assert_eq!(BoxedPartition::from_word(&word), bp);
                assert_eq!(word.inv(), area(&parts));
            }
        }
    }
}

#[test]
fn durfee_read_off_the_word() {
    for parts in partitions_in_box(7, 7) {
        let d = digits(&p(&parts).boxed(7, 7).unwrap().to_word());
        let twos: Vec<usize> = (0..d.len()).filter(|&i| d[i] == 2).collect();
        let ones_right: Vec<usize> = (0..d.len()).rev().filter(|&i| d[i] == 1).collect();
        let read = (1..=7).filter(|&i| twos[i - 1] < ones_right[i - 1]).max().unwrap_or(0);
        assert_eq!(read, durfee(&parts), "{parts:?}");
    }
}

#[test]
fn hook_sums() {
    for parts in partitions_in_box(7, 7) {
        let h = p(&parts).hook_decomposition();
        let total: u64 = h.a.iter().zip(&h.b).map(|(a, b)| (a + b) as u64).sum();
        assert_eq!(total, area(&parts));
        assert_eq!(h.a.len(), durfee(&parts));
        assert!(h.a.windows(2).all(|x| x[0] < x[1]));
        assert!(h.b.windows(2).all(|x| x[0] < x[1]));
        assert!(h.a.first().is_none_or(|&a| a >= 1));
    }
}

#[test]
fn rank_constraints() {
    assert!(RankConstraint::interval(2, 1).is_err());
    assert!(RankConstraint::finite(Vec::<i64>::new()).is_err());
    for parts in partitions_of(12) {
        let lam = p(&parts);
        let r = ranks(&parts);
        assert_eq!(lam.satisfies(&RankConstraint::AtLeast(0)), r.iter().all(|&x| x >= 0));
        assert_eq!(lam.satisfies(&RankConstraint::AtMost(-1)), r.iter().all(|&x| x <= -1));
        let fin = RankConstraint::finite([0, -1]).unwrap();
        assert_eq!(lam.satisfies(&fin), r.iter().all(|&x| x == 0 || x == -1));
        let iv = RankConstraint::interval(-2, 1).unwrap();
        assert_eq!(lam.satisfies(&iv), r.iter().all(|&x| (-2..=1).contains(&x)));
    }
}

#[test]
fn profiles_match_definitions() {
    for len in 0..=12 {
        for ones in 0..=len {
            for d in words(ones, len - ones) {
                let word = from_digits(&d);
                let prof = word.profile();
                let vs: Vec<(usize, i64)> = prof.valleys.iter().map(|v| (v.x, v.h)).collect();
                let ps: Vec<(usize, i64)> = prof.peaks.iter().map(|v| (v.x, v.h)).collect();
                assert_eq!(vs, valleys(&d));
                assert_eq!(ps, peaks(&d));
                assert_eq!(prof.des, vs.len());
                assert_eq!(prof.maj, maj(&d));
                assert_eq!(prof.hdes, ps.len());
                assert_eq!(prof.hmaj, ps.iter().map(|x| x.0 as u64).sum::<u64>());
                assert_eq!(prof.inv, inv(&d));
                assert_eq!(prof.min_height, min_height(&d));
                assert_eq!(word.final_height(), ones as i64 - (len - ones) as i64);
            }
        }
    }
}

#[test]
fn matching_agrees_with_iterated_removal() {
    for len in 0..=14 {
        for ones in 0..=len {
            let twos = len - ones;
            for d in words(ones, twos) {
                let word = from_digits(&d);
                let got = word.match_steps();
                let (pairs, utwos, uones) = match_by_removal(&d);
                let got_pairs: std::collections::BTreeSet<(usize, usize)> = got.pairs.iter().copied().collect();
                assert_eq!(got_pairs, pairs, "{word}");
                assert_eq!(got.unmatched_twos, utwos);
                assert_eq!(got.unmatched_ones, uones);

                let min = min_height(&d);
                assert_eq!(utwos.len() as i64, -min);
                assert_eq!(uones.len() as i64, ones as i64 - twos as i64 - min);
                if let (Some(&t), Some(&o)) = (utwos.last(), uones.first()) {
                    assert!(t < o);
                }
                let h = heights(&d);
                if let Some(&t) = utwos.last() {
                    assert_eq!(t, h.iter().position(|&y| y == min).unwrap());
                }
                if let Some(&o) = uones.first() {
                    assert_eq!(o - 1, h.iter().rposition(|&y| y == min).unwrap());
                }
            }
        }
    }
}

fn dyck(n: usize) -> HashSet<Vec<u8>> {
    words(n, n).into_iter().filter(|d| min_height(d) >= 0).collect()
}

#[test]
fn block_bijection_onto_dyck_paths() {
    for n in 0..=6 {
        let domain: Vec<Vec<u8>> = words(n, n)
            .into_iter()
            .filter(|d| valleys(d).iter().all(|v| v.1 <= -2))
            .collect();
        let image: HashSet<Vec<u8>> = domain
            .iter()
            .map(|d| digits(&from_digits(d).block_bijection().unwrap()))
            .collect();
        assert_eq!(image.len(), domain.len(), "injective for n={n}");
        assert_eq!(image, dyck(n), "onto for n={n}");
    }
    assert_eq!(w("DDUU").block_bijection().unwrap(), w("UUDD"));
    assert_eq!(w("UUDD").block_bijection().unwrap(), w("UDUD"));
    assert!(w("DUDU").block_bijection().is_err());
}

#[test]
fn block_bijection_moves_statistics() {
    let witness = words(3, 3)
        .into_iter()
        .filter(|d| valleys(d).iter().all(|v| v.1 <= -2))
        .find(|d| {
            let img = digits(&from_digits(d).block_bijection().unwrap());
            valleys(&img).len() != valleys(d).len() || maj(&img) != maj(d)
        });
    assert!(witness.is_some());
}

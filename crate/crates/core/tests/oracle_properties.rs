use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reis::oracle::{
    canonical_form, count_classes, count_with, enumerate_classes, enumerate_with, symmetry_profile,
    AxisFilter, Engine,
};
use reis::{CyclicWord, Query};

fn word(alphabet: u8, symbols: Vec<u8>) -> CyclicWord {
    CyclicWord::new(alphabet, symbols).unwrap()
}

#[test]
fn canonical_form_is_orbit_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=16usize {
        for _ in 0..1000 {
            let alphabet = rng.gen_range(2..=3u8);
            let w = word(alphabet, (0..n).map(|_| rng.gen_range(0..alphabet)).collect());
            let class = canonical_form(&w);
            assert_eq!(canonical_form(class.canonical()), class);
            for image in w.images() {
                assert!(class.canonical() <= &image);
                assert_eq!(canonical_form(&image), class);
            }
        }
    }
}

#[test]
fn unfiltered_small_counts() {
    // the oracle excludes the zero word
    assert_eq!(count_classes(&Query::new(4)).unwrap(), 5u32.into());
    assert_eq!(count_classes(&Query::new(6)).unwrap(), 12u32.into());
}

fn queries(n: usize, alphabet: u8) -> Vec<Query> {
    let mut out = Vec::new();
    for m in 0..=3 {
        for k in [None, Some(2), Some(n / 2)] {
            if k == Some(0) {
                continue;
            }
            for reflective in [false, true] {
                out.push(Query {
                    alphabet,
                    min_gap: m,
                    k,
                    require_rotsym: true,
                    require_reflective: reflective,
                    ..Query::new(n)
                });
            }
        }
    }
    out
}

#[test]
fn periodic_seed_matches_naive() {
    for n in 1..=14 {
        for q in queries(n, 2) {
            let naive = enumerate_with(&q, Engine::Naive).unwrap();
            assert_eq!(enumerate_with(&q, Engine::PeriodicSeed).unwrap(), naive, "{q}");
            assert_eq!(enumerate_with(&q, Engine::Scan).unwrap(), naive, "{q}");
        }
    }
    for n in 1..=10 {
        for q in queries(n, 3) {
            let naive = enumerate_with(&q, Engine::Naive).unwrap();
            assert_eq!(enumerate_with(&q, Engine::PeriodicSeed).unwrap(), naive, "{q}");
        }
    }
}

#[test]
fn ternary_twelve_full_scan_agrees() {
    let q = Query::builder(12).alphabet(3).min_gap(1).rotsym().build().unwrap();
    let naive = enumerate_with(&q, Engine::Naive).unwrap();
    assert_eq!(naive.len(), 15);
    assert_eq!(enumerate_with(&q, Engine::PeriodicSeed).unwrap(), naive);
    assert_eq!(enumerate_with(&q, Engine::Scan).unwrap(), naive);
}

#[test]
fn enumeration_sorted_and_counted() {
    for n in 1..=20 {
        let mut qs = vec![
            Query::new(n),
            Query::builder(n).min_gap(1).reflective().build().unwrap(),
            Query::builder(n).min_gap(2).k(3.min(n)).build().unwrap(),
            Query::builder(n).axis(AxisFilter::GapGapOnly).build().unwrap(),
        ];
        qs.extend(queries(n, 2));
        for q in qs {
            let classes = enumerate_classes(&q).unwrap();
            assert!(classes.windows(2).all(|w| w[0] < w[1]), "{q}");
            assert_eq!(count_classes(&q).unwrap(), classes.len().into(), "{q}");
            assert_eq!(count_with(&q, Engine::Scan).unwrap(), classes.len() as u64, "{q}");
        }
    }
}

fn arb_word() -> impl Strategy<Value = CyclicWord> {
    (1usize..=20, 2u8..=3).prop_flat_map(|(n, a)| {
        proptest::collection::vec(0..a, n).prop_map(move |s| CyclicWord::new(a, s).unwrap())
    })
}

proptest! {
    #[test]
    fn stabilizer_divides_length(w in arb_word()) {
        let p = symmetry_profile(&w);
        let n = w.len();
        prop_assert_eq!(n % p.stabilizer_order, 0);
        prop_assert_eq!(p.minimal_period * p.stabilizer_order, n);
        for t in 0..n {
            prop_assert_eq!(w.rotated(t) == w, t % p.minimal_period == 0);
        }
    }

    #[test]
    fn profile_is_class_invariant(w in arb_word(), t in 0usize..20, j in 0usize..20) {
        let a = symmetry_profile(&w);
        let b = symmetry_profile(&w.reflected(j).rotated(t % w.len()));
        prop_assert_eq!(a.stabilizer_order, b.stabilizer_order);
        prop_assert_eq!(a.axes.len(), b.axes.len());
        prop_assert_eq!(a.is_reflective(), b.is_reflective());
    }

    #[test]
    fn congruent_iff_same_canonical(w in arb_word(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = w.len();
        let other: Vec<u8> = (0..n).map(|_| rng.gen_range(0..w.alphabet())).collect();
        let other = CyclicWord::new(w.alphabet(), other).unwrap();
        let congruent = w.images().any(|img| img == other);
        prop_assert_eq!(congruent, canonical_form(&w) == canonical_form(&other));
    }
}

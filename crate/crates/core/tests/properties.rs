use std::collections::HashSet;

use continuum::bijection::{forward, inverse, MapConfig};
use continuum::binary_streams::{
    bounded_streams, canonicalize, classify_stream, dual_of, expansions_of, format_stream,
    parse_stream, value, Epbs, StreamClass,
};
use continuum::dyadic::{classify, PointClass, Rational};
use continuum::finite_sets::{
    cardinal_add, cardinal_mul, cardinal_pow, covering_set, disjoint_union, make_set,
    verify_exponent_law, CardinalValue, FiniteSet, LawId,
};
use proptest::prelude::*;

fn stream() -> impl Strategy<Value = Epbs> {
    (
        prop::collection::vec(any::<bool>(), 0..12),
        prop::collection::vec(any::<bool>(), 1..8),
    )
        .prop_map(|(pre, per)| Epbs::new(pre, per).unwrap())
}

fn label_set(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec("[a-e]", 0..max)
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(e in stream()) {
        prop_assert_eq!(parse_stream(&format_stream(&e)).unwrap(), e);
    }

    #[test]
    fn canonicalize_is_idempotent_and_keeps_bits(e in stream()) {
        let c = canonicalize(&e);
        prop_assert!(c.is_canonical());
        prop_assert_eq!(canonicalize(&c), c.clone());
        prop_assert_eq!(c.prefix(128), e.prefix(128));
        prop_assert_eq!(value(&c), value(&e));
    }

    #[test]
    fn equal_prefixes_iff_equal_canonical_forms(a in stream(), b in stream()) {
        // Periods are at most 7 and preambles at most 11 long, so 128 bits
        // decide equality of the infinite streams.
        prop_assert_eq!(a.prefix(128) == b.prefix(128), canonicalize(&a) == canonicalize(&b));
    }

    #[test]
    fn dual_is_an_involution(e in stream()) {
        if let Some(d) = dual_of(&e) {
            prop_assert_eq!(value(&d), value(&e));
            prop_assert_ne!(&d, &canonicalize(&e));
            prop_assert_eq!(dual_of(&d), Some(canonicalize(&e)));
        }
    }

    #[test]
    fn map_round_trips(e in stream()) {
        prop_assert_eq!(forward(&inverse(&e)).unwrap(), canonicalize(&e));
        prop_assert_eq!(classify_stream(&inverse(&e)), StreamClass::InBX);
        if classify_stream(&e) == StreamClass::InBX {
            prop_assert_eq!(inverse(&forward(&e).unwrap()), canonicalize(&e));
        } else {
            prop_assert!(forward(&e).is_err());
        }
    }

    #[test]
    fn disjoint_union_succeeds_iff_disjoint(m in label_set(5), n in label_set(5)) {
        let (m, n) = (make_set(m), make_set(n));
        let overlap = m.iter().any(|l| n.contains(l));
        match disjoint_union(&m, &n) {
            Ok(u) => {
                prop_assert!(!overlap);
                prop_assert_eq!(u.len(), m.len() + n.len());
            }
            Err(_) => prop_assert!(overlap),
        }
    }

    #[test]
    fn cardinal_ops_match_integers(a in 0u64..40, b in 0u64..4) {
        prop_assert_eq!(cardinal_add(a.into(), b.into()).unwrap(), CardinalValue(a + b));
        prop_assert_eq!(cardinal_mul(a.into(), b.into()).unwrap(), CardinalValue(a * b));
        prop_assert_eq!(cardinal_pow(a.into(), b.into()).unwrap(), CardinalValue(a.pow(b as u32)));
    }
}

#[test]
fn covering_counts_and_distinctness() {
    let mut cases: Vec<(usize, usize)> = (0..=10).map(|n| (n, 2)).collect();
    cases.extend((0..=4).flat_map(|m| (0..=6).map(move |n| (n, m))));
    for (n, m) in cases {
        let set = covering_set(&FiniteSet::witness(n), &FiniteSet::witness(m));
        assert_eq!(
            set.len() as u64,
            (m as u64).pow(n as u32),
            "|N|={n} |M|={m}"
        );
        let distinct: HashSet<_> = set.iter().map(|c| c.to_label()).collect();
        assert_eq!(distinct.len(), set.len());
    }
}

#[test]
fn exponent_laws_small_cardinals() {
    for law in LawId::ALL {
        for a in 0..=3u64 {
            for b in 0..=3u64 {
                for c in 0..=3u64 {
                    let w = verify_exponent_law(law, a.into(), b.into(), c.into())
                        .unwrap_or_else(|e| panic!("{law} {a} {b} {c}: {e}"));
                    let expected = match law {
                        LawId::AddExp => a.pow((b + c) as u32),
                        LawId::MulExp => (a * b).pow(c as u32),
                        LawId::Curry => a.pow((b * c) as u32),
                    };
                    assert_eq!(w.left_set.len() as u64, expected);
                    assert_eq!(w.right_set.len() as u64, expected);
                }
            }
        }
    }
}

#[test]
fn expansion_round_trip_up_to_denominator_256() {
    for den in 1u32..=256 {
        for num in 0..=den {
            let q = Rational::new(num, den).unwrap();
            let xs = expansions_of(&q).unwrap();
            for e in &xs {
                assert_eq!(value(e), q);
            }
            let dual = matches!(classify(&q).unwrap(), PointClass::DualDyadic(_));
            assert_eq!(xs.len(), if dual { 2 } else { 1 }, "{q}");
        }
    }
}

#[test]
fn expansions_contain_every_bounded_stream() {
    for e in bounded_streams(10) {
        let xs = expansions_of(&value(&e)).unwrap();
        assert!(xs.contains(&canonicalize(&e)), "{e}");
    }
}

#[test]
fn dyadics_have_two_expansions_up_to_mu_12() {
    for mu in 1..=12u32 {
        for n in (1..1u32 << mu).step_by(2) {
            let q = Rational::new(n, 1u32 << mu).unwrap();
            assert_eq!(expansions_of(&q).unwrap().len(), 2);
        }
    }
}

#[test]
fn bs_is_exactly_the_duals_of_terminating_streams() {
    let k = 9;
    let universe: HashSet<Epbs> = bounded_streams(k).map(|e| canonicalize(&e)).collect();
    let bs: HashSet<&Epbs> = universe
        .iter()
        .filter(|e| classify_stream(e) == StreamClass::InBS)
        .collect();
    // A trailing-1 form w0(1) has the same size as its partner w1(0).
    let duals: HashSet<Epbs> = universe
        .iter()
        .filter(|e| e.period() == [false] && !e.preamble().is_empty())
        .filter_map(dual_of)
        .collect();
    assert_eq!(bs.len(), duals.len());
    assert!(bs.iter().all(|e| duals.contains(*e)));
}

#[test]
fn bijection_exhaustive_round_trips() {
    let map = MapConfig::default();
    for e in bounded_streams(10) {
        let c = canonicalize(&e);
        let pre = map.inverse(&e);
        assert_eq!(classify_stream(&pre), StreamClass::InBX);
        assert_eq!(map.forward(&pre).unwrap(), c);
        if classify_stream(&e) == StreamClass::InBX {
            assert_eq!(map.inverse(&map.forward(&e).unwrap()), c);
        }
    }
}

#[test]
fn forward_is_injective_on_t_prefix_and_bounded_rest() {
    use continuum::bijection::t_enumerate;
    let n = 500u32;
    let mut images = HashSet::new();
    let mut count = 0;
    for k in 0..=2 * n + 1 {
        assert!(images.insert(forward(&t_enumerate(k)).unwrap()));
        count += 1;
    }
    let map = MapConfig::default();
    let rest: HashSet<Epbs> = bounded_streams(8)
        .map(|e| canonicalize(&e))
        .filter(|e| map.region(e) == continuum::bijection::Region::Rest)
        .collect();
    for e in &rest {
        assert!(images.insert(forward(e).unwrap()));
        count += 1;
    }
    assert_eq!(images.len(), count);
}

#[test]
fn codomain_discipline_up_to_k_1000() {
    use continuum::bijection::t_enumerate;
    for k in 0u32..=1000 {
        let even = forward(&t_enumerate(2 * k)).unwrap();
        assert_eq!(classify_stream(&even), StreamClass::InBS, "k={k}");
        let odd = forward(&t_enumerate(2 * k + 1)).unwrap();
        assert_eq!(classify_stream(&odd), StreamClass::InBX, "k={k}");
        assert_eq!(odd, t_enumerate(k));
    }
}

#[test]
fn trace_passes_and_is_reproducible_up_to_size_10() {
    use continuum::bijection::{derivation_trace, CheckResult};
    for size in 1..=10 {
        let a = derivation_trace(size);
        assert_eq!(a.verdict, CheckResult::Pass, "size {size}");
        let b = derivation_trace(size);
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }
}

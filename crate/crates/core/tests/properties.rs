use proptest::prelude::*;

use u3codes::codes::CodeSpec;
use u3codes::oracle::{check_isometry, check_shift_commutation, exhaustive_min_lee_weight};
use u3codes::poly::divisors_xn1;
use u3codes::quantum::{search_quantum, SearchOptions};
use u3codes::report::{verify_paper, Status, VerifyOptions};
use u3codes::ring::{dot, gray_map, RElem, LEE_WEIGHTS};

fn elem() -> impl Strategy<Value = RElem> {
    (0u8..8).prop_map(RElem::from_packed)
}

fn pair(n: usize) -> impl Strategy<Value = (Vec<RElem>, Vec<RElem>)> {
    (
        prop::collection::vec(elem(), n),
        prop::collection::vec(elem(), n),
    )
}

fn spec_at(n: usize) -> impl Strategy<Value = CodeSpec> {
    let divs = divisors_xn1(n).unwrap();
    let k = divs.len();
    (0..k, 0..k, 0..k).prop_filter_map("a1 must divide g1", move |(i, j, l)| {
        CodeSpec::new(n, divs[i].clone(), divs[j].clone(), divs[l].clone()).ok()
    })
}

fn any_spec() -> impl Strategy<Value = CodeSpec> {
    prop_oneof![spec_at(3), spec_at(5), spec_at(7), spec_at(9), spec_at(15)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gray_isometry_at_15((x, y) in pair(15)) {
        prop_assert!(check_isometry(&x, &y));
    }

    #[test]
    fn gray_map_is_linear((x, y) in pair(9)) {
        let sum: Vec<RElem> = x.iter().zip(&y).map(|(&a, &b)| a + b).collect();
        prop_assert_eq!(gray_map(&sum), gray_map(&x).add(&gray_map(&y)));
    }

    #[test]
    fn shift_commutes_with_gray(v in (4usize..=15).prop_flat_map(|n| prop::collection::vec(elem(), n))) {
        prop_assert!(check_shift_commutation(&v));
    }

    #[test]
    fn spec_codes_are_cyclic_submodules(s in any_spec()) {
        let c = s.code();
        prop_assert!(c.is_cyclic());
        prop_assert!(c.is_submodule());
        prop_assert_eq!(c.size_log2(), s.size_log2());
    }

    #[test]
    fn duals_are_cyclic_and_involutive(s in any_spec()) {
        let c = s.code();
        let d = c.dual();
        prop_assert!(d.is_cyclic());
        prop_assert!(d.is_submodule());
        prop_assert_eq!(d.dual(), c.clone());
        prop_assert_eq!(c.size_log2() + d.size_log2(), 3 * s.n());
        for x in c.vectors() {
            for y in d.vectors() {
                prop_assert_eq!(dot(&x, &y), RElem::ZERO);
            }
        }
    }

    #[test]
    fn full_dual_generator_matches(s in any_spec()) {
        let f = s.dual_generator_formula().unwrap();
        prop_assert!(f.full_matches_dual);
        if s.a1().is_one() {
            prop_assert!(f.matches_dual);
        }
    }

    #[test]
    fn containment_methods_agree(s in any_spec()) {
        let e = s.containment_evidence().unwrap();
        prop_assert!(e.unanimous());
        if e.binary_with_self_dual_rw {
            prop_assert!(e.verdict());
        }
    }

    #[test]
    fn exact_distance_matches_brute_force(s in prop_oneof![spec_at(3), spec_at(5), spec_at(7)]) {
        let c = s.code();
        prop_assume!(!c.is_zero_code() && c.size_log2() <= 18);
        let d = c.min_lee_distance(24, 3).unwrap();
        prop_assert!(d.exact);
        prop_assert_eq!(d.value, exhaustive_min_lee_weight(&c, &LEE_WEIGHTS).unwrap());
    }
}

#[test]
fn search_records_are_sorted_and_reverify() {
    for n in [3, 5, 7, 9] {
        let recs = search_quantum(n, SearchOptions::default()).unwrap();
        let keys: Vec<_> = recs
            .iter()
            .map(|r| {
                (
                    std::cmp::Reverse(r.params.dimension),
                    std::cmp::Reverse(r.params.distance.value),
                    r.spec.to_string(),
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let codes: std::collections::HashSet<_> = recs.iter().map(|r| r.spec.code()).collect();
        assert_eq!(codes.len(), recs.len());
        for r in &recs {
            assert!(r.evidence.unanimous() && r.evidence.verdict());
            assert!(r.reverify(Default::default()).unwrap());
            assert_eq!(r.params.dimension % 2, (3 * n) % 2);
            assert!(r.params.distance.value >= 1);
        }
    }
}

#[test]
fn search_is_repeatable() {
    let render = |n| {
        search_quantum(n, SearchOptions::default())
            .unwrap()
            .iter()
            .map(|r| format!("{} {}", r.spec, r.params))
            .collect::<Vec<_>>()
    };
    assert_eq!(render(7), render(7));
}

fn failing_checks(table: [u32; 8]) -> Vec<String> {
    let report = verify_paper(&VerifyOptions {
        lee_table: table,
        ..Default::default()
    })
    .unwrap();
    assert!(!report.passed());
    report
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.name.clone())
        .collect()
}

#[test]
fn corrupted_lee_table_fails_verification() {
    for k in [1, 2, 4] {
        let mut table = LEE_WEIGHTS;
        table[k] += 1;
        assert!(failing_checks(table)
            .iter()
            .any(|c| c == "Gray map is a Lee-to-Hamming isometry at n <= 2"));
    }
    let failing = failing_checks([0; 8]);
    assert!(failing
        .iter()
        .any(|c| c == "Lee distance equals brute force"));
}

#[test]
fn report_is_deterministic() {
    let opts = VerifyOptions::default();
    let a = verify_paper(&opts).unwrap().to_string();
    let b = verify_paper(&opts).unwrap().to_string();
    assert_eq!(a, b);
}

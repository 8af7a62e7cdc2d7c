use std::cmp::Ordering;
use std::collections::BTreeSet;

use proptest::prelude::*;

use monores::analysis::locate_shared_degree_columns;
use monores::compare::match_columns;
use monores::io::{format_ideal, parse_ideal, resolution_from_json, resolution_to_json};
use monores::par::Execution;
use monores::scarf::{buchberger_graph, euler_check, scarf_complex};
use monores::syzygy::{has_strict_divisor, is_minimal_pair_generic, nonminimality_witness};
use monores::syzygy3::{assemble_f3_generic, scarf_identity_residual};
use monores::verify::certify;
use monores::{resolve, resolve_with, Monomial, MonomialIdeal, PivotOrder, ResolveOptions};

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..8, 0u32..8, 0u32..8).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn artinian() -> impl Strategy<Value = MonomialIdeal> {
    (any::<u64>(), 4usize..=8, 2u32..=7).prop_filter_map("generation exhausted", |(s, n, e)| {
        MonomialIdeal::random_artinian(s, n, e).ok()
    })
}

/// Any proper monomial ideal with up to eight generators, primary or not.
fn any_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(), 1..9).prop_filter_map("unit ideal", |g| {
        MonomialIdeal::minimalize_generators(&g).ok()
    })
}

fn generic_artinian() -> impl Strategy<Value = MonomialIdeal> {
    artinian().prop_filter("not generic", MonomialIdeal::is_generic)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

fn tuple_key(m: &Monomial) -> (u64, i64, i64, i64) {
    let [a, b, c] = m.exponents();
    (m.degree(), -(a as i64), -(b as i64), -(c as i64))
}

fn divides_brute(a: &Monomial, b: &Monomial) -> bool {
    a.exponents()
        .iter()
        .zip(b.exponents())
        .all(|(x, y)| *x <= y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lcm_laws(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
        prop_assert_eq!(a.lcm(&b), b.lcm(&a));
        prop_assert_eq!(a.lcm(&a), a);
        prop_assert!(a.divides(&a.lcm(&b)));
        prop_assert_eq!(a.divides(&b), divides_brute(&a, &b));
    }

    #[test]
    fn divisibility_implications(a in monomial(), b in monomial()) {
        if a.strongly_divides(&b) {
            prop_assert!(a.divides(&b));
        }
        if a.strictly_divides(&b) {
            prop_assert!(a.divides(&b));
        }
    }

    #[test]
    fn grevlex_matches_tuple_order(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.cmp(&b), tuple_key(&a).cmp(&tuple_key(&b)));
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
    }

    #[test]
    fn lcm_divisibility_of_triples(ideal in any_ideal()) {
        let n = ideal.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let mij = ideal.lcm2(i, j);
                    let mik = ideal.lcm2(i, k);
                    let mjk = ideal.lcm2(j, k);
                    let mk = ideal.gen(k);
                    prop_assert_eq!(mk.divides(&mij), mik.divides(&mij) && mjk.divides(&mij));
                    prop_assert_eq!(mik.divides(&mij), mjk.divides(&mij));
                    if mk.strongly_divides(&mij) {
                        prop_assert!(mik.strictly_divides(&mij) && mjk.strictly_divides(&mij));
                    }
                }
            }
        }
    }

    #[test]
    fn minimalize_is_idempotent(gens in prop::collection::vec(monomial(), 1..10)) {
        if let Ok(once) = MonomialIdeal::minimalize_generators(&gens) {
            let twice = MonomialIdeal::minimalize_generators(once.gens()).unwrap();
            prop_assert_eq!(&once, &twice);
            for (i, g) in once.gens().iter().enumerate() {
                for (j, h) in once.gens().iter().enumerate() {
                    prop_assert!(i == j || !divides_brute(g, h));
                }
            }
        }
    }

    #[test]
    fn genericity_by_exhaustive_search(ideal in any_ideal()) {
        let g = ideal.gens();
        let brute = pairs(g.len()).all(|(i, j)| {
            let shares = (0..3).any(|v| g[i].exponents()[v] > 0 && g[i].exponents()[v] == g[j].exponents()[v]);
            let mij = g[i].lcm(&g[j]);
            !shares
                || (0..g.len()).any(|k| {
                    k != i
                        && k != j
                        && (0..3).all(|v| {
                            let (e, t) = (g[k].exponents()[v], mij.exponents()[v]);
                            if t > 0 { e < t } else { e == 0 }
                        })
                })
        });
        prop_assert_eq!(ideal.is_generic(), brute);
    }

    #[test]
    fn resolution_is_certified(ideal in any_ideal(), seed in any::<u64>()) {
        let res = resolve(&ideal).unwrap();
        let cert = certify(&res, seed);
        prop_assert!(cert.all_ok(), "{} {:?}", ideal, cert);
        prop_assert_eq!(res.f2.cols() - res.f3.cols(), res.n() - 1);
    }

    #[test]
    fn pivot_order_does_not_change_ranks(ideal in any_ideal()) {
        let a = resolve(&ideal).unwrap();
        let b = resolve_with(&ideal, &ResolveOptions { pivot_order: PivotOrder::Largest, ..Default::default() }).unwrap();
        prop_assert_eq!(a.ranks(), b.ranks());
        prop_assert!(certify(&b, 5).all_ok());
    }

    #[test]
    fn pair_survival_rules(ideal in any_ideal()) {
        let res = resolve(&ideal).unwrap();
        let kept: BTreeSet<(usize, usize)> = res.provenance2.iter().copied().collect();
        for (i, j) in pairs(ideal.len()) {
            if nonminimality_witness(&ideal, i, j).is_some() {
                prop_assert!(!kept.contains(&(i, j)));
            }
            if !has_strict_divisor(&ideal, i, j) {
                prop_assert!(kept.contains(&(i, j)));
            }
        }
        if ideal.is_generic() {
            for (i, j) in pairs(ideal.len()) {
                prop_assert_eq!(is_minimal_pair_generic(&ideal, i, j).unwrap(), kept.contains(&(i, j)));
            }
        }
    }

    #[test]
    fn non_generic_keeps_a_shared_degree_pair(ideal in artinian()) {
        if !ideal.is_generic() {
            let res = resolve(&ideal).unwrap();
            let shared = res
                .provenance2
                .iter()
                .any(|&(i, j)| ideal.gen(i).shares_positive_degree(&ideal.gen(j)));
            prop_assert!(shared);
            let wide = locate_shared_degree_columns(&res);
            prop_assert!(!wide.is_empty());
            prop_assert!(wide.iter().all(|c| c.pair.is_some()));
        }
    }

    #[test]
    fn buchberger_and_scarf(ideal in any_ideal()) {
        let res = resolve(&ideal).unwrap();
        let kept: BTreeSet<(usize, usize)> = res.provenance2.iter().copied().collect();
        let buch = buchberger_graph(&ideal).edges;
        prop_assert!(kept.is_subset(&buch));
        let scarf = scarf_complex(&ideal, 14, Execution::Sequential).unwrap();
        prop_assert!(scarf.is_downward_closed());
        prop_assert_eq!(&scarf, &scarf_complex(&ideal, 14, Execution::Parallel).unwrap());
        if ideal.is_generic() {
            prop_assert_eq!(&kept, &buch);
            prop_assert_eq!(scarf.edges(), buch);
            let triples: BTreeSet<Vec<usize>> = res.provenance3.iter().cloned().collect();
            prop_assert_eq!(scarf.triangles(), triples);
        }
    }

    #[test]
    fn euler_count_for_generic(ideal in generic_artinian()) {
        prop_assert_eq!(euler_check(&ideal, &resolve(&ideal).unwrap()), Ok(true));
    }

    #[test]
    fn third_syzygy_identity(ideal in any_ideal()) {
        let n = ideal.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let r = scarf_identity_residual(&ideal, i, j, k).unwrap();
                    prop_assert!(r.iter().all(|p| p.is_zero()));
                }
            }
        }
    }

    #[test]
    fn generic_f3_from_triangles(ideal in generic_artinian()) {
        let res = resolve(&ideal).unwrap();
        let f3 = assemble_f3_generic(&ideal, &res).unwrap();
        let rows: Vec<usize> = (0..f3.rows()).collect();
        prop_assert!(match_columns(&f3, &res.f3, &rows, &vec![1; f3.rows()]).is_some());
        for c in 0..res.m() {
            let mut vars: Vec<usize> = res
                .f3
                .column(c)
                .map(|e| e.value.mono().pure_power_variable().unwrap())
                .collect();
            vars.sort();
            prop_assert_eq!(vars, vec![0, 1, 2]);
        }
    }

    #[test]
    fn json_round_trip(ideal in any_ideal()) {
        let res = resolve(&ideal).unwrap();
        let text = resolution_to_json(&res);
        prop_assert_eq!(&resolution_from_json(&text).unwrap(), &res);
        prop_assert_eq!(text, resolution_to_json(&resolve(&ideal).unwrap()));
    }

    #[test]
    fn ideal_text_round_trip(ideal in any_ideal()) {
        prop_assert_eq!(parse_ideal(&format_ideal(&ideal), true).unwrap(), ideal);
    }
}

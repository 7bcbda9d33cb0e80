use hallshuffle::affine::{parse_word, AffineError};
use hallshuffle::AffinePerm;
use proptest::prelude::*;

#[derive(Debug, Clone, Copy)]
enum Gen {
    S(i64),
    W(i64),
}

fn element(n: usize, word: &[Gen]) -> AffinePerm {
    word.iter().fold(AffinePerm::identity(n), |acc, g| match *g {
        Gen::S(i) => acc.compose(&AffinePerm::sigma(n, i.rem_euclid(n as i64)).unwrap()),
        Gen::W(k) => acc.compose(&AffinePerm::omega_pow(n, k)),
    })
}

fn word(n: usize) -> impl Strategy<Value = Vec<Gen>> {
    let g = prop_oneof![4 => (0..n as i64).prop_map(Gen::S), 1 => (-2i64..=2).prop_map(Gen::W)];
    prop::collection::vec(g, 0..10)
}

fn rank_and_two_words() -> impl Strategy<Value = (usize, Vec<Gen>, Vec<Gen>)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), word(n), word(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_is_a_homomorphism((n, a, b) in rank_and_two_words()) {
        let (u, v) = (element(n, &a), element(n, &b));
        prop_assert_eq!(u.compose(&v).degree(), u.degree() + v.degree());
        prop_assert_eq!(u.inverse().degree(), -u.degree());
    }

    #[test]
    fn cycle_degrees_sum_to_degree((n, a, _b) in rank_and_two_words()) {
        let v = element(n, &a);
        let c = v.cycle_data();
        prop_assert_eq!(c.total_degree(), v.degree());
        prop_assert_eq!(c.total_length(), n);
        let path = v.convex_path();
        prop_assert!(path.windows(2).all(|w| (w[0].0 as i128) * (w[1].1 as i128) <= (w[1].0 as i128) * (w[0].1 as i128)));
    }

    #[test]
    fn length_properties((n, a, b) in rank_and_two_words(), k in -3i64..=3) {
        let (u, v) = (element(n, &a), element(n, &b));
        prop_assert!(u.compose(&v).length() <= u.length() + v.length());
        prop_assert_eq!(u.inverse().length(), u.length());
        prop_assert_eq!(AffinePerm::omega_pow(n, k).compose(&u).length(), u.length());
        let (deg, alpha) = u.normal_form();
        prop_assert_eq!(AffinePerm::omega_pow(n, deg).compose(&alpha), u.clone());
        prop_assert_eq!(alpha.degree(), 0);
    }

    #[test]
    fn reduced_words_rebuild((n, a, _b) in rank_and_two_words()) {
        let v = element(n, &a);
        let (deg, alpha) = v.normal_form();
        let rw = alpha.reduced_word();
        prop_assert_eq!(rw.len(), v.length());
        let rebuilt = rw.iter().fold(AffinePerm::omega_pow(n, deg), |acc, &i| acc.compose(&AffinePerm::sigma(n, i).unwrap()));
        prop_assert_eq!(rebuilt, v);
    }

    #[test]
    fn bruhat_contains_prefixes((n, a, _b) in rank_and_two_words()) {
        let (_, v) = element(n, &a).normal_form();
        prop_assume!(v.length() <= 8);
        let rw = v.reduced_word();
        let mut prefix = AffinePerm::identity(n);
        for &i in &rw {
            prefix = prefix.compose(&AffinePerm::sigma(n, i).unwrap());
            prop_assert!(prefix.bruhat_leq(&v).unwrap());
        }
        prop_assert!(AffinePerm::identity(n).bruhat_leq(&v).unwrap());
    }

    #[test]
    fn json_round_trip((n, a, _b) in rank_and_two_words()) {
        let v = element(n, &a);
        let back: AffinePerm = serde_json::from_str(&v.to_json()).unwrap();
        prop_assert_eq!(back, v);
    }
}

#[test]
fn presentation_relations() {
    for n in 2..=4usize {
        let s = |i: i64| AffinePerm::sigma(n, i.rem_euclid(n as i64)).unwrap();
        let w = AffinePerm::omega(n);
        for i in 0..n as i64 {
            assert!(s(i).compose(&s(i)).is_identity());
            assert_eq!(w.compose(&s(i)).compose(&w.inverse()), s(i + 1), "n = {n}, i = {i}");
            for j in 0..n as i64 {
                let dist = (i - j).rem_euclid(n as i64).min((j - i).rem_euclid(n as i64));
                if n > 2 && dist == 1 {
                    assert_eq!(s(i).compose(&s(j)).compose(&s(i)), s(j).compose(&s(i)).compose(&s(j)));
                } else if dist > 1 {
                    assert!(s(i).commutes_with(&s(j)));
                }
            }
        }
        assert_eq!(w.pow(n as i64).window(), (1..=n as i64).map(|i| i + n as i64).collect::<Vec<_>>().as_slice());
    }
}

#[test]
fn group_axioms() {
    let n = 3;
    let elems: Vec<AffinePerm> = ["s1 w", "s0 s2 w^-1", "y2", "s1 s2 s1"].iter().map(|w| parse_word(n, w).unwrap()).collect();
    let id = AffinePerm::identity(n);
    for a in &elems {
        assert_eq!(a.compose(&id), *a);
        assert!(a.compose(&a.inverse()).is_identity());
        for b in &elems {
            for c in &elems {
                assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
            }
        }
    }
}

#[test]
fn bruhat_refuses_long_elements() {
    let v = parse_word(3, "s0 s1 s2 s0 s1 s2 s0 s1 s2 s0 s1 s2").unwrap();
    assert!(matches!(AffinePerm::identity(3).bruhat_leq(&v), Err(AffineError::LengthBound(_))));
}

#[test]
fn spec_examples() {
    let v = parse_word(4, "w w").unwrap();
    assert_eq!(v.convex_path(), vec![(1, 2), (1, 2)]);
    assert_eq!(parse_word(4, "w").unwrap().length(), 0);
    assert_eq!(AffinePerm::sigma(2, 1).unwrap().convex_path(), vec![(0, 2)]);
    let id = AffinePerm::identity(3).cycle_data();
    assert_eq!(id.0, vec![(1, 0), (1, 0), (1, 0)]);
}

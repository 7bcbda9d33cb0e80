use hallshuffle::shuffle::oracle::{compare_at_random_point, gen_R_value, random_point, shuffle_mul_value, shuffle_mul_value_symmetric};
use hallshuffle::shuffle::{gen_H, gen_Hprime, gen_Pbar, gen_R, gen_Sbar, gen_ribbon, shuffle_mul};
use hallshuffle::{Monomial, Presentation, RatFunc, Rational, ShuffleElement, SlopeParams, Vars};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small() -> impl Strategy<Value = ShuffleElement> {
    (-2i32..=2, -3i64..=3).prop_map(|(d, c)| gen_R(&[d]).unwrap().scale_rational(&Rational::from(c)))
}

fn q2_pow(k: i32) -> RatFunc {
    RatFunc::monomial(&Vars::q(), Monomial::var(1, k), Rational::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(a in small(), b in small(), c in small()) {
        let left = shuffle_mul(&shuffle_mul(&a, &b).unwrap(), &c).unwrap();
        let right = shuffle_mul(&a, &shuffle_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bilinearity(a in small(), b in small(), c in small(), k in -3i64..=3) {
        let k = Rational::from(k);
        let lhs = shuffle_mul(&a.try_add(&b.scale_rational(&k)).unwrap(), &c).unwrap();
        let rhs = shuffle_mul(&a, &c).unwrap().try_add(&shuffle_mul(&b, &c).unwrap().scale_rational(&k)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = shuffle_mul(&c, &a.try_add(&b).unwrap()).unwrap();
        let rhs = shuffle_mul(&c, &a).unwrap().try_add(&shuffle_mul(&c, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_matches_oracle(d1 in -2i32..=2, d2 in -1i32..=1, d3 in -2i32..=2, seed in any::<u64>()) {
        let a = gen_R(&[d1, d2]).unwrap();
        let b = gen_R(&[d3]).unwrap();
        let ab = shuffle_mul(&a, &b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (o, s) = compare_at_random_point(&mut rng, &ab, &|p| shuffle_mul_value(&a, &b, p)).unwrap();
        prop_assert_eq!(o, s);
        let (o, s) = compare_at_random_point(&mut rng, &a, &|p| gen_R_value(&[d1, d2], p)).unwrap();
        prop_assert_eq!(o, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn products_are_symmetric(d1 in -1i32..=1, d2 in -1i32..=1, d3 in -1i32..=1) {
        let a = gen_R(&[d1, d2]).unwrap();
        let b = gen_R(&[d3]).unwrap();
        let ab = shuffle_mul(&a, &b).unwrap();
        prop_assert!(ab.is_symmetric());
        let abb = shuffle_mul(&ab, &b).unwrap();
        prop_assert!(abb.is_symmetric());
        prop_assert_eq!(abb.n(), 4);
    }
}

#[test]
fn unit_is_neutral() {
    let x = gen_H(1, 2).unwrap();
    assert_eq!(shuffle_mul(&ShuffleElement::unit(), &x).unwrap(), x);
    assert_eq!(shuffle_mul(&x, &ShuffleElement::unit()).unwrap(), x);
}

#[test]
fn generators_are_symmetric_and_integral() {
    let mut elems = Vec::new();
    for n in 1..=4usize {
        for m in -2..=3i64 {
            elems.push(gen_H(m, n).unwrap());
            elems.push(gen_Hprime(m, n).unwrap());
        }
    }
    for (m, n, d) in [(0, 1, 1), (1, 1, 2), (0, 1, 4), (1, 2, 2), (-1, 3, 1), (1, 4, 1)] {
        let sp = SlopeParams::new(m, n, d).unwrap();
        elems.push(gen_Sbar(sp, Presentation::A).unwrap());
        elems.push(gen_Sbar(sp, Presentation::B).unwrap());
        elems.push(gen_Pbar(sp).unwrap());
    }
    for eps in [vec![true, false], vec![false, false], vec![true, true, false]] {
        elems.push(gen_ribbon(0, 1, &eps).unwrap());
    }
    for e in &elems {
        assert!(e.is_symmetric(), "{}", e.to_text());
        assert!(e.is_integral(), "{}", e.to_text());
    }
}

#[test]
fn h_hprime_relation_up_to_four_variables() {
    // the computed generators satisfy H' = q2^(n-1) H
    for (m, n) in [(0, 1), (3, 1), (1, 2), (-1, 2), (1, 3), (2, 3), (-1, 3), (1, 4), (3, 4), (-1, 4)] {
        let h = gen_H(m, n).unwrap();
        let hp = gen_Hprime(m, n).unwrap();
        assert_eq!(hp, h.scale(&q2_pow(n as i32 - 1)), "({m},{n})");
    }
}

/// The six-variable symbolic product does not fit in desk memory, so slope 1/2 is checked
/// by exact evaluation of both orders at random rational points.
#[test]
fn slope_half_commutes_pointwise() {
    let x = gen_Sbar(SlopeParams::new(1, 2, 1).unwrap(), Presentation::A).unwrap();
    let y = gen_Sbar(SlopeParams::new(1, 2, 2).unwrap(), Presentation::A).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 4 {
        let p = random_point(&mut rng, 6);
        if let (Some(xy), Some(yx)) = (shuffle_mul_value_symmetric(&x, &y, &p), shuffle_mul_value_symmetric(&y, &x, &p)) {
            assert_eq!(xy, yx);
            checked += 1;
        }
    }
    let z = gen_Sbar(SlopeParams::new(0, 1, 1).unwrap(), Presentation::A).unwrap();
    let p = random_point(&mut rng, 3);
    assert_eq!(shuffle_mul_value(&x, &z, &p), shuffle_mul_value_symmetric(&x, &z, &p));
    assert_ne!(shuffle_mul_value_symmetric(&x, &z, &p), shuffle_mul_value_symmetric(&z, &x, &p));
}

#[test]
fn distinct_slopes_do_not_commute() {
    let x = gen_Sbar(SlopeParams::new(0, 1, 1).unwrap(), Presentation::A).unwrap();
    let y = gen_Sbar(SlopeParams::new(1, 1, 1).unwrap(), Presentation::A).unwrap();
    assert_ne!(shuffle_mul(&x, &y).unwrap(), shuffle_mul(&y, &x).unwrap());
}

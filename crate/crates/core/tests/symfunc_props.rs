use hallshuffle::shuffle::shuffle_mul;
use hallshuffle::symfunc::{basis_convert, from_basis, parse_expr, partitions, pbar, phi_slope, Basis};
use hallshuffle::{Monomial, Partition, Plethysm, RatFunc, Rational, SymFuncExpr, Vars};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, 0i32..=2, -1i32..=1, prop::bool::ANY).prop_map(|(c, a, b, den)| {
        let q = Vars::q();
        let f = RatFunc::monomial(&q, Monomial::from_exps(&[a, b]), Rational::from(c));
        if den {
            f.try_mul(&RatFunc::binomial(&q, &Monomial::var(0, 1), -1)).unwrap()
        } else {
            f
        }
    })
}

/// A random homogeneous element of degree `d` in the barred power sums.
fn homogeneous(d: u32) -> impl Strategy<Value = SymFuncExpr> {
    let parts = partitions(d);
    let k = parts.len();
    prop::collection::vec(coeff(), k)
        .prop_map(move |cs| SymFuncExpr::new(parts.iter().cloned().zip(cs), Plethysm::Barred))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn any_expr() -> impl Strategy<Value = SymFuncExpr> {
    (1u32..=4).prop_flat_map(homogeneous)
}

fn pair() -> impl Strategy<Value = (SymFuncExpr, SymFuncExpr)> {
    prop_oneof![(homogeneous(1), homogeneous(1)), (homogeneous(1), homogeneous(2)), (homogeneous(2), homogeneous(1))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_is_multiplicative((f, g) in pair(), slope in prop_oneof![Just((0i64, 1usize)), Just((1, 1))]) {
        let (m, n) = slope;
        let lhs = phi_slope(m, n, &f.mul(&g)).unwrap();
        let rhs = shuffle_mul(&phi_slope(m, n, &f).unwrap(), &phi_slope(m, n, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_linear(f in homogeneous(2), g in homogeneous(2), c in coeff()) {
        let lhs = phi_slope(1, 1, &f.add(&g.scale(&c))).unwrap();
        let rhs = phi_slope(1, 1, &f).unwrap().try_add(&phi_slope(1, 1, &g).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn basis_round_trips(f in any_expr()) {
        for basis in Basis::ALL {
            let coeffs = basis_convert(&f, basis);
            prop_assert_eq!(&from_basis(&coeffs, basis).unwrap(), &f, "basis {}", basis.name());
        }
    }

    #[test]
    fn text_round_trip(f in any_expr(), modified in prop::bool::ANY) {
        let f = if modified { f.with_flag(Plethysm::Modified) } else { f };
        prop_assert_eq!(parse_expr(&f.to_text()).unwrap(), f.clone());
        prop_assert_eq!(SymFuncExpr::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn plethysm_is_a_ring_map(f in any_expr(), g in any_expr()) {
        use hallshuffle::symfunc::PlethysmDirection::*;
        let fg = f.mul(&g).plethysm_q(BarToModified);
        prop_assert_eq!(fg, f.plethysm_q(BarToModified).mul(&g.plethysm_q(BarToModified)));
        prop_assert_eq!(f.plethysm_q(BarToModified).plethysm_q(ModifiedToBar), f);
    }
}

#[test]
fn newton_identity_in_every_degree() {
    // d hbar_d = sum_{i=1}^{d} pbar_i hbar_{d-i}
    use hallshuffle::symfunc::hbar;
    for d in 1..=6u32 {
        let mut rhs = SymFuncExpr::zero();
        for i in 1..=d {
            rhs = rhs.add(&pbar(i).mul(&hbar(d - i)));
        }
        assert_eq!(hbar(d).scale_rational(&Rational::from(d as i64)), rhs);
    }
    assert_eq!(Partition::new(vec![1, 3, 2]).parts(), &[3, 2, 1]);
}

use hallshuffle::pbw::{enumerate_pbw, express, full_column_rank, pbw_product, PbwError};
use hallshuffle::shuffle::{gen_H, gen_R};
use hallshuffle::solomon::{antisymmetrizer, ideal_basis, solomon_check, symmetrizer};
use hallshuffle::{GroupAlgElem, Rational, SignSeq, Window};
use num_rational::Ratio;

fn window(lo: i64, hi: i64) -> Window {
    Window::ints(lo, hi).unwrap()
}

#[test]
fn three_variable_products_are_independent() {
    let (k, full) = full_column_rank(3, 0, window(-1, 1)).unwrap();
    assert!(full, "{k} products");
    assert_eq!(k, enumerate_pbw(3, 0, window(-1, 1)).len());
}

#[test]
fn h_expansions_are_integral_up_to_three_variables() {
    for (m, n) in [(0, 3), (1, 3), (2, 3), (-1, 3)] {
        let target = gen_H(m, n).unwrap();
        let s = Ratio::new(m, n as i64);
        let exp = express(&target, Window::new(s - 1, s + 1).unwrap()).unwrap();
        assert_eq!(exp.reconstruct().unwrap(), target, "H({m},{n})");
        assert!(exp.is_integral(), "H({m},{n}): {}", exp.to_text());
    }
}

#[test]
fn narrow_windows_report_not_in_span() {
    let target = gen_R(&[0, 1]).unwrap();
    assert!(matches!(express(&target, window(1, 1)), Err(PbwError::NotInSpan)));
    assert!(matches!(Window::ints(1, 0), Err(PbwError::BadWindow)));
}

#[test]
fn products_reconstruct_themselves() {
    for idx in enumerate_pbw(2, 1, window(0, 1)) {
        let target = pbw_product(&idx).unwrap();
        let exp = express(&target, window(0, 1)).unwrap();
        assert_eq!(exp.coeffs.len(), 1, "{idx}");
        assert_eq!(exp.reconstruct().unwrap(), target);
    }
}

#[test]
fn expansion_json_shape() {
    let target = gen_H(0, 2).unwrap();
    let exp = express(&target, window(0, 0)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&exp.to_json()).unwrap();
    assert_eq!(v["window"], serde_json::json!(["0", "0"]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 2);
    assert!(v["target"].is_object());
}

#[test]
fn normalizers_are_invariant() {
    for n in 1..=4 {
        for eps in SignSeq::all(n) {
            let e = symmetrizer(&eps);
            let em = antisymmetrizer(&eps);
            for (i, &plus) in eps.0.iter().enumerate() {
                let s = GroupAlgElem::sigma(n, i + 1);
                if plus {
                    assert_eq!(s.mul(&e), e, "{eps}");
                } else {
                    assert_eq!(s.mul(&em), em.scale(&Rational::from(-1)), "{eps}");
                }
            }
        }
    }
}

#[test]
fn ideal_dimensions_are_descent_counts() {
    // the ideal for eps has dimension equal to the number of permutations with descent set eps
    let rep = solomon_check(4).unwrap();
    assert!(rep.holds());
    let dims: Vec<usize> = rep.dims.iter().map(|d| d.1).collect();
    assert_eq!(dims.iter().sum::<usize>(), 24);
    assert_eq!(ideal_basis(&SignSeq::parse("+++").unwrap()).unwrap().dim(), 1);
    assert_eq!(ideal_basis(&SignSeq::parse("---").unwrap()).unwrap().dim(), 1);
    assert_eq!(ideal_basis(&SignSeq::parse("+-+").unwrap()).unwrap().dim(), 5);
}

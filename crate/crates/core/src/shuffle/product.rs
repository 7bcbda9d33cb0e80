use crate::arith::{LaurentPoly, Monomial, RatFunc, Vars};

use super::{sym_over_vandermonde, zpos, zratio, ShuffleElement, ShuffleError};

/// `(1 - x q1)(1 - x q2)(1 - x^{-1} q1 q2) / (1 - x)` for a monomial `x` in a context that
/// starts with `q1, q2`.
pub fn zeta(vars: &Vars, x: &Monomial) -> Result<RatFunc, ShuffleError> {
    if x.is_one() {
        return Err(ShuffleError::ZetaPole);
    }
    let q1 = Monomial::var(0, 1);
    let q2 = Monomial::var(1, 1);
    let q12 = q1.mul(&q2);
    let mut r = RatFunc::binomial(vars, &x.mul(&q1), 1);
    for m in [x.mul(&q2), x.inv().mul(&q12)] {
        r = &r * &RatFunc::binomial(vars, &m, 1);
    }
    Ok(&r * &RatFunc::binomial(vars, x, -1))
}

/// Numerator of the kernel at `x`, as a polynomial.
fn zeta_numerator(p: &LaurentPoly, x: &Monomial) -> LaurentPoly {
    let q1 = Monomial::var(0, 1);
    let q2 = Monomial::var(1, 1);
    p.mul_one_minus(&x.mul(&q1)).mul_one_minus(&x.mul(&q2)).mul_one_minus(&x.inv().mul(&q1).mul(&q2))
}

/// Shift `z_i -> z_{i+k}`.
fn shift_z(p: &LaurentPoly, n: usize, k: usize, total: usize) -> LaurentPoly {
    let map: Vec<usize> = (0..zpos(n) + 1).map(|i| if i < 2 { i } else { i + k }).collect();
    p.relabel(&map, &Vars::shuffle(total))
}

/// The star product, summed over the shuffles of the two blocks of variables.
pub fn shuffle_mul(a: &ShuffleElement, b: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    let (n, n2) = (a.n(), b.n());
    let total = n + n2;
    let vars = Vars::shuffle(total);
    if a.is_zero() || b.is_zero() {
        return Ok(ShuffleElement::zero(total));
    }
    let qv = Vars::q();
    let scalar_of = |e: &ShuffleElement| {
        let v = e.value();
        let num = RatFunc::one(&qv);
        let den = e.value().denominator().with_vars(&qv);
        (&num * &RatFunc::from_poly(den).inv().expect("nonzero"), v.numerator())
    };
    let (sa, pa) = scalar_of(a);
    let (sb, pb) = scalar_of(b);
    let scalar = (&sa * &sb).with_vars(&vars);
    let mut p = &pa.with_vars(&vars) * &shift_z(&pb, n2, n, total);
    if n == 0 || n2 == 0 {
        return ShuffleElement::new(total, &RatFunc::from_poly(p) * &scalar);
    }
    // P = a(z_A) b(z_B) prod_{cross} zeta numerators * V_A * V_B
    for i in 1..=n {
        for j in n + 1..=total {
            p = zeta_numerator(&p, &zratio(i, j));
        }
    }
    for (lo, hi) in [(1, n), (n + 1, total)] {
        for i in lo..=hi {
            for j in i + 1..=hi {
                p = p.mul_one_minus(&zratio(i, j));
            }
        }
    }
    let poly = sym_over_vandermonde(&p, total, &[n, n2]);
    ShuffleElement::new(total, &RatFunc::from_poly(poly) * &scalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::shuffle::symmetrize;

    fn one_minus_q2() -> ShuffleElement {
        let v = Vars::shuffle(1);
        ShuffleElement::from_poly(1, LaurentPoly::one_minus(&v, &Monomial::var(1, 1))).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let x = one_minus_q2();
        assert_eq!(shuffle_mul(&ShuffleElement::unit(), &x).unwrap(), x);
        assert_eq!(shuffle_mul(&x, &ShuffleElement::unit()).unwrap(), x);
    }

    #[test]
    fn square_matches_kernel_symmetrization() {
        let x = one_minus_q2();
        let sq = shuffle_mul(&x, &x).unwrap();
        let v = Vars::shuffle(2);
        let k = &zeta(&v, &zratio(1, 2)).unwrap() * &RatFunc::binomial(&v, &Monomial::var(1, 1), 2);
        let direct = symmetrize(&k).unwrap();
        assert_eq!(sq, direct);
        let generic = crate::shuffle::symmetrize_generic(&k).unwrap();
        assert_eq!(sq, generic);
        assert!(sq.is_symmetric());
    }

    #[test]
    fn zeta_product_evaluates_pointwise() {
        let v = Vars::shuffle(2);
        let a = zeta(&v, &zratio(1, 2)).unwrap();
        let b = zeta(&v, &zratio(2, 1)).unwrap();
        let pt: Vec<Rational> = [2, 3, 5, 7].iter().map(|&x| Rational::from(x)).collect();
        let direct = |x: Rational| {
            let (q1, q2) = (pt[0].clone(), pt[1].clone());
            let one = Rational::one();
            (&one - &(&x * &q1)) * (&one - &(&x * &q2)) * (&one - &(&(&q1 * &q2) / &x)) / (&one - &x)
        };
        let x = &pt[2] / &pt[3];
        let expected = direct(x.clone()) * direct(x.recip());
        assert_eq!((&a * &b).eval(&pt).unwrap(), expected);
        assert!(zeta(&v, &Monomial::one()).is_err());
    }
}

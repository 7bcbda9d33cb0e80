//! Randomized property suites over the arithmetic core.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Vars};

#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn vars() -> Vars {
    Vars::new(["q1", "q2", "z1"])
}

fn rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-6..=6i64), rng.gen_range(1..=4i64))
}

fn monomial(rng: &mut impl Rng) -> Monomial {
    Monomial::from_exps(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2)])
}

pub(crate) fn random_poly(rng: &mut impl Rng, max_terms: usize) -> LaurentPoly {
    let k = rng.gen_range(1..=max_terms);
    LaurentPoly::from_terms(&vars(), (0..k).map(|_| (monomial(rng), rational(rng))).collect::<Vec<_>>())
}

fn nonzero_poly(rng: &mut impl Rng, max_terms: usize) -> LaurentPoly {
    loop {
        let p = random_poly(rng, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random rational function: a polynomial over a product of binomials `1 - m`, sometimes
/// with a general polynomial denominator as well.
pub(crate) fn random_ratfunc(rng: &mut impl Rng) -> RatFunc {
    let v = vars();
    let mut f = RatFunc::from_poly(random_poly(rng, 3));
    for _ in 0..rng.gen_range(0..=2) {
        let m = loop {
            let m = monomial(rng);
            if !m.is_one() {
                break m;
            }
        };
        f = f.try_mul(&RatFunc::binomial(&v, &m, -1)).expect("same variables");
    }
    if rng.gen_bool(0.2) {
        let d = nonzero_poly(rng, 2);
        f = f.try_div(&RatFunc::from_poly(d)).expect("nonzero");
    }
    f
}

fn random_point(rng: &mut impl Rng) -> Vec<Rational> {
    (0..3).map(|_| Rational::new(rng.gen_range(2..30i64), rng.gen_range(1..9i64))).collect()
}

/// Ring axioms for `RatFunc`, plus evaluation being a ring homomorphism.
pub fn ring_axiom_suite(cases: usize, seed: u64) -> PropertyOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let one = RatFunc::one(&vars());
    for case in 0..cases {
        let (a, b, c) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng), random_ratfunc(&mut rng));
        let add = |x: &RatFunc, y: &RatFunc| x.try_add(y).unwrap();
        let mul = |x: &RatFunc, y: &RatFunc| x.try_mul(y).unwrap();
        let mut bad = |what: &str| failures.push(format!("case {case}: {what} for a = {}, b = {}, c = {}", a.to_text(), b.to_text(), c.to_text()));
        if add(&a, &b) != add(&b, &a) {
            bad("a + b = b + a");
        }
        if add(&add(&a, &b), &c) != add(&a, &add(&b, &c)) {
            bad("(a + b) + c = a + (b + c)");
        }
        if mul(&a, &b) != mul(&b, &a) {
            bad("ab = ba");
        }
        if mul(&mul(&a, &b), &c) != mul(&a, &mul(&b, &c)) {
            bad("(ab)c = a(bc)");
        }
        if mul(&a, &add(&b, &c)) != add(&mul(&a, &b), &mul(&a, &c)) {
            bad("a(b + c) = ab + ac");
        }
        if !a.try_sub(&a).unwrap().is_zero() || mul(&a, &one) != a {
            bad("a - a = 0 and a * 1 = a");
        }
        if !a.is_zero() && !mul(&a, &a.inv().unwrap()).is_one() {
            bad("a * a^-1 = 1");
        }
        let p = random_point(&mut rng);
        if let (Ok(ea), Ok(eb), Ok(eab), Ok(esum)) = (a.eval(&p), b.eval(&p), mul(&a, &b).eval(&p), add(&a, &b).eval(&p)) {
            if eab != &ea * &eb || esum != &ea + &eb {
                bad("evaluation is a ring homomorphism");
            }
        }
    }
    PropertyOutcome { name: "ring axioms", cases, failures }
}

/// `exact_div(a b, b) = a`, and any returned quotient multiplies back.
pub fn exact_div_suite(cases: usize, seed: u64) -> PropertyOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let a = random_poly(&mut rng, 4);
        let b = nonzero_poly(&mut rng, 3);
        let ab = a.try_mul(&b).unwrap();
        match ab.exact_div(&b) {
            Some(q) if q == a => {}
            other => failures.push(format!("case {case}: ({}) * ({}) / ({}) gave {:?}", a.to_text(), b.to_text(), b.to_text(), other.map(|q| q.to_text()))),
        }
        let c = random_poly(&mut rng, 3);
        if let Some(q) = c.exact_div(&b) {
            if q.try_mul(&b).unwrap() != c {
                failures.push(format!("case {case}: quotient of ({}) by ({}) does not multiply back", c.to_text(), b.to_text()));
            }
        }
    }
    PropertyOutcome { name: "exact_div", cases, failures }
}

/// `normalize` is idempotent and value preserving.
pub fn normalize_suite(cases: usize, seed: u64) -> PropertyOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let a = random_ratfunc(&mut rng).try_add(&random_ratfunc(&mut rng)).unwrap();
        let n1 = a.normalize();
        let n2 = n1.normalize();
        if n1.to_text() != n2.to_text() || n1 != a {
            failures.push(format!("case {case}: {}", a.to_text()));
        }
    }
    PropertyOutcome { name: "normalize", cases, failures }
}

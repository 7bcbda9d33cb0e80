use std::collections::HashMap;
use std::sync::Mutex;

use num_integer::Integer;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Vars};

use super::{symmetrize, zpos, zratio, ShuffleElement, ShuffleError};

/// Slope data `(m, n)` with multiplicity `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeParams {
    pub m: i64,
    pub n: usize,
    pub d: usize,
}

impl SlopeParams {
    pub fn new(m: i64, n: usize, d: usize) -> Result<Self, ShuffleError> {
        let p = SlopeParams { m, n, d };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<(), ShuffleError> {
        if self.n == 0 || self.d == 0 {
            return Err(ShuffleError::InvalidParams("n and d must be positive".into()));
        }
        if Integer::gcd(&self.m, &(self.n as i64)) != 1 {
            return Err(ShuffleError::NonCoprime { m: self.m, n: self.n as i64 });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Presentation {
    A,
    B,
}

/// `floor(m i / n) - floor(m (i-1) / n)` for `i = 1..=count`.
pub fn floor_steps(m: i64, n: usize, count: usize) -> Vec<i32> {
    let n = n as i64;
    (1..=count as i64).map(|i| (Integer::div_floor(&(m * i), &n) - Integer::div_floor(&(m * (i - 1)), &n)) as i32).collect()
}

/// `ceil(m i / n) - ceil(m (i-1) / n)` for `i = 1..=count`.
pub fn ceil_steps(m: i64, n: usize, count: usize) -> Vec<i32> {
    let n = n as i64;
    (1..=count as i64).map(|i| (Integer::div_ceil(&(m * i), &n) - Integer::div_ceil(&(m * (i - 1)), &n)) as i32).collect()
}

static MEMO: Lazy<Mutex<HashMap<String, ShuffleElement>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Drops every memoized generator value.
pub fn clear_memo() {
    MEMO.lock().unwrap().clear();
}

fn memoized(key: String, f: impl FnOnce() -> Result<ShuffleElement, ShuffleError>) -> Result<ShuffleElement, ShuffleError> {
    if let Some(v) = MEMO.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = f()?;
    MEMO.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn integral(name: &str, e: ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    if e.is_integral() {
        Ok(e)
    } else {
        Err(ShuffleError::NotIntegral(format!("{name}: {}", e.to_text())))
    }
}

fn q1() -> Monomial {
    Monomial::var(0, 1)
}

fn q2() -> Monomial {
    Monomial::var(1, 1)
}

fn qq(a: i32, b: i32) -> Monomial {
    Monomial::from_exps(&[a, b])
}

fn zmono(exps: &[i32]) -> Monomial {
    let mut e = vec![0; zpos(exps.len()) + 1];
    for (i, &x) in exps.iter().enumerate() {
        e[zpos(i + 1)] = x;
    }
    Monomial::from_exps(&e)
}

struct Integrand {
    vars: Vars,
    value: RatFunc,
}

impl Integrand {
    fn new(n: usize) -> Self {
        let vars = Vars::shuffle(n);
        Integrand { value: RatFunc::one(&vars), vars }
    }

    fn binom(&mut self, m: &Monomial, k: i32) -> &mut Self {
        self.value = &self.value * &RatFunc::binomial(&self.vars, m, k);
        self
    }

    fn mono(&mut self, m: Monomial, c: Rational) -> &mut Self {
        self.value = &self.value * &RatFunc::monomial(&self.vars, m, c);
        self
    }

    fn poly(&mut self, p: LaurentPoly) -> &mut Self {
        self.value = &self.value * &RatFunc::from_poly(p);
        self
    }

    /// `prod_{i<j} zeta(z_i / z_j)`.
    fn kernel(&mut self, n: usize) -> &mut Self {
        for i in 1..=n {
            for j in i + 1..=n {
                let x = zratio(i, j);
                self.binom(&x.mul(&q1()), 1).binom(&x.mul(&q2()), 1).binom(&x.inv().mul(&qq(1, 1)), 1).binom(&x, -1);
            }
        }
        self
    }

    /// `prod_{i=1}^{n-1} 1 / (1 - z_{i+1} q1 q2 / z_i)`.
    fn chain(&mut self, n: usize) -> &mut Self {
        for i in 1..n {
            self.binom(&zratio(i + 1, i).mul(&qq(1, 1)), -1);
        }
        self
    }

    fn sym(&self) -> Result<ShuffleElement, ShuffleError> {
        symmetrize(&self.value)
    }
}

/// The element with z-exponents `floor(m i/n) - floor(m(i-1)/n)`.
#[allow(non_snake_case)]
pub fn gen_H(m: i64, n: usize) -> Result<ShuffleElement, ShuffleError> {
    if n == 0 {
        return Err(ShuffleError::InvalidParams("n must be positive".into()));
    }
    memoized(format!("H:{m}:{n}"), || {
        let mut f = Integrand::new(n);
        f.binom(&q1(), n as i32 - 1).binom(&q2(), n as i32);
        f.mono(zmono(&floor_steps(m, n, n)), Rational::one()).chain(n).kernel(n);
        integral("H", f.sym()?)
    })
}

/// The primed element, with ceilings and kernel denominators `(1 - z_i q1 / z_{i+1})`.
#[allow(non_snake_case)]
pub fn gen_Hprime(m: i64, n: usize) -> Result<ShuffleElement, ShuffleError> {
    if n == 0 {
        return Err(ShuffleError::InvalidParams("n must be positive".into()));
    }
    memoized(format!("Hprime:{m}:{n}"), || {
        let mut f = Integrand::new(n);
        f.binom(&qq(1, 1), n as i32 - 1).binom(&q2(), n as i32);
        f.mono(zmono(&ceil_steps(m, n, n)), Rational::one());
        for i in 1..n {
            f.binom(&zratio(i, i + 1).mul(&q1()), -1);
        }
        f.kernel(n);
        integral("Hprime", f.sym()?)
    })
}

#[allow(non_snake_case)]
pub fn gen_Sbar(p: SlopeParams, presentation: Presentation) -> Result<ShuffleElement, ShuffleError> {
    p.check()?;
    let SlopeParams { m, n, d } = p;
    let big = n * d;
    memoized(format!("Sbar:{m}:{n}:{d}:{presentation:?}"), || {
        let mut f = Integrand::new(big);
        f.mono(zmono(&floor_steps(m, n, big)), Rational::one());
        match presentation {
            Presentation::A => {
                f.binom(&q1(), big as i32).binom(&q2(), big as i32);
                for i in 1..=d {
                    f.binom(&q1().pow(i as i32), -1);
                }
                // q1^i - z_{ni+1} q1 q2 / z_{ni} = q1^i (1 - z_{ni+1} q1^{1-i} q2 / z_{ni})
                for i in 1..d {
                    let i32_ = i as i32;
                    f.mono(q1().pow(i32_), Rational::one());
                    f.binom(&zratio(n * i + 1, n * i).mul(&qq(1 - i32_, 1)), 1);
                }
                f.chain(big);
            }
            Presentation::B => {
                f.binom(&qq(-1, -1), big as i32).binom(&q2(), big as i32);
                for i in 1..=d {
                    f.binom(&qq(-(i as i32), -(i as i32)), -1);
                }
                // q1^-i q2^-i - z_{ni+1} / (z_{ni} q1) = q1^-i q2^-i (1 - z_{ni+1} q1^{i-1} q2^i / z_{ni})
                for i in 1..d {
                    let i32_ = i as i32;
                    f.mono(qq(-i32_, -i32_), Rational::one());
                    f.binom(&zratio(n * i + 1, n * i).mul(&qq(i32_ - 1, i32_)), 1);
                }
                for i in 1..big {
                    f.binom(&zratio(i + 1, i).mul(&qq(-1, 0)), -1);
                }
            }
        }
        f.kernel(big);
        integral("Sbar", f.sym()?)
    })
}

#[allow(non_snake_case)]
pub fn gen_Pbar(p: SlopeParams) -> Result<ShuffleElement, ShuffleError> {
    p.check()?;
    let SlopeParams { m, n, d } = p;
    let big = n * d;
    memoized(format!("Pbar:{m}:{n}:{d}"), || {
        let vars = Vars::shuffle(big);
        let mut f = Integrand::new(big);
        f.binom(&q1(), big as i32).binom(&q2(), big as i32).binom(&q1().pow(d as i32), -1);
        f.mono(zmono(&floor_steps(m, n, big)), Rational::one());
        let mut sum = LaurentPoly::zero(&vars);
        for i in 0..d {
            let mut t = qq(i as i32, i as i32);
            for k in d - i..d {
                t = t.mul(&zratio(n * k + 1, n * k));
            }
            sum.add_term(t, &Rational::one());
        }
        f.poly(sum).chain(big).kernel(big);
        integral("Pbar", f.sym()?)
    })
}

/// The element with arbitrary z-exponents `d_1..d_n`.
#[allow(non_snake_case)]
pub fn gen_R(dvec: &[i32]) -> Result<ShuffleElement, ShuffleError> {
    let n = dvec.len();
    if n == 0 {
        return Err(ShuffleError::InvalidParams("exponent vector must be nonempty".into()));
    }
    let key = format!("R:{}", dvec.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    memoized(key, || {
        let mut f = Integrand::new(n);
        f.binom(&q1(), n as i32 - 1).binom(&q2(), n as i32);
        f.mono(zmono(dvec), Rational::one()).chain(n).kernel(n);
        integral("R", f.sym()?)
    })
}

/// Ribbon element for a sign sequence (`true` = `+`, `false` = `-`) of length `d - 1`.
pub fn gen_ribbon(m: i64, n: usize, eps: &[bool]) -> Result<ShuffleElement, ShuffleError> {
    let d = eps.len() + 1;
    SlopeParams::new(m, n, d)?;
    let big = n * d;
    let key = format!("ribbon:{m}:{n}:{}", eps.iter().map(|&e| if e { '+' } else { '-' }).collect::<String>());
    memoized(key, || {
        let mut f = Integrand::new(big);
        f.binom(&q1(), big as i32).binom(&q2(), big as i32);
        f.mono(zmono(&floor_steps(m, n, big)), Rational::one());
        for (idx, &plus) in eps.iter().enumerate() {
            if !plus {
                let i = idx + 1;
                f.mono(zratio(n * i + 1, n * i).mul(&qq(1, 1)), -Rational::one());
            }
        }
        f.chain(big).kernel(big);
        integral("ribbon", f.sym()?)
    })
}

/// `prod_{1 <= i, j <= n} (1 - z_i q2 / z_j)`.
pub fn mat_substack_class(n: usize) -> Result<ShuffleElement, ShuffleError> {
    if n == 0 {
        return Err(ShuffleError::InvalidParams("n must be positive".into()));
    }
    let vars = Vars::shuffle(n);
    let mut p = LaurentPoly::one(&vars);
    for i in 1..=n {
        for j in 1..=n {
            p = p.mul_one_minus(&Monomial::var(zpos(i), 1).mul(&Monomial::var(zpos(j), -1)).mul(&q2()));
        }
    }
    ShuffleElement::from_poly(n, p)
}

/// `Sym[R(z) / prod_{i<j} (1 - z_i/z_j)]` for `R` over `[q1, q2, L1..Ln]`.
pub fn flag_pushforward(r: &RatFunc) -> Result<ShuffleElement, ShuffleError> {
    let n = r.vars().len().checked_sub(2).ok_or(ShuffleError::Context)?;
    if r.vars() != &Vars::flag(n) {
        return Err(ShuffleError::Context);
    }
    let vars = Vars::shuffle(n);
    let mut f = r.with_vars(&vars);
    for i in 1..=n {
        for j in i + 1..=n {
            f = &f * &RatFunc::binomial(&vars, &zratio(i, j), -1);
        }
    }
    symmetrize(&f)
}

/// The Koszul-factor integrand on the flag variety, pushed forward.
pub fn eccentric_pushforward(m: i64, n: usize) -> Result<ShuffleElement, ShuffleError> {
    if n == 0 {
        return Err(ShuffleError::InvalidParams("n must be positive".into()));
    }
    memoized(format!("eccentric:{m}:{n}"), || {
        let vars = Vars::flag(n);
        let l = |i: usize, j: usize| zratio(i, j);
        let mut r = RatFunc::monomial(&vars, zmono(&ceil_steps(m, n, n)), Rational::one());
        let mut mul = |m: &Monomial, k: i32| r = &r * &RatFunc::binomial(&vars, m, k);
        mul(&qq(1, 1), n as i32 - 1);
        mul(&q2(), n as i32);
        for i in 1..=n {
            for j in i + 1..=n {
                mul(&l(j, i).mul(&qq(1, 1)), 1);
                mul(&l(i, j).mul(&q2()), 1);
                if j > i + 1 {
                    mul(&l(i, j).mul(&q1()), 1);
                }
            }
        }
        flag_pushforward(&r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus_q2(n: usize) -> ShuffleElement {
        ShuffleElement::from_poly(n, LaurentPoly::one_minus(&Vars::shuffle(n), &q2())).unwrap()
    }

    #[test]
    fn steps() {
        assert_eq!(floor_steps(1, 2, 2), vec![0, 1]);
        assert_eq!(ceil_steps(1, 2, 2), vec![1, 0]);
        assert_eq!(floor_steps(-1, 2, 2), vec![-1, 0]);
        assert_eq!(floor_steps(1, 1, 3), vec![1, 1, 1]);
    }

    #[test]
    fn n_equals_one() {
        assert_eq!(gen_H(0, 1).unwrap(), one_minus_q2(1));
        assert_eq!(gen_Hprime(0, 1).unwrap(), one_minus_q2(1));
        assert_eq!(gen_Sbar(SlopeParams::new(0, 1, 1).unwrap(), Presentation::A).unwrap(), one_minus_q2(1));
        assert_eq!(gen_Pbar(SlopeParams::new(0, 1, 1).unwrap()).unwrap(), one_minus_q2(1));
        assert_eq!(mat_substack_class(1).unwrap(), one_minus_q2(1));
        let h3 = gen_H(3, 1).unwrap();
        let z3 = LaurentPoly::one_minus(&Vars::shuffle(1), &q2()).mul_monomial(&zmono(&[3]));
        assert_eq!(h3, ShuffleElement::from_poly(1, z3).unwrap());
        assert_eq!(gen_R(&[3]).unwrap(), h3);
    }

    #[test]
    fn coprimality_is_enforced() {
        assert!(matches!(SlopeParams::new(2, 4, 1), Err(ShuffleError::NonCoprime { .. })));
        assert!(gen_ribbon(2, 2, &[true]).is_err());
    }

    #[test]
    fn h_and_hprime() {
        let h = gen_H(1, 2).unwrap();
        let hp = gen_Hprime(1, 2).unwrap();
        // the power of q2 sits on the unprimed side
        let q2 = RatFunc::monomial(&Vars::q(), q2(), Rational::one());
        assert_eq!(hp, h.scale(&q2));
        assert_ne!(h, hp.scale(&q2));
        assert!(h.is_symmetric());
    }

    #[test]
    fn pushforward_of_one() {
        let one = RatFunc::one(&Vars::flag(2));
        assert_eq!(flag_pushforward(&one).unwrap(), ShuffleElement::from_poly(2, LaurentPoly::one(&Vars::shuffle(2))).unwrap());
    }
}

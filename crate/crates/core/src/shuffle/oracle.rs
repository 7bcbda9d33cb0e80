//! Pointwise evaluation of the symmetrization formulas, summing the integrand over all
//! permutations at a rational point. Shares no code with the symbolic path beyond
//! rational arithmetic.

use rand::Rng;

use crate::arith::Rational;

use super::{ceil_steps, floor_steps, permutations, Presentation, ShuffleElement, SlopeParams};

/// Evaluation point `(q1, q2, z_1..z_n)`.
#[derive(Clone, Debug)]
pub struct Point {
    pub q1: Rational,
    pub q2: Rational,
    pub z: Vec<Rational>,
}

impl Point {
    pub fn as_vec(&self) -> Vec<Rational> {
        let mut v = vec![self.q1.clone(), self.q2.clone()];
        v.extend(self.z.iter().cloned());
        v
    }

    fn permuted(&self, perm: &[usize]) -> Vec<Rational> {
        perm.iter().map(|&i| self.z[i].clone()).collect()
    }
}

fn r(x: i64) -> Rational {
    Rational::from(x)
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(2..40i64);
    let den = rng.gen_range(1..12i64);
    let v = Rational::new(num, den);
    if rng.gen_bool(0.3) {
        -v
    } else {
        v
    }
}

/// A random point whose coordinates are pairwise distinct and avoid `0` and `±1`.
pub fn random_point(rng: &mut impl Rng, n: usize) -> Point {
    loop {
        let vals: Vec<Rational> = (0..n + 2).map(|_| small_rational(rng)).collect();
        let mut ok = true;
        for i in 0..vals.len() {
            if vals[i].abs().is_one() {
                ok = false;
            }
            for j in i + 1..vals.len() {
                if vals[i] == vals[j] {
                    ok = false;
                }
            }
        }
        if ok {
            return Point { q1: vals[0].clone(), q2: vals[1].clone(), z: vals[2..].to_vec() };
        }
    }
}

fn div(a: &Rational, b: &Rational) -> Option<Rational> {
    if b.is_zero() {
        None
    } else {
        Some(a / b)
    }
}

pub fn zeta_value(x: &Rational, q1: &Rational, q2: &Rational) -> Option<Rational> {
    let one = Rational::one();
    let num = (&one - &(x * q1)) * (&one - &(x * q2)) * (&one - &div(&(q1 * q2), x)?);
    div(&num, &(&one - x))
}

fn kernel(z: &[Rational], q1: &Rational, q2: &Rational) -> Option<Rational> {
    let mut acc = Rational::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            acc = &acc * &zeta_value(&div(&z[i], &z[j])?, q1, q2)?;
        }
    }
    Some(acc)
}

fn zpow(z: &[Rational], exps: &[i32]) -> Rational {
    z.iter().zip(exps).fold(Rational::one(), |acc, (x, &e)| &acc * &x.pow(e))
}

/// `sum_{s in S_n} f(z_{s(1)}, ..., z_{s(n)})`; `None` if some term hits a pole.
pub fn sym_value(p: &Point, f: &dyn Fn(&[Rational], &Rational, &Rational) -> Option<Rational>) -> Option<Rational> {
    let mut total = Rational::zero();
    for perm in permutations(p.z.len()) {
        total = &total + &f(&p.permuted(&perm), &p.q1, &p.q2)?;
    }
    Some(total)
}

fn one_minus(x: Rational) -> Rational {
    &Rational::one() - &x
}

/// `prod_{i=1}^{n-1} (1 - z_{i+1} q1 q2 / z_i)`.
fn chain_den(z: &[Rational], q1: &Rational, q2: &Rational) -> Option<Rational> {
    let mut acc = Rational::one();
    for i in 0..z.len().saturating_sub(1) {
        acc = &acc * &one_minus(div(&(&(&z[i + 1] * q1) * q2), &z[i])?);
    }
    Some(acc)
}

#[allow(non_snake_case)]
pub fn gen_H_value(m: i64, n: usize, p: &Point) -> Option<Rational> {
    let a = floor_steps(m, n, n);
    let pre = one_minus(p.q1.clone()).pow(n as i32 - 1) * one_minus(p.q2.clone()).pow(n as i32);
    let s = sym_value(p, &|z, q1, q2| div(&(&zpow(z, &a) * &kernel(z, q1, q2)?), &chain_den(z, q1, q2)?))?;
    Some(pre * s)
}

#[allow(non_snake_case)]
pub fn gen_Hprime_value(m: i64, n: usize, p: &Point) -> Option<Rational> {
    let a = ceil_steps(m, n, n);
    let pre = one_minus(&p.q1 * &p.q2).pow(n as i32 - 1) * one_minus(p.q2.clone()).pow(n as i32);
    let s = sym_value(p, &|z, q1, q2| {
        let mut den = Rational::one();
        for i in 0..n - 1 {
            den = &den * &one_minus(div(&(&z[i] * q1), &z[i + 1])?);
        }
        div(&(&zpow(z, &a) * &kernel(z, q1, q2)?), &den)
    })?;
    Some(pre * s)
}

#[allow(non_snake_case)]
pub fn gen_R_value(dvec: &[i32], p: &Point) -> Option<Rational> {
    let n = dvec.len();
    let pre = one_minus(p.q1.clone()).pow(n as i32 - 1) * one_minus(p.q2.clone()).pow(n as i32);
    let s = sym_value(p, &|z, q1, q2| div(&(&zpow(z, dvec) * &kernel(z, q1, q2)?), &chain_den(z, q1, q2)?))?;
    Some(pre * s)
}

#[allow(non_snake_case)]
pub fn gen_Sbar_value(sp: SlopeParams, pres: Presentation, p: &Point) -> Option<Rational> {
    let SlopeParams { m, n, d } = sp;
    let big = n * d;
    let a = floor_steps(m, n, big);
    let (q1, q2) = (&p.q1, &p.q2);
    let s = match pres {
        Presentation::A => {
            let mut pre = one_minus(q1.clone()).pow(big as i32) * one_minus(q2.clone()).pow(big as i32);
            for i in 1..=d {
                pre = div(&pre, &one_minus(q1.pow(i as i32)))?;
            }
            let body = sym_value(p, &|z, q1, q2| {
                let mut num = &zpow(z, &a) * &kernel(z, q1, q2)?;
                for i in 1..d {
                    let t = &q1.pow(i as i32) - &div(&(&(&z[n * i] * q1) * q2), &z[n * i - 1])?;
                    num = &num * &t;
                }
                div(&num, &chain_den(z, q1, q2)?)
            })?;
            pre * body
        }
        Presentation::B => {
            let q12inv = (q1 * q2).recip();
            let mut pre = one_minus(q12inv.clone()).pow(big as i32) * one_minus(q2.clone()).pow(big as i32);
            for i in 1..=d {
                pre = div(&pre, &one_minus(q12inv.pow(i as i32)))?;
            }
            let body = sym_value(p, &|z, q1, q2| {
                let q12inv = (q1 * q2).recip();
                let mut num = &zpow(z, &a) * &kernel(z, q1, q2)?;
                for i in 1..d {
                    let t = &q12inv.pow(i as i32) - &div(&z[n * i], &(&z[n * i - 1] * q1))?;
                    num = &num * &t;
                }
                let mut den = Rational::one();
                for i in 0..big - 1 {
                    den = &den * &one_minus(div(&z[i + 1], &(&z[i] * q1))?);
                }
                div(&num, &den)
            })?;
            pre * body
        }
    };
    Some(s)
}

#[allow(non_snake_case)]
pub fn gen_Pbar_value(sp: SlopeParams, p: &Point) -> Option<Rational> {
    let SlopeParams { m, n, d } = sp;
    let big = n * d;
    let a = floor_steps(m, n, big);
    let (q1, q2) = (&p.q1, &p.q2);
    let pre = div(&(one_minus(q1.clone()).pow(big as i32) * one_minus(q2.clone()).pow(big as i32)), &one_minus(q1.pow(d as i32)))?;
    let body = sym_value(p, &|z, q1, q2| {
        let mut sum = Rational::zero();
        for i in 0..d {
            let mut t = (q1 * q2).pow(i as i32);
            for k in d - i..d {
                t = &t * &div(&z[n * k], &z[n * k - 1])?;
            }
            sum = &sum + &t;
        }
        div(&(&(&zpow(z, &a) * &sum) * &kernel(z, q1, q2)?), &chain_den(z, q1, q2)?)
    })?;
    Some(pre * body)
}

pub fn gen_ribbon_value(m: i64, n: usize, eps: &[bool], p: &Point) -> Option<Rational> {
    let d = eps.len() + 1;
    let big = n * d;
    let a = floor_steps(m, n, big);
    let pre = one_minus(p.q1.clone()).pow(big as i32) * one_minus(p.q2.clone()).pow(big as i32);
    let body = sym_value(p, &|z, q1, q2| {
        let mut num = &zpow(z, &a) * &kernel(z, q1, q2)?;
        for (idx, &plus) in eps.iter().enumerate() {
            if !plus {
                let i = idx + 1;
                num = -(&num * &div(&(&(&z[n * i] * q1) * q2), &z[n * i - 1])?);
            }
        }
        div(&num, &chain_den(z, q1, q2)?)
    })?;
    Some(pre * body)
}

pub fn mat_substack_value(p: &Point) -> Option<Rational> {
    let mut acc = Rational::one();
    for zi in &p.z {
        for zj in &p.z {
            acc = &acc * &one_minus(&div(zi, zj)? * &p.q2);
        }
    }
    Some(acc)
}

pub fn eccentric_value(m: i64, n: usize, p: &Point) -> Option<Rational> {
    let a = ceil_steps(m, n, n);
    sym_value(p, &|l, q1, q2| {
        let mut num = zpow(l, &a) * one_minus(q1 * q2).pow(n as i32 - 1) * one_minus(q2.clone()).pow(n as i32);
        let mut den = Rational::one();
        for i in 0..n {
            for j in i + 1..n {
                num = &num * &one_minus(&div(&l[j], &l[i])? * &(q1 * q2));
                num = &num * &one_minus(&div(&l[i], &l[j])? * q2);
                if j > i + 1 {
                    num = &num * &one_minus(&div(&l[i], &l[j])? * q1);
                }
                den = &den * &one_minus(div(&l[i], &l[j])?);
            }
        }
        div(&num, &den)
    })
}

/// `Sym[a(z_A) b(z_B) prod zeta(z_i/z_j)] / (n! n'!)` at a point.
pub fn shuffle_mul_value(a: &ShuffleElement, b: &ShuffleElement, p: &Point) -> Option<Rational> {
    let (n, n2) = (a.n(), b.n());
    let fact = |k: usize| (1..=k as i64).fold(r(1), |acc, x| &acc * &r(x));
    let body = sym_value(p, &|z, q1, q2| {
        let mut pa = vec![q1.clone(), q2.clone()];
        pa.extend(z[..n].iter().cloned());
        let mut pb = vec![q1.clone(), q2.clone()];
        pb.extend(z[n..].iter().cloned());
        let mut v = &a.eval(&pa).ok()? * &b.eval(&pb).ok()?;
        for i in 0..n {
            for j in n..n + n2 {
                v = &v * &zeta_value(&div(&z[i], &z[j])?, q1, q2)?;
            }
        }
        Some(v)
    })?;
    div(&body, &(&fact(n) * &fact(n2)))
}

/// The same value as [`shuffle_mul_value`] when `a` and `b` are symmetric: the sum runs over
/// the subsets `A` of size `a.n()` instead of all permutations.
pub fn shuffle_mul_value_symmetric(a: &ShuffleElement, b: &ShuffleElement, p: &Point) -> Option<Rational> {
    let (n, n2) = (a.n(), b.n());
    let total = n + n2;
    let mut sum = r(0);
    for mask in 0u64..1 << total {
        if mask.count_ones() as usize != n {
            continue;
        }
        let (ia, ib): (Vec<usize>, Vec<usize>) = (0..total).partition(|&i| mask >> i & 1 == 1);
        let mut pa = vec![p.q1.clone(), p.q2.clone()];
        pa.extend(ia.iter().map(|&i| p.z[i].clone()));
        let mut pb = vec![p.q1.clone(), p.q2.clone()];
        pb.extend(ib.iter().map(|&i| p.z[i].clone()));
        let mut v = &a.eval(&pa).ok()? * &b.eval(&pb).ok()?;
        for &i in &ia {
            for &j in &ib {
                v = &v * &zeta_value(&div(&p.z[i], &p.z[j])?, &p.q1, &p.q2)?;
            }
        }
        sum += &v;
    }
    Some(sum)
}

/// Try up to `tries` random points until one avoids every pole, returning the oracle value
/// and the symbolic value there.
pub fn compare_at_random_point(rng: &mut impl Rng, element: &ShuffleElement, oracle: &dyn Fn(&Point) -> Option<Rational>) -> Option<(Rational, Rational)> {
    for _ in 0..50 {
        let p = random_point(rng, element.n());
        if let (Some(o), Ok(s)) = (oracle(&p), element.eval(&p.as_vec())) {
            return Some((o, s));
        }
    }
    None
}

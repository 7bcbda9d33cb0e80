//! Symmetrization of integrands of the form `P / prod_{i<j} (1 - z_i/z_j)`.
//!
//! With `M = prod_j z_j^{j-1}` and `D = prod_{i<j} (z_j - z_i)` one has
//! `prod_{i<j} (1 - z_i/z_j) = D / M`, so `Sym[P / V] = (sum_s sgn(s) s(P M)) / D`.
//! The antisymmetric numerator is determined by its coefficients at strictly decreasing
//! exponent vectors, and dividing `a_lambda` by `D` gives a Schur polynomial up to sign.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::arith::{accum_add, Accum, LaurentPoly, Monomial, RatFunc, Rational, Vars};

use super::{ShuffleElement, ShuffleError};

pub(crate) type Exps = SmallVec<[i32; 8]>;

/// Position of `z_i` (1-based) inside a shuffle context.
pub(crate) fn zpos(i: usize) -> usize {
    i + 1
}

/// `prod_j z_j^{j-1}`.
fn vandermonde_shift(n: usize) -> Monomial {
    let mut e = vec![0; zpos(n) + 1];
    for j in 1..=n {
        e[zpos(j)] = (j - 1) as i32;
    }
    Monomial::from_exps(&e)
}

/// `z_i / z_j`.
pub(crate) fn zratio(i: usize, j: usize) -> Monomial {
    Monomial::var(zpos(i), 1).mul(&Monomial::var(zpos(j), -1))
}

fn z_exps(m: &Monomial, n: usize) -> Exps {
    (1..=n).map(|i| m.exp(zpos(i))).collect()
}

fn q_part(m: &Monomial) -> Monomial {
    Monomial::from_exps(&[m.exp(0), m.exp(1)])
}

/// Coefficients of `sum_tau sgn(tau) tau(f)` at strictly decreasing z-exponent vectors, with
/// `tau` running over minimal coset representatives of the Young subgroup of `blocks`.
/// Valid when `f` is antisymmetric under the Young subgroup (or `blocks` are singletons).
fn antisym_coefficients(f: &LaurentPoly, n: usize, blocks: &[usize]) -> FxHashMap<Exps, Accum> {
    let mut out: FxHashMap<Exps, Accum> = FxHashMap::default();
    let mut block_of = Vec::with_capacity(n);
    for (b, &len) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat(b).take(len));
    }
    'terms: for (m, c) in f.terms() {
        let e = z_exps(m, n);
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if e[i] == e[j] {
                    continue 'terms;
                }
                if e[i] < e[j] {
                    if block_of[i] == block_of[j] {
                        continue 'terms;
                    }
                    inversions += 1;
                }
            }
        }
        let mut lambda = e.clone();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        let c = if inversions % 2 == 1 { -c } else { c.clone() };
        accum_add(out.entry(lambda).or_default(), q_part(m), &c);
    }
    out.retain(|_, acc| {
        acc.retain(|_, c| !c.is_zero());
        !acc.is_empty()
    });
    out
}

type SchurTable = Arc<Vec<(Exps, u64)>>;

static SCHUR_CACHE: Lazy<Mutex<HashMap<Exps, SchurTable>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Schur polynomial `s_mu(z_1..z_n)` for weakly decreasing integers `mu`, as a list of
/// (exponent vector, multiplicity), by the branching rule over interlacing sequences.
pub fn schur_polynomial(mu: &[i32]) -> SchurTable {
    if let Some(t) = SCHUR_CACHE.lock().unwrap().get(mu) {
        return t.clone();
    }
    let n = mu.len();
    let table: Vec<(Exps, u64)> = if n == 0 {
        vec![(Exps::new(), 1)]
    } else if n == 1 {
        vec![(SmallVec::from_slice(mu), 1)]
    } else {
        let total: i64 = mu.iter().map(|&x| x as i64).sum();
        let mut acc: FxHashMap<Exps, u64> = FxHashMap::default();
        let mut nu: Exps = SmallVec::from_elem(0, n - 1);
        interlacing(mu, 0, &mut nu, &mut |nu| {
            let rest: i64 = nu.iter().map(|&x| x as i64).sum();
            let last = (total - rest) as i32;
            for (e, c) in schur_polynomial(nu).iter() {
                let mut full = e.clone();
                full.push(last);
                *acc.entry(full).or_insert(0) += c;
            }
        });
        let mut v: Vec<(Exps, u64)> = acc.into_iter().collect();
        v.sort();
        v
    };
    let table = Arc::new(table);
    SCHUR_CACHE.lock().unwrap().insert(SmallVec::from_slice(mu), table.clone());
    table
}

fn interlacing(mu: &[i32], k: usize, nu: &mut Exps, f: &mut dyn FnMut(&[i32])) {
    if k == nu.len() {
        f(nu);
        return;
    }
    for v in mu[k + 1]..=mu[k] {
        nu[k] = v;
        interlacing(mu, k + 1, nu, f);
    }
}

/// `Sym[P / prod_{i<j} (1 - z_i/z_j)]`, restricted to coset representatives of the Young
/// subgroup given by `blocks` (P must then be block-antisymmetric after multiplying by
/// `prod_j z_j^{j-1}`; see the shuffle product).
pub(crate) fn sym_over_vandermonde(p: &LaurentPoly, n: usize, blocks: &[usize]) -> LaurentPoly {
    let vars = Vars::shuffle(n);
    let pm = p.mul_monomial(&vandermonde_shift(n));
    let coeffs = antisym_coefficients(&pm, n, blocks);
    let sign_flip = (n * (n.saturating_sub(1)) / 2) % 2 == 1;
    let mut groups: Vec<(Exps, Accum)> = coeffs.into_iter().collect();
    groups.sort_by(|a, b| a.0.cmp(&b.0));
    let parts: Vec<Accum> = groups
        .par_iter()
        .map(|(lambda, qcoeffs)| {
            let mu: Exps = lambda.iter().enumerate().map(|(i, &l)| l - (n - 1 - i) as i32).collect();
            let table = schur_polynomial(&mu);
            let mut acc = Accum::default();
            for (e, mult) in table.iter() {
                let mut zm = vec![0; zpos(n) + 1];
                for (i, &x) in e.iter().enumerate() {
                    zm[zpos(i + 1)] = x;
                }
                let zm = Monomial::from_exps(&zm);
                let mult = Rational::from(*mult as i64);
                for (qm, c) in qcoeffs {
                    let c = if sign_flip { -(c * &mult) } else { c * &mult };
                    accum_add(&mut acc, zm.mul(qm), &c);
                }
            }
            acc
        })
        .collect();
    let mut total = Accum::default();
    for part in parts {
        for (m, c) in part {
            accum_add(&mut total, m, &c);
        }
    }
    LaurentPoly::from_terms(&vars, total)
}

/// Second route: form the full antisymmetrization and divide by the Vandermonde product
/// with exact binomial division. Used as a cross-check.
pub fn sym_over_vandermonde_by_division(p: &LaurentPoly, n: usize) -> Result<LaurentPoly, ShuffleError> {
    let vars = Vars::shuffle(n);
    let pm = p.mul_monomial(&vandermonde_shift(n));
    let mut acc = Accum::default();
    for perm in permutations(n) {
        let sign = perm_sign(&perm);
        let map: Vec<usize> = (0..zpos(n) + 1).map(|k| if k < 2 { k } else { zpos(perm[k - 2] + 1) }).collect();
        for (m, c) in pm.terms() {
            let c = if sign < 0 { -c } else { c.clone() };
            accum_add(&mut acc, m.relabel(&map), &c);
        }
    }
    let mut a = LaurentPoly::from_terms(&vars, acc).div_monomial(&vandermonde_shift(n));
    for i in 1..=n {
        for j in i + 1..=n {
            a = a.div_one_minus(&zratio(i, j)).ok_or(ShuffleError::ResidualDenominator)?;
        }
    }
    Ok(a)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn perm_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Variable relabeling for `z_i -> z_{perm[i-1]+1}` in a shuffle context.
pub(crate) fn z_relabel_map(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    (0..zpos(n) + 1).map(|k| if k < 2 { k } else { zpos(perm[k - 2] + 1) }).collect()
}

/// Split a rational function over `[q1, q2, z1..zn]` into a scalar in q, a polynomial
/// numerator, and the z-dependent denominator binomials.
struct Split {
    scalar: RatFunc,
    numerator: LaurentPoly,
    zden: Vec<(Monomial, u32)>,
}

fn split(f: &RatFunc) -> Option<Split> {
    let n = f.vars().len() - 2;
    if f.residual_den().map(|d| !d.only_below(2)).unwrap_or(false) {
        return None;
    }
    let mut scalar = RatFunc::constant(&Vars::q(), f.coeff().clone());
    if let Some(d) = f.residual_den() {
        scalar = &scalar * &RatFunc::from_poly(d.with_vars(&Vars::q())).inv().ok()?;
    }
    let mut numerator = f.residual().mul_monomial(f.unit());
    let mut zden = Vec::new();
    for (m, &k) in f.factors() {
        let touches_z = m.touches(2..zpos(n) + 1);
        if !touches_z {
            scalar = &scalar * &RatFunc::binomial(&Vars::q(), m, k);
        } else if k > 0 {
            for _ in 0..k {
                numerator = numerator.mul_one_minus(m);
            }
        } else {
            zden.push((m.clone(), (-k) as u32));
        }
    }
    Some(Split { scalar, numerator, zden })
}

/// `Sym` over all of `S_n` of a rational function in `[q1, q2, z1..zn]`. The fast path
/// applies when the z-denominators are distinct factors `(1 - z_i/z_j)`; anything else goes
/// through the generic permutation sum.
pub fn symmetrize(f: &RatFunc) -> Result<ShuffleElement, ShuffleError> {
    let n = f.vars().len().checked_sub(2).ok_or(ShuffleError::Context)?;
    if f.vars() != &Vars::shuffle(n) {
        return Err(ShuffleError::Context);
    }
    if f.is_zero() {
        return Ok(ShuffleElement::zero(n));
    }
    if let Some(sp) = split(f) {
        let mut pairs = Vec::new();
        let fast = sp.zden.iter().all(|(m, k)| {
            let pair = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).find(|&(i, j)| zratio(i, j) == *m);
            match pair {
                Some(p) if *k == 1 => {
                    pairs.push(p);
                    true
                }
                _ => false,
            }
        });
        if fast {
            let mut p = sp.numerator;
            for i in 1..=n {
                for j in i + 1..=n {
                    if !pairs.contains(&(i, j)) {
                        p = p.mul_one_minus(&zratio(i, j));
                    }
                }
            }
            let poly = sym_over_vandermonde(&p, n, &vec![1; n]);
            let value = &RatFunc::from_poly(poly) * &sp.scalar.with_vars(&Vars::shuffle(n));
            return ShuffleElement::new(n, value);
        }
    }
    symmetrize_generic(f)
}

/// Plain sum of `s(f)` over all permutations, in rational-function arithmetic.
pub fn symmetrize_generic(f: &RatFunc) -> Result<ShuffleElement, ShuffleError> {
    let n = f.vars().len().checked_sub(2).ok_or(ShuffleError::Context)?;
    let vars = Vars::shuffle(n);
    let mut total = RatFunc::zero(&vars);
    for perm in permutations(n) {
        total = &total + &f.relabel(&z_relabel_map(&perm), &vars);
    }
    let zdep = total.den_factors().iter().any(|(m, _)| m.touches(2..zpos(n) + 1)) || total.residual_den().map(|d| !d.only_below(2)).unwrap_or(false);
    if zdep {
        return Err(ShuffleError::ResidualDenominator);
    }
    ShuffleElement::new(n, total)
}

//! Expansion of shuffle elements over slope-ordered products
//! `Sbar_{m_1,n_1} * ... * Sbar_{m_k,n_k}` with `m_1/n_1 <= ... <= m_k/n_k`, inside a
//! caller-chosen slope window.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_integer::Integer;
use num_rational::Ratio;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::linalg::Matrix;
use crate::arith::{LaurentPoly, Monomial, RatFunc, RatFuncJson, Rational, Vars};
use crate::shuffle::{gen_Sbar, shuffle_mul, Presentation, ShuffleElement, ShuffleError, SlopeParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
    #[error("target is not in the span of the windowed products (window too small or target outside the span)")]
    NotInSpan,
    #[error("the windowed products are linearly dependent")]
    Dependent,
    #[error("target is not homogeneous in the z-variables")]
    NotHomogeneous,
    #[error("empty or inverted slope window")]
    BadWindow,
}

/// `[(m_1, n_1), ..., (m_k, n_k)]`, sorted by slope and then by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwIndex(pub Vec<(i64, usize)>);

impl fmt::Display for PbwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, n)| format!("({m},{n})")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Closed slope interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: Ratio<i64>,
    pub hi: Ratio<i64>,
}

impl Window {
    pub fn new(lo: Ratio<i64>, hi: Ratio<i64>) -> Result<Self, PbwError> {
        if lo > hi {
            return Err(PbwError::BadWindow);
        }
        Ok(Window { lo, hi })
    }

    pub fn ints(lo: i64, hi: i64) -> Result<Self, PbwError> {
        Self::new(Ratio::from_integer(lo), Ratio::from_integer(hi))
    }

    pub fn parse(lo: &str, hi: &str) -> Result<Self, PbwError> {
        let p = |s: &str| s.trim().parse::<Ratio<i64>>().map_err(|_| PbwError::BadWindow);
        Self::new(p(lo)?, p(hi)?)
    }
}

fn key(p: &(i64, usize)) -> (Ratio<i64>, usize) {
    (Ratio::new(p.0, p.1 as i64), p.1)
}

/// All slope-ordered tuples with `sum n_i = n`, `sum m_i = m` and every slope in the window.
pub fn enumerate_pbw(n: usize, m: i64, window: Window) -> Vec<PbwIndex> {
    fn rec(n: usize, m: i64, w: Window, cur: &mut Vec<(i64, usize)>, out: &mut Vec<PbwIndex>) {
        if n == 0 {
            if m == 0 {
                out.push(PbwIndex(cur.clone()));
            }
            return;
        }
        let mut parts = Vec::new();
        for ni in 1..=n {
            let lo = (w.lo * ni as i64).ceil().to_integer();
            let hi = (w.hi * ni as i64).floor().to_integer();
            for mi in lo..=hi {
                parts.push((mi, ni));
            }
        }
        parts.sort_by_key(key);
        for p in parts {
            if cur.last().map(|last| key(last) > key(&p)).unwrap_or(false) {
                continue;
            }
            cur.push(p);
            rec(n - p.1, m - p.0, w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, window, &mut Vec::new(), &mut out);
    out
}

static PRODUCTS: Lazy<Mutex<HashMap<PbwIndex, ShuffleElement>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `Sbar_{m_1,n_1} * ... * Sbar_{m_k,n_k}`, where `Sbar_{m,n}` with `g = gcd(m, n)` is the
/// generator with slope `(m/g, n/g)` and `d = g`.
pub fn pbw_product(index: &PbwIndex) -> Result<ShuffleElement, PbwError> {
    if let Some(v) = PRODUCTS.lock().unwrap().get(index) {
        return Ok(v.clone());
    }
    let mut acc = ShuffleElement::unit();
    for &(m, n) in &index.0 {
        let g = m.gcd(&(n as i64)) as usize;
        let gen = gen_Sbar(SlopeParams::new(m / g as i64, n / g, g)?, Presentation::A)?;
        acc = shuffle_mul(&acc, &gen)?;
    }
    PRODUCTS.lock().unwrap().insert(index.clone(), acc.clone());
    Ok(acc)
}

/// Coefficients of `sum_I c_I * product_I`, sorted by index.
#[derive(Debug, Clone)]
pub struct PbwExpansion {
    pub target: ShuffleElement,
    pub window: Window,
    pub coeffs: Vec<(PbwIndex, RatFunc)>,
}

impl PbwExpansion {
    /// `sum_I c_I * product_I`.
    pub fn reconstruct(&self) -> Result<ShuffleElement, PbwError> {
        let mut acc = ShuffleElement::zero(self.target.n());
        for (idx, c) in &self.coeffs {
            acc = acc.try_add(&pbw_product(idx)?.scale(c))?;
        }
        Ok(acc)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| c.is_integral())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|(i, c)| format!("{} * [{}]", c.to_text(), i)).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("\n + ")
        }
    }
}

impl Serialize for PbwExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Coeff {
            index: Vec<(i64, usize)>,
            coeff: RatFuncJson,
        }
        let mut st = s.serialize_struct("PbwExpansion", 3)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("window", &[self.window.lo.to_string(), self.window.hi.to_string()])?;
        let coeffs: Vec<Coeff> = self.coeffs.iter().map(|(i, c)| Coeff { index: i.0.clone(), coeff: RatFuncJson::from(c) }).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Numerator coefficients at dominant (weakly decreasing) z-exponents, as polynomials in
/// `q1, q2`, together with the q-denominator. Symmetric elements are determined by these.
fn coordinates(e: &ShuffleElement) -> (BTreeMap<Vec<i32>, LaurentPoly>, LaurentPoly) {
    let q = Vars::q();
    let n = e.n();
    let mut out: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    for (m, c) in e.value().numerator().terms() {
        let z: Vec<i32> = (0..n).map(|i| m.exp(i + 2)).collect();
        if z.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let qm = Monomial::from_exps(&[m.exp(0), m.exp(1)]);
        out.entry(z).or_insert_with(|| LaurentPoly::zero(&q)).add_term(qm, c);
    }
    out.retain(|_, p| !p.is_zero());
    (out, e.value().denominator().with_vars(&q))
}

fn z_degree(e: &ShuffleElement) -> Result<i64, PbwError> {
    e.z_degree().ok_or(PbwError::NotHomogeneous)
}

/// Fraction-free determinant (Bareiss) over `Z[q1^+-1, q2^+-1]`.
fn det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let q = Vars::q();
    let k = a.len();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(&q);
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else { return LaurentPoly::zero(&q) };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let num = &(&a[c][c] * &a[r][j]) - &(&a[r][c] * &a[c][j]);
                a[r][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[r][c] = LaurentPoly::zero(&q);
        }
        prev = a[c][c].clone();
    }
    a[k - 1][k - 1].scale(&Rational::from(sign))
}

fn eval_q(p: &LaurentPoly, pt: &[Rational; 2]) -> Rational {
    p.eval(pt).expect("q-only polynomial")
}

/// Exact coefficients `c_I` with `target = sum_I c_I * product_I` over the windowed index
/// set, verified by reconstruction.
pub fn express(target: &ShuffleElement, window: Window) -> Result<PbwExpansion, PbwError> {
    let n = target.n();
    if n == 0 {
        return Err(PbwError::NotInSpan);
    }
    let m = if target.is_zero() { 0 } else { z_degree(target)? };
    let indices = enumerate_pbw(n, m, window);
    if target.is_zero() {
        return Ok(PbwExpansion { target: target.clone(), window, coeffs: vec![] });
    }
    if indices.is_empty() {
        return Err(PbwError::NotInSpan);
    }
    let products: Vec<ShuffleElement> = indices.iter().map(pbw_product).collect::<Result<_, _>>()?;
    let cols: Vec<_> = products.iter().map(coordinates).collect();
    let (tcoords, tden) = coordinates(target);
    let mut rows: Vec<Vec<i32>> = tcoords.keys().cloned().collect();
    for (c, _) in &cols {
        rows.extend(c.keys().cloned());
    }
    rows.sort();
    rows.dedup();
    let q = Vars::q();
    let zero = LaurentPoly::zero(&q);
    let entry = |c: &BTreeMap<Vec<i32>, LaurentPoly>, r: &Vec<i32>| c.get(r).cloned().unwrap_or_else(|| zero.clone());
    let k = indices.len();

    // choose k independent rows at a random specialization of (q1, q2)
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut chosen = None;
    for _ in 0..6 {
        let pt = [Rational::new(rng.gen_range(2..50i64), rng.gen_range(1..50i64)), Rational::new(rng.gen_range(-50..-1i64), rng.gen_range(1..50i64))];
        let at: Vec<Vec<Rational>> = cols.iter().map(|(c, _)| rows.iter().map(|r| eval_q(&entry(c, r), &pt)).collect()).collect();
        let mut mt = Matrix::from_rows(at.clone());
        let pivots = mt.rref();
        if pivots.len() < k {
            continue;
        }
        let mut aug = at;
        aug.push(rows.iter().map(|r| eval_q(&entry(&tcoords, r), &pt)).collect());
        if Matrix::from_rows(aug).rank() > k {
            return Err(PbwError::NotInSpan);
        }
        chosen = Some(pivots);
        break;
    }
    let pivots = chosen.ok_or(PbwError::Dependent)?;
    let sel: Vec<&Vec<i32>> = pivots.iter().map(|&i| &rows[i]).collect();
    let a: Vec<Vec<LaurentPoly>> = sel.iter().map(|r| cols.iter().map(|(c, _)| entry(c, r)).collect()).collect();
    let b: Vec<LaurentPoly> = sel.iter().map(|r| entry(&tcoords, r)).collect();
    let d = det(a.clone());
    if d.is_zero() {
        return Err(PbwError::Dependent);
    }

    // Cramer on numerators: sum_j c'_j N_j = N_T with c_j = c'_j D_j / D_T
    let tden_r = RatFunc::from_poly(tden);
    let mut coeffs = Vec::new();
    for j in 0..k {
        let mut aj = a.clone();
        for (row, bv) in aj.iter_mut().zip(&b) {
            row[j] = bv.clone();
        }
        let nj = det(aj);
        if nj.is_zero() {
            continue;
        }
        let cprime = match nj.exact_div(&d) {
            Some(p) => RatFunc::from_poly(p),
            None => RatFunc::from_parts(nj, &[], Some(d.clone())).normalize(),
        };
        let dj = RatFunc::from_poly(cols[j].1.clone());
        let c = (&(&cprime * &dj) * &tden_r.inv().expect("nonzero denominator")).normalize();
        coeffs.push((indices[j].clone(), c));
    }
    let out = PbwExpansion { target: target.clone(), window, coeffs };
    if out.reconstruct()? != *target {
        return Err(PbwError::NotInSpan);
    }
    Ok(out)
}

/// Exact rank of the windowed products at `(n, m)`: the number of products if some maximal
/// minor is a nonzero polynomial.
pub fn full_column_rank(n: usize, m: i64, window: Window) -> Result<(usize, bool), PbwError> {
    let indices = enumerate_pbw(n, m, window);
    let k = indices.len();
    if k == 0 {
        return Ok((0, true));
    }
    // a random combination of the products is in their span; expressing it certifies a
    // nonzero maximal minor
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    let mut combo = ShuffleElement::zero(n);
    for idx in &indices {
        let c = Rational::new(rng.gen_range(1..20i64), 1);
        combo = combo.try_add(&pbw_product(idx)?.scale_rational(&c))?;
    }
    match express(&combo, window) {
        Ok(_) => Ok((k, true)),
        Err(PbwError::Dependent) => Ok((k, false)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::{gen_H, gen_R};

    fn idx(v: &[(i64, usize)]) -> PbwIndex {
        PbwIndex(v.to_vec())
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_pbw(1, 5, Window::ints(-10, 10).unwrap()), vec![idx(&[(5, 1)])]);
        let got = enumerate_pbw(2, 0, Window::ints(-1, 1).unwrap());
        assert_eq!(got, vec![idx(&[(-1, 1), (1, 1)]), idx(&[(0, 1), (0, 1)]), idx(&[(0, 2)])]);
        let got = enumerate_pbw(2, 1, Window::ints(0, 1).unwrap());
        assert_eq!(got, vec![idx(&[(0, 1), (1, 1)]), idx(&[(1, 2)])]);
        assert!(Window::ints(1, 0).is_err());
    }

    #[test]
    fn basis_element_expands_to_itself() {
        let t = gen_Sbar(SlopeParams::new(0, 1, 2).unwrap(), Presentation::A).unwrap();
        let e = express(&t, Window::ints(0, 0).unwrap()).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeffs[0].0, idx(&[(0, 2)]));
        assert!(e.coeffs[0].1.is_one());
    }

    #[test]
    fn h02() {
        let t = gen_H(0, 2).unwrap();
        let e = express(&t, Window::ints(0, 0).unwrap()).unwrap();
        assert!(e.is_integral());
        let q = Vars::q();
        let one = RatFunc::one(&q);
        let want_b = -(&one + &RatFunc::monomial(&q, Monomial::var(0, 1), Rational::one()));
        assert_eq!(e.coeffs, vec![(idx(&[(0, 1), (0, 1)]), one), (idx(&[(0, 2)]), want_b)]);
        let wide = express(&t, Window::ints(-1, 1).unwrap()).unwrap();
        assert_eq!(wide.coeffs, e.coeffs);
    }

    #[test]
    fn r01_and_not_in_span() {
        let t = gen_R(&[0, 1]).unwrap();
        let e = express(&t, Window::ints(0, 1).unwrap()).unwrap();
        assert_eq!(e.reconstruct().unwrap(), t);
        assert!(matches!(express(&t, Window::ints(1, 1).unwrap()), Err(PbwError::NotInSpan)));
        let js = e.to_json();
        assert!(js.starts_with("{\"target\":{\"n\":2"));
    }

    #[test]
    fn ranks() {
        assert_eq!(full_column_rank(2, 0, Window::ints(-1, 1).unwrap()).unwrap(), (3, true));
        assert_eq!(full_column_rank(2, 1, Window::ints(0, 1).unwrap()).unwrap(), (2, true));
    }
}

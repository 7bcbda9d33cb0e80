//! Symmetric functions over `Q(q1, q2)`, stored in the barred power sums `pbar_mu`, with
//! the plethysm `p_d = pbar_d (1 - q1^d)` and the slope maps into the shuffle algebra.

mod basis;
mod parse;
mod partition;
mod phi;
mod qsym;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, Monomial, RatFunc, RatFuncJson, Rational, Vars};
use crate::shuffle::ShuffleError;

pub use basis::{basis_convert, basis_element, from_basis, Basis, BasisIndex};
pub use parse::parse_expr;
pub use partition::{cycle_type, partitions, Partition, SignSeq};
pub use phi::phi_slope;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
    #[error("expression is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<u32>),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Plethysm {
    Barred,
    Modified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlethysmDirection {
    BarToModified,
    ModifiedToBar,
}

/// `sum_mu c_mu pbar_mu`. The flag records which alphabet the expression is meant in and
/// only affects display; equality compares values.
#[derive(Clone)]
pub struct SymFuncExpr {
    terms: BTreeMap<Partition, RatFunc>,
    plethysm: Plethysm,
}

fn qvars() -> Vars {
    Vars::q()
}

/// `prod_i (1 - q1^{mu_i})^k`.
pub(crate) fn plethysm_factor(mu: &Partition, k: i32) -> RatFunc {
    let q = qvars();
    mu.parts().iter().fold(RatFunc::one(&q), |acc, &p| &acc * &RatFunc::binomial(&q, &Monomial::var(0, p as i32), k))
}

impl SymFuncExpr {
    pub fn new(terms: impl IntoIterator<Item = (Partition, RatFunc)>, plethysm: Plethysm) -> Self {
        let q = qvars();
        let mut out = SymFuncExpr { terms: BTreeMap::new(), plethysm };
        for (mu, c) in terms {
            out.add_term(mu, &c.with_vars(&q));
        }
        out
    }

    pub(crate) fn from_qsym(f: &qsym::QSym, plethysm: Plethysm) -> Self {
        let q = qvars();
        SymFuncExpr::new(f.iter().map(|(mu, c)| (mu.clone(), RatFunc::constant(&q, c.clone()))), plethysm)
    }

    pub fn zero() -> Self {
        SymFuncExpr { terms: BTreeMap::new(), plethysm: Plethysm::Barred }
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one(&qvars()))
    }

    pub fn scalar(c: RatFunc) -> Self {
        SymFuncExpr::new([(Partition::empty(), c)], Plethysm::Barred)
    }

    fn add_term(&mut self, mu: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&mu) {
            Some(old) => (old + c).normalize(),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.terms.get(mu).cloned().unwrap_or_else(|| RatFunc::zero(&qvars()))
    }

    pub fn plethysm(&self) -> Plethysm {
        self.plethysm
    }

    pub fn with_flag(&self, plethysm: Plethysm) -> Self {
        SymFuncExpr { terms: self.terms.clone(), plethysm }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar, if the expression has degree 0.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero(&qvars())),
            1 => self.terms.get(&Partition::empty()).cloned(),
            _ => None,
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|mu| mu.size()).collect();
        d.dedup();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The degree if homogeneous; zero counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Result<u32, SymFuncError> {
        match self.degrees().as_slice() {
            [] => Ok(0),
            [d] => Ok(*d),
            ds => Err(SymFuncError::NotHomogeneous(ds.to_vec())),
        }
    }

    /// Degree-`d` component.
    pub fn component(&self, d: u32) -> Self {
        SymFuncExpr { terms: self.terms.iter().filter(|(mu, _)| mu.size() == d).map(|(m, c)| (m.clone(), c.clone())).collect(), plethysm: self.plethysm }
    }

    fn join_flag(&self, other: &Self) -> Plethysm {
        if self.plethysm == Plethysm::Modified || other.plethysm == Plethysm::Modified {
            Plethysm::Modified
        } else {
            Plethysm::Barred
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.plethysm = self.join_flag(other);
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_rational(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymFuncExpr { terms: BTreeMap::new(), plethysm: self.join_flag(other) };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.union(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one().with_flag(self.plethysm), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let c = c.with_vars(&qvars());
        SymFuncExpr::new(self.terms.iter().map(|(mu, v)| (mu.clone(), (v * &c).normalize())), self.plethysm)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        SymFuncExpr::new(self.terms.iter().map(|(mu, v)| (mu.clone(), v.scale(c))), self.plethysm)
    }

    /// Applies the ring automorphism `pbar_d -> pbar_d (1 - q1^d)` or its inverse, and sets
    /// the flag accordingly.
    pub fn plethysm_q(&self, direction: PlethysmDirection) -> Self {
        let (k, flag) = match direction {
            PlethysmDirection::BarToModified => (1, Plethysm::Modified),
            PlethysmDirection::ModifiedToBar => (-1, Plethysm::Barred),
        };
        SymFuncExpr::new(self.terms.iter().map(|(mu, c)| (mu.clone(), (c * &plethysm_factor(mu, k)).normalize())), flag)
    }

    /// Coefficients with respect to the display alphabet: `pbar_mu` when barred, `p_mu` when
    /// modified.
    fn display_terms(&self) -> Vec<(Partition, RatFunc)> {
        self.terms
            .iter()
            .map(|(mu, c)| match self.plethysm {
                Plethysm::Barred => (mu.clone(), c.clone()),
                Plethysm::Modified => (mu.clone(), (c * &plethysm_factor(mu, -1)).normalize()),
            })
            .collect()
    }

    /// Text form, readable back by [`parse_expr`].
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let name = match self.plethysm {
            Plethysm::Barred => "pbar",
            Plethysm::Modified => "p",
        };
        let mut out = Vec::new();
        for (mu, c) in self.display_terms() {
            let mut s = c.to_text();
            for (part, mult) in grouped(&mu) {
                s.push_str(&format!("*{name}[{part}]"));
                if mult > 1 {
                    s.push_str(&format!("^{mult}"));
                }
            }
            out.push(s);
        }
        out.join(" + ")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sym = match self.plethysm {
            Plethysm::Barred => "\\bar{p}",
            Plethysm::Modified => "p",
        };
        let mut out = Vec::new();
        for (mu, c) in self.display_terms() {
            let mut s = if mu.is_empty() || !c.is_one() { format!("\\left({}\\right)", c.to_latex()) } else { String::new() };
            for (part, mult) in grouped(&mu) {
                s.push_str(&format!("{sym}_{{{part}}}"));
                if mult > 1 {
                    s.push_str(&format!("^{{{mult}}}"));
                }
            }
            out.push(s);
        }
        out.join(" + ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

fn grouped(mu: &Partition) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &p in mu.parts() {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

impl PartialEq for SymFuncExpr {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Debug for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFuncExpr[{:?}]({})", self.plethysm, self.to_text())
    }
}

impl fmt::Display for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: RatFuncJson,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<TermJson>,
    plethysm: Plethysm,
}

impl Serialize for SymFuncExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: "pbar".into(),
            terms: self.terms.iter().map(|(mu, c)| TermJson { partition: mu.clone(), coeff: RatFuncJson::from(c) }).collect(),
            plethysm: self.plethysm,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFuncExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = SymFuncJson::deserialize(d)?;
        if j.basis != "pbar" {
            return Err(D::Error::custom(format!("unsupported basis {:?}; expected \"pbar\"", j.basis)));
        }
        let mut terms = Vec::new();
        for t in &j.terms {
            let c = RatFunc::try_from(&t.coeff).map_err(D::Error::custom)?;
            if !Vars::q().is_prefix_of(c.vars()) || c.vars().len() != 2 {
                return Err(D::Error::custom("coefficients must be over [q1, q2]"));
            }
            if t.partition.parts().windows(2).any(|w| w[0] < w[1]) || t.partition.parts().contains(&0) {
                return Err(D::Error::custom("partition parts must be positive and weakly decreasing"));
            }
            terms.push((t.partition.clone(), c));
        }
        Ok(SymFuncExpr::new(terms, j.plethysm))
    }
}

pub fn pbar(d: u32) -> SymFuncExpr {
    SymFuncExpr::from_qsym(&qsym::pbar(d), Plethysm::Barred)
}

pub fn p(d: u32) -> SymFuncExpr {
    pbar(d).plethysm_q(PlethysmDirection::BarToModified)
}

pub fn ebar(d: u32) -> SymFuncExpr {
    SymFuncExpr::from_qsym(&qsym::ebar(d as i64), Plethysm::Barred)
}

pub fn hbar(d: u32) -> SymFuncExpr {
    SymFuncExpr::from_qsym(&qsym::hbar(d as i64), Plethysm::Barred)
}

pub fn e(d: u32) -> SymFuncExpr {
    ebar(d).plethysm_q(PlethysmDirection::BarToModified)
}

pub fn h(d: u32) -> SymFuncExpr {
    hbar(d).plethysm_q(PlethysmDirection::BarToModified)
}

pub fn sbar(lambda: &Partition) -> SymFuncExpr {
    SymFuncExpr::from_qsym(&qsym::schur(lambda), Plethysm::Barred)
}

pub fn s(lambda: &Partition) -> SymFuncExpr {
    sbar(lambda).plethysm_q(PlethysmDirection::BarToModified)
}

/// Ribbon Schur function, by inclusion-exclusion over coarsenings of the row composition.
pub fn ribbon(eps: &SignSeq, kind: Plethysm) -> SymFuncExpr {
    let f = SymFuncExpr::from_qsym(&qsym::ribbon_by_coarsening(eps), Plethysm::Barred);
    match kind {
        Plethysm::Barred => f,
        Plethysm::Modified => f.plethysm_q(PlethysmDirection::BarToModified),
    }
}

/// The barred ribbon function by the product-rule recursion, independent of [`ribbon`].
pub fn ribbon_by_product_rule(eps: &SignSeq) -> SymFuncExpr {
    SymFuncExpr::from_qsym(&qsym::ribbon_by_product_rule(eps), Plethysm::Barred)
}

/// `sum_eps q1^{sum of + positions} s_eps / prod_{i<=d} (1 - q1^i)`.
pub fn e_to_ribbon(d: u32) -> SymFuncExpr {
    let q = qvars();
    let mut acc = SymFuncExpr::zero();
    for eps in SignSeq::all(d as usize) {
        let w: i32 = eps.0.iter().enumerate().filter(|(_, &plus)| plus).map(|(i, _)| i as i32 + 1).sum();
        let c = RatFunc::monomial(&q, Monomial::var(0, w), Rational::one());
        acc = acc.add(&ribbon(&eps, Plethysm::Modified).scale(&c));
    }
    let den = (1..=d as i32).fold(RatFunc::one(&q), |a, i| &a * &RatFunc::binomial(&q, &Monomial::var(0, i), -1));
    acc.scale(&den)
}

/// `(1/n!) sum_w chi(w) pbar_{type(w)} = sum_mu chi(mu) pbar_mu / z_mu`, for a class function
/// given by its values on cycle types.
pub fn frobenius_char(n: u32, chi: &BTreeMap<Partition, Rational>) -> Result<SymFuncExpr, SymFuncError> {
    let mut terms = qsym::QSym::new();
    for mu in partitions(n) {
        let v = chi.get(&mu).ok_or_else(|| SymFuncError::Invalid(format!("class function missing cycle type {mu}")))?;
        if !v.is_zero() {
            terms.insert(mu.clone(), v * &mu.z_inv());
        }
    }
    Ok(SymFuncExpr::from_qsym(&terms, Plethysm::Barred))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1() -> RatFunc {
        RatFunc::monomial(&Vars::q(), Monomial::var(0, 1), Rational::one())
    }

    fn one_minus_q1() -> RatFunc {
        RatFunc::binomial(&Vars::q(), &Monomial::var(0, 1), 1)
    }

    fn half(a: &SymFuncExpr, b: &SymFuncExpr, sign: i64) -> SymFuncExpr {
        a.add(&b.scale_rational(&Rational::from(sign))).scale_rational(&Rational::new(1, 2))
    }

    #[test]
    fn small_bases() {
        assert_eq!(ebar(1), pbar(1));
        assert_eq!(hbar(1), pbar(1));
        assert_eq!(ebar(2), half(&pbar(1).pow(2), &pbar(2), -1));
        assert_eq!(hbar(2), half(&pbar(1).pow(2), &pbar(2), 1));
    }

    #[test]
    fn worked_example_degree_two() {
        let plus = SignSeq::parse("+").unwrap();
        let minus = SignSeq::parse("-").unwrap();
        assert_eq!(ribbon(&SignSeq::default(), Plethysm::Barred), pbar(1));
        assert_eq!(ribbon(&plus, Plethysm::Barred), half(&pbar(1).pow(2), &pbar(2), 1));
        assert_eq!(ribbon(&minus, Plethysm::Barred), half(&pbar(1).pow(2), &pbar(2), -1));
        let inv = one_minus_q1().inv().unwrap();
        let lhs = ribbon(&plus, Plethysm::Modified).scale(&inv);
        assert_eq!(lhs, hbar(2).sub(&ebar(2).scale(&q1())));
        let lhs = ribbon(&minus, Plethysm::Modified).scale(&inv);
        assert_eq!(lhs, ebar(2).sub(&hbar(2).scale(&q1())));
    }

    #[test]
    fn modified_h2_by_series() {
        // (p1^2 + p2)/2 with p_d = pbar_d (1 - q1^d)
        let q = Vars::q();
        let a = RatFunc::binomial(&q, &Monomial::var(0, 1), 2);
        let b = RatFunc::binomial(&q, &Monomial::var(0, 2), 1);
        let want = pbar(1).pow(2).scale(&a).add(&pbar(2).scale(&b)).scale_rational(&Rational::new(1, 2));
        assert_eq!(h(2), want);
        // the example's form after dividing by (1 - q1)
        let c = RatFunc::binomial(&q, &Monomial::var(0, 1), 1);
        let onep = &RatFunc::one(&q) + &q1();
        let ex = pbar(1).pow(2).scale(&c).add(&pbar(2).scale(&onep)).scale_rational(&Rational::new(1, 2));
        assert_eq!(h(2).scale(&one_minus_q1().inv().unwrap()), ex);
    }

    #[test]
    fn plethysm_round_trip() {
        let f = ebar(3).add(&hbar(2).mul(&pbar(1)).scale(&q1()));
        let g = f.plethysm_q(PlethysmDirection::BarToModified);
        assert_eq!(
            g.coeff(&Partition::new(vec![3])),
            f.coeff(&Partition::new(vec![3])).try_mul(&RatFunc::binomial(&Vars::q(), &Monomial::var(0, 3), 1)).unwrap()
        );
        assert_eq!(g.plethysm_q(PlethysmDirection::ModifiedToBar), f);
        assert_eq!(p(1), pbar(1).scale(&one_minus_q1()));
    }

    #[test]
    fn ribbon_identities() {
        for d in 1..=4u32 {
            let plus = SignSeq(vec![true; d as usize - 1]);
            assert_eq!(h(d), ribbon(&plus, Plethysm::Modified));
        }
        for d in 1..=3 {
            assert_eq!(e_to_ribbon(d), ebar(d), "d = {d}");
        }
        for da in 1..=3 {
            for db in 1..=4 - da {
                for a in SignSeq::all(da) {
                    for b in SignSeq::all(db) {
                        let mut plus = a.0.clone();
                        plus.push(true);
                        plus.extend_from_slice(&b.0);
                        let mut minus = a.0.clone();
                        minus.push(false);
                        minus.extend_from_slice(&b.0);
                        let lhs = ribbon(&a, Plethysm::Barred).mul(&ribbon(&b, Plethysm::Barred));
                        let rhs = ribbon(&SignSeq(plus), Plethysm::Barred).add(&ribbon(&SignSeq(minus), Plethysm::Barred));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_of_s2() {
        let triv = BTreeMap::from([(Partition::new(vec![1, 1]), Rational::one()), (Partition::new(vec![2]), Rational::one())]);
        let sign = BTreeMap::from([(Partition::new(vec![1, 1]), Rational::one()), (Partition::new(vec![2]), -Rational::one())]);
        assert_eq!(frobenius_char(2, &triv).unwrap(), hbar(2));
        assert_eq!(frobenius_char(2, &sign).unwrap(), ebar(2));
    }

    #[test]
    fn json_and_text() {
        let f = ribbon(&SignSeq::parse("+-").unwrap(), Plethysm::Modified).scale(&q1());
        let js = f.to_json();
        let back = SymFuncExpr::from_json(&js).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.plethysm(), Plethysm::Modified);
        assert_eq!(back.to_json(), js);
        assert_eq!(parse_expr(&f.to_text()).unwrap(), f);
        assert_eq!(pbar(2).mul(&pbar(1).pow(2)).to_latex(), "\\bar{p}_{2}\\bar{p}_{1}^{2}");
    }
}

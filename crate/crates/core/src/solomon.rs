//! The group algebra `Q[S_n]`, parabolic (anti)symmetrizers and the left ideals
//! `Q[S_n] e_eps e^-_eps`, whose characters are the ribbon Schur functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::linalg::Matrix;
use crate::arith::Rational;
use crate::shuffle::{perm_sign, permutations};
use crate::symfunc::{cycle_type, frobenius_char, partitions, Partition, SignSeq, SymFuncExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolomonError {
    #[error("n = {n} exceeds the bound {bound}")]
    Bound { n: usize, bound: usize },
    #[error("invalid element: {0}")]
    Invalid(String),
}

/// Permutations in one-line notation on `0..n`; composition `(u v)(i) = u(v(i))`.
pub type Perm = Vec<usize>;

fn compose(u: &[usize], v: &[usize]) -> Perm {
    v.iter().map(|&i| u[i]).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgElem {
    n: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl GroupAlgElem {
    pub fn zero(n: usize) -> Self {
        GroupAlgElem { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(n, (0..n).collect())
    }

    pub fn basis(n: usize, perm: Perm) -> Self {
        let mut out = Self::zero(n);
        out.add_term(perm, &Rational::one());
        out
    }

    /// The simple transposition `sigma_i` swapping `i` and `i + 1` (1-based, `1 <= i < n`).
    pub fn sigma(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "sigma index out of range");
        let mut p: Perm = (0..n).collect();
        p.swap(i - 1, i);
        Self::basis(n, p)
    }

    fn add_term(&mut self, perm: Perm, c: &Rational) {
        let e = self.terms.entry(perm.clone()).or_insert_with(Rational::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&perm);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Rational> {
        &self.terms
    }

    pub fn coeff(&self, perm: &[usize]) -> Rational {
        self.terms.get(perm).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(compose(u, v), &(a * b));
            }
        }
        out
    }

    /// Coordinates in the order of `permutations(n)`.
    pub fn to_vector(&self, perms: &[Perm]) -> Vec<Rational> {
        perms.iter().map(|p| self.coeff(p)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl std::fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*{:?}", p.iter().map(|i| i + 1).collect::<Vec<_>>())).collect();
        write!(f, "GroupAlgElem({})", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Vec<usize>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct GroupAlgJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for GroupAlgElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupAlgJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson { perm: p.iter().map(|i| i + 1).collect(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupAlgElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = GroupAlgJson::deserialize(d)?;
        let mut out = GroupAlgElem::zero(j.n);
        for t in j.terms {
            let mut sorted = t.perm.clone();
            sorted.sort_unstable();
            if sorted != (1..=j.n).collect::<Vec<_>>() {
                return Err(D::Error::custom(format!("{:?} is not a permutation of 1..{}", t.perm, j.n)));
            }
            let num: num_bigint::BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: num_bigint::BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den == num_bigint::BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(t.perm.iter().map(|i| i - 1).collect(), &Rational::new(num, den));
        }
        Ok(out)
    }
}

/// Blocks of consecutive indices joined by the chosen sign.
fn blocks(eps: &SignSeq, joined_by_plus: bool) -> Vec<usize> {
    let mut block = vec![0usize];
    for &plus in &eps.0 {
        let b = *block.last().unwrap();
        block.push(if plus == joined_by_plus { b } else { b + 1 });
    }
    block
}

fn parabolic(eps: &SignSeq, joined_by_plus: bool) -> Vec<Perm> {
    let n = eps.size();
    let block = blocks(eps, joined_by_plus);
    permutations(n).into_iter().filter(|p| p.iter().enumerate().all(|(i, &j)| block[i] == block[j])).collect()
}

/// `e_eps = sum of w over the parabolic subgroup generated by sigma_i with eps_i = +`.
pub fn symmetrizer(eps: &SignSeq) -> GroupAlgElem {
    let n = eps.size();
    let mut out = GroupAlgElem::zero(n);
    for p in parabolic(eps, true) {
        out.add_term(p, &Rational::one());
    }
    out
}

/// `e^-_eps = sum of sgn(w) w over the parabolic subgroup generated by sigma_i with eps_i = -`.
pub fn antisymmetrizer(eps: &SignSeq) -> GroupAlgElem {
    let n = eps.size();
    let mut out = GroupAlgElem::zero(n);
    for p in parabolic(eps, false) {
        let s = Rational::from(perm_sign(&p) as i64);
        out.add_term(p, &s);
    }
    out
}

/// Row-reduced basis of a left ideal, with its pivot columns.
pub struct IdealBasis {
    pub eps: SignSeq,
    pub basis: Vec<GroupAlgElem>,
    pivots: Vec<usize>,
}

impl IdealBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A basis of `Q[S_n] e_eps e^-_eps`, from row-reducing `{w e_eps e^-_eps : w in S_n}`.
pub fn ideal_basis(eps: &SignSeq) -> Result<IdealBasis, SolomonError> {
    let n = eps.size();
    if n > 6 {
        return Err(SolomonError::Bound { n, bound: 6 });
    }
    let perms = permutations(n);
    let gen = symmetrizer(eps).mul(&antisymmetrizer(eps));
    let rows: Vec<Vec<Rational>> = perms.iter().map(|w| GroupAlgElem::basis(n, w.clone()).mul(&gen).to_vector(&perms)).collect();
    let mut m = Matrix::from_rows(rows);
    let pivots = m.rref();
    let basis = (0..pivots.len())
        .map(|r| {
            let mut e = GroupAlgElem::zero(n);
            for (j, p) in perms.iter().enumerate() {
                let c = m.get(r, j);
                if !c.is_zero() {
                    e.add_term(p.clone(), c);
                }
            }
            e
        })
        .collect();
    Ok(IdealBasis { eps: eps.clone(), basis, pivots })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolomonReport {
    pub n: usize,
    pub dims: Vec<(String, usize)>,
    pub total: usize,
    pub factorial: usize,
    pub rank: usize,
}

impl SolomonReport {
    /// Dimensions sum to `n!` and the ideals together span the whole algebra.
    pub fn holds(&self) -> bool {
        self.total == self.factorial && self.rank == self.factorial
    }
}

/// Dimensions of all `2^{n-1}` ideals and the rank of their concatenated bases.
pub fn solomon_check(n: usize) -> Result<SolomonReport, SolomonError> {
    if n > 5 || n == 0 {
        return Err(SolomonError::Bound { n, bound: 5 });
    }
    let perms = permutations(n);
    let mut dims = Vec::new();
    let mut rows = Vec::new();
    for eps in SignSeq::all(n) {
        let b = ideal_basis(&eps)?;
        dims.push((eps.to_string(), b.dim()));
        rows.extend(b.basis.iter().map(|e| e.to_vector(&perms)));
    }
    let total = dims.iter().map(|d| d.1).sum();
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
    Ok(SolomonReport { n, dims, total, factorial: perms.len(), rank })
}

/// The character of `S_n` acting on the ideal by left multiplication, as a Frobenius
/// characteristic in the barred power sums.
pub fn ideal_character(eps: &SignSeq) -> Result<SymFuncExpr, SolomonError> {
    let n = eps.size();
    if n > 5 {
        return Err(SolomonError::Bound { n, bound: 5 });
    }
    let b = ideal_basis(eps)?;
    let perms = permutations(n);
    let mut chi: BTreeMap<Partition, Rational> = BTreeMap::new();
    for mu in partitions(n as u32) {
        let g = perms.iter().find(|p| cycle_type(p) == mu).expect("every cycle type occurs").clone();
        let g = GroupAlgElem::basis(n, g);
        let mut trace = Rational::zero();
        for (k, e) in b.basis.iter().enumerate() {
            trace = &trace + &g.mul(e).coeff(&perms[b.pivots[k]]);
        }
        chi.insert(mu, trace);
    }
    Ok(frobenius_char(n as u32, &chi).expect("all cycle types present"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{ribbon, Plethysm};

    fn eps(s: &str) -> SignSeq {
        SignSeq::parse(s).unwrap()
    }

    #[test]
    fn normalizers() {
        let id = GroupAlgElem::identity(2);
        let s1 = GroupAlgElem::sigma(2, 1);
        assert_eq!(symmetrizer(&eps("+")), id.add(&s1));
        assert_eq!(antisymmetrizer(&eps("-")), id.add(&s1.scale(&-Rational::one())));
        let prod = symmetrizer(&eps("+-")).mul(&antisymmetrizer(&eps("+-")));
        let id3 = GroupAlgElem::identity(3);
        let want = id3.add(&GroupAlgElem::sigma(3, 1)).mul(&id3.add(&GroupAlgElem::sigma(3, 2).scale(&-Rational::one())));
        assert_eq!(prod, want);
    }

    #[test]
    fn invariance() {
        for e in SignSeq::all(4) {
            let sym = symmetrizer(&e);
            let anti = antisymmetrizer(&e);
            for (i, &plus) in e.0.iter().enumerate() {
                let s = GroupAlgElem::sigma(4, i + 1);
                if plus {
                    assert_eq!(s.mul(&sym), sym);
                } else {
                    assert_eq!(s.mul(&anti), anti.scale(&-Rational::one()));
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(ideal_basis(&eps("+")).unwrap().dim(), 1);
        assert_eq!(ideal_basis(&eps("-")).unwrap().dim(), 1);
        assert_eq!(ideal_basis(&eps("+-")).unwrap().dim(), 2);
        for n in 1..=4 {
            let r = solomon_check(n).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        assert!(solomon_check(6).is_err());
    }

    #[test]
    fn characters_are_ribbons() {
        for n in 1..=4 {
            for e in SignSeq::all(n) {
                assert_eq!(ideal_character(&e).unwrap(), ribbon(&e, Plethysm::Barred), "{e}");
            }
        }
    }

    #[test]
    fn json() {
        let e = symmetrizer(&eps("+-")).mul(&antisymmetrizer(&eps("+-"))).scale(&Rational::new(1, 3));
        let js = e.to_json();
        let back: GroupAlgElem = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<GroupAlgElem>("{\"n\":2,\"terms\":[{\"perm\":[1,1],\"num\":\"1\",\"den\":\"1\"}]}").is_err());
    }
}

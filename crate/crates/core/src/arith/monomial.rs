use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use smallvec::SmallVec;

/// An ordered list of variable names. Exponent vectors are positional with respect to it.
#[derive(Clone)]
pub struct Vars(Arc<[String]>);

static SHUFFLE_VARS: Lazy<Mutex<HashMap<(char, usize), Vars>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    fn cached(tag: char, n: usize) -> Self {
        let mut map = SHUFFLE_VARS.lock().unwrap();
        map.entry((tag, n))
            .or_insert_with(|| {
                let mut names = vec!["q1".to_string(), "q2".to_string()];
                names.extend((1..=n).map(|i| format!("{tag}{i}")));
                Vars::new(names)
            })
            .clone()
    }

    /// `[q1, q2]`.
    pub fn q() -> Self {
        Self::cached('z', 0)
    }

    /// `[q1, q2, z1, ..., zn]`.
    pub fn shuffle(n: usize) -> Self {
        Self::cached('z', n)
    }

    /// `[q1, q2, L1, ..., Ln]`, the tautological line-bundle classes on the flag variety.
    pub fn flag(n: usize) -> Self {
        Self::cached('L', n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// Whether `self` is a prefix of `other`, so monomials embed without reindexing.
    pub fn is_prefix_of(&self, other: &Vars) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector of a Laurent monomial; trailing zero exponents are never stored.
#[derive(Clone, Default)]
pub struct Monomial(SmallVec<[i32; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        let mut m = Monomial(exps.iter().copied().collect());
        m.trim();
        m
    }

    pub fn var(i: usize, e: i32) -> Self {
        let mut v: SmallVec<[i32; 8]> = SmallVec::from_elem(0, i + 1);
        v[i] = e;
        let mut m = Monomial(v);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn set_exp(&mut self, i: usize, e: i32) {
        if i >= self.0.len() {
            if e == 0 {
                return;
            }
            self.0.resize(i + 1, 0);
        }
        self.0[i] = e;
        self.trim();
    }

    /// Stored exponents (length is one past the last nonzero).
    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += *b;
        }
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise minimum (the gcd in the Laurent sense).
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v: SmallVec<[i32; 8]> = (0..n).map(|i| self.exp(i).min(other.exp(i))).collect();
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn join(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v: SmallVec<[i32; 8]> = (0..n).map(|i| self.exp(i).max(other.exp(i))).collect();
        let mut m = Monomial(v);
        m.trim();
        m
    }

    /// True if all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// True if `self` divides `other` in the polynomial sense (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|i| self.exp(i) <= other.exp(i))
    }

    /// Sign of the first nonzero exponent, 0 for the unit monomial.
    pub fn leading_sign(&self) -> i32 {
        self.0.iter().find(|&&e| e != 0).map(|e| e.signum()).unwrap_or(0)
    }

    /// True if only variables with index `< k` occur.
    pub fn only_below(&self, k: usize) -> bool {
        self.0.len() <= k
    }

    /// True if some variable with index in `range` occurs.
    pub fn touches(&self, range: std::ops::Range<usize>) -> bool {
        range.into_iter().any(|i| self.exp(i) != 0)
    }

    /// Relabel variables: the exponent at position `i` moves to `map[i]`.
    /// Positions beyond `map.len()` are kept in place.
    pub fn relabel(&self, map: &[usize]) -> Monomial {
        let mut out: SmallVec<[i32; 8]> = SmallVec::from_elem(0, self.0.len().max(map.iter().map(|&j| j + 1).max().unwrap_or(0)));
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = if i < map.len() { map[i] } else { i };
            if j >= out.len() {
                out.resize(j + 1, 0);
            }
            out[j] += e;
        }
        let mut m = Monomial(out);
        m.trim();
        m
    }

    /// Graded lexicographic comparison (total degree first, then lex on positions).
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.cmp(other))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Ord for Monomial {
    /// Lexicographic on exponents, padding with zeros.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = Monomial::from_exps(&[1, 0, 0]);
        let b = Monomial::var(0, 1);
        assert_eq!(a, b);
        assert_eq!(a.exps(), &[1]);
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn ordering_pads_with_zero() {
        let a = Monomial::from_exps(&[1]);
        let b = Monomial::from_exps(&[1, -1]);
        assert!(a > b);
    }

    #[test]
    fn relabel_swaps() {
        let m = Monomial::from_exps(&[0, 1, 1, -1]);
        let swapped = m.relabel(&[0, 1, 3, 2]);
        assert_eq!(swapped, Monomial::from_exps(&[0, 1, -1, 1]));
    }

    #[test]
    fn shuffle_vars_are_prefix_compatible() {
        assert!(Vars::q().is_prefix_of(&Vars::shuffle(3)));
        assert!(Vars::shuffle(2).is_prefix_of(&Vars::shuffle(3)));
        assert!(!Vars::flag(2).is_prefix_of(&Vars::shuffle(2)));
        assert_eq!(Vars::shuffle(2).names(), &["q1", "q2", "z1", "z2"]);
    }
}

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiset union (the index of a product of power sums).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u32;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                i += 1;
                acc *= BigInt::from(part) * BigInt::from(mult);
            }
        }
        acc
    }

    /// `(-1)^{|mu| - len(mu)}`.
    pub fn sign(&self) -> i32 {
        if (self.size() as usize - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn z_inv(&self) -> Rational {
        Rational::new(1, self.z())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle type of a permutation of `0..n` in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// A ribbon given by signs between consecutive boxes: `+` continues the row, `-` starts a
/// new row below.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignSeq(pub Vec<bool>);

impl SignSeq {
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut v = Vec::new();
        for c in s.chars() {
            match c {
                '+' => v.push(true),
                '-' | '−' => v.push(false),
                ',' | ' ' | '(' | ')' => {}
                _ => return Err(format!("bad sign {c:?}")),
            }
        }
        Ok(SignSeq(v))
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.len() + 1
    }

    /// Row lengths, top to bottom.
    pub fn composition(&self) -> Vec<u32> {
        let mut rows = vec![1u32];
        for &plus in &self.0 {
            if plus {
                *rows.last_mut().unwrap() += 1;
            } else {
                rows.push(1);
            }
        }
        rows
    }

    pub fn from_composition(c: &[u32]) -> Self {
        let mut v = Vec::new();
        for (i, &r) in c.iter().enumerate() {
            if i > 0 {
                v.push(false);
            }
            v.extend(std::iter::repeat(true).take(r as usize - 1));
        }
        SignSeq(v)
    }

    /// All sign sequences with `d` boxes, `+` before `-` lexicographically.
    pub fn all(d: usize) -> Vec<SignSeq> {
        let k = d.saturating_sub(1);
        (0..1u64 << k).map(|bits| SignSeq((0..k).map(|i| bits >> (k - 1 - i) & 1 == 0).collect())).collect()
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&p| if p { '+' } else { '-' }).collect();
        write!(f, "({s})")
    }
}

impl fmt::Debug for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let sizes: Vec<usize> = (0..=6).map(|n| partitions(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(partitions(3)[0], Partition::new(vec![3]));
    }

    #[test]
    fn centralizer_sizes() {
        assert_eq!(Partition::new(vec![1, 1]).z(), BigInt::from(2));
        assert_eq!(Partition::new(vec![2, 1, 1]).z(), BigInt::from(4));
        assert_eq!(Partition::new(vec![3]).z(), BigInt::from(3));
        let total: Rational = partitions(4).iter().map(|p| p.z_inv()).sum();
        assert!(total.is_one());
    }

    #[test]
    fn ribbon_compositions() {
        assert_eq!(SignSeq::parse("").unwrap().composition(), vec![1]);
        assert_eq!(SignSeq::parse("+").unwrap().composition(), vec![2]);
        assert_eq!(SignSeq::parse("-").unwrap().composition(), vec![1, 1]);
        assert_eq!(SignSeq::parse("+-").unwrap().composition(), vec![2, 1]);
        let s = SignSeq::parse("-++-").unwrap();
        assert_eq!(SignSeq::from_composition(&s.composition()), s);
        assert_eq!(SignSeq::all(3).len(), 4);
        assert_eq!(cycle_type(&[1, 0, 2]), Partition::new(vec![2, 1]));
    }
}

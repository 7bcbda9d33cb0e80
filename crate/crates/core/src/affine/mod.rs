//! The extended affine symmetric group: `n`-periodic bijections `v` of `Z` with
//! `v(i + n) = v(i) + n`, stored by the window `(v(1), ..., v(n))`.

mod word;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use word::parse_word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("requires gcd(m, n) = 1 and d >= 1; got m = {m}, n = {n}, d = {d}")]
    NonCoprime { m: i64, n: usize, d: usize },
    #[error("Bruhat comparison refused: reduced word of length {0} exceeds the bound 10")]
    LengthBound(usize),
    #[error("mismatched ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AffineJson", into = "AffineJson")]
pub struct AffinePerm {
    n: usize,
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct AffineJson {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<AffineJson> for AffinePerm {
    type Error = AffineError;

    fn try_from(j: AffineJson) -> Result<Self, Self::Error> {
        AffinePerm::new(j.n, j.window)
    }
}

impl From<AffinePerm> for AffineJson {
    fn from(v: AffinePerm) -> Self {
        AffineJson { n: v.n, window: v.window }
    }
}

/// Cycles of the projection to `S_n`, as `(length, degree)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleData(pub Vec<(usize, i64)>);

impl CycleData {
    pub fn total_length(&self) -> usize {
        self.0.iter().map(|c| c.0).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|c| c.1).sum()
    }
}

impl AffinePerm {
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self, AffineError> {
        if n == 0 {
            return Err(AffineError::InvalidWindow("n must be positive".into()));
        }
        if window.len() != n {
            return Err(AffineError::InvalidWindow(format!("expected {n} entries, got {}", window.len())));
        }
        let residues: HashSet<i64> = window.iter().map(|v| v.mod_floor(&(n as i64))).collect();
        if residues.len() != n {
            return Err(AffineError::InvalidWindow(format!("residues mod {n} are not distinct: {window:?}")));
        }
        Ok(AffinePerm { n, window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePerm { n, window: (1..=n as i64).collect() }
    }

    /// The rotation `i -> i + 1`.
    pub fn omega(n: usize) -> Self {
        Self::omega_pow(n, 1)
    }

    pub fn omega_pow(n: usize, k: i64) -> Self {
        AffinePerm { n, window: (1..=n as i64).map(|i| i + k).collect() }
    }

    /// The simple reflection swapping `i` and `i + 1` (indices mod `n`, so `sigma(0)` swaps
    /// `0` and `1`). Requires `n >= 2`.
    pub fn sigma(n: usize, i: i64) -> Result<Self, AffineError> {
        if n < 2 || !(0..n as i64).contains(&i) {
            return Err(AffineError::IndexOutOfRange { index: i, n });
        }
        let mut w: Vec<i64> = (1..=n as i64).collect();
        if i == 0 {
            w[0] = 0;
            w[n - 1] = n as i64 + 1;
        } else {
            w.swap(i as usize - 1, i as usize);
        }
        Ok(AffinePerm { n, window: w })
    }

    /// `y_i = sigma_{i-1}^{-1} ... sigma_1^{-1} omega sigma_{n-1} ... sigma_i`, `1 <= i <= n`.
    pub fn y(n: usize, i: i64) -> Result<Self, AffineError> {
        if !(1..=n as i64).contains(&i) {
            return Err(AffineError::IndexOutOfRange { index: i, n });
        }
        let mut acc = Self::identity(n);
        for j in (1..i).rev() {
            acc = acc.compose(&Self::sigma(n, j)?);
        }
        acc = acc.compose(&Self::omega(n));
        for j in (i..n as i64).rev() {
            acc = acc.compose(&Self::sigma(n, j)?);
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let (k, r) = (i - 1).div_mod_floor(&n);
        self.window[r as usize] + k * n
    }

    /// `(a o b)(i) = a(b(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "composing elements of different ranks");
        AffinePerm { n: self.n, window: other.window.iter().map(|&b| self.apply(b)).collect() }
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self, AffineError> {
        if self.n != other.n {
            return Err(AffineError::RankMismatch(self.n, other.n));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Self {
        let n = self.n as i64;
        let mut w = vec![0; self.n];
        for (idx, &v) in self.window.iter().enumerate() {
            let (k, r) = (v - 1).div_mod_floor(&n);
            w[r as usize] = idx as i64 + 1 - k * n;
        }
        AffinePerm { n: self.n, window: w }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.n), |acc, _| acc.compose(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// `(sum_i v(i) - i) / n`.
    pub fn degree(&self) -> i64 {
        let s: i64 = self.window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        s / self.n as i64
    }

    /// `v = omega^k o alpha` with `deg(alpha) = 0`.
    pub fn normal_form(&self) -> (i64, AffinePerm) {
        let k = self.degree();
        (k, Self::omega_pow(self.n, -k).compose(self))
    }

    /// Coxeter length of the degree-zero part, by counting inversions
    /// `#{(i, j) : 1 <= i <= n, i < j, v(i) > v(j)}` via `sum_{i<j} |floor((v(j) - v(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let mut l = 0i64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                l += Integer::div_floor(&(self.window[j] - self.window[i]), &n).abs();
            }
        }
        l as usize
    }

    /// Right descents: `i` in `0..n` with `v(i) > v(i + 1)`.
    pub fn right_descents(&self) -> Vec<i64> {
        (0..self.n as i64).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// A reduced word `[i_1, ..., i_l]` of the degree-zero part, `alpha = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<i64> {
        let (_, mut alpha) = self.normal_form();
        let mut word = Vec::new();
        while let Some(&i) = alpha.right_descents().first() {
            alpha = alpha.compose(&Self::sigma(self.n, i).expect("index in range"));
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Bruhat order: equal degrees and a reduced word of `alpha` occurs as a subword of a
    /// fixed reduced word of `beta`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool, AffineError> {
        if self.n != other.n {
            return Err(AffineError::RankMismatch(self.n, other.n));
        }
        if self.degree() != other.degree() {
            return Ok(false);
        }
        let beta = other.reduced_word();
        if beta.len() > 10 {
            return Err(AffineError::LengthBound(beta.len()));
        }
        let (_, alpha) = self.normal_form();
        let target = alpha.length();
        if target > beta.len() {
            return Ok(false);
        }
        let gens: Vec<AffinePerm> = beta.iter().map(|&i| Self::sigma(self.n, i).expect("index in range")).collect();
        for mask in 0u32..(1 << beta.len()) {
            if mask.count_ones() as usize != target {
                continue;
            }
            let mut acc = Self::identity(self.n);
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    acc = acc.compose(g);
                }
            }
            if acc == alpha {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Cycles of `i -> v(i) mod n`; the degree of a cycle is the net number of periods its
    /// values advance.
    pub fn cycle_data(&self) -> CycleData {
        let n = self.n as i64;
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let (mut len, mut deg) = (0usize, 0i64);
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (k, r) = (self.window[i] - 1).div_mod_floor(&n);
                deg += k;
                len += 1;
                i = r as usize;
            }
            out.push((len, deg));
        }
        CycleData(out)
    }

    /// Cycle `(degree, length)` pairs sorted by slope `degree / length`, ties by length.
    pub fn convex_path(&self) -> Vec<(i64, usize)> {
        let mut path: Vec<(i64, usize)> = self.cycle_data().0.into_iter().map(|(l, g)| (g, l)).collect();
        path.sort_by(|a, b| Ratio::new(a.0, a.1 as i64).cmp(&Ratio::new(b.0, b.1 as i64)).then(a.1.cmp(&b.1)));
        path
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePerm{:?}", self.window)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

fn check_slope(m: i64, n: usize, d: usize) -> Result<(), AffineError> {
    if n == 0 || d == 0 || m.gcd(&(n as i64)) != 1 {
        return Err(AffineError::NonCoprime { m, n, d });
    }
    Ok(())
}

/// `omega_{nd}^{md}` in the group of rank `nd`.
pub fn omega_md_nd(m: i64, n: usize, d: usize) -> AffinePerm {
    AffinePerm::omega_pow(n * d, m * d as i64)
}

/// Generators of the centralizer of `omega_{nd}^{md}`: `omega_{nd}` and, for `d > 1`,
/// `sigmahat_i = sigma_i sigma_{i+d} ... sigma_{i+nd-d}` for `0 <= i < d`.
pub fn centralizer_generators(m: i64, n: usize, d: usize) -> Result<Vec<AffinePerm>, AffineError> {
    check_slope(m, n, d)?;
    let big = n * d;
    let mut gens = vec![AffinePerm::omega(big)];
    if d > 1 {
        for i in 0..d {
            let mut acc = AffinePerm::identity(big);
            for t in 0..n {
                acc = acc.compose(&AffinePerm::sigma(big, (i + t * d) as i64 % big as i64)?);
            }
            gens.push(acc);
        }
    }
    Ok(gens)
}

/// The centralizer criterion `v(i + d) = v(i) + d` for all `i`.
pub fn in_centralizer(v: &AffinePerm, d: usize) -> bool {
    (1..=v.n() as i64).all(|i| v.apply(i + d as i64) == v.apply(i) + d as i64)
}

/// The generators together with the predicate characterizing the centralizer.
pub fn centralizer_data(m: i64, n: usize, d: usize) -> Result<(Vec<AffinePerm>, impl Fn(&AffinePerm) -> bool), AffineError> {
    let gens = centralizer_generators(m, n, d)?;
    Ok((gens, move |v: &AffinePerm| in_centralizer(v, d)))
}

/// Whether `{i, i + d, ..., i + nd - d} mod nd` is invariant under adding `md`.
pub fn zhat_invariance(i: i64, d: usize, n: usize, m: i64) -> Result<bool, AffineError> {
    check_slope(m, n, d)?;
    let big = (n * d) as i64;
    let set: BTreeSet<i64> = (0..n as i64).map(|t| (i + t * d as i64).mod_floor(&big)).collect();
    let shifted: BTreeSet<i64> = set.iter().map(|x| (x + m * d as i64).mod_floor(&big)).collect();
    Ok(set == shifted)
}

/// Degree-zero elements reachable from the identity in at most `depth` simple reflections,
/// with their word length (breadth-first search over the Cayley graph).
pub fn bfs_lengths(n: usize, depth: usize) -> HashMap<AffinePerm, usize> {
    let mut dist = HashMap::new();
    let id = AffinePerm::identity(n);
    dist.insert(id.clone(), 0);
    if n < 2 {
        return dist;
    }
    let gens: Vec<AffinePerm> = (0..n as i64).map(|i| AffinePerm::sigma(n, i).expect("index in range")).collect();
    let mut queue = VecDeque::from([id]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        if dv == depth {
            continue;
        }
        for g in &gens {
            let w = v.compose(g);
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Checks that no conjugate `w v w^{-1}`, for `w` a word of at most `bound` generators
/// (simple reflections and `omega^{+-1}`), is shorter than `v`. Returns the number of
/// distinct conjugates examined; `Ok` means minimal up to that bound, not a proof.
pub fn minimal_in_class_upto(v: &AffinePerm, bound: usize) -> Result<usize, AffinePerm> {
    let n = v.n();
    let mut gens: Vec<AffinePerm> = if n >= 2 { (0..n as i64).map(|i| AffinePerm::sigma(n, i).unwrap()).collect() } else { vec![] };
    gens.push(AffinePerm::omega(n));
    gens.push(AffinePerm::omega_pow(n, -1));
    let len = v.length();
    let mut seen = HashSet::from([v.clone()]);
    let mut frontier = vec![v.clone()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for u in &frontier {
            for g in &gens {
                let c = g.compose(u).compose(&g.inverse());
                if seen.insert(c.clone()) {
                    if c.length() < len {
                        return Err(c);
                    }
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

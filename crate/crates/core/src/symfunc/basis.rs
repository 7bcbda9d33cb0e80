use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::arith::linalg::Matrix;
use crate::arith::{RatFunc, Rational, Vars};

use super::partition::{partitions, Partition, SignSeq};
use super::qsym::{self, QSym};
use super::{Plethysm, PlethysmDirection, SymFuncError, SymFuncExpr};

/// Target bases for [`basis_convert`]. Unbarred `H` and `S` are the plethystic images of
/// `Hbar` and `Sbar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Pbar,
    Ebar,
    Hbar,
    H,
    Sbar,
    S,
    /// Barred ribbon functions whose row composition is a partition.
    RibbonBar,
}

impl Basis {
    pub const ALL: [Basis; 7] = [Basis::Pbar, Basis::Ebar, Basis::Hbar, Basis::H, Basis::Sbar, Basis::S, Basis::RibbonBar];

    fn barred(self) -> (Basis, bool) {
        match self {
            Basis::H => (Basis::Hbar, true),
            Basis::S => (Basis::Sbar, true),
            b => (b, false),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Pbar => "pbar",
            Basis::Ebar => "ebar",
            Basis::Hbar => "hbar",
            Basis::H => "h",
            Basis::Sbar => "sbar",
            Basis::S => "s",
            Basis::RibbonBar => "ribbonbar",
        }
    }
}

impl FromStr for Basis {
    type Err = SymFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Basis::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| SymFuncError::Invalid(format!("unknown basis {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    Partition(Partition),
    Ribbon(SignSeq),
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Partition(p) => write!(f, "{p}"),
            BasisIndex::Ribbon(e) => write!(f, "{e}"),
        }
    }
}

fn index_for(basis: Basis, lambda: &Partition) -> BasisIndex {
    match basis {
        Basis::RibbonBar => BasisIndex::Ribbon(SignSeq::from_composition(lambda.parts())),
        _ => BasisIndex::Partition(lambda.clone()),
    }
}

fn barred_element(basis: Basis, lambda: &Partition) -> QSym {
    match basis {
        Basis::Pbar => qsym::pbar_product(lambda.parts()),
        Basis::Ebar => qsym::ebar_product(lambda.parts()),
        Basis::Hbar => qsym::hbar_product(lambda.parts()),
        Basis::Sbar => qsym::schur(lambda),
        Basis::RibbonBar => qsym::ribbon_by_coarsening(&SignSeq::from_composition(lambda.parts())),
        Basis::H | Basis::S => unreachable!("unbarred bases go through their barred counterparts"),
    }
}

/// A single basis element as an expression.
pub fn basis_element(basis: Basis, index: &BasisIndex) -> Result<SymFuncExpr, SymFuncError> {
    let (barred, modified) = basis.barred();
    let lambda = match (barred, index) {
        (Basis::RibbonBar, BasisIndex::Ribbon(e)) => {
            let c = e.composition();
            if c.windows(2).any(|w| w[0] < w[1]) {
                return Err(SymFuncError::Invalid(format!("ribbon {e} has non-partition rows")));
            }
            Partition::new(c)
        }
        (Basis::RibbonBar, _) | (_, BasisIndex::Ribbon(_)) => {
            return Err(SymFuncError::Invalid(format!("index {index} does not belong to basis {}", basis.name())))
        }
        (_, BasisIndex::Partition(p)) => p.clone(),
    };
    let f = SymFuncExpr::from_qsym(&barred_element(barred, &lambda), Plethysm::Barred);
    Ok(if modified { f.plethysm_q(PlethysmDirection::BarToModified) } else { f })
}

type Inverse = Arc<(Vec<Partition>, Matrix)>;

static INVERSES: Lazy<Mutex<HashMap<(Basis, u32), Inverse>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Inverse of the matrix whose columns are the basis elements of degree `d` in `pbar`
/// coordinates (rows and columns indexed by `partitions(d)`).
fn inverse(basis: Basis, d: u32) -> Inverse {
    if let Some(inv) = INVERSES.lock().unwrap().get(&(basis, d)) {
        return inv.clone();
    }
    let parts = partitions(d);
    let pos: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let k = parts.len();
    let mut m = Matrix::zeros(k, k);
    for (j, lambda) in parts.iter().enumerate() {
        for (mu, c) in barred_element(basis, lambda) {
            m.set(pos[&mu], j, c);
        }
    }
    let inv = m.inverse().expect("basis transition matrix is invertible");
    let out = Arc::new((parts, inv));
    INVERSES.lock().unwrap().insert((basis, d), out.clone());
    out
}

/// Coefficients of `f` in `basis`: `f = sum_I c_I b_I`. Zero coefficients are omitted.
pub fn basis_convert(f: &SymFuncExpr, basis: Basis) -> BTreeMap<BasisIndex, RatFunc> {
    let (barred, modified) = basis.barred();
    let f = if modified { f.plethysm_q(PlethysmDirection::ModifiedToBar) } else { f.clone() };
    let q = Vars::q();
    let mut out = BTreeMap::new();
    for d in f.degrees() {
        let inv = inverse(barred, d);
        let (parts, m) = (&inv.0, &inv.1);
        let coords: Vec<RatFunc> = parts.iter().map(|mu| f.coeff(mu)).collect();
        for (i, lambda) in parts.iter().enumerate() {
            let mut acc = RatFunc::zero(&q);
            for (j, c) in coords.iter().enumerate() {
                let a: &Rational = m.get(i, j);
                if !a.is_zero() && !c.is_zero() {
                    acc = &acc + &c.scale(a);
                }
            }
            let acc = acc.normalize();
            if !acc.is_zero() {
                out.insert(index_for(barred, lambda), acc);
            }
        }
    }
    out
}

/// `sum_I c_I b_I`, the inverse of [`basis_convert`].
pub fn from_basis(coeffs: &BTreeMap<BasisIndex, RatFunc>, basis: Basis) -> Result<SymFuncExpr, SymFuncError> {
    let mut acc = SymFuncExpr::zero();
    for (idx, c) in coeffs {
        acc = acc.add(&basis_element(basis, idx)?.scale(c));
    }
    let (_, modified) = basis.barred();
    Ok(acc.with_flag(if modified { Plethysm::Modified } else { Plethysm::Barred }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{ebar, hbar, pbar, ribbon};

    #[test]
    fn degree_one_collapse() {
        let one = BTreeMap::from([(BasisIndex::Partition(Partition::new(vec![1])), RatFunc::one(&Vars::q()))]);
        for b in [Basis::Pbar, Basis::Ebar, Basis::Hbar, Basis::Sbar] {
            assert_eq!(basis_convert(&pbar(1), b), one);
        }
    }

    #[test]
    fn newton_in_ebar() {
        let got = basis_convert(&ebar(2), Basis::Pbar);
        let p11 = BasisIndex::Partition(Partition::new(vec![1, 1]));
        let p2 = BasisIndex::Partition(Partition::new(vec![2]));
        assert_eq!(got[&p11], RatFunc::constant(&Vars::q(), Rational::new(1, 2)));
        assert_eq!(got[&p2], RatFunc::constant(&Vars::q(), Rational::new(-1, 2)));
        let plus = ribbon(&SignSeq::parse("+").unwrap(), Plethysm::Barred);
        let got = basis_convert(&plus, Basis::Hbar);
        assert_eq!(got.len(), 1);
        assert_eq!(from_basis(&got, Basis::Hbar).unwrap(), hbar(2));
    }

    #[test]
    fn round_trips_to_six() {
        for d in 1..=6 {
            let mut f = SymFuncExpr::zero();
            for (i, mu) in partitions(d).into_iter().enumerate() {
                let c = RatFunc::constant(&Vars::q(), Rational::new(i as i64 + 1, 3));
                f = f.add(&pbar(0).mul(&SymFuncExpr::new([(mu, c)], Plethysm::Barred)));
            }
            for b in Basis::ALL {
                let c = basis_convert(&f, b);
                assert_eq!(from_basis(&c, b).unwrap(), f, "{b:?} d = {d}");
            }
        }
    }
}

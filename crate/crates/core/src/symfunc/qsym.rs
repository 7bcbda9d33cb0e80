//! Symmetric functions with plain rational coefficients in the barred power sums. Every
//! barred basis element lives here; the q-dependence only enters through the plethysm.

use std::collections::BTreeMap;

use crate::arith::Rational;

use super::partition::{partitions, Partition, SignSeq};

pub(crate) type QSym = BTreeMap<Partition, Rational>;

pub(crate) fn one() -> QSym {
    QSym::from([(Partition::empty(), Rational::one())])
}

pub(crate) fn add_into(acc: &mut QSym, f: &QSym, c: &Rational) {
    for (mu, v) in f {
        let e = acc.entry(mu.clone()).or_insert_with(Rational::zero);
        *e = &*e + &(v * c);
        if e.is_zero() {
            acc.remove(mu);
        }
    }
}

pub(crate) fn mul(a: &QSym, b: &QSym) -> QSym {
    let mut out = QSym::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let key = ma.union(mb);
            let e = out.entry(key.clone()).or_insert_with(Rational::zero);
            *e = &*e + &(ca * cb);
            if e.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

pub(crate) fn pbar(d: u32) -> QSym {
    if d == 0 {
        return one();
    }
    QSym::from([(Partition::new(vec![d]), Rational::one())])
}

pub(crate) fn hbar(d: i64) -> QSym {
    if d < 0 {
        return QSym::new();
    }
    partitions(d as u32)
        .into_iter()
        .map(|mu| {
            let c = mu.z_inv();
            (mu, c)
        })
        .collect()
}

pub(crate) fn ebar(d: i64) -> QSym {
    if d < 0 {
        return QSym::new();
    }
    partitions(d as u32)
        .into_iter()
        .map(|mu| {
            let c = mu.z_inv();
            let c = if mu.sign() < 0 { -c } else { c };
            (mu, c)
        })
        .collect()
}

fn product_of(parts: &[u32], f: impl Fn(i64) -> QSym) -> QSym {
    parts.iter().fold(one(), |acc, &k| mul(&acc, &f(k as i64)))
}

pub(crate) fn hbar_product(parts: &[u32]) -> QSym {
    product_of(parts, hbar)
}

pub(crate) fn ebar_product(parts: &[u32]) -> QSym {
    product_of(parts, ebar)
}

pub(crate) fn pbar_product(parts: &[u32]) -> QSym {
    QSym::from([(Partition::new(parts.to_vec()), Rational::one())])
}

/// Jacobi-Trudi: `det(h_{lambda_i - i + j})`, expanded along rows with a subset DP.
pub(crate) fn schur(lambda: &Partition) -> QSym {
    let parts = lambda.parts();
    let l = parts.len();
    if l == 0 {
        return one();
    }
    // dp[mask]: signed sum over bijections from the first popcount(mask) rows onto `mask`
    let mut dp: Vec<Option<QSym>> = vec![None; 1 << l];
    dp[0] = Some(one());
    for mask in 0usize..(1 << l) {
        let Some(cur) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == l {
            dp[mask] = Some(cur);
            continue;
        }
        for col in 0..l {
            if mask & (1 << col) != 0 {
                continue;
            }
            let h = hbar(parts[row] as i64 - row as i64 + col as i64);
            if h.is_empty() {
                continue;
            }
            // sign of inserting `col` after the columns already used: count used columns above it
            let above = (mask >> col).count_ones();
            let sign = if above % 2 == 0 { Rational::one() } else { -Rational::one() };
            let term = mul(&cur, &h);
            let slot = dp[mask | (1 << col)].get_or_insert_with(QSym::new);
            add_into(slot, &term, &sign);
        }
        dp[mask] = Some(cur);
    }
    dp[(1 << l) - 1].take().unwrap_or_default()
}

/// Ribbon Schur function by inclusion-exclusion over coarsenings of the row composition.
pub(crate) fn ribbon_by_coarsening(eps: &SignSeq) -> QSym {
    let comp = eps.composition();
    let k = comp.len();
    let mut out = QSym::new();
    // each subset of the k-1 row breaks that are kept gives a coarsening
    for keep in 0u64..(1 << (k - 1)) {
        let mut parts = Vec::new();
        let mut cur = comp[0];
        for (i, &c) in comp.iter().enumerate().skip(1) {
            if keep >> (i - 1) & 1 == 1 {
                parts.push(cur);
                cur = c;
            } else {
                cur += c;
            }
        }
        parts.push(cur);
        let sign = if (k - parts.len()) % 2 == 0 { Rational::one() } else { -Rational::one() };
        add_into(&mut out, &hbar_product(&parts), &sign);
    }
    out
}

/// Ribbon Schur function from the product rule `s_a s_b = s_{a,+,b} + s_{a,-,b}` and
/// `s_{+...+} = h_d`, splitting at the last minus sign.
pub(crate) fn ribbon_by_product_rule(eps: &SignSeq) -> QSym {
    match eps.0.iter().rposition(|&plus| !plus) {
        None => hbar(eps.size() as i64),
        Some(pos) => {
            let left = SignSeq(eps.0[..pos].to_vec());
            let right = SignSeq(eps.0[pos + 1..].to_vec());
            let mut joined = left.0.clone();
            joined.push(true);
            joined.extend_from_slice(&right.0);
            let mut out = mul(&ribbon_by_product_rule(&left), &ribbon_by_product_rule(&right));
            add_into(&mut out, &ribbon_by_product_rule(&SignSeq(joined)), &-Rational::one());
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn degree_two() {
        let p11 = Partition::new(vec![1, 1]);
        let p2 = Partition::new(vec![2]);
        assert_eq!(ebar(2), QSym::from([(p2.clone(), r(-1, 2)), (p11.clone(), r(1, 2))]));
        assert_eq!(hbar(2), QSym::from([(p2, r(1, 2)), (p11, r(1, 2))]));
    }

    #[test]
    fn schur_rows_and_columns() {
        for d in 1..=5 {
            assert_eq!(schur(&Partition::new(vec![d])), hbar(d as i64));
            assert_eq!(schur(&Partition::new(vec![1; d as usize])), ebar(d as i64));
        }
    }

    #[test]
    fn hook_is_ribbon() {
        let eps = SignSeq::parse("+-").unwrap();
        assert_eq!(ribbon_by_coarsening(&eps), schur(&Partition::new(vec![2, 1])));
    }

    #[test]
    fn routes_agree() {
        for d in 1..=6 {
            for eps in SignSeq::all(d) {
                assert_eq!(ribbon_by_coarsening(&eps), ribbon_by_product_rule(&eps), "{eps}");
            }
        }
    }
}

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::shuffle::{gen_Pbar, shuffle_mul, ShuffleElement, SlopeParams};

use super::{Partition, SymFuncError, SymFuncExpr};

static PRODUCTS: Lazy<Mutex<HashMap<(i64, usize, Vec<u32>), ShuffleElement>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `pbar_mu -> Pbar_{m mu_1, n mu_1} * Pbar_{m mu_2, n mu_2} * ...`, memoized on prefixes.
fn pbar_image(m: i64, n: usize, mu: &[u32]) -> Result<ShuffleElement, SymFuncError> {
    if mu.is_empty() {
        return Ok(ShuffleElement::unit());
    }
    let key = (m, n, mu.to_vec());
    if let Some(v) = PRODUCTS.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let (last, rest) = mu.split_last().unwrap();
    let head = pbar_image(m, n, rest)?;
    let gen = gen_Pbar(SlopeParams::new(m, n, *last as usize)?)?;
    let out = if rest.is_empty() { gen } else { shuffle_mul(&head, &gen)? };
    PRODUCTS.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// The slope map: the algebra homomorphism with `pbar_d -> Pbar_{md, nd}`. The input must
/// be homogeneous, since the image of each degree lives in a different number of variables.
pub fn phi_slope(m: i64, n: usize, f: &SymFuncExpr) -> Result<ShuffleElement, SymFuncError> {
    SlopeParams::new(m, n, 1)?;
    let d = f.homogeneous_degree()?;
    let mut acc = ShuffleElement::zero(n * d as usize);
    let terms: Vec<(&Partition, _)> = f.terms().iter().collect();
    for (mu, c) in terms {
        let img = pbar_image(m, n, mu.parts())?;
        acc = acc.try_add(&img.scale(c))?;
    }
    Ok(acc)
}

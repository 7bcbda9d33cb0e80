use super::{AffineError, AffinePerm};

/// Parses a whitespace-separated word in `s0, s1, ..., w, y1, ...`, each optionally raised
/// to an integer power (`w^-1`, `s2^3`), composed left to right.
pub fn parse_word(n: usize, src: &str) -> Result<AffinePerm, AffineError> {
    if n == 0 {
        return Err(AffineError::InvalidWindow("n must be positive".into()));
    }
    let mut acc = AffinePerm::identity(n);
    for (pos, tok) in src.split_whitespace().enumerate() {
        let err = |msg: String| AffineError::Parse { pos, msg };
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| err(format!("bad exponent in {tok:?}")))?),
            None => (tok, 1),
        };
        let gen = if base == "w" {
            AffinePerm::omega(n)
        } else if let Some(i) = base.strip_prefix('s') {
            let i: i64 = i.parse().map_err(|_| err(format!("bad generator {tok:?}")))?;
            AffinePerm::sigma(n, i)?
        } else if let Some(i) = base.strip_prefix('y') {
            let i: i64 = i.parse().map_err(|_| err(format!("bad generator {tok:?}")))?;
            AffinePerm::y(n, i)?
        } else {
            return Err(err(format!("unknown generator {tok:?}")));
        };
        acc = acc.compose(&gen.pow(exp));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word(4, "w w").unwrap(), AffinePerm::omega_pow(4, 2));
        assert!(parse_word(3, "w w^-1").unwrap().is_identity());
        assert!(parse_word(3, "").unwrap().is_identity());
        let v = parse_word(4, "w w s1").unwrap();
        assert_eq!(v, AffinePerm::omega_pow(4, 2).compose(&AffinePerm::sigma(4, 1).unwrap()));
        assert_eq!(parse_word(2, "y1").unwrap(), AffinePerm::y(2, 1).unwrap());
        assert!(matches!(parse_word(3, "s1 x2"), Err(AffineError::Parse { pos: 1, .. })));
        assert!(matches!(parse_word(3, "s7"), Err(AffineError::IndexOutOfRange { .. })));
    }
}

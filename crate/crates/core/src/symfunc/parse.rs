//! Expressions such as `q1*ebar[2] + (1 - q2)/(1 - q1)*s[2,1]^2 - ribbon[+-]`.
//!
//! Atoms: integers, `q1`, `q2`, and `name[args]` with `name` one of `pbar p ebar e hbar h`
//! (a degree), `sbar s` (a partition, comma separated) or `ribbonbar ribbon` (a sign word).
//! Operators: `+ - * /` and `^` with an integer exponent. Division and negative powers
//! apply to scalars only.

use num_bigint::BigInt;

use crate::arith::{Monomial, RatFunc, Rational, Vars};

use super::{e, ebar, h, hbar, p, pbar, ribbon, s, sbar, Partition, Plethysm, SignSeq, SymFuncError, SymFuncExpr};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String, Option<String>),
    Op(char),
}

fn err(pos: usize, msg: impl Into<String>) -> SymFuncError {
    SymFuncError::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, SymFuncError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(digits.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|x| x.1).collect();
            let mut arg = None;
            if i < chars.len() && chars[i].1 == '[' {
                let open = i;
                while i < chars.len() && chars[i].1 != ']' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(err(chars[open].0, "unclosed '['"));
                }
                arg = Some(chars[open + 1..i].iter().map(|x| x.1).collect());
                i += 1;
            }
            out.push((pos, Tok::Ident(name, arg)));
        } else if "+-*/^()".contains(c) || c == '−' {
            out.push((pos, Tok::Op(if c == '−' { '-' } else { c })));
            i += 1;
        } else {
            return Err(err(pos, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SymFuncExpr, SymFuncError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SymFuncExpr, SymFuncError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let pos = self.pos();
                let rhs = self.unary()?;
                let c = rhs.as_scalar().ok_or_else(|| err(pos, "can only divide by a scalar"))?;
                if c.is_zero() {
                    return Err(err(pos, "division by zero"));
                }
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<SymFuncExpr, SymFuncError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<SymFuncExpr, SymFuncError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let pos = self.pos();
        let k = match self.peek() {
            Some(Tok::Int(k)) => u32::try_from(k).map_err(|_| err(pos, "exponent too large"))?,
            _ => return Err(err(pos, "expected an integer exponent")),
        };
        self.i += 1;
        if !neg {
            return Ok(base.pow(k));
        }
        let c = base.as_scalar().ok_or_else(|| err(pos, "negative powers apply to scalars only"))?;
        if c.is_zero() {
            return Err(err(pos, "division by zero"));
        }
        Ok(SymFuncExpr::scalar(c.pow(-(k as i32))?))
    }

    fn atom(&mut self) -> Result<SymFuncExpr, SymFuncError> {
        let pos = self.pos();
        let tok = self.peek().cloned().ok_or_else(|| err(pos, "unexpected end of input"))?;
        self.i += 1;
        match tok {
            Tok::Int(k) => Ok(SymFuncExpr::scalar(RatFunc::constant(&Vars::q(), Rational::from_int(k)))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Tok::Op(c) => Err(err(pos, format!("unexpected {c:?}"))),
            Tok::Ident(name, arg) => ident(pos, &name, arg.as_deref()),
        }
    }
}

fn degree(pos: usize, arg: &str) -> Result<u32, SymFuncError> {
    arg.trim().parse().map_err(|_| err(pos, format!("expected a degree, got {arg:?}")))
}

fn partition(pos: usize, arg: &str) -> Result<Partition, SymFuncError> {
    let mut parts = Vec::new();
    for piece in arg.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        parts.push(piece.parse::<u32>().map_err(|_| err(pos, format!("bad partition part {piece:?}")))?);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return Err(err(pos, "partition parts must be positive and weakly decreasing"));
    }
    Ok(Partition::new(parts))
}

fn ident<'a>(pos: usize, name: &str, arg: Option<&'a str>) -> Result<SymFuncExpr, SymFuncError> {
    let q = Vars::q();
    let need = |arg: Option<&'a str>| arg.ok_or_else(|| err(pos, format!("{name} needs an argument in brackets")));
    match name {
        "q1" | "q2" | "q" if arg.is_none() => {
            let i = if name == "q2" { 1 } else { 0 };
            Ok(SymFuncExpr::scalar(RatFunc::monomial(&q, Monomial::var(i, 1), Rational::one())))
        }
        "pbar" => Ok(pbar(degree(pos, need(arg)?)?)),
        "p" => Ok(p(degree(pos, need(arg)?)?)),
        "ebar" => Ok(ebar(degree(pos, need(arg)?)?)),
        "e" => Ok(e(degree(pos, need(arg)?)?)),
        "hbar" => Ok(hbar(degree(pos, need(arg)?)?)),
        "h" => Ok(h(degree(pos, need(arg)?)?)),
        "sbar" => Ok(sbar(&partition(pos, need(arg)?)?)),
        "s" => Ok(s(&partition(pos, need(arg)?)?)),
        "ribbonbar" | "ribbon" => {
            let eps = SignSeq::parse(need(arg)?).map_err(|m| err(pos, m))?;
            let kind = if name == "ribbon" { Plethysm::Modified } else { Plethysm::Barred };
            Ok(ribbon(&eps, kind))
        }
        _ => Err(err(pos, format!("unknown identifier {name:?}"))),
    }
}

/// Parses a symmetric-function expression.
pub fn parse_expr(src: &str) -> Result<SymFuncExpr, SymFuncError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0, end: src.len() };
    let out = p.expr()?;
    if p.i != p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(parse_expr("ebar[2]").unwrap(), ebar(2));
        assert_eq!(parse_expr("(pbar[1]^2 - pbar[2])/2").unwrap(), ebar(2));
        assert_eq!(parse_expr("ribbon[+] / (1 - q1) + q1*ebar[2]").unwrap(), hbar(2));
        assert_eq!(parse_expr("s[2,1]").unwrap(), parse_expr("ribbon[+-]").unwrap());
        assert_eq!(parse_expr("q1^-1*q1*h[1]").unwrap(), h(1));
        assert_eq!(parse_expr("0").unwrap(), SymFuncExpr::zero());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("ebar[2] + foo[1]") {
            Err(SymFuncError::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("ebar[2] / pbar[1]"), Err(SymFuncError::Parse { .. })));
        assert!(matches!(parse_expr("(ebar[2]"), Err(SymFuncError::Parse { .. })));
        assert!(matches!(parse_expr("s[1,2]"), Err(SymFuncError::Parse { .. })));
        assert!(matches!(parse_expr("1/0"), Err(SymFuncError::Parse { .. })));
    }
}

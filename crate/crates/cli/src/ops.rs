//! The cacheable operations: each is named, takes canonical string parameters and yields a
//! shuffle element.

use hallshuffle::shuffle::{gen_H, gen_Hprime, gen_Pbar, gen_R, gen_Sbar, gen_ribbon, mat_substack_class, shuffle_mul};
use hallshuffle::symfunc::{parse_expr, phi_slope, SymFuncError};
use hallshuffle::{Presentation, ShuffleElement, ShuffleError, SignSeq, SlopeParams, SymFuncExpr};

use crate::cache::Cache;
use crate::CliError;

const COPRIME: &str = "\"m ∈ ℤ and n ∈ ℕ are coprime\"";

pub fn shuffle_err(e: ShuffleError) -> CliError {
    match e {
        ShuffleError::NonCoprime { m, n } => CliError::Usage(format!("(m, n) = ({m}, {n}) is not allowed: the constraint is {COPRIME}, with d >= 1")),
        ShuffleError::InvalidParams(msg) => CliError::Usage(msg),
        other => CliError::Invariant(other.to_string()),
    }
}

pub fn symfunc_err(e: SymFuncError) -> CliError {
    match e {
        SymFuncError::Shuffle(s) => shuffle_err(s),
        SymFuncError::Arith(a) => CliError::Invariant(a.to_string()),
        SymFuncError::Parse { pos, msg } => CliError::Usage(format!("parse error at byte {pos}: {msg}")),
        other => CliError::Usage(other.to_string()),
    }
}

fn int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("expected an integer for {what}, got {s:?}")))
}

fn arity(kind: &str, params: &[String], names: &[&str]) -> Result<(), CliError> {
    if params.len() != names.len() {
        return Err(CliError::Usage(format!("{kind} takes {} parameters ({}), got {}", names.len(), names.join(" "), params.len())));
    }
    Ok(())
}

/// `(m, n, d)` with `(m, n)` reduced to lowest terms: the element only depends on `(md, nd)`.
fn slope(params: &[String]) -> Result<SlopeParams, CliError> {
    let m: i64 = int(&params[0], "m")?;
    let n: usize = int(&params[1], "n")?;
    let d: usize = int(&params[2], "d")?;
    if n == 0 || d == 0 {
        return Err(CliError::Usage("n and d must be positive".into()));
    }
    let g = num_gcd(m.unsigned_abs(), n as u64) as i64;
    Ok(SlopeParams { m: m / g, n: n / g as usize, d: d * g as usize })
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Canonical parameters of `gen <kind> <params>`, as used for the cache key.
pub fn gen_params(kind: &str, params: &[String]) -> Result<Vec<String>, CliError> {
    let canon = |v: Vec<String>| -> Vec<String> { std::iter::once(kind.to_string()).chain(v).collect() };
    Ok(match kind {
        "H" | "Hprime" => {
            arity(kind, params, &["m", "n"])?;
            let m: i64 = int(&params[0], "m")?;
            let n: usize = int(&params[1], "n")?;
            canon(vec![m.to_string(), n.to_string()])
        }
        "Sbar" | "SbarB" | "Pbar" => {
            arity(kind, params, &["m", "n", "d"])?;
            let sp = slope(params)?;
            canon(vec![sp.m.to_string(), sp.n.to_string(), sp.d.to_string()])
        }
        "R" => {
            if params.is_empty() {
                return Err(CliError::Usage("R takes one or more exponents d_1 .. d_n".into()));
            }
            let ds: Vec<i32> = params.iter().map(|p| int(p, "an exponent")).collect::<Result<_, _>>()?;
            canon(ds.iter().map(|d| d.to_string()).collect())
        }
        "ribbon" => {
            arity(kind, params, &["m", "n", "signs"])?;
            let m: i64 = int(&params[0], "m")?;
            let n: usize = int(&params[1], "n")?;
            let eps = SignSeq::parse(&params[2]).map_err(CliError::Usage)?;
            canon(vec![m.to_string(), n.to_string(), eps.to_string()])
        }
        "matclass" => {
            arity(kind, params, &["n"])?;
            let n: usize = int(&params[0], "n")?;
            canon(vec![n.to_string()])
        }
        other => return Err(CliError::Usage(format!("unknown generator kind {other:?}"))),
    })
}

/// Canonical parameters of `phi m n expr`: the slope and the expression's JSON.
pub fn phi_params(m: i64, n: usize, expr: &str) -> Result<Vec<String>, CliError> {
    let f = parse_expr(expr).map_err(symfunc_err)?;
    Ok(vec![m.to_string(), n.to_string(), f.to_json()])
}

/// Canonical parameters of `mul`: both operands' JSON.
pub fn mul_params(a: &ShuffleElement, b: &ShuffleElement) -> Vec<String> {
    vec![a.to_json(), b.to_json()]
}

fn compute_gen(p: &[String]) -> Result<ShuffleElement, CliError> {
    let kind = p[0].as_str();
    let ints = |i: usize| -> Result<i64, CliError> { int(&p[i], "parameter") };
    let sp = || -> Result<SlopeParams, CliError> { Ok(SlopeParams { m: ints(1)?, n: ints(2)? as usize, d: ints(3)? as usize }) };
    match kind {
        "H" => gen_H(ints(1)?, ints(2)? as usize),
        "Hprime" => gen_Hprime(ints(1)?, ints(2)? as usize),
        "Sbar" => gen_Sbar(sp()?, Presentation::A),
        "SbarB" => gen_Sbar(sp()?, Presentation::B),
        "Pbar" => gen_Pbar(sp()?),
        "R" => gen_R(&p[1..].iter().map(|x| int(x, "exponent")).collect::<Result<Vec<i32>, _>>()?),
        "ribbon" => gen_ribbon(ints(1)?, ints(2)? as usize, &SignSeq::parse(&p[3]).map_err(CliError::Usage)?.0),
        "matclass" => mat_substack_class(ints(1)? as usize),
        other => return Err(CliError::Usage(format!("unknown generator kind {other:?}"))),
    }
    .map_err(shuffle_err)
}

/// Evaluates an operation from its canonical parameters.
pub fn compute(op: &str, params: &[String]) -> Result<ShuffleElement, CliError> {
    match op {
        "gen" => compute_gen(params),
        "phi" => {
            let f = SymFuncExpr::from_json(&params[2]).map_err(|e| CliError::Usage(format!("bad expression: {e}")))?;
            phi_slope(int(&params[0], "m")?, int(&params[1], "n")?, &f).map_err(symfunc_err)
        }
        "mul" => {
            let a = ShuffleElement::from_json(&params[0]).map_err(CliError::Usage)?;
            let b = ShuffleElement::from_json(&params[1]).map_err(CliError::Usage)?;
            shuffle_mul(&a, &b).map_err(shuffle_err)
        }
        other => Err(CliError::Invariant(format!("unknown cached operation {other:?}"))),
    }
}

/// Number of `z`-variables the result of an operation lives in.
pub fn variables(op: &str, params: &[String]) -> Result<usize, CliError> {
    let at = |i: usize| int::<usize>(&params[i], "parameter");
    Ok(match (op, params[0].as_str()) {
        ("gen", "H" | "Hprime" | "matclass") => at(params.len() - 1)?,
        ("gen", "Sbar" | "SbarB" | "Pbar") => at(2)? * at(3)?,
        ("gen", "R") => params.len() - 1,
        ("gen", "ribbon") => at(2)? * (params[3].chars().count() + 1),
        ("phi", _) => {
            let f = SymFuncExpr::from_json(&params[2]).map_err(CliError::Usage)?;
            at(1)? * f.homogeneous_degree().map_err(symfunc_err)? as usize
        }
        ("mul", _) => params.iter().map(|p| ShuffleElement::from_json(p).map(|e| e.n())).sum::<Result<usize, _>>().map_err(CliError::Usage)?,
        _ => 0,
    })
}

/// Refuses operations whose symmetrization would run over more than `limit` variables.
pub fn check_size(op: &str, params: &[String], limit: usize) -> Result<(), CliError> {
    let k = variables(op, params)?;
    if k > limit {
        return Err(CliError::Usage(format!("result has {k} variables, above the limit of {limit} (raise it with --max-vars)")));
    }
    Ok(())
}

/// Cache lookup, falling back to computing and publishing.
pub fn cached(cache: &Cache, op: &str, params: &[String]) -> Result<ShuffleElement, CliError> {
    if let Some(v) = cache.get(op, params) {
        return Ok(v);
    }
    let v = compute(op, params)?;
    cache.put(op, params, &v);
    Ok(v)
}

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, Vars};
use super::poly::LaurentPoly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: BTreeMap<String, i32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenFactorJson {
    pub exps: BTreeMap<String, i32>,
    pub mult: i32,
}

/// Wire form of a Laurent polynomial; `denFactors` is always empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LaurentPolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
    #[serde(default)]
    pub den_factors: Vec<DenFactorJson>,
}

/// Wire form of a rational function: expanded numerator, denominator binomials, and an
/// optional general denominator polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RatFuncJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
    #[serde(default)]
    pub den_factors: Vec<DenFactorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den_residual: Option<Vec<TermJson>>,
}

fn exps_json(vars: &Vars, m: &Monomial) -> BTreeMap<String, i32> {
    m.exps().iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (vars.name(i).to_string(), e)).collect()
}

fn terms_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.display_terms().into_iter().map(|(m, c)| TermJson { exps: exps_json(p.vars(), m), num: c.numer().to_string(), den: c.denom().to_string() }).collect()
}

fn parse_exps(vars: &Vars, exps: &BTreeMap<String, i32>) -> Result<Monomial, ArithError> {
    let mut m = Monomial::one();
    for (name, &e) in exps {
        let i = vars.index_of(name).ok_or_else(|| ArithError::UnknownVariable(name.clone()))?;
        m.set_exp(i, m.exp(i) + e);
    }
    Ok(m)
}

fn parse_terms(vars: &Vars, terms: &[TermJson]) -> Result<LaurentPoly, ArithError> {
    let mut p = LaurentPoly::zero(vars);
    for t in terms {
        let m = parse_exps(vars, &t.exps)?;
        let num: BigInt = t.num.parse().map_err(|_| ArithError::Malformed(format!("numerator {:?}", t.num)))?;
        let den: BigInt = t.den.parse().map_err(|_| ArithError::Malformed(format!("denominator {:?}", t.den)))?;
        if den == BigInt::from(0) {
            return Err(ArithError::Malformed("zero denominator".into()));
        }
        p.add_term(m, &Rational::new(num, den));
    }
    Ok(p)
}

/// Reuse the interned context when the names match one.
pub(crate) fn vars_from_names(names: &[String]) -> Vars {
    let n = names.len().saturating_sub(2);
    for cand in [Vars::shuffle(n), Vars::flag(n)] {
        if cand.names() == names {
            return cand;
        }
    }
    Vars::new(names.iter().cloned())
}

impl From<&LaurentPoly> for LaurentPolyJson {
    fn from(p: &LaurentPoly) -> Self {
        LaurentPolyJson { vars: p.vars().names().to_vec(), terms: terms_json(p), den_factors: Vec::new() }
    }
}

impl TryFrom<&LaurentPolyJson> for LaurentPoly {
    type Error = ArithError;
    fn try_from(j: &LaurentPolyJson) -> Result<Self, ArithError> {
        if !j.den_factors.is_empty() {
            return Err(ArithError::Malformed("polynomial with denominator factors".into()));
        }
        parse_terms(&vars_from_names(&j.vars), &j.terms)
    }
}

impl From<&RatFunc> for RatFuncJson {
    fn from(r: &RatFunc) -> Self {
        let vars = r.vars();
        RatFuncJson {
            vars: vars.names().to_vec(),
            terms: terms_json(&r.numerator()),
            den_factors: r.den_factors().into_iter().map(|(m, k)| DenFactorJson { exps: exps_json(vars, &m), mult: k as i32 }).collect(),
            den_residual: r.residual_den().map(terms_json),
        }
    }
}

impl TryFrom<&RatFuncJson> for RatFunc {
    type Error = ArithError;
    fn try_from(j: &RatFuncJson) -> Result<Self, ArithError> {
        let vars = vars_from_names(&j.vars);
        let num = parse_terms(&vars, &j.terms)?;
        let mut dens = Vec::new();
        for f in &j.den_factors {
            let m = parse_exps(&vars, &f.exps)?;
            if m.is_one() {
                return Err(ArithError::Malformed("denominator factor (1 - 1)".into()));
            }
            if f.mult < 0 {
                return Err(ArithError::Malformed("negative denominator multiplicity".into()));
            }
            dens.push((m, f.mult as u32));
        }
        let den_residual = match &j.den_residual {
            Some(t) => {
                let d = parse_terms(&vars, t)?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                Some(d)
            }
            None => None,
        };
        Ok(RatFunc::from_parts(num, &dens, den_residual))
    }
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RatFuncJson::deserialize(d)?;
        RatFunc::try_from(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = LaurentPolyJson::deserialize(d)?;
        LaurentPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfunc_round_trip_is_byte_identical() {
        let vars = Vars::q();
        let num = LaurentPoly::one_minus(&vars, &Monomial::from_exps(&[0, 1])).scale(&Rational::new(-3, 2));
        let f = RatFunc::from_parts(num, &[(Monomial::var(0, 1), 2)], None);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains("\"denFactors\":[{\"exps\":{\"q1\":1},\"mult\":2}]"), "{s}");
        let g: RatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        assert_eq!(serde_json::to_string(&g).unwrap(), s);
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let s = r#"{"vars":["q1","q2"],"terms":[{"exps":{"x":1},"num":"1","den":"1"}],"denFactors":[]}"#;
        assert!(serde_json::from_str::<LaurentPoly>(s).is_err());
    }
}

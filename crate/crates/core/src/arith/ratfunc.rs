use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, Vars};
use super::poly::{format_monomial, LaurentPoly};
use super::rational::Rational;
use super::ArithError;

/// Rational function `coeff * unit * residual * prod (1 - m)^k / residual_den`.
///
/// Binomial keys `m` are oriented so their first nonzero exponent is positive;
/// `k > 0` factors sit in the numerator, `k < 0` in the denominator. The residual
/// numerator is shifted to have minimal exponents zero and leading coefficient one, and
/// no denominator binomial divides it. `residual_den` is a general denominator, absent
/// unless a computation produced a denominator that is not a product of binomials.
#[derive(Clone)]
pub struct RatFunc {
    vars: Vars,
    coeff: Rational,
    unit: Monomial,
    factors: BTreeMap<Monomial, i32>,
    residual: LaurentPoly,
    residual_den: Option<LaurentPoly>,
}

/// Image of a variable under [`RatFunc::substitute`].
#[derive(Clone, Debug)]
pub enum Binding {
    /// A monomial in the target context.
    Monomial(Monomial),
    /// A rational value.
    Value(Rational),
}

impl RatFunc {
    pub fn zero(vars: &Vars) -> Self {
        RatFunc {
            vars: vars.clone(),
            coeff: Rational::zero(),
            unit: Monomial::one(),
            factors: BTreeMap::new(),
            residual: LaurentPoly::one(vars),
            residual_den: None,
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut r = Self::zero(vars);
        r.coeff = c;
        r
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        let mut r = Self::constant(vars, c);
        if !r.coeff.is_zero() {
            r.unit = m;
        }
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let vars = p.vars().clone();
        if p.is_zero() {
            return Self::zero(&vars);
        }
        RatFunc { vars, coeff: Rational::one(), unit: Monomial::one(), factors: BTreeMap::new(), residual: p, residual_den: None }.normalized()
    }

    /// `(1 - m)^k`, kept in factored form.
    pub fn binomial(vars: &Vars, m: &Monomial, k: i32) -> Self {
        assert!(!m.is_one(), "(1 - 1) is not a valid binomial factor");
        let mut r = Self::one(vars);
        if k == 0 {
            return r;
        }
        if m.leading_sign() > 0 {
            r.factors.insert(m.clone(), k);
        } else {
            // 1 - m = -m (1 - m^{-1})
            r.coeff = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            r.unit = m.pow(k);
            r.factors.insert(m.inv(), k);
        }
        r
    }

    /// `c * m - c' * m'` style factors are built as `unit * (1 - m)`; this is `a * (1 - m)`.
    pub fn scaled_binomial(vars: &Vars, a: &Monomial, m: &Monomial) -> Self {
        &Self::monomial(vars, a.clone(), Rational::one()) * &Self::binomial(vars, m, 1)
    }

    /// Assemble from a numerator, denominator binomials `(1 - m)^mult`, and an optional
    /// general denominator.
    pub fn from_parts(num: LaurentPoly, den_factors: &[(Monomial, u32)], den_residual: Option<LaurentPoly>) -> Self {
        let vars = num.vars().clone();
        let mut r = Self::from_poly(num);
        for (m, k) in den_factors {
            r = &r * &Self::binomial(&vars, m, -(*k as i32));
        }
        if let Some(d) = den_residual {
            r = &r * &Self::from_poly(d).inv().expect("zero denominator");
        }
        r
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.as_poly().map(|p| p.is_one()).unwrap_or(false)
    }

    pub fn factors(&self) -> &BTreeMap<Monomial, i32> {
        &self.factors
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn unit(&self) -> &Monomial {
        &self.unit
    }

    pub fn residual(&self) -> &LaurentPoly {
        &self.residual
    }

    pub fn residual_den(&self) -> Option<&LaurentPoly> {
        self.residual_den.as_ref()
    }

    /// Denominator binomials with their (positive) multiplicities.
    pub fn den_factors(&self) -> Vec<(Monomial, u32)> {
        self.factors.iter().filter(|(_, &k)| k < 0).map(|(m, &k)| (m.clone(), (-k) as u32)).collect()
    }

    pub fn has_denominator(&self) -> bool {
        self.residual_den.is_some() || self.factors.values().any(|&k| k < 0)
    }

    /// The full numerator `coeff * unit * residual * prod_{k>0} (1 - m)^k`.
    pub fn numerator(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        let mut p = self.residual.mul_term(&self.unit, &self.coeff);
        for (m, &k) in &self.factors {
            for _ in 0..k.max(0) {
                p = p.mul_one_minus(m);
            }
        }
        p
    }

    /// The full denominator `prod_{k<0} (1 - m)^{-k} * residual_den`.
    pub fn denominator(&self) -> LaurentPoly {
        let mut p = self.residual_den.clone().unwrap_or_else(|| LaurentPoly::one(&self.vars));
        for (m, &k) in &self.factors {
            for _ in 0..(-k).max(0) {
                p = p.mul_one_minus(m);
            }
        }
        p
    }

    /// The value as a Laurent polynomial, if there is no denominator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.has_denominator() {
            None
        } else {
            Some(self.numerator())
        }
    }

    /// Numerator binomial factors are multiplied out into the residual.
    pub fn expanded(&self) -> Self {
        if self.is_zero() || self.factors.values().all(|&k| k < 0) {
            return self.clone();
        }
        let mut r = self.clone();
        r.expand_numerator_factors();
        r.normalized()
    }

    fn expand_numerator_factors(&mut self) {
        let pos: Vec<(Monomial, i32)> = self.factors.iter().filter(|(_, &k)| k > 0).map(|(m, &k)| (m.clone(), k)).collect();
        for (m, k) in pos {
            for _ in 0..k {
                self.residual = self.residual.mul_one_minus(&m);
            }
            self.factors.remove(&m);
        }
    }

    fn absorb_content(&mut self) {
        if self.residual.is_zero() {
            self.coeff = Rational::zero();
            return;
        }
        let shift = self.residual.min_monomial();
        let lead = self.residual.leading().map(|(_, c)| c.clone()).unwrap();
        if !shift.is_one() || !lead.is_one() {
            self.residual = self.residual.mul_term(&shift.inv(), &lead.recip());
            self.unit = self.unit.mul(&shift);
            self.coeff = &self.coeff * &lead;
        }
        if let Some(d) = self.residual_den.take() {
            let shift = d.min_monomial();
            let lead = d.leading().map(|(_, c)| c.clone()).unwrap();
            let d = d.mul_term(&shift.inv(), &lead.recip());
            self.unit = self.unit.div(&shift);
            self.coeff = &self.coeff / &lead;
            if !d.is_one() {
                self.residual_den = Some(d);
            }
        }
    }

    /// Divide the residual by denominator factors where possible. Returns the binomial
    /// keys that could not be fully cancelled, and whether the general denominator remains.
    fn cancel_denominators(&mut self) -> (Vec<Monomial>, bool) {
        let mut stuck = Vec::new();
        let dens: Vec<Monomial> = self.factors.iter().filter(|(_, &k)| k < 0).map(|(m, _)| m.clone()).collect();
        for m in dens {
            loop {
                let k = self.factors[&m];
                match self.residual.div_one_minus(&m) {
                    Some(q) => {
                        self.residual = q;
                        if k + 1 == 0 {
                            self.factors.remove(&m);
                            break;
                        }
                        self.factors.insert(m.clone(), k + 1);
                    }
                    None => {
                        stuck.push(m);
                        break;
                    }
                }
            }
        }
        let mut den_stuck = false;
        if let Some(d) = self.residual_den.take() {
            match self.residual.exact_div(&d) {
                Some(q) => self.residual = q,
                None => {
                    self.residual_den = Some(d);
                    den_stuck = true;
                }
            }
        }
        (stuck, den_stuck)
    }

    /// Pull binomial factors out of a general denominator by trial division.
    fn factor_residual_den(&mut self) {
        let Some(mut d) = self.residual_den.take() else { return };
        let mut progress = true;
        while progress && d.len() > 1 {
            progress = false;
            let mons: Vec<Monomial> = d.terms().map(|(m, _)| m.clone()).collect();
            let mut cands: Vec<Monomial> = Vec::new();
            for a in &mons {
                for b in &mons {
                    let diff = a.div(b);
                    if diff.leading_sign() <= 0 {
                        continue;
                    }
                    let g = diff.exps().iter().fold(0i32, |g, &e| num_integer::gcd(g, e.abs()));
                    let prim = Monomial::from_exps(&diff.exps().iter().map(|e| e / g).collect::<Vec<_>>());
                    for k in 1..=g {
                        cands.push(prim.pow(k));
                    }
                }
            }
            cands.sort();
            cands.dedup();
            for m in cands {
                if let Some(q) = d.div_one_minus(&m) {
                    d = q;
                    *self.factors.entry(m.clone()).or_insert(0) -= 1;
                    if self.factors[&m] == 0 {
                        self.factors.remove(&m);
                    }
                    progress = true;
                    break;
                }
            }
        }
        self.residual_den = Some(d);
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() || self.residual.is_zero() {
            return Self::zero(&self.vars);
        }
        self.factors.retain(|_, k| *k != 0);
        if self.residual_den.is_some() {
            self.absorb_content();
            self.factor_residual_den();
        }
        self.absorb_content();
        let (stuck, den_stuck) = self.cancel_denominators();
        if den_stuck && self.factors.values().any(|&k| k > 0) {
            self.expand_numerator_factors();
            self.cancel_denominators();
        } else if !stuck.is_empty() {
            // (1 - p^b) can only share a factor with (1 - p^a) for the same primitive p
            let roots: Vec<Monomial> = stuck.iter().map(primitive_root).collect();
            let related: Vec<(Monomial, i32)> =
                self.factors.iter().filter(|(m, &k)| k > 0 && roots.contains(&primitive_root(m))).map(|(m, &k)| (m.clone(), k)).collect();
            if !related.is_empty() {
                for (m, k) in related {
                    for _ in 0..k {
                        self.residual = self.residual.mul_one_minus(&m);
                    }
                    self.factors.remove(&m);
                }
                self.cancel_denominators();
            }
        }
        self.absorb_content();
        self
    }

    /// Re-run normalization; idempotent.
    pub fn normalize(&self) -> Self {
        self.clone().normalized()
    }

    fn check_ctx(&self, other: &Self) -> Result<(), ArithError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ArithError::ContextMismatch { left: format!("{:?}", self.vars), right: format!("{:?}", other.vars) })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let mut factors = self.factors.clone();
        for (m, &k) in &other.factors {
            *factors.entry(m.clone()).or_insert(0) += k;
        }
        let residual_den = match (&self.residual_den, &other.residual_den) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(a * b),
        };
        let residual = if other.residual.is_one() {
            self.residual.clone()
        } else if self.residual.is_one() {
            other.residual.clone()
        } else {
            &self.residual * &other.residual
        };
        Ok(RatFunc { vars: self.vars.clone(), coeff: &self.coeff * &other.coeff, unit: self.unit.mul(&other.unit), factors, residual, residual_den }
            .normalized())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_ctx(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let unit = self.unit.meet(&other.unit);
        let mut keys: Vec<&Monomial> = self.factors.keys().chain(other.factors.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut common = BTreeMap::new();
        let mut left_extra = Vec::new();
        let mut right_extra = Vec::new();
        for m in keys {
            let ka = self.factors.get(m).copied().unwrap_or(0);
            let kb = other.factors.get(m).copied().unwrap_or(0);
            let kc = ka.min(kb);
            if kc != 0 {
                common.insert(m.clone(), kc);
            }
            if ka > kc {
                left_extra.push((m.clone(), ka - kc));
            }
            if kb > kc {
                right_extra.push((m.clone(), kb - kc));
            }
        }
        let side = |x: &RatFunc, extra: &[(Monomial, i32)], other_den: &Option<LaurentPoly>| {
            let mut p = x.residual.mul_term(&x.unit.div(&unit), &x.coeff);
            for (m, k) in extra {
                for _ in 0..*k {
                    p = p.mul_one_minus(m);
                }
            }
            if let Some(d) = other_den {
                p = &p * d;
            }
            p
        };
        let a = side(self, &left_extra, &other.residual_den);
        let b = side(other, &right_extra, &self.residual_den);
        let residual = &a + &b;
        if residual.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let residual_den = match (&self.residual_den, &other.residual_den) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(a * b),
        };
        Ok(RatFunc { vars: self.vars.clone(), coeff: Rational::one(), unit, factors: common, residual, residual_den }.normalized())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&-other)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (residual, residual_den) = match &self.residual_den {
            Some(d) => (d.clone(), Some(self.residual.clone())),
            None => (LaurentPoly::one(&self.vars), Some(self.residual.clone())),
        };
        Ok(RatFunc {
            vars: self.vars.clone(),
            coeff: self.coeff.recip(),
            unit: self.unit.inv(),
            factors: self.factors.iter().map(|(m, &k)| (m.clone(), -k)).collect(),
            residual,
            residual_den: residual_den.filter(|d| !d.is_one()),
        }
        .normalized())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut r = self.clone();
        r.coeff = &r.coeff * c;
        r
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut r = self.clone();
        if !r.is_zero() {
            r.unit = r.unit.mul(m);
        }
        r
    }

    pub fn pow(&self, e: i32) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.vars);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ArithError> {
        let den = self.denominator().eval(point)?;
        if den.is_zero() {
            return Err(ArithError::PoleHit("denominator vanishes".into()));
        }
        Ok(&self.numerator().eval(point)? / &den)
    }

    /// Retag with a context that agrees on every position this value uses.
    pub fn with_vars(&self, vars: &Vars) -> Self {
        RatFunc {
            vars: vars.clone(),
            coeff: self.coeff.clone(),
            unit: self.unit.clone(),
            factors: self.factors.clone(),
            residual: self.residual.with_vars(vars),
            residual_den: self.residual_den.as_ref().map(|d| d.with_vars(vars)),
        }
    }

    /// Move the exponent at position `i` to `map[i]`, retagging with `vars`.
    pub fn relabel(&self, map: &[usize], vars: &Vars) -> Self {
        let mut out = RatFunc {
            vars: vars.clone(),
            coeff: self.coeff.clone(),
            unit: self.unit.relabel(map),
            factors: BTreeMap::new(),
            residual: self.residual.relabel(map, vars),
            residual_den: self.residual_den.as_ref().map(|d| d.relabel(map, vars)),
        };
        let mut extra = RatFunc::one(vars);
        for (m, &k) in &self.factors {
            let r = m.relabel(map);
            if r.leading_sign() > 0 {
                *out.factors.entry(r).or_insert(0) += k;
            } else {
                extra = &extra * &RatFunc::binomial(vars, &r, k);
            }
        }
        let out = out.normalized();
        if extra.is_one() {
            out
        } else {
            &out * &extra
        }
    }

    /// Exact image under the substitution homomorphism. Unbound variables map to the
    /// same-named variable of `target`.
    pub fn substitute(&self, bindings: &BTreeMap<String, Binding>, target: &Vars) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Ok(Self::zero(target));
        }
        let images: Vec<(Rational, Monomial)> = (0..self.vars.len())
            .map(|i| {
                let name = self.vars.name(i);
                match bindings.get(name) {
                    Some(Binding::Monomial(m)) => Ok((Rational::one(), m.clone())),
                    Some(Binding::Value(v)) => Ok((v.clone(), Monomial::one())),
                    None => target.index_of(name).map(|j| (Rational::one(), Monomial::var(j, 1))).ok_or_else(|| ArithError::UnknownVariable(name.to_string())),
                }
            })
            .collect::<Result<_, _>>()?;
        let image_of = |m: &Monomial| -> Result<(Rational, Monomial), ArithError> {
            let mut c = Rational::one();
            let mut t = Monomial::one();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (v, mon) = &images[i];
                if v.is_zero() {
                    if e < 0 {
                        return Err(ArithError::PoleHit(format!("{} -> 0 under a negative power", self.vars.name(i))));
                    }
                    return Ok((Rational::zero(), Monomial::one()));
                }
                c = &c * &v.pow(e);
                t = t.mul(&mon.pow(e));
            }
            Ok((c, t))
        };
        let poly_image = |p: &LaurentPoly| -> Result<LaurentPoly, ArithError> {
            let mut out = LaurentPoly::zero(target);
            for (m, a) in p.terms() {
                let (c, t) = image_of(m)?;
                out.add_term(t, &(&c * a));
            }
            Ok(out)
        };
        let (uc, um) = image_of(&self.unit)?;
        let mut result = RatFunc::monomial(target, um, &uc * &self.coeff);
        result = &result * &RatFunc::from_poly(poly_image(&self.residual)?);
        if let Some(d) = &self.residual_den {
            let di = poly_image(d)?;
            if di.is_zero() {
                return Err(ArithError::PoleHit("general denominator vanishes".into()));
            }
            result = &result * &RatFunc::from_poly(di).inv()?;
        }
        for (m, &k) in &self.factors {
            let (c, t) = image_of(m)?;
            if t.is_one() {
                let v = &Rational::one() - &c;
                if v.is_zero() {
                    if k < 0 {
                        return Err(ArithError::PoleHit(format!("denominator factor (1 - {}) vanishes", format_monomial(&self.vars, m, false))));
                    }
                    return Ok(Self::zero(target));
                }
                result = result.scale(&v.pow(k));
            } else if c.is_one() {
                result = &result * &RatFunc::binomial(target, &t, k);
            } else {
                let mut b = LaurentPoly::one(target);
                b.add_term(t, &-c);
                let f = RatFunc::from_poly(b).pow(k)?;
                result = &result * &f;
            }
        }
        Ok(result)
    }

    /// True if every numerator coefficient is an integer and there is no denominator.
    pub fn is_integral(&self) -> bool {
        self.as_poly().map(|p| p.all_integer()).unwrap_or(false)
    }

    fn den_text(&self, latex: bool) -> Option<String> {
        let mut parts = Vec::new();
        for (m, k) in self.den_factors() {
            let b = format!("(1 - {})", format_monomial(&self.vars, &m, latex));
            parts.push(match (k, latex) {
                (1, _) => b,
                (_, true) => format!("{b}^{{{k}}}"),
                (_, false) => format!("{b}^{k}"),
            });
        }
        if let Some(d) = &self.residual_den {
            parts.push(format!("({})", if latex { d.to_latex() } else { d.to_text() }));
        }
        if parts.is_empty() {
            None
        } else {
            Some(parts.join(if latex { " " } else { "*" }))
        }
    }

    pub fn to_text(&self) -> String {
        let num = format!("({})", self.numerator().to_text());
        match self.den_text(false) {
            Some(d) => format!("{num} / ({d})"),
            None => num,
        }
    }

    pub fn to_latex(&self) -> String {
        let num = self.numerator().to_latex();
        match self.den_text(true) {
            Some(d) => format!("\\frac{{{num}}}{{{d}}}"),
            None => num,
        }
    }
}

fn primitive_root(m: &Monomial) -> Monomial {
    let g = m.exps().iter().fold(0i32, |g, &e| num_integer::gcd(g, e.abs()));
    if g <= 1 {
        m.clone()
    } else {
        Monomial::from_exps(&m.exps().iter().map(|e| e / g).collect::<Vec<_>>())
    }
}

impl PartialEq for RatFunc {
    /// Value equality, decided by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_text())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.try_add(rhs).expect("add")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.try_sub(rhs).expect("sub")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.try_mul(rhs).expect("mul")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.scale(&-Rational::one())
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1() -> Monomial {
        Monomial::var(0, 1)
    }

    #[test]
    fn inverse_pair() {
        let vars = Vars::q();
        let a = RatFunc::binomial(&vars, &q1(), -1);
        let b = RatFunc::from_poly(LaurentPoly::one_minus(&vars, &q1()));
        assert!((&a * &b).is_one());
    }

    #[test]
    fn like_denominators() {
        let vars = Vars::q();
        let a = RatFunc::binomial(&vars, &q1(), -1);
        let s = &a + &a;
        assert_eq!(s, a.scale(&2.into()));
        assert_eq!(s.den_factors(), vec![(q1(), 1)]);
        assert_eq!(s.numerator(), LaurentPoly::constant(&vars, 2.into()));
    }

    #[test]
    fn binomial_cancellation_by_trial_division() {
        let vars = Vars::q();
        let num = LaurentPoly::one_minus(&vars, &q1().pow(2));
        let r = &RatFunc::from_poly(num) * &RatFunc::binomial(&vars, &q1(), -1);
        assert!(!r.has_denominator());
        let expected = &LaurentPoly::one(&vars) + &LaurentPoly::monomial(&vars, q1(), 1.into());
        assert_eq!(r.as_poly().unwrap(), expected);
    }

    #[test]
    fn orientation_of_binomials() {
        let vars = Vars::q();
        // 1 - q1^{-1} = -q1^{-1} (1 - q1)
        let a = RatFunc::binomial(&vars, &q1().inv(), 1);
        let b = &RatFunc::monomial(&vars, q1().inv(), -Rational::one()) * &RatFunc::binomial(&vars, &q1(), 1);
        assert_eq!(a, b);
        assert_eq!(a.numerator(), LaurentPoly::one_minus(&vars, &q1().inv()));
    }

    #[test]
    fn substitution_pole_and_generic_point() {
        let vars = Vars::new(["q1", "q2", "x"]);
        let x = Monomial::var(2, 1);
        let f = RatFunc::binomial(&vars, &x, -1);
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), Binding::Value(Rational::one()));
        assert!(matches!(f.substitute(&b, &Vars::q()), Err(ArithError::PoleHit(_))));
        b.insert("x".to_string(), Binding::Monomial(q1()));
        let g = f.substitute(&b, &Vars::q()).unwrap();
        assert_eq!(g, RatFunc::binomial(&Vars::q(), &q1(), -1));
    }

    #[test]
    fn transposition_substitution() {
        let vars = Vars::shuffle(2);
        let m = Monomial::from_exps(&[0, 1, 1, -1]);
        let f = RatFunc::monomial(&vars, m, Rational::one());
        let mut b = BTreeMap::new();
        b.insert("z1".to_string(), Binding::Monomial(Monomial::var(3, 1)));
        b.insert("z2".to_string(), Binding::Monomial(Monomial::var(2, 1)));
        let g = f.substitute(&b, &vars).unwrap();
        assert_eq!(g, RatFunc::monomial(&vars, Monomial::from_exps(&[0, 1, -1, 1]), Rational::one()));
    }

    #[test]
    fn general_denominator_round_trip() {
        let vars = Vars::q();
        let p = &LaurentPoly::one(&vars) + &LaurentPoly::monomial(&vars, q1(), 1.into());
        let f = RatFunc::from_poly(p.clone()).inv().unwrap();
        assert!(f.residual_den().is_some());
        assert!((&f * &RatFunc::from_poly(p)).is_one());
        let inv = f.inv().unwrap();
        assert!(!inv.has_denominator());
    }

    #[test]
    fn residual_den_binomials_are_extracted() {
        let vars = Vars::q();
        // 1 / ((1 - q1)(1 - q1 q2)) arriving as an expanded polynomial
        let d = LaurentPoly::one_minus(&vars, &q1()).mul_one_minus(&Monomial::from_exps(&[1, 1]));
        let f = RatFunc::from_poly(d).inv().unwrap();
        assert!(f.residual_den().is_none());
        assert_eq!(f.den_factors().len(), 2);
    }
}

//! The shuffle algebra: symmetric Laurent polynomials in `z_1..z_n` with coefficients in
//! `Q(q1, q2)`, the kernel-twisted star product, and the generator families.

mod generators;
pub mod oracle;
mod product;
mod symmetrize;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, LaurentPoly, RatFunc, RatFuncJson, Rational, Vars};

pub use generators::{
    ceil_steps, clear_memo, eccentric_pushforward, flag_pushforward, floor_steps, gen_H, gen_Hprime, gen_Pbar, gen_R, gen_Sbar, gen_ribbon, mat_substack_class,
    Presentation, SlopeParams,
};
pub use product::{shuffle_mul, zeta};
pub use symmetrize::{perm_sign, permutations, schur_polynomial, sym_over_vandermonde_by_division, symmetrize, symmetrize_generic};

pub(crate) use symmetrize::{sym_over_vandermonde, zpos, zratio};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("requires coprime (m,n) in Z x N and d >= 1; got m = {m}, n = {n}")]
    NonCoprime { m: i64, n: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("z-dependent denominator survives symmetrization")]
    ResidualDenominator,
    #[error("value is not a shuffle element over the expected variables")]
    Context,
    #[error("coefficients are not in Z[q1^+-1, q2^+-1]: {0}")]
    NotIntegral(String),
    #[error("value is not symmetric in the z-variables")]
    NotSymmetric,
    #[error("zeta(1) is a pole")]
    ZetaPole,
}

/// Element of the degree-`n` piece of the shuffle algebra. The value lives over
/// `[q1, q2, z1..zn]` and may only have denominators in `q1, q2`.
#[derive(Clone, PartialEq)]
pub struct ShuffleElement {
    n: usize,
    value: RatFunc,
}

impl ShuffleElement {
    /// Wraps `value`, checking the context and that no z-denominator is present.
    pub fn new(n: usize, value: RatFunc) -> Result<Self, ShuffleError> {
        if value.vars() != &Vars::shuffle(n) {
            return Err(ShuffleError::Context);
        }
        let zden = value.den_factors().iter().any(|(m, _)| !m.only_below(2)) || value.residual_den().map(|d| !d.only_below(2)).unwrap_or(false);
        if zden {
            return Err(ShuffleError::ResidualDenominator);
        }
        Ok(ShuffleElement { n, value: value.expanded() })
    }

    pub fn from_poly(n: usize, p: LaurentPoly) -> Result<Self, ShuffleError> {
        Self::new(n, RatFunc::from_poly(p))
    }

    pub fn zero(n: usize) -> Self {
        ShuffleElement { n, value: RatFunc::zero(&Vars::shuffle(n)) }
    }

    /// The unit: the scalar 1 with no z-variables.
    pub fn unit() -> Self {
        Self::scalar(RatFunc::one(&Vars::q()))
    }

    pub fn scalar(c: RatFunc) -> Self {
        ShuffleElement { n: 0, value: c.with_vars(&Vars::shuffle(0)) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The numerator as a polynomial, together with the q-only denominator.
    pub fn numerator(&self) -> LaurentPoly {
        self.value.numerator()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ShuffleError> {
        if self.n != other.n {
            return Err(ShuffleError::InvalidParams(format!("adding elements with n = {} and n = {}", self.n, other.n)));
        }
        Ok(ShuffleElement { n: self.n, value: (&self.value + &other.value).expanded() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ShuffleError> {
        self.try_add(&other.scale(&RatFunc::constant(&Vars::q(), -Rational::one())))
    }

    /// Multiply by a scalar in `Q(q1, q2)`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        let c = c.with_vars(&Vars::shuffle(self.n));
        ShuffleElement { n: self.n, value: (&self.value * &c).expanded() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        ShuffleElement { n: self.n, value: self.value.scale(c) }
    }

    /// True if the value is unchanged by every adjacent transposition of z-variables.
    pub fn is_symmetric(&self) -> bool {
        let num = self.value.numerator();
        (1..self.n).all(|i| num.is_invariant_under_swap(zpos(i), zpos(i + 1)))
    }

    /// True if there is no denominator and all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.value.is_integral()
    }

    /// Exact value at `(q1, q2, z1, ..., zn)`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ShuffleError> {
        Ok(self.value.eval(point)?)
    }

    /// Total z-degree, if homogeneous in z.
    pub fn z_degree(&self) -> Option<i64> {
        let num = self.value.numerator();
        let mut deg = None;
        for (m, _) in num.terms() {
            let d: i64 = (1..=self.n).map(|i| m.exp(zpos(i)) as i64).sum();
            match deg {
                None => deg = Some(d),
                Some(x) if x != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn to_text(&self) -> String {
        self.value.to_text()
    }

    pub fn to_latex(&self) -> String {
        self.value.to_latex()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct ShuffleJson {
    n: usize,
    poly: RatFuncJson,
}

impl Serialize for ShuffleElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ShuffleJson { n: self.n, poly: RatFuncJson::from(&self.value) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShuffleElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = ShuffleJson::deserialize(d)?;
        let value = RatFunc::try_from(&j.poly).map_err(D::Error::custom)?;
        if value.vars() != &Vars::shuffle(j.n) {
            return Err(D::Error::custom(format!("vars must be q1, q2, z1..z{}", j.n)));
        }
        let el = ShuffleElement::new(j.n, value).map_err(D::Error::custom)?;
        if !el.is_symmetric() {
            return Err(D::Error::custom(ShuffleError::NotSymmetric));
        }
        Ok(el)
    }
}

impl fmt::Debug for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShuffleElement(n = {}, {})", self.n, self.value)
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

//! Exact Laurent polynomials in `v` with integer coefficients.
//!
//! A [`LaurentPoly`] is stored sparsely as a map from exponent to a nonzero
//! big-integer coefficient, so two polynomials are equal exactly when their
//! maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Number, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("polynomial {0} is not anti-invariant under v -> v^-1")]
    NotAntiInvariant(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    /// `(-v)^k`, for any integer `k`.
    pub fn neg_v_pow(k: i32) -> Self {
        Self::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, k)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (add_exp(e, k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The coefficient involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e.checked_neg().expect("Laurent exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// True iff `self ∈ v⁻¹ℤ[v⁻¹]`.
    pub fn is_strictly_negative(&self) -> bool {
        self.max_exponent().is_none_or(|k| k <= -1)
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// The unique `g ∈ v⁻¹ℤ[v⁻¹]` with `g − bar(g) = f`, for anti-invariant `f`.
    pub fn solve_antiinvariant(f: &Self) -> Result<Self, LaurentError> {
        if f.bar() != -f {
            return Err(LaurentError::NotAntiInvariant(f.to_string()));
        }
        Ok(Self {
            coeffs: f
                .coeffs
                .iter()
                .filter(|(&e, _)| e < 0)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        })
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True iff every exponent is even and strictly positive.
    pub fn in_positive_even_part(&self) -> bool {
        self.coeffs.keys().all(|&k| k > 0 && k % 2 == 0)
    }

    /// JSON object `{"<exp>": coeff, ...}` in ascending exponent order.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.coeffs {
            m.insert(k.to_string(), bigint_to_json(c));
        }
        Value::Object(m)
    }

    pub fn from_json(value: &Value) -> Result<Self, LaurentError> {
        let obj = value
            .as_object()
            .ok_or_else(|| LaurentError::Json("expected an object".into()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let e: i32 = k
                .parse()
                .map_err(|_| LaurentError::Json(format!("bad exponent {k:?}")))?;
            let c = match c {
                Value::Number(n) => n
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|_| LaurentError::Json(format!("bad coefficient {n}")))?,
                other => return Err(LaurentError::Json(format!("bad coefficient {other}"))),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::Number(x.into()),
        // arbitrary_precision keeps the full decimal string
        None => Value::Number(
            serde_json::from_str::<Number>(&c.to_string()).expect("decimal integer is valid JSON"),
        ),
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{mag}v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{mag}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(add_exp(a, b), x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

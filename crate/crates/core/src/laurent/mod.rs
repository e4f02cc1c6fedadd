//! Integer Laurent polynomials in one variable.
//!
//! A [`LaurentPoly`] is stored densely as a lowest exponent (`offset`) plus the
//! coefficient run from that exponent upwards. The representation is kept
//! canonical at all times: a nonzero polynomial has nonzero first and last
//! coefficients, and zero is the empty run at offset 0. Equality is therefore
//! structural.

mod shape;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use shape::{analyze_shape, is_log_concave, is_symmetric, ShapeError, TrapezoidReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("quantum integer [n] requires n >= 1")]
    QuantumIntegerZero,
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("cannot evaluate at zero")]
    ZeroPoint,
}

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawPoly", into = "RawPoly")]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Builds a polynomial from a lowest exponent and coefficients listed
    /// upwards from it. Leading and trailing zeros are stripped.
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.canonicalize();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// `c * x^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Highest exponent present, or `None` for zero.
    pub fn max_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    /// Distance between the highest and lowest exponent; 0 for zero and constants.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient at `exp` (zero outside the support).
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.offset;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn highest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `[n] = 1 + x + ... + x^(n-1)`.
    pub fn quantum_integer(n: u32) -> Result<Self, LaurentError> {
        if n == 0 {
            return Err(LaurentError::QuantumIntegerZero);
        }
        Ok(LaurentPoly {
            offset: 0,
            coeffs: vec![BigInt::one(); n as usize],
        })
    }

    /// Exact quotient in the Laurent ring: the unique `r` with `r * q == self`.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<Self, LaurentError> {
        if q.is_zero() {
            return Err(LaurentError::DivisorZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both sides have nonzero constant term once the offsets are dropped,
        // so divisibility reduces to ordinary division in Z[x].
        let divisor = &q.coeffs;
        let dlen = divisor.len();
        if self.coeffs.len() < dlen {
            return Err(LaurentError::NotDivisible);
        }
        let dlead = &divisor[dlen - 1];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (j, d) in divisor.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NotDivisible);
        }
        Ok(Self::new(self.offset - q.offset, quot))
    }

    /// Substitutes `x -> -x`: the coefficient at exponent `k` picks up `(-1)^k`.
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.offset + i as i64).is_odd() {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        LaurentPoly {
            offset: self.offset,
            coeffs,
        }
    }

    /// Substitutes `x -> x^-1`.
    pub fn reciprocal(&self) -> Self {
        match self.max_exponent() {
            None => Self::zero(),
            Some(top) => LaurentPoly {
                offset: -top,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Multiplies by the unit `±x^k` that moves the lowest exponent to 0 and
    /// makes the constant term positive.
    pub fn normalize_symmetric(&self) -> Result<Normalized, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        let poly = LaurentPoly { offset: 0, coeffs };
        let palindromic = is_symmetric(&poly.coeffs);
        Ok(Normalized { poly, palindromic })
    }

    /// Exact value at a nonzero integer point.
    pub fn evaluate_int(&self, x: i64) -> Result<BigRational, LaurentError> {
        if x == 0 {
            return Err(LaurentError::ZeroPoint);
        }
        let x = BigInt::from(x);
        // Horner on the coefficient run, then apply x^offset.
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        let base = BigRational::from_integer(x);
        let scale = if self.offset >= 0 {
            num_traits::pow(base, self.offset as usize)
        } else {
            num_traits::pow(base.recip(), (-self.offset) as usize)
        };
        Ok(BigRational::from_integer(acc) * scale)
    }

    /// Text form with the given variable letter, lowest exponent first.
    pub fn display_in(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }
}

/// Result of [`LaurentPoly::normalize_symmetric`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub poly: LaurentPoly,
    pub palindromic: bool,
}

pub struct PolyDisplay<'a> {
    poly: &'a LaurentPoly,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.poly.offset + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let var = self.var;
            match (exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{var}")?,
                (1, false) => write!(f, "{mag}*{var}")?,
                (_, true) => write!(f, "{var}^{exp}")?,
                (_, false) => write!(f, "{mag}*{var}^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in('s').fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.display_in('x'))
    }
}

fn add_into(acc: &mut Vec<BigInt>, acc_offset: i64, p: &LaurentPoly, negate: bool) {
    for (i, c) in p.coeffs.iter().enumerate() {
        let idx = (p.offset - acc_offset) as usize + i;
        if negate {
            acc[idx] -= c;
        } else {
            acc[idx] += c;
        }
    }
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.offset.min(b.offset);
    let hi = a.max_exponent().unwrap().max(b.max_exponent().unwrap());
    let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
    add_into(&mut acc, lo, a, false);
    add_into(&mut acc, lo, b, negate_b);
    LaurentPoly::new(lo, acc)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        // Z has no zero divisors, so the product stays canonical.
        LaurentPoly {
            offset: self.offset + rhs.offset,
            coeffs: out,
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

// JSON form: {"offset": k, "coeffs": [...]}; coefficients outside the i64 range
// are written as decimal strings.
#[derive(Serialize, Deserialize)]
struct RawPoly {
    offset: i64,
    coeffs: Vec<RawCoeff>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Small(i64),
    Big(String),
}

impl From<LaurentPoly> for RawPoly {
    fn from(p: LaurentPoly) -> Self {
        let coeffs = p
            .coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => RawCoeff::Small(v),
                Err(_) => RawCoeff::Big(c.to_string()),
            })
            .collect();
        RawPoly {
            offset: p.offset,
            coeffs,
        }
    }
}

impl TryFrom<RawPoly> for LaurentPoly {
    type Error = String;
    fn try_from(raw: RawPoly) -> Result<Self, String> {
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|c| match c {
                RawCoeff::Small(v) => Ok(BigInt::from(v)),
                RawCoeff::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {s:?}: {e}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(raw.offset, coeffs))
    }
}

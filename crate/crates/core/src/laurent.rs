//! Sparse Laurent polynomials in one variable `A` with `i64` coefficients.
//!
//! Every coefficient operation is checked. The `checked_*` methods report
//! overflow as [`PolyError::Overflow`]; the operator impls panic on it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient overflow")]
    Overflow,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("exponent {0} is not a multiple of 4, cannot substitute A^4 = -1")]
    NotInT(i32),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An element of `Z[A, A^-1]`. No stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `coef * A^exp`.
    pub fn monomial(exp: i32, coef: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exp, coef);
        }
        Self { terms }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    /// `t^k` where `t = A^4`.
    pub fn t_pow(k: i32) -> Self {
        Self::monomial(4 * k, 1)
    }

    /// `(-A^3)^k`, for any integer `k`.
    pub fn minus_a3_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let exp = i32::try_from(3 * k).expect("exponent out of range");
        Self::monomial(exp, sign)
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)]).expect("no overflow")
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, exp: i32, coef: i64) -> Result<(), PolyError> {
        if coef == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(coef).ok_or(PolyError::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            terms.insert(e, c.checked_neg().ok_or(PolyError::Overflow)?);
        }
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.checked_add(e2).ok_or(PolyError::ExponentOverflow)?;
                let c = c1.checked_mul(c2).ok_or(PolyError::Overflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `coef * A^exp`.
    pub fn checked_mul_monomial(&self, exp: i32, coef: i64) -> Result<Self, PolyError> {
        if coef == 0 {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            let e = e.checked_add(exp).ok_or(PolyError::ExponentOverflow)?;
            terms.insert(e, c.checked_mul(coef).ok_or(PolyError::Overflow)?);
        }
        Ok(Self { terms })
    }

    /// Multiplies by `coef * A^exp`, panicking on overflow.
    pub fn mul_monomial(&self, exp: i32, coef: i64) -> Self {
        self.checked_mul_monomial(exp, coef)
            .unwrap_or_else(|e| panic!("LaurentPoly::mul_monomial: {e}"))
    }

    /// The involution `A -> A^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms().map(|(e, c)| (-e, c)).collect(),
        }
    }

    /// Substitutes `A^4 = -1`. Every exponent must be a multiple of 4.
    pub fn eval_at_a4_minus1(&self) -> Result<i64, PolyError> {
        let mut acc: i64 = 0;
        for (e, c) in self.terms() {
            if e % 4 != 0 {
                return Err(PolyError::NotInT(e));
            }
            let term = if (e / 4).rem_euclid(2) == 0 {
                c
            } else {
                c.checked_neg().ok_or(PolyError::Overflow)?
            };
            acc = acc.checked_add(term).ok_or(PolyError::Overflow)?;
        }
        Ok(acc)
    }

    /// Total order used to pick a representative of `{p, bar(p)}`:
    /// compare `(exponent, coefficient)` pairs from the highest exponent down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.terms().rev().cmp(other.terms().rev())
    }

    /// The smaller of `p` and `bar(p)` under [`canonical_cmp`](Self::canonical_cmp).
    pub fn canonical_up_to_bar(&self) -> Self {
        let b = self.bar();
        if b.canonical_cmp(self) == Ordering::Less {
            b
        } else {
            self.clone()
        }
    }

    /// True when `self` equals `other` or `bar(other)`.
    pub fn eq_up_to_bar(&self, other: &Self) -> bool {
        self == other || *self == other.bar()
    }
}

fn expect_ok<T>(r: Result<T, PolyError>, op: &str) -> T {
    r.unwrap_or_else(|e| panic!("LaurentPoly {op}: {e}"))
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                expect_ok(self.$checked(rhs), stringify!($method))
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        expect_ok(self.checked_neg(), "neg")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.unsigned_abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("A")?;
            } else {
                write!(f, "A^{e}")?;
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

impl FromStr for LaurentPoly {
    type Err = PolyError;

    /// Parses the rendering grammar, e.g. `-A^12+2A^8-3A^4+4` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PolyError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(err("empty input"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let read_digits = |i: &mut usize| -> Option<String> {
            let start = *i;
            while *i < src.len() && src[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| src[start..*i].iter().collect())
        };
        while i < src.len() {
            let negative = match src[i] {
                '-' => {
                    i += 1;
                    true
                }
                '+' => {
                    i += 1;
                    false
                }
                _ if i == 0 => false,
                c => return Err(err(&format!("expected sign, found {c:?}"))),
            };
            let digits = read_digits(&mut i);
            let coef: i64 = match &digits {
                Some(d) => d.parse().map_err(|_| err("coefficient out of range"))?,
                None => 1,
            };
            let exp = if i < src.len() && src[i] == 'A' {
                i += 1;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let neg_exp = i < src.len() && src[i] == '-';
                    if neg_exp {
                        i += 1;
                    }
                    let d = read_digits(&mut i).ok_or_else(|| err("missing exponent"))?;
                    let e: i32 = d.parse().map_err(|_| err("exponent out of range"))?;
                    if neg_exp {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if digits.is_some() {
                0
            } else {
                return Err(err("empty term"));
            };
            let coef = if negative { -coef } else { coef };
            out.add_term(exp, coef)?;
        }
        Ok(out)
    }
}

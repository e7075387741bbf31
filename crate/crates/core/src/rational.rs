//! Non-negative fractions, Farey arithmetic and continued fractions.
//!
//! A [`Fraction`] is always reduced with `q >= 0`; `1/0` is infinity.
//! Negative values are rejected at construction, since nothing downstream
//! consumes them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("0/0 is not a fraction")]
    Indeterminate,
    #[error("negative fractions are not supported: {0}")]
    Negative(String),
    #[error("{0} and {1} are not ascending Farey neighbours")]
    NotNeighbors(Fraction, Fraction),
    #[error("{0} has no parents")]
    NoParents(Fraction),
    #[error("{0} is outside the open interval (0, 1)")]
    OutsideUnitInterval(Fraction),
    #[error("{0} has no continued fraction expansion")]
    NoExpansion(Fraction),
    #[error("invalid continued fraction: {0}")]
    InvalidExpansion(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("cannot parse fraction {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };
    pub const ONE: Fraction = Fraction { p: 1, q: 1 };
    pub const HALF: Fraction = Fraction { p: 1, q: 2 };
    pub const INFINITY: Fraction = Fraction { p: 1, q: 0 };

    /// Reduces `p/q`. Any `p/0` with `p > 0` is infinity.
    pub fn new(p: u64, q: u64) -> Result<Self, RationalError> {
        if p == 0 && q == 0 {
            return Err(RationalError::Indeterminate);
        }
        let g = gcd(p, q);
        Ok(Self { p: p / g, q: q / g })
    }

    pub fn integer(n: u64) -> Self {
        Self { p: n, q: 1 }
    }

    pub fn numer(self) -> u64 {
        self.p
    }

    pub fn denom(self) -> u64 {
        self.q
    }

    pub fn is_infinite(self) -> bool {
        self.q == 0
    }

    pub fn is_zero(self) -> bool {
        self.p == 0
    }

    /// `0 < self < 1`.
    pub fn in_unit_interval(self) -> bool {
        self.p > 0 && self.p < self.q
    }

    /// `(q - p)/q` for a fraction in `[0, 1]`.
    pub fn complement(self) -> Result<Self, RationalError> {
        if self.q == 0 || self.p > self.q {
            return Err(RationalError::OutsideUnitInterval(self));
        }
        Self::new(self.q - self.p, self.q)
    }

    /// `q_x * p_y - p_x * q_y`; equals 1 exactly for ascending neighbours.
    pub fn det(self, other: Self) -> i128 {
        self.q as i128 * other.p as i128 - self.p as i128 * other.q as i128
    }

    pub fn to_f64(self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Fraction {
    type Err = RationalError;

    /// Accepts `p/q`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" || s == "∞" || s == "1/0" {
            return Ok(Self::INFINITY);
        }
        if s.starts_with('-') {
            return Err(RationalError::Negative(s.to_string()));
        }
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| RationalError::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse(p)?, parse(q)?),
            None => Ok(Self::integer(parse(s)?)),
        }
    }
}

/// `|p_x q_y - q_x p_y| = 1`.
pub fn is_farey_neighbor(x: Fraction, y: Fraction) -> bool {
    x.det(y).abs() == 1
}

/// The mediant of ascending neighbours `x < y`.
pub fn farey_sum(x: Fraction, y: Fraction) -> Result<Fraction, RationalError> {
    if x.det(y) != 1 {
        return Err(RationalError::NotNeighbors(x, y));
    }
    let p = x.p.checked_add(y.p).ok_or(RationalError::Overflow)?;
    let q = x.q.checked_add(y.q).ok_or(RationalError::Overflow)?;
    Ok(Fraction { p, q })
}

/// Every bracketing pair visited by the Stern-Brocot descent towards `x`,
/// starting at `(0/1, 1/0)`. The mediant of each pair is an ancestor of `x`
/// and the last pair is `parents(x)`.
pub fn stern_brocot_descent(x: Fraction) -> Result<Vec<(Fraction, Fraction)>, RationalError> {
    if x.is_zero() || x.is_infinite() {
        return Err(RationalError::NoParents(x));
    }
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::INFINITY);
    let mut out = Vec::new();
    loop {
        out.push((lo, hi));
        let m = farey_sum(lo, hi)?;
        match x.cmp(&m) {
            Ordering::Equal => return Ok(out),
            Ordering::Less => hi = m,
            Ordering::Greater => lo = m,
        }
    }
}

/// The ascending neighbour pair `(y, z)` with `y # z = x`.
pub fn parents(x: Fraction) -> Result<(Fraction, Fraction), RationalError> {
    if x.is_zero() || x.is_infinite() {
        return Err(RationalError::NoParents(x));
    }
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::INFINITY);
    loop {
        let m = farey_sum(lo, hi)?;
        match x.cmp(&m) {
            Ordering::Equal => return Ok((lo, hi)),
            Ordering::Less => hi = m,
            Ordering::Greater => lo = m,
        }
    }
}

/// `[a0; a1, ..., an]` with `a0 >= 0` and the rest `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<u64>) -> Result<Self, RationalError> {
        if terms.is_empty() {
            return Err(RationalError::InvalidExpansion("no terms".into()));
        }
        if terms[1..].contains(&0) {
            return Err(RationalError::InvalidExpansion(format!(
                "{terms:?} has a zero partial quotient"
            )));
        }
        Ok(Self { terms })
    }

    /// The Euclidean expansion of a finite non-negative fraction.
    pub fn euclid(x: Fraction) -> Result<Self, RationalError> {
        if x.is_infinite() {
            return Err(RationalError::NoExpansion(x));
        }
        let (mut p, mut q) = (x.p, x.q);
        let mut terms = Vec::new();
        while q != 0 {
            terms.push(p / q);
            (p, q) = (q, p % q);
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// The index `n` of the last partial quotient.
    pub fn n(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_even(&self) -> bool {
        self.n() % 2 == 0
    }

    /// Rewrites the tail so that `n` has the requested parity.
    /// Fails only for `[0]`, which has no odd form.
    pub fn with_parity(&self, even: bool) -> Result<Self, RationalError> {
        if self.is_even() == even {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        let last = *terms.last().unwrap();
        if terms.len() >= 2 && last == 1 {
            terms.pop();
            *terms.last_mut().unwrap() += 1;
        } else if last >= 1 {
            *terms.last_mut().unwrap() -= 1;
            terms.push(1);
        } else {
            return Err(RationalError::InvalidExpansion(
                "[0] has no odd-length form".into(),
            ));
        }
        Ok(Self { terms })
    }

    pub fn value(&self) -> Result<Fraction, RationalError> {
        evaluate(&self.terms)
    }

    /// `a0 - a1 + a2 - ...`.
    pub fn alternating_sum(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, &a)| if i % 2 == 0 { a as i64 } else { -(a as i64) })
            .sum()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.terms[0])?;
        for (i, a) in self.terms[1..].iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Evaluates `[a0; a1, ..., an]` exactly. Zero partial quotients are allowed
/// and behave as the usual matrix product.
pub fn evaluate(terms: &[u64]) -> Result<Fraction, RationalError> {
    let (mut h, mut h1): (u128, u128) = (1, 0);
    let (mut k, mut k1): (u128, u128) = (0, 1);
    for &a in terms {
        let a = a as u128;
        let nh = a
            .checked_mul(h)
            .and_then(|v| v.checked_add(h1))
            .ok_or(RationalError::Overflow)?;
        let nk = a
            .checked_mul(k)
            .and_then(|v| v.checked_add(k1))
            .ok_or(RationalError::Overflow)?;
        (h1, h) = (h, nh);
        (k1, k) = (k, nk);
    }
    let p = u64::try_from(h).map_err(|_| RationalError::Overflow)?;
    let q = u64::try_from(k).map_err(|_| RationalError::Overflow)?;
    Fraction::new(p, q)
}

/// The expansion with an even index `n` of its last term.
pub fn continued_fraction_even(x: Fraction) -> Result<ContinuedFraction, RationalError> {
    ContinuedFraction::euclid(x)?.with_parity(true)
}

/// The expansion with an odd index `n` of its last term.
pub fn continued_fraction_odd(x: Fraction) -> Result<ContinuedFraction, RationalError> {
    ContinuedFraction::euclid(x)?.with_parity(false)
}

/// `[0; a_n, ..., a_1]` for `x = [0; a_1, ..., a_n]` with `n` even.
pub fn ir_fraction(x: Fraction) -> Result<Fraction, RationalError> {
    if !x.in_unit_interval() {
        return Err(RationalError::OutsideUnitInterval(x));
    }
    let cf = continued_fraction_even(x)?;
    let mut terms = vec![0];
    terms.extend(cf.terms()[1..].iter().rev());
    evaluate(&terms)
}

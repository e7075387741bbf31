//! Bracket vectors of rational tangles: `<T> = n [inf] + d [0]`.

use std::fmt;

use crate::laurent::LaurentPoly;
use crate::rational::{continued_fraction_even, Fraction, RationalError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BracketVector {
    /// Coefficient of `[inf]`.
    pub n: LaurentPoly,
    /// Coefficient of `[0]`.
    pub d: LaurentPoly,
}

impl BracketVector {
    pub fn new(n: LaurentPoly, d: LaurentPoly) -> Self {
        Self { n, d }
    }

    /// The tangle `[0]`.
    pub fn zero_tangle() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::one())
    }

    /// The tangle `[inf]`.
    pub fn infinity_tangle() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::new(&self.n * c, &self.d * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.n + &other.n, &self.d + &other.d)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::new(f(&self.n), f(&self.d))
    }
}

impl fmt::Display for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})[inf] + ({})[0]", self.n, self.d)
    }
}

impl fmt::Debug for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BracketVector({self})")
    }
}

/// `<[n]> = A^(n-2) sum_{k<n} (-A^-4)^k [inf] + A^n [0]`.
pub fn integer_tangle(n: u32) -> BracketVector {
    let n = n as i32;
    let num = (0..n).map(|k| LaurentPoly::monomial(n - 2 - 4 * k, if k % 2 == 0 { 1 } else { -1 }));
    BracketVector::new(num.sum(), LaurentPoly::a_pow(n))
}

/// `<1/[n]> = A^-n [inf] + A^(2-n) sum_{k<n} (-A^4)^k [0]`.
pub fn vertical_tangle(n: u32) -> BracketVector {
    let n = n as i32;
    let den = (0..n).map(|k| LaurentPoly::monomial(2 - n + 4 * k, if k % 2 == 0 { 1 } else { -1 }));
    BracketVector::new(LaurentPoly::a_pow(-n), den.sum())
}

/// `[n]` for any integer `n`; negative twists are mirrors.
pub fn twist(n: i64) -> BracketVector {
    let t = integer_tangle(n.unsigned_abs() as u32);
    if n < 0 {
        mirror(&t)
    } else {
        t
    }
}

/// `1/[n]` for any integer `n`; negative twists are mirrors.
pub fn vertical_twist(n: i64) -> BracketVector {
    let t = vertical_tangle(n.unsigned_abs() as u32);
    if n < 0 {
        mirror(&t)
    } else {
        t
    }
}

/// The horizontal sum `T ⋈ U`.
pub fn sum(t: &BracketVector, u: &BracketVector) -> BracketVector {
    let delta = LaurentPoly::delta();
    let d = &t.d * &u.d;
    let n = &t.n * &u.d + &t.d * &u.n + &t.n * &u.n * &delta;
    BracketVector::new(n, d)
}

/// The vertical product `T * U`.
pub fn product(t: &BracketVector, u: &BracketVector) -> BracketVector {
    let delta = LaurentPoly::delta();
    let n = &t.n * &u.n;
    let d = &t.d * &u.n + &t.n * &u.d + &t.d * &u.d * &delta;
    BracketVector::new(n, d)
}

/// `-T`: bars both components.
pub fn mirror(t: &BracketVector) -> BracketVector {
    t.map(LaurentPoly::bar)
}

/// `T^rot`: swaps the components.
pub fn rot(t: &BracketVector) -> BracketVector {
    BracketVector::new(t.d.clone(), t.n.clone())
}

/// `T^in = -T^rot`.
pub fn inv(t: &BracketVector) -> BracketVector {
    BracketVector::new(t.d.bar(), t.n.bar())
}

/// `v(a [inf] + b [0]) = a delta + b`.
pub fn v_map(t: &BracketVector) -> LaurentPoly {
    &t.n * &LaurentPoly::delta() + &t.d
}

pub fn numerator_closure(t: &BracketVector) -> LaurentPoly {
    v_map(&rot(t))
}

pub fn denominator_closure(t: &BracketVector) -> LaurentPoly {
    v_map(t)
}

/// Assembles `T([a0; a1, ..., an])` from the innermost quotient outwards:
/// start with `[an]` (n even) or `1/[an]` (n odd), then for `i = n-1, ..., 0`
/// add `[ai]` on even `i` and multiply by `1/[ai]` on odd `i`.
pub fn tangle_from_expansion(terms: &[u64]) -> BracketVector {
    let Some((&last, rest)) = terms.split_last() else {
        return BracketVector::zero_tangle();
    };
    let block = |i: usize, a: u64| {
        if i % 2 == 0 {
            integer_tangle(a as u32)
        } else {
            vertical_tangle(a as u32)
        }
    };
    let n = rest.len();
    let mut t = block(n, last);
    for (i, &a) in rest.iter().enumerate().rev() {
        t = if i % 2 == 0 {
            sum(&t, &block(i, a))
        } else {
            product(&t, &block(i, a))
        };
    }
    t
}

/// The bracket of the rational tangle `T(x)` built from the even-length
/// expansion of `x`; `inf` gives `[inf]`.
pub fn tangle_of_fraction(x: Fraction) -> Result<BracketVector, RationalError> {
    if x.is_infinite() {
        return Ok(BracketVector::infinity_tangle());
    }
    let cf = continued_fraction_even(x)?;
    Ok(tangle_from_expansion(cf.terms()))
}

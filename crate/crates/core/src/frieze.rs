//! Conway-Coxeter friezes of zigzag type.
//!
//! A frieze of height `h` (interior rows) is stored as an `h x n` grid with
//! `n = h + 3` columns, one full cycle of the pattern. Entry `rows[r][c]` is
//! drawn at horizontal position `c + r/2`, so row `r + 1` sits half a step to
//! the right of row `r`. The unit diamond around the pair `(r, c), (r, c+1)`
//! has `(r-1, c+1)` above it and `(r+1, c)` below it. The all-1 boundary rows
//! are rows `-1` and `h` and are not stored.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::lrword::{fraction_of, i_word, ir_word, r_word, LRWord, Letter, WordError};
use crate::rational::{farey_sum, Fraction, RationalError};
use crate::yamada::v_phi;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FriezeError {
    #[error("unimodular rule gives a non-integral entry at row {row}, column {col}")]
    NonIntegral { row: usize, col: usize },
    #[error("non-positive entry at row {row}, column {col}")]
    NonPositive { row: usize, col: usize },
    #[error("entry overflow at row {row}, column {col}")]
    Overflow { row: usize, col: usize },
    #[error("not a frieze: {0}")]
    NotAFrieze(String),
    #[error("not zigzag-type: no 1-zigzag joins the boundary rows")]
    NotZigzagType,
    #[error("Q/R values at t = -1 for {x} break the case split: Q = {q}, R = {r}")]
    CaseSplit { x: Fraction, q: i64, r: i64 },
    #[error("complete invariant of {word} disagrees: {via_qr} from Q/R, {via_words} from words")]
    InvariantMismatch {
        word: LRWord,
        via_qr: CcfInvariant,
        via_words: CcfInvariant,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

/// A 1-zigzag: one `1` per interior row, each below-left (`L`) or below-right
/// (`R`) of the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zigzag {
    /// Column of the cell in row 0.
    pub start: usize,
    pub word: LRWord,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Frieze {
    height: usize,
    rows: Vec<Vec<u64>>,
    period: usize,
    source_word: Option<LRWord>,
    /// Column of the source word's zigzag in row 0.
    anchor: Option<usize>,
}

/// How two friezes are related.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FriezeRelation {
    /// Equal up to horizontal translation.
    pub translation: bool,
    /// Equal after flipping one of them top to bottom, up to translation.
    pub glide: bool,
    /// Equal after mirroring one of them left to right, up to translation.
    pub mirror: bool,
}

impl Frieze {
    /// Seeds the zigzag of `w` between the boundary rows and fills the rest
    /// column by column with `d = (b c + 1) / a`.
    pub fn from_word(w: &LRWord) -> Result<Self, FriezeError> {
        let h = w.len() + 1;
        let n = h + 3;
        // z[r]: seed column in row r, shifted so that all columns are >= 0.
        let mut z = vec![w.len()];
        for c in w.letters() {
            let last = *z.last().unwrap();
            z.push(if *c == Letter::L { last - 1 } else { last });
        }
        let cols = z[0] + 3 * n + 2;
        let mut val: Vec<Vec<Option<u64>>> = vec![vec![None; cols]; h];
        for (r, &c) in z.iter().enumerate() {
            val[r][c] = Some(1);
        }
        let get = |val: &Vec<Vec<Option<u64>>>, r: isize, i: usize| -> u64 {
            if r < 0 || r as usize >= h {
                1
            } else {
                val[r as usize][i].expect("filled before use")
            }
        };
        for i in 0..cols {
            for r in 0..h {
                if i <= z[r] {
                    continue;
                }
                let ri = r as isize;
                let a = get(&val, ri, i - 1);
                let b = get(&val, ri - 1, i);
                let c = get(&val, ri + 1, i - 1);
                let num = b
                    .checked_mul(c)
                    .and_then(|x| x.checked_add(1))
                    .ok_or(FriezeError::Overflow { row: r, col: i })?;
                if num % a != 0 {
                    return Err(FriezeError::NonIntegral { row: r, col: i });
                }
                val[r][i] = Some(num / a);
            }
        }
        let s = z[0];
        let period = (1..=2 * n)
            .find(|&p| (0..h).all(|r| (s + 1..s + 1 + n).all(|i| val[r][i] == val[r][i + p])))
            .ok_or_else(|| FriezeError::NotAFrieze("pattern does not recur".into()))?;
        if n % period != 0 {
            return Err(FriezeError::NotAFrieze(format!(
                "period {period} does not divide {n}"
            )));
        }
        let rows = (0..h)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut i = s + c;
                        while i < z[r] {
                            i += n;
                        }
                        val[r][i].expect("filled")
                    })
                    .collect()
            })
            .collect();
        let f = Self {
            height: h,
            rows,
            period,
            source_word: Some(w.clone()),
            anchor: Some(0),
        };
        f.validate()?;
        Ok(f)
    }

    /// Builds the frieze whose first interior row repeats `quiddity`.
    pub fn from_quiddity(quiddity: &[u64]) -> Result<Self, FriezeError> {
        let n = quiddity.len();
        if n < 3 {
            return Err(FriezeError::NotAFrieze(
                "quiddity needs at least 3 entries".into(),
            ));
        }
        let h = n - 3;
        let a = |k: usize| quiddity[(k + n - 1) % n] as i128;
        let mut rows = vec![vec![0u64; n]; h];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            // m(i, i), m(i, i+1), ... by m(i, k+1) = a_k m(i, k) - m(i, k-1)
            let (mut prev, mut cur): (i128, i128) = (0, 1);
            for k in i + 1..=i + n - 1 {
                let next = a(k) * cur - prev;
                (prev, cur) = (cur, next);
                let gap = k + 1 - i;
                if gap <= n - 2 {
                    if next <= 0 {
                        return Err(FriezeError::NotAFrieze(format!(
                            "entry m({i}, {}) = {next} is not positive",
                            k + 1
                        )));
                    }
                    rows[gap - 2][i] = u64::try_from(next).map_err(|_| FriezeError::Overflow {
                        row: gap - 2,
                        col: i,
                    })?;
                }
            }
            if prev != 1 || cur != 0 {
                return Err(FriezeError::NotAFrieze("quiddity does not close up".into()));
            }
        }
        Self::from_rows(rows)
    }

    /// Wraps a grid of interior rows, each one full cycle wide.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, FriezeError> {
        let h = rows.len();
        if h == 0 || rows.iter().any(|r| r.len() != h + 3) {
            return Err(FriezeError::NotAFrieze(
                "need h rows of h + 3 entries".into(),
            ));
        }
        let n = h + 3;
        let period = (1..=n)
            .find(|&p| {
                n % p == 0
                    && rows
                        .iter()
                        .all(|row| (0..n).all(|c| row[c] == row[(c + p) % n]))
            })
            .unwrap_or(n);
        let f = Self {
            height: h,
            rows,
            period,
            source_word: None,
            anchor: None,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Columns stored: one full cycle, `h + 3`.
    pub fn width(&self) -> usize {
        self.height + 3
    }

    /// The minimal translation period. It divides [`width`](Self::width).
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn source_word(&self) -> Option<&LRWord> {
        self.source_word.as_ref()
    }

    /// Row-0 column of the zigzag of the source word, if known.
    pub fn anchor(&self) -> Option<usize> {
        self.anchor
    }

    /// The first interior row.
    pub fn quiddity(&self) -> &[u64] {
        &self.rows[0]
    }

    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(1)
    }

    /// Entry at any row `-2..=h+1` and any column, extended periodically.
    /// Rows `-1` and `h` are 1, rows `-2` and `h+1` are 0.
    pub fn entry(&self, r: isize, c: isize) -> u64 {
        let h = self.height as isize;
        if r == -1 || r == h {
            return 1;
        }
        if r < -1 || r > h {
            return 0;
        }
        self.rows[r as usize][c.rem_euclid(self.width() as isize) as usize]
    }

    /// Checks positivity, every unit diamond, the period and the glide symmetry.
    pub fn validate(&self) -> Result<(), FriezeError> {
        let (h, n) = (self.height as isize, self.width() as isize);
        for r in 0..h {
            for c in 0..n {
                if self.entry(r, c) == 0 {
                    return Err(FriezeError::NonPositive {
                        row: r as usize,
                        col: c as usize,
                    });
                }
                let ad = self.entry(r, c) as u128 * self.entry(r, c + 1) as u128;
                let bc = self.entry(r - 1, c + 1) as u128 * self.entry(r + 1, c) as u128;
                if ad != bc + 1 {
                    return Err(FriezeError::NotAFrieze(format!(
                        "diamond at row {r}, columns {c}..{} has determinant {}",
                        c + 1,
                        ad as i128 - bc as i128
                    )));
                }
                let p = self.period as isize;
                if self.entry(r, c) != self.entry(r, c + p) {
                    return Err(FriezeError::NotAFrieze(format!(
                        "not invariant under translation by {p}"
                    )));
                }
                if self.entry(r, c) != self.entry(h - 1 - r, c + r + 2) {
                    return Err(FriezeError::NotAFrieze(format!(
                        "glide symmetry fails at row {r}, column {c}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every 1-zigzag, by row-0 start column.
    pub fn locate_zigzags(&self) -> Vec<Zigzag> {
        let (h, n) = (self.height as isize, self.width() as isize);
        let mut out = Vec::new();
        'start: for start in 0..n {
            if self.entry(0, start) != 1 {
                continue;
            }
            let mut c = start;
            let mut letters = Vec::new();
            for r in 1..h {
                if self.entry(r, c - 1) == 1 {
                    letters.push(Letter::L);
                    c -= 1;
                } else if self.entry(r, c) == 1 {
                    letters.push(Letter::R);
                } else {
                    continue 'start;
                }
            }
            out.push(Zigzag {
                start: start as usize,
                word: LRWord::new(letters),
            });
        }
        out
    }

    /// The source word, or the word of the first zigzag found.
    pub fn reconstruct_word(&self) -> Result<LRWord, FriezeError> {
        if let Some(w) = &self.source_word {
            return Ok(w.clone());
        }
        self.locate_zigzags()
            .into_iter()
            .next()
            .map(|z| z.word)
            .ok_or(FriezeError::NotZigzagType)
    }

    /// Sets the source word, anchored at a zigzag reading it.
    fn with_word(mut self, w: LRWord) -> Self {
        self.anchor = self
            .locate_zigzags()
            .iter()
            .find(|z| z.word == w)
            .map(|z| z.start);
        debug_assert!(
            self.anchor.is_some(),
            "image frieze lacks a zigzag reading {w}"
        );
        self.source_word = Some(w);
        self
    }

    /// `<Γ> = v(φ(α))` for the frieze's word. For a bare grid the word is
    /// read off a zigzag, so the value is defined up to `A -> A^-1`.
    pub fn bracket(&self) -> Result<LaurentPoly, FriezeError> {
        Ok(frieze_bracket(&self.reconstruct_word()?))
    }

    /// Left-right mirror image. For the frieze of `w` this is the frieze of
    /// `i(w)` up to translation.
    pub fn vertical_reflection(&self) -> Self {
        let n = self.width() as isize;
        let rows = (0..self.height as isize)
            .map(|r| (0..n).map(|c| self.entry(r, -c - r)).collect())
            .collect();
        let out = Self {
            rows,
            source_word: None,
            anchor: None,
            ..self.clone()
        };
        match &self.source_word {
            Some(w) => out.with_word(i_word(w)),
            None => out,
        }
    }

    /// Top-to-bottom flip, keeping the diamond lattice aligned. Every frieze
    /// is glide symmetric, so this is always a translate of `self`; its
    /// zigzag reads `ir(w)`.
    pub fn flip_rows(&self) -> Self {
        let h = self.height as isize;
        let n = self.width() as isize;
        let rows = (0..h)
            .map(|r| (0..n).map(|c| self.entry(h - 1 - r, c + r)).collect())
            .collect();
        let out = Self {
            rows,
            source_word: None,
            anchor: None,
            ..self.clone()
        };
        match &self.source_word {
            Some(w) => out.with_word(ir_word(w)),
            None => out,
        }
    }

    /// Shifts every row `k` columns to the left.
    pub fn translate(&self, k: usize) -> Self {
        let n = self.width();
        let rows = self
            .rows
            .iter()
            .map(|row| (0..n).map(|c| row[(c + k) % n]).collect())
            .collect();
        Self {
            rows,
            anchor: self.anchor.map(|a| (a + n - k % n) % n),
            ..self.clone()
        }
    }

    /// The lexicographically least rotation of the grid; equal keys mean
    /// equal friezes up to translation.
    pub fn translation_key(&self) -> Vec<u64> {
        let n = self.width();
        (0..n)
            .map(|k| {
                let mut key = Vec::with_capacity(n * self.height);
                for row in &self.rows {
                    key.extend((0..n).map(|c| row[(c + k) % n]));
                }
                key
            })
            .min()
            .unwrap_or_default()
    }

    /// Staggered rendering of one cycle between the boundary rows of 1s.
    pub fn render_ascii(&self) -> String {
        let n = self.width() as isize;
        let h = self.height as isize;
        let digits = self.max_entry().to_string().len();
        let pitch = 2 * ((digits + 2) / 2);
        let mut out = String::new();
        for r in -1..=h {
            let mut line = " ".repeat((r + 1) as usize * pitch / 2);
            for c in 0..n {
                let _ = write!(line, "{:>pitch$}", self.entry(r, c));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "period {} (cycle {}), height {}, max {}",
            self.period,
            self.width(),
            self.height,
            self.max_entry()
        );
        out
    }
}

impl fmt::Debug for Frieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frieze")
            .field("height", &self.height)
            .field("period", &self.period)
            .field("source_word", &self.source_word)
            .field("rows", &self.rows)
            .finish()
    }
}

pub fn frieze_from_word(w: &LRWord) -> Result<Frieze, FriezeError> {
    Frieze::from_word(w)
}

/// Equality up to horizontal translation.
pub fn frieze_equal(f: &Frieze, g: &Frieze) -> bool {
    f.height == g.height && f.translation_key() == g.translation_key()
}

pub fn frieze_relation(f: &Frieze, g: &Frieze) -> FriezeRelation {
    FriezeRelation {
        translation: frieze_equal(f, g),
        glide: frieze_equal(f, &g.flip_rows()),
        mirror: frieze_equal(f, &g.vertical_reflection()),
    }
}

/// `<Γ(w)> = v(φ(fraction_of(w)))`.
pub fn frieze_bracket(w: &LRWord) -> LaurentPoly {
    v_phi(fraction_of(w))
}

/// `<Γ(w)>` computed on words alone, by the letter-prefix recursions
/// `<R^k L w> = -t <R^(k-1) L w> - t^-1 <w>` and
/// `<L^k R w> = -t <w> - t^-1 <L^(k-1) R w>` with `t = A^4`.
pub fn frieze_bracket_recursive(w: &LRWord) -> LaurentPoly {
    let minus_t = LaurentPoly::monomial(4, -1);
    let minus_t_inv = LaurentPoly::monomial(-4, -1);
    let letters = w.letters();
    let len = letters.len();
    // g[j] = bracket of the suffix starting at j
    let mut g = vec![LaurentPoly::zero(); len + 1];
    g[len] = &minus_t + &minus_t_inv;
    for j in (0..len).rev() {
        let x = letters[j];
        let run = letters[j..].iter().take_while(|&&c| c == x).count();
        g[j] = if j + run == len {
            match x {
                Letter::L => &minus_t + &minus_t_inv * &g[j + 1],
                Letter::R => &minus_t * &g[j + 1] + &minus_t_inv,
            }
        } else {
            let rest = &g[j + run + 1];
            match x {
                Letter::R => &minus_t * &g[j + 1] + &minus_t_inv * rest,
                Letter::L => &minus_t * rest + &minus_t_inv * &g[j + 1],
            }
        };
    }
    g.swap_remove(0)
}

/// `(Q_x, R_x)` in `t = A^4`, from `Q = 1, R = 0` at `1/2`, `Q = 0, R = 1` at
/// `0/1` and `1/1`, and `X_x = -t X_y - t^-1 X_z` over the parents.
pub fn qr_polynomials(x: Fraction) -> Result<(LaurentPoly, LaurentPoly), FriezeError> {
    if !x.in_unit_interval() {
        return Err(RationalError::OutsideUnitInterval(x).into());
    }
    let minus_t = LaurentPoly::monomial(4, -1);
    let minus_t_inv = LaurentPoly::monomial(-4, -1);
    let end = (LaurentPoly::zero(), LaurentPoly::one());
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::ONE);
    let (mut v_lo, mut v_hi) = (end.clone(), end);
    loop {
        let m = farey_sum(lo, hi)?;
        let v_m = if m == Fraction::HALF {
            (LaurentPoly::one(), LaurentPoly::zero())
        } else {
            (
                &minus_t * &v_lo.0 + &minus_t_inv * &v_hi.0,
                &minus_t * &v_lo.1 + &minus_t_inv * &v_hi.1,
            )
        };
        match x.cmp(&m) {
            std::cmp::Ordering::Equal => return Ok(v_m),
            std::cmp::Ordering::Less => (hi, v_hi) = (m, v_m),
            std::cmp::Ordering::Greater => (lo, v_lo) = (m, v_m),
        }
    }
}

/// `(Q_x(-1), R_x(-1))`, checked against the case split: for `x = p/q`,
/// `Q = p, Q + R = q - p` when `2p < q`, and `Q = q - p, Q + R = p` when
/// `2p > q`.
pub fn qr_at_minus1(x: Fraction) -> Result<(i64, i64), FriezeError> {
    let (q_poly, r_poly) = qr_polynomials(x)?;
    let eval = |p: &LaurentPoly| p.eval_at_a4_minus1().expect("polynomial in t");
    let (q, r) = (eval(&q_poly), eval(&r_poly));
    let (pn, qd) = (x.numer() as i64, x.denom() as i64);
    let ok = match (2 * pn).cmp(&qd) {
        std::cmp::Ordering::Less => q == pn && q + r == qd - pn,
        std::cmp::Ordering::Greater => q == qd - pn && q + r == pn,
        std::cmp::Ordering::Equal => (q, r) == (1, 0),
    };
    if !ok {
        return Err(FriezeError::CaseSplit { x, q, r });
    }
    Ok((q, r))
}

/// `v(φ(x))` at `A^4 = -1`.
pub fn determinant_eval(x: Fraction) -> i64 {
    v_phi(x)
        .eval_at_a4_minus1()
        .expect("v(φ) is a polynomial in A^4")
}

/// A set of at most four fractions with a common denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CcfInvariant {
    fractions: BTreeSet<Fraction>,
}

impl CcfInvariant {
    pub fn new(fractions: impl IntoIterator<Item = Fraction>) -> Self {
        Self {
            fractions: fractions.into_iter().collect(),
        }
    }

    pub fn fractions(&self) -> impl Iterator<Item = Fraction> + '_ {
        self.fractions.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.fractions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fractions.is_empty()
    }
}

impl fmt::Display for CcfInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fractions.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for CcfInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CcfInvariant{self}")
    }
}

/// `{x, 1 - x, x', 1 - x'}` for `x = fraction_of(w)`, `x' = fraction_of(r(w))`.
pub fn complete_invariant_via_words(w: &LRWord) -> CcfInvariant {
    let mut out = Vec::new();
    for u in [w.clone(), r_word(w)] {
        let x = fraction_of(&u);
        out.push(x);
        out.push(x.complement().expect("word fractions lie in (0, 1)"));
    }
    CcfInvariant::new(out)
}

/// `{Q/(2Q+R), (Q+R)/(2Q+R)}` at `t = -1` for `w` and `r(w)`.
pub fn complete_invariant_via_qr(w: &LRWord) -> Result<CcfInvariant, FriezeError> {
    let mut out = Vec::new();
    for u in [w.clone(), r_word(w)] {
        let (q, r) = qr_at_minus1(fraction_of(&u))?;
        let den = (2 * q + r) as u64;
        out.push(Fraction::new(q as u64, den)?);
        out.push(Fraction::new((q + r) as u64, den)?);
    }
    Ok(CcfInvariant::new(out))
}

/// `C_w`, computed from Q/R values and from the word maps; both must agree.
pub fn complete_invariant(w: &LRWord) -> Result<CcfInvariant, FriezeError> {
    let via_qr = complete_invariant_via_qr(w)?;
    let via_words = complete_invariant_via_words(w);
    if via_qr != via_words {
        return Err(FriezeError::InvariantMismatch {
            word: w.clone(),
            via_qr,
            via_words,
        });
    }
    Ok(via_qr)
}

/// Groups words by complete invariant. Handy for completeness sweeps.
pub fn invariant_classes<'a>(
    words: impl IntoIterator<Item = &'a LRWord>,
) -> Result<HashMap<CcfInvariant, Vec<LRWord>>, FriezeError> {
    let mut out: HashMap<CcfInvariant, Vec<LRWord>> = HashMap::new();
    for w in words {
        out.entry(complete_invariant(w)?)
            .or_default()
            .push(w.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LRWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn cyclic_contains(row: &[u64], pattern: &[u64]) -> bool {
        let n = row.len();
        (0..n).any(|s| {
            pattern
                .iter()
                .enumerate()
                .all(|(k, &x)| row[(s + k) % n] == x)
        })
    }

    #[test]
    fn l2r2l_quiddity_and_maximum() {
        let fr = Frieze::from_word(&w("L^2R^2L")).unwrap();
        assert_eq!(fr.height(), 6);
        assert_eq!(fr.period(), 9);
        assert!(cyclic_contains(fr.quiddity(), &[2, 4, 2, 2, 1, 4, 2, 3, 1]));
        assert_eq!(fr.max_entry(), 17);
    }

    #[test]
    fn small_friezes() {
        let e = Frieze::from_word(&LRWord::empty()).unwrap();
        assert_eq!(e.height(), 1);
        assert_eq!(e.max_entry(), 2);
        assert_eq!(e.period(), 2);
        assert_eq!(Frieze::from_word(&w("LR")).unwrap().period(), 3);
        assert_eq!(Frieze::from_word(&w("RL^2RL")).unwrap().max_entry(), 19);
    }

    #[test]
    fn zigzag_round_trip() {
        for word in ["-", "L", "RL^2RL", "L^2R^2L", "LLLR"] {
            let fr = Frieze::from_word(&w(word)).unwrap();
            let bare = Frieze::from_rows(fr.rows().to_vec()).unwrap();
            let found: Vec<LRWord> = bare.locate_zigzags().into_iter().map(|z| z.word).collect();
            assert!(found.contains(&w(word)), "{word}: {found:?}");
            assert!(found.contains(&ir_word(&w(word))));
        }
    }

    #[test]
    fn non_zigzag_quiddity_is_rejected() {
        let fr = Frieze::from_quiddity(&[1, 4, 1, 2, 4, 1, 2, 3]).unwrap();
        assert!(fr.locate_zigzags().is_empty());
        assert_eq!(fr.reconstruct_word(), Err(FriezeError::NotZigzagType));
        assert_eq!(fr.bracket(), Err(FriezeError::NotZigzagType));
    }

    #[test]
    fn quiddity_round_trip() {
        let fr = Frieze::from_word(&w("L^2R^2L")).unwrap();
        let again = Frieze::from_quiddity(fr.quiddity()).unwrap();
        assert_eq!(again.rows(), fr.rows());
        assert!(Frieze::from_quiddity(&[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn base_brackets() {
        assert_eq!(frieze_bracket(&w("-")), p("-A^4-A^-4"));
        assert_eq!(frieze_bracket(&w("L")), p("-A^4+1+A^-8"));
        assert_eq!(frieze_bracket(&w("R")), p("A^8+1-A^-4"));
        assert_eq!(
            frieze_bracket(&w("RL^2RL")),
            p("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16")
        );
        assert_eq!(frieze_bracket(&w("L^3R")).bar(), frieze_bracket(&w("R^3L")));
    }

    #[test]
    fn recursive_bracket_small() {
        for word in LRWord::all_up_to(8) {
            assert_eq!(
                frieze_bracket_recursive(&word),
                frieze_bracket(&word),
                "{word}"
            );
        }
    }

    #[test]
    fn qr_examples() {
        let t = |k: i32| LaurentPoly::t_pow(k);
        assert_eq!(qr_polynomials(f("1/3")).unwrap(), (-t(-1), -t(1)));
        assert_eq!(qr_polynomials(f("2/3")).unwrap(), (-t(1), -t(-1)));
        assert_eq!(
            qr_polynomials(f("1/2")).unwrap(),
            (LaurentPoly::one(), LaurentPoly::zero())
        );
        assert_eq!(qr_at_minus1(f("1/2")).unwrap(), (1, 0));
        assert_eq!(qr_at_minus1(f("7/19")).unwrap(), (7, 5));
        assert_eq!(qr_at_minus1(f("2/3")).unwrap(), (1, 1));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_eval(f("1/2")), 2);
        assert_eq!(determinant_eval(f("7/19")), 19);
    }

    #[test]
    fn invariant_examples() {
        let set = |xs: &[&str]| CcfInvariant::new(xs.iter().map(|s| f(s)));
        assert_eq!(
            complete_invariant(&w("LLLR")).unwrap(),
            set(&["5/9", "4/9", "2/9", "7/9"])
        );
        assert_eq!(
            complete_invariant(&w("LLRR")).unwrap(),
            set(&["7/10", "3/10"])
        );
        assert_eq!(complete_invariant(&w("-")).unwrap(), set(&["1/2"]));
        assert_eq!(
            complete_invariant(&w("LLLR")).unwrap().to_string(),
            "{2/9, 4/9, 5/9, 7/9}"
        );
    }

    #[test]
    fn reflections() {
        let a = Frieze::from_word(&w("L^3R")).unwrap();
        let b = Frieze::from_word(&w("R^3L")).unwrap();
        assert!(frieze_equal(&a.vertical_reflection(), &b));
        assert_eq!(a.vertical_reflection().vertical_reflection(), a);
        assert!(frieze_equal(&a.flip_rows(), &a));
        assert_eq!(a.vertical_reflection().source_word(), Some(&w("R^3L")));
        assert!(a.vertical_reflection().anchor().is_some());
    }

    #[test]
    fn observed_relations() {
        let rel = |a: &str, b: &str| {
            frieze_relation(
                &Frieze::from_word(&w(a)).unwrap(),
                &Frieze::from_word(&w(b)).unwrap(),
            )
        };
        let all = FriezeRelation {
            translation: true,
            glide: true,
            mirror: true,
        };
        assert_eq!(rel("L", "R"), all);
        assert_eq!(
            rel("LR", "RL"),
            FriezeRelation {
                translation: false,
                glide: false,
                mirror: true
            }
        );
        assert_eq!(
            rel("LLR", "LRR"),
            FriezeRelation {
                translation: true,
                glide: true,
                mirror: false
            }
        );
        assert_eq!(rel("LL", "LR"), FriezeRelation::default());
        let llrr = Frieze::from_word(&w("LLRR")).unwrap();
        assert!(frieze_equal(
            &llrr,
            &Frieze::from_word(&ir_word(&w("LLRR"))).unwrap()
        ));
    }

    #[test]
    fn translation_keeps_equality() {
        let a = Frieze::from_word(&w("RL^2RL")).unwrap();
        for k in 0..a.width() {
            let t = a.translate(k);
            assert!(frieze_equal(&a, &t));
            t.validate().unwrap();
        }
    }

    #[test]
    fn render_has_period_line() {
        let text = Frieze::from_word(&w("L^2R^2L")).unwrap().render_ascii();
        assert!(text.contains("period 9"));
        assert_eq!(text.lines().count(), 9);
    }
}

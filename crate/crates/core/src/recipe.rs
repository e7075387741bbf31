//! Reading `<Γ>` off a frieze by folding at its maximum entry.
//!
//! The maximum `M` sits on two diagonals. Going down-left from `M` to the
//! bottom row of 1s gives the floor flank, going up-right to the top row gives
//! the ceiling flank. Folding at `M` turns the two flanks into the sides of a
//! triangle in which every node is the sum of its two children. Steps along
//! the floor flank are `-`, along the ceiling flank `+`, and each node's other
//! child lies on the opposite flank with the opposite sign. A path from `M`
//! to a terminal 1 with `p` plus and `q` minus steps contributes
//! `(-1)^(p+q) A^(4(p-q))`.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::frieze::{Frieze, FriezeError};
use crate::laurent::LaurentPoly;
use crate::lrword::{fraction_of, word_of, LRWord, WordError};
use crate::rational::{continued_fraction_even, parents, Fraction, RationalError};

pub use crate::yamada::DEFAULT_PATH_CAP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecipeError {
    #[error("maximum {m} occurs {count} times per cycle, expected one glide pair")]
    NonUniqueMaximum { m: u64, count: usize },
    #[error("sign assignment failed: {0}")]
    SignInconsistency(String),
    #[error("path enumeration exceeded the cap of {cap} steps")]
    PathCapExceeded { cap: u64 },
    #[error("fold orientation check failed: {0}")]
    Orientation(String),
    #[error("deleting the first letter of {word} gives {next}, whose fraction {got} is not a parent of {from}")]
    ChainMismatch {
        word: LRWord,
        next: LRWord,
        from: Fraction,
        got: Fraction,
    },
    #[error(transparent)]
    Frieze(#[from] FriezeError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

/// The maximum and its neighbourhood:
///
/// ```text
///             a
///         s       v
///     b       M       d
///         t       u
///             c
/// ```
///
/// `t -> M -> v` is the fold line; `s -> M -> u` is the other diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diamond {
    pub m: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub row: usize,
    /// Column of `M`, counted from the zigzag's top cell.
    pub col: usize,
}

fn zigzag_anchor(f: &Frieze) -> Result<usize, RecipeError> {
    if let Some(a) = f.anchor() {
        return Ok(a);
    }
    f.locate_zigzags()
        .first()
        .map(|z| z.start)
        .ok_or(RecipeError::Frieze(FriezeError::NotZigzagType))
}

/// Leftmost maximum in the cycle that starts at the zigzag's top cell.
fn locate_maximum(f: &Frieze) -> Result<(isize, isize), RecipeError> {
    let start = zigzag_anchor(f)? as isize;
    let (h, n) = (f.height() as isize, f.width() as isize);
    let m = f.max_entry();
    let mut hits: Vec<(isize, isize)> = (0..h)
        .flat_map(|r| (start..start + n).map(move |c| (r, c)))
        .filter(|&(r, c)| f.entry(r, c) == m)
        .collect();
    // by horizontal position c + r/2
    hits.sort_by_key(|&(r, c)| (2 * c + r, r));
    let glide_pair = hits.len() == 2 && {
        let (r, c) = hits[0];
        let (r2, c2) = hits[1];
        r2 == h - 1 - r && (c2 - (c + r + 2)).rem_euclid(n) == 0
            || r == h - 1 - r2 && (c - (c2 + r2 + 2)).rem_euclid(n) == 0
    };
    if !glide_pair {
        return Err(RecipeError::NonUniqueMaximum {
            m,
            count: hits.len(),
        });
    }
    Ok(hits[0])
}

pub fn extract_diamond(f: &Frieze) -> Result<Diamond, RecipeError> {
    let (r, c) = locate_maximum(f)?;
    let start = zigzag_anchor(f)? as isize;
    let e = |dr: isize, dc: isize| f.entry(r + dr, c + dc);
    Ok(Diamond {
        m: e(0, 0),
        s: e(-1, 0),
        v: e(-1, 1),
        t: e(1, -1),
        u: e(1, 0),
        a: e(-2, 1),
        b: e(0, -1),
        d: e(0, 1),
        c: e(2, -1),
        row: r as usize,
        col: (c - start) as usize,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A node of the folded triangle. Index 0 of either flank is the apex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Apex,
    Floor(usize),
    Ceiling(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathEnd {
    /// The 1 closing the floor flank (drawn circled).
    Floor,
    /// The 1 closing the ceiling flank (drawn boxed).
    Ceiling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedEdge {
    pub from: Node,
    pub to: Node,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedTriangle {
    pub apex: u64,
    /// `M` down to the bottom 1.
    pub floor: Vec<u64>,
    /// `M` up to the top 1.
    pub ceiling: Vec<u64>,
    pub edges: Vec<SignedEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPath {
    pub nodes: Vec<Node>,
    pub values: Vec<u64>,
    pub signs: Vec<Sign>,
    pub plus: usize,
    pub minus: usize,
    pub end: PathEnd,
}

impl SignedPath {
    /// `(-1)^(p+q) A^(4(p-q))`.
    pub fn monomial(&self) -> LaurentPoly {
        let sign = if (self.plus + self.minus) % 2 == 0 {
            1
        } else {
            -1
        };
        LaurentPoly::monomial(4 * (self.plus as i32 - self.minus as i32), sign)
    }
}

impl fmt::Display for SignedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values[0])?;
        for (v, s) in self.values[1..].iter().zip(&self.signs) {
            write!(f, " -{}-> {v}", s.as_char())?;
        }
        match self.end {
            PathEnd::Floor => f.write_str(" (floor)"),
            PathEnd::Ceiling => f.write_str(" (ceiling)"),
        }
    }
}

fn diagonal(f: &Frieze, (r, c): (isize, isize), dr: isize, dc: isize) -> Vec<u64> {
    let h = f.height() as isize;
    let (mut r, mut c) = (r, c);
    let mut out = vec![f.entry(r, c)];
    while r >= 0 && r < h {
        r += dr;
        c += dc;
        out.push(f.entry(r, c));
    }
    out
}

pub fn fold_triangle(f: &Frieze) -> Result<FoldedTriangle, RecipeError> {
    let at = locate_maximum(f)?;
    let floor = diagonal(f, at, 1, -1);
    let ceiling = diagonal(f, at, -1, 1);
    let apex = floor[0];
    for (name, flank) in [("floor", &floor), ("ceiling", &ceiling)] {
        if flank.windows(2).any(|w| w[0] <= w[1]) || *flank.last().unwrap() != 1 {
            return Err(RecipeError::SignInconsistency(format!(
                "{name} flank {flank:?} is not strictly decreasing to 1"
            )));
        }
    }
    let node = |floor_side: bool, k: usize| match (k, floor_side) {
        (0, _) => Node::Apex,
        (k, true) => Node::Floor(k),
        (k, false) => Node::Ceiling(k),
    };
    let mut edges = vec![
        SignedEdge {
            from: Node::Apex,
            to: Node::Floor(1),
            sign: Sign::Minus,
        },
        SignedEdge {
            from: Node::Apex,
            to: Node::Ceiling(1),
            sign: Sign::Plus,
        },
    ];
    if apex != floor[1] + ceiling[1] {
        return Err(RecipeError::SignInconsistency(format!(
            "apex {apex} is not {} + {}",
            floor[1], ceiling[1]
        )));
    }
    for (floor_side, own, other) in [(true, &floor, &ceiling), (false, &ceiling, &floor)] {
        let (along, across) = if floor_side {
            (Sign::Minus, Sign::Plus)
        } else {
            (Sign::Plus, Sign::Minus)
        };
        for k in 1..own.len() - 1 {
            let from = node(floor_side, k);
            edges.push(SignedEdge {
                from,
                to: node(floor_side, k + 1),
                sign: along,
            });
            let rest = own[k] - own[k + 1];
            let j = other[1..]
                .iter()
                .position(|&x| x == rest)
                .map(|j| j + 1)
                .ok_or_else(|| {
                    RecipeError::SignInconsistency(format!(
                        "{} - {} = {rest} is not on the opposite flank {other:?}",
                        own[k],
                        own[k + 1]
                    ))
                })?;
            edges.push(SignedEdge {
                from,
                to: node(!floor_side, j),
                sign: across,
            });
        }
    }
    Ok(FoldedTriangle {
        apex,
        floor,
        ceiling,
        edges,
    })
}

impl FoldedTriangle {
    pub fn value(&self, n: Node) -> u64 {
        match n {
            Node::Apex => self.apex,
            Node::Floor(k) => self.floor[k],
            Node::Ceiling(k) => self.ceiling[k],
        }
    }

    fn end_of(&self, n: Node) -> Option<PathEnd> {
        match n {
            Node::Floor(k) if k == self.floor.len() - 1 => Some(PathEnd::Floor),
            Node::Ceiling(k) if k == self.ceiling.len() - 1 => Some(PathEnd::Ceiling),
            _ => None,
        }
    }

    fn children(&self, n: Node) -> impl Iterator<Item = &SignedEdge> {
        self.edges.iter().filter(move |e| e.from == n)
    }

    /// Calls `visit` on every path from the apex to a terminal 1.
    pub fn for_each_path<F: FnMut(&SignedPath)>(
        &self,
        cap: u64,
        mut visit: F,
    ) -> Result<(), RecipeError> {
        let mut steps = 0u64;
        let mut path = SignedPath {
            nodes: vec![Node::Apex],
            values: vec![self.apex],
            signs: Vec::new(),
            plus: 0,
            minus: 0,
            end: PathEnd::Floor,
        };
        self.walk(&mut path, &mut steps, cap, &mut visit)
    }

    fn walk<F: FnMut(&SignedPath)>(
        &self,
        path: &mut SignedPath,
        steps: &mut u64,
        cap: u64,
        visit: &mut F,
    ) -> Result<(), RecipeError> {
        let here = *path.nodes.last().unwrap();
        if let Some(end) = self.end_of(here) {
            path.end = end;
            visit(path);
            return Ok(());
        }
        for e in self.children(here) {
            *steps += 1;
            if *steps > cap {
                return Err(RecipeError::PathCapExceeded { cap });
            }
            path.nodes.push(e.to);
            path.values.push(self.value(e.to));
            path.signs.push(e.sign);
            match e.sign {
                Sign::Plus => path.plus += 1,
                Sign::Minus => path.minus += 1,
            }
            self.walk(path, steps, cap, visit)?;
            match e.sign {
                Sign::Plus => path.plus -= 1,
                Sign::Minus => path.minus -= 1,
            }
            path.nodes.pop();
            path.values.pop();
            path.signs.pop();
        }
        Ok(())
    }

    pub fn paths(&self, cap: u64) -> Result<Vec<SignedPath>, RecipeError> {
        let mut out = Vec::new();
        self.for_each_path(cap, |p| out.push(p.clone()))?;
        Ok(out)
    }

    /// `(sum over all paths, sum over floor-ending paths)`.
    pub fn path_sums(&self, cap: u64) -> Result<(LaurentPoly, LaurentPoly), RecipeError> {
        let mut all = LaurentPoly::zero();
        let mut num = LaurentPoly::zero();
        self.for_each_path(cap, |p| {
            let m = p.monomial();
            if p.end == PathEnd::Floor {
                num = &num + &m;
            }
            all = &all + &m;
        })?;
        Ok((all, num))
    }

    pub fn render_ascii(&self) -> String {
        let label = |n: Node| -> String {
            let v = self.value(n);
            match self.end_of(n) {
                Some(PathEnd::Floor) => format!("({v})"),
                Some(PathEnd::Ceiling) => format!("[{v}]"),
                None => v.to_string(),
            }
        };
        let mut out = String::new();
        let _ = writeln!(out, "fold at M = {}", self.apex);
        let flank = |xs: &[u64], floor: bool| -> String {
            (0..xs.len())
                .map(|k| {
                    label(if k == 0 {
                        Node::Apex
                    } else if floor {
                        Node::Floor(k)
                    } else {
                        Node::Ceiling(k)
                    })
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "floor   (-): {}", flank(&self.floor, true));
        let _ = writeln!(out, "ceiling (+): {}", flank(&self.ceiling, false));
        let _ = writeln!(out, "edges:");
        let mut from = None;
        let mut line = String::new();
        for e in &self.edges {
            if from != Some(e.from) {
                if !line.is_empty() {
                    let _ = writeln!(out, "{}", line.trim_end());
                }
                line = format!("  {:>6} ->", label(e.from));
                from = Some(e.from);
            }
            let _ = write!(line, " {}{}", e.sign.as_char(), label(e.to));
        }
        if !line.is_empty() {
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

fn check_degrees(f: &Frieze, p: &LaurentPoly) -> Result<(), RecipeError> {
    let Some(w) = f.source_word() else {
        return Ok(());
    };
    let want = (-4 * (w.count_l() as i32 + 1), 4 * (w.count_r() as i32 + 1));
    let got = (p.min_degree().unwrap_or(0), p.max_degree().unwrap_or(0));
    if want != got {
        return Err(RecipeError::Orientation(format!(
            "degrees {got:?} of the path sum for {w} should be {want:?}"
        )));
    }
    Ok(())
}

/// Sum over all signed paths from `M`; equals `<Γ>` of the zigzag's word.
pub fn bracket_via_paths(f: &Frieze, cap: u64) -> Result<LaurentPoly, RecipeError> {
    let (all, _) = fold_triangle(f)?.path_sums(cap)?;
    check_degrees(f, &all)?;
    Ok(all)
}

/// Sum over the paths ending at the floor 1. At `A^4 = -1` this is the numerator.
pub fn bracket_num(f: &Frieze, cap: u64) -> Result<LaurentPoly, RecipeError> {
    Ok(fold_triangle(f)?.path_sums(cap)?.1)
}

/// `<D(x)> = (-A^3)^(sum (-1)^(i+1) a_i) <Γ(w(x))>` with `<Γ>` read off the
/// folded frieze and `a_i` the even-length expansion of `x`.
pub fn denominator_link_bracket(x: Fraction, cap: u64) -> Result<LaurentPoly, RecipeError> {
    let w = word_of(x)?;
    let f = Frieze::from_word(&w)?;
    let e = -continued_fraction_even(x)?.alternating_sum();
    Ok(LaurentPoly::minus_a3_pow(e) * bracket_via_paths(&f, cap)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub word: LRWord,
    pub fraction: Fraction,
    /// Parents of the previous fraction; one of them is `fraction`.
    pub parents_of_previous: (Fraction, Fraction),
}

/// Deletes the first letter until the word is empty, checking that each new
/// fraction is a parent of the one before.
pub fn reduce_chain(w: &LRWord) -> Result<Vec<ReductionStep>, RecipeError> {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while !cur.is_empty() {
        let next = cur.tail();
        let (from, got) = (fraction_of(&cur), fraction_of(&next));
        let pp = parents(from)?;
        if got != pp.0 && got != pp.1 {
            return Err(RecipeError::ChainMismatch {
                word: cur,
                next,
                from,
                got,
            });
        }
        out.push(ReductionStep {
            word: next.clone(),
            fraction: got,
            parents_of_previous: pp,
        });
        cur = next;
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

    fn frieze(s: &str) -> Frieze {
        Frieze::from_word(&w(s)).unwrap()
    }

    #[test]
    fn diamond_of_example() {
        let d = extract_diamond(&frieze("RL^2RL")).unwrap();
        assert_eq!((d.m, d.s, d.u, d.t, d.v), (19, 7, 12, 8, 11));
        assert_eq!(extract_diamond(&frieze("L^2R^2L")).unwrap().m, 17);
        assert_eq!(extract_diamond(&frieze("-")).unwrap().m, 2);
    }

    #[test]
    fn flanks_of_example() {
        let t = fold_triangle(&frieze("RL^2RL")).unwrap();
        assert_eq!(t.floor, vec![19, 8, 5, 2, 1]);
        assert_eq!(t.ceiling, vec![19, 11, 3, 1]);
        let paths = t.paths(DEFAULT_PATH_CAP).unwrap();
        assert_eq!(paths.len(), 19);
        let shown = paths
            .iter()
            .find(|g| g.values == vec![19, 8, 5, 3, 2, 1] && g.end == PathEnd::Ceiling)
            .unwrap();
        assert_eq!(
            shown.signs,
            vec![
                Sign::Minus,
                Sign::Minus,
                Sign::Plus,
                Sign::Minus,
                Sign::Plus
            ]
        );
        assert_eq!(shown.end, PathEnd::Ceiling);
        assert_eq!(shown.monomial(), p("-A^-4"));
    }

    #[test]
    fn smallest_fold() {
        let t = fold_triangle(&frieze("-")).unwrap();
        assert_eq!(
            (t.apex, t.floor.clone(), t.ceiling.clone()),
            (2, vec![2, 1], vec![2, 1])
        );
    }

    #[test]
    fn example_path_sums() {
        let f = frieze("RL^2RL");
        assert_eq!(
            bracket_via_paths(&f, DEFAULT_PATH_CAP).unwrap(),
            p("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16")
        );
        assert_eq!(
            bracket_num(&f, DEFAULT_PATH_CAP).unwrap(),
            p("1-A^-4+2A^-8-2A^-12+A^-16")
        );
        assert_eq!(
            bracket_num(&frieze("-"), DEFAULT_PATH_CAP)
                .unwrap()
                .eval_at_a4_minus1(),
            Ok(1)
        );
    }

    #[test]
    fn denominator_link() {
        assert_eq!(
            denominator_link_bracket("7/19".parse().unwrap(), DEFAULT_PATH_CAP).unwrap(),
            p("A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13")
        );
    }

    #[test]
    fn chain_of_example() {
        let steps = reduce_chain(&w("RL^2RL")).unwrap();
        let got: Vec<(String, String)> = steps
            .iter()
            .map(|s| (s.word.to_string(), s.fraction.to_string()))
            .collect();
        let want = [
            ("LLRL", "4/11"),
            ("LRL", "3/8"),
            ("RL", "2/5"),
            ("L", "1/3"),
            ("-", "1/2"),
        ];
        assert_eq!(got, want.map(|(a, b)| (a.to_string(), b.to_string())));
        assert!(reduce_chain(&LRWord::empty()).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            bracket_via_paths(&frieze("RL^2RL"), 3),
            Err(RecipeError::PathCapExceeded { cap: 3 })
        );
    }

    #[test]
    fn non_zigzag_is_rejected() {
        let f = Frieze::from_quiddity(&[1, 4, 1, 2, 4, 1, 2, 3]).unwrap();
        assert!(matches!(
            fold_triangle(&f),
            Err(RecipeError::Frieze(FriezeError::NotZigzagType))
        ));
    }
}

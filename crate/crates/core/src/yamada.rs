//! Ancestor triangles and the Λ²-valued functions `φ` and `φ̃`.
//!
//! `φ` is evaluated two ways: by the mediant recursion
//! `φ(x) = -A^4 φ(y) - A^-4 φ(z)` over the parents `(y, z)`, and directly as
//! a weighted sum over the descending paths of the ancestor triangle.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::rational::{
    continued_fraction_even, farey_sum, parents, ContinuedFraction, Fraction, RationalError,
};
use crate::tangle::{v_map, BracketVector};

/// Default bound on path steps walked by [`phi_direct`].
pub const DEFAULT_PATH_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YamadaError {
    #[error("ancestor triangles need 0 < x < inf, got {0}")]
    Domain(Fraction),
    #[error("path enumeration exceeded the cap of {cap} steps at {x}")]
    PathCapExceeded { x: Fraction, cap: u64 },
    #[error("inconsistent path geometry at {x}: {reason}")]
    Geometry { x: Fraction, reason: String },
    #[error(transparent)]
    Rational(#[from] RationalError),
}

/// Memoized mediant recursion with configurable base values.
///
/// A table is meant to be owned by one thread; sweeps give each worker its own.
#[derive(Clone, Debug)]
pub struct PhiTable {
    at_zero: BracketVector,
    at_infinity: BracketVector,
    left_coef: LaurentPoly,
    right_coef: LaurentPoly,
    memo: HashMap<Fraction, BracketVector>,
}

impl PhiTable {
    fn with_bases(at_zero: BracketVector, at_infinity: BracketVector) -> Self {
        Self {
            at_zero,
            at_infinity,
            left_coef: LaurentPoly::monomial(4, -1),
            right_coef: LaurentPoly::monomial(-4, -1),
            memo: HashMap::new(),
        }
    }

    /// `φ(0) = [0]`, `φ(inf) = A^6 [inf]`.
    pub fn phi() -> Self {
        Self::with_bases(
            BracketVector::zero_tangle(),
            BracketVector::new(LaurentPoly::a_pow(6), LaurentPoly::zero()),
        )
    }

    /// `φ̃(0) = [0]`, `φ̃(inf) = [inf]`.
    pub fn phi_tilde() -> Self {
        Self::with_bases(
            BracketVector::zero_tangle(),
            BracketVector::infinity_tangle(),
        )
    }

    /// Replaces `-A^4` by `+A^4` in the recursion. Only for mutation tests.
    #[doc(hidden)]
    pub fn with_flipped_sign(mut self) -> Self {
        self.left_coef = LaurentPoly::monomial(4, 1);
        self.memo.clear();
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Evaluates at `x`, walking the Stern-Brocot descent so that every
    /// mediant is computed from its two parents exactly once.
    pub fn get(&mut self, x: Fraction) -> BracketVector {
        if x.is_zero() {
            return self.at_zero.clone();
        }
        if x.is_infinite() {
            return self.at_infinity.clone();
        }
        if let Some(v) = self.memo.get(&x) {
            return v.clone();
        }
        let (mut lo, mut hi) = (Fraction::ZERO, Fraction::INFINITY);
        let (mut v_lo, mut v_hi) = (self.at_zero.clone(), self.at_infinity.clone());
        loop {
            let m = farey_sum(lo, hi).expect("descent pairs are neighbours");
            let v_m = match self.memo.get(&m) {
                Some(v) => v.clone(),
                None => {
                    let v = v_lo
                        .scale(&self.left_coef)
                        .add(&v_hi.scale(&self.right_coef));
                    self.memo.insert(m, v.clone());
                    v
                }
            };
            match x.cmp(&m) {
                std::cmp::Ordering::Equal => return v_m,
                std::cmp::Ordering::Less => (hi, v_hi) = (m, v_m),
                std::cmp::Ordering::Greater => (lo, v_lo) = (m, v_m),
            }
        }
    }
}

/// `φ(x)` by the mediant recursion.
pub fn phi_recursive(x: Fraction) -> BracketVector {
    PhiTable::phi().get(x)
}

/// `φ̃(x)` by the mediant recursion.
pub fn phi_tilde(x: Fraction) -> BracketVector {
    PhiTable::phi_tilde().get(x)
}

/// `tr(a [inf] + b [0]) = a (-A^4)(A^4 + 1) + b`.
pub fn tr_map(t: &BracketVector) -> LaurentPoly {
    let c = LaurentPoly::from_terms([(8, -1), (4, -1)]).expect("small");
    &t.n * &c + &t.d
}

/// The exponent `e` with `φ(x) = (-A^3)^e <T(x)>`: the alternating sum of the
/// expansion, plus 2 when the expansion has odd length parameter.
pub fn normalization_exponent(cf: &ContinuedFraction) -> i64 {
    let s = cf.alternating_sum();
    if cf.is_even() {
        s
    } else {
        s + 2
    }
}

/// `<T(x)> = (-A^3)^-e φ(x)`.
pub fn bracket_via_phi(x: Fraction) -> Result<BracketVector, RationalError> {
    let e = if x.is_infinite() {
        2
    } else {
        normalization_exponent(&continued_fraction_even(x)?)
    };
    Ok(phi_recursive(x).scale(&LaurentPoly::minus_a3_pow(-e)))
}

/// Which axis end a base vertex is drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisEnd {
    Negative,
    Positive,
}

/// Drawing convention: `0/1` on the negative axis, `1/0` on the positive
/// axis, apex below. `w_L` counts towards the `0/1` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub zero_at: AxisEnd,
    pub infinity_at: AxisEnd,
}

impl Default for Orientation {
    fn default() -> Self {
        Self {
            zero_at: AxisEnd::Negative,
            infinity_at: AxisEnd::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalTriangle {
    pub left: Fraction,
    pub right: Fraction,
    pub mediant: Fraction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    Zero,
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescendingPath {
    /// From the terminal down to the apex.
    pub vertices: Vec<Fraction>,
    pub terminal: Terminal,
    pub w_r: usize,
    pub w_l: usize,
}

#[derive(Clone, Debug)]
pub struct AncestorTriangle {
    pub apex: Fraction,
    pub vertices: BTreeSet<Fraction>,
    /// Ordered from the apex upwards (decreasing `p + q` of the mediant).
    pub fundamental_triangles: Vec<FundamentalTriangle>,
    /// Apex, then left parents, ending at `0/1`.
    pub left_side: Vec<Fraction>,
    /// Apex, then right parents, ending at `1/0`.
    pub right_side: Vec<Fraction>,
    pub orientation: Orientation,
    parent_of: HashMap<Fraction, (Fraction, Fraction)>,
}

pub fn build_triangle(x: Fraction) -> Result<AncestorTriangle, YamadaError> {
    if x.is_zero() || x.is_infinite() {
        return Err(YamadaError::Domain(x));
    }
    let mut parent_of = HashMap::new();
    let mut vertices = BTreeSet::from([x, Fraction::ZERO, Fraction::INFINITY]);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        if v.is_zero() || v.is_infinite() || parent_of.contains_key(&v) {
            continue;
        }
        let (y, z) = parents(v)?;
        parent_of.insert(v, (y, z));
        vertices.extend([y, z]);
        stack.extend([y, z]);
    }
    let side = |pick_left: bool| {
        let mut out = vec![x];
        let mut v = x;
        while let Some(&(y, z)) = parent_of.get(&v) {
            v = if pick_left { y } else { z };
            out.push(v);
        }
        out
    };
    let mut fundamental_triangles: Vec<_> = parent_of
        .iter()
        .map(|(&m, &(left, right))| FundamentalTriangle {
            left,
            right,
            mediant: m,
        })
        .collect();
    fundamental_triangles.sort_by_key(|t| {
        (
            std::cmp::Reverse(t.mediant.numer() + t.mediant.denom()),
            t.mediant,
        )
    });
    Ok(AncestorTriangle {
        apex: x,
        vertices,
        fundamental_triangles,
        left_side: side(true),
        right_side: side(false),
        orientation: Orientation::default(),
        parent_of,
    })
}

impl AncestorTriangle {
    /// `l(α)`: edges on the left oblique side.
    pub fn l(&self) -> usize {
        self.left_side.len() - 1
    }

    /// `r(α)`: edges on the right oblique side.
    pub fn r(&self) -> usize {
        self.right_side.len() - 1
    }

    pub fn parents_of(&self, v: Fraction) -> Option<(Fraction, Fraction)> {
        self.parent_of.get(&v).copied()
    }

    /// Number of fundamental triangles, `l + r - 1`.
    pub fn size(&self) -> usize {
        self.fundamental_triangles.len()
    }

    /// Walks every descending path (apex to a terminal) depth first and calls
    /// `visit` with the vertices listed apex first. Stops with an error once
    /// more than `cap` steps have been taken.
    pub fn for_each_path<F>(&self, cap: u64, mut visit: F) -> Result<(), YamadaError>
    where
        F: FnMut(&[Fraction]) -> Result<(), YamadaError>,
    {
        let mut steps: u64 = 0;
        let mut path = vec![self.apex];
        // next choice per depth: 0 = left parent, 1 = right parent, 2 = done
        let mut choice = vec![0u8];
        while let Some(&c) = choice.last() {
            let v = *path.last().unwrap();
            if v.is_zero() || v.is_infinite() {
                visit(&path)?;
                path.pop();
                choice.pop();
                continue;
            }
            if c == 2 {
                path.pop();
                choice.pop();
                continue;
            }
            *choice.last_mut().unwrap() += 1;
            steps += 1;
            if steps > cap {
                return Err(YamadaError::PathCapExceeded { x: self.apex, cap });
            }
            let (y, z) = self.parent_of[&v];
            path.push(if c == 0 { y } else { z });
            choice.push(0);
        }
        Ok(())
    }

    /// Boundary coordinates of the region between a path and one side of
    /// the triangle, running from the base towards the apex.
    fn arc_coordinates(&self, towards_infinity: bool) -> HashMap<Fraction, usize> {
        // Walking from the base: the opposite base vertex (reached through
        // the base edge) has coordinate 0, then the chosen side from its
        // terminal down to the apex.
        let (far, side) = if towards_infinity {
            (Fraction::ZERO, &self.right_side)
        } else {
            (Fraction::INFINITY, &self.left_side)
        };
        let mut coords = HashMap::from([(far, 0)]);
        for (k, &v) in side.iter().rev().enumerate() {
            coords.insert(v, k + 1);
        }
        coords
    }

    /// Fundamental triangles between `path` (apex first) and the side
    /// described by `coords`. The region splits into polygons at every
    /// vertex shared by the path and the side; a triangulated `k`-gon holds
    /// `k - 2` triangles.
    fn triangles_beside(
        &self,
        path: &[Fraction],
        coords: &HashMap<Fraction, usize>,
    ) -> Result<usize, YamadaError> {
        let mut total = 0;
        let mut last: Option<(usize, usize)> = None; // (coordinate, index on path)
        for (i, v) in path.iter().rev().enumerate() {
            let Some(&c) = coords.get(v) else { continue };
            if let Some((c0, i0)) = last {
                if c <= c0 {
                    return Err(YamadaError::Geometry {
                        x: self.apex,
                        reason: format!("path revisits the boundary backwards at {v}"),
                    });
                }
                let k = (c - c0 + 1) + (i - i0 - 1);
                total += k - 2;
            }
            last = Some((c, i));
        }
        Ok(total)
    }

    /// `(w_R, w_L)` of a path given apex first.
    pub fn weights(&self, path: &[Fraction]) -> Result<(usize, usize), YamadaError> {
        let w_r = self.triangles_beside(path, &self.arc_coordinates(true))?;
        let w_l = self.triangles_beside(path, &self.arc_coordinates(false))?;
        if w_r + w_l != self.size() {
            return Err(YamadaError::Geometry {
                x: self.apex,
                reason: format!(
                    "w_R + w_L = {} but the triangle has {} pieces",
                    w_r + w_l,
                    self.size()
                ),
            });
        }
        Ok((w_r, w_l))
    }

    /// All descending paths, each listed from its terminal down to the apex.
    pub fn descending_paths(&self, cap: u64) -> Result<Vec<DescendingPath>, YamadaError> {
        let mut out = Vec::new();
        self.for_each_path(cap, |path| {
            let (w_r, w_l) = self.weights(path)?;
            let terminal = if path.last().unwrap().is_zero() {
                Terminal::Zero
            } else {
                Terminal::Infinity
            };
            out.push(DescendingPath {
                vertices: path.iter().rev().copied().collect(),
                terminal,
                w_r,
                w_l,
            });
            Ok(())
        })?;
        Ok(out)
    }

    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        let join = |v: &[Fraction]| {
            v.iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(" - ")
        };
        let _ = writeln!(out, "ancestor triangle of {}", self.apex);
        let _ = writeln!(out, "r={} l={}", self.r(), self.l());
        let _ = writeln!(out, "left side:  {}", join(&self.left_side));
        let _ = writeln!(out, "right side: {}", join(&self.right_side));
        let _ = writeln!(out, "fundamental triangles ({}):", self.size());
        let mut rows: BTreeMap<u64, Vec<&FundamentalTriangle>> = BTreeMap::new();
        for t in &self.fundamental_triangles {
            rows.entry(t.mediant.numer() + t.mediant.denom())
                .or_default()
                .push(t);
        }
        let width = self
            .fundamental_triangles
            .iter()
            .map(|t| t.mediant.to_string().len())
            .max()
            .unwrap_or(1);
        for (weight, row) in rows.iter().rev() {
            let cells: Vec<String> = row
                .iter()
                .map(|t| {
                    format!(
                        "{:>width$} = {} # {}",
                        t.mediant.to_string(),
                        t.left,
                        t.right
                    )
                })
                .collect();
            let _ = writeln!(out, "  [{weight:>3}] {}", cells.join("   "));
        }
        out
    }
}

/// `φ(x)` as a sum over descending paths:
/// `A^6 (-A^4)^-r sum_{P_inf} (-A^4)^{w_R} [inf] + (-A^4)^l sum_{P_0} (-A^4)^{-w_L} [0]`.
pub fn phi_direct(x: Fraction, cap: u64) -> Result<BracketVector, YamadaError> {
    if x.is_zero() {
        return Ok(BracketVector::zero_tangle());
    }
    if x.is_infinite() {
        return Ok(BracketVector::new(
            LaurentPoly::a_pow(6),
            LaurentPoly::zero(),
        ));
    }
    let tri = build_triangle(x)?;
    let (r, l) = (tri.r() as i32, tri.l() as i32);
    // exponent of (-A^4) -> number of paths
    let mut inf_counts: BTreeMap<i32, i64> = BTreeMap::new();
    let mut zero_counts: BTreeMap<i32, i64> = BTreeMap::new();
    tri.for_each_path(cap, |path| {
        let (w_r, w_l) = tri.weights(path)?;
        if path.last().unwrap().is_infinite() {
            *inf_counts.entry(w_r as i32 - r).or_default() += 1;
        } else {
            *zero_counts.entry(l - w_l as i32).or_default() += 1;
        }
        Ok(())
    })?;
    let collect = |counts: &BTreeMap<i32, i64>, shift: i32| {
        LaurentPoly::from_terms(
            counts
                .iter()
                .map(|(&k, &c)| (4 * k + shift, if k.rem_euclid(2) == 0 { c } else { -c })),
        )
        .expect("path counts fit in i64")
    };
    Ok(BracketVector::new(
        collect(&inf_counts, 6),
        collect(&zero_counts, 0),
    ))
}

/// `<Γ>` of the fraction: `v(φ(x))`.
pub fn v_phi(x: Fraction) -> LaurentPoly {
    v_map(&phi_recursive(x))
}

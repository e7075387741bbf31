//! Exhaustive property sweeps, shared by `frieze-bracket verify`, the
//! acceptance runner and the integration tests.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::frieze::{
    complete_invariant, determinant_eval, frieze_bracket, frieze_bracket_recursive, frieze_equal,
    qr_at_minus1, qr_polynomials, Frieze, FriezeError,
};
use crate::laurent::LaurentPoly;
use crate::lrword::{fraction_of, i_word, ir_word, join, r_word, word_of, LRWord};
use crate::rational::{continued_fraction_odd, evaluate, ir_fraction, parents, Fraction};
use crate::recipe::{
    bracket_num, bracket_via_paths, denominator_link_bracket, extract_diamond, fold_triangle,
    reduce_chain, Node, Sign,
};
use crate::tangle::{denominator_closure, tangle_of_fraction};
use crate::yamada::{bracket_via_phi, phi_direct, v_phi, PhiTable, DEFAULT_PATH_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Denominator bound for the φ oracle and the symmetry sweeps.
    pub max_q: u64,
    /// Denominator bound for the tangle bridge and the fold recipe.
    pub max_q_bridge: u64,
    /// Denominator bound for the determinant law and the case split.
    pub max_q_det: u64,
    /// Word length bound for degree bounds and word identities.
    pub max_len: usize,
    /// Word length bound for frieze checks and completeness.
    pub max_len_pairs: usize,
    pub path_cap: u64,
    /// Flips `-A^4` to `+A^4` in the φ recursion, for mutation smoke tests.
    #[doc(hidden)]
    pub mutate_phi: bool,
}

impl VerifyConfig {
    /// Bounds derived from two knobs: `max_q` drives the oracle sweeps (the
    /// bridge and recipe stop at 50, the determinant sweeps run to `2 max_q`),
    /// `max_len` drives the word sweeps (pairs stop at 10).
    pub fn from_bounds(max_q: u64, max_len: usize) -> Self {
        Self {
            max_q,
            max_q_bridge: max_q.min(50),
            max_q_det: 2 * max_q,
            max_len,
            max_len_pairs: max_len.min(10),
            path_cap: DEFAULT_PATH_CAP,
            mutate_phi: false,
        }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self::from_bounds(100, 12)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

const SHOWN_FAILURES: usize = 5;

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "verify: q <= {} (bridge {}, determinant {}), words <= {} (pairs {})",
            c.max_q, c.max_q_bridge, c.max_q_det, c.max_len, c.max_len_pairs
        )?;
        for s in &self.suites {
            let tag = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {:<28} {:>8} checked", s.name, s.checked)?;
            for n in &s.notes {
                writeln!(f, "      {n}")?;
            }
            for m in s.failures.iter().take(SHOWN_FAILURES) {
                writeln!(f, "      {m}")?;
            }
            if s.failures.len() > SHOWN_FAILURES {
                writeln!(f, "      ... {} more", s.failures.len() - SHOWN_FAILURES)?;
            }
        }
        let total: usize = self.suites.iter().map(|s| s.checked).sum();
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            write!(f, "PASS: {} suites, {total} checks", self.suites.len())
        } else {
            write!(f, "FAIL: {failed} of {} suites failed", self.suites.len())
        }
    }
}

/// Reduced `p/q` with `0 < p < q <= max_q`, by denominator then numerator.
pub fn unit_fractions(max_q: u64) -> Vec<Fraction> {
    (2..=max_q)
        .flat_map(|q| (1..q).map(move |p| (p, q)))
        .filter_map(|(p, q)| Fraction::new(p, q).ok().filter(|x| x.numer() == p))
        .collect()
}

/// Reduced `p/q` with `p, q >= 1` and `max(p, q) <= max_q`: the unit
/// fractions, `1/1`, and their reciprocals.
pub fn positive_fractions(max_q: u64) -> Vec<Fraction> {
    let unit = unit_fractions(max_q);
    let mut out = unit.clone();
    if max_q >= 1 {
        out.push(Fraction::ONE);
    }
    out.extend(
        unit.iter()
            .map(|x| Fraction::new(x.denom(), x.numer()).expect("nonzero")),
    );
    out
}

fn sweep<T, F>(name: &'static str, items: &[T], check: F) -> SuiteReport
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let failures: Vec<String> = items.par_iter().filter_map(|x| check(x).err()).collect();
    SuiteReport {
        name,
        checked: items.len(),
        failures,
        notes: Vec::new(),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(at: impl fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{at}: {e}")
}

/// φ by mediant recursion against φ by ancestor-triangle paths, plus the
/// linearity of `v∘φ` over parents.
pub fn check_phi_oracle(x: Fraction, cap: u64, mutate: bool) -> Result<(), String> {
    let mut table = PhiTable::phi();
    if mutate {
        table = table.with_flipped_sign();
    }
    let direct = phi_direct(x, cap).map_err(err(x))?;
    let recursive = table.get(x);
    ensure(direct == recursive, || {
        format!("{x}: recursion gives {recursive}, paths give {direct}")
    })?;
    let (y, z) = parents(x).map_err(err(x))?;
    let v = |t: &crate::tangle::BracketVector| crate::tangle::v_map(t);
    let lhs = v(&direct);
    let rhs = LaurentPoly::monomial(4, -1) * v(&table.get(y))
        + LaurentPoly::monomial(-4, -1) * v(&table.get(z));
    ensure(lhs == rhs, || {
        format!("{x}: v(φ) is not linear over parents {y}, {z}")
    })
}

/// Normalized φ against the tangle assembled from the expansion.
pub fn check_tangle_bridge(x: Fraction) -> Result<(), String> {
    let via_phi = bracket_via_phi(x).map_err(err(x))?;
    let assembled = tangle_of_fraction(x).map_err(err(x))?;
    ensure(via_phi == assembled, || {
        format!("{x}: normalized φ {via_phi} vs tangle {assembled}")
    })
}

/// `(-t - t^-1) Q + R` for `x`.
pub fn qr_bracket(x: Fraction) -> Result<LaurentPoly, FriezeError> {
    let (q, r) = qr_polynomials(x)?;
    let c = LaurentPoly::monomial(4, -1) + LaurentPoly::monomial(-4, -1);
    Ok(c * q + r)
}

fn check_fold_structure(f: &Frieze) -> Result<(), String> {
    let t = fold_triangle(f).map_err(|e| e.to_string())?;
    ensure(t.apex == f.max_entry(), || {
        format!("apex {} is not the maximum {}", t.apex, f.max_entry())
    })?;
    let mut froms: Vec<Node> = t.edges.iter().map(|e| e.from).collect();
    froms.dedup();
    for n in froms {
        let out: Vec<_> = t.edges.iter().filter(|e| e.from == n).collect();
        let sum: u64 = out.iter().map(|e| t.value(e.to)).sum();
        ensure(out.len() == 2 && sum == t.value(n), || {
            format!("node {} is not the sum of its children", t.value(n))
        })?;
        ensure(out[0].sign != out[1].sign, || {
            format!("node {} has two edges of one sign", t.value(n))
        })?;
        for e in out {
            let boundary_ok = match (e.from, e.to) {
                (Node::Apex | Node::Floor(_), Node::Floor(_)) => e.sign == Sign::Minus,
                (Node::Apex | Node::Ceiling(_), Node::Ceiling(_)) => e.sign == Sign::Plus,
                _ => true,
            };
            ensure(boundary_ok, || {
                format!("flank edge from {} has the wrong sign", t.value(e.from))
            })?;
        }
    }
    for p in t.paths(DEFAULT_PATH_CAP).map_err(|e| e.to_string())? {
        ensure(
            p.values.windows(2).all(|w| w[0] > w[1]) && p.values.last() == Some(&1),
            || format!("path {p} does not descend to 1"),
        )?;
    }
    Ok(())
}

/// The fold recipe against `v∘φ` and the Q/R route, with the numerator,
/// denominator-link and reduction-chain checks.
pub fn check_recipe(x: Fraction, cap: u64) -> Result<(), String> {
    let w = word_of(x).map_err(err(x))?;
    let f = Frieze::from_word(&w).map_err(err(x))?;
    extract_diamond(&f).map_err(err(x))?;
    check_fold_structure(&f).map_err(|e| format!("{x}: {e}"))?;
    let paths = bracket_via_paths(&f, cap).map_err(err(x))?;
    let phi = v_phi(x);
    let qr = qr_bracket(x).map_err(err(x))?;
    ensure(paths == phi && phi == qr, || {
        format!("{x}: paths {paths}, v(φ) {phi}, Q/R {qr}")
    })?;
    let num = bracket_num(&f, cap).map_err(err(x))?;
    let (p, q) = (x.numer() as i64, x.denom() as i64);
    let ev = |a: &LaurentPoly| a.eval_at_a4_minus1().map_err(err(x));
    ensure(ev(&num)? == p, || {
        format!("{x}: numerator paths evaluate to {:?}", ev(&num))
    })?;
    ensure(ev(&(&paths - &num))? == q - p, || {
        format!("{x}: ceiling paths do not evaluate to q - p")
    })?;
    ensure(ev(&paths)? == q, || {
        format!("{x}: path sum does not evaluate to q")
    })?;
    let d = denominator_link_bracket(x, cap).map_err(err(x))?;
    let d_tangle = denominator_closure(&tangle_of_fraction(x).map_err(err(x))?);
    ensure(d == d_tangle, || {
        format!("{x}: denominator link {d} vs tangle closure {d_tangle}")
    })?;
    reduce_chain(&w).map_err(err(x))?;
    Ok(())
}

pub fn check_determinant(x: Fraction) -> Result<(), String> {
    let d = determinant_eval(x);
    ensure(d == x.denom() as i64, || {
        format!("{x}: v(φ) at A^4 = -1 is {d}")
    })?;
    qr_at_minus1(x).map(|_| ()).map_err(err(x))
}

/// Degree bounds and sign alternation of `<Γ(w)>`.
pub fn check_degrees(w: &LRWord) -> Result<(), String> {
    let b = frieze_bracket_recursive(w);
    let phi = frieze_bracket(w);
    ensure(b == phi, || {
        format!("{w}: word recursion {b} vs v(φ) {phi}")
    })?;
    let lo = -4 * (w.count_l() as i32 + 1);
    let hi = 4 * (w.count_r() as i32 + 1);
    ensure(
        b.min_degree() == Some(lo) && b.max_degree() == Some(hi),
        || {
            format!(
                "{w}: degrees {:?}..{:?}, expected {lo}..{hi}",
                b.min_degree(),
                b.max_degree()
            )
        },
    )?;
    for (e, c) in b.terms() {
        let k = e.div_euclid(4);
        let sign_ok = if k.rem_euclid(2) == 0 { c > 0 } else { c < 0 };
        ensure(e % 4 == 0 && sign_ok, || {
            format!("{w}: coefficient {c} of A^{e} breaks the sign pattern")
        })?;
    }
    Ok(())
}

/// Word-map identities: the bijection with fractions, `i`, `r`, `ir`, joins
/// over parents, and the one-letter extension rule.
pub fn check_word_identities(w: &LRWord, with_extension: bool) -> Result<(), String> {
    let x = fraction_of(w);
    let back = word_of(x).map_err(err(w))?;
    ensure(&back == w, || {
        format!("{w}: word_of(fraction_of) gives {back}")
    })?;
    let comp = x.complement().map_err(err(w))?;
    ensure(fraction_of(&i_word(w)) == comp, || {
        format!("{w}: i does not complement the fraction")
    })?;
    ensure(ir_word(&ir_word(w)) == *w, || {
        format!("{w}: ir is not an involution")
    })?;
    ensure(i_word(&r_word(w)) == r_word(&i_word(w)), || {
        format!("{w}: i and r do not commute")
    })?;
    let irx = ir_fraction(x).map_err(err(w))?;
    ensure(word_of(irx).ok().as_ref() == Some(&ir_word(w)), || {
        format!("{w}: ir(w(x)) is not w(ir(x))")
    })?;
    let (lo, hi) = parents(x).map_err(err(w))?;
    let y = x.denom();
    ensure(
        fraction_of(&r_word(w)) == Fraction::new(lo.denom(), y).map_err(err(w))?,
        || format!("{w}: r(w) is not {}/{y}", lo.denom()),
    )?;
    ensure(
        fraction_of(&ir_word(w)) == Fraction::new(hi.denom(), y).map_err(err(w))?,
        || format!("{w}: ir(w) is not {}/{y}", hi.denom()),
    )?;
    if lo.in_unit_interval() && hi.in_unit_interval() {
        let (a, b) = (word_of(lo).map_err(err(w))?, word_of(hi).map_err(err(w))?);
        let j = join(&a, &b).map_err(err(w))?;
        ensure(&j == w, || {
            format!("{w}: join of the parents' words gives {j}")
        })?;
        let ji = join(&i_word(&b), &i_word(&a)).map_err(err(w))?;
        ensure(i_word(&j) == ji, || format!("{w}: i does not reverse join"))?;
    }
    if with_extension {
        let cf = continued_fraction_odd(fraction_of(&i_word(w))).map_err(err(w))?;
        let a = cf.terms();
        let mut with_r = vec![0, 1];
        with_r.extend_from_slice(&a[1..]);
        let mut with_l = vec![0, 2, a[1] - 1];
        with_l.extend_from_slice(&a[2..]);
        let (xr, xl) = (
            evaluate(&with_r).map_err(err(w))?,
            evaluate(&with_l).map_err(err(w))?,
        );
        ensure(
            fraction_of(&w.append(crate::lrword::Letter::R)) == xr,
            || format!("{w}: wR is not {xr}"),
        )?;
        ensure(
            fraction_of(&w.append(crate::lrword::Letter::L)) == xl,
            || format!("{w}: wL is not {xl}"),
        )?;
    }
    Ok(())
}

/// Symmetries of `v∘φ` under `ir` and complement.
pub fn check_symmetries(x: Fraction) -> Result<(), String> {
    let b = v_phi(x).bar();
    let irx = ir_fraction(x).map_err(err(x))?;
    ensure(irx.denom() == x.denom(), || {
        format!("{x}: ir changes the denominator")
    })?;
    ensure(b == v_phi(irx), || {
        format!("{x}: bar(v(φ)) is not v(φ(ir x)) at {irx}")
    })?;
    let c = x.complement().map_err(err(x))?;
    ensure(b == v_phi(c), || format!("{x}: bar(v(φ)) is not v(φ({c}))"))?;
    let w = word_of(x).map_err(err(x))?;
    let qr = qr_bracket(x).map_err(err(x))?;
    ensure(qr == frieze_bracket(&w), || {
        format!("{x}: (-t-t^-1)Q + R is not <Γ>")
    })
}

/// Well-formedness of the frieze of `w`, its reflections and its fold.
pub fn check_frieze(w: &LRWord) -> Result<(), String> {
    let f = Frieze::from_word(w).map_err(err(w))?;
    f.validate().map_err(err(w))?;
    ensure(f.width() % f.period() == 0, || {
        format!("{w}: period {} does not divide {}", f.period(), f.width())
    })?;
    let bare = Frieze::from_rows(f.rows().to_vec()).map_err(err(w))?;
    ensure(bare.locate_zigzags().iter().any(|z| &z.word == w), || {
        format!("{w}: no zigzag reads the word")
    })?;
    let again = Frieze::from_quiddity(f.quiddity()).map_err(err(w))?;
    ensure(again.rows() == f.rows(), || {
        format!("{w}: quiddity does not regenerate the frieze")
    })?;
    let m = f.vertical_reflection();
    m.validate().map_err(err(w))?;
    let fi = Frieze::from_word(&i_word(w)).map_err(err(w))?;
    ensure(frieze_equal(&m, &fi), || {
        format!("{w}: mirror is not the frieze of i(w)")
    })?;
    let (bm, bf) = (m.bracket().map_err(err(w))?, f.bracket().map_err(err(w))?);
    ensure(bm.eq_up_to_bar(&bf), || {
        format!("{w}: mirror bracket differs beyond A -> A^-1")
    })?;
    ensure(frieze_equal(&f.flip_rows(), &f), || {
        format!("{w}: frieze lacks the glide symmetry")
    })?;
    check_fold_structure(&f).map_err(|e| format!("{w}: {e}"))
}

fn mirror_key(f: &Frieze) -> Vec<u64> {
    f.translation_key()
        .min(f.vertical_reflection().translation_key())
}

/// `C_w = C_w'` iff the friezes agree up to translation or mirror, over all
/// words up to `max_len`. Notes record how many `C_w` classes would split
/// under translation alone.
/// Invariant text, translation key and mirror key of one word.
type Keys = (String, Vec<u64>, Vec<u64>);

pub fn completeness(max_len: usize) -> SuiteReport {
    let words: Vec<LRWord> = LRWord::all_up_to(max_len).collect();
    let rows: Vec<Result<Keys, String>> = words
        .par_iter()
        .map(|w| {
            let inv = complete_invariant(w).map_err(err(w))?;
            let f = Frieze::from_word(w).map_err(err(w))?;
            Ok((inv.to_string(), f.translation_key(), mirror_key(&f)))
        })
        .collect();
    let mut failures: Vec<String> = rows
        .iter()
        .filter_map(|r| r.as_ref().err().cloned())
        .collect();
    let ok: Vec<&Keys> = rows.iter().filter_map(|r| r.as_ref().ok()).collect();
    let invs = ok.iter().map(|r| &r.0).collect::<HashSet<_>>().len();
    let mirror_classes = ok.iter().map(|r| &r.2).collect::<HashSet<_>>().len();
    let joint = ok
        .iter()
        .map(|r| (&r.0, &r.2))
        .collect::<HashSet<_>>()
        .len();
    let translation_classes = ok.iter().map(|r| &r.1).collect::<HashSet<_>>().len();
    if !(invs == mirror_classes && mirror_classes == joint) {
        failures.push(format!(
            "{invs} invariant classes, {mirror_classes} frieze classes up to translation or mirror, {joint} joint"
        ));
    }
    let pairs = words.len() * (words.len().saturating_sub(1)) / 2;
    SuiteReport {
        name: "complete invariant",
        checked: pairs,
        failures,
        notes: vec![
            format!("{invs} classes of C_w over {} words", words.len()),
            format!("friezes up to translation or mirror: {mirror_classes} classes (matches C_w)"),
            format!("friezes up to translation alone: {translation_classes} classes"),
        ],
    }
}

/// A valid frieze with no 1-zigzag is rejected by word reconstruction.
pub fn check_non_zigzag_rejected() -> Result<(), String> {
    let f = Frieze::from_quiddity(&[1, 4, 1, 2, 4, 1, 2, 3]).map_err(|e| e.to_string())?;
    ensure(
        f.reconstruct_word() == Err(FriezeError::NotZigzagType),
        || "non-zigzag frieze was accepted".into(),
    )
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let cap = cfg.path_cap;
    let all_q = positive_fractions(cfg.max_q);
    let unit_q = unit_fractions(cfg.max_q);
    let bridge = positive_fractions(cfg.max_q_bridge);
    let unit_bridge = unit_fractions(cfg.max_q_bridge);
    let unit_det = unit_fractions(cfg.max_q_det);
    let words: Vec<LRWord> = LRWord::all_up_to(cfg.max_len).collect();
    let nonempty: Vec<LRWord> = words.iter().filter(|w| !w.is_empty()).cloned().collect();
    let short: Vec<LRWord> = LRWord::all_up_to(cfg.max_len_pairs).collect();

    let mut non_zigzag = sweep("frieze well-formedness", &short, check_frieze);
    non_zigzag.checked += 1;
    if let Err(e) = check_non_zigzag_rejected() {
        non_zigzag.failures.push(e);
    }

    let suites = vec![
        sweep("phi recursion vs paths", &all_q, |&x| {
            check_phi_oracle(x, cap, cfg.mutate_phi)
        }),
        sweep("tangle bridge", &bridge, |&x| check_tangle_bridge(x)),
        sweep("fold recipe", &unit_bridge, |&x| check_recipe(x, cap)),
        sweep("determinant and case split", &unit_det, |&x| {
            check_determinant(x)
        }),
        sweep("degree bounds", &nonempty, check_degrees),
        sweep("symmetries", &unit_q, |&x| check_symmetries(x)),
        sweep("word identities", &words, |w| {
            check_word_identities(w, w.len() <= cfg.max_len_pairs)
        }),
        non_zigzag,
        completeness(cfg.max_len_pairs),
    ];
    VerifyReport {
        config: cfg.clone(),
        suites,
    }
}

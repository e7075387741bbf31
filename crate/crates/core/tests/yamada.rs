use frieze_bracket::rational::{continued_fraction_even, evaluate, parents};
use frieze_bracket::tangle::{tangle_of_fraction, v_map};
use frieze_bracket::verify::{check_phi_oracle, positive_fractions};
use frieze_bracket::yamada::{
    bracket_via_phi, build_triangle, normalization_exponent, phi_direct, phi_recursive, phi_tilde,
    tr_map, v_phi, PhiTable, Terminal, YamadaError, DEFAULT_PATH_CAP,
};
use frieze_bracket::{BracketVector, Fraction, LaurentPoly};

fn f(s: &str) -> Fraction {
    s.parse().unwrap()
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn base_cases_and_one_half() {
    assert_eq!(phi_recursive(Fraction::ZERO), BracketVector::zero_tangle());
    assert_eq!(
        phi_recursive(Fraction::INFINITY),
        BracketVector::new(LaurentPoly::a_pow(6), LaurentPoly::zero())
    );
    let half = phi_recursive(Fraction::HALF);
    assert_eq!(half, BracketVector::new(p("A^-2"), p("1-A^4")));
    assert_eq!(v_map(&half), p("-A^4-A^-4"));
    assert_eq!(
        phi_tilde(Fraction::INFINITY),
        BracketVector::infinity_tangle()
    );
    assert_eq!(phi_tilde(Fraction::ZERO), BracketVector::zero_tangle());
}

/// `φ(1/n) = (-A^2)(-A^4)^(1-n) ([inf] + A^2 sum_{k<n} (-A^4)^k [0])`.
#[test]
fn one_over_n() {
    let m4 = LaurentPoly::monomial(4, -1);
    let pow = |x: &LaurentPoly, k: u32| (0..k).fold(LaurentPoly::one(), |acc, _| acc * x);
    for n in 1..=8u32 {
        let x = Fraction::new(1, n as u64).unwrap();
        let scale = LaurentPoly::monomial(2, -1)
            * LaurentPoly::monomial(-4 * (n as i32 - 1), if (n - 1) % 2 == 0 { 1 } else { -1 });
        let tail: LaurentPoly =
            (0..n).map(|k| pow(&m4, k)).sum::<LaurentPoly>() * LaurentPoly::a_pow(2);
        let expected = BracketVector::new(scale.clone(), &scale * &tail);
        assert_eq!(phi_recursive(x), expected, "1/{n}");
        let tri = build_triangle(x).unwrap();
        assert_eq!((tri.r(), tri.l()), (n as usize, 1));
        let paths = tri.descending_paths(DEFAULT_PATH_CAP).unwrap();
        let inf: Vec<_> = paths
            .iter()
            .filter(|g| g.terminal == Terminal::Infinity)
            .collect();
        let mut zero_wl: Vec<usize> = paths
            .iter()
            .filter(|g| g.terminal == Terminal::Zero)
            .map(|g| g.w_l)
            .collect();
        zero_wl.sort_unstable();
        assert_eq!(inf.len(), 1);
        assert_eq!(inf[0].w_r, 0);
        assert_eq!(zero_wl, (0..n as usize).collect::<Vec<_>>(), "1/{n}");
    }
}

#[test]
fn seven_fourths() {
    let tri = build_triangle(f("7/4")).unwrap();
    assert_eq!((tri.r(), tri.l()), (2, 4));
    let paths = tri.descending_paths(DEFAULT_PATH_CAP).unwrap();
    assert!(paths.iter().any(|g| (g.w_r, g.w_l) == (4, 1)));
    for g in &paths {
        assert_eq!(g.w_r + g.w_l, tri.size(), "weights split the triangles");
    }
    assert_eq!(
        phi_direct(f("7/4"), DEFAULT_PATH_CAP).unwrap(),
        phi_recursive(f("7/4"))
    );
}

#[test]
fn one_over_one_is_a_single_triangle() {
    let tri = build_triangle(Fraction::ONE).unwrap();
    assert_eq!(tri.size(), 1);
    assert_eq!(tri.fundamental_triangles[0].mediant, Fraction::ONE);
}

#[test]
fn direct_matches_recursive_up_to_40() {
    for x in positive_fractions(40) {
        check_phi_oracle(x, DEFAULT_PATH_CAP, false).unwrap();
    }
}

#[test]
fn path_cap_errors() {
    assert!(matches!(
        phi_direct(f("13/21"), 5),
        Err(YamadaError::PathCapExceeded { .. })
    ));
    assert!(matches!(
        build_triangle(Fraction::ZERO),
        Err(YamadaError::Domain(_))
    ));
}

#[test]
fn trace_form_matches_v() {
    for x in positive_fractions(100) {
        assert_eq!(v_phi(x), tr_map(&phi_tilde(x)), "{x}");
    }
}

/// `φ([l; m, n]) = -A^4 φ([l; m, n-1]) - A^-4 φ([l; m])`.
#[test]
fn stepping_stone_identity() {
    let m4 = LaurentPoly::monomial(4, -1);
    let m4i = LaurentPoly::monomial(-4, -1);
    for l in 0..=5u64 {
        for m in 1..=5u64 {
            for n in 2..=5u64 {
                let x = evaluate(&[l, m, n]).unwrap();
                let y = evaluate(&[l, m, n - 1]).unwrap();
                let z = evaluate(&[l, m]).unwrap();
                let lhs = phi_recursive(x);
                let rhs = phi_recursive(y)
                    .scale(&m4)
                    .add(&phi_recursive(z).scale(&m4i));
                assert_eq!(lhs, rhs, "[{l}; {m}, {n}]");
                let (a, b) = parents(x).unwrap();
                assert!(
                    (a, b) == (y, z) || (a, b) == (z, y),
                    "[{l}; {m}, {n}] parents"
                );
            }
        }
    }
}

/// `φ(p/(pn+1)) = (-A^3)^(p-n) <T(p/(pn+1))>`.
#[test]
fn exponent_of_p_over_pn_plus_one() {
    for pp in 1..=6u64 {
        for n in 1..=6u64 {
            let x = Fraction::new(pp, pp * n + 1).unwrap();
            let e = normalization_exponent(&continued_fraction_even(x).unwrap());
            assert_eq!(e, pp as i64 - n as i64, "{x}");
            let t = tangle_of_fraction(x).unwrap();
            assert_eq!(phi_recursive(x), t.scale(&LaurentPoly::minus_a3_pow(e)));
        }
    }
}

#[test]
fn normalization_at_the_ends() {
    assert_eq!(
        bracket_via_phi(Fraction::ZERO).unwrap(),
        BracketVector::zero_tangle()
    );
    assert_eq!(
        bracket_via_phi(Fraction::INFINITY).unwrap(),
        BracketVector::infinity_tangle()
    );
}

#[test]
fn tables_are_independent() {
    let mut a = PhiTable::phi();
    let x = f("13/29");
    let v = a.get(x);
    assert!(a.memo_len() > 0);
    assert_eq!(PhiTable::phi().get(x), v);
    assert_ne!(PhiTable::phi().with_flipped_sign().get(x), v);
}

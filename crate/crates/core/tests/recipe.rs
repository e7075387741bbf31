use frieze_bracket::frieze::Frieze;
use frieze_bracket::recipe::{
    bracket_num, bracket_via_paths, denominator_link_bracket, extract_diamond, fold_triangle,
    reduce_chain, PathEnd, RecipeError, Sign, DEFAULT_PATH_CAP,
};
use frieze_bracket::tangle::{denominator_closure, tangle_of_fraction};
use frieze_bracket::verify::{check_recipe, unit_fractions};
use frieze_bracket::yamada::v_phi;
use frieze_bracket::{fraction_of, Fraction, LRWord, LaurentPoly};
use proptest::prelude::*;

fn w(s: &str) -> LRWord {
    s.parse().unwrap()
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn example_frieze() {
    let f = Frieze::from_word(&w("RL^2RL")).unwrap();
    let d = extract_diamond(&f).unwrap();
    assert_eq!((d.m, d.s, d.u, d.t, d.v), (19, 7, 12, 8, 11));
    let t = fold_triangle(&f).unwrap();
    assert_eq!(t.floor, vec![19, 8, 5, 2, 1]);
    let paths = t.paths(DEFAULT_PATH_CAP).unwrap();
    let g = paths
        .iter()
        .find(|g| g.values == [19, 8, 5, 3, 2, 1] && g.end == PathEnd::Ceiling)
        .unwrap();
    assert_eq!(
        g.signs,
        [
            Sign::Minus,
            Sign::Minus,
            Sign::Plus,
            Sign::Minus,
            Sign::Plus
        ]
    );
    assert_eq!(g.monomial(), p("-A^-4"));
    assert_eq!(
        bracket_via_paths(&f, DEFAULT_PATH_CAP).unwrap(),
        p("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16")
    );
    assert_eq!(
        bracket_num(&f, DEFAULT_PATH_CAP).unwrap(),
        p("1-A^-4+2A^-8-2A^-12+A^-16")
    );
}

#[test]
fn maxima() {
    let m = |s: &str| {
        extract_diamond(&Frieze::from_word(&w(s)).unwrap())
            .unwrap()
            .m
    };
    assert_eq!(m("L^2R^2L"), 17);
    assert_eq!(m("-"), 2);
    let t = fold_triangle(&Frieze::from_word(&LRWord::empty()).unwrap()).unwrap();
    assert_eq!(
        (t.apex, t.floor.as_slice(), t.ceiling.as_slice()),
        (2, &[2, 1][..], &[2, 1][..])
    );
}

#[test]
fn denominator_link_example() {
    let d = denominator_link_bracket("7/19".parse().unwrap(), DEFAULT_PATH_CAP).unwrap();
    assert_eq!(d, p("A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13"));
    let half = denominator_link_bracket(Fraction::HALF, DEFAULT_PATH_CAP).unwrap();
    assert_eq!(
        half,
        denominator_closure(&tangle_of_fraction(Fraction::HALF).unwrap())
    );
}

#[test]
fn three_pipelines_up_to_fifty() {
    for x in unit_fractions(50) {
        check_recipe(x, DEFAULT_PATH_CAP).unwrap();
    }
}

#[test]
fn recovery_ratio() {
    for x in unit_fractions(40) {
        let f = Frieze::from_word(&frieze_bracket::word_of(x).unwrap()).unwrap();
        let num = bracket_num(&f, DEFAULT_PATH_CAP)
            .unwrap()
            .eval_at_a4_minus1()
            .unwrap();
        let all = bracket_via_paths(&f, DEFAULT_PATH_CAP)
            .unwrap()
            .eval_at_a4_minus1()
            .unwrap();
        assert_eq!(Fraction::new(num as u64, all as u64).unwrap(), x);
    }
}

#[test]
fn deletion_chain() {
    let got: Vec<(String, String)> = reduce_chain(&w("RL^2RL"))
        .unwrap()
        .into_iter()
        .map(|s| (s.word.power_notation(), s.fraction.to_string()))
        .collect();
    let want = [
        ("L^2RL", "4/11"),
        ("LRL", "3/8"),
        ("RL", "2/5"),
        ("L", "1/3"),
        ("-", "1/2"),
    ];
    assert_eq!(got, want.map(|(a, b)| (a.to_string(), b.to_string())));
    assert!(reduce_chain(&LRWord::empty()).unwrap().is_empty());
}

#[test]
fn cap_and_non_zigzag_errors() {
    let f = Frieze::from_word(&w("RL^2RL")).unwrap();
    assert_eq!(
        bracket_via_paths(&f, 2),
        Err(RecipeError::PathCapExceeded { cap: 2 })
    );
    let g = Frieze::from_quiddity(&[1, 4, 1, 2, 4, 1, 2, 3]).unwrap();
    assert!(fold_triangle(&g).is_err());
}

proptest! {
    #[test]
    fn fold_matches_v_phi(word in "[LR]{0,10}") {
        let u: LRWord = if word.is_empty() { LRWord::empty() } else { word.parse().unwrap() };
        let f = Frieze::from_word(&u).unwrap();
        let t = fold_triangle(&f).unwrap();
        prop_assert_eq!(t.apex, f.max_entry());
        prop_assert_eq!(bracket_via_paths(&f, DEFAULT_PATH_CAP).unwrap(), v_phi(fraction_of(&u)));
        for step in reduce_chain(&u).unwrap() {
            prop_assert_eq!(fraction_of(&step.word), step.fraction);
        }
    }
}

use frieze_bracket::lrword::{i_word, ir_word, join, r_word, Letter};
use frieze_bracket::rational::{continued_fraction_even, evaluate};
use frieze_bracket::verify::{check_word_identities, unit_fractions};
use frieze_bracket::{fraction_of, word_of, Fraction, LRWord, WordError};
use proptest::prelude::*;

fn w(s: &str) -> LRWord {
    s.parse().unwrap()
}

fn f(s: &str) -> Fraction {
    s.parse().unwrap()
}

#[test]
fn example_word_table() {
    for (x, word) in [
        ("1/5", "LLL"),
        ("2/7", "RLL"),
        ("3/8", "LRL"),
        ("3/7", "RRL"),
        ("1/2", "-"),
        ("5/12", "LR^2L"),
    ] {
        assert_eq!(word_of(f(x)).unwrap(), w(word), "{x}");
        assert_eq!(fraction_of(&w(word)), f(x), "{word}");
    }
}

#[test]
fn deletion_chain_labels() {
    for (word, x) in [
        ("RL^2RL", "7/19"),
        ("L^2RL", "4/11"),
        ("LRL", "3/8"),
        ("RL", "2/5"),
        ("L", "1/3"),
    ] {
        assert_eq!(fraction_of(&w(word)), f(x), "{word}");
    }
}

#[test]
fn operation_tables() {
    let row = |word: &str| {
        let u = w(word);
        [u.clone(), i_word(&u), r_word(&u), ir_word(&u)]
            .map(|v| (v.to_string(), fraction_of(&v).to_string()))
    };
    let s = |a: &str, b: &str| (a.to_string(), b.to_string());
    assert_eq!(
        row("LLLR"),
        [
            s("LLLR", "5/9"),
            s("RRRL", "4/9"),
            s("RLLL", "2/9"),
            s("LRRR", "7/9")
        ]
    );
    assert_eq!(
        row("LLRR"),
        [
            s("LLRR", "7/10"),
            s("RRLL", "3/10"),
            s("RRLL", "3/10"),
            s("LLRR", "7/10")
        ]
    );
}

#[test]
fn join_examples() {
    assert_eq!(join(&w("-"), &w("L^2R")).unwrap(), w("L^3R"));
    assert_eq!(join(&w("RL"), &w("R^2L")).unwrap(), w("LR^2L"));
    assert_eq!(join(&w("L"), &w("-")).unwrap(), w("RL"));
    assert!(matches!(
        join(&w("L"), &w("R")),
        Err(WordError::NotNeighbors { .. })
    ));
}

#[test]
fn bijection_with_fractions() {
    for x in unit_fractions(200) {
        assert_eq!(fraction_of(&word_of(x).unwrap()), x);
    }
    for word in LRWord::all_up_to(14) {
        assert_eq!(word_of(fraction_of(&word)).unwrap(), word);
    }
}

/// `i`, `r`, `ir`, joins over parents and the letter-append rule, exhaustively.
#[test]
fn word_identities_exhaustive() {
    for word in LRWord::all_up_to(12) {
        check_word_identities(&word, word.len() <= 10).unwrap();
    }
}

/// Farey neighbours never have words of equal length, so the equal-length
/// branch of `join` is unreachable from neighbour pairs.
#[test]
fn neighbour_words_differ_in_length() {
    for word in LRWord::all_up_to(12).filter(|u| !u.is_empty()) {
        let (a, b) = frieze_bracket::rational::parents(fraction_of(&word)).unwrap();
        if a.in_unit_interval() && b.in_unit_interval() {
            assert_ne!(word_of(a).unwrap().len(), word_of(b).unwrap().len());
        }
    }
}

proptest! {
    /// Extending an expansion by one more quotient lengthens the word.
    #[test]
    fn longer_expansions_give_longer_words(mut a in prop::collection::vec(1u64..6, 2..7)) {
        a.insert(0, 0);
        if a[1] == 1 {
            a[1] = 2;
        }
        let longer = evaluate(&a).unwrap();
        let shorter = evaluate(&a[..a.len() - 1]).unwrap();
        prop_assume!(shorter.in_unit_interval());
        prop_assert!(word_of(longer).unwrap().len() > word_of(shorter).unwrap().len());
    }

    #[test]
    fn letter_counts_match(word in "[LR]{0,20}") {
        let u: LRWord = if word.is_empty() { LRWord::empty() } else { word.parse().unwrap() };
        prop_assert_eq!(u.count_l() + u.count_r(), u.len());
        prop_assert_eq!(i_word(&u).count_l(), u.count_r());
        prop_assert_eq!(r_word(&u).letters().first().copied(), u.letters().last().copied());
        let text = u.power_notation();
        prop_assert_eq!(text.parse::<LRWord>().unwrap(), u.clone());
        prop_assert_eq!(u.append(Letter::L).len(), u.len() + 1);
    }

    #[test]
    fn even_expansion_of_word_fraction_exists(word in "[LR]{0,16}") {
        let u: LRWord = if word.is_empty() { LRWord::empty() } else { word.parse().unwrap() };
        let cf = continued_fraction_even(fraction_of(&u)).unwrap();
        prop_assert!(cf.is_even());
    }
}

#[test]
fn outside_the_unit_interval() {
    assert!(word_of(Fraction::ONE).is_err());
    assert!(word_of(Fraction::ZERO).is_err());
    assert!(word_of(f("3/2")).is_err());
}

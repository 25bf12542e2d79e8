mod common;

use common::{inversions, permutation, permutation_bruhat_leq, CayleyOracle};
use proptest::prelude::*;
use subword_complex::coxeter::{CoxeterSystem, Word};

fn system(t: &str) -> CoxeterSystem {
    CoxeterSystem::from_type_str(t).unwrap()
}

fn word(letters: &[usize]) -> Word {
    Word::new(letters.to_vec())
}

fn words(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=max_len)
}

#[test]
fn group_orders_and_longest_elements() {
    for (t, order, l0) in [
        ("A1", 2, 1),
        ("A2", 6, 3),
        ("A3", 24, 6),
        ("A4", 120, 10),
        ("B2", 8, 4),
        ("B3", 48, 9),
        ("I2(5)", 10, 5),
        ("I2(7)", 14, 7),
        ("H3", 120, 15),
        ("D4", 192, 12),
    ] {
        let w = system(t);
        let oracle = CayleyOracle::new(w.coxeter_matrix());
        assert_eq!(oracle.order(), order, "{t}");
        assert_eq!(oracle.max_length(), l0, "{t}");
        assert_eq!(w.length(&w.longest_element()), l0, "{t}");
        assert_eq!(w.positive_root_count(), l0, "{t}");
    }
}

#[test]
fn psi_is_conjugation_by_the_longest_element() {
    for t in ["A3", "A4", "B3", "D5", "I2(5)", "H3", "E6"] {
        let w = system(t);
        let w0 = w.longest_element();
        for s in 0..w.rank() {
            let conj = w0.inverse().mul(w.generator(s)).mul(&w0);
            assert_eq!(&conj, w.generator(w.psi(s)), "{t} s{}", s + 1);
        }
    }
    let a4 = system("A4");
    assert_eq!(
        (0..4).map(|s| a4.psi(s)).collect::<Vec<_>>(),
        vec![3, 2, 1, 0]
    );
}

proptest! {
    #[test]
    fn type_a_lengths_are_inversion_counts(letters in words(3, 10)) {
        let w = system("A3");
        let g = w.evaluate(&word(&letters));
        let p = permutation(3, &letters);
        prop_assert_eq!(w.length(&g), inversions(&p));
        prop_assert_eq!(w.is_reduced(&word(&letters)), letters.len() == inversions(&p));
    }

    #[test]
    fn type_a_equality_matches_permutations(a in words(3, 8), b in words(3, 8)) {
        let w = system("A3");
        let same = w.evaluate(&word(&a)) == w.evaluate(&word(&b));
        prop_assert_eq!(same, permutation(3, &a) == permutation(3, &b));
    }

    #[test]
    fn type_a_bruhat_matches_rank_criterion(a in words(3, 8), b in words(3, 8)) {
        let w = system("A3");
        let (u, v) = (w.evaluate(&word(&a)), w.evaluate(&word(&b)));
        prop_assert_eq!(
            w.bruhat_leq(&u, &v),
            permutation_bruhat_leq(&permutation(3, &a), &permutation(3, &b))
        );
    }

    #[test]
    fn descents_shorten(letters in words(3, 8), s in 0usize..3) {
        let w = system("A3");
        let g = w.evaluate(&word(&letters));
        let right = g.mul(w.generator(s));
        let left = w.generator(s).mul(&g);
        prop_assert_eq!(w.is_right_descent(&g, s), w.length(&right) < w.length(&g));
        prop_assert_eq!(w.is_left_descent(&g, s), w.length(&left) < w.length(&g));
    }

    #[test]
    fn reduced_words_evaluate_back(letters in words(4, 10)) {
        let w = system("B4");
        let g = w.evaluate(&word(&letters));
        let r = w.reduced_word(&g);
        prop_assert_eq!(r.len(), w.length(&g));
        prop_assert_eq!(w.evaluate(&r), g);
    }
}

fn check_against_cayley(t: &str, a: &[usize], b: &[usize]) -> Result<(), TestCaseError> {
    let w = system(t);
    let oracle = CayleyOracle::new(w.coxeter_matrix());
    prop_assert_eq!(w.length(&w.evaluate(&word(a))), oracle.word_length(a));
    let same = w.evaluate(&word(a)) == w.evaluate(&word(b));
    prop_assert_eq!(same, oracle.product(a) == oracle.product(b));
    let (u, v) = (w.evaluate(&word(a)), w.evaluate(&word(b)));
    prop_assert_eq!(w.bruhat_leq(&u, &v), oracle.bruhat_leq(a, b));
    // The Demazure product is the longest subword product.
    let dem = w.demazure_product(&word(a));
    let dem_word = w.reduced_word(&dem);
    prop_assert_eq!(oracle.product(dem_word.letters()), oracle.demazure(a));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn b3_matches_geometric_representation(a in words(3, 8), b in words(3, 8)) {
        check_against_cayley("B3", &a, &b)?;
    }

    #[test]
    fn a3_matches_geometric_representation(a in words(3, 8), b in words(3, 8)) {
        check_against_cayley("A3", &a, &b)?;
    }

    #[test]
    fn dihedral_matches_geometric_representation(a in words(2, 9), b in words(2, 9)) {
        check_against_cayley("I2(5)", &a, &b)?;
        check_against_cayley("B2", &a, &b)?;
    }

    #[test]
    fn h3_matches_geometric_representation(a in words(3, 7), b in words(3, 7)) {
        check_against_cayley("H3", &a, &b)?;
    }

    #[test]
    fn demazure_dominates_the_word(letters in words(3, 10)) {
        let w = system("A3");
        let q = word(&letters);
        let dem = w.demazure_product(&q);
        prop_assert!(w.bruhat_leq(&w.evaluate(&q), &dem));
        // A reduced word is its own Demazure product.
        let r = w.reduced_word(&dem);
        prop_assert_eq!(w.demazure_product(&r), dem);
    }
}

#[test]
fn bruhat_interval_sizes() {
    // [e, w0] is the whole group.
    for t in ["A3", "B3", "I2(6)"] {
        let w = system(t);
        let oracle = CayleyOracle::new(w.coxeter_matrix());
        let w0 = w.reduced_word(&w.longest_element());
        assert_eq!(
            oracle.subword_products(w0.letters()).len(),
            oracle.order(),
            "{t}"
        );
    }
}

use num_bigint::BigInt;
use proptest::prelude::*;
use quiddity_core::enumeration::{brute_force_enumerate, Budget, Problem};
use quiddity_core::surgery::{apply_type1, apply_type2, inverse_type1, inverse_type2};
use quiddity_core::{
    classify, continuant, product_from_continuants, reduce, rotundus, word_product, SolutionClass, Word,
};

fn word(max_len: usize, max_entry: u64) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_entry, 1..=max_len).prop_map(|v| Word::new(v).unwrap())
}

/// Tridiagonal determinant with `x` on the diagonal and `1` beside it, by
/// expansion over all permutations.
fn leibniz(x: &[i64]) -> i64 {
    let n = x.len();
    let entry = |i: usize, j: usize| match i.abs_diff(j) {
        0 => x[i],
        1 => 1,
        _ => 0,
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0;
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        total += sign * (0..n).map(|i| entry(i, p[i])).product::<i64>();
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

proptest! {
    #[test]
    fn continuant_products_agree(w in word(8, 5)) {
        if w.len() >= 2 {
            prop_assert_eq!(product_from_continuants(&w).unwrap(), word_product(&w));
        }
    }

    #[test]
    fn products_are_unimodular(w in word(12, 9)) {
        prop_assert_eq!(word_product(&w).det(), BigInt::from(1));
    }

    #[test]
    fn rotundus_is_cyclic(w in word(10, 9), k in 0usize..10) {
        prop_assert_eq!(rotundus(&w.rotate(k)), rotundus(&w));
    }

    #[test]
    fn rotundus_closed_forms(a in prop::array::uniform4(1i64..50)) {
        let [a1, a2, a3, a4] = a;
        let three = Word::new(vec![a1 as u64, a2 as u64, a3 as u64]).unwrap();
        prop_assert_eq!(rotundus(&three), BigInt::from(a1 * a2 * a3 - a1 - a2 - a3));
        let four = Word::new(a.iter().map(|&x| x as u64).collect()).unwrap();
        let r4 = a1 * a2 * a3 * a4 - a1 * a2 - a2 * a3 - a3 * a4 - a4 * a1 + 2;
        prop_assert_eq!(rotundus(&four), BigInt::from(r4));
    }

    #[test]
    fn continuant_matches_determinant(x in prop::collection::vec(-6i64..7, 0..=6)) {
        prop_assert_eq!(continuant(x.iter().copied()), BigInt::from(leibniz(&x)));
    }

    #[test]
    fn type1_keeps_product_inside(w in word(8, 6), i in 0usize..8) {
        let i = i % w.len();
        let grown = apply_type1(&w, i);
        if i + 1 < w.len() {
            prop_assert_eq!(word_product(&grown), word_product(&w));
        }
        // Gluing across the end of the word conjugates the product.
        prop_assert_eq!(rotundus(&grown), rotundus(&w));
        if w.len() >= 2 {
            prop_assert_eq!(inverse_type1(&grown, i + 1).unwrap(), w);
        }
    }

    #[test]
    fn type2_negates_product(w in word(8, 6), i in 0usize..8, x in 1u64..8) {
        let i = i % w.len();
        let a = w.as_slice()[i];
        let x = 1 + x % a;
        let grown = apply_type2(&w, i, (x, a + 1 - x)).unwrap();
        prop_assert_eq!(word_product(&grown), -&word_product(&w));
        if w.len() >= 2 {
            prop_assert_eq!(inverse_type2(&grown, i + 1).unwrap(), w);
        }
    }

    #[test]
    fn classification_ignores_rotation(w in word(9, 4), k in 0usize..9) {
        prop_assert_eq!(classify(&w.rotate(k)).0, classify(&w).0);
    }
}

#[test]
fn solution_facts() {
    let budget = Budget::default();
    for problem in Problem::ALL {
        let max_n = if problem == Problem::III { 8 } else { 10 };
        for n in problem.min_length()..=max_n {
            for w in brute_force_enumerate(problem, n, &budget).unwrap().words {
                assert!(n < 3 || w.as_slice().contains(&1), "{w} has no 1");
                assert!(w.max_entry() <= problem.entry_bound(n), "{w} exceeds the entry bound");
                let doubled = classify(&w.doubled()).0;
                match problem {
                    Problem::II => assert_eq!(doubled, SolutionClass::ProblemI, "{w}"),
                    Problem::III => assert_eq!(doubled, SolutionClass::ProblemII, "{w}"),
                    Problem::I => assert_eq!(doubled, SolutionClass::ProblemI, "{w}"),
                }
                let cert = reduce(&w).unwrap();
                assert_eq!(cert.replay().unwrap(), w);
                assert_eq!(cert.implied_class(), problem.solution_class());
            }
        }
    }
}

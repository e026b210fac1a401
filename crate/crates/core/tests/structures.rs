use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use quiddity_core::dissection::{enumerate_dissections, for_each_dissection, Dissection};
use quiddity_core::enumeration::{brute_force_enumerate, generative_enumerate, Budget, Problem};
use quiddity_core::psl2::{element_index, element_quiddity, forward_product, reduced_decomposition};
use quiddity_core::sturm::{
    broken_line, check_tame, default_rows, frieze, is_totally_positive, iterate, rotation_index, wronskian,
};
use quiddity_core::surgery::{apply_type1, apply_type2, is_reduced};
use quiddity_core::{classify, reduce, word_product, Mat2, SolutionClass, Word};

fn solutions(problem: Problem, n: usize) -> Vec<Word> {
    brute_force_enumerate(problem, n, &Budget::default()).unwrap().words
}

#[test]
fn generated_sets_are_sound_and_closed() {
    let budget = Budget::default();
    for problem in Problem::ALL {
        for n in problem.min_length()..=9 {
            let set = generative_enumerate(problem, n, &budget).unwrap();
            let members: BTreeSet<&Word> = set.words.iter().collect();
            for w in &set.words {
                assert_eq!(classify(w).0, problem.solution_class(), "{w}");
                assert!(members.contains(&w.rotate(1)), "{w} rotated");
                if problem == Problem::III && n <= 6 {
                    assert!(members.contains(&w.reversed()), "{w} reversed");
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let budget = Budget::default();
    for problem in Problem::ALL {
        let first = brute_force_enumerate(problem, 8, &budget).unwrap();
        for _ in 0..3 {
            assert_eq!(brute_force_enumerate(problem, 8, &budget).unwrap(), first);
        }
        assert_eq!(
            generative_enumerate(problem, 8, &budget).unwrap(),
            generative_enumerate(problem, 8, &budget).unwrap()
        );
    }
}

#[test]
fn certificates_count_faces() {
    for problem in [Problem::I, Problem::II] {
        for n in 3..=10 {
            for w in solutions(problem, n) {
                let cert = reduce(&w).unwrap();
                let d = Dissection::from_certificate(&cert).unwrap();
                let profile = d.profile();
                assert_eq!(cert.s, profile.face_sizes.len() - 1, "{w}");
                assert_eq!(cert.r, profile.weighted_sum(), "{w}");
                let faces: usize = profile.face_sizes.iter().sum();
                assert_eq!(w.sum() as usize, faces);
                assert_eq!(faces, 3 * (cert.s + cert.r + 1));
            }
        }
    }
}

#[test]
fn triangulations_give_positive_solutions() {
    for n in 3..=10 {
        for_each_dissection(n, |diags| {
            if diags.len() != n - 3 {
                return;
            }
            let q = Dissection::new(n, diags.iter().copied()).unwrap().quiddity().unwrap();
            assert_eq!(q.sum() as usize, 3 * n - 6);
            assert_eq!(classify(&q).0, SolutionClass::ProblemII);
            assert_eq!(reduce(&q).unwrap().r, 0);
        });
    }
}

#[test]
fn dissection_counts_match_diagonal_search() {
    // Independent count: all non-crossing diagonal subsets, filtered by face sizes.
    for n in 3..=8 {
        let all: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == n - 1)).collect();
        let mut count = 0;
        for mask in 0u32..(1 << all.len()) {
            let chosen = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &d)| d);
            if let Ok(d) = Dissection::new(n, chosen) {
                if d.is_3d() {
                    count += 1;
                }
            }
        }
        assert_eq!(enumerate_dissections(n, &Budget::default()).unwrap().len(), count, "n = {n}");
    }
}

#[test]
fn sequences_are_periodic() {
    for (problem, sign) in [(Problem::I, 1), (Problem::II, -1)] {
        for n in 3..=8 {
            for w in solutions(problem, n) {
                for (v0, v1) in [(1, 0), (0, 1), (3, -2)] {
                    let v = iterate(&w, v0, v1, 2 * n + 2).values;
                    for i in 0..=n + 2 {
                        assert_eq!(v[i + n], &v[i] * sign, "{w}");
                    }
                }
            }
        }
    }
}

#[test]
fn positivity_index_and_certificate_agree() {
    for n in 3..=8 {
        for w in solutions(Problem::II, n) {
            let tp = is_totally_positive(&w).unwrap();
            let half = rotation_index(&w).unwrap().twice == 1;
            let r0 = reduce(&w).unwrap().r == 0;
            assert!(tp == half && half == r0, "{w}: {tp} {half} {r0}");
        }
    }
}

#[test]
fn surgeries_shift_the_index() {
    for problem in [Problem::I, Problem::II] {
        for n in 3..=7 {
            for w in solutions(problem, n) {
                let index = rotation_index(&w).unwrap().twice;
                for i in 0..n {
                    assert_eq!(rotation_index(&apply_type1(&w, i)).unwrap().twice, index, "{w} type 1 at {i}");
                    let a = w.as_slice()[i];
                    for x in 1..=a {
                        let grown = apply_type2(&w, i, (x, a + 1 - x)).unwrap();
                        assert_eq!(rotation_index(&grown).unwrap().twice, index + 1, "{w} type 2 at {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn friezes_of_solutions_are_tame() {
    for problem in [Problem::II, Problem::III] {
        let max_n = if problem == Problem::II { 9 } else { 5 };
        for n in problem.min_length()..=max_n {
            for w in solutions(problem, n) {
                let f = frieze(&w, default_rows(&w).unwrap()).unwrap();
                assert!(f.satisfies_diamond_rule(), "{w}");
                assert!(check_tame(&f), "{w}");
                if problem == Problem::II {
                    assert!(f.rows[n - 2].iter().all(|x| *x == BigInt::from(1)), "{w}");
                    let next = frieze(&w, n).unwrap();
                    assert!(next.rows[n - 1].iter().all(Zero::is_zero), "{w}");
                }
            }
        }
    }
}

#[test]
fn trace_zero_friezes_have_glide_symmetry() {
    for n in 2..=6 {
        for w in solutions(Problem::III, n) {
            let f = frieze(&w, default_rows(&w).unwrap()).unwrap();
            assert!(quiddity_core::sturm::check_glide(&f), "{w}");
        }
    }
}

fn generator_word() -> impl Strategy<Value = Vec<(bool, i64)>> {
    prop::collection::vec((any::<bool>(), -6i64..7), 1..12)
}

fn element(gens: &[(bool, i64)]) -> Mat2 {
    gens.iter().fold(Mat2::identity(), |acc, &(s, k)| {
        let t = if k >= 0 {
            (0..k).fold(Mat2::identity(), |m, _| &m * &Mat2::t())
        } else {
            let inv = Mat2::t().inverse().unwrap();
            (0..-k).fold(Mat2::identity(), |m, _| &m * &inv)
        };
        let step = if s { &t * &Mat2::s() } else { t };
        &acc * &step
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decompositions_reproduce_elements(gens in generator_word()) {
        let a = element(&gens);
        let w = reduced_decomposition(&a).unwrap();
        prop_assert!(forward_product(&w).eq_up_to_sign(&a));
        prop_assert!(is_reduced(&w));
        let q = element_quiddity(&a).unwrap();
        let class = classify(&q.combined).0;
        prop_assert!(matches!(class, SolutionClass::ProblemI | SolutionClass::ProblemII));
        prop_assert_eq!(q.sign_defect, class == SolutionClass::ProblemII);
        let r = reduce(&q.combined).unwrap().r as i64;
        prop_assert_eq!(element_index(&a).unwrap().twice, r + 1);
    }
}

proptest! {
    #[test]
    fn wronskian_is_constant(w in prop::collection::vec(1u64..9, 1..10), doubled in any::<bool>()) {
        let w = Word::new(w).unwrap();
        let w = if doubled { w.doubled() } else { w };
        let b = broken_line(&w, 3 * w.len());
        prop_assert_eq!(wronskian(&b).unwrap(), BigInt::from(-1));
        prop_assert!(b.points.iter().all(|(x, y)| !(x.is_zero() && y.is_zero())));
    }
}

#[test]
fn reduced_words_decompose_to_themselves() {
    let mut stack: Vec<Vec<u64>> = (1..=4).map(|x| vec![x]).collect();
    let mut checked = 0;
    while let Some(v) = stack.pop() {
        let w = Word::new(v.clone()).unwrap();
        if !is_reduced(&w) {
            continue;
        }
        let a = word_product(&w.reversed());
        assert_eq!(reduced_decomposition(&a).unwrap(), w);
        checked += 1;
        if v.len() < 7 {
            for x in 1..=4 {
                let mut next = v.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn element_quiddities_are_deterministic() {
    let mut seen = BTreeMap::new();
    for a in [Mat2::s(), Mat2::t(), Mat2::new(2, 1, 1, 1)] {
        seen.insert(a.to_string(), element_quiddity(&a).unwrap().combined);
    }
    for a in [Mat2::s(), Mat2::t(), Mat2::new(2, 1, 1, 1)] {
        assert_eq!(seen[&a.to_string()], element_quiddity(&a).unwrap().combined);
    }
}

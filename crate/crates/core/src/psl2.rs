//! Reduced words for elements of the modular group.
//!
//! Here a word is read left to right, `E(a_1) E(a_2) ⋯ E(a_n)`, which is
//! `word_product` of the reversed word. Under this reading concatenation is
//! matrix multiplication, `T^q = -(q+1, 1, 1)` for `q >= 1`,
//! `T^{-q} = -(1, 1, 2, …, 2, 1)` with `q` twos, and `S = (1, 1, 2, 1, 1)` up to sign.
//! Being a solution (and of which problem) does not depend on the reading
//! direction, since reversing a word conjugates and transposes its product.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dissection::{dissections_with_quiddity, for_each_dissection, Dissection};
use crate::enumeration::{brute_force_enumerate, Budget, Problem};
use crate::error::{Error, Result};
use crate::fast::SmallMat;
use crate::matrix::{word_product, Mat2, Word};
use crate::sturm::{rotation_index, HalfInteger};
use crate::surgery::{classify, is_reduced, reduce, SolutionClass};

/// `E(a_1) ⋯ E(a_n)`.
pub fn forward_product(w: &Word) -> Mat2 {
    word_product(&w.reversed())
}

/// Appends entries one at a time, rewriting the tail so that the buffer never
/// contains `(a, 1, 1, b)` or `(a, 1, b)` with `a, b > 1`. Both rewrites keep
/// the forward product up to sign: `E(a)E(1)E(1)E(b) = -E(a+b-1)` and
/// `E(a)E(1)E(b) = -E(a-1)E(b-1)`.
#[derive(Default)]
struct Reducer {
    buf: Vec<u64>,
}

impl Reducer {
    fn push(&mut self, x: u64) {
        self.buf.push(x);
        loop {
            let n = self.buf.len();
            let t = &self.buf;
            if n >= 4 && t[n - 3] == 1 && t[n - 2] == 1 {
                let merged = t[n - 4] + t[n - 1] - 1;
                self.buf.truncate(n - 4);
                self.buf.push(merged);
            } else if n >= 3 && t[n - 3] > 1 && t[n - 2] == 1 && t[n - 1] > 1 {
                let (a, b) = (t[n - 3] - 1, t[n - 1] - 1);
                self.buf.truncate(n - 3);
                self.buf.extend([a, b]);
            } else {
                break;
            }
        }
    }

    fn extend(&mut self, xs: impl IntoIterator<Item = u64>) {
        xs.into_iter().for_each(|x| self.push(x));
    }

    fn push_t_power(&mut self, q: &BigInt) -> Result<()> {
        if q.is_positive() {
            let q = u64::try_from(q).map_err(|_| Error::Overflow)?;
            self.extend([q.checked_add(1).ok_or(Error::Overflow)?, 1, 1]);
        } else if q.is_negative() {
            let q = u64::try_from(-q).map_err(|_| Error::Overflow)?;
            self.extend([1, 1]);
            for _ in 0..q {
                self.push(2);
            }
            self.push(1);
        }
        Ok(())
    }
}

/// The reduced word whose forward product is `±A`.
///
/// Writes `A = ±T^{q_0} S T^{q_1} S ⋯ T^{q_k}` by Euclidean division on the
/// first column, substitutes the words for the generators and reduces while
/// concatenating. The identity class gets `(1, 1, 1)`.
pub fn reduced_decomposition(a: &Mat2) -> Result<Word> {
    if !a.det().is_one() {
        return Err(Error::Determinant);
    }
    let mut out = Reducer::default();
    let (mut p, mut q, mut r, mut s) = (a.a.clone(), a.b.clone(), a.c.clone(), a.d.clone());
    while !r.is_zero() {
        // A = T^k A' with |a'| < |c|, then A' = S (S^{-1} A').
        let k = p.div_floor(&r);
        p -= &k * &r;
        q -= &k * &s;
        out.push_t_power(&k)?;
        out.extend([1, 1, 2, 1, 1]);
        (p, q, r, s) = (r, s, -p, -q);
    }
    // Now p = s = ±1 and A = ±T^{q/p}.
    let k = if p.is_one() { q } else { -q };
    out.push_t_power(&k)?;
    let buf = if out.buf.is_empty() { vec![1, 1, 1] } else { out.buf };
    let w = Word::from_vec_unchecked(buf);
    debug_assert!(forward_product(&w).eq_up_to_sign(a));
    Ok(w)
}

/// The words of `A` and `A^{-1}` and their concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementQuiddity {
    pub left: Word,
    pub right: Word,
    pub combined: Word,
    /// True when the product of `combined` is `-Id` rather than `Id`.
    pub sign_defect: bool,
}

pub fn element_quiddity(a: &Mat2) -> Result<ElementQuiddity> {
    let left = reduced_decomposition(a)?;
    let right = reduced_decomposition(&a.inverse()?)?;
    let combined = left.concat(&right);
    let sign_defect = match classify(&combined).0 {
        SolutionClass::ProblemI => false,
        SolutionClass::ProblemII => true,
        _ => return Err(Error::NotASolution { stuck: combined }),
    };
    Ok(ElementQuiddity { left, right, combined, sign_defect })
}

pub fn element_dissection(a: &Mat2) -> Result<Dissection> {
    Dissection::from_certificate(&reduce(&element_quiddity(a)?.combined)?)
}

pub fn element_index(a: &Mat2) -> Result<HalfInteger> {
    rotation_index(&element_quiddity(a)?.combined)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeEntry {
    /// Sign-normalized representative.
    pub element: Mat2,
    pub reduced: Word,
    pub quiddity: Word,
    pub index: HalfInteger,
    pub dissections_found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub bound: usize,
    /// Ordered by quiddity length, then lexicographically by quiddity.
    pub entries: Vec<ProbeEntry>,
}

impl ProbeReport {
    /// Elements whose quiddity is realized by more than one dissection.
    pub fn multiple(&self) -> impl Iterator<Item = &ProbeEntry> {
        self.entries.iter().filter(|e| e.dissections_found != 1)
    }
}

/// Every element whose quiddity has length at most `bound`, with the number of
/// 3d-dissections realizing that quiddity.
///
/// An element quiddity is a solution `u ‖ v` of length `n` with `u` reduced and
/// `v` the reduced word of the inverse; so the elements are found by splitting
/// each enumerated solution of length `n <= bound` at every position.
pub fn conjecture_probe(bound: usize, budget: &Budget) -> Result<ProbeReport> {
    Budget::check(budget.dissections, "conjecture probe", bound)?;
    let mut entries = Vec::new();
    for n in 3..=bound {
        let mut realizations: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for_each_dissection(n, |diags| {
            let mut q = vec![1u64; n];
            for &(i, j) in diags {
                q[i] += 1;
                q[j] += 1;
            }
            *realizations.entry(q).or_insert(0) += 1;
        });
        let mut words = brute_force_enumerate(Problem::I, n, budget)?.words;
        words.extend(brute_force_enumerate(Problem::II, n, budget)?.words);
        words.sort();
        for c in words {
            for k in 1..n {
                let (u, v) = c.as_slice().split_at(k);
                let u = Word::from_slice(u);
                if !is_reduced(&u) {
                    continue;
                }
                let element = forward_product(&u);
                if reduced_decomposition(&element.inverse()?)?.as_slice() != v {
                    continue;
                }
                entries.push(ProbeEntry {
                    element: element.sign_normalized(),
                    reduced: u,
                    index: rotation_index(&c)?,
                    dissections_found: realizations.get(c.as_slice()).copied().unwrap_or(0),
                    quiddity: c.clone(),
                });
            }
        }
    }
    Ok(ProbeReport { bound, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub words_checked: usize,
    /// Pairs of distinct reduced words with the same product up to sign.
    pub collisions: Vec<(Word, Word)>,
}

impl SpotCheck {
    pub fn unique(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Groups all reduced words of length `<= max_length` with entries
/// `<= max_entry` by forward product up to sign.
pub fn uniqueness_spot_check(max_length: usize, max_entry: u64) -> Result<SpotCheck> {
    if max_length > 10 {
        return Err(Error::Budget { what: "uniqueness spot check", n: max_length, limit: 10 });
    }
    let mut seen: BTreeMap<(i128, i128, i128, i128), Word> = BTreeMap::new();
    let mut report = SpotCheck { words_checked: 0, collisions: Vec::new() };
    let mut prefix = Vec::new();
    spot_dfs(&mut prefix, max_length, max_entry, &mut seen, &mut report)?;
    Ok(report)
}

fn spot_dfs(
    prefix: &mut Vec<u64>,
    max_length: usize,
    max_entry: u64,
    seen: &mut BTreeMap<(i128, i128, i128, i128), Word>,
    report: &mut SpotCheck,
) -> Result<()> {
    if !prefix.is_empty() {
        let reversed: Vec<u64> = prefix.iter().rev().copied().collect();
        let m = SmallMat::product(&reversed).ok_or(Error::Overflow)?;
        let key = if (m.c, m.d) > (0, 0) || (m.c == 0 && m.d > 0) || (m.c == 0 && m.d == 0 && m.a > 0) {
            (m.a, m.b, m.c, m.d)
        } else {
            (-m.a, -m.b, -m.c, -m.d)
        };
        let word = Word::from_slice(prefix);
        report.words_checked += 1;
        if let Some(other) = seen.get(&key) {
            report.collisions.push((other.clone(), word));
        } else {
            seen.insert(key, word);
        }
    }
    if prefix.len() == max_length {
        return Ok(());
    }
    for x in 1..=max_entry {
        prefix.push(x);
        if is_reduced(&Word::from_vec_unchecked(prefix.clone())) {
            spot_dfs(prefix, max_length, max_entry, seen, report)?;
        }
        prefix.pop();
    }
    Ok(())
}

/// Every dissection realizing the quiddity of `a`.
pub fn element_dissections(a: &Mat2, budget: &Budget) -> Result<Vec<Dissection>> {
    dissections_with_quiddity(&element_quiddity(a)?.combined, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[u64]) -> Word {
        Word::from_slice(xs)
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a, b, c, d)
    }

    #[test]
    fn generator_words() {
        assert!(forward_product(&w(&[2, 1, 1])).eq_up_to_sign(&Mat2::t()));
        assert!(forward_product(&w(&[1, 1, 2, 1, 1])).eq_up_to_sign(&Mat2::s()));
        for q in 1..6u64 {
            let tq = (0..q).fold(Mat2::identity(), |acc, _| &acc * &Mat2::t());
            assert_eq!(forward_product(&w(&[q + 1, 1, 1])), -&tq);
            let mut neg = vec![1, 1];
            neg.extend(core::iter::repeat_n(2, q as usize));
            neg.push(1);
            assert_eq!(forward_product(&w(&neg)), -&tq.inverse().unwrap());
        }
    }

    #[test]
    fn decompositions() {
        assert_eq!(reduced_decomposition(&Mat2::s()).unwrap(), w(&[1, 1, 2, 1, 1]));
        assert_eq!(reduced_decomposition(&m(2, 1, 1, 1)).unwrap(), w(&[2, 2, 1, 1]));
        assert_eq!(reduced_decomposition(&Mat2::t().inverse().unwrap()).unwrap(), w(&[1, 1, 2, 1]));
        assert_eq!(reduced_decomposition(&m(5, 2, 2, 1)).unwrap(), w(&[3, 2, 2, 1, 1]));
        assert_eq!(reduced_decomposition(&m(1, -1, -1, 2)).unwrap(), w(&[1, 1, 3, 1]));
        assert_eq!(reduced_decomposition(&m(1, -2, -2, 5)).unwrap(), w(&[1, 1, 4, 2, 1]));
        assert_eq!(reduced_decomposition(&Mat2::identity()).unwrap(), w(&[1, 1, 1]));
        assert_eq!(reduced_decomposition(&m(2, 0, 0, 1)), Err(Error::Determinant));
    }

    #[test]
    fn element_examples() {
        let s = element_quiddity(&Mat2::s()).unwrap();
        assert_eq!(s.combined, w(&[1, 1, 2, 1, 1, 1, 1, 2, 1, 1]));
        assert!(s.sign_defect);
        assert_eq!(element_index(&Mat2::s()).unwrap(), HalfInteger::from_twice(3));
        assert_eq!(element_dissection(&Mat2::s()).unwrap().profile().face_sizes, vec![6, 6]);

        let t = element_quiddity(&Mat2::t()).unwrap();
        assert_eq!(t.combined, w(&[2, 1, 1, 1, 1, 2, 1]));
        assert_eq!(element_index(&Mat2::t()).unwrap(), HalfInteger::from_twice(2));
        assert_eq!(element_dissection(&Mat2::t()).unwrap().profile().face_sizes, vec![3, 6]);

        let cohn = m(2, 1, 1, 1);
        assert_eq!(element_quiddity(&cohn).unwrap().combined, w(&[2, 2, 1, 1, 1, 1, 3, 1]));
        assert_eq!(element_index(&cohn).unwrap(), HalfInteger::from_twice(2));
        assert_eq!(element_index(&m(5, 2, 2, 1)).unwrap(), HalfInteger::from_twice(2));
        assert_eq!(element_dissection(&cohn).unwrap().profile().face_sizes, vec![3, 3, 6]);
    }

    #[test]
    fn spot_checks() {
        assert!(uniqueness_spot_check(5, 5).unwrap().unique());
        assert!(uniqueness_spot_check(11, 2).is_err());
    }

    #[test]
    fn small_probe() {
        let report = conjecture_probe(7, &Budget::default()).unwrap();
        let t = report.entries.iter().find(|e| e.quiddity == w(&[2, 1, 1, 1, 1, 2, 1])).unwrap();
        assert_eq!(t.dissections_found, 1);
        assert!(report.entries.iter().all(|e| e.quiddity.len() <= 7));
    }
}

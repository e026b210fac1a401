//! Exhaustive enumeration of solutions of a given length.
//!
//! Two independent engines: a depth-first brute-force search over bounded
//! tuples that tests the matrix directly, and a generative closure of the base
//! words under the surgery operations that never looks at a matrix. They are
//! meant to be run against each other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fast::SmallMat;
use crate::matrix::{MatrixClass, Word};
use crate::surgery::SolutionClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// `M = Id`
    I,
    /// `M = -Id`
    II,
    /// `M² = -Id`
    III,
}

impl Problem {
    pub const ALL: [Problem; 3] = [Problem::I, Problem::II, Problem::III];

    /// Largest possible entry of a solution of length `n`.
    pub fn entry_bound(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Problem::I => n.saturating_sub(5),
            Problem::II => n.saturating_sub(2),
            Problem::III => n,
        }
    }

    /// Largest possible entry sum of a solution of length `n` (attained with no
    /// type 2 surgeries).
    pub fn sum_bound(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Problem::I | Problem::II => (3 * n).saturating_sub(6),
            Problem::III => (3 * n).saturating_sub(3),
        }
    }

    /// Shortest length at which the problem is posed in count tables.
    pub fn min_length(self) -> usize {
        match self {
            Problem::III => 2,
            _ => 3,
        }
    }

    pub fn matrix_class(self) -> MatrixClass {
        match self {
            Problem::I => MatrixClass::Identity,
            Problem::II => MatrixClass::NegIdentity,
            Problem::III => MatrixClass::TraceZero,
        }
    }

    pub fn solution_class(self) -> SolutionClass {
        SolutionClass::from_matrix_class(self.matrix_class())
    }

    pub fn from_solution_class(c: SolutionClass) -> Option<Problem> {
        match c {
            SolutionClass::ProblemI => Some(Problem::I),
            SolutionClass::ProblemII => Some(Problem::II),
            SolutionClass::ProblemIII => Some(Problem::III),
            SolutionClass::NotASolution => None,
        }
    }
}

/// Size ceilings for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub brute_force: usize,
    pub generative: usize,
    pub dissections: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { brute_force: 12, generative: 14, dissections: 14 }
    }
}

impl Budget {
    /// The same ceiling for every search.
    pub fn uniform(n: usize) -> Budget {
        Budget { brute_force: n, generative: n, dissections: n }
    }

    pub(crate) fn check(limit: usize, what: &'static str, n: usize) -> Result<()> {
        if n > limit {
            Err(Error::Budget { what, n, limit })
        } else {
            Ok(())
        }
    }
}

/// All solutions of one problem at one length, as distinct tuples in
/// lexicographic order (rotations are distinct members).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub problem: Problem,
    pub n: usize,
    pub words: Vec<Word>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn orbit_count(&self, symmetry: Symmetry) -> usize {
        orbit_count(&self.words, symmetry)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Rotation,
    Dihedral,
}

/// Number of classes of `words` under rotations (or rotations and reflections).
pub fn orbit_count(words: &[Word], symmetry: Symmetry) -> usize {
    words
        .iter()
        .map(|w| match symmetry {
            Symmetry::Rotation => w.canonical_form(),
            Symmetry::Dihedral => w.dihedral_canonical_form(),
        })
        .collect::<BTreeSet<_>>()
        .len()
}

/// Depth-first search over all tuples with entries in `1..=entry_bound`,
/// pruning prefixes whose entry sum already exceeds [`Problem::sum_bound`].
pub fn brute_force_enumerate(problem: Problem, n: usize, budget: &Budget) -> Result<SolutionSet> {
    Budget::check(budget.brute_force, "brute-force enumeration", n)?;
    search(problem, n, true)
}

/// The same search without the sum pruning; only the entry bound is used.
pub fn brute_force_unpruned(problem: Problem, n: usize, budget: &Budget) -> Result<SolutionSet> {
    Budget::check(budget.brute_force, "brute-force enumeration", n)?;
    search(problem, n, false)
}

struct Search {
    n: usize,
    bound: u64,
    max_sum: u64,
    target: MatrixClass,
}

impl Search {
    fn run(&self, prefix: &mut Vec<u64>, m: SmallMat, sum: u64, out: &mut Vec<Word>) -> Result<()> {
        if prefix.len() == self.n {
            if m.class() == self.target {
                out.push(Word::from_vec_unchecked(prefix.clone()));
            }
            return Ok(());
        }
        let remaining = (self.n - prefix.len() - 1) as u64;
        for x in 1..=self.bound {
            if sum + x + remaining > self.max_sum {
                break;
            }
            let next = m.push(x).ok_or(Error::Overflow)?;
            prefix.push(x);
            self.run(prefix, next, sum + x, out)?;
            prefix.pop();
        }
        Ok(())
    }
}

fn search(problem: Problem, n: usize, prune: bool) -> Result<SolutionSet> {
    let mut set = SolutionSet { problem, n, words: Vec::new() };
    let bound = problem.entry_bound(n);
    if n == 0 || bound == 0 {
        return Ok(set);
    }
    let max_sum = if prune { problem.sum_bound(n) } else { u64::MAX / 2 };
    let s = Search { n, bound, max_sum, target: problem.matrix_class() };

    // Partition by the first two entries; each partition is searched independently.
    let depth = n.min(2);
    let mut prefixes: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (1..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let run = |p: &Vec<u64>| -> Result<Vec<Word>> {
        let sum: u64 = p.iter().sum();
        let mut out = Vec::new();
        if sum + (n - p.len()) as u64 > s.max_sum {
            return Ok(out);
        }
        let m = SmallMat::product(p).ok_or(Error::Overflow)?;
        let mut prefix = p.clone();
        s.run(&mut prefix, m, sum, &mut out)?;
        Ok(out)
    };

    #[cfg(feature = "std")]
    let parts: Vec<Result<Vec<Word>>> = {
        use rayon::prelude::*;
        prefixes.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "std"))]
    let parts: Vec<Result<Vec<Word>>> = prefixes.iter().map(run).collect();

    for part in parts {
        set.words.extend(part?);
    }
    set.words.sort();
    Ok(set)
}

/// Closure of the base words under both surgeries, keeping words of length `n`.
///
/// Words descending from `(1,1,1)` are split into Problems I and II by the
/// parity of the number of type 2 surgeries; words descending from `(1,2)` and
/// `(2,1)` form Problem III. No matrix is evaluated.
pub fn generative_enumerate(problem: Problem, n: usize, budget: &Budget) -> Result<SolutionSet> {
    Budget::check(budget.generative, "generative enumeration", n)?;
    let levels = generate_levels(problem == Problem::III, n);
    let words = match levels.get(n) {
        Some(level) => level
            .iter()
            .filter(|(_, &odd)| match problem {
                Problem::I => odd,
                Problem::II => !odd,
                Problem::III => true,
            })
            .map(|(w, _)| Word::from_vec_unchecked(w.clone()))
            .collect(),
        None => Vec::new(),
    };
    Ok(SolutionSet { problem, n, words })
}

/// `levels[m]` maps each word of length `m` to the parity of its type 2 count.
fn generate_levels(problem_iii: bool, n: usize) -> Vec<BTreeMap<Vec<u64>, bool>> {
    let mut levels: Vec<BTreeMap<Vec<u64>, bool>> = vec![BTreeMap::new(); n.max(3) + 1];
    let bases: &[&[u64]] = if problem_iii { &[&[1, 2], &[2, 1]] } else { &[&[1, 1, 1]] };
    for b in bases {
        if b.len() <= n {
            levels[b.len()].insert(b.to_vec(), false);
        }
    }
    for m in 1..=n {
        let mut level = core::mem::take(&mut levels[m]);
        if m >= 2 {
            for (w, &odd) in &levels[m - 1] {
                for i in 0..w.len() {
                    level.insert(type1(w, i), odd);
                }
            }
        }
        if m >= 4 {
            for (w, &odd) in &levels[m - 3] {
                for i in 0..w.len() {
                    for x in 1..=w[i] {
                        level.insert(type2(w, i, x, w[i] + 1 - x), !odd);
                    }
                }
            }
        }
        let rotations: Vec<(Vec<u64>, bool)> = level
            .iter()
            .flat_map(|(w, &odd)| {
                (1..w.len()).map(move |k| {
                    let mut r = w.clone();
                    r.rotate_left(k);
                    (r, odd)
                })
            })
            .collect();
        level.extend(rotations);
        levels[m] = level;
    }
    levels
}

fn type1(w: &[u64], i: usize) -> Vec<u64> {
    let n = w.len();
    let mut v = w.to_vec();
    v[i] += 1;
    v[(i + 1) % n] += 1;
    v.insert(i + 1, 1);
    v
}

fn type2(w: &[u64], i: usize, x: u64, y: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(w.len() + 3);
    v.extend_from_slice(&w[..i]);
    v.extend_from_slice(&[x, 1, 1, y]);
    v.extend_from_slice(&w[i + 1..]);
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub count: usize,
    /// Whether the brute-force engine was also run and agreed.
    pub cross_checked: bool,
}

/// Solution counts from the generative engine for every length from
/// [`Problem::min_length`] to `n_max`, cross-checked by brute force wherever
/// `n` is within the brute-force ceiling.
pub fn count_table(problem: Problem, n_max: usize, budget: &Budget) -> Result<Vec<CountRow>> {
    Budget::check(budget.generative, "generative enumeration", n_max)?;
    let mut rows = Vec::new();
    for n in problem.min_length()..=n_max {
        let generated = generative_enumerate(problem, n, budget)?;
        let cross_checked = n <= budget.brute_force;
        if cross_checked && brute_force_enumerate(problem, n, budget)? != generated {
            return Err(Error::OracleMismatch { n });
        }
        rows.push(CountRow { n, count: generated.len(), cross_checked });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_problem_i() {
        let six = brute_force_enumerate(Problem::I, 6, &b()).unwrap();
        assert_eq!(six.words, vec![Word::from_slice(&[1; 6])]);
        let seven = brute_force_enumerate(Problem::I, 7, &b()).unwrap();
        assert_eq!(seven.len(), 7);
        let orbit: BTreeSet<_> = seven.words.iter().map(Word::canonical_form).collect();
        assert_eq!(orbit.len(), 1);
        assert!(seven.words.contains(&Word::from_slice(&[2, 1, 2, 1, 1, 1, 1])));
    }

    #[test]
    fn small_problem_iii() {
        let two = brute_force_enumerate(Problem::III, 2, &b()).unwrap();
        assert_eq!(two.words, vec![Word::from_slice(&[1, 2]), Word::from_slice(&[2, 1])]);
    }

    #[test]
    fn generative_examples() {
        let five = generative_enumerate(Problem::II, 5, &b()).unwrap();
        assert_eq!(five.len(), 5);
        assert!(five.words.iter().all(|w| w.canonical_form() == Word::from_slice(&[1, 2, 2, 1, 3])));
        assert_eq!(generative_enumerate(Problem::II, 9, &b()).unwrap().len(), 430);
        assert_eq!(generative_enumerate(Problem::III, 5, &b()).unwrap().len(), 75);
    }

    #[test]
    fn pruning_matches_unpruned_search() {
        for p in Problem::ALL {
            for n in 1..=6 {
                assert_eq!(
                    brute_force_enumerate(p, n, &b()).unwrap(),
                    brute_force_unpruned(p, n, &b()).unwrap(),
                    "{p:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget::uniform(5);
        assert_eq!(
            brute_force_enumerate(Problem::II, 6, &tight),
            Err(Error::Budget { what: "brute-force enumeration", n: 6, limit: 5 })
        );
        assert!(generative_enumerate(Problem::II, 6, &tight).is_err());
    }

    #[test]
    fn orbits() {
        let eight = generative_enumerate(Problem::I, 8, &b()).unwrap();
        assert_eq!(eight.orbit_count(Symmetry::Dihedral), 4);
    }
}

//! Local surgery operations on words, their inverses, and certified reduction
//! of a solution down to one of the base words `(1,1,1)`, `(1,2)`, `(2,1)`.
//!
//! Type 1 inserts a `1` between two cyclic neighbours and increments both; it
//! leaves the word product unchanged. Type 2 splits an entry `a` as
//! `a' + a'' = a + 1` and inserts `1, 1` between the halves; it negates the
//! word product.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fast;
use crate::matrix::{MatrixClass, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurgeryKind {
    Type1,
    Type2,
}

/// One forward surgery, replayable on a word of the right length.
///
/// `shift` rotates the result to the right after the surgery. It is zero except
/// when the surgery straddles the end of the representative, where it moves
/// the wrapped-around part of the new fragment back to the front so that
/// replay is exact rather than exact-up-to-rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurgeryStep {
    Type1 { position: usize, shift: usize },
    Type2 { position: usize, split: (u64, u64), shift: usize },
}

impl SurgeryStep {
    pub fn kind(&self) -> SurgeryKind {
        match self {
            SurgeryStep::Type1 { .. } => SurgeryKind::Type1,
            SurgeryStep::Type2 { .. } => SurgeryKind::Type2,
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            SurgeryStep::Type1 { position, .. } | SurgeryStep::Type2 { position, .. } => position,
        }
    }

    pub fn shift(&self) -> usize {
        match *self {
            SurgeryStep::Type1 { shift, .. } | SurgeryStep::Type2 { shift, .. } => shift,
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let out = match *self {
            SurgeryStep::Type1 { position, .. } => apply_type1(w, position),
            SurgeryStep::Type2 { position, split, .. } => apply_type2(w, position, split)?,
        };
        Ok(rotate_right(&out, self.shift()))
    }
}

fn rotate_right(w: &Word, k: usize) -> Word {
    let n = w.len();
    w.rotate((n - k % n) % n)
}

/// Inserts `1` between `a_i` and `a_{i+1}` (cyclically) and increments both.
///
/// The new `1` lands at index `i + 1`; for `i = n - 1` it is appended at the end.
/// `i` is taken modulo `n`.
pub fn apply_type1(w: &Word, i: usize) -> Word {
    let n = w.len();
    let i = i % n;
    let mut v = w.as_slice().to_vec();
    v[i] += 1;
    v[(i + 1) % n] += 1;
    v.insert(i + 1, 1);
    Word::from_vec_unchecked(v)
}

/// Replaces `a_i` by `a', 1, 1, a''` where `a' + a'' = a_i + 1`.
pub fn apply_type2(w: &Word, i: usize, split: (u64, u64)) -> Result<Word> {
    let n = w.len();
    let i = i % n;
    let (x, y) = split;
    if x == 0 || y == 0 || x.checked_add(y) != w.as_slice()[i].checked_add(1) {
        return Err(Error::NotApplicable { op: "type 2 surgery", position: i });
    }
    let mut v = Vec::with_capacity(n + 3);
    v.extend_from_slice(&w.as_slice()[..i]);
    v.extend_from_slice(&[x, 1, 1, y]);
    v.extend_from_slice(&w.as_slice()[i + 1..]);
    Ok(Word::from_vec_unchecked(v))
}

/// Removes an isolated `1` at index `i` whose cyclic neighbours are both at
/// least 2, decrementing the neighbours.
pub fn inverse_type1(w: &Word, i: usize) -> Result<Word> {
    invert_type1(w, i).map(|(w, _)| w)
}

/// Collapses the fragment `(a_{i-1}, 1, 1, a_{i+2})` into `a_{i-1} + a_{i+2} - 1`,
/// where `i` is the index of the first of the two consecutive `1`s.
pub fn inverse_type2(w: &Word, i: usize) -> Result<Word> {
    invert_type2(w, i).map(|(w, _)| w)
}

/// Inverse type 1 together with the forward step that undoes it exactly.
pub(crate) fn invert_type1(w: &Word, i: usize) -> Result<(Word, SurgeryStep)> {
    let n = w.len();
    let err = Error::NotApplicable { op: "inverse type 1 surgery", position: i };
    if n < 3 || i >= n {
        return Err(err);
    }
    let a = w.as_slice();
    let (prev, next) = ((i + n - 1) % n, (i + 1) % n);
    if a[i] != 1 || a[prev] < 2 || a[next] < 2 {
        return Err(err);
    }
    let mut v = a.to_vec();
    v[prev] -= 1;
    v[next] -= 1;
    v.remove(i);
    let m = v.len();
    let step = match i {
        0 => SurgeryStep::Type1 { position: m - 1, shift: 1 },
        _ if i == n - 1 => SurgeryStep::Type1 { position: m - 1, shift: 0 },
        _ => SurgeryStep::Type1 { position: i - 1, shift: 0 },
    };
    Ok((Word::from_vec_unchecked(v), step))
}

/// Inverse type 2 together with the forward step that undoes it exactly.
pub(crate) fn invert_type2(w: &Word, i: usize) -> Result<(Word, SurgeryStep)> {
    let n = w.len();
    let err = Error::NotApplicable { op: "inverse type 2 surgery", position: i };
    if n < 5 || i >= n {
        return Err(err);
    }
    let a = w.as_slice();
    let p = [(i + n - 1) % n, i, (i + 1) % n, (i + 2) % n];
    if a[p[1]] != 1 || a[p[2]] != 1 {
        return Err(err);
    }
    let (left, right) = (a[p[0]], a[p[3]]);
    let merged = left + right - 1;
    let mut v = Vec::with_capacity(n - 3);
    for (k, &x) in a.iter().enumerate() {
        if k == p[0] {
            v.push(merged);
        } else if !p[1..].contains(&k) {
            v.push(x);
        }
    }
    let shift = p[1..].iter().filter(|&&k| k < p[0]).count();
    let step = SurgeryStep::Type2 { position: p[0] - shift, split: (left, right), shift };
    Ok((Word::from_vec_unchecked(v), step))
}

/// Which equation a word solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolutionClass {
    /// `M(w) = Id`.
    ProblemI,
    /// `M(w) = -Id`.
    ProblemII,
    /// `M(w)² = -Id`, i.e. trace zero.
    ProblemIII,
    NotASolution,
}

impl SolutionClass {
    pub fn from_matrix_class(c: MatrixClass) -> SolutionClass {
        match c {
            MatrixClass::Identity => SolutionClass::ProblemI,
            MatrixClass::NegIdentity => SolutionClass::ProblemII,
            MatrixClass::TraceZero => SolutionClass::ProblemIII,
            MatrixClass::Other => SolutionClass::NotASolution,
        }
    }

    pub fn is_solution(self) -> bool {
        self != SolutionClass::NotASolution
    }
}

/// A replayable derivation of a solution from a base word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub base: Word,
    /// Forward steps, in the order they are applied to `base`.
    pub steps: Vec<SurgeryStep>,
    /// Number of type 1 steps.
    pub s: usize,
    /// Number of type 2 steps.
    pub r: usize,
}

impl ReductionCertificate {
    pub fn replay(&self) -> Result<Word> {
        self.steps.iter().try_fold(self.base.clone(), |w, step| step.apply(&w))
    }

    /// The class implied by the base and the parity of `r`.
    pub fn implied_class(&self) -> SolutionClass {
        match self.base.as_slice() {
            [1, 1, 1] if self.r % 2 == 1 => SolutionClass::ProblemI,
            [1, 1, 1] => SolutionClass::ProblemII,
            [1, 2] | [2, 1] => SolutionClass::ProblemIII,
            _ => SolutionClass::NotASolution,
        }
    }
}

pub(crate) fn is_base(w: &[u64]) -> bool {
    matches!(w, [1, 1, 1] | [1, 2] | [2, 1])
}

/// Reduces a solution to a base word and returns the forward derivation.
///
/// At each step the current representative is scanned from index 0: the first
/// applicable inverse type 2 (a `1, 1` pair, wrapping allowed) wins, otherwise
/// the first applicable inverse type 1.
pub fn reduce(w: &Word) -> Result<ReductionCertificate> {
    let class = SolutionClass::from_matrix_class(fast::word_class(w.as_slice()));
    if !class.is_solution() {
        return Err(Error::NotASolution { stuck: w.clone() });
    }
    let mut cur = w.clone();
    let mut steps = Vec::new();
    while !is_base(cur.as_slice()) {
        let n = cur.len();
        let next =
            (0..n).find_map(|i| invert_type2(&cur, i).ok()).or_else(|| (0..n).find_map(|i| invert_type1(&cur, i).ok()));
        match next {
            Some((smaller, step)) => {
                steps.push(step);
                cur = smaller;
            }
            None => return Err(Error::NotASolution { stuck: cur }),
        }
    }
    steps.reverse();
    let r = steps.iter().filter(|s| s.kind() == SurgeryKind::Type2).count();
    let cert = ReductionCertificate { base: cur, s: steps.len() - r, r, steps };
    if cert.implied_class() != class {
        return Err(Error::NotASolution { stuck: cert.base });
    }
    Ok(cert)
}

/// Classifies `w` by its word product and attaches a certificate for solutions.
pub fn classify(w: &Word) -> (SolutionClass, Option<ReductionCertificate>) {
    let class = SolutionClass::from_matrix_class(fast::word_class(w.as_slice()));
    if !class.is_solution() {
        return (class, None);
    }
    (class, reduce(w).ok())
}

/// A word is reduced when it has no fragment `(a, 1, b)` with `a, b > 1` and no
/// fragment `(a, 1, 1, b)`. Fragments are read linearly, not cyclically.
pub fn is_reduced(w: &Word) -> bool {
    let a = w.as_slice();
    let isolated = a.windows(3).any(|f| f[0] > 1 && f[1] == 1 && f[2] > 1);
    let double = a.windows(4).any(|f| f[1] == 1 && f[2] == 1);
    !isolated && !double
}

//! The difference equation `V_{i+1} = a_i V_i - V_{i-1}`, its broken lines and
//! rotation index, frieze patterns, total positivity and Farey quiddities.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dissection::Dissection;
use crate::error::{Error, Result};
use crate::matrix::{continuant, Word};
use crate::surgery::{classify, SolutionClass};

/// Values of one solution of the difference equation with periodic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SLSequence {
    pub word: Word,
    pub values: Vec<BigInt>,
}

/// Runs the recurrence for `steps` steps from `(V_0, V_1)`. The coefficient used
/// to produce `V_{i+1}` is `w[(i-1) mod n]`, so that `(V_{n+1}, V_n)` is
/// `M(w)` applied to `(V_1, V_0)`.
pub fn iterate(w: &Word, v0: impl Into<BigInt>, v1: impl Into<BigInt>, steps: usize) -> SLSequence {
    let n = w.len();
    let mut values: Vec<BigInt> = vec![v0.into()];
    if steps > 0 {
        values.push(v1.into());
    }
    for i in 1..steps {
        let a = BigInt::from(w.as_slice()[(i + n - 1) % n]);
        let next = a * &values[i] - &values[i - 1];
        values.push(next);
    }
    SLSequence { word: w.clone(), values }
}

/// Points `P_i = (V⁽¹⁾_i, V⁽²⁾_i)` of the two sequences started at `(1, 0)` and `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenLine {
    pub points: Vec<(BigInt, BigInt)>,
}

pub fn broken_line(w: &Word, steps: usize) -> BrokenLine {
    let first = iterate(w, 1, 0, steps);
    let second = iterate(w, 0, 1, steps);
    BrokenLine { points: first.values.into_iter().zip(second.values).collect() }
}

/// The Wronskian `x_{i+1} y_i - x_i y_{i+1}`, which is the same for every `i`.
pub fn wronskian(b: &BrokenLine) -> Result<BigInt> {
    if b.points.len() < 2 {
        return Err(Error::TooShort { needed: 2, got: b.points.len() });
    }
    let cross = |p: &[(BigInt, BigInt)]| &p[1].0 * &p[0].1 - &p[0].0 * &p[1].1;
    let w = cross(&b.points[..2]);
    if b.points.windows(2).any(|p| cross(p) != w) {
        return Err(Error::Unsupported("non-constant Wronskian"));
    }
    Ok(w)
}

/// An exact multiple of one half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    pub twice: i64,
}

impl HalfInteger {
    pub fn from_twice(twice: i64) -> HalfInteger {
        HalfInteger { twice }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Index of the broken line of a solution.
///
/// Counts, over one period of the sequence with `(V_0, V_1) = (0, 1)`, the zeros
/// and the strict sign changes; each is one crossing of a fixed line through the
/// origin, i.e. half a turn. Trace-zero words are measured on their double.
pub fn rotation_index(w: &Word) -> Result<HalfInteger> {
    let (class, _) = classify(w);
    let w = match class {
        SolutionClass::NotASolution => return Err(Error::NotASolution { stuck: w.clone() }),
        SolutionClass::ProblemIII => w.doubled(),
        _ => w.clone(),
    };
    let n = w.len();
    let v = iterate(&w, 0, 1, n).values;
    let zeros = v[..n].iter().filter(|x| x.is_zero()).count();
    let changes = v.windows(2).filter(|p| (&p[0] * &p[1]).is_negative()).count();
    Ok(HalfInteger::from_twice((zeros + changes) as i64))
}

/// Continuant rows `entry(r, i) = K_r(a_i, …, a_{i+r-1})`, one period per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frieze {
    pub word: Word,
    pub rows: Vec<Vec<BigInt>>,
}

impl Frieze {
    /// Entry at row `r`, column `i` (taken cyclically).
    pub fn entry(&self, r: usize, i: isize) -> &BigInt {
        let n = self.word.len() as isize;
        &self.rows[r][i.rem_euclid(n) as usize]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Entry with the implicit zero row above row 0 and, when the last row is
    /// all ones, below the last row.
    fn padded(&self, r: isize, i: isize) -> Option<BigInt> {
        let rows = self.rows.len() as isize;
        if r == -1 {
            Some(BigInt::zero())
        } else if (0..rows).contains(&r) {
            Some(self.entry(r as usize, i).clone())
        } else if r == rows && self.rows.last().is_some_and(|row| row.iter().all(One::is_one)) {
            Some(BigInt::zero())
        } else {
            None
        }
    }

    /// `entry(r,i) entry(r,i+1) - entry(r+1,i) entry(r-1,i+1) = 1` wherever defined.
    pub fn satisfies_diamond_rule(&self) -> bool {
        let n = self.word.len() as isize;
        (1..self.rows.len() as isize - 1).all(|r| {
            (0..n).all(|i| {
                let e = |r: isize, i: isize| self.padded(r, i).unwrap();
                e(r, i) * e(r, i + 1) - e(r + 1, i) * e(r - 1, i + 1) == BigInt::one()
            })
        })
    }
}

/// Default number of rows: `n - 1` for `M = -Id`, `2n - 1` for trace zero.
pub fn default_rows(w: &Word) -> Result<usize> {
    match classify(w).0 {
        SolutionClass::ProblemII => Ok(w.len() - 1),
        SolutionClass::ProblemIII => Ok(2 * w.len() - 1),
        _ => Err(Error::Unsupported("friezes are built from words with M = -Id or trace zero")),
    }
}

pub fn frieze(w: &Word, rows: usize) -> Result<Frieze> {
    default_rows(w)?;
    let n = w.len();
    let rows =
        (0..rows).map(|r| (0..n).map(|i| continuant((0..r).map(|k| w.as_slice()[(i + k) % n]))).collect()).collect();
    Ok(Frieze { word: w.clone(), rows })
}

/// Every 3×3 block `m(i+p, j+q)`, `p, q ∈ {0,1,2}`, of the matrix
/// `m(i, j) = entry(j - i + 1, i)` has determinant zero.
pub fn check_tame(f: &Frieze) -> bool {
    let n = f.word.len() as isize;
    let rows = f.rows.len() as isize;
    let m = |i: isize, j: isize| f.padded(j - i + 1, i);
    for i in 0..n {
        for d in -3..=rows {
            let j = i + d;
            let mut block = [
                [BigInt::zero(), BigInt::zero(), BigInt::zero()],
                [BigInt::zero(), BigInt::zero(), BigInt::zero()],
                [BigInt::zero(), BigInt::zero(), BigInt::zero()],
            ];
            let mut defined = true;
            for (p, row) in block.iter_mut().enumerate() {
                for (q, cell) in row.iter_mut().enumerate() {
                    match m(i + p as isize, j + q as isize) {
                        Some(v) => *cell = v,
                        None => defined = false,
                    }
                }
            }
            if defined && det3(&block) != BigInt::zero() {
                return false;
            }
        }
    }
    true
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The reflection through the middle row: `entry(r, i) = entry(R - r, i + r - n + 1)`
/// where `R = 2n - 2` is the last row of a trace-zero frieze. In the staggered
/// layout both entries sit in the same column.
pub fn check_glide(f: &Frieze) -> bool {
    let n = f.word.len() as isize;
    let last = f.rows.len() as isize - 1;
    (0..=last).all(|r| (0..n).all(|i| f.entry(r as usize, i) == f.entry((last - r) as usize, i + r - (last / 2))))
}

/// `K_{j+1}(a_i, …, a_{i+j}) > 0` for all `j <= n - 3` and all cyclic `i`.
/// Trace-zero words are tested through their double.
pub fn is_totally_positive(w: &Word) -> Result<bool> {
    let w = match classify(w).0 {
        SolutionClass::NotASolution => return Err(Error::NotASolution { stuck: w.clone() }),
        SolutionClass::ProblemIII => w.doubled(),
        _ => w.clone(),
    };
    let n = w.len();
    let a = w.as_slice();
    for i in 0..n {
        // K_{j+1} along a_i, a_{i+1}, … by the three-term recurrence.
        let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
        for j in 0..n.saturating_sub(2) {
            let next = BigInt::from(a[(i + j) % n]) * &cur - &prev;
            if !next.is_positive() {
                return Ok(false);
            }
            prev = core::mem::replace(&mut cur, next);
        }
    }
    Ok(true)
}

/// The Farey sequence of order `order` on `[0, 1]` as `(p, q)` pairs.
pub fn farey_sequence(order: u64) -> Vec<(u64, u64)> {
    let mut out = vec![(0, 1)];
    if order == 0 {
        return out;
    }
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, order);
    while c <= order {
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
        out.push((a, b));
    }
    out
}

/// Quiddity of the Farey triangulation: the fractions of order `order` are
/// the vertices of a polygon and unimodular pairs are its diagonals.
pub fn farey_quiddity(order: u64) -> Result<Word> {
    let verts = farey_sequence(order);
    let n = verts.len();
    if n < 3 {
        return Err(Error::TooShort { needed: 3, got: n });
    }
    let mut diagonals = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            let ((p1, q1), (p2, q2)) = (verts[i], verts[j]);
            if (i, j) != (0, n - 1) && (p2 * q1).abs_diff(p1 * q2) == 1 {
                diagonals.push((i, j));
            }
        }
    }
    Dissection::new(n, diagonals)?.quiddity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(xs: &[u64]) -> Word {
        Word::from_slice(xs)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(ints(&iterate(&w(&[1; 6]), 0, 1, 7).values), vec![0, 1, 1, 0, -1, -1, 0, 1]);
        assert_eq!(ints(&iterate(&w(&[2, 1, 2, 1]), 0, 1, 4).values), vec![0, 1, 2, 1, 0]);
        assert_eq!(iterate(&w(&[2]), 3, 4, 0).values.len(), 1);
    }

    #[test]
    fn wronskian_is_constant() {
        for word in [w(&[1; 6]), w(&[5, 2, 7]), w(&[1, 3, 1, 2, 2])] {
            let b = broken_line(&word, 12);
            assert_eq!(wronskian(&b).unwrap(), BigInt::from(-1));
            assert_eq!(wronskian(&broken_line(&word.doubled(), 12)).unwrap(), BigInt::from(-1));
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(rotation_index(&w(&[1; 6])).unwrap(), HalfInteger::from_twice(2));
        assert_eq!(rotation_index(&w(&[2, 1, 2, 1])).unwrap(), HalfInteger::from_twice(1));
        let s = w(&[1, 1, 2, 1, 1, 1, 1, 2, 1, 1]);
        assert_eq!(rotation_index(&s).unwrap().to_string(), "3/2");
        assert!(rotation_index(&w(&[2, 2])).is_err());
    }

    #[test]
    fn coxeter_frieze() {
        let f = frieze(&w(&[1, 3, 1, 2, 2]), 4).unwrap();
        let rows: Vec<Vec<i64>> = f.rows.iter().map(|r| ints(r)).collect();
        assert_eq!(rows, vec![vec![1; 5], vec![1, 3, 1, 2, 2], vec![2, 2, 1, 3, 1], vec![1; 5]]);
        assert!(check_tame(&f));
        assert!(f.satisfies_diamond_rule());
        let tiny = frieze(&w(&[1, 1, 1]), 2).unwrap();
        assert_eq!(tiny.rows.iter().map(|r| ints(r)).collect::<Vec<_>>(), vec![vec![1; 3], vec![1; 3]]);
        assert!(frieze(&w(&[1; 6]), 5).is_err());
    }

    #[test]
    fn trace_zero_frieze() {
        let word = w(&[1, 1, 2, 1, 1]);
        assert_eq!(default_rows(&word).unwrap(), 9);
        let f = frieze(&word, 9).unwrap();
        assert!(check_tame(&f));
        assert!(check_glide(&f));
        let mut broken = f.clone();
        broken.rows[3][1] += 1;
        assert!(!check_tame(&broken));
        assert!(!check_glide(&broken));
    }

    #[test]
    fn positivity() {
        assert!(is_totally_positive(&w(&[1, 3, 1, 2, 2])).unwrap());
        assert!(!is_totally_positive(&w(&[1; 9])).unwrap());
        assert!(is_totally_positive(&w(&[1, 2])).unwrap());
    }

    #[test]
    fn farey() {
        assert!(farey_quiddity(1).is_err());
        assert_eq!(farey_quiddity(2).unwrap(), w(&[1, 1, 1]));
        let q = farey_quiddity(5).unwrap();
        assert_eq!((q.len(), q.sum()), (11, 27));
        assert_eq!(farey_sequence(3), vec![(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]);
    }
}

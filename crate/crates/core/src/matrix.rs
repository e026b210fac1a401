//! 2×2 integer matrices, positive words and their products.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fast;

/// An exact 2×2 integer matrix `[[a, b], [c, d]]`.
///
/// The constructors in this crate only ever produce determinant-one matrices,
/// but [`Mat2::new`] accepts anything so that callers can build inputs for
/// [`classify_matrix`] and friends, which check the determinant themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// `S = [[0, -1], [1, 0]]`, which is also `E(0)`.
    pub fn s() -> Self {
        Mat2::new(0, -1, 1, 0)
    }

    /// The transvection `T = [[1, 1], [0, 1]]`.
    pub fn t() -> Self {
        Mat2::new(1, 1, 0, 1)
    }

    /// `L = [[1, -1], [1, 0]] = E(1)`, a cube root of `-Id`.
    pub fn l() -> Self {
        elementary(1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn is_neg_identity(&self) -> bool {
        (-&self.a).is_one() && self.b.is_zero() && self.c.is_zero() && (-&self.d).is_one()
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse(&self) -> Result<Mat2> {
        if !self.det().is_one() {
            return Err(Error::Determinant);
        }
        Ok(Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() })
    }

    /// Equality up to a global sign, i.e. equality in PSL(2, Z).
    pub fn eq_up_to_sign(&self, other: &Mat2) -> bool {
        self == other || *self == -other
    }

    /// The representative of `±self` whose first nonzero entry (in the order
    /// a, b, c, d) is positive.
    pub fn sign_normalized(&self) -> Mat2 {
        let first =
            [&self.a, &self.b, &self.c, &self.d].into_iter().find(|x| !x.is_zero()).cloned().unwrap_or_default();
        if first.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        -&self
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A non-empty finite sequence of positive integers.
///
/// Most operations treat the word cyclically; [`Word::rotate`] and
/// [`Word::canonical_form`] move between representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u64>);

impl Word {
    pub fn new(entries: Vec<u64>) -> Result<Word> {
        if entries.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(index) = entries.iter().position(|&x| x == 0) {
            return Err(Error::NonPositiveEntry { index });
        }
        Ok(Word(entries))
    }

    /// Builds a word from a slice, panicking on invalid input. Meant for literals.
    pub fn from_slice(entries: &[u64]) -> Word {
        Word::new(entries.to_vec()).expect("word literal must be non-empty and positive")
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u64>) -> Word {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&x| x > 0));
        Word(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Entry at cyclic index `i`.
    pub fn cyclic(&self, i: isize) -> u64 {
        let n = self.0.len() as isize;
        self.0[i.rem_euclid(n) as usize]
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Left rotation: entry `i` of the result is entry `i + k` (mod n) of `self`.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        let n = v.len();
        v.rotate_left(k % n);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// The lexicographically least rotation.
    pub fn canonical_form(&self) -> Word {
        (0..self.len()).map(|k| self.rotate(k)).min().expect("non-empty")
    }

    /// The lexicographically least word among all rotations and reflections.
    pub fn dihedral_canonical_form(&self) -> Word {
        let a = self.canonical_form();
        let b = self.reversed().canonical_form();
        a.min(b)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `w ‖ w`.
    pub fn doubled(&self) -> Word {
        self.concat(self)
    }

    /// Whether the word is invariant under rotation by `period`.
    pub fn is_periodic(&self, period: usize) -> bool {
        let n = self.len();
        period > 0 && n.is_multiple_of(period) && (0..n).all(|i| self.0[i] == self.0[(i + period) % n])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `E(a) = [[a, -1], [1, 0]]`.
pub fn elementary(a: impl Into<BigInt>) -> Mat2 {
    Mat2 { a: a.into(), b: BigInt::from(-1), c: BigInt::one(), d: BigInt::zero() }
}

/// `M(w) = E(a_n) ⋯ E(a_1)`: the last entry is the leftmost factor.
///
/// Computed in 128-bit arithmetic while it fits; falls back to big integers on
/// overflow.
pub fn word_product(w: &Word) -> Mat2 {
    match fast::SmallMat::product(w.as_slice()) {
        Some(m) => m.to_mat2(),
        None => w.as_slice().iter().fold(Mat2::identity(), |acc, &a| &elementary(a) * &acc),
    }
}

/// Trace of [`word_product`]; the Rotundus polynomial evaluated at `w`.
pub fn rotundus(w: &Word) -> BigInt {
    word_product(w).trace()
}

/// The continuant `K_i(x_1, …, x_i)`: the tridiagonal determinant with diagonal
/// `x_k` and ones off the diagonal.
///
/// `K_0 = 1`, `K_{-1} = 0`, `K_i = x_i K_{i-1} - K_{i-2}`.
pub fn continuant<I>(xs: I) -> BigInt
where
    I: IntoIterator,
    I::Item: Into<BigInt>,
{
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for x in xs {
        let next = x.into() * &cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The word product assembled from continuants:
///
/// ```text
/// [[ K_n(a_1..a_n),      -K_{n-1}(a_2..a_n)     ],
///  [ K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1}) ]]
/// ```
pub fn product_from_continuants(w: &Word) -> Result<Mat2> {
    let a = w.as_slice();
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort { needed: 2, got: n });
    }
    let k = |s: &[u64]| continuant(s.iter().copied());
    Ok(Mat2 { a: k(a), b: -k(&a[1..]), c: k(&a[..n - 1]), d: -k(&a[1..n - 1]) })
}

/// Which of the three equations a determinant-one matrix satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixClass {
    Identity,
    NegIdentity,
    /// `tr = 0`, equivalently `m² = -Id`.
    TraceZero,
    Other,
}

pub fn classify_matrix(m: &Mat2) -> Result<MatrixClass> {
    if !m.det().is_one() {
        return Err(Error::Determinant);
    }
    Ok(if m.is_identity() {
        MatrixClass::Identity
    } else if m.is_neg_identity() {
        MatrixClass::NegIdentity
    } else if m.trace().is_zero() {
        MatrixClass::TraceZero
    } else {
        MatrixClass::Other
    })
}

//! Checked 128-bit fast path for word products.

use num_bigint::BigInt;

use crate::matrix::{Mat2, MatrixClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct SmallMat {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

impl SmallMat {
    pub const IDENTITY: SmallMat = SmallMat { a: 1, b: 0, c: 0, d: 1 };

    /// `E(x) · self`, or `None` on overflow.
    #[inline]
    pub fn push(&self, x: u64) -> Option<SmallMat> {
        let x = x as i128;
        Some(SmallMat {
            a: x.checked_mul(self.a)?.checked_sub(self.c)?,
            b: x.checked_mul(self.b)?.checked_sub(self.d)?,
            c: self.a,
            d: self.b,
        })
    }

    pub fn product(word: &[u64]) -> Option<SmallMat> {
        word.iter().try_fold(SmallMat::IDENTITY, |m, &x| m.push(x))
    }

    pub fn class(&self) -> MatrixClass {
        match (self.a, self.b, self.c, self.d) {
            (1, 0, 0, 1) => MatrixClass::Identity,
            (-1, 0, 0, -1) => MatrixClass::NegIdentity,
            _ if self.a + self.d == 0 => MatrixClass::TraceZero,
            _ => MatrixClass::Other,
        }
    }

    pub fn to_mat2(self) -> Mat2 {
        Mat2 { a: BigInt::from(self.a), b: BigInt::from(self.b), c: BigInt::from(self.c), d: BigInt::from(self.d) }
    }
}

/// Class of `M(word)`; words too large for the fast path go through big integers.
pub(crate) fn word_class(word: &[u64]) -> MatrixClass {
    match SmallMat::product(word) {
        Some(m) => m.class(),
        None => {
            let w = crate::matrix::Word::from_vec_unchecked(word.to_vec());
            crate::matrix::classify_matrix(&crate::matrix::word_product(&w))
                .expect("word products have determinant one")
        }
    }
}

//! The permutation classes generalizing alternating permutations.
//!
//! `ClassSpec { n, k, r }` describes the set of permutations of length
//! `n*k + r` whose entries, grouped as a length-`r` prefix block followed by
//! `n` blocks of length `k`, increase within each block while the entry just
//! after each within-block position of one block exceeds the corresponding
//! entry of the next block.  For `k = 1` this is all of `S_n`; for
//! `(k, r) = (2, 0)` the up-down alternating permutations of length `2n`; for
//! `(k, r) = (2, 1)` the down-up alternating permutations of length `2n + 1`.
//! These are exactly the reading words of the standard tableaux of a
//! staircase-difference skew shape, exposed by [`ClassSpec::shape`].

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Partition, SkewShape};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Parameters `(n, k, r)` of a permutation class, with `0 <= r <= k - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClassSpec", into = "RawClassSpec")]
pub struct ClassSpec {
    n: usize,
    k: usize,
    r: usize,
}

#[derive(Serialize, Deserialize)]
struct RawClassSpec {
    n: usize,
    k: usize,
    #[serde(default)]
    r: usize,
}

impl ClassSpec {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidClassSpec(format!(
                "n and k must be positive, got n={n}, k={k}"
            )));
        }
        if r >= k {
            return Err(Error::InvalidClassSpec(format!(
                "r must satisfy 0 <= r <= k-1, got k={k}, r={r}"
            )));
        }
        Ok(ClassSpec { n, k, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Length `n*k + r` of the permutations in the class.
    pub fn word_len(&self) -> usize {
        self.n * self.k + self.r
    }

    /// Flat 0-based position of the block entry `(i, j)`.
    ///
    /// Blocks are indexed as in the defining conditions: the prefix block is
    /// `i = 0` with `j` in `2..=r+1`, and block `i` in `1..=n` has `j` in
    /// `1..=k`.
    fn pos(&self, i: usize, j: usize) -> usize {
        if i == 0 {
            debug_assert!((2..=self.r + 1).contains(&j));
            j - 2
        } else {
            debug_assert!((1..=self.k).contains(&j));
            self.r + (i - 1) * self.k + (j - 1)
        }
    }

    /// Membership test for the class.
    ///
    /// A length mismatch is an error, distinct from a `false` answer.
    pub fn is_member(&self, w: &Permutation) -> Result<bool> {
        if w.len() != self.word_len() {
            return Err(Error::LengthMismatch {
                want: self.word_len(),
                got: w.len(),
            });
        }
        let at = |i: usize, j: usize| w.entries()[self.pos(i, j)];
        // ascents inside each block
        for i in 1..=self.n {
            for j in 1..self.k {
                if at(i, j) >= at(i, j + 1) {
                    return Ok(false);
                }
            }
        }
        for j in 2..self.r + 1 {
            if at(0, j) >= at(0, j + 1) {
                return Ok(false);
            }
        }
        // cross-block descents
        for i in 1..self.n {
            for j in 1..self.k {
                if at(i, j + 1) <= at(i + 1, j) {
                    return Ok(false);
                }
            }
        }
        for j in 1..=self.r {
            if at(0, j + 1) <= at(1, j) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The skew shape whose standard tableaux have exactly this class as
    /// their set of reading words.
    ///
    /// For `r = 0` this is `⟨n+k-1, ..., k⟩ / ⟨n-1, ..., 1⟩`; for `r > 0` an
    /// extra bottom row of length `r` is appended in columns `1..=r`, whose
    /// column overlaps with the row above encode the prefix-block conditions.
    pub fn shape(&self) -> SkewShape {
        let mut outer: Vec<usize> = (0..self.n).map(|i| self.n + self.k - 1 - i).collect();
        if self.r > 0 {
            outer.push(self.r);
        }
        let outer = Partition::new(outer).expect("class outer shape");
        let inner = Partition::staircase(self.n - 1);
        SkewShape::new(outer, inner).expect("class shape")
    }

    /// The pattern `1 2 ... m`.
    pub fn monotone_pattern(m: usize) -> Permutation {
        Permutation::identity(m)
    }
}

impl TryFrom<RawClassSpec> for ClassSpec {
    type Error = Error;
    fn try_from(raw: RawClassSpec) -> Result<Self> {
        ClassSpec::new(raw.n, raw.k, raw.r)
    }
}

impl From<ClassSpec> for RawClassSpec {
    fn from(c: ClassSpec) -> Self {
        RawClassSpec {
            n: c.n,
            k: c.k,
            r: c.r,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},k={},r={}", self.n, self.k, self.r)
    }
}

impl fmt::Debug for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassSpec({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::shape;

    fn perm(digits: &str) -> Permutation {
        Permutation::new(
            digits
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(ClassSpec::new(0, 2, 0).is_err());
        assert!(ClassSpec::new(2, 0, 0).is_err());
        assert!(ClassSpec::new(2, 2, 2).is_err());
        assert!(ClassSpec::new(2, 2, 1).is_ok());
    }

    #[test]
    fn membership_examples() {
        let c = ClassSpec::new(5, 3, 0).unwrap();
        let w = Permutation::new(vec![7, 10, 14, 8, 13, 15, 4, 11, 12, 1, 5, 9, 2, 3, 6]).unwrap();
        assert!(c.is_member(&w).unwrap());

        let c1k = ClassSpec::new(1, 4, 0).unwrap();
        assert!(c1k.is_member(&Permutation::identity(4)).unwrap());

        let odd = ClassSpec::new(1, 2, 1).unwrap();
        assert!(odd.is_member(&perm("213")).unwrap());
        assert!(!odd.is_member(&perm("123")).unwrap());

        // length mismatch is an error, not false
        assert!(matches!(
            odd.is_member(&perm("12")),
            Err(Error::LengthMismatch { want: 3, got: 2 })
        ));
    }

    #[test]
    fn alternating_characterization() {
        // class (n, 2, 0) is the up-down alternating permutations of length 2n
        let c = ClassSpec::new(2, 2, 0).unwrap();
        for w in crate::enumerate::all_permutations(4) {
            let e = w.entries();
            let alt = e[0] < e[1] && e[1] > e[2] && e[2] < e[3];
            assert_eq!(c.is_member(&w).unwrap(), alt, "w={w}");
        }
        // class (n, 2, 1) is the down-up alternating permutations
        let c = ClassSpec::new(2, 2, 1).unwrap();
        for w in crate::enumerate::all_permutations(5) {
            let e = w.entries();
            let alt = e[0] > e[1] && e[1] < e[2] && e[2] > e[3] && e[3] < e[4];
            assert_eq!(c.is_member(&w).unwrap(), alt, "w={w}");
        }
    }

    #[test]
    fn class_shapes() {
        assert_eq!(
            ClassSpec::new(5, 3, 0).unwrap().shape(),
            shape(&[7, 6, 5, 4, 3], &[4, 3, 2, 1])
        );
        assert_eq!(ClassSpec::new(1, 1, 0).unwrap().shape(), shape(&[1], &[]));
        assert_eq!(ClassSpec::new(1, 2, 1).unwrap().shape(), shape(&[2, 1], &[]));
        assert_eq!(
            ClassSpec::new(2, 2, 1).unwrap().shape(),
            shape(&[3, 2, 1], &[1])
        );
        assert!(ClassSpec::new(3, 3, 2).unwrap().shape().is_basic());
    }

    #[test]
    fn serde_class() {
        let c = ClassSpec::new(2, 3, 1).unwrap();
        let js = serde_json::to_string(&c).unwrap();
        let back: ClassSpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);
        // r defaults to 0
        let d: ClassSpec = serde_json::from_str(r#"{"n":2,"k":2}"#).unwrap();
        assert_eq!(d, ClassSpec::new(2, 2, 0).unwrap());
        assert!(serde_json::from_str::<ClassSpec>(r#"{"n":2,"k":2,"r":5}"#).is_err());
    }
}

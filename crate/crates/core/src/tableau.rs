//! Standard skew Young tableaux, their reading words, and the conjugate and
//! rotated-complement symmetries.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Partition, SkewShape};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A standard filling of a skew shape: the boxes hold `1..=n` exactly once and
/// entries increase along rows and down columns.
///
/// `rows[i]` lists the fill of row `i+1` left to right, inner boxes omitted.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} fill rows for a {}-row shape",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i + 1)
                )));
            }
        }
        let t = SkewTableau { shape, rows };
        t.check_standard()?;
        Ok(t)
    }

    /// Standard tableau of a straight shape given by its fill rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        SkewTableau::new(SkewShape::straight(outer), rows)
    }

    fn check_standard(&self) -> Result<()> {
        let n = self.shape.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidTableau(format!(
                        "entries are not a permutation of 1..={n}"
                    )));
                }
                seen[e] = true;
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(format!("row {} not increasing", i + 1)));
            }
        }
        for i in 1..self.shape.rows() {
            let lo = self.shape.inner().part(i) + 1;
            for j in self.shape.inner().part(i + 1) + 1..=self.shape.outer().part(i + 1) {
                if j >= lo && j <= self.shape.outer().part(i) {
                    let above = self.entry(i, j);
                    let below = self.entry(i + 1, j);
                    if above >= below {
                        return Err(Error::InvalidTableau(format!(
                            "column {j} not increasing between rows {i} and {}",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry in box `(i, j)` (1-based, box must be in the shape).
    pub fn entry(&self, i: usize, j: usize) -> usize {
        debug_assert!(self.shape.contains_box(i, j));
        self.rows[i - 1][j - 1 - self.shape.inner().part(i)]
    }

    /// Box holding value `v`.
    pub fn position_of(&self, v: usize) -> Option<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == v) {
                return Some((i + 1, self.shape.inner().part(i + 1) + 1 + c));
            }
        }
        None
    }

    /// The reading word: rows concatenated bottom to top, each left to right.
    pub fn reading_word(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            word.extend_from_slice(row);
        }
        Permutation::new(word).expect("standard fill reads to a permutation")
    }

    /// The unique tableau of `shape` whose reading word is `word`.
    pub fn from_reading_word(shape: &SkewShape, word: &Permutation) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::LengthMismatch {
                want: shape.size(),
                got: word.len(),
            });
        }
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(shape.rows());
        let mut pos = 0;
        for i in (1..=shape.rows()).rev() {
            let len = shape.row_len(i);
            rows.push(word.entries()[pos..pos + len].to_vec());
            pos += len;
        }
        rows.reverse();
        SkewTableau::new(shape.clone(), rows)
    }

    /// Conjugate tableau: entry `(i, j)` moves to `(j, i)`.
    pub fn conjugate(&self) -> SkewTableau {
        let cshape = self.shape.conjugate();
        let mut rows: Vec<Vec<usize>> = (1..=cshape.rows())
            .map(|i| Vec::with_capacity(cshape.row_len(i)))
            .collect();
        for j in 1..=cshape.rows() {
            for i in 1..=self.shape.rows() {
                if self.shape.contains_box(i, j) {
                    rows[j - 1].push(self.entry(i, j));
                }
            }
        }
        SkewTableau {
            shape: cshape,
            rows,
        }
    }

    /// Rotated-complement: rotate the diagram 180° and replace entry `v` by
    /// `n + 1 - v`.  The reading word of the result is the reverse-complement
    /// of the reading word of `self`.
    pub fn rotate_complement(&self) -> SkewTableau {
        let n = self.size();
        let rshape = self.shape.rotate();
        let m = self.shape.rows();
        let rows: Vec<Vec<usize>> = (1..=m)
            .map(|i| {
                let src = m + 1 - i;
                self.rows[src - 1].iter().rev().map(|&v| n + 1 - v).collect()
            })
            .collect();
        SkewTableau {
            shape: rshape,
            rows,
        }
    }
}

impl TryFrom<RawTableau> for SkewTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        SkewTableau::new(raw.shape, raw.rows)
    }
}

impl From<SkewTableau> for RawTableau {
    fn from(t: SkewTableau) -> Self {
        RawTableau {
            shape: t.shape,
            rows: t.rows,
        }
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        for i in 1..=self.shape.rows() {
            if i > 1 {
                writeln!(f)?;
            }
            for j in 1..=self.shape.outer().part(i) {
                if j > 1 {
                    write!(f, " ")?;
                }
                if self.shape.contains_box(i, j) {
                    write!(f, "{:>width$}", self.entry(i, j))?;
                } else {
                    write!(f, "{:>width$}", "·")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewTableau({} ; {:?})", self.shape, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::shape;

    fn fig1() -> SkewTableau {
        SkewTableau::new(
            shape(&[7, 6, 5, 4, 3], &[4, 3, 2, 1]),
            vec![
                vec![2, 3, 6],
                vec![1, 5, 9],
                vec![4, 11, 12],
                vec![8, 13, 15],
                vec![7, 10, 14],
            ],
        )
        .unwrap()
    }

    #[test]
    fn reading_word_examples() {
        let want: Vec<usize> = vec![7, 10, 14, 8, 13, 15, 4, 11, 12, 1, 5, 9, 2, 3, 6];
        assert_eq!(fig1().reading_word().entries(), &want[..]);

        let t = SkewTableau::straight(vec![vec![1, 3, 5], vec![2, 6, 7], vec![4, 8, 9]]).unwrap();
        assert_eq!(t.reading_word().to_string(), "489267135");

        let single = SkewTableau::straight(vec![vec![1]]).unwrap();
        assert_eq!(single.reading_word().to_string(), "1");
    }

    #[test]
    fn from_reading_word_round_trip() {
        let t = fig1();
        let back = SkewTableau::from_reading_word(t.shape(), &t.reading_word()).unwrap();
        assert_eq!(back, t);
        // a word that breaks a column constraint is rejected
        let bad = Permutation::new(vec![1, 2, 3, 4]).unwrap();
        assert!(SkewTableau::from_reading_word(&shape(&[2, 2], &[]), &bad).is_err());
    }

    #[test]
    fn standardness_validation() {
        assert!(SkewTableau::straight(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SkewTableau::straight(vec![vec![2, 1]]).is_err());
        assert!(SkewTableau::straight(vec![vec![1, 3], vec![2, 2]]).is_err());
        assert!(SkewTableau::straight(vec![vec![3, 4], vec![1, 2]]).is_err());
    }

    #[test]
    fn conjugate_is_involution() {
        let t = fig1();
        assert_eq!(t.conjugate().conjugate(), t);
        let single = SkewTableau::straight(vec![vec![1]]).unwrap();
        assert_eq!(single.conjugate(), single);
    }

    #[test]
    fn rotate_complement_examples() {
        let single = SkewTableau::straight(vec![vec![1]]).unwrap();
        assert_eq!(single.rotate_complement(), single);

        let row = SkewTableau::straight(vec![vec![1, 2]]).unwrap();
        assert_eq!(row.rotate_complement(), row);

        let t = fig1();
        assert_eq!(
            t.rotate_complement().reading_word(),
            t.reading_word().reverse_complement()
        );
        assert_eq!(t.rotate_complement().rotate_complement(), t);
    }

    #[test]
    fn serde_tableau() {
        let t = SkewTableau::new(shape(&[3, 2], &[2]), vec![vec![1], vec![2, 3]]).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(
            js,
            r#"{"shape":{"outer":[3,2],"inner":[2]},"rows":[[1],[2,3]]}"#
        );
        let back: SkewTableau = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
        // non-standard fill rejected on deserialization
        let bad = r#"{"shape":{"outer":[2],"inner":[]},"rows":[[2,1]]}"#;
        assert!(serde_json::from_str::<SkewTableau>(bad).is_err());
    }
}

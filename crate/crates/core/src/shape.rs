//! Integer partitions and skew shapes.
//!
//! Partitions are stored with trailing zeros stripped.  Skew shapes are pairs
//! `outer/inner` with `inner` contained in `outer`; rows are numbered from 1
//! at the top (English notation) and row `i` occupies columns
//! `inner[i]+1 ..= outer[i]`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `⟨base^reps, tail⟩`, e.g. `rectangle(3, 4, 1)` is `⟨3,3,3,3,1⟩`.
    pub fn rectangle_with_tail(base: usize, reps: usize, tail: usize) -> Self {
        let mut parts = vec![base; reps];
        if tail > 0 {
            parts.push(tail);
        }
        debug_assert!(tail <= base || reps == 0);
        Partition { parts }
    }

    /// The staircase `⟨top, top-1, ..., 1⟩` (empty when `top = 0`).
    pub fn staircase(top: usize) -> Self {
        Partition {
            parts: (1..=top).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row `i`, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Componentwise containment of Young diagrams, padding with zeros.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Reflection through the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A skew shape `outer/inner`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape", into = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawSkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows of the outer partition.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of boxes in row `i` (1-based).
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    /// Number of boxes of the skew diagram.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// True iff box `(i, j)` (1-based row/column) lies in the skew diagram.
    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j > self.inner.part(i) && j <= self.outer.part(i)
    }

    /// Height of column `j`.
    pub fn col_len(&self, j: usize) -> usize {
        (1..=self.rows()).filter(|&i| self.contains_box(i, j)).count()
    }

    /// Overlap (number of shared columns) between rows `i` and `i+1`.
    pub fn overlap(&self, i: usize) -> usize {
        let lo = self.inner.part(i) + 1;
        let hi = self.outer.part(i + 1);
        hi.saturating_sub(lo - 1).min(self.row_len(i)).min(self.row_len(i + 1))
    }

    /// True iff the diagram contains a 2x2 square of boxes, i.e. is not
    /// contained in a ribbon.
    pub fn contains_square(&self) -> bool {
        (1..self.rows()).any(|i| self.overlap(i) >= 2)
    }

    /// Conjugate shape `(outer/inner)' = outer'/inner'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// The 180°-rotated diagram, re-anchored at the top-left corner.
    ///
    /// Rotation is an involution on shapes whose bottom row starts in column
    /// one and whose first row is nonempty; every basic shape qualifies.
    pub fn rotate(&self) -> SkewShape {
        let m = self.rows();
        let width = self.outer.part(1);
        let outer: Vec<usize> = (1..=m).map(|i| width - self.inner.part(m + 1 - i)).collect();
        let inner: Vec<usize> = (1..=m).map(|i| width - self.outer.part(m + 1 - i)).collect();
        SkewShape {
            outer: Partition::new(outer).expect("rotated outer is a partition"),
            inner: Partition::new(inner).expect("rotated inner is a partition"),
        }
    }

    /// Whether the shape is *basic*: its rows form a connected chain in which
    /// consecutive rows share at least a corner, no row is empty, and the
    /// bottom row starts in column one.  Equivalently, the north-west boundary
    /// of the skew diagram contains the entire south-east boundary of the
    /// inner partition.
    pub fn is_basic(&self) -> bool {
        let m = self.rows();
        if m == 0 {
            return true;
        }
        if self.inner.part(m) != 0 {
            return false;
        }
        for i in 1..=m {
            if self.row_len(i) == 0 {
                return false;
            }
        }
        // at least corner-touching at every row boundary
        (1..m).all(|i| self.outer.part(i + 1) >= self.inner.part(i))
    }

    /// Canonical basic shape with the same multiset of reading words.
    ///
    /// The reading-word constraints of a skew shape depend only on the row
    /// lengths and the column overlaps of consecutive nonempty rows, so we
    /// drop empty rows and rebuild the rows bottom-up, anchoring the bottom
    /// row at column one and giving each consecutive pair its original
    /// overlap (a zero overlap becomes a shared corner).  Idempotent.
    pub fn normalize(&self) -> SkewShape {
        // (length, overlap-with-next-nonempty-row) for each nonempty row
        let mut rows: Vec<(usize, usize)> = Vec::new(); // (start, end) columns
        for i in 1..=self.rows() {
            if self.row_len(i) > 0 {
                rows.push((self.inner.part(i) + 1, self.outer.part(i)));
            }
        }
        if rows.is_empty() {
            return SkewShape::straight(Partition::empty());
        }
        let overlaps: Vec<usize> = rows
            .windows(2)
            .map(|w| {
                let (s_up, _) = w[0];
                let (_, e_down) = w[1];
                (e_down + 1).saturating_sub(s_up)
            })
            .collect();
        // rebuild bottom-up
        let t = rows.len();
        let mut start = vec![0usize; t];
        let mut end = vec![0usize; t];
        let len = |i: usize| rows[i].1 - rows[i].0 + 1;
        start[t - 1] = 1;
        end[t - 1] = len(t - 1);
        for i in (0..t - 1).rev() {
            start[i] = end[i + 1] + 1 - overlaps[i];
            end[i] = start[i] + len(i) - 1;
        }
        let outer = Partition::new(end).expect("rebuilt outer");
        let inner = Partition::new(start.iter().map(|s| s - 1).collect()).expect("rebuilt inner");
        SkewShape { outer, inner }
    }
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(Partition::new(raw.outer)?, Partition::new(raw.inner)?)
    }
}

impl From<SkewShape> for RawSkewShape {
    fn from(s: SkewShape) -> Self {
        RawSkewShape {
            outer: s.outer.into(),
            inner: s.inner.into(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
pub(crate) fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(
        Partition::new(outer.to_vec()).unwrap(),
        Partition::new(inner.to_vec()).unwrap(),
    )
    .unwrap()
}

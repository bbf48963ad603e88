//! Exhaustive generators and brute-force counting oracles.
//!
//! Everything here is ground truth for the closed-form counts and bijections
//! elsewhere in the crate: tableaux are generated by depth-first placement of
//! the values `1..=n` into minimal legal boxes, which visits each standard
//! tableau exactly once in increasing lexicographic order of the top-down
//! row-reading of the fill.

use crate::class::ClassSpec;
use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Partition, SkewShape};
use crate::tableau::SkewTableau;
use num_traits::Zero;
use serde::Serialize;

/// Default refusal bound for exhaustive enumeration, in boxes.
pub const DEFAULT_MAX_BOXES: usize = 16;

fn check_bound(boxes: usize, bound: usize) -> Result<()> {
    if boxes > bound {
        Err(Error::BoundExceeded { boxes, bound })
    } else {
        Ok(())
    }
}

/// Iterator over all standard Young tableaux of a skew shape.
pub struct SytIter {
    shape: SkewShape,
    row_lens: Vec<usize>,
    // choice stack: row picked for each value placed so far
    stack: Vec<usize>,
    // boxes already filled in each row
    filled: Vec<usize>,
    // fill[row][offset] = value
    fill: Vec<Vec<usize>>,
    total: usize,
    exhausted: bool,
}

impl SytIter {
    fn new(shape: SkewShape) -> Self {
        let rows = shape.rows();
        let row_lens: Vec<usize> = (1..=rows).map(|i| shape.row_len(i)).collect();
        let total = shape.size();
        SytIter {
            fill: row_lens.iter().map(|&l| vec![0; l]).collect(),
            row_lens,
            stack: Vec::with_capacity(total),
            filled: vec![0; rows],
            shape,
            total,
            exhausted: false,
        }
    }

    /// Row `row` (0-based) can accept the next value iff it has a free box
    /// whose upper neighbour, when inside the shape, is already filled.
    fn can_place(&self, row: usize) -> bool {
        if self.filled[row] == self.row_lens[row] {
            return false;
        }
        let col = self.shape.inner().part(row + 1) + 1 + self.filled[row];
        if row == 0 {
            return true;
        }
        let inner_above = self.shape.inner().part(row);
        if col <= inner_above {
            return true; // box above is an inner box
        }
        // box above is in the shape (col <= outer(row) always holds here)
        self.filled[row - 1] >= col - inner_above
    }

    fn place(&mut self, row: usize) {
        let v = self.stack.len() + 1;
        self.fill[row][self.filled[row]] = v;
        self.filled[row] += 1;
        self.stack.push(row);
    }

    fn unplace(&mut self) -> usize {
        let row = self.stack.pop().expect("nonempty stack");
        self.filled[row] -= 1;
        row
    }

    fn snapshot(&self) -> SkewTableau {
        SkewTableau::new(self.shape.clone(), self.fill.clone())
            .expect("generator produces standard tableaux")
    }
}

impl Iterator for SytIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        if self.exhausted {
            return None;
        }
        // on re-entry, backtrack off the previously yielded complete fill
        let mut resume_from = if self.stack.len() == self.total && self.total > 0 {
            Some(self.unplace() + 1)
        } else {
            None
        };
        loop {
            if let Some(start) = resume_from.take() {
                // advance the deepest choice
                let mut advanced = false;
                for row in start..self.fill.len() {
                    if self.can_place(row) {
                        self.place(row);
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    if self.stack.is_empty() {
                        self.exhausted = true;
                        return None;
                    }
                    resume_from = Some(self.unplace() + 1);
                    continue;
                }
            } else {
                // descend greedily
                if self.stack.len() == self.total {
                    if self.total == 0 {
                        self.exhausted = true;
                    }
                    return Some(self.snapshot());
                }
                let mut placed = false;
                for row in 0..self.fill.len() {
                    if self.can_place(row) {
                        self.place(row);
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    // cannot happen for a valid skew shape mid-descent
                    if self.stack.is_empty() {
                        self.exhausted = true;
                        return None;
                    }
                    resume_from = Some(self.unplace() + 1);
                }
            }
        }
    }
}

/// Every standard tableau of `shape`, in a fixed deterministic order, under
/// the default box bound.
pub fn all_syt(shape: &SkewShape) -> Result<SytIter> {
    all_syt_bounded(shape, DEFAULT_MAX_BOXES)
}

/// As [`all_syt`] with an explicit bound.
pub fn all_syt_bounded(shape: &SkewShape, bound: usize) -> Result<SytIter> {
    check_bound(shape.size(), bound)?;
    Ok(SytIter::new(shape.clone()))
}

/// Reading words of all standard tableaux of the class shape.
pub fn all_class(c: &ClassSpec) -> Result<impl Iterator<Item = Permutation>> {
    all_class_bounded(c, DEFAULT_MAX_BOXES)
}

/// As [`all_class`] with an explicit bound.
pub fn all_class_bounded(
    c: &ClassSpec,
    bound: usize,
) -> Result<impl Iterator<Item = Permutation>> {
    Ok(all_syt_bounded(&c.shape(), bound)?.map(|t| t.reading_word()))
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let word = current.take()?;
        let result = Permutation::new(word.clone()).expect("valid permutation");
        // next lexicographic word
        let mut w = word;
        let mut i = n;
        while i > 1 && w[i - 2] >= w[i - 1] {
            i -= 1;
        }
        if i > 1 {
            let mut j = n;
            while w[j - 1] <= w[i - 2] {
                j -= 1;
            }
            w.swap(i - 2, j - 1);
            w[i - 1..].reverse();
            current = Some(w);
        }
        Some(result)
    })
}

/// Every partition contained in `mu`, including the empty partition and `mu`
/// itself, in lexicographic order of padded part lists.
pub fn subpartitions(mu: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn rec(mu: &Partition, row: usize, cap: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > mu.len() || cap == 0 {
            out.push(Partition::new(parts.clone()).expect("weakly decreasing by construction"));
            return;
        }
        let limit = cap.min(mu.part(row));
        for a in 0..=limit {
            if a == 0 {
                out.push(Partition::new(parts.clone()).expect("valid"));
            } else {
                parts.push(a);
                rec(mu, row + 1, a, parts, out);
                parts.pop();
            }
        }
    }
    rec(mu, 1, usize::MAX, &mut parts, &mut out);
    out
}

/// Oracle count of tableaux of `shape` whose reading words avoid `pattern`.
pub fn count_avoiders(shape: &SkewShape, pattern: &Permutation) -> Result<BigCount> {
    count_avoiders_bounded(shape, pattern, DEFAULT_MAX_BOXES)
}

/// As [`count_avoiders`] with an explicit bound.
pub fn count_avoiders_bounded(
    shape: &SkewShape,
    pattern: &Permutation,
    bound: usize,
) -> Result<BigCount> {
    let mut count = BigCount::zero();
    for t in all_syt_bounded(shape, bound)? {
        if t.reading_word().avoids(pattern) {
            count += 1u32;
        }
    }
    Ok(count)
}

/// Oracle count of class members avoiding `pattern`.
pub fn count_class_avoiders(c: &ClassSpec, pattern: &Permutation) -> Result<BigCount> {
    count_class_avoiders_bounded(c, pattern, DEFAULT_MAX_BOXES)
}

/// As [`count_class_avoiders`] with an explicit bound.
pub fn count_class_avoiders_bounded(
    c: &ClassSpec,
    pattern: &Permutation,
    bound: usize,
) -> Result<BigCount> {
    count_avoiders_bounded(&c.shape(), pattern, bound)
}

/// Filters a stream of permutations down to the involutions.
pub fn involutions_in<I>(stream: I) -> impl Iterator<Item = Permutation>
where
    I: IntoIterator<Item = Permutation>,
{
    stream.into_iter().filter(|w| w.is_involution())
}

/// All basic skew shapes with between 1 and `max_boxes` boxes.
///
/// A basic shape is determined by its row lengths (bottom-up composition) and
/// the overlap of each consecutive row pair, so we enumerate those directly.
pub fn basic_shapes(max_boxes: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    // lens: row lengths top-down; overlaps[i] between rows i and i+1
    fn rec(
        remaining: usize,
        lens: &mut Vec<usize>,
        overlaps: &mut Vec<usize>,
        out: &mut Vec<SkewShape>,
    ) {
        if !lens.is_empty() {
            out.push(rebuild(lens, overlaps));
        }
        for len in 1..=remaining {
            if lens.is_empty() {
                lens.push(len);
                rec(remaining - len, lens, overlaps, out);
                lens.pop();
            } else {
                let prev = *lens.last().unwrap();
                for ov in 0..=prev.min(len) {
                    lens.push(len);
                    overlaps.push(ov);
                    rec(remaining - len, lens, overlaps, out);
                    overlaps.pop();
                    lens.pop();
                }
            }
        }
    }
    fn rebuild(lens: &[usize], overlaps: &[usize]) -> SkewShape {
        let t = lens.len();
        let mut start = vec![0usize; t];
        let mut end = vec![0usize; t];
        start[t - 1] = 1;
        end[t - 1] = lens[t - 1];
        for i in (0..t - 1).rev() {
            start[i] = end[i + 1] + 1 - overlaps[i];
            end[i] = start[i] + lens[i] - 1;
        }
        SkewShape::new(
            Partition::new(end).expect("outer"),
            Partition::new(start.iter().map(|s| s - 1).collect()).expect("inner"),
        )
        .expect("rebuilt basic shape")
    }
    let mut lens = Vec::new();
    let mut overlaps = Vec::new();
    rec(max_boxes, &mut lens, &mut overlaps, &mut out);
    out
}

/// How a reported count was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Oracle,
    Formula,
    Bijection,
}

impl std::fmt::Display for CountMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountMethod::Oracle => write!(f, "oracle"),
            CountMethod::Formula => write!(f, "formula"),
            CountMethod::Bijection => write!(f, "bijection"),
        }
    }
}

/// The input a count refers to: a bare shape or a class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountInput {
    Shape(SkewShape),
    Class(ClassSpec),
}

impl std::fmt::Display for CountInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountInput::Shape(s) => write!(f, "{s}"),
            CountInput::Class(c) => write!(f, "{c}"),
        }
    }
}

/// One counting result.  Counts from any two methods on the same input must
/// agree; `experimental` marks counts whose reduction is certified only by
/// oracle equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountReport {
    pub input: CountInput,
    pub pattern: Permutation,
    pub method: CountMethod,
    pub count: BigCount,
    pub experimental: bool,
}

impl Serialize for CountReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("CountReport", 5)?;
        st.serialize_field("input", &self.input)?;
        st.serialize_field("pattern", &self.pattern)?;
        st.serialize_field("method", &self.method)?;
        // exact decimal regardless of magnitude
        st.serialize_field("count", &self.count.to_string())?;
        if self.experimental {
            st.serialize_field("experimental", &true)?;
        } else {
            st.skip_field("experimental")?;
        }
        st.end()
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
    fn single_row_and_tiny_shapes() {
        let ts: Vec<_> = all_syt(&shape(&[2], &[])).unwrap().collect();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1, 2]]);

        let ts: Vec<_> = all_syt(&shape(&[3, 2], &[2])).unwrap().collect();
        assert_eq!(ts.len(), 3);
        let words: Vec<String> = ts.iter().map(|t| t.reading_word().to_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["123", "132", "231"]);

        let ts: Vec<_> = all_syt(&shape(&[2, 2], &[])).unwrap().collect();
        assert_eq!(ts.len(), 2);

        // empty shape: exactly one (empty) tableau
        let ts: Vec<_> = all_syt(&shape(&[], &[])).unwrap().collect();
        assert_eq!(ts.len(), 1);
    }

    #[test]
    fn generation_order_is_deterministic_and_lex() {
        for s in basic_shapes(6) {
            let fills: Vec<Vec<usize>> = all_syt(&s)
                .unwrap()
                .map(|t| t.rows().iter().flatten().copied().collect())
                .collect();
            let again: Vec<Vec<usize>> = all_syt(&s)
                .unwrap()
                .map(|t| t.rows().iter().flatten().copied().collect())
                .collect();
            assert_eq!(fills, again);
            for w in fills.windows(2) {
                assert!(w[0] < w[1], "fills out of order for {s}");
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let s = shape(&[5, 4, 3, 2, 1], &[]);
        assert!(matches!(
            all_syt_bounded(&s, 8),
            Err(Error::BoundExceeded { boxes: 15, bound: 8 })
        ));
        assert!(all_syt_bounded(&s, 15).is_ok());
    }

    #[test]
    fn class_enumeration_examples() {
        let c = ClassSpec::new(1, 2, 0).unwrap();
        let words: Vec<String> = all_class(&c).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["12"]);

        let c = ClassSpec::new(2, 2, 0).unwrap();
        let mut words: Vec<String> = all_class(&c).unwrap().map(|w| w.to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["1324", "1423", "2314", "2413", "3412"]);

        let c = ClassSpec::new(1, 2, 1).unwrap();
        let mut words: Vec<String> = all_class(&c).unwrap().map(|w| w.to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["213", "312"]);
    }

    #[test]
    fn class_matches_membership_filter() {
        for (n, k, r) in [(1, 1, 0), (3, 1, 0), (2, 2, 0), (1, 2, 1), (2, 2, 1), (1, 3, 2), (2, 3, 1), (1, 4, 3)] {
            let c = ClassSpec::new(n, k, r).unwrap();
            let mut from_shape: Vec<Permutation> = all_class(&c).unwrap().collect();
            from_shape.sort();
            // duplicate-free
            assert!(from_shape.windows(2).all(|w| w[0] != w[1]));
            let filtered: Vec<Permutation> = all_permutations(c.word_len())
                .filter(|w| c.is_member(w).unwrap())
                .collect();
            assert_eq!(from_shape, filtered, "class {c}");
        }
    }

    #[test]
    fn subpartition_examples() {
        assert_eq!(subpartitions(&Partition::empty()).len(), 1);
        let mu = Partition::new(vec![2, 1]).unwrap();
        let subs = subpartitions(&mu);
        assert_eq!(subs.len(), 5);
        // staircases give Catalan numbers
        let catalans = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for n in 0..=7usize {
            let stair = Partition::staircase(n.saturating_sub(1));
            assert_eq!(subpartitions(&stair).len(), catalans[n], "n={n}");
        }
    }

    #[test]
    fn avoider_count_examples() {
        let c213 = count_avoiders(&shape(&[3, 2], &[2]), &perm("213")).unwrap();
        assert_eq!(c213, BigCount::from(3u32));

        // pattern 1 is contained in any nonempty reading word
        let c1 = count_avoiders(&shape(&[2, 1], &[]), &perm("1")).unwrap();
        assert_eq!(c1, BigCount::zero());

        let c = count_avoiders(&shape(&[3, 3, 3], &[]), &perm("213")).unwrap();
        assert_eq!(c, BigCount::from(1u32));
    }

    #[test]
    fn class_avoider_examples() {
        let a4 = ClassSpec::new(2, 2, 0).unwrap();
        assert_eq!(
            count_class_avoiders(&a4, &perm("1234")).unwrap(),
            BigCount::from(5u32)
        );
        for n in 1..=3usize {
            let c = ClassSpec::new(n, 3, 0).unwrap();
            assert_eq!(
                count_class_avoiders(&c, &perm("123")).unwrap(),
                BigCount::zero()
            );
        }
        let a6 = ClassSpec::new(3, 2, 0).unwrap();
        assert_eq!(
            count_class_avoiders(&a6, &perm("1234")).unwrap(),
            BigCount::from(42u32)
        );
    }

    #[test]
    fn involution_filter() {
        let invs: Vec<String> = involutions_in(all_permutations(3))
            .map(|w| w.to_string())
            .collect();
        assert_eq!(invs, vec!["123", "132", "213", "321"]);

        let c = ClassSpec::new(2, 2, 0).unwrap();
        let mut invs: Vec<String> = involutions_in(all_class(&c).unwrap())
            .map(|w| w.to_string())
            .collect();
        invs.sort();
        assert_eq!(invs, vec!["1324", "2413", "3412"]);
    }

    #[test]
    fn basic_shape_generator_agrees_with_flag() {
        let shapes = basic_shapes(5);
        // duplicate-free
        let mut seen = std::collections::HashSet::new();
        for s in &shapes {
            assert!(s.is_basic(), "{s} not basic");
            assert!(s.size() >= 1 && s.size() <= 5);
            assert!(seen.insert(s.clone()));
        }
        // cross-check count against a window scan of all shapes
        let mut expected = 0usize;
        for outer in subpartitions(&Partition::new(vec![5, 5, 5, 5, 5]).unwrap()) {
            for inner in subpartitions(&outer) {
                let s = SkewShape::new(outer.clone(), inner).unwrap();
                if s.size() >= 1 && s.size() <= 5 && s.is_basic() {
                    expected += 1;
                }
            }
        }
        assert_eq!(shapes.len(), expected);
    }

    #[test]
    fn count_report_json() {
        let report = CountReport {
            input: CountInput::Class(ClassSpec::new(2, 2, 0).unwrap()),
            pattern: perm("1234"),
            method: CountMethod::Oracle,
            count: BigCount::from(5u32),
            experimental: false,
        };
        let js = serde_json::to_string(&report).unwrap();
        assert_eq!(
            js,
            r#"{"input":{"class":{"n":2,"k":2,"r":0}},"pattern":[1,2,3,4],"method":"oracle","count":"5"}"#
        );
    }
}

//! Closed-form and recursive counts: hook lengths, Catalan numbers, the
//! rectangular-class formulas, and the shape-indexed counts for the six
//! patterns of length three.
//!
//! All arithmetic is exact over unbounded integers; nothing here touches
//! floating point.

use crate::error::{Error, Result};
use crate::shape::{Partition, SkewShape};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Exact unbounded nonnegative count.
pub type BigCount = BigUint;

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigCount {
    let mut acc = BigCount::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` by multiplicative accumulation.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigCount {
    binomial(2 * n, n) / (n + 1)
}

/// Number of standard Young tableaux of a straight shape, by the hook-length
/// formula.
pub fn hook_count(lam: &Partition) -> BigCount {
    let n = lam.size();
    let conj = lam.conjugate();
    let mut hooks = BigCount::one();
    for i in 1..=lam.len() {
        for j in 1..=lam.part(i) {
            let arm = lam.part(i) - j;
            let leg = conj.part(j) - i;
            hooks *= arm + leg + 1;
        }
    }
    factorial(n) / hooks
}

/// Number of standard Young tableaux of a skew shape, by recursion over the
/// removable corners holding the maximal entry.  Deliberately independent of
/// both the hook-length formula and the exhaustive generator.
pub fn skew_count(shape: &SkewShape) -> BigCount {
    fn rec(
        outer: &[usize],
        inner: &Partition,
        memo: &mut HashMap<Vec<usize>, BigCount>,
    ) -> BigCount {
        let boxes: usize = outer
            .iter()
            .enumerate()
            .map(|(i, &o)| o - inner.part(i + 1))
            .sum();
        if boxes == 0 {
            return BigCount::one();
        }
        if let Some(v) = memo.get(outer) {
            return v.clone();
        }
        let mut total = BigCount::zero();
        for i in 0..outer.len() {
            let can_remove = outer[i] > inner.part(i + 1)
                && (i + 1 == outer.len() || outer[i] > outer[i + 1]);
            if can_remove {
                let mut smaller = outer.to_vec();
                smaller[i] -= 1;
                while smaller.last() == Some(&0) {
                    smaller.pop();
                }
                total += rec(&smaller, inner, memo);
            }
        }
        memo.insert(outer.to_vec(), total.clone());
        total
    }
    let mut memo = HashMap::new();
    rec(shape.outer().parts(), shape.inner(), &mut memo)
}

/// `|A_{2n}(1234)| = 2 (3n)! / (n! (n+1)! (n+2)!)`, the number of up-down
/// alternating permutations of length `2n` with no four-term increasing
/// subsequence.  Agrees with `hook_count(⟨3^n⟩)`.
pub fn count_a2n_1234(n: usize) -> BigCount {
    BigCount::from(2u32) * factorial(3 * n) / (factorial(n) * factorial(n + 1) * factorial(n + 2))
}

/// `|A_{2n+1}(1234)| = 16 (3n)! / ((n-1)! (n+1)! (n+3)!)` for `n >= 1`.
/// Agrees with `hook_count(⟨3^{n-1}, 2, 1⟩)`.
pub fn count_a2n1_1234(n: usize) -> BigCount {
    assert!(n >= 1, "defined for n >= 1");
    BigCount::from(16u32) * factorial(3 * n)
        / (factorial(n - 1) * factorial(n + 1) * factorial(n + 3))
}

/// Number of partitions contained in `mu`, by dynamic programming (so large
/// inner shapes do not require materializing the subpartitions).
pub fn count_subpartitions(mu: &Partition) -> BigCount {
    fn rec(
        mu: &Partition,
        row: usize,
        cap: usize,
        memo: &mut HashMap<(usize, usize), BigCount>,
    ) -> BigCount {
        if row > mu.len() || cap == 0 || mu.part(row) == 0 {
            return BigCount::one();
        }
        let cap = cap.min(mu.part(row));
        if let Some(v) = memo.get(&(row, cap)) {
            return v.clone();
        }
        // first part of the remainder is anything in 0..=cap
        let mut total = BigCount::one(); // the choice 0 ends the partition
        for a in 1..=cap {
            total += rec(mu, row + 1, a, memo);
        }
        memo.insert((row, cap), total.clone());
        total
    }
    let mut memo = HashMap::new();
    rec(mu, 1, usize::MAX, &mut memo)
}

fn require_basic(shape: &SkewShape) -> Result<()> {
    if shape.is_basic() {
        Ok(())
    } else {
        Err(Error::NonBasicShape)
    }
}

/// Number of tableaux of a basic shape whose reading words avoid 213: the
/// number of partitions contained in the inner shape.
pub fn count_213(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    Ok(count_subpartitions(shape.inner()))
}

/// The partition `⟨λ_1 - λ_m, ..., λ_1 - λ_2⟩` governing 132-avoidance; it is
/// the inner shape of the rotated diagram.
pub fn rotated_inner(shape: &SkewShape) -> Partition {
    let lam = shape.outer();
    let m = lam.len();
    if m == 0 {
        return Partition::empty();
    }
    let width = lam.part(1);
    Partition::new((2..=m).rev().map(|i| width - lam.part(i)).collect())
        .expect("weakly decreasing differences")
}

/// Number of tableaux of a basic shape whose reading words avoid 132.
pub fn count_132(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    Ok(count_subpartitions(&rotated_inner(shape)))
}

/// Number of tableaux of a basic shape whose reading words avoid 312: zero
/// when the shape contains a 2x2 square, otherwise the 213 count carried
/// through conjugation (the subpartition count of the inner shape).
pub fn count_312(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    if shape.contains_square() {
        return Ok(BigCount::zero());
    }
    Ok(count_subpartitions(shape.inner()))
}

/// Number of tableaux of a basic shape whose reading words avoid 231: zero
/// when the shape contains a 2x2 square, otherwise the 132 count carried
/// through conjugation.
pub fn count_231(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    if shape.contains_square() {
        return Ok(BigCount::zero());
    }
    Ok(count_subpartitions(&rotated_inner(shape)))
}

/// Adjacent-position constraints on a reading word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Step {
    Ascent,
    Descent,
    Free,
}

/// Signature of a ribbon-contained shape: entry `t` constrains word positions
/// `t+1` and `t+2` (0-based `t`).
fn ribbon_signature(shape: &SkewShape) -> Vec<Step> {
    let mut sig = Vec::with_capacity(shape.size().saturating_sub(1));
    for i in (1..=shape.rows()).rev() {
        if i < shape.rows() {
            // boundary between row i+1 (already emitted) and row i
            sig.push(if shape.overlap(i) == 1 {
                Step::Descent
            } else {
                Step::Free
            });
        }
        for _ in 1..shape.row_len(i) {
            sig.push(Step::Ascent);
        }
    }
    sig
}

/// Count permutations matching `sig` that avoid 123, by depth-first
/// construction with pruning.
///
/// A prefix stays 123-avoiding iff no new value exceeds the smallest value
/// that already has a smaller value before it; tracking that value and the
/// prefix minimum is enough state.
fn count_123_signature(n: usize, sig: &[Step]) -> BigCount {
    fn rec(
        remaining: &mut Vec<usize>,
        last: usize,
        min_seen: usize,
        second: usize, // smallest "middle of an ascent" so far
        sig: &[Step],
        pos: usize,
        n: usize,
        total: &mut BigCount,
    ) {
        if pos == n {
            *total += 1u32;
            return;
        }
        for idx in 0..remaining.len() {
            let v = remaining[idx];
            if v > second {
                continue; // would complete a 123
            }
            if pos > 0 {
                let ok = match sig[pos - 1] {
                    Step::Ascent => v > last,
                    Step::Descent => v < last,
                    Step::Free => true,
                };
                if !ok {
                    continue;
                }
            }
            let new_second = if v > min_seen { second.min(v) } else { second };
            let new_min = min_seen.min(v);
            remaining.remove(idx);
            rec(remaining, v, new_min, new_second, sig, pos + 1, n, total);
            remaining.insert(idx, v);
        }
    }
    if n == 0 {
        return BigCount::one();
    }
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut total = BigCount::zero();
    rec(
        &mut remaining,
        0,
        usize::MAX,
        usize::MAX,
        sig,
        0,
        n,
        &mut total,
    );
    total
}

/// Number of tableaux of a basic shape whose reading words avoid 123.
///
/// Zero as soon as some row has three boxes.  Otherwise rows of length two
/// are slid sideways until no 2x2 square remains (which changes neither the
/// reading words nor their count), and the resulting ribbon-contained shape
/// is counted as 123-avoiding words with a prescribed ascent/descent
/// signature.
pub fn count_123(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    if (1..=shape.rows()).any(|i| shape.row_len(i) >= 3) {
        return Ok(BigCount::zero());
    }
    let mut s = shape.clone();
    loop {
        let Some(i) = (1..s.rows()).find(|&i| s.overlap(i) >= 2) else {
            break;
        };
        s = crate::bijections::slide_shape(&s, i, crate::bijections::SlideVariant::Through, 1)?;
    }
    debug_assert!(!s.contains_square());
    Ok(count_123_signature(s.size(), &ribbon_signature(&s)))
}

/// Number of tableaux of a basic shape whose reading words avoid 321.
///
/// Zero as soon as some column has three boxes.  Otherwise mirrors
/// [`count_123`] through conjugation: column shifts on the shape correspond
/// to row slides on the conjugate, and on ribbon-contained shapes the
/// conjugate's reading word is the reverse of the original.  The reduction is
/// certified against the oracle rather than by a proof.
pub fn count_321(shape: &SkewShape) -> Result<BigCount> {
    require_basic(shape)?;
    let width = shape.outer().part(1);
    if (1..=width).any(|j| shape.col_len(j) >= 3) {
        return Ok(BigCount::zero());
    }
    count_123(&shape.conjugate())
}

/// Count of class members avoiding the monotone pattern of length `len`,
/// which must be `k+1` or `k+2`.
///
/// For `len = k+1` this is the tableau count of `⟨k^n, r⟩`; for `len = k+2`
/// of `⟨(k+1)^{n-1}, k, r⟩`.
pub fn count_class_monotone(c: &crate::class::ClassSpec, len: usize) -> Result<BigCount> {
    let (n, k, r) = (c.n(), c.k(), c.r());
    if len == k + 1 {
        Ok(hook_count(&Partition::rectangle_with_tail(k, n, r)))
    } else if len == k + 2 {
        let mut parts = vec![k + 1; n - 1];
        parts.push(k);
        if r > 0 {
            parts.push(r);
        }
        Ok(hook_count(&Partition::new(parts)?))
    } else {
        Err(Error::Unsupported(format!(
            "monotone pattern length {len} not in {{k+1, k+2}} = {{{}, {}}}",
            k + 1,
            k + 2
        )))
    }
}

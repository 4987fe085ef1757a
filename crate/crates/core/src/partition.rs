//! Integer partitions and the shape-level operations performed on them.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing parts with
//! trailing zeros stripped. Equality, hashing and ordering only ever see the
//! canonical form, so `(6,0,0)` and `(6)` are the same key.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u64>),
    #[error("part exceeds the signed 64-bit range")]
    PartTooLarge,
    #[error("integer overflow in partition arithmetic")]
    Overflow,
    #[error("cannot parse partition from {0:?} (expected e.g. `4,2,1`, or `-` for the empty partition)")]
    Parse(String),
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

const PART_MAX: u64 = i64::MAX as u64;

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        if parts.first().is_some_and(|&p| p > PART_MAX) {
            return Err(PartitionError::PartTooLarge);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let p = Partition { parts };
        p.parts
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x).filter(|&s| s <= PART_MAX))
            .ok_or(PartitionError::Overflow)?;
        Ok(p)
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`.
    pub fn row(n: u64) -> Self {
        Partition::new(vec![n]).expect("single row")
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: u64) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Builds from parts already known to be canonical-compatible; trailing zeros are stripped.
    pub(crate) fn from_raw(mut parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, |λ|.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u64 {
        self.part(0)
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<u64> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_rectangle(&self) -> bool {
        !self.is_empty() && self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn is_single_row(&self) -> bool {
        self.len() == 1
    }

    pub fn is_single_column(&self) -> bool {
        !self.is_empty() && self.first() == 1
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols as u64 {
            out.push(self.parts.iter().take_while(|&&p| p > c).count() as u64);
        }
        Partition::from_raw(out)
    }

    /// Componentwise minimum `a ∧ b`.
    pub fn meet(&self, other: &Partition) -> Partition {
        Partition::from_raw(self.parts.iter().zip(&other.parts).map(|(a, b)| *a.min(b)).collect())
    }

    /// Componentwise maximum `a ∨ b`.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_raw((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// `|a Δ b|`, the number of boxes in exactly one of the two diagrams.
    pub fn sym_diff_size(&self, other: &Partition) -> u64 {
        self.size() + other.size() - 2 * self.meet(other).size()
    }

    /// Multiset union of the parts, sorted decreasingly (`a ∪ b`).
    pub fn union_sorted(&self, other: &Partition) -> Partition {
        let mut v: Vec<u64> = self.parts.iter().chain(&other.parts).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_raw(v)
    }

    pub fn checked_add(&self, other: &Partition) -> Result<Partition, PartitionError> {
        let n = self.len().max(other.len());
        let parts = (0..n)
            .map(|i| self.part(i).checked_add(other.part(i)).ok_or(PartitionError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }

    /// Componentwise sum. Panics on overflow.
    pub fn add(&self, other: &Partition) -> Partition {
        self.checked_add(other).expect("partition addition overflowed")
    }

    pub fn checked_scale(&self, k: u64) -> Result<Partition, PartitionError> {
        let parts = self
            .parts
            .iter()
            .map(|p| p.checked_mul(k).ok_or(PartitionError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }

    /// `kλ`. Panics on overflow.
    pub fn scale(&self, k: u64) -> Partition {
        self.checked_scale(k).expect("partition scaling overflowed")
    }

    /// Coordinatewise `⌊(a + b) / 2⌋`.
    pub fn half_floor(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_raw((0..n).map(|i| (self.part(i) + other.part(i)) / 2).collect())
    }

    /// Coordinatewise `⌈(a + b) / 2⌉`.
    pub fn half_ceil(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_raw((0..n).map(|i| (self.part(i) + other.part(i)).div_ceil(2)).collect())
    }

    /// Odd-indexed entries (1st, 3rd, ...) of `a ∪ b`.
    pub fn sort1(&self, other: &Partition) -> Partition {
        let u = self.union_sorted(other);
        Partition::from_raw(u.parts.iter().step_by(2).copied().collect())
    }

    /// Even-indexed entries (2nd, 4th, ...) of `a ∪ b`.
    pub fn sort2(&self, other: &Partition) -> Partition {
        let u = self.union_sorted(other);
        Partition::from_raw(u.parts.iter().skip(1).step_by(2).copied().collect())
    }

    /// `λ + (1^t)`: adds one box to each of the first `t` rows.
    pub fn add_column(&self, t: usize) -> Partition {
        let n = self.len().max(t);
        Partition::from_raw((0..n).map(|i| self.part(i) + u64::from(i < t)).collect())
    }

    /// Complement inside the `rows × cols` rectangle, rotated by 180 degrees.
    pub fn complement_in_box(&self, rows: usize, cols: u64) -> Option<Partition> {
        if self.len() > rows || self.first() > cols {
            return None;
        }
        Some(Partition::from_raw(
            (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect(),
        ))
    }

    /// Partitions obtained by adding one box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut v = self.parts.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition::from_raw(v));
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut v = self.parts.clone();
                v[i] -= 1;
                out.push(Partition::from_raw(v));
            }
        }
        out
    }

    /// All `ν ⊇ self` such that `ν / self` is a horizontal strip of `size` boxes,
    /// in lexicographically decreasing order.
    pub fn add_horizontal_strip(&self, size: u64) -> Vec<Partition> {
        let n = self.len() + 1;
        let base = self.padded(n);
        let mut out = Vec::new();
        let mut cur = base.clone();
        fn rec(i: usize, left: u64, base: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if i == base.len() {
                if left == 0 {
                    out.push(Partition::from_raw(cur.clone()));
                }
                return;
            }
            // New row i may not pass the old row i-1.
            let cap = if i == 0 {
                left
            } else {
                (base[i - 1] - base[i]).min(left)
            };
            for x in (0..=cap).rev() {
                cur[i] = base[i] + x;
                rec(i + 1, left - x, base, cur, out);
            }
            cur[i] = base[i];
        }
        rec(0, size, &base, &mut cur, &mut out);
        out
    }

    /// All `β ⊆ self` such that `self / β` is a horizontal strip of `size` boxes,
    /// in lexicographically decreasing order.
    pub fn remove_horizontal_strip(&self, size: u64) -> Vec<Partition> {
        let base = self.parts.clone();
        let mut out = Vec::new();
        let mut cur = base.clone();
        fn rec(i: usize, left: u64, base: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if i == base.len() {
                if left == 0 {
                    out.push(Partition::from_raw(cur.clone()));
                }
                return;
            }
            // Row i keeps at least the old length of row i+1.
            let next = base.get(i + 1).copied().unwrap_or(0);
            let cap = (base[i] - next).min(left);
            for x in 0..=cap {
                cur[i] = base[i] - x;
                rec(i + 1, left - x, base, cur, out);
            }
            cur[i] = base[i];
        }
        rec(0, size, &base, &mut cur, &mut out);
        out
    }
}

/// All partitions `α ⊆ bound` with `|α| = size`, each once, in lexicographically
/// decreasing order.
pub fn subpartitions_of_size(bound: &Partition, size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    if size > bound.size() {
        return out;
    }
    let b = bound.parts();
    let mut cur = Vec::with_capacity(b.len());
    fn rec(i: usize, left: u64, prev: u64, b: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_raw(cur.clone()));
            return;
        }
        if i == b.len() {
            return;
        }
        let hi = b[i].min(prev).min(left);
        for x in (1..=hi).rev() {
            // Rows after i hold at most min(x, b_j) each.
            let room: u64 = x + b[i + 1..].iter().map(|&bj| bj.min(x)).sum::<u64>();
            if room < left {
                break;
            }
            cur.push(x);
            rec(i + 1, left - x, x, b, cur, out);
            cur.pop();
        }
    }
    rec(0, size, u64::MAX, b, &mut cur, &mut out);
    out
}

/// All subpartitions of `bound` of every size, grouped by size ascending.
pub fn subpartitions(bound: &Partition) -> Vec<Partition> {
    (0..=bound.size())
        .flat_map(|s| subpartitions_of_size(bound, s))
        .collect()
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_raw(cur.clone()));
            return;
        }
        for x in (1..=left.min(max)).rev() {
            cur.push(x);
            rec(left - x, x, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of size at most `n`, size ascending then lexicographically decreasing.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions with at most `rows` parts, each at most `max_part`, listed in
/// lexicographically decreasing order.
pub fn partitions_in_box(rows: usize, max_part: u64) -> Vec<Partition> {
    let bound = Partition::rectangle(rows, max_part);
    let mut all = subpartitions(&bound);
    all.sort_by(|a, b| b.parts.cmp(&a.parts));
    all
}

/// Graded order: by size, then lexicographically increasing within a size.
/// This is the order in which expansions are listed.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `[4,2,1]`; the empty partition is `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Partition {
    /// The flag/wire text encoding: `4,2,1`, or `-` for the empty partition.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        self.parts.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = PartitionError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u64>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained { outer, inner });
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

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Number of boxes of the skew diagram in row `i` (0-based).
    pub fn row_len(&self, i: usize) -> u64 {
        self.outer.part(i) - self.inner.part(i)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(Partition::new(vec![6, 0, 0]).unwrap(), p("6"));
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn text_encoding() {
        assert_eq!(p("4,2,1").to_text(), "4,2,1");
        assert_eq!(Partition::empty().to_text(), "-");
        assert_eq!(p("4,2,1").to_string(), "[4,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(p("2,1").meet(&p("1,1")), p("1,1"));
        assert_eq!(p("3").meet(&p("2,2")), p("2"));
        assert_eq!(Partition::empty().meet(&p("3,1")), Partition::empty());
        assert_eq!(p("2").join(&p("1,1")), p("2,1"));
        assert_eq!(p("3,1").join(&p("3,1")), p("3,1"));
        assert_eq!(Partition::empty().join(&p("3,1")), p("3,1"));
    }

    #[test]
    fn sym_diff_examples() {
        assert_eq!(p("3").sym_diff_size(&p("2,1")), 2);
        assert_eq!(p("2,2").sym_diff_size(&p("2,2")), 0);
    }

    #[test]
    fn union_and_arith() {
        assert_eq!(p("2,1").union_sorted(&p("2")), p("2,2,1"));
        assert_eq!(p("3,1").union_sorted(&p("2,2")), p("3,2,2,1"));
        assert_eq!(p("3,1").union_sorted(&Partition::empty()), p("3,1"));
        assert_eq!(p("2,1").scale(2), p("4,2"));
        assert_eq!(p("2,1").add(&p("1,1")), p("3,2"));
        assert_eq!(p("2,1").scale(1), p("2,1"));
        assert_eq!(Partition::row(PART_MAX).checked_scale(3), Err(PartitionError::Overflow));
        assert_eq!(
            Partition::row(PART_MAX).checked_scale(2),
            Err(PartitionError::PartTooLarge)
        );
        assert!(Partition::row(PART_MAX).checked_add(&p("1")).is_err());
    }

    #[test]
    fn halves_and_sorts() {
        assert_eq!(p("2").sort1(&p("1,1")), p("2,1"));
        assert_eq!(p("2").sort2(&p("1,1")), p("1"));
        assert_eq!(p("2").half_floor(&p("1,1")), p("1"));
        assert_eq!(p("2").half_ceil(&p("1,1")), p("2,1"));
        let l = p("4,2,2,1");
        assert_eq!(l.sort1(&l), l);
        assert_eq!(l.sort2(&l), l);
    }

    #[test]
    fn subpartition_examples() {
        assert_eq!(subpartitions_of_size(&p("2,1"), 1), vec![p("1")]);
        assert_eq!(subpartitions_of_size(&p("2,1"), 2), vec![p("2"), p("1,1")]);
        assert_eq!(subpartitions_of_size(&p("2,1"), 0), vec![Partition::empty()]);
        assert!(subpartitions_of_size(&p("2,1"), 4).is_empty());
    }

    #[test]
    fn strips() {
        // (2,1) with a horizontal 2-strip added
        let added = p("2,1").add_horizontal_strip(2);
        assert_eq!(added, vec![p("4,1"), p("3,2"), p("3,1,1"), p("2,2,1")]);
        let removed = p("3,1").remove_horizontal_strip(2);
        assert_eq!(removed, vec![p("2"), p("1,1")]);
        assert_eq!(Partition::empty().add_horizontal_strip(0), vec![Partition::empty()]);
    }

    #[test]
    fn box_neighbours() {
        assert_eq!(p("2,1").add_one_box(), vec![p("3,1"), p("2,2"), p("2,1,1")]);
        assert_eq!(p("2,1").remove_one_box(), vec![p("1,1"), p("2")]);
        assert_eq!(Partition::empty().add_one_box(), vec![p("1")]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }

    #[test]
    fn complement() {
        assert_eq!(p("1").complement_in_box(2, 2), Some(p("2,1")));
        assert_eq!(p("2").complement_in_box(2, 2), Some(p("2")));
        assert_eq!(Partition::empty().complement_in_box(2, 2), Some(p("2,2")));
        assert_eq!(p("3").complement_in_box(2, 2), None);
    }

    #[test]
    fn graded_order() {
        let mut v = vec![p("4"), p("1,1,1,1"), p("2,2"), p("2,1,1"), p("3,1"), p("1")];
        v.sort();
        assert_eq!(v, vec![p("1"), p("1,1,1,1"), p("2,1,1"), p("2,2"), p("3,1"), p("4")]);
    }

    fn arb_partition(max_len: usize, max_part: u64) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|v| Partition::from_unsorted(v).unwrap())
    }

    /// Brute force over all integer vectors `v ≤ bound` componentwise.
    fn brute_subpartitions(bound: &Partition, s: u64) -> usize {
        let b = bound.parts();
        let mut count = 0;
        let mut v = vec![0u64; b.len()];
        loop {
            if v.windows(2).all(|w| w[0] >= w[1]) && v.iter().sum::<u64>() == s {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == b.len() {
                    return count;
                }
                if v[i] < b[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    proptest! {
        #[test]
        fn lattice_laws(a in arb_partition(6, 6), b in arb_partition(6, 6)) {
            let m = a.meet(&b);
            let j = a.join(&b);
            prop_assert!(a.contains(&m) && b.contains(&m));
            prop_assert!(j.contains(&a) && j.contains(&b));
            prop_assert_eq!(a.size() + b.size(), m.size() + j.size());
            prop_assert_eq!(a.sym_diff_size(&b) % 2, (a.size() + b.size()) % 2);
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!(m.conjugate(), a.conjugate().meet(&b.conjugate()));
        }

        #[test]
        fn sorts_split_the_union(a in arb_partition(6, 6), b in arb_partition(6, 6)) {
            let s1 = a.sort1(&b);
            let s2 = b.sort2(&a);
            prop_assert_eq!(s1.union_sorted(&s2), a.union_sorted(&b));
            prop_assert!(s1.parts().windows(2).all(|w| w[0] >= w[1]));
        }

        #[test]
        fn subpartitions_match_brute_force(bound in arb_partition(4, 4), s in 0u64..10) {
            let got = subpartitions_of_size(&bound, s);
            prop_assert_eq!(got.len(), brute_subpartitions(&bound, s));
            prop_assert!(got.windows(2).all(|w| w[0].parts() > w[1].parts()));
            prop_assert!(got.iter().all(|a| bound.contains(a) && a.size() == s));
        }

        #[test]
        fn text_round_trip(a in arb_partition(6, 9)) {
            prop_assert_eq!(a.to_text().parse::<Partition>().unwrap(), a);
        }
    }
}

//! Littlewood-Richardson tableaux: ballot semistandard fillings of skew shapes.
//!
//! Every LR coefficient in the crate comes from here. Two enumerators are
//! provided: a box-by-box filler that works on a fixed skew shape (used for
//! single coefficients and for skew expansions) and a strip-by-strip grower
//! that builds all outer shapes at once (used for Schur products). They are
//! cross-checked against each other in the tests.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use dashmap::DashMap;

use crate::partition::{Partition, SkewShape};

/// A filling of a skew shape. `rows[i]` lists the entries of row `i` left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    /// Checks that the row lengths match the shape; semistandardness is not checked here.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Option<Self> {
        let n = shape.outer().len();
        let mut rows = rows;
        while rows.len() > n && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.len() > n {
            return None;
        }
        rows.resize(n, Vec::new());
        for (i, r) in rows.iter().enumerate() {
            if r.len() as u64 != shape.row_len(i) {
                return None;
            }
        }
        Some(Filling { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        if self
            .rows
            .iter()
            .any(|r| r.windows(2).any(|w| w[0] > w[1]) || r.contains(&0))
        {
            return false;
        }
        let inner = self.shape.inner();
        for i in 1..self.rows.len() {
            let (off_up, off) = (inner.part(i - 1), inner.part(i));
            for (c, &x) in self.rows[i].iter().enumerate() {
                let col = off + c as u64;
                if col >= off_up {
                    let above = self.rows[i - 1][(col - off_up) as usize];
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Right-to-left, top-to-bottom row reading word.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Every prefix of the reading word has at least as many `i`s as `i+1`s.
    pub fn is_ballot(&self) -> bool {
        is_ballot_word(&self.reading_word())
    }

    pub fn content(&self) -> ContentVector {
        let mut counts = Vec::new();
        for &x in self.rows.iter().flatten() {
            let i = x as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        ContentVector { counts }
    }

    /// Number of entries equal to `letter` in row `row` (both 1-based).
    pub fn count_in_row(&self, letter: u32, row: usize) -> u64 {
        self.rows
            .get(row - 1)
            .map_or(0, |r| r.iter().filter(|&&x| x == letter).count() as u64)
    }
}

/// `counts[i]` is the multiplicity of entry `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentVector {
    pub counts: Vec<u64>,
}

impl ContentVector {
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

pub fn is_ballot_word(word: &[u32]) -> bool {
    let mut seen: Vec<u64> = Vec::new();
    for &w in word {
        let i = w as usize;
        if i == 0 {
            return false;
        }
        if seen.len() < i {
            seen.resize(i, 0);
        }
        seen[i - 1] += 1;
        if i >= 2 && seen[i - 1] > seen[i - 2] {
            return false;
        }
    }
    true
}

/// Receives each completed grid with its letter counts.
type Visit<'v> = dyn FnMut(&[Vec<u32>], &[u64]) + 'v;

/// Box-by-box backtracking over a fixed skew shape, filling in reading order
/// (rows top to bottom, each row right to left).
struct BoxFiller<'a> {
    outer: &'a [u64],
    inner: Vec<u64>,
    content: Option<&'a [u64]>,
    counts: Vec<u64>,
    grid: Vec<Vec<u32>>,
}

impl<'a> BoxFiller<'a> {
    fn new(shape: &'a SkewShape, content: Option<&'a [u64]>) -> Self {
        let outer = shape.outer().parts();
        let inner = shape.inner().padded(outer.len());
        let grid = outer
            .iter()
            .zip(&inner)
            .map(|(o, i)| vec![0; (o - i) as usize])
            .collect();
        let letters = content.map_or(outer.len(), <[u64]>::len);
        BoxFiller {
            outer,
            inner,
            content,
            counts: vec![0; letters.max(1)],
            grid,
        }
    }

    fn run(&mut self, visit: &mut Visit) {
        self.step(0, self.outer.first().copied().unwrap_or(0), visit);
    }

    /// Fills the box in row `r`, column `c + 1`, moving leftwards; `c + 1 == 0`
    /// wraps to the next row.
    fn step(&mut self, r: usize, col_end: u64, visit: &mut Visit) {
        let Some(&row_outer) = self.outer.get(r) else {
            visit(&self.grid, &self.counts);
            return;
        };
        let row_inner = self.inner[r];
        let col_end = col_end.min(row_outer);
        if col_end <= row_inner {
            let next = self.outer.get(r + 1).copied().unwrap_or(0);
            self.step(r + 1, next, visit);
            return;
        }
        let col = col_end - 1;
        let idx = (col - row_inner) as usize;
        let mut hi = (r + 1).min(self.counts.len()) as u32;
        if col + 1 < row_outer {
            hi = hi.min(self.grid[r][idx + 1]);
        }
        let mut lo = 1u32;
        if r > 0 && col >= self.inner[r - 1] {
            lo = self.grid[r - 1][(col - self.inner[r - 1]) as usize] + 1;
        }
        for x in lo..=hi {
            let i = x as usize - 1;
            if let Some(content) = self.content {
                if self.counts[i] >= content[i] {
                    continue;
                }
            }
            if i > 0 && self.counts[i] + 1 > self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][idx] = x;
            self.step(r, col, visit);
            self.counts[i] -= 1;
        }
        self.grid[r][idx] = 0;
    }
}

fn lr_trivially_zero(mu: &Partition, nu: &Partition, lam: &Partition) -> bool {
    mu.size() + nu.size() != lam.size() || !lam.contains(mu) || !lam.contains(nu)
}

/// Counts LR tableaux of shape `λ/μ` and content `ν` without touching the cache.
pub fn lr_coefficient_uncached(mu: &Partition, nu: &Partition, lam: &Partition) -> u64 {
    if lr_trivially_zero(mu, nu, lam) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let shape = SkewShape::new(lam.clone(), mu.clone()).expect("containment checked");
    let mut n = 0u64;
    BoxFiller::new(&shape, Some(nu.parts())).run(&mut |_, _| n += 1);
    n
}

type LrKey = (Partition, Partition, Partition);

static LR_CACHE: LazyLock<DashMap<LrKey, u64>> = LazyLock::new(DashMap::new);

/// The Littlewood-Richardson coefficient `c_{μ,ν}^λ`, memoized process-wide.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lam: &Partition) -> u64 {
    if lr_trivially_zero(mu, nu, lam) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (a.clone(), b.clone(), lam.clone());
    if let Some(v) = LR_CACHE.get(&key) {
        return *v;
    }
    // Fill the shape with the larger inner partition: fewer boxes to place.
    let v = lr_coefficient_uncached(b, a, lam);
    LR_CACHE.insert(key, v);
    v
}

/// Number of entries currently held by the LR memo table.
pub fn lr_cache_len() -> usize {
    LR_CACHE.len()
}

/// All LR tableaux of the given shape and content, in a fixed order.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<Filling> {
    if shape.size() != content.size() || content.len() > shape.outer().len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if content.is_empty() {
        return vec![Filling::new(shape.clone(), Vec::new()).expect("empty skew shape")];
    }
    BoxFiller::new(shape, Some(content.parts())).run(&mut |grid, _| {
        out.push(Filling {
            shape: shape.clone(),
            rows: grid.to_vec(),
        });
    });
    out
}

/// Contents of all LR tableaux of a shape, with multiplicity: the coefficients
/// `c_{μ,ν}^λ` for fixed `λ/μ`, keyed by `ν`.
pub fn lr_contents(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    BoxFiller::new(shape, None).run(&mut |_, counts| {
        let content = Partition::from_raw(counts.to_vec());
        *out.entry(content).or_default() += 1;
    });
    out
}

/// The coefficients `c_{β,γ}^λ` for all `λ`, grown by adding a horizontal strip
/// of `γ_i` letters `i` for each `i` under the ballot condition. An optional
/// `bound` restricts the outer shapes to those inside it.
pub fn lr_product_terms(beta: &Partition, gamma: &Partition, bound: Option<&Partition>) -> BTreeMap<Partition, u64> {
    let rows = beta.len() + gamma.len();
    let mut out = BTreeMap::new();
    if let Some(b) = bound {
        if !b.contains(beta) || !b.contains(gamma) || b.size() != beta.size() + gamma.size() {
            return out;
        }
    }
    let cap = bound.map(|b| b.padded(rows));
    let mut grower = StripGrower {
        gamma: gamma.parts(),
        cap: cap.as_deref(),
        shape: beta.padded(rows),
        prev: vec![0; rows],
        cur: vec![0; rows],
        out: &mut out,
    };
    grower.letter(0);
    out
}

struct StripGrower<'a> {
    gamma: &'a [u64],
    cap: Option<&'a [u64]>,
    shape: Vec<u64>,
    /// per-row counts of the previous letter
    prev: Vec<u64>,
    /// per-row counts of the letter being placed
    cur: Vec<u64>,
    out: &'a mut BTreeMap<Partition, u64>,
}

impl StripGrower<'_> {
    fn letter(&mut self, i: usize) {
        if i == self.gamma.len() {
            *self.out.entry(Partition::from_raw(self.shape.clone())).or_default() += 1;
            return;
        }
        let base = self.shape.clone();
        let saved_prev = std::mem::replace(&mut self.prev, std::mem::take(&mut self.cur));
        self.cur = vec![0; base.len()];
        self.row(i, 0, self.gamma[i], 0, 0, &base);
        self.cur = std::mem::replace(&mut self.prev, saved_prev);
        self.shape = base;
    }

    /// Places letter `i + 1` in row `r`; `cum` counts letters `i + 1` in rows above,
    /// `cum_prev` counts letters `i` in rows above.
    fn row(&mut self, i: usize, r: usize, left: u64, cum: u64, cum_prev: u64, base: &[u64]) {
        if left == 0 {
            self.letter(i + 1);
            return;
        }
        // A letter i+1 first appears in row i+1 (0-based row i) at the earliest.
        if r == base.len() {
            return;
        }
        let mut hi = left;
        if r > 0 {
            hi = hi.min(base[r - 1] - base[r]);
        }
        if let Some(cap) = self.cap {
            hi = hi.min(cap[r] - base[r]);
        }
        if i > 0 {
            // ballot: letters i+1 in rows ≤ r never exceed letters i in rows < r
            hi = hi.min(cum_prev.saturating_sub(cum));
        }
        let next_prev = cum_prev + self.prev[r];
        for x in (0..=hi).rev() {
            self.shape[r] = base[r] + x;
            self.cur[r] = x;
            self.row(i, r + 1, left - x, cum + x, next_prev, base);
        }
        self.shape[r] = base[r];
        self.cur[r] = 0;
    }
}

/// Number of standard Young tableaux `f^λ`, by the branching recursion over corners.
pub fn standard_count(lam: &Partition) -> u64 {
    static MEMO: LazyLock<Mutex<HashMap<Partition, u64>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
    fn rec(lam: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
        if lam.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(lam) {
            return v;
        }
        let v = lam.remove_one_box().iter().map(|m| rec(m, memo)).sum();
        memo.insert(lam.clone(), v);
        v
    }
    rec(lam, &mut MEMO.lock().expect("standard_count memo poisoned"))
}

/// `f^λ` by listing every standard filling. Exponential; for cross-checks only.
pub fn standard_count_by_enumeration(lam: &Partition) -> u64 {
    fn rec(cur: &Partition, target: &Partition) -> u64 {
        if cur == target {
            return 1;
        }
        cur.add_one_box()
            .iter()
            .filter(|p| target.contains(p))
            .map(|p| rec(p, target))
            .sum()
    }
    rec(&Partition::empty(), lam)
}

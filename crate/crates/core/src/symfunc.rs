//! Finite integer combinations of Schur functions and of Koike-Terada
//! functions `s_[λ]`, and conversions between the two bases.
//!
//! `s_[λ]` is expanded into Schur functions through the `n × n` determinant in
//! complete homogeneous functions `h_t = s_(t)` whose first column is
//! `h_{λ*}` and whose `j`-th further column is `h_{λ*+j(1^n)} + h_{λ*-j(1^n)}`,
//! with `λ* = (λ_1, λ_2 - 1, …, λ_n - (n - 1))`, `h_0 = 1` and `h_t = 0` for
//! `t < 0`. Because `s_[λ] = s_λ + (terms of lower degree)`, the conversion back
//! is a triangular peel-off.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::LazyLock;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Partition, SkewShape};
use crate::tableau::{lr_contents, lr_product_terms};

pub trait Basis: Copy + Default + fmt::Debug + Send + Sync + 'static {
    const NAME: &'static str;
}

/// The Schur basis `{s_λ}`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct Schur;

/// The Koike-Terada basis `{s_[λ]}`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct KoikeTerada;

impl Basis for Schur {
    const NAME: &'static str = "schur";
}

impl Basis for KoikeTerada {
    const NAME: &'static str = "koike-terada";
}

/// A finitely supported map `Partition → ℤ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expansion<B: Basis> {
    terms: BTreeMap<Partition, i64>,
    basis: PhantomData<B>,
}

pub type SchurExpansion = Expansion<Schur>;
pub type KtExpansion = Expansion<KoikeTerada>;

/// One `{"partition": [...], "coeff": c}` entry of the JSON term list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Partition,
    pub coeff: i64,
}

impl<B: Basis> Default for Expansion<B> {
    fn default() -> Self {
        Expansion {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }
}

impl<B: Basis> Expansion<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element indexed by `lam`.
    pub fn basis_element(lam: Partition) -> Self {
        let mut e = Self::zero();
        e.add_term(lam, 1);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, lam: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(lam).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            // re-borrow to remove the emptied key
            let key = self
                .terms
                .iter()
                .find(|(_, v)| **v == 0)
                .map(|(k, _)| k.clone())
                .expect("zero slot present");
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, lam: &Partition) -> i64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }

    /// Terms in graded order: size ascending, then lexicographically ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::from_terms(self.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    pub fn max_coeff(&self) -> i64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The term of largest index in graded order.
    pub fn leading(&self) -> Option<(&Partition, i64)> {
        self.terms.iter().next_back().map(|(p, &c)| (p, c))
    }

    pub fn terms(&self) -> Vec<Term> {
        self.iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                coeff: c,
            })
            .collect()
    }

    /// Reinterprets the same coefficients in another basis.
    pub fn rebase<C: Basis>(self) -> Expansion<C> {
        Expansion {
            terms: self.terms,
            basis: PhantomData,
        }
    }
}

impl<B: Basis> AddAssign<&Expansion<B>> for Expansion<B> {
    fn add_assign(&mut self, rhs: &Expansion<B>) {
        for (p, c) in rhs.iter() {
            self.add_term(p.clone(), c);
        }
    }
}

impl<B: Basis> SubAssign<&Expansion<B>> for Expansion<B> {
    fn sub_assign(&mut self, rhs: &Expansion<B>) {
        for (p, c) in rhs.iter() {
            self.add_term(p.clone(), -c);
        }
    }
}

impl<B: Basis> Add for &Expansion<B> {
    type Output = Expansion<B>;

    fn add(self, rhs: Self) -> Expansion<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Sub for &Expansion<B> {
    type Output = Expansion<B>;

    fn sub(self, rhs: Self) -> Expansion<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Basis> Neg for &Expansion<B> {
    type Output = Expansion<B>;

    fn neg(self) -> Expansion<B> {
        self.scaled(-1)
    }
}

/// Human form: `[1,1] + [2] + 2[3,1]`, coefficient 1 omitted, `0` for zero.
impl<B: Basis> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{}}}", B::NAME, self)
    }
}

#[derive(Debug, Clone, Error)]
pub enum SymFuncError {
    #[error("basis conversion did not terminate; residue {residue}")]
    NonTerminating { residue: SchurExpansion },
}

type PairKey = (Partition, Partition);

static PRODUCT_CACHE: LazyLock<DashMap<PairKey, SchurExpansion>> = LazyLock::new(DashMap::new);

/// `s_β s_γ` in the Schur basis.
pub fn schur_basis_product(beta: &Partition, gamma: &Partition) -> SchurExpansion {
    let (a, b) = if beta <= gamma { (beta, gamma) } else { (gamma, beta) };
    let key = (a.clone(), b.clone());
    if let Some(e) = PRODUCT_CACHE.get(&key) {
        return e.clone();
    }
    // Grow strips of the shorter factor onto the longer one.
    let (base, strips) = if a.len() <= b.len() { (b, a) } else { (a, b) };
    let e = SchurExpansion::from_terms(
        lr_product_terms(base, strips, None)
            .into_iter()
            .map(|(p, c)| (p, c as i64)),
    );
    PRODUCT_CACHE.insert(key, e.clone());
    e
}

/// Bilinear product of two Schur expansions.
pub fn schur_product(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (p, c) in a.iter() {
        for (q, d) in b.iter() {
            out += &schur_basis_product(p, q).scaled(c * d);
        }
    }
    out
}

/// `s_{outer/inner}`; zero when `inner ⊄ outer`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> SchurExpansion {
    match SkewShape::new(outer.clone(), inner.clone()) {
        Ok(shape) => skew_schur_shape(&shape),
        Err(_) => SchurExpansion::zero(),
    }
}

pub fn skew_schur_shape(shape: &SkewShape) -> SchurExpansion {
    SchurExpansion::from_terms(lr_contents(shape).into_iter().map(|(p, c)| (p, c as i64)))
}

/// `⟨a, b⟩` with the Schur functions orthonormal.
pub fn inner_product(a: &SchurExpansion, b: &SchurExpansion) -> i64 {
    a.iter().map(|(p, c)| c * b.coeff(p)).sum()
}

static H_CACHE: LazyLock<DashMap<Vec<u64>, SchurExpansion>> = LazyLock::new(DashMap::new);

/// `h_{t_1} ⋯ h_{t_k}` in the Schur basis (entries equal to zero are the unit).
pub fn h_product(ts: &[u64]) -> SchurExpansion {
    let mut key: Vec<u64> = ts.iter().copied().filter(|&t| t > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(e) = H_CACHE.get(&key) {
        return e.clone();
    }
    let e = match key.split_last() {
        None => SchurExpansion::basis_element(Partition::empty()),
        Some((&last, rest)) => {
            let prev = h_product(rest);
            let mut out = SchurExpansion::zero();
            for (p, c) in prev.iter() {
                for q in p.add_horizontal_strip(last) {
                    out.add_term(q, c);
                }
            }
            out
        }
    };
    H_CACHE.insert(key, e.clone());
    e
}

/// Signed monomials of the determinant defining `s_[λ]` with `n` rows, each a
/// multiset of `h` indices (zeros dropped).
fn kt_determinant_monomials(lam: &Partition, n: usize) -> HashMap<Vec<u64>, i64> {
    let star: Vec<i64> = (0..n).map(|r| lam.part(r) as i64 - r as i64).collect();
    // entries[r][c] = list of h-indices summed in that entry
    let entries: Vec<Vec<Vec<u64>>> = star
        .iter()
        .map(|&a| {
            (0..n as i64)
                .map(|c| {
                    let mut e = Vec::new();
                    if c == 0 {
                        if a >= 0 {
                            e.push(a as u64);
                        }
                    } else {
                        for t in [a + c, a - c] {
                            if t >= 0 {
                                e.push(t as u64);
                            }
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();

    let mut out: HashMap<Vec<u64>, i64> = HashMap::new();
    let mut used = vec![false; n];
    let mut mono = Vec::with_capacity(n);
    fn rec(
        r: usize,
        sign: i64,
        entries: &[Vec<Vec<u64>>],
        used: &mut [bool],
        mono: &mut Vec<u64>,
        out: &mut HashMap<Vec<u64>, i64>,
    ) {
        let n = entries.len();
        if r == n {
            let mut key: Vec<u64> = mono.iter().copied().filter(|&t| t > 0).collect();
            key.sort_unstable_by(|a, b| b.cmp(a));
            *out.entry(key).or_insert(0) += sign;
            return;
        }
        for c in 0..n {
            if used[c] || entries[r][c].is_empty() {
                continue;
            }
            // inversions with columns already taken by earlier rows
            let inv = used[c + 1..].iter().filter(|&&u| u).count();
            let s = if inv % 2 == 0 { sign } else { -sign };
            used[c] = true;
            for &t in &entries[r][c] {
                mono.push(t);
                rec(r + 1, s, entries, used, mono, out);
                mono.pop();
            }
            used[c] = false;
        }
    }
    rec(0, 1, &entries, &mut used, &mut mono, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

/// Schur expansion of `s_[λ]` from the determinant with `rows` rows
/// (`rows ≥ ℓ(λ)`, and at least 1).
pub fn kt_to_schur_with_rows(lam: &Partition, rows: usize) -> SchurExpansion {
    let n = rows.max(lam.len()).max(1);
    let monos = kt_determinant_monomials(lam, n);
    let mut keys: Vec<_> = monos.into_iter().collect();
    keys.sort();
    keys.par_iter()
        .map(|(ts, c)| h_product(ts).scaled(*c))
        .reduce(SchurExpansion::zero, |mut a, b| {
            a += &b;
            a
        })
}

static KT_CACHE: LazyLock<DashMap<Partition, SchurExpansion>> = LazyLock::new(DashMap::new);

/// Schur expansion of `s_[λ]`, using `n = ℓ(λ)` rows (one row for `∅`).
pub fn kt_to_schur(lam: &Partition) -> SchurExpansion {
    if let Some(e) = KT_CACHE.get(lam) {
        return e.clone();
    }
    let e = kt_to_schur_with_rows(lam, lam.len());
    KT_CACHE.insert(lam.clone(), e.clone());
    e
}

/// Converts a Koike-Terada expansion to Schur functions.
pub fn kt_expansion_to_schur(e: &KtExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (p, c) in e.iter() {
        out += &kt_to_schur(p).scaled(c);
    }
    out
}

/// Inverts [`kt_to_schur`] by repeatedly peeling off the highest-degree term.
pub fn schur_to_kt(e: &SchurExpansion) -> Result<KtExpansion, SymFuncError> {
    let mut residue = e.clone();
    let mut out = KtExpansion::zero();
    // Each step removes the current leading term, so the number of steps is
    // bounded by the number of partitions of size at most the top degree.
    let top = residue.leading().map_or(0, |(p, _)| p.size());
    let budget: usize = (0..=top).map(partition_count).sum::<usize>() + 1;
    for _ in 0..budget {
        let Some((lead, c)) = residue.leading().map(|(p, c)| (p.clone(), c)) else {
            return Ok(out);
        };
        residue -= &kt_to_schur(&lead).scaled(c);
        if residue.coeff(&lead) != 0 {
            return Err(SymFuncError::NonTerminating { residue });
        }
        out.add_term(lead, c);
    }
    if residue.is_zero() {
        Ok(out)
    } else {
        Err(SymFuncError::NonTerminating { residue })
    }
}

fn partition_count(n: u64) -> usize {
    // p(n) by the standard recurrence on largest part
    let n = n as usize;
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            ways[s] += ways[s - part];
        }
    }
    ways[n]
}

/// `s_[μ] s_[ν]` computed through the Schur basis: convert both factors,
/// multiply, convert back.
pub fn kt_product_via_schur(mu: &Partition, nu: &Partition) -> Result<KtExpansion, SymFuncError> {
    let prod = schur_product(&kt_to_schur(mu), &kt_to_schur(nu));
    schur_to_kt(&prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_up_to, subpartitions};
    use crate::tableau::lr_coefficient;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn schur(terms: &[(&str, i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(terms.iter().map(|(s, c)| (p(s), *c)))
    }

    #[test]
    fn expansion_arithmetic_drops_zeros() {
        let mut e = schur(&[("2", 1), ("1,1", 2)]);
        e.add_term(p("2"), -1);
        assert_eq!(e.num_terms(), 1);
        assert_eq!(e.coeff(&p("2")), 0);
        let z = &e - &e;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_is_graded() {
        let e = schur(&[("3", 1), ("2,1", 1), ("4,1", -1), ("-", 2)]);
        assert_eq!(e.to_string(), "2[] + [2,1] + [3] - [4,1]");
        let n = schur(&[("1", -3)]);
        assert_eq!(n.to_string(), "-3[1]");
    }

    #[test]
    fn schur_products() {
        let s1 = schur(&[("1", 1)]);
        assert_eq!(schur_product(&s1, &s1), schur(&[("2", 1), ("1,1", 1)]));
        let s21 = schur(&[("2,1", 1)]);
        assert_eq!(schur_product(&s21, &s1), schur(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)]));
    }

    #[test]
    fn schur_product_is_bilinear_and_associative() {
        let a = schur(&[("2", 1), ("1", -2)]);
        let b = schur(&[("1,1", 3), ("-", 1)]);
        let c = schur(&[("2,1", 1), ("3", 1)]);
        assert_eq!(
            schur_product(&a, &(&b + &c)),
            &schur_product(&a, &b) + &schur_product(&a, &c)
        );
        assert_eq!(
            schur_product(&schur_product(&a, &b), &c),
            schur_product(&a, &schur_product(&b, &c))
        );
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_schur(&p("3,1"), &Partition::empty()), schur(&[("3,1", 1)]));
        assert_eq!(skew_schur(&p("2,1"), &p("1")), schur(&[("2", 1), ("1,1", 1)]));
        assert!(skew_schur(&p("1"), &p("2")).is_zero());
    }

    #[test]
    fn skew_coefficients_are_lr() {
        for lam in partitions_up_to(6) {
            for mu in subpartitions(&lam) {
                let e = skew_schur(&lam, &mu);
                for (nu, c) in e.iter() {
                    assert_eq!(c as u64, lr_coefficient(&mu, nu, &lam));
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let l = schur(&[("3,1", 1)]);
        assert_eq!(inner_product(&l, &l), 1);
        assert_eq!(inner_product(&schur(&[("2", 1), ("1,1", 2)]), &schur(&[("1,1", 1)])), 2);
    }

    #[test]
    fn determinant_example() {
        let want = schur(&[
            ("4,2,1", 1),
            ("4,1", -1),
            ("3,2", -1),
            ("3,1,1", -1),
            ("3", 1),
            ("2,1", 1),
        ]);
        assert_eq!(kt_to_schur(&p("4,2,1")), want);
        assert_eq!(kt_to_schur(&Partition::empty()), schur(&[("-", 1)]));
        assert_eq!(kt_to_schur(&p("1")), schur(&[("1", 1)]));
    }

    #[test]
    fn h_products_are_kostka() {
        // h_2 h_1 = s_3 + s_21; h_1^3 = s_3 + 2 s_21 + s_111
        assert_eq!(h_product(&[2, 1]), schur(&[("3", 1), ("2,1", 1)]));
        assert_eq!(h_product(&[1, 1, 1]), schur(&[("3", 1), ("2,1", 2), ("1,1,1", 1)]));
        assert_eq!(h_product(&[0, 0]), schur(&[("-", 1)]));
    }

    #[test]
    fn unitriangular_and_round_trip() {
        for lam in partitions_up_to(8) {
            let e = kt_to_schur(&lam);
            assert_eq!(e.coeff(&lam), 1, "{lam}");
            assert!(e.iter().all(|(q, _)| q == &lam || q.size() < lam.size()), "{lam}");
            let back = schur_to_kt(&e).unwrap();
            assert_eq!(back, KtExpansion::basis_element(lam.clone()));
        }
        assert!(schur_to_kt(&SchurExpansion::zero()).unwrap().is_zero());
    }

    #[test]
    fn extra_determinant_row_changes_nothing() {
        for lam in partitions_up_to(6) {
            let base = kt_to_schur(&lam);
            assert_eq!(kt_to_schur_with_rows(&lam, lam.len() + 1), base, "{lam}");
            assert_eq!(kt_to_schur_with_rows(&lam, lam.len() + 2), base, "{lam}");
        }
    }

    #[test]
    fn inverse_of_worked_example() {
        let kt = schur_to_kt(&schur(&[("4,2,1", 1)])).unwrap();
        assert_eq!(kt.coeff(&p("4,2,1")), 1);
        assert!(kt.iter().all(|(q, _)| q == &p("4,2,1") || q.size() <= 5));
    }

    #[test]
    fn small_products_via_schur() {
        let one = kt_product_via_schur(&p("1"), &p("1")).unwrap();
        assert_eq!(
            one,
            KtExpansion::from_terms([(Partition::empty(), 1), (p("1,1"), 1), (p("2"), 1)])
        );
        let e = kt_product_via_schur(&p("2"), &p("2,2")).unwrap();
        let want = KtExpansion::from_terms(
            ["2", "2,1,1", "2,2", "3,1", "2,2,2", "3,2,1", "4,2"]
                .iter()
                .map(|s| (p(s), 1)),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn partition_count_values() {
        let v: Vec<usize> = (0..8).map(partition_count).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}

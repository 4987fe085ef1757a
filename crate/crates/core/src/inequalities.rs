//! Linear inequalities that are necessary for `N_{μ,ν,λ} > 0`: the Horn
//! inequalities, the extended Weyl inequalities, and the complete list for
//! partitions with at most two rows.

use std::fmt;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;
use crate::tableau::lr_coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InequalityError {
    #[error("sizes do not add up: |{mu}| + |{nu}| != |{lam}|")]
    SizeMismatch {
        mu: Partition,
        nu: Partition,
        lam: Partition,
    },
    #[error("{0} has more than two parts")]
    TooLong(Partition),
}

/// Index sets `I, J, K ⊆ [n]` of size `d` with `c_{τ(I),τ(J)}^{τ(K)} > 0`,
/// where `τ(I) = (i_d - d, …, i_2 - 2, i_1 - 1)`. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornTriple {
    pub d: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub tau_i: Partition,
    pub tau_j: Partition,
    pub tau_k: Partition,
}

impl HornTriple {
    /// `Σ_{k∈K} λ_k ≤ Σ_{i∈I} μ_i + Σ_{j∈J} ν_j`.
    pub fn holds(&self, mu: &Partition, nu: &Partition, lam: &Partition) -> bool {
        let sum = |p: &Partition, idx: &[usize]| -> u128 { idx.iter().map(|&t| p.part(t - 1) as u128).sum() };
        sum(lam, &self.k) <= sum(mu, &self.i) + sum(nu, &self.j)
    }
}

impl fmt::Display for HornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |sym: &str, idx: &[usize]| idx.iter().map(|t| format!("{sym}{t}")).collect::<Vec<_>>().join(" + ");
        write!(
            f,
            "{} <= {} + {}",
            side("λ", &self.k),
            side("μ", &self.i),
            side("ν", &self.j)
        )
    }
}

pub fn tau(subset: &[usize]) -> Partition {
    Partition::new(
        subset
            .iter()
            .enumerate()
            .rev()
            .map(|(pos, &i)| (i - pos - 1) as u64)
            .collect(),
    )
    .expect("increasing subset gives a partition")
}

/// Size-`d` subsets of `{1, …, n}` in lexicographic order.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < d - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, d, cur, out);
            cur.pop();
        }
    }
    rec(1, n, d, &mut cur, &mut out);
    out
}

static HORN_CACHE: LazyLock<DashMap<usize, Arc<Vec<HornTriple>>>> = LazyLock::new(DashMap::new);

/// All Horn triples for `1 ≤ d < n`, ordered by `d`, then `I`, `J`, `K`.
pub fn horn_triples(n: usize) -> Arc<Vec<HornTriple>> {
    if let Some(t) = HORN_CACHE.get(&n) {
        return t.clone();
    }
    let mut out = Vec::new();
    for d in 1..n {
        let subs = subsets(n, d);
        let taus: Vec<Partition> = subs.iter().map(|s| tau(s)).collect();
        for (a, ta) in subs.iter().zip(&taus) {
            for (b, tb) in subs.iter().zip(&taus) {
                for (c, tc) in subs.iter().zip(&taus) {
                    if tc.size() == ta.size() + tb.size() && lr_coefficient(ta, tb, tc) > 0 {
                        out.push(HornTriple {
                            d,
                            i: a.clone(),
                            j: b.clone(),
                            k: c.clone(),
                            tau_i: ta.clone(),
                            tau_j: tb.clone(),
                            tau_k: tc.clone(),
                        });
                    }
                }
            }
        }
    }
    let out = Arc::new(out);
    HORN_CACHE.insert(n, out.clone());
    out
}

fn permutations<'a>(mu: &'a Partition, nu: &'a Partition, lam: &'a Partition) -> [[&'a Partition; 3]; 6] {
    [
        [mu, nu, lam],
        [nu, mu, lam],
        [mu, lam, nu],
        [lam, mu, nu],
        [nu, lam, mu],
        [lam, nu, mu],
    ]
}

/// Every Horn inequality in dimension `n`, for every ordering of the three
/// partitions.
pub fn horn_holds(mu: &Partition, nu: &Partition, lam: &Partition, n: usize) -> bool {
    let triples = horn_triples(n);
    permutations(mu, nu, lam)
        .iter()
        .all(|[a, b, c]| triples.iter().all(|t| t.holds(a, b, c)))
}

/// The first Horn inequality (in the given order of the partitions) that fails.
pub fn first_horn_violation(mu: &Partition, nu: &Partition, lam: &Partition, n: usize) -> Option<HornTriple> {
    horn_triples(n).iter().find(|t| !t.holds(mu, nu, lam)).cloned()
}

/// `c_{μ,ν}^λ > 0` decided by the Horn inequalities.
pub fn lr_positive_via_horn(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<bool, InequalityError> {
    if mu.size() + nu.size() != lam.size() {
        return Err(InequalityError::SizeMismatch {
            mu: mu.clone(),
            nu: nu.clone(),
            lam: lam.clone(),
        });
    }
    let n = mu.len().max(nu.len()).max(lam.len()) + 1;
    Ok(horn_triples(n).iter().all(|t| t.holds(mu, nu, lam)))
}

/// An index tuple of the extended Weyl inequality
/// `μ_i - μ_j ≤ λ_k - λ_l + ν_{m-p+1} + ν_{M+p+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtWeylIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub p: usize,
}

impl ExtWeylIndex {
    fn m_and_big_m(&self) -> (usize, usize) {
        let (x, y) = (self.i - self.k, self.l - self.j);
        (x.min(y), x.max(y))
    }

    pub fn holds(&self, mu: &Partition, nu: &Partition, lam: &Partition) -> bool {
        let (m, big_m) = self.m_and_big_m();
        let at = |p: &Partition, t: usize| p.part(t - 1) as i128;
        at(mu, self.i) - at(mu, self.j)
            <= at(lam, self.k) - at(lam, self.l) + at(nu, m - self.p + 1) + at(nu, big_m + self.p + 2)
    }
}

impl fmt::Display for ExtWeylIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, big_m) = self.m_and_big_m();
        write!(
            f,
            "μ{} - μ{} <= λ{} - λ{} + ν{} + ν{}",
            self.i,
            self.j,
            self.k,
            self.l,
            m - self.p + 1,
            big_m + self.p + 2
        )
    }
}

/// All tuples `1 ≤ k ≤ i < j ≤ l ≤ n`, `0 ≤ p ≤ min(i-k, l-j)`.
pub fn ext_weyl_indices(n: usize) -> Vec<ExtWeylIndex> {
    let mut out = Vec::new();
    for k in 1..=n {
        for i in k..=n {
            for j in i + 1..=n {
                for l in j..=n {
                    for p in 0..=(i - k).min(l - j) {
                        out.push(ExtWeylIndex { i, j, k, l, p });
                    }
                }
            }
        }
    }
    out
}

/// Every extended Weyl inequality in dimension `n`, for every ordering of the
/// three partitions.
pub fn extended_weyl_holds(mu: &Partition, nu: &Partition, lam: &Partition, n: usize) -> bool {
    let idx = ext_weyl_indices(n);
    permutations(mu, nu, lam)
        .iter()
        .all(|[a, b, c]| idx.iter().all(|t| t.holds(a, b, c)))
}

/// Outcome of the two-row membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nl2Verdict {
    Member,
    /// The first condition that fails.
    Violated(&'static str),
}

/// Decides `N_{μ,ν,λ} > 0` for partitions with at most two parts. Conditions
/// are checked in a fixed order: parity, the triangle inequalities, nine
/// Horn-type bounds on single parts, six bounds on part differences.
pub fn nl2_check(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<Nl2Verdict, InequalityError> {
    for x in [mu, nu, lam] {
        if x.len() > 2 {
            return Err(InequalityError::TooLong(x.clone()));
        }
    }
    let [m1, m2] = [mu.part(0) as i128, mu.part(1) as i128];
    let [n1, n2] = [nu.part(0) as i128, nu.part(1) as i128];
    let [l1, l2] = [lam.part(0) as i128, lam.part(1) as i128];
    let (sm, sn, sl) = (m1 + m2, n1 + n2, l1 + l2);
    let conditions: [(&'static str, bool); 19] = [
        ("|λ| + |μ| + |ν| even", (sm + sn + sl) % 2 == 0),
        ("|λ| ≤ |μ| + |ν|", sl <= sm + sn),
        ("|μ| ≤ |ν| + |λ|", sm <= sn + sl),
        ("|ν| ≤ |λ| + |μ|", sn <= sl + sm),
        ("λ1 ≤ μ1 + ν1", l1 <= m1 + n1),
        ("ν1 ≤ λ1 + μ1", n1 <= l1 + m1),
        ("μ1 ≤ λ1 + ν1", m1 <= l1 + n1),
        ("λ2 ≤ μ1 + ν2", l2 <= m1 + n2),
        ("ν2 ≤ λ1 + μ2", n2 <= l1 + m2),
        ("μ2 ≤ λ1 + ν2", m2 <= l1 + n2),
        ("λ2 ≤ μ2 + ν1", l2 <= m2 + n1),
        ("ν2 ≤ λ2 + μ1", n2 <= l2 + m1),
        ("μ2 ≤ λ2 + ν1", m2 <= l2 + n1),
        ("ν1 - ν2 ≤ μ1 + μ2 + λ1 - λ2", n1 - n2 <= sm + l1 - l2),
        ("μ1 - μ2 ≤ λ1 + λ2 + ν1 - ν2", m1 - m2 <= sl + n1 - n2),
        ("λ1 - λ2 ≤ ν1 + ν2 + μ1 - μ2", l1 - l2 <= sn + m1 - m2),
        ("λ1 - λ2 ≤ μ1 + μ2 + ν1 - ν2", l1 - l2 <= sm + n1 - n2),
        ("μ1 - μ2 ≤ ν1 + ν2 + λ1 - λ2", m1 - m2 <= sn + l1 - l2),
        ("ν1 - ν2 ≤ λ1 + λ2 + μ1 - μ2", n1 - n2 <= sl + m1 - m2),
    ];
    for (name, ok) in conditions {
        if !ok {
            return Ok(Nl2Verdict::Violated(name));
        }
    }
    Ok(Nl2Verdict::Member)
}

pub fn nl2_member(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<bool, InequalityError> {
    Ok(nl2_check(mu, nu, lam)? == Nl2Verdict::Member)
}

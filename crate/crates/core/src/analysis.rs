//! Batch checks of structural statements and conjectures about `N_{μ,ν,λ}`.
//!
//! Every scan sweeps a finite range in parallel and returns a [`ScanReport`]
//! whose `checked` field is the size of the range, so a report can be compared
//! against a count computed independently. Counterexamples are sorted by input
//! before they are returned and are also passed to an optional sink as soon as
//! they are found.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::newell_littlewood::{detection_witness, nl_number, nl_positive, nl_product, profile_of};
use crate::partition::{partitions_in_box, partitions_up_to, Partition};
use crate::symfunc::KtExpansion;
use crate::tableau::lr_coefficient;

/// One failing input with what was seen and what the property required.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: Vec<Partition>,
    pub observed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub scan: String,
    pub parameters: BTreeMap<String, u64>,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Inputs worth reporting that do not contradict the property.
    pub flagged: Vec<Counterexample>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub type Sink<'a> = &'a (dyn Fn(&Counterexample) + Sync);

fn no_sink(_: &Counterexample) {}

struct Outcome {
    counterexamples: Vec<Counterexample>,
    flagged: Vec<Counterexample>,
}

impl Outcome {
    fn empty() -> Self {
        Outcome {
            counterexamples: Vec::new(),
            flagged: Vec::new(),
        }
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.counterexamples.extend(other.counterexamples);
        self.flagged.extend(other.flagged);
        self
    }
}

fn report(scan: &str, parameters: &[(&str, u64)], checked: u64, mut out: Outcome) -> ScanReport {
    out.counterexamples.sort();
    out.flagged.sort();
    ScanReport {
        scan: scan.to_string(),
        parameters: parameters.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        checked,
        counterexamples: out.counterexamples,
        flagged: out.flagged,
    }
}

/// Unordered pairs `(μ, ν)` with `μ ≤ ν` in graded order.
fn unordered_pairs(ps: &[Partition]) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for (i, a) in ps.iter().enumerate() {
        for b in &ps[i..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn counterexample(input: &[&Partition], observed: String, expected: &str) -> Counterexample {
    Counterexample {
        input: input.iter().map(|p| (*p).clone()).collect(),
        observed,
        expected: expected.to_string(),
    }
}

fn show_values(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Unimodality of the size-graded coefficient sums of `s_[μ] s_[ν]` over
/// unordered pairs with `|μ|, |ν| ≤ max_size`. Non-log-concave profiles are
/// flagged.
pub fn check_unimodality(max_size: u64) -> ScanReport {
    check_unimodality_with(max_size, &no_sink)
}

pub fn check_unimodality_with(max_size: u64, sink: Sink) -> ScanReport {
    let pairs = unordered_pairs(&partitions_up_to(max_size));
    let out = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let h = profile_of(mu, nu, &nl_product(mu, nu));
            let mut o = Outcome::empty();
            if !h.is_unimodal() {
                let c = counterexample(&[mu, nu], show_values(&h.values), "unimodal");
                sink(&c);
                o.counterexamples.push(c);
            } else if !h.is_log_concave() {
                o.flagged
                    .push(counterexample(&[mu, nu], show_values(&h.values), "log-concave"));
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    report("unimodality", &[("max_size", max_size)], pairs.len() as u64, out)
}

/// Multisets `{μ, ν, λ}` with sizes `≤ max_size` and even total size.
fn even_triples(max_size: u64) -> Vec<[Partition; 3]> {
    let ps = partitions_up_to(max_size);
    let mut out = Vec::new();
    for (i, a) in ps.iter().enumerate() {
        for (j, b) in ps.iter().enumerate().skip(i) {
            for c in &ps[j..] {
                if (a.size() + b.size() + c.size()) % 2 == 0 {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

/// For each multiset `{μ, ν, λ}` of even total size with sizes `≤ max_size`
/// and each `2 ≤ k ≤ max_k`: `N_{kμ,kν,kλ} > 0` must imply `N_{μ,ν,λ} > 0`.
/// `N` is symmetric in its arguments, so one ordering per multiset suffices.
pub fn check_saturation(max_size: u64, max_k: u64) -> ScanReport {
    check_saturation_with(max_size, max_k, &no_sink)
}

pub fn check_saturation_with(max_size: u64, max_k: u64, sink: Sink) -> ScanReport {
    let triples = even_triples(max_size);
    let ks: Vec<u64> = (2..=max_k).collect();
    let out = triples
        .par_iter()
        .map(|[mu, nu, lam]| {
            let mut o = Outcome::empty();
            if ks.is_empty() || nl_positive(mu, nu, lam) {
                return o;
            }
            for &k in &ks {
                if nl_positive(&mu.scale(k), &nu.scale(k), &lam.scale(k)) {
                    let c = counterexample(&[mu, nu, lam], format!("N = 0 but N > 0 at k = {k}"), "N > 0");
                    sink(&c);
                    o.counterexamples.push(c);
                }
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    let checked = triples.len() as u64 * ks.len() as u64;
    report("saturation", &[("max_size", max_size), ("max_k", max_k)], checked, out)
}

/// `N_{λ,λ,λ} > 0` exactly when `|λ|` is even, and for even `|λ|` the
/// detection witness `μ` has `c_{μ,μ}^λ > 0`.
pub fn check_hahn(max_size: u64) -> ScanReport {
    check_hahn_with(max_size, &no_sink)
}

pub fn check_hahn_with(max_size: u64, sink: Sink) -> ScanReport {
    let ps = partitions_up_to(max_size);
    let out = ps
        .par_iter()
        .map(|lam| {
            let mut o = Outcome::empty();
            let even = lam.size() % 2 == 0;
            let mut fail = |observed: String, expected: &str| {
                let c = counterexample(&[lam], observed, expected);
                sink(&c);
                o.counterexamples.push(c);
            };
            if nl_positive(lam, lam, lam) != even {
                fail(
                    format!("N = {}", nl_number(lam, lam, lam)),
                    if even { "N > 0" } else { "N = 0" },
                );
            }
            if even {
                let mu = detection_witness(lam).expect("even size");
                let c = lr_coefficient(&mu, &mu, lam);
                if c == 0 {
                    fail(format!("witness {mu} has c = 0"), "c > 0");
                }
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    report("hahn", &[("max_size", max_size)], ps.len() as u64, out)
}

/// The support of `s_[μ] s_[ν]` meets exactly the sizes `|μΔν|, |μΔν| + 2,
/// …, |μ| + |ν|`, and every support element other than the smallest (largest)
/// size contains (is contained in) a support element two boxes smaller
/// (larger). Checked over unordered pairs with `|μ|, |ν| ≤ max_size`.
pub fn check_shape(max_size: u64) -> ScanReport {
    check_shape_with(max_size, &no_sink)
}

pub fn check_shape_with(max_size: u64, sink: Sink) -> ScanReport {
    let pairs = unordered_pairs(&partitions_up_to(max_size));
    let out = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let mut o = Outcome::empty();
            let mut fail = |observed: String, expected: &str| {
                let c = counterexample(&[mu, nu], observed, expected);
                sink(&c);
                o.counterexamples.push(c);
            };
            let prod = nl_product(mu, nu);
            let (low, high) = (mu.sym_diff_size(nu), mu.size() + nu.size());
            let mut sizes: Vec<u64> = prod.iter().map(|(l, _)| l.size()).collect();
            sizes.dedup();
            let want: Vec<u64> = (low..=high).step_by(2).collect();
            if sizes != want {
                fail(
                    format!("sizes {}", show_values(&sizes)),
                    "sizes |μΔν|, |μΔν|+2, …, |μ|+|ν|",
                );
            }
            let support: Vec<&Partition> = prod.iter().map(|(l, _)| l).collect();
            for lam in &support {
                let n = lam.size();
                if n > low && !support.iter().any(|s| s.size() + 2 == n && lam.contains(s)) {
                    fail(
                        format!("{lam} has no support element two boxes below"),
                        "a smaller neighbour",
                    );
                }
                if n < high && !support.iter().any(|s| s.size() == n + 2 && s.contains(lam)) {
                    fail(
                        format!("{lam} has no support element two boxes above"),
                        "a larger neighbour",
                    );
                }
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    report("shape", &[("max_size", max_size)], pairs.len() as u64, out)
}

/// The classification of pairs `(μ, ν)` whose product `s_[μ] s_[ν]` has all
/// coefficients at most 1.
pub fn is_nl_multiplicity_free(mu: &Partition, nu: &Partition) -> bool {
    let tiny = |p: &Partition| p.size() <= 1;
    let row_rect = |a: &Partition, b: &Partition| a.is_single_row() && b.is_rectangle();
    let col_rect = |a: &Partition, b: &Partition| a.is_single_column() && b.is_rectangle();
    tiny(mu) || tiny(nu) || row_rect(mu, nu) || row_rect(nu, mu) || col_rect(mu, nu) || col_rect(nu, mu)
}

pub fn check_multiplicity_free(max_size: u64) -> ScanReport {
    check_multiplicity_free_with(max_size, &no_sink)
}

pub fn check_multiplicity_free_with(max_size: u64, sink: Sink) -> ScanReport {
    let pairs = unordered_pairs(&partitions_up_to(max_size));
    let out = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let mut o = Outcome::empty();
            let max = nl_product(mu, nu).max_coeff();
            let predicted = is_nl_multiplicity_free(mu, nu);
            if predicted != (max <= 1) {
                let c = counterexample(
                    &[mu, nu],
                    format!("max coefficient {max}"),
                    if predicted {
                        "max coefficient <= 1"
                    } else {
                        "max coefficient >= 2"
                    },
                );
                sink(&c);
                o.counterexamples.push(c);
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    report("multiplicity-free", &[("max_size", max_size)], pairs.len() as u64, out)
}

/// The products for `(μ∧ν, μ∨ν)`, `(⌊(μ+ν)/2⌋, ⌈(μ+ν)/2⌉)` and
/// `(sort₁, sort₂)`, each minus `s_[μ] s_[ν]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetJoinDifferences {
    pub meet_join: KtExpansion,
    pub halves: KtExpansion,
    pub sorted: KtExpansion,
}

impl MeetJoinDifferences {
    pub fn all(&self) -> [(&'static str, &KtExpansion); 3] {
        [
            ("meet-join", &self.meet_join),
            ("halves", &self.halves),
            ("sorted", &self.sorted),
        ]
    }
}

pub fn meetjoin_differences(mu: &Partition, nu: &Partition) -> MeetJoinDifferences {
    let base = nl_product(mu, nu);
    let diff = |a: Partition, b: Partition| &nl_product(&a, &b) - &base;
    MeetJoinDifferences {
        meet_join: diff(mu.meet(nu), mu.join(nu)),
        halves: diff(mu.half_floor(nu), mu.half_ceil(nu)),
        sorted: diff(mu.sort1(nu), mu.sort2(nu)),
    }
}

pub fn check_meetjoin(max_size: u64) -> ScanReport {
    check_meetjoin_with(max_size, &no_sink)
}

pub fn check_meetjoin_with(max_size: u64, sink: Sink) -> ScanReport {
    let pairs = unordered_pairs(&partitions_up_to(max_size));
    let out = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let mut o = Outcome::empty();
            let d = meetjoin_differences(mu, nu);
            for (name, e) in d.all() {
                if !e.is_nonnegative() {
                    let c = counterexample(&[mu, nu], format!("{name}: {e}"), "nonnegative");
                    sink(&c);
                    o.counterexamples.push(c);
                }
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge);
    report("meet-join", &[("max_size", max_size)], pairs.len() as u64, out)
}

/// `(Σ_θ N_{μ,ν,θ} N_{θ,λ,τ}, Σ_θ N_{ν,λ,θ} N_{μ,θ,τ})`, with `θ` running over
/// the support of `s_[μ] s_[ν]` and of `s_[ν] s_[λ]` respectively.
pub fn associativity_sides(mu: &Partition, nu: &Partition, lam: &Partition, tau: &Partition) -> (u64, u64) {
    let left = nl_product(mu, nu)
        .iter()
        .map(|(theta, _)| nl_number(mu, nu, theta) * nl_number(theta, lam, tau))
        .sum();
    let right = nl_product(nu, lam)
        .iter()
        .map(|(theta, _)| nl_number(nu, lam, theta) * nl_number(mu, theta, tau))
        .sum();
    (left, right)
}

fn check_quadruples(quads: &[[Partition; 4]], sink: Sink) -> Outcome {
    quads
        .par_iter()
        .map(|[mu, nu, lam, tau]| {
            let mut o = Outcome::empty();
            let (l, r) = associativity_sides(mu, nu, lam, tau);
            if l != r {
                let c = counterexample(&[mu, nu, lam, tau], format!("{l} vs {r}"), "equal sides");
                sink(&c);
                o.counterexamples.push(c);
            }
            o
        })
        .reduce(Outcome::empty, Outcome::merge)
}

/// Every quadruple `(μ, ν, λ, τ)` with all sizes `≤ max_size`.
pub fn check_associativity(max_size: u64) -> ScanReport {
    let ps = partitions_up_to(max_size);
    let mut quads = Vec::new();
    for a in &ps {
        for b in &ps {
            for c in &ps {
                for d in &ps {
                    quads.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                }
            }
        }
    }
    let out = check_quadruples(&quads, &no_sink);
    report("associativity", &[("max_size", max_size)], quads.len() as u64, out)
}

/// `samples` quadruples drawn uniformly from partitions of size `≤ max_size`
/// by a ChaCha8 generator seeded with `seed`.
pub fn check_associativity_random(max_size: u64, samples: u64, seed: u64) -> ScanReport {
    let ps = partitions_up_to(max_size);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quads: Vec<[Partition; 4]> = (0..samples)
        .map(|_| std::array::from_fn(|_| ps.choose(&mut rng).expect("nonempty").clone()))
        .collect();
    let out = check_quadruples(&quads, &no_sink);
    report(
        "associativity-random",
        &[("max_size", max_size), ("samples", samples), ("seed", seed)],
        samples,
        out,
    )
}

/// `k ↦ N_{kμ,kν,kλ}` sampled at `k = 1, …, K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NlFunctionSample {
    pub mu: Partition,
    pub nu: Partition,
    pub lam: Partition,
    pub values: Vec<u64>,
}

impl NlFunctionSample {
    /// Value at `k` (1-based).
    pub fn at(&self, k: usize) -> u64 {
        self.values[k - 1]
    }

    /// Values at `k = 1, 3, 5, …`.
    pub fn odd_values(&self) -> Vec<u64> {
        self.values.iter().step_by(2).copied().collect()
    }

    /// Values at `k = 2, 4, 6, …`.
    pub fn even_values(&self) -> Vec<u64> {
        self.values.iter().skip(1).step_by(2).copied().collect()
    }

    /// A positive value at `k` forces positive values at every multiple of `k`.
    pub fn respects_scaling(&self) -> bool {
        let n = self.values.len();
        (1..=n).all(|k| self.at(k) == 0 || (2 * k..=n).step_by(k).all(|m| self.at(m) > 0))
    }
}

pub fn nl_function(mu: &Partition, nu: &Partition, lam: &Partition, max_k: u64) -> NlFunctionSample {
    let values = (1..=max_k)
        .into_par_iter()
        .map(|k| nl_number(&mu.scale(k), &nu.scale(k), &lam.scale(k)))
        .collect();
    NlFunctionSample {
        mu: mu.clone(),
        nu: nu.clone(),
        lam: lam.clone(),
        values,
    }
}

/// Whether a candidate closed form matches every sampled value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisOutcome {
    pub name: String,
    pub sampled: Vec<u64>,
    pub predicted: Vec<u64>,
    pub confirmed: bool,
}

/// Tests the candidates `k(k+1)(k+2)/3` at `2k - 1` and
/// `(2k+3)(k+1)(k+2)/6` at `2k` for `((2,1,1), (2,1,1), (1,1,1,1))`, using
/// `k = 1, …, max_k` (so dilations up to `2 max_k`).
pub fn check_polynomial_hypotheses(max_k: u64) -> Vec<HypothesisOutcome> {
    let mu = Partition::new(vec![2, 1, 1]).expect("valid");
    let lam = Partition::column(4);
    let sample = nl_function(&mu, &mu, &lam, 2 * max_k);
    let ks = 1..=max_k;
    let odd_pred: Vec<u64> = ks.clone().map(|k| k * (k + 1) * (k + 2) / 3).collect();
    let even_pred: Vec<u64> = ks.map(|k| (2 * k + 3) * (k + 1) * (k + 2) / 6).collect();
    let make = |name: &str, sampled: Vec<u64>, predicted: Vec<u64>| HypothesisOutcome {
        name: name.to_string(),
        confirmed: sampled == predicted,
        sampled,
        predicted,
    };
    vec![
        make("N(2k-1) = k(k+1)(k+2)/3", sample.odd_values(), odd_pred),
        make("N(2k) = (2k+3)(k+1)(k+2)/6", sample.even_values(), even_pred),
    ]
}

/// Result of the linear independence experiment for products
/// `s_[λ] s_[λ^∨]` over a rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleberReport {
    pub rows: usize,
    pub cols: u64,
    pub pairs: Vec<(Partition, Partition)>,
    pub rank: usize,
    pub pair_count: usize,
}

impl KleberReport {
    pub fn independent(&self) -> bool {
        self.rank == self.pair_count
    }
}

/// Unordered pairs `{λ, λ^∨}` inside an `a × b` rectangle, smaller member first.
pub fn complement_pairs(a: usize, b: u64) -> Vec<(Partition, Partition)> {
    let mut pairs: Vec<(Partition, Partition)> = partitions_in_box(a, b)
        .into_iter()
        .filter_map(|lam| {
            let dual = lam.complement_in_box(a, b).expect("inside the box");
            (lam <= dual).then_some((lam, dual))
        })
        .collect();
    pairs.sort();
    pairs
}

pub fn kleber_rank(a: usize, b: u64) -> KleberReport {
    let pairs = complement_pairs(a, b);
    let products: Vec<KtExpansion> = pairs.par_iter().map(|(x, y)| nl_product(x, y)).collect();
    let mut columns: Vec<Partition> = products.iter().flat_map(|e| e.iter().map(|(p, _)| p.clone())).collect();
    columns.sort();
    columns.dedup();
    let matrix: Vec<Vec<BigInt>> = products
        .iter()
        .map(|e| columns.iter().map(|p| BigInt::from(e.coeff(p))).collect())
        .collect();
    let rank = bareiss_rank(matrix);
    KleberReport {
        rows: a,
        cols: b,
        pair_count: pairs.len(),
        pairs,
        rank,
    }
}

/// Rank over `ℚ` by fraction-free elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != zero) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = zero.clone();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newell_littlewood::h_profile;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn partition_count_up_to(n: u64) -> u64 {
        (0..=n).map(|k| partitions_of(k).len() as u64).sum()
    }

    #[test]
    fn scan_sizes_are_exact() {
        let pc = partition_count_up_to(4);
        assert_eq!(check_unimodality(4).checked, pc * (pc + 1) / 2);
        assert_eq!(check_hahn(4).checked, pc);
        assert_eq!(check_associativity(1).checked, 2u64.pow(4));

        // multisets of three with even total: all even, or two odd and one even
        let even = (0..=4)
            .filter(|k| k % 2 == 0)
            .map(|k| partitions_of(k).len() as u64)
            .sum::<u64>();
        let odd = pc - even;
        let want = (even + 2) * (even + 1) * even / 6 + (odd + 1) * odd / 2 * even;
        assert_eq!(check_saturation(4, 3).checked, want * 2);
        assert_eq!(check_saturation(4, 1).checked, 0);
    }

    #[test]
    fn small_scans_pass() {
        for r in [
            check_unimodality(4),
            check_saturation(4, 3),
            check_hahn(6),
            check_shape(4),
            check_multiplicity_free(4),
            check_meetjoin(4),
            check_associativity(2),
            check_associativity_random(4, 20, 7),
        ] {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn random_associativity_is_deterministic() {
        assert_eq!(
            check_associativity_random(3, 10, 1),
            check_associativity_random(3, 10, 1)
        );
    }

    #[test]
    fn unimodality_flags_log_concavity_failures() {
        let r = check_unimodality(4);
        let hit = r
            .flagged
            .iter()
            .find(|c| c.input == vec![p("2,2"), p("2,2")])
            .expect("(2,2)² is flagged");
        assert_eq!(hit.observed, "1,2,6,8,6");
    }

    #[test]
    fn sink_sees_counterexamples() {
        use std::sync::Mutex;
        let seen = Mutex::new(0);
        let r = check_hahn_with(4, &|_| *seen.lock().unwrap() += 1);
        assert_eq!(*seen.lock().unwrap(), r.counterexamples.len());
    }

    #[test]
    fn multiplicity_free_examples() {
        assert!(is_nl_multiplicity_free(&p("1"), &p("7,3,2")));
        assert!(is_nl_multiplicity_free(&p("3"), &p("2,2,2")));
        assert!(!is_nl_multiplicity_free(&p("2,1"), &p("2,1")));
        assert_eq!(nl_product(&p("2,1"), &p("2,1")).coeff(&p("2,1,1")), 3);
        assert!(!is_nl_multiplicity_free(&p("2,2"), &p("2,2")));
        for c in 1..=4u64 {
            for d in 1..=4usize {
                let rect = Partition::rectangle(d, c);
                assert!(is_nl_multiplicity_free(&p("2"), &rect));
                if c + d as u64 <= 6 {
                    assert!(nl_product(&p("2"), &rect).max_coeff() <= 1);
                }
            }
        }
    }

    #[test]
    fn meetjoin_example() {
        let d = meetjoin_differences(&p("2"), &p("1,1"));
        assert_eq!(d.meet_join, KtExpansion::basis_element(p("2,2")));
        let same = meetjoin_differences(&p("3,1"), &p("3,1"));
        assert!(same.all().iter().all(|(_, e)| e.is_zero()));
    }

    #[test]
    fn associativity_examples() {
        let one = p("1");
        let (l, r) = associativity_sides(&one, &one, &one, &one);
        assert_eq!(l, r);
        assert!(l > 0);
        let (l, r) = associativity_sides(&Partition::empty(), &p("2,1"), &p("1"), &p("2"));
        assert_eq!(l, r);
        assert_eq!(l, nl_number(&p("2,1"), &p("1"), &p("2")));
    }

    #[test]
    fn nl_function_examples() {
        let one = p("1,1");
        let f = nl_function(&one, &one, &one, 8);
        // ⌈(k+1)/2⌉: k at 2k - 1 and k + 1 at 2k
        assert_eq!(f.values, vec![1, 2, 2, 3, 3, 4, 4, 5]);
        assert_eq!(f.odd_values(), vec![1, 2, 3, 4]);
        assert_eq!(f.even_values(), vec![2, 3, 4, 5]);
        assert!(f.respects_scaling());
        let g = nl_function(&p("2,1,1"), &p("2,1,1"), &p("2,1,1"), 3);
        assert_eq!(g.values, vec![4, 18, 51]);
    }

    #[test]
    fn hypotheses_are_evaluated() {
        let outs = check_polynomial_hypotheses(2);
        assert_eq!(outs.len(), 2);
        for o in outs {
            assert_eq!(o.sampled.len(), 2);
            assert_eq!(o.confirmed, o.sampled == o.predicted);
        }
    }

    #[test]
    fn kleber_examples() {
        let r = kleber_rank(2, 2);
        assert_eq!(r.pair_count, 4);
        assert_eq!(r.rank, 4);
        let r = kleber_rank(1, 1);
        assert_eq!((r.pair_count, r.rank), (1, 1));
        let r = kleber_rank(1, 2);
        assert_eq!(r.pair_count, 2);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn bareiss_small_matrices() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(bareiss_rank(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(bareiss_rank(m(&[&[2, 0, 1], &[0, 3, 1], &[1, 1, 5]])), 3);
        assert_eq!(bareiss_rank(Vec::new()), 0);
    }

    #[test]
    fn profile_of_matches_h_profile() {
        let (mu, nu) = (p("3"), p("2,1"));
        assert_eq!(profile_of(&mu, &nu, &nl_product(&mu, &nu)), h_profile(&mu, &nu));
    }
}

//! Newell-Littlewood numbers `N_{μ,ν,λ} = Σ_{α,β,γ} c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ`
//! and the products `s_[μ] s_[ν]` they describe.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{subpartitions, subpartitions_of_size, Partition, SkewShape};
use crate::symfunc::{schur_product, skew_schur, KtExpansion, SchurExpansion};
use crate::tableau::{lr_coefficient, Filling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NlError {
    #[error("{0} has odd size")]
    OddSize(Partition),
}

/// A triple `(α, β, γ)` whose three LR factors are all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub multiplicity: u64,
}

/// Sizes `(|α|, |β|, |γ|)` forced by `|α|+|β| = |μ|`, `|α|+|γ| = |ν|`,
/// `|β|+|γ| = |λ|`, or `None` when parity, the triangle inequality, or the
/// intersection bound rules out any witness.
fn witness_sizes(mu: &Partition, nu: &Partition, lam: &Partition) -> Option<(u64, u64, u64)> {
    let (m, n, l) = (mu.size(), nu.size(), lam.size());
    if (m + n + l) % 2 == 1 || m > n + l || n > m + l || l > m + n {
        return None;
    }
    let a = (m + n - l) / 2;
    let b = (m + l - n) / 2;
    let g = (n + l - m) / 2;
    if mu.meet(nu).size() < a || mu.meet(lam).size() < b || nu.meet(lam).size() < g {
        return None;
    }
    Some((a, b, g))
}

/// Calls `visit(α, β, γ, multiplicity)` for every witness.
fn for_each_witness(
    mu: &Partition,
    nu: &Partition,
    lam: &Partition,
    visit: &mut dyn FnMut(&Partition, &Partition, &Partition, u64) -> bool,
) {
    let Some((a, b, g)) = witness_sizes(mu, nu, lam) else {
        return;
    };
    let betas = subpartitions_of_size(&mu.meet(lam), b);
    let gammas = subpartitions_of_size(&nu.meet(lam), g);
    for alpha in subpartitions_of_size(&mu.meet(nu), a) {
        let left: Vec<(&Partition, u64)> = betas
            .iter()
            .filter_map(|beta| {
                let c = lr_coefficient(&alpha, beta, mu);
                (c > 0).then_some((beta, c))
            })
            .collect();
        if left.is_empty() {
            continue;
        }
        let right: Vec<(&Partition, u64)> = gammas
            .iter()
            .filter_map(|gamma| {
                let c = lr_coefficient(&alpha, gamma, nu);
                (c > 0).then_some((gamma, c))
            })
            .collect();
        for &(beta, c1) in &left {
            for &(gamma, c2) in &right {
                let c3 = lr_coefficient(beta, gamma, lam);
                if c3 > 0 && !visit(&alpha, beta, gamma, c1 * c2 * c3) {
                    return;
                }
            }
        }
    }
}

pub fn nl_number(mu: &Partition, nu: &Partition, lam: &Partition) -> u64 {
    let mut total = 0u64;
    for_each_witness(mu, nu, lam, &mut |_, _, _, m| {
        total += m;
        true
    });
    total
}

/// `N_{μ,ν,λ} > 0`, stopping at the first witness.
pub fn nl_positive(mu: &Partition, nu: &Partition, lam: &Partition) -> bool {
    let mut found = false;
    for_each_witness(mu, nu, lam, &mut |_, _, _, _| {
        found = true;
        false
    });
    found
}

/// All witnesses, sorted; their multiplicities sum to `N_{μ,ν,λ}`.
pub fn nl_witnesses(mu: &Partition, nu: &Partition, lam: &Partition) -> Vec<Witness> {
    let mut out = Vec::new();
    for_each_witness(mu, nu, lam, &mut |a, b, g, m| {
        out.push(Witness {
            alpha: a.clone(),
            beta: b.clone(),
            gamma: g.clone(),
            multiplicity: m,
        });
        true
    });
    out.sort();
    out
}

/// `s_[μ] s_[ν] = Σ_{α ⊆ μ∧ν} s_{μ/α} s_{ν/α}`, read in the Koike-Terada basis.
pub fn nl_product(mu: &Partition, nu: &Partition) -> KtExpansion {
    let alphas = subpartitions(&mu.meet(nu));
    alphas
        .par_iter()
        .map(|alpha| schur_product(&skew_schur(mu, alpha), &skew_schur(nu, alpha)))
        .reduce(SchurExpansion::zero, |mut a, b| {
            a += &b;
            a
        })
        .rebase()
}

/// Bilinear extension of [`nl_product`] to Koike-Terada expansions.
pub fn kt_multiply(a: &KtExpansion, b: &KtExpansion) -> KtExpansion {
    let mut out = KtExpansion::zero();
    for (p, c) in a.iter() {
        for (q, d) in b.iter() {
            out += &nl_product(p, q).scaled(c * d);
        }
    }
    out
}

/// `s_[μ] s_[(p)]`: remove a horizontal strip of `j` boxes from `μ`, then add
/// a horizontal strip of `p - j` boxes, for each `0 ≤ j ≤ p`.
pub fn nl_pieri(mu: &Partition, p: u64) -> KtExpansion {
    let mut out = KtExpansion::zero();
    for j in 0..=p {
        for removed in mu.remove_horizontal_strip(j) {
            for lam in removed.add_horizontal_strip(p - j) {
                out.add_term(lam, 1);
            }
        }
    }
    out
}

/// `values[t] = Σ_{|λ| = |μΔν| + 2t} N_{μ,ν,λ}` for `0 ≤ t ≤ |μ∧ν|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HProfile {
    pub mu: Partition,
    pub nu: Partition,
    pub values: Vec<u64>,
}

impl HProfile {
    pub fn is_unimodal(&self) -> bool {
        let v = &self.values;
        let peak = (0..v.len()).find(|&i| i + 1 == v.len() || v[i] > v[i + 1]);
        match peak {
            None => true,
            Some(p) => v[..=p].windows(2).all(|w| w[0] <= w[1]) && v[p..].windows(2).all(|w| w[0] >= w[1]),
        }
    }

    /// `h_t² ≥ h_{t-1} h_{t+1}` at every interior index.
    pub fn is_log_concave(&self) -> bool {
        self.values
            .windows(3)
            .all(|w| (w[1] as u128) * (w[1] as u128) >= (w[0] as u128) * (w[2] as u128))
    }
}

pub fn h_profile(mu: &Partition, nu: &Partition) -> HProfile {
    profile_of(mu, nu, &nl_product(mu, nu))
}

/// Builds the profile from an already computed `nl_product(μ, ν)`.
pub fn profile_of(mu: &Partition, nu: &Partition, product: &KtExpansion) -> HProfile {
    let low = mu.sym_diff_size(nu);
    let mut values = vec![0u64; mu.meet(nu).size() as usize + 1];
    for (lam, c) in product.iter() {
        let t = ((lam.size() - low) / 2) as usize;
        values[t] += c as u64;
    }
    HProfile {
        mu: mu.clone(),
        nu: nu.clone(),
        values,
    }
}

/// 1-based indices of the odd parts of `λ`.
fn odd_rows(lam: &Partition) -> Vec<usize> {
    (0..lam.len())
        .filter(|&i| lam.part(i) % 2 == 1)
        .map(|i| i + 1)
        .collect()
}

/// A `μ` with `c_{μ,μ}^λ > 0` for `|λ|` even: even parts are halved, odd parts
/// are rounded up in the top half of the odd rows and down in the bottom half.
pub fn detection_witness(lam: &Partition) -> Result<Partition, NlError> {
    if lam.size() % 2 == 1 {
        return Err(NlError::OddSize(lam.clone()));
    }
    let odd = odd_rows(lam);
    let split = odd.len() / 2;
    let parts = (0..lam.len())
        .map(|i| {
            let x = lam.part(i);
            match odd.iter().position(|&r| r == i + 1) {
                None => x / 2,
                Some(k) if k < split => x.div_ceil(2),
                Some(_) => x / 2,
            }
        })
        .collect();
    Ok(Partition::new(parts).expect("halving keeps parts decreasing"))
}

/// The LR tableau of shape `λ/μ` and content `μ` certifying
/// [`detection_witness`]. Row `i` holds `i`s, except that the `j`-th odd row
/// of the bottom half starts with one box labelled by the `j`-th odd row of
/// the top half.
pub fn detection_filling(lam: &Partition) -> Result<Filling, NlError> {
    let mu = detection_witness(lam)?;
    let odd = odd_rows(lam);
    let split = odd.len() / 2;
    let rows = (0..lam.len())
        .map(|i| {
            let label = (i + 1) as u32;
            let len = (lam.part(i) - mu.part(i)) as usize;
            match odd.iter().position(|&r| r == i + 1) {
                Some(k) if k >= split => {
                    let mut row = vec![odd[k - split] as u32];
                    row.extend(std::iter::repeat_n(label, len - 1));
                    row
                }
                _ => vec![label; len],
            }
        })
        .collect();
    let shape = SkewShape::new(lam.clone(), mu).expect("witness fits inside λ");
    Ok(Filling::new(shape, rows).expect("row lengths match the shape"))
}

/// Walks of length `k` from `∅` to `λ` in Young's lattice that add or remove
/// one box per step: the coefficient of `s_[λ]` in `s_[(1)]^k`.
pub fn oscillating_count(lam: &Partition, k: u64) -> u64 {
    oscillating_distribution(k).get(lam).copied().unwrap_or(0)
}

/// Walk counts for every endpoint reachable in exactly `k` steps.
pub fn oscillating_distribution(k: u64) -> HashMap<Partition, u64> {
    let mut cur: HashMap<Partition, u64> = HashMap::from([(Partition::empty(), 1)]);
    for _ in 0..k {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (p, c) in &cur {
            for q in p.add_one_box().into_iter().chain(p.remove_one_box()) {
                let slot = next.entry(q).or_insert(0);
                *slot = slot.checked_add(*c).expect("walk count overflows u64");
            }
        }
        cur = next;
    }
    cur
}

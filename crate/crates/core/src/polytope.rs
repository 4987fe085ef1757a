//! The polytope in `ℝ^{3n²}` whose lattice points are the triples of LR
//! tableaux counted by `N_{μ,ν,λ}`.
//!
//! Variable `X_i^j` (`X ∈ {α, β, γ}`) is the number of letters `i` in row `j`
//! of the corresponding tableau: `β` fills `μ/α`, `α` fills `ν/γ` and `γ`
//! fills `λ/β`. Printed names are `a[i][j]`, `b[i][j]`, `c[i][j]`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Partition, SkewShape};
use crate::tableau::Filling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("dimension {n} is smaller than the longest partition ({needed})")]
    DimensionTooSmall { n: usize, needed: usize },
    #[error("dilation factor must be positive")]
    ZeroDilation,
    #[error("part too large to scale: {0}")]
    Scale(#[from] crate::partition::PartitionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Matrix {
    Alpha,
    Beta,
    Gamma,
}

impl Matrix {
    fn name(self) -> char {
        match self {
            Matrix::Alpha => 'a',
            Matrix::Beta => 'b',
            Matrix::Gamma => 'c',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    NonNegativity,
    Shape,
    Semistandard,
    Ballot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

/// `Σ coeff · x  (≤ | =)  rhs` with every coefficient `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub family: Family,
    pub terms: Vec<(usize, i64)>,
    pub relation: Relation,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NlPolytope {
    n: usize,
    mu: Partition,
    nu: Partition,
    lam: Partition,
    constraints: Vec<Constraint>,
}

/// A lattice point; `alpha[i][j]` is `α_{i+1}^{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub alpha: Vec<Vec<u64>>,
    pub beta: Vec<Vec<u64>>,
    pub gamma: Vec<Vec<u64>>,
}

impl NlPolytope {
    pub fn build(mu: &Partition, nu: &Partition, lam: &Partition, n: usize) -> Result<Self, PolytopeError> {
        let needed = mu.len().max(nu.len()).max(lam.len()).max(1);
        if n < needed {
            return Err(PolytopeError::DimensionTooSmall { n, needed });
        }
        let mut p = NlPolytope {
            n,
            mu: mu.clone(),
            nu: nu.clone(),
            lam: lam.clone(),
            constraints: Vec::new(),
        };
        p.constraints = p.materialize();
        Ok(p)
    }

    /// Builds with `n = max(ℓ(μ), ℓ(ν), ℓ(λ), 1)`.
    pub fn build_default(mu: &Partition, nu: &Partition, lam: &Partition) -> Self {
        let n = mu.len().max(nu.len()).max(lam.len()).max(1);
        Self::build(mu, nu, lam, n).expect("default dimension is large enough")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> (&Partition, &Partition, &Partition) {
        (&self.mu, &self.nu, &self.lam)
    }

    pub fn num_variables(&self) -> usize {
        3 * self.n * self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Index of `X_i^j` with 1-based `letter = i`, `row = j`.
    pub fn var(&self, m: Matrix, letter: usize, row: usize) -> usize {
        let block = match m {
            Matrix::Alpha => 0,
            Matrix::Beta => 1,
            Matrix::Gamma => 2,
        };
        block * self.n * self.n + (letter - 1) * self.n + (row - 1)
    }

    pub fn var_name(&self, v: usize) -> String {
        let nn = self.n * self.n;
        let m = [Matrix::Alpha, Matrix::Beta, Matrix::Gamma][v / nn];
        let r = v % nn;
        format!("{}[{}][{}]", m.name(), r / self.n + 1, r % self.n + 1)
    }

    fn materialize(&self) -> Vec<Constraint> {
        use Matrix::{Alpha as A, Beta as B, Gamma as C};
        let n = self.n;
        let mut out = Vec::new();
        for v in 0..self.num_variables() {
            out.push(Constraint {
                family: Family::NonNegativity,
                terms: vec![(v, -1)],
                relation: Relation::Le,
                rhs: 0,
            });
        }
        // (outer content matrix, row-filling matrix, shape) for each of the
        // three equations Σ_j X_k^j + Σ_i Y_i^k = shape_k.
        let triples = [(A, B, &self.mu), (C, A, &self.nu), (B, C, &self.lam)];
        for &(x, y, shape) in &triples {
            for k in 1..=n {
                let mut terms: Vec<(usize, i64)> = (1..=n).map(|j| (self.var(x, k, j), 1)).collect();
                terms.extend((1..=n).map(|i| (self.var(y, i, k), 1)));
                out.push(Constraint {
                    family: Family::Shape,
                    terms,
                    relation: Relation::Eq,
                    rhs: shape.part(k - 1) as i64,
                });
            }
        }
        for &(x, y, _) in &triples {
            for k in 1..n {
                for l in 1..=n {
                    let mut terms = Vec::new();
                    terms.extend((1..=n).map(|j| (self.var(x, k + 1, j), 1)));
                    terms.extend((1..=l).map(|i| (self.var(y, i, k + 1), 1)));
                    terms.extend((1..=n).map(|j| (self.var(x, k, j), -1)));
                    terms.extend((1..l).map(|i| (self.var(y, i, k), -1)));
                    out.push(Constraint {
                        family: Family::Semistandard,
                        terms,
                        relation: Relation::Le,
                        rhs: 0,
                    });
                }
            }
        }
        for x in [A, B, C] {
            for l in 1..n {
                for k in 1..=n {
                    let mut terms: Vec<(usize, i64)> = (1..=k).map(|i| (self.var(x, l + 1, i), 1)).collect();
                    terms.extend((1..k).map(|i| (self.var(x, l, i), -1)));
                    out.push(Constraint {
                        family: Family::Ballot,
                        terms,
                        relation: Relation::Le,
                        rhs: 0,
                    });
                }
            }
        }
        out
    }

    /// `P_{kμ,kν,kλ}` in the same dimension, which is the `k`-fold dilation.
    pub fn dilate(&self, k: u64) -> Result<Self, PolytopeError> {
        if k == 0 {
            return Err(PolytopeError::ZeroDilation);
        }
        Self::build(
            &self.mu.checked_scale(k)?,
            &self.nu.checked_scale(k)?,
            &self.lam.checked_scale(k)?,
            self.n,
        )
    }

    pub fn satisfies(&self, point: &LatticePoint) -> bool {
        let x = self.flatten(point);
        x.len() == self.num_variables()
            && self.constraints.iter().all(|c| {
                let lhs: i64 = c.terms.iter().map(|&(v, a)| a * x[v]).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    fn flatten(&self, point: &LatticePoint) -> Vec<i64> {
        [&point.alpha, &point.beta, &point.gamma]
            .iter()
            .flat_map(|m| m.iter().flatten().map(|&v| v as i64))
            .collect()
    }

    fn unflatten(&self, x: &[i64]) -> LatticePoint {
        let n = self.n;
        let block = |b: usize| -> Vec<Vec<u64>> {
            (0..n)
                .map(|i| (0..n).map(|j| x[b * n * n + i * n + j] as u64).collect())
                .collect()
        };
        LatticePoint {
            alpha: block(0),
            beta: block(1),
            gamma: block(2),
        }
    }

    pub fn count_lattice_points(&self) -> u64 {
        let mut count = 0u64;
        Search::new(self).run(&mut |_| count += 1);
        count
    }

    pub fn enumerate_lattice_points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        Search::new(self).run(&mut |x| out.push(self.unflatten(x)));
        out
    }

    /// One constraint per line: `+1 a[1][1] +1 b[1][1] == 1`.
    pub fn dump_constraints(&self) -> String {
        let mut s = String::new();
        for c in &self.constraints {
            for &(v, a) in &c.terms {
                s.push_str(if a > 0 { "+1 " } else { "-1 " });
                s.push_str(&self.var_name(v));
                s.push(' ');
            }
            s.push_str(match c.relation {
                Relation::Le => "<= ",
                Relation::Eq => "== ",
            });
            s.push_str(&c.rhs.to_string());
            s.push('\n');
        }
        s
    }
}

/// Depth-first enumeration in the order β, γ, α (each row-major). Shape
/// equations bound and force values; inequalities are pruned with the
/// smallest left-hand side still reachable.
struct Search<'a> {
    order: Vec<usize>,
    /// static upper bound of each variable
    ub: Vec<i64>,
    x: Vec<i64>,
    /// for each variable: (constraint index, coefficient)
    touches: Vec<Vec<(usize, i64)>>,
    cons: &'a [Constraint],
    /// assigned part of each left-hand side
    partial: Vec<i64>,
    /// Σ ub over unassigned variables with coefficient -1
    neg_cap: Vec<i64>,
    /// Σ ub over unassigned variables with coefficient +1
    pos_cap: Vec<i64>,
    /// unassigned variable count of each constraint
    open: Vec<usize>,
    feasible: bool,
}

impl<'a> Search<'a> {
    fn new(p: &'a NlPolytope) -> Self {
        let n = p.n;
        let nv = p.num_variables();
        let cons = &p.constraints[..];
        let mut ub = vec![i64::MAX; nv];
        for c in cons.iter().filter(|c| c.family == Family::Shape) {
            for &(v, _) in &c.terms {
                ub[v] = ub[v].min(c.rhs);
            }
        }
        // The ballot constraints force X_i^j = 0 for j < i.
        for m in [Matrix::Alpha, Matrix::Beta, Matrix::Gamma] {
            for i in 1..=n {
                for j in 1..i {
                    ub[p.var(m, i, j)] = 0;
                }
            }
        }
        let mut order = Vec::with_capacity(nv);
        for m in [Matrix::Beta, Matrix::Gamma, Matrix::Alpha] {
            for i in 1..=n {
                for j in 1..=n {
                    order.push(p.var(m, i, j));
                }
            }
        }
        let mut touches = vec![Vec::new(); nv];
        let mut neg_cap = vec![0; cons.len()];
        let mut pos_cap = vec![0; cons.len()];
        let mut open = vec![0; cons.len()];
        let partial = vec![0; cons.len()];
        for (ci, c) in cons.iter().enumerate() {
            if c.family == Family::NonNegativity {
                continue;
            }
            for &(v, a) in &c.terms {
                touches[v].push((ci, a));
                if a < 0 {
                    neg_cap[ci] += ub[v];
                } else {
                    pos_cap[ci] += ub[v];
                }
                open[ci] += 1;
            }
        }
        // Parity: the shape equations sum to 2 Σ x = |μ| + |ν| + |λ|.
        let total = p.mu.size() + p.nu.size() + p.lam.size();
        Search {
            order,
            ub,
            x: vec![0; nv],
            touches,
            cons,
            partial,
            neg_cap,
            pos_cap,
            open,
            feasible: total.is_multiple_of(2),
        }
    }

    fn run(mut self, visit: &mut dyn FnMut(&[i64])) {
        if !self.feasible || !self.all_reachable(0..self.cons.len()) {
            return;
        }
        self.step(0, visit);
    }

    fn reachable(&self, ci: usize) -> bool {
        let c = &self.cons[ci];
        let lo = self.partial[ci] - self.neg_cap[ci];
        match c.relation {
            Relation::Le => lo <= c.rhs,
            Relation::Eq => lo <= c.rhs && self.partial[ci] + self.pos_cap[ci] >= c.rhs,
        }
    }

    fn all_reachable(&self, cis: impl Iterator<Item = usize>) -> bool {
        cis.filter(|&ci| self.cons[ci].family != Family::NonNegativity)
            .all(|ci| self.reachable(ci))
    }

    fn step(&mut self, depth: usize, visit: &mut dyn FnMut(&[i64])) {
        if depth == self.order.len() {
            visit(&self.x);
            return;
        }
        let v = self.order[depth];
        let mut lo = 0;
        let mut hi = self.ub[v];
        for &(ci, _) in &self.touches[v] {
            let c = &self.cons[ci];
            if c.relation != Relation::Eq {
                continue;
            }
            let residual = c.rhs - self.partial[ci];
            hi = hi.min(residual);
            if self.open[ci] == 1 {
                lo = lo.max(residual);
            }
        }
        if lo > hi {
            return;
        }
        for &(ci, a) in &self.touches[v] {
            if a < 0 {
                self.neg_cap[ci] -= self.ub[v];
            } else {
                self.pos_cap[ci] -= self.ub[v];
            }
            self.open[ci] -= 1;
        }
        for val in lo..=hi {
            for &(ci, a) in &self.touches[v] {
                self.partial[ci] += a * val;
            }
            self.x[v] = val;
            let ok = self.touches[v].iter().all(|&(ci, _)| self.reachable(ci));
            if ok {
                self.step(depth + 1, visit);
            }
            for &(ci, a) in &self.touches[v] {
                self.partial[ci] -= a * val;
            }
        }
        self.x[v] = 0;
        for &(ci, a) in &self.touches[v] {
            if a < 0 {
                self.neg_cap[ci] += self.ub[v];
            } else {
                self.pos_cap[ci] += self.ub[v];
            }
            self.open[ci] += 1;
        }
    }
}

/// The three LR tableaux `(T, U, V)` of shapes `μ/α`, `ν/γ`, `λ/β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauTriple {
    pub t: Filling,
    pub u: Filling,
    pub v: Filling,
}

fn row_sums(m: &[Vec<u64>]) -> Vec<u64> {
    m.iter().map(|r| r.iter().sum()).collect()
}

/// Row `j` of the filling holds `m[i][j]` letters `i + 1`, in increasing order.
fn filling_from_counts(outer: &Partition, inner: &Partition, m: &[Vec<u64>]) -> Option<Filling> {
    let shape = SkewShape::new(outer.clone(), inner.clone()).ok()?;
    let rows: Vec<Vec<u32>> = (0..m.len())
        .map(|j| {
            (0..m.len())
                .flat_map(|i| std::iter::repeat_n((i + 1) as u32, m[i][j] as usize))
                .collect()
        })
        .collect();
    Filling::new(shape, rows)
}

impl LatticePoint {
    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Content partitions `(α, β, γ)`; `None` if a row sum vector is not a partition.
    pub fn contents(&self) -> Option<(Partition, Partition, Partition)> {
        Some((
            Partition::new(row_sums(&self.alpha)).ok()?,
            Partition::new(row_sums(&self.beta)).ok()?,
            Partition::new(row_sums(&self.gamma)).ok()?,
        ))
    }

    /// The shapes are recovered as `μ = α + (rows of T)` and so on.
    pub fn to_tableaux(&self) -> Option<TableauTriple> {
        let (a, b, g) = self.contents()?;
        let n = self.n();
        let col = |m: &[Vec<u64>], j: usize| -> u64 { (0..n).map(|i| m[i][j]).sum() };
        let outer = |inner: &Partition, m: &[Vec<u64>]| {
            Partition::new((0..n).map(|j| inner.part(j) + col(m, j)).collect()).ok()
        };
        let mu = outer(&a, &self.beta)?;
        let nu = outer(&g, &self.alpha)?;
        let lam = outer(&b, &self.gamma)?;
        Some(TableauTriple {
            t: filling_from_counts(&mu, &a, &self.beta)?,
            u: filling_from_counts(&nu, &g, &self.alpha)?,
            v: filling_from_counts(&lam, &b, &self.gamma)?,
        })
    }

    pub fn from_tableaux(triple: &TableauTriple, n: usize) -> LatticePoint {
        let counts = |f: &Filling| -> Vec<Vec<u64>> {
            (1..=n)
                .map(|i| (1..=n).map(|j| f.count_in_row(i as u32, j)).collect())
                .collect()
        };
        LatticePoint {
            alpha: counts(&triple.u),
            beta: counts(&triple.t),
            gamma: counts(&triple.v),
        }
    }

    /// Coordinatewise sum of two points of the same dimension.
    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        let add = |x: &[Vec<u64>], y: &[Vec<u64>]| -> Vec<Vec<u64>> {
            x.iter()
                .zip(y)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
                .collect()
        };
        LatticePoint {
            alpha: add(&self.alpha, &other.alpha),
            beta: add(&self.beta, &other.beta),
            gamma: add(&self.gamma, &other.gamma),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &[Vec<u64>]| {
            m.iter()
                .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join(" | ")
        };
        write!(
            f,
            "a: {}; b: {}; c: {}",
            show(&self.alpha),
            show(&self.beta),
            show(&self.gamma)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newell_littlewood::nl_number;
    use crate::partition::partitions_up_to;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn count(mu: &str, nu: &str, lam: &str, n: usize) -> u64 {
        NlPolytope::build(&p(mu), &p(nu), &p(lam), n)
            .unwrap()
            .count_lattice_points()
    }

    #[test]
    fn one_dimensional_example() {
        let poly = NlPolytope::build(&p("1"), &p("1"), &p("-"), 1).unwrap();
        assert_eq!(poly.num_variables(), 3);
        let shape: Vec<String> = poly
            .constraints()
            .iter()
            .filter(|c| c.family == Family::Shape)
            .map(|c| {
                let mut names: Vec<String> = c.terms.iter().map(|&(v, _)| poly.var_name(v)).collect();
                names.sort();
                format!("{} = {}", names.join(" + "), c.rhs)
            })
            .collect();
        assert_eq!(
            shape,
            vec![
                "a[1][1] + b[1][1] = 1",
                "a[1][1] + c[1][1] = 1",
                "b[1][1] + c[1][1] = 0"
            ]
        );
        assert_eq!(poly.count_lattice_points(), 1);
    }

    #[test]
    fn dump_format() {
        let poly = NlPolytope::build(&p("1"), &p("1"), &p("-"), 1).unwrap();
        let dump = poly.dump_constraints();
        assert!(dump.lines().any(|l| l == "+1 a[1][1] +1 b[1][1] == 1"));
        assert!(dump.lines().any(|l| l == "-1 c[1][1] <= 0"));
        assert!(poly
            .constraints()
            .iter()
            .all(|c| c.terms.iter().all(|&(_, a)| a == 1 || a == -1)));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count("-", "-", "-", 1), 1);
        let origin = NlPolytope::build_default(&p("-"), &p("-"), &p("-")).enumerate_lattice_points();
        assert_eq!(origin.len(), 1);
        assert!(origin[0].alpha.iter().flatten().all(|&x| x == 0));
        assert_eq!(count("2,2", "2,2", "2,2", 2), 2);
        assert_eq!(count("1", "1", "1", 1), 0);
        assert_eq!(count("1,1", "1,1", "1,1", 2), 1);
        assert_eq!(
            NlPolytope::build(&p("2,2"), &p("2,2"), &p("2,2"), 2)
                .unwrap()
                .num_variables(),
            12
        );
    }

    #[test]
    fn rejects_small_dimension() {
        assert_eq!(
            NlPolytope::build(&p("1,1,1"), &p("1"), &p("2"), 2),
            Err(PolytopeError::DimensionTooSmall { n: 2, needed: 3 })
        );
        assert!(NlPolytope::build(&p("-"), &p("-"), &p("-"), 0).is_err());
    }

    #[test]
    fn dilation() {
        let poly = NlPolytope::build_default(&p("1,1"), &p("1,1"), &p("1,1"));
        assert_eq!(poly.dilate(1).unwrap(), poly);
        assert_eq!(poly.dilate(2).unwrap().count_lattice_points(), 2);
        assert_eq!(poly.dilate(0), Err(PolytopeError::ZeroDilation));
    }

    #[test]
    fn counts_match_numbers() {
        let ps = partitions_up_to(4);
        for mu in &ps {
            for nu in &ps {
                for lam in &ps {
                    let poly = NlPolytope::build_default(mu, nu, lam);
                    assert_eq!(poly.count_lattice_points(), nl_number(mu, nu, lam), "{mu} {nu} {lam}");
                }
            }
        }
    }

    #[test]
    fn count_is_stable_in_dimension() {
        let ps = partitions_up_to(3);
        for mu in &ps {
            for nu in &ps {
                for lam in &ps {
                    let base = NlPolytope::build_default(mu, nu, lam);
                    let c = base.count_lattice_points();
                    for extra in 1..=2 {
                        let bigger = NlPolytope::build(mu, nu, lam, base.n() + extra).unwrap();
                        assert_eq!(bigger.count_lattice_points(), c, "{mu} {nu} {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn points_round_trip_through_tableaux() {
        let ps = partitions_up_to(4);
        for mu in &ps {
            for nu in &ps {
                for lam in &ps {
                    let poly = NlPolytope::build_default(mu, nu, lam);
                    for pt in poly.enumerate_lattice_points() {
                        assert!(poly.satisfies(&pt));
                        let (a, b, g) = pt.contents().unwrap();
                        let tri = pt.to_tableaux().unwrap();
                        for (f, outer, inner, content) in
                            [(&tri.t, mu, &a, &b), (&tri.u, nu, &g, &a), (&tri.v, lam, &b, &g)]
                        {
                            assert!(f.is_semistandard() && f.is_ballot());
                            assert_eq!(f.shape().outer(), outer);
                            assert_eq!(f.shape().inner(), inner);
                            assert_eq!(f.content().as_partition().as_ref(), Some(content));
                        }
                        assert_eq!(LatticePoint::from_tableaux(&tri, poly.n()), pt);
                    }
                }
            }
        }
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u64..3, 0..3).prop_map(|v| Partition::from_unsorted(v).unwrap())
    }

    fn triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
        (small_partition(), small_partition(), small_partition())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sums_of_points_are_points(x in triple(), y in triple()) {
            let p1 = NlPolytope::build(&x.0, &x.1, &x.2, 3).unwrap();
            let p2 = NlPolytope::build(&y.0, &y.1, &y.2, 3).unwrap();
            let sum = NlPolytope::build(&x.0.add(&y.0), &x.1.add(&y.1), &x.2.add(&y.2), 3).unwrap();
            for a in p1.enumerate_lattice_points() {
                for b in p2.enumerate_lattice_points() {
                    prop_assert!(sum.satisfies(&a.add(&b)));
                }
            }
        }

        #[test]
        fn dilations_stay_nonempty(x in triple(), k in 1u64..=4) {
            let poly = NlPolytope::build_default(&x.0, &x.1, &x.2);
            if poly.count_lattice_points() > 0 {
                prop_assert!(poly.dilate(k).unwrap().count_lattice_points() > 0);
            }
        }
    }
}

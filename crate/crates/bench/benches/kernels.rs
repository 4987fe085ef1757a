use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nl_core::analysis;
use nl_core::inequalities::{extended_weyl_holds, horn_holds};
use nl_core::newell_littlewood::{nl_number, nl_product};
use nl_core::partition::partitions_up_to;
use nl_core::polytope::NlPolytope;
use nl_core::symfunc::kt_to_schur_with_rows;
use nl_core::tableau::lr_coefficient_uncached;
use nl_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

fn lr(c: &mut Criterion) {
    let mut g = c.benchmark_group("lr_coefficient");
    for (mu, nu, lam) in [
        ("2,1", "2,1", "3,2,1"),
        ("3,2,1", "3,2,1", "4,3,2,2,1"),
        ("4,3,2", "3,2,1", "6,4,3,2"),
    ] {
        let (a, b, l) = (p(mu), p(nu), p(lam));
        g.bench_with_input(BenchmarkId::from_parameter(lam), &(a, b, l), |bench, (a, b, l)| {
            bench.iter(|| lr_coefficient_uncached(black_box(a), black_box(b), black_box(l)))
        });
    }
    g.finish();
}

// The LR table is memoized, so these measure the triple sum with a warm cache.
fn nl(c: &mut Criterion) {
    let mut g = c.benchmark_group("nl_number");
    for (mu, nu, lam) in [
        ("2,2", "2,2", "2,2"),
        ("4,2,2", "3,3,2", "4,3,1"),
        ("6,4,2", "5,3,2,1", "4,4,3"),
    ] {
        let (a, b, l) = (p(mu), p(nu), p(lam));
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{a}{b}{l}")),
            &(a, b, l),
            |bench, (a, b, l)| bench.iter(|| nl_number(black_box(a), black_box(b), black_box(l))),
        );
    }
    g.finish();
}

fn product(c: &mut Criterion) {
    let mut g = c.benchmark_group("nl_product");
    for (mu, nu) in [("2,2", "2,2"), ("3,2,1", "2,2,1"), ("4,2,1", "3,2,1")] {
        let (a, b) = (p(mu), p(nu));
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{a}{b}")),
            &(a, b),
            |bench, (a, b)| bench.iter(|| nl_product(black_box(a), black_box(b))),
        );
    }
    g.finish();
}

fn polytope(c: &mut Criterion) {
    let mut g = c.benchmark_group("polytope_count");
    g.sample_size(20);
    for (mu, nu, lam) in [
        ("2,2", "2,2", "2,2"),
        ("3,2,1", "3,2,1", "2,2"),
        ("4,2,2", "3,3,2", "4,3,1"),
    ] {
        let poly = NlPolytope::build_default(&p(mu), &p(nu), &p(lam));
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{mu};{nu};{lam}")),
            &poly,
            |bench, poly| bench.iter(|| black_box(poly).count_lattice_points()),
        );
    }
    g.finish();
}

fn kt_expand(c: &mut Criterion) {
    let mut g = c.benchmark_group("kt_to_schur");
    for lam in ["2,2", "3,2,1", "4,3,2,1"] {
        let l = p(lam);
        g.bench_with_input(BenchmarkId::from_parameter(lam), &l, |bench, l| {
            bench.iter(|| kt_to_schur_with_rows(black_box(l), l.len()))
        });
    }
    g.finish();
}

fn inequalities(c: &mut Criterion) {
    let owned = partitions_up_to(4);
    let parts = &owned;
    let triples: Vec<_> = parts
        .iter()
        .flat_map(|a| parts.iter().flat_map(move |b| parts.iter().map(move |l| (a, b, l))))
        .collect();
    c.bench_function("horn_holds/all_up_to_4", |bench| {
        bench.iter(|| triples.iter().filter(|(a, b, l)| horn_holds(a, b, l, 3)).count())
    });
    c.bench_function("extended_weyl_holds/all_up_to_4", |bench| {
        bench.iter(|| {
            triples
                .iter()
                .filter(|(a, b, l)| extended_weyl_holds(a, b, l, 3))
                .count()
        })
    });
}

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    g.bench_function("saturation_4_2", |bench| {
        bench.iter(|| analysis::check_saturation(4, 2))
    });
    g.bench_function("unimodality_5", |bench| bench.iter(|| analysis::check_unimodality(5)));
    g.finish();
}

criterion_group!(benches, lr, nl, product, polytope, kt_expand, inequalities, scans);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use skewalg_bench::{example, gwa_pair, ideal_pair, ore_pair, quantum_denominator};
use skewalg_core::spectra::{build_jm, goldie_decomposition};
use skewalg_core::{exceptional_lambdas, find_pm, spectrum_report, ExampleFamily, Scalar};

fn scalars(c: &mut Criterion) {
    let a = quantum_denominator();
    let b = &Scalar::s_pow(3) + &Scalar::ratio(1, 3);
    c.bench_function("scalar/add_rational_functions", |bench| bench.iter(|| black_box(&a) + black_box(&b)));
    c.bench_function("scalar/mul_rational_functions", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("product");
    for fam in [ExampleFamily::Usl2, ExampleFamily::Uqsl2, ExampleFamily::Qtorus { p: 3 }] {
        let ex = example(&fam);
        let (a, b) = ore_pair(&ex, 7);
        g.bench_with_input(BenchmarkId::new("ore", &fam), &(a, b), |bench, (a, b)| bench.iter(|| a * b));
        let w = ex.gwa(&Scalar::one()).unwrap();
        let (x, y) = gwa_pair(&w, 7);
        g.bench_with_input(BenchmarkId::new("gwa", &fam), &(x, y), |bench, (x, y)| bench.iter(|| x * y));
    }
    g.finish();
}

fn ideals(c: &mut Criterion) {
    let (a, b) = ideal_pair(true, 3);
    c.bench_function("ideal/intersect", |bench| bench.iter(|| a.intersect(&b).unwrap()));
    c.bench_function("ideal/sum", |bench| bench.iter(|| a.sum(&b).unwrap()));
}

fn spectra(c: &mut Criterion) {
    let qt = example(&ExampleFamily::Qtorus { p: 3 });
    c.bench_function("spectra/find_pm_qtorus3_m4", |bench| bench.iter(|| find_pm(&qt, 4).unwrap()));

    let mut g = c.benchmark_group("goldie");
    for m in 1..=4 {
        let lam = exceptional_lambdas(&qt.family, m).unwrap().remove(0).value;
        let t = build_jm(&qt, &lam, m).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(m), &t, |bench, t| bench.iter(|| goldie_decomposition(t)));
    }
    g.finish();

    let mut g = c.benchmark_group("report");
    g.sample_size(10);
    g.bench_function("uqsl2_m3", |bench| bench.iter(|| spectrum_report(&ExampleFamily::Uqsl2, 3).unwrap()));
    g.finish();
}

criterion_group!(benches, scalars, products, ideals, spectra);
criterion_main!(benches);

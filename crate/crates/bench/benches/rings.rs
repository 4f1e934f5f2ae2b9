use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qcoh::rings::{coadjoint_ring, grassmannian2, RingTable};
use qcoh::verify::{run_suite, Suite, Tables};

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    g.sample_size(10);
    for t in ["C4", "F4"] {
        let ty = t.parse().unwrap();
        g.bench_function(format!("coadjoint {t}"), |b| {
            b.iter(|| coadjoint_ring(black_box(ty)).unwrap())
        });
    }
    g.bench_function("gr2:10 validate", |b| {
        b.iter(|| grassmannian2(black_box(10)).unwrap().validate().unwrap())
    });
    g.finish();
}

fn analysis(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze");
    g.sample_size(10);
    for name in ["ig26", "ig28", "f4p4"] {
        let a = RingTable::bundled(name)
            .unwrap()
            .unwrap()
            .ring
            .specialize()
            .unwrap();
        g.bench_function(format!("radical {name}"), |b| {
            b.iter(|| a.radical().unwrap())
        });
        g.bench_function(format!("report {name}"), |b| {
            b.iter(|| a.theorem1_report().unwrap())
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let tables = Tables::bundled().unwrap();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("paper suite", |b| {
        b.iter(|| run_suite(Suite::Paper, &tables))
    });
    g.finish();
}

criterion_group!(benches, construction, analysis, suite);
criterion_main!(benches);

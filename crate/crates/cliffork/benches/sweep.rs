use criterion::{criterion_group, criterion_main, Criterion};

use cliffork::ext::enumerate_signatures_with;
use cliffork::par::Mode;

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("signature_census_n6");
    g.sample_size(10);
    for (name, mode) in [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)] {
        g.bench_function(name, |b| b.iter(|| enumerate_signatures_with(mode, 6).expect("census")));
    }
    g.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);

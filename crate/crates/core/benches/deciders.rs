use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use z3flow::catalog;
use z3flow::gen::{instance_rng, random_simple_graph};
use z3flow::orientation::{has_mod3_orientation, is_z3_connected};
use z3flow::par;
use z3flow::reduction::z3_reduce_full;
use z3flow::verify::{lemma_sweep, r_value};

/// Each workload runs once on the default pool and once pinned to a single
/// worker; without the `parallel` feature both rows are sequential.
fn compare(c: &mut Criterion, name: &str, work: impl Fn() + Sync) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    let backend = if par::is_parallel() { "rayon" } else { "sequential-build" };
    group.bench_function(BenchmarkId::new(backend, "default"), |b| b.iter(&work));
    group.bench_function(BenchmarkId::new(backend, "one-thread"), |b| b.iter(|| par::with_threads(1, &work)));
    group.finish();
}

fn deciders(c: &mut Criterion) {
    let w8 = catalog::wheel(8);
    compare(c, "z3-connectivity/W8", || assert!(is_z3_connected(&w8).unwrap()));

    let g18 = catalog::g18();
    compare(c, "mod3/G18", || assert!(!has_mod3_orientation(&g18)));

    let dense = random_simple_graph(&mut instance_rng(11, 0), 12, 0.45);
    compare(c, "reduce-full/n12", || {
        z3_reduce_full(&dense).unwrap();
    });

    compare(c, "r-table/n5", || assert_eq!(r_value(5, false).unwrap().r, 8));

    compare(c, "sweep/order13x20", || assert!(lemma_sweep("order13", 20, 3).unwrap().pass()));
}

criterion_group!(benches, deciders);
criterion_main!(benches);

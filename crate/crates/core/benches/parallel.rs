//! Sequential vs parallel execution of the batch entry points.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use rock_core::abacus::block_enum_with;
use rock_core::rock_verify::run_suite;
use rock_core::rouquier::generate;
use rock_core::stembridge::induce_with;
use rock_core::{Exec, Partition};

const MODES: [(&str, Exec); 2] = [("seq", Exec::Seq), ("par", Exec::Par)];

fn bench_block_enum(c: &mut Criterion) {
    let mut g = c.benchmark_group("block_enum");
    let rho = generate(7, 3, false, 1).unwrap().remove(0);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "p7_d3"), &exec, |b, &exec| {
            b.iter(|| block_enum_with(black_box(&rho), 7, 3, None, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_induce(c: &mut Criterion) {
    let mut g = c.benchmark_group("induce");
    let mu = Partition::strict(vec![9, 6, 4, 3, 1]).unwrap();
    let nu = Partition::strict(vec![4, 3]).unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "mu23_nu43"), &exec, |b, &exec| {
            b.iter(|| induce_with(black_box(&mu), black_box(&nu), exec).unwrap())
        });
    }
    g.finish();
}

fn bench_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_suite");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "p5_d2"), &exec, |b, &exec| {
            b.iter(|| run_suite(5, 2, exec).unwrap())
        });
    }
    g.finish();
}

/// Rouquier core generation across p, one task per (p, d, parity).
fn bench_core_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("core_sweep");
    let jobs: Vec<(u32, u32, bool)> =
        [3u32, 5, 7].iter().flat_map(|&p| (1..=3).flat_map(move |d| [(p, d, false), (p, d, true)])).collect();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "p3-7_d1-3"), &exec, |b, &exec| {
            b.iter(|| exec.map(&jobs, |&(p, d, odd)| generate(p, d, odd, 2).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_block_enum, bench_induce, bench_suite, bench_core_sweep);
criterion_main!(benches);

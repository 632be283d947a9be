use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use multibrot_core::algebraic::arc_unit_images;
use multibrot_core::capacity::fekete::fekete_oracle_with;
use multibrot_core::exact::IntPoly;
use multibrot_core::par::Exec;
use multibrot_core::parabolic::cycle_resultant;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn elimination(c: &mut Criterion) {
    let mut g = c.benchmark_group("cycle_resultant_d3_n3");
    g.sample_size(10);
    let h = IntPoly::from_i64(&[-1, 0, 0, 1]);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| cycle_resultant(black_box(3), 3, &h, exec))
        });
    }
    g.finish();
}

fn arcs(c: &mut Criterion) {
    let mut g = c.benchmark_group("arc_unit_images_120");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| arc_unit_images(black_box(120), exec))
        });
    }
    g.finish();
}

fn fekete(c: &mut Criterion) {
    let mut g = c.benchmark_group("fekete_n12_restarts16");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| fekete_oracle_with(-1.0, 1.0, black_box(12), 16, 7, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, elimination, arcs, fekete);
criterion_main!(benches);

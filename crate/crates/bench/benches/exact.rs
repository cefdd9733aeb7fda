use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cy2::rep::{end_dim, is_simple, tangent_dim};
use cy2::{admits_simples, find_singular_witness, hilb_smooth_preprojective};
use cy2_bench::{loops_semisimple, loops_simple, moduli_cases, random_matrix, surface_simple};

fn linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for n in [8, 16, 32] {
        let m = random_matrix(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| m.rank()));
    }
    group.finish();
}

fn representations(c: &mut Criterion) {
    let cases = [
        ("loops2 simple 3", loops_simple(3)),
        ("loops2 semisimple", loops_semisimple()),
        ("surface g=2 n=3", surface_simple(2, 3)),
    ];
    for (name, rep) in &cases {
        c.bench_function(&format!("tangent {name}"), |b| b.iter(|| tangent_dim(rep).unwrap()));
        c.bench_function(&format!("end {name}"), |b| b.iter(|| end_dim(rep)));
    }
    let rep = loops_simple(3);
    c.bench_function("simplicity loops2 simple 3", |b| b.iter(|| is_simple(&rep)));
}

fn moduli(c: &mut Criterion) {
    for (name, q, a) in moduli_cases() {
        c.bench_function(&format!("admits_simples {name}"), |b| {
            b.iter(|| admits_simples(&q, &a).unwrap())
        });
        c.bench_function(&format!("smooth {name}"), |b| {
            b.iter(|| hilb_smooth_preprojective(&q, &a).unwrap())
        });
        c.bench_function(&format!("witness {name}"), |b| {
            b.iter(|| find_singular_witness(&q, &a).unwrap())
        });
    }
}

criterion_group!(benches, linear_algebra, representations, moduli);
criterion_main!(benches);

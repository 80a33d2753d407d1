use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use finsemi::corpus::{enumerate_semirings, m4_spec, Named};
use finsemi::semiring::direct_product;
use finsemi::{
    build_rees, check_equivalence, classify, find_isomorphism, starred_greens, TheoremId,
};

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("order3_labelled", |b| {
        b.iter(|| enumerate_semirings(black_box(3), false))
    });
    g.bench_function("order3_up_to_iso", |b| {
        b.iter(|| enumerate_semirings(black_box(3), true))
    });
    g.finish();
}

fn analysis(c: &mut Criterion) {
    let big = direct_product(&Named::RB4.build(), &Named::TR3.build()).unwrap();
    c.bench_function("starred_greens/rb4_x_tr3", |b| {
        b.iter(|| starred_greens(black_box(&big)))
    });
    c.bench_function("classify/rb4_x_tr3", |b| {
        b.iter(|| classify(black_box(&big)))
    });
    c.bench_function("check_equivalence/all/rb4_x_tr3", |b| {
        b.iter(|| {
            for t in TheoremId::ALL {
                black_box(check_equivalence(&big, t));
            }
        })
    });
}

fn isomorphism(c: &mut Criterion) {
    let (lz2, z2) = (Named::LZ2.build(), Named::Z2.build());
    let s = direct_product(&direct_product(&lz2, &z2).unwrap(), &Named::TR3.build()).unwrap();
    let perm: Vec<usize> = (0..s.order()).rev().collect();
    let t = s.relabel(&perm);
    c.bench_function("find_isomorphism/order12", |b| {
        b.iter(|| find_isomorphism(black_box(&s), black_box(&t)))
    });
}

fn rees(c: &mut Criterion) {
    let spec = m4_spec();
    c.bench_function("build_rees/m4", |b| b.iter(|| build_rees(black_box(&spec))));
}

criterion_group!(benches, census, analysis, isomorphism, rees);
criterion_main!(benches);

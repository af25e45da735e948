use criterion::{criterion_group, criterion_main, Criterion};
use schubert::chow_witt::schubert_problem;
use schubert::witt::WClass;
use schubert::{Ch2Class, ChowClass, CwClass, Frame, Partition, Twist};
use std::hint::black_box;

fn frame(k: u32, w: u32) -> Frame {
    Frame::new(k, w).unwrap()
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn bench_chow(c: &mut Criterion) {
    let mut g = c.benchmark_group("chow");

    let f = frame(4, 4);
    let s22 = ChowClass::basis(f, &part(&[2, 2])).unwrap();
    g.bench_function("sigma22_squared_gr48", |b| {
        b.iter(|| black_box(&s22).mul(black_box(&s22)).unwrap())
    });

    let f = frame(8, 8);
    let rect = ChowClass::basis(f, &part(&[4, 4, 4, 4])).unwrap();
    g.bench_function("rect_fourth_power_gr816", |b| {
        b.iter(|| {
            let mut acc = ChowClass::unit(f);
            for _ in 0..4 {
                acc = acc.mul(black_box(&rect)).unwrap();
            }
            acc.degree().unwrap()
        })
    });

    let f = frame(2, 8);
    g.bench_function("catalan_degree_n8", |b| {
        b.iter(|| {
            let mut acc = ChowClass::unit(f);
            for _ in 0..16 {
                acc = acc.pieri_row(1);
            }
            acc.degree().unwrap()
        })
    });

    g.finish();
}

fn bench_steenrod(c: &mut Criterion) {
    let mut g = c.benchmark_group("steenrod");

    let f = frame(4, 4);
    let diagrams = f.partitions();
    g.bench_function("sq2_sweep_4x4", |b| {
        b.iter(|| {
            for p in &diagrams {
                let class = Ch2Class::basis(f, p).unwrap();
                black_box(class.sq2(Twist::O));
                black_box(class.sq2(Twist::Det));
            }
        })
    });

    let target = Ch2Class::basis(f, &part(&[4, 3, 1]))
        .unwrap()
        .add(&Ch2Class::basis(f, &part(&[4, 2, 2])).unwrap())
        .unwrap()
        .add(&Ch2Class::basis(f, &part(&[3, 3, 1, 1])).unwrap())
        .unwrap()
        .add(&Ch2Class::basis(f, &part(&[3, 2, 2, 1])).unwrap())
        .unwrap();
    g.bench_function("sq2_preimage_gr48", |b| {
        b.iter(|| black_box(&target).sq2_preimage(Twist::O).unwrap())
    });

    g.finish();
}

fn bench_witt(c: &mut Criterion) {
    let mut g = c.benchmark_group("witt");

    let f = frame(6, 8);
    let x = WClass::even_basis(&part(&[8, 2, 2]), f).unwrap();
    g.bench_function("euler_power_gr614", |b| {
        b.iter(|| {
            let mut acc = WClass::unit(f);
            for _ in 0..4 {
                acc = acc.mul(black_box(&x)).unwrap();
            }
            acc.degree().unwrap()
        })
    });

    g.finish();
}

fn bench_chow_witt(c: &mut Criterion) {
    let mut g = c.benchmark_group("chow_witt");

    g.bench_function("lift_sigma22_gr48", |b| {
        b.iter(|| CwClass::lift(&part(&[2, 2]), frame(4, 4), Twist::O).unwrap())
    });

    g.bench_function("balanced_1_2", |b| {
        b.iter(|| {
            let factors = vec![(part(&[2, 2]), Twist::O); 4];
            schubert_problem(&factors, frame(4, 4)).unwrap()
        })
    });

    g.bench_function("p1_power_4", |b| {
        b.iter(|| schubert::problems::p1_power(4).unwrap())
    });

    g.finish();
}

criterion_group!(
    benches,
    bench_chow,
    bench_steenrod,
    bench_witt,
    bench_chow_witt
);
criterion_main!(benches);

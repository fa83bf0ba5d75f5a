//! Parallel-versus-sequential timings of the heavy sweeps.
//!
//! Every benched entry point takes an [`ExecMode`], so one compiled binary
//! compares the rayon data-parallel path against the sequential fallback on
//! identical work. Rings are built and their subset caches warmed before the
//! timed region, leaving the tuple sweeps themselves as the measured work.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pns_lab::{
    path_agreement, verify_theorem, ExecMode, FiniteRing, RingDescriptor, SubsetKind,
    SweepOptions, TheoremId,
};

fn warmed(descriptor: RingDescriptor) -> FiniteRing {
    let ring = FiniteRing::build(descriptor).expect("bench ring builds");
    for kind in SubsetKind::ALL {
        ring.subset(kind);
    }
    for a in ring.elements() {
        ring.double_commutant(a);
    }
    ring
}

fn options(mode: ExecMode) -> SweepOptions {
    SweepOptions {
        mode,
        ..SweepOptions::default()
    }
}

fn bench_modes(
    c: &mut Criterion,
    group: &str,
    ring: &FiniteRing,
    mut run: impl FnMut(&FiniteRing, ExecMode),
) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| run(black_box(ring), ExecMode::Parallel))
    });
    g.bench_function("sequential", |b| {
        b.iter(|| run(black_box(ring), ExecMode::Sequential))
    });
    g.finish();
}

fn spectral_pairs(c: &mut Criterion) {
    let ring = warmed(RingDescriptor::matrix(2, RingDescriptor::zn(3)));
    bench_modes(c, "spectral_pairs_m2z3", &ring, |ring, mode| {
        let opts = options(mode).with_n_range(1, 2);
        black_box(verify_theorem(ring, TheoremId::Thm1234, &opts).unwrap());
    });
}

fn cline_triples(c: &mut Criterion) {
    let ring = warmed(RingDescriptor::matrix(2, RingDescriptor::zn(2)));
    bench_modes(c, "cline_triples_m2z2", &ring, |ring, mode| {
        let opts = options(mode).with_n_range(1, 2);
        black_box(verify_theorem(ring, TheoremId::Lem31, &opts).unwrap());
    });
}

fn oracle_formula_grid(c: &mut Criterion) {
    let ring = warmed(RingDescriptor::matrix(2, RingDescriptor::zn(3)));
    bench_modes(c, "path_agreement_m2z3", &ring, |ring, mode| {
        let opts = options(mode);
        black_box(path_agreement(ring, &opts));
    });
}

fn ring_validation(c: &mut Criterion) {
    use pns_lab::{BuildOptions, ValidationMode};
    let mut g = c.benchmark_group("validate_t2z4");
    g.sample_size(10);
    for (label, mode) in [
        ("parallel", ExecMode::Parallel),
        ("sequential", ExecMode::Sequential),
    ] {
        g.bench_function(label, |b| {
            b.iter(|| {
                let opts = BuildOptions {
                    validation: ValidationMode::Force,
                    mode,
                    ..BuildOptions::default()
                };
                black_box(
                    FiniteRing::build_with(
                        RingDescriptor::upper_triangular(2, RingDescriptor::zn(4)),
                        &opts,
                    )
                    .unwrap(),
                )
            })
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    spectral_pairs,
    cline_triples,
    oracle_formula_grid,
    ring_validation
);
criterion_main!(benches);

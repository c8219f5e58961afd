use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use doublespend::{
    attack_success, catch_up_limited, min_confirmations, AttackQuery, MiningPowerSplit,
    Probability, Variant,
};
use std::hint::black_box;

fn attack(c: &mut Criterion) {
    let mut group = c.benchmark_group("attack_success");
    let power = MiningPowerSplit::new(0.3).unwrap();
    for z in [6u64, 60, 600] {
        for variant in Variant::ALL {
            let query = AttackQuery::new(power, z, variant, 35).unwrap();
            group.bench_with_input(BenchmarkId::new(variant.name(), z), &query, |b, q| {
                b.iter(|| attack_success(black_box(q)))
            });
        }
    }
    group.finish();
}

fn ruin(c: &mut Criterion) {
    let power = MiningPowerSplit::new(0.45).unwrap();
    c.bench_function("catch_up_limited/z=24,y=59", |b| {
        b.iter(|| catch_up_limited(black_box(24), black_box(59), power))
    });
}

fn min_z(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_confirmations");
    let target = Probability::new(0.001).unwrap();
    for q in [0.1, 0.3, 0.45] {
        let power = MiningPowerSplit::new(q).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(q), &power, |b, &p| {
            b.iter(|| min_confirmations(p, target, Variant::Corrected, 35))
        });
    }
    group.finish();
}

criterion_group!(benches, attack, ruin, min_z);
criterion_main!(benches);
